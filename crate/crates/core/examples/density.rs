//! Upper density along the interval net and monotonicity under translation.

use std::sync::Arc;

use fembed::carrier::{GroundSet, Predicate, Window};
use fembed::density::{check_density_monotonicity, ratio_string, upper_density, weak_cancellativity_bound, Net};
use fembed::families::FamilySpec;
use num_rational::Ratio;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = Arc::new(Window::additive(4000)?);
    let net = Net::interval(w.clone(), 1000)?;
    for (name, p) in [("evens", Predicate::Evens), ("squares", Predicate::Squares), ("primes", Predicate::Primes)] {
        let set = GroundSet::predicate(w.clone(), p)?;
        let r = upper_density(&set, &net, None)?;
        let best = r.witnesses.last().expect("one witness per report");
        println!("{name:>8}: {} (level {}, shift {:?})", ratio_string(&r.value), best.n, best.shift);
    }

    // tail start matters for sparse sets
    let squares = GroundSet::predicate(w.clone(), Predicate::Squares)?;
    for tail in [1, 10, 100, 1000] {
        let r = upper_density(&squares, &net, Some(tail))?;
        println!("squares from level {tail:>4}: {}", ratio_string(&r.value));
    }

    let small = Arc::new(Window::additive(400)?);
    println!("cancellativity bound on (N,+): {}", weak_cancellativity_bound(&small).b);
    let a = GroundSet::from_values(small.clone(), (0..100).filter(|v| v % 3 == 0))?;
    let b = GroundSet::from_values(small.clone(), (0..400).filter(|v| v % 3 == 1))?;
    let report = check_density_monotonicity(
        &[(a, b)],
        &FamilySpec::right_translations(small.clone()),
        &Net::interval(small.clone(), 40)?,
        &[4, 16],
        Ratio::new(1, 50),
    )?;
    let e = &report.entries[0];
    println!("d*(A) = {}, d*(B) = {}, holds: {}", ratio_string(&e.d_a), ratio_string(&e.d_b), e.holds());
    Ok(())
}
