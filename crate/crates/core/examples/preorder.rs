//! Transitivity and reflexivity criteria on sampled finite sets.

use std::sync::Arc;

use fembed::carrier::{Element, Window};
use fembed::embed::{check_reflexive_criterion, check_transitive_criterion};
use fembed::families::FamilySpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = Arc::new(Window::additive(120)?);
    let samples: Vec<Vec<Element>> = [vec![0, 3], vec![1, 2, 5], vec![4]]
        .into_iter()
        .map(|s| s.into_iter().map(Element).collect())
        .collect();
    for fam in [FamilySpec::right_translations(w.clone()), FamilySpec::affine(w.clone())?] {
        let r = check_transitive_criterion(&fam, &samples, 4)?;
        println!(
            "{:<18} transitive on samples: {} ({} satisfied, {} skipped)",
            fam.name(),
            r.all_satisfied(),
            r.satisfied,
            r.skipped
        );
        let r = check_reflexive_criterion(&fam, &samples)?;
        println!("{:<18} reflexive on samples:  {}", fam.name(), r.all_satisfied());
    }

    // slopes of at least 2 exclude the identity
    let steep = FamilySpec::affine_with_min_slope(w.clone(), 2)?;
    println!("slope >= 2 reflexive: {}", check_reflexive_criterion(&steep, &samples)?.all_satisfied());
    Ok(())
}
