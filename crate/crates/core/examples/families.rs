//! The family catalog: builtins, a custom term family and word suffixes.

use std::sync::Arc;

use fembed::carrier::{Element, GroundSet, Predicate, Window};
use fembed::embed::fe_decide;
use fembed::families::{FamilySpec, ParamEnumeration, Region};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = Arc::new(Window::additive(200)?);

    // (x, y) -> r^x (a + y b)
    let geo = FamilySpec::geoarithmetic(w.clone())?;
    let out = geo.apply(&[2, 1, 1], &[Element(2), Element(3)])?;
    println!("geoarithmetic at r=2, a=1, b=1 on (2, 3): {out:?}");

    // x -> 1 + 2x + 3x^2 for coefficients drawn from {1, 2, 3}
    let coeffs = GroundSet::from_values(Arc::new(Window::additive(10)?), [1, 2, 3])?;
    let poly = FamilySpec::polynomial(w.clone(), coeffs, &[0, 1, 2], 2)?;
    let squares_plus = GroundSet::from_values(w.clone(), (0..8).map(|x| 1 + 2 * x + 3 * x * x))?;
    let a = GroundSet::from_values(w.clone(), [0, 1, 2, 3])?;
    println!("polynomial family: {}", fe_decide(&a, &squares_plus, &poly)?.to_json(&poly));

    // a family built from a term, with primes as the parameter region
    let prime_shift = FamilySpec::from_pair(
        w.clone(),
        1,
        1,
        "slot0 + param0",
        Region(vec![Predicate::Primes]),
        ParamEnumeration { bound: Some(50), ..ParamEnumeration::default() },
    )?;
    let b = GroundSet::from_values(w.clone(), [13, 15, 17])?;
    let a = GroundSet::from_values(w.clone(), [0, 2, 4])?;
    println!("shift by a prime: {}", fe_decide(&a, &b, &prime_shift)?.to_json(&prime_shift));

    let words = Arc::new(Window::words(&['a', 'b'], 5)?);
    let suffix = FamilySpec::word_suffix(words.clone(), 'a')?;
    let target = GroundSet::from_displays(words.clone(), ["baa", "abaa", "bbaa"])?;
    let source = GroundSet::from_displays(words.clone(), ["b", "ab", "bb"])?;
    let v = fe_decide(&source, &target, &suffix)?;
    println!("w -> w a^n on words: {}", v.to_json(&suffix));
    Ok(())
}
