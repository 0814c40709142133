//! Finite embeddability between subsets of (N, +) under a few families.
//!
//! Run with `cargo run --example embed`.

use std::sync::Arc;

use fembed::carrier::{GroundSet, Predicate, Window};
use fembed::embed::{check_union_split, fe_decide, fe_probe, ProbeOptions};
use fembed::families::FamilySpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = Arc::new(Window::additive(100)?);
    let a = GroundSet::from_values(w.clone(), [1, 4, 7, 10])?;
    let b = GroundSet::from_values(w.clone(), [3, 6, 9, 12, 15, 40])?;

    let tr = FamilySpec::right_translations(w.clone());
    let v = fe_decide(&a, &b, &tr)?;
    println!("translations: {} {}", v.label(), v.to_json(&tr));

    let doubled = GroundSet::from_values(w.clone(), [2, 8, 14, 20])?;
    let v = fe_decide(&doubled, &b, &tr)?;
    println!("{{2,8,14,20}} into B by translation: {} after {} candidates", v.label(), v.examined);

    let aff = FamilySpec::affine(w.clone())?;
    let v = fe_decide(&doubled, &b, &aff)?;
    println!("same under affine maps: {}", v.to_json(&aff));

    // x -> 2 + 2x reaches this one, no shift does
    let stretched = GroundSet::from_values(w.clone(), [4, 10, 16, 22])?;
    let split = check_union_split(&a, &stretched, &[tr.clone(), aff.clone()])?;
    println!("A into {{4,10,16,22}} under translations or affine: family #{} suffices", split.index);

    // predicate sets can only be probed through finite prefixes
    let evens = GroundSet::predicate(w.clone(), Predicate::Evens)?;
    let odds = GroundSet::predicate(w.clone(), Predicate::Odds)?;
    for p in fe_probe(&evens, &odds, &tr, &[2, 5, 20], &ProbeOptions::default())? {
        println!("evens into odds, prefix {:>2}: {}", p.size, p.verdict.label());
    }
    Ok(())
}
