//! Progression detectors, thickness, piecewise syndeticity and maximality.

use std::sync::Arc;

use fembed::carrier::{GroundSet, Predicate, Window};
use fembed::families::FamilySpec;
use fembed::rich::{
    is_piecewise_syndetic_window, is_thick_window, longest_ap, longest_gap_grid, longest_poly_progression,
    maximality_probe,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = Arc::new(Window::additive(300)?);
    let primes = GroundSet::predicate(w.clone(), Predicate::Primes)?;
    let ap = longest_ap(&primes)?;
    println!("longest AP of primes up to 300: {:?}", ap.realized);

    let grid = GroundSet::from_values(w.clone(), [6, 9, 12, 18, 24, 36, 50])?;
    println!("GAP grid (1-based): {}", serde_json::to_string(&longest_gap_grid(&grid, false)?)?);
    println!("GAP grid (0-based): {}", serde_json::to_string(&longest_gap_grid(&grid, true)?)?);

    let squares = GroundSet::predicate(w.clone(), Predicate::Squares)?;
    let poly = longest_poly_progression(&squares, 2, &GroundSet::full(w.clone()), &[2])?;
    println!("x -> a x^2 inside the squares: a = {}, length {}", poly.params[0], poly.length);

    // long intervals separated by gaps: thick, hence maximal for translations
    let blocks: Vec<u64> = (0..300).filter(|v| v % 50 < 30).collect();
    let thick = GroundSet::from_values(w.clone(), blocks)?;
    let report = is_thick_window(&thick, &[5, 10, 20])?;
    println!("thick at lengths 5, 10, 20: {}", report.thick);
    let tr = FamilySpec::right_translations(w.clone());
    for p in maximality_probe(&thick, &tr, &[5, 10, 20])? {
        println!("  [0..{}] embeds: {}", p.size - 1, p.verdict.label());
    }

    let evens = GroundSet::predicate(w.clone(), Predicate::Evens)?;
    let ps = is_piecewise_syndetic_window(&evens, 2, &[10, 40])?;
    println!("evens piecewise syndetic with gap 2: {}", ps.piecewise_syndetic);
    Ok(())
}
