//! Schur triples, homogeneous equations and the Pythagorean coloring.

use std::sync::Arc;

use fembed::carrier::{GroundSet, Window};
use fembed::prsearch::{homogeneous_pr_check, ps_solutions_experiment, ramsey_threshold, Pattern, Polynomial};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = ramsey_threshold(&Pattern::Schur, 2, 30)?;
    let below = t.below.unwrap();
    println!("Schur: threshold {:?}, N = 4 coloring {:?}", t.threshold, below.coloring().unwrap());

    for s in ["x+y-z", "x^2+y^2-z^2", "x+y-z-1", "2x + 3y - 5z"] {
        let p: Polynomial = s.parse()?;
        let h = p.homogeneity();
        println!("{p:<14} homogeneous: {:<5} degrees {:?}", h.homogeneous, h.degrees);
    }

    let pyth: Polynomial = "x^2+y^2-z^2".parse()?;
    let (cert, _) = homogeneous_pr_check(&pyth, 2, 60, false, true)?;
    println!("Pythagorean triples in [1..60] avoided: {}", cert.verify());

    let w = Arc::new(Window::additive(50)?);
    let odds = GroundSet::from_values(w, (1..=50).filter(|v| v % 2 == 1))?;
    let sols = ps_solutions_experiment(&"x+y-z".parse()?, &odds, 50)?;
    println!("x + y = z inside the odd numbers: {} solutions", sols.len());
    Ok(())
}
