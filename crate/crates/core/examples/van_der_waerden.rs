//! Two-coloring [1..N] without a monochromatic 3-term AP, and where that stops.

use std::sync::Arc;

use fembed::carrier::{GroundSet, Window};
use fembed::prsearch::{find_avoiding_coloring, ramsey_threshold, strong_pr_probe, Pattern, ProbeMode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ap3 = Pattern::Ap(3);
    let cert = find_avoiding_coloring(8, 2, &ap3)?;
    println!("N = 8: {:?} (verified: {})", cert.coloring().unwrap(), cert.verify());

    let t = ramsey_threshold(&ap3, 2, 20)?;
    println!("every 2-coloring of [1..{}] has a monochromatic 3-AP", t.threshold.unwrap());

    let nine = GroundSet::from_values(Arc::new(Window::additive(9)?), 1..=9)?;
    let strong = strong_pr_probe(&nine, &ap3, 2, ProbeMode::Exhaustive)?;
    println!("all partitions of [1..9] checked one by one: {:?}", strong.outcome);

    // three colors take longer
    let t = ramsey_threshold(&ap3, 3, 30)?;
    println!("three colors: threshold {:?}", t.threshold);
    Ok(())
}
