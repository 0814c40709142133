//! Runs every seeded property suite at the tiny budget and prints the report.

use fembed::verify::{run_suite, Budget, Suite};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    for r in run_suite(Suite::All, seed, Budget::TINY) {
        for c in &r.checks {
            println!("{:<14} {:<34} {:>5} cases  {}", r.suite, c.name, c.cases, if c.passed { "ok" } else { "FAILED" });
            if let Some(rep) = &c.reproducer {
                println!("  reproducer: {rep}");
            }
        }
    }
}
