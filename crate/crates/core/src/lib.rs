//! Finite-scale combinatorics on semigroups.
//!
//! Decide `F`-finite embeddability between subsets of a window under
//! pluggable function families, detect progression-rich structure, compute
//! net-based upper densities, and search for colorings that avoid (or are
//! forced to contain) monochromatic patterns. Every positive answer carries a
//! witness that can be re-checked by direct evaluation.

pub mod carrier;
pub mod cli;
pub mod density;
pub mod embed;
pub mod families;
pub mod prsearch;
pub mod rich;
pub mod verify;
