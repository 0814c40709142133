//! Finite windows of concrete semigroups and their subsets.

mod json;
mod predicate;
mod set;
mod window;

pub use json::{element_json, parse_element, SetBody, SetSpec, WindowSpec};
pub use predicate::Predicate;
pub use set::{GroundSet, Membership};
pub use window::{Element, Window, WindowKind, MAX_TABLE_SIZE, MAX_WINDOW_ELEMENTS};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CarrierError {
    #[error("invalid window kind: {0}")]
    InvalidKind(String),
    #[error("free-word windows need a non-empty alphabet")]
    EmptyAlphabet,
    #[error("an alphabet is only meaningful for free-words, not {0}")]
    UnexpectedAlphabet(WindowKind),
    #[error("letter {0:?} appears twice in the alphabet")]
    DuplicateLetter(char),
    #[error("bound {bound} is too small for a {kind} window (must be >= 1)")]
    BoundTooSmall { kind: WindowKind, bound: u64 },
    #[error("bound {bound} is too large (element encoding overflow)")]
    BoundTooLarge { bound: u64 },
    #[error("missing field `bound`")]
    MissingBound,
    #[error("malformed operation table: {0}")]
    MalformedTable(String),
    #[error("operation table is not associative at ({x}, {y}, {z})")]
    NotAssociative { x: usize, y: usize, z: usize },
    #[error("element out of window: {0}")]
    ElementOutOfWindow(String),
    #[error("cannot parse element: {0}")]
    Parse(String),
    #[error("unknown predicate: {0}")]
    UnknownPredicate(String),
    #[error("predicate {predicate} is not defined on a {kind} window")]
    PredicateNotSupported { predicate: String, kind: WindowKind },
    #[error("sets live in different windows")]
    WindowMismatch,
}
