//! Crate-wide error type.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A coordinate exceeds the bound that keeps every 4-point determinant
    /// inside `i128`.
    #[error("coordinate ({x}, {y}) outside the supported range ±{max}")]
    InputOutOfRange { x: i64, y: i64, max: i64 },

    /// Three input points are collinear (or two coincide); the exact
    /// predicates reject such inputs instead of special-casing them.
    #[error("points {a}, {b}, {c} are collinear: input is not in general position")]
    GeneralPositionViolated { a: usize, b: usize, c: usize },

    /// Two point labels coincide.
    #[error("duplicate point: labels {a} and {b} have identical coordinates")]
    DuplicatePoint { a: usize, b: usize },

    /// A segment with equal endpoints.
    #[error("degenerate segment: endpoints coincide")]
    DegenerateSegment,

    /// An edge with a label outside 1..=n or with equal endpoints.
    #[error("invalid edge ({a}, {b}) for a graph on {n} points")]
    InvalidEdge { a: usize, b: usize, n: usize },

    /// The same edge listed twice in one graph.
    #[error("edge ({a}, {b}) appears more than once")]
    DuplicateEdge { a: usize, b: usize },

    /// The order is outside the supported range for the requested operation.
    #[error("order n = {n} is not supported here (need n >= {min})")]
    InvalidOrder { n: usize, min: usize },

    /// A coloring that is not a surjection onto 1..=k, or whose length does
    /// not match the edge list it is checked against.
    #[error("malformed coloring: {reason}")]
    MalformedColoring { reason: String },

    /// An operation that requires a complete coloring received one that is not.
    #[error("coloring is not complete: {missing} color pairs never meet")]
    NotComplete { missing: usize },

    /// An operation defined only for even order.
    #[error("order n = {n} is odd; this quantity is defined for even order only")]
    EvenOrderRequired { n: usize },

    /// A claimed halving-pair structure failed validation.
    #[error("not a halving pair: {reason}")]
    NotHalvingPair { reason: &'static str },

    /// The n = 4 construction is special-cased; use the dedicated variants.
    #[error("n = 4 has no tight proper construction; use the dedicated K4 colorings")]
    UseK4Variant,

    /// Points are not in convex position where the operation requires it.
    #[error("point set is not in convex position")]
    NotConvex,

    /// A bounded search ran out of candidates without finding a witness.
    #[error("search exhausted: {what}")]
    SearchExhausted { what: String },

    /// The claimed apex is not strictly inside a quadrilateral it must pierce;
    /// indicates an invalid configuration.
    #[error("apex is not strictly inside the {family}[{i},{j}] quadrilateral")]
    ApexNotInside { family: char, i: usize, j: usize },

    /// The exact solver only handles small edge sets.
    #[error("graph has {edges} edges; the exact solver handles at most {max}")]
    TooLarge { edges: usize, max: usize },

    /// A JSON document does not match the expected shape.
    #[error("cannot parse document: {reason}")]
    Parse { reason: String },
}
