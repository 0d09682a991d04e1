//! Complete colorings of complete geometric graphs.
//!
//! A drawing of K_n places the vertices at integer points in general
//! position and draws every edge as a straight segment. Two edges
//! *intersect* when they share an endpoint or cross; a coloring is
//! *complete* when every pair of colors meets on some intersecting edge
//! pair, and *proper* when same-colored edges never intersect. This crate
//! constructs and certifies such colorings with as many colors as the
//! drawing permits:
//!
//! - [`geom`]: exact integer predicates — orientation, segment
//!   intersection, convex position. No floating point, no tie-breaking.
//! - [`graph`]: edge enumeration, intersection relations, coloring
//!   containers, and the verifier the rest of the crate answers to.
//! - [`convex`]: for points in convex position, a proper complete coloring
//!   with exactly ⌊(n²+n)/4⌋ colors (n ≠ 4) — the maximum possible — built
//!   from halving-edge pairs in four arithmetic cases.
//! - [`general`]: for any drawing on n ≥ 19 points, 12·⌊(n−6)/13⌋² pairwise
//!   intersecting, edge-disjoint classes around a six-sector apex.
//! - [`bounds`]: crossing-number and incidence counts turned into upper
//!   bounds, plus the published asymptotic constants.
//! - [`oracle`]: exhaustive branch-and-bound maxima for small drawings,
//!   used to anchor the constructions' tightness claims.
//! - [`sample`]: seeded random point sets in general position.
//! - [`codec`]: the JSON documents the command-line tools exchange.

/// Library version, recorded in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub mod bounds;
pub mod codec;
pub mod convex;
pub mod error;
pub mod general;
pub mod geom;
pub mod graph;
pub mod oracle;
pub mod sample;

pub use error::{Error, Result};
pub use geom::{Point, PointSet};
pub use graph::{Coloring, EdgeId, GeometricGraph, PartialColoring, VerificationReport};
