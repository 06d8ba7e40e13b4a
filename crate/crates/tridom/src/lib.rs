//! Perfect and quasiperfect dominating sets on toroidal quotients of the
//! triangular lattice.
//!
//! A set S of vertices is a perfect dominating set when every vertex outside
//! S has exactly one neighbor in S, a semiperfect one when every outside
//! vertex has exactly two, and a quasiperfect one when every outside vertex
//! has one or two. This crate builds the canonical patterns realizing these
//! conditions on the torus `Δ_{m,n}`, verifies arbitrary sets, enumerates
//! solutions exhaustively, and classifies two-vertex-component patterns into
//! their structural families.
//!
//! Coordinates follow the three-axis convention: a vertex is `(x1, x2)` with
//! the implicit third coordinate `x3 = -x1 - x2`; the torus reduces `x1` mod
//! `m` and `x2` mod `n`.

pub mod analysis;
pub mod constructions;
pub mod domination;
pub mod error;
pub mod lattice;
pub mod search;

pub use analysis::{classify_k2, K2FamilyVerdict};
pub use constructions::{construct, Family, PatternSpec};
pub use domination::{classify, DominationReport, VertexSet};
pub use error::{Error, Result};
pub use lattice::{build_torus, Coord, TorusGraph, TorusSpec, VertexId};
pub use search::{enumerate, exists, existence_table, Predicate, SearchProblem};
