//! Exact invariants, criticality predicates and extremal constructions for
//! connected domination critical graphs, with exhaustive checks of the
//! inequalities relating independence number, clique number, connectivity
//! and minimum degree.
//!
//! All graphs are dense bitset graphs on at most 64 vertices; every solver
//! is exact and intended for desk-scale orders (roughly `n <= 20`).

pub mod criticality;
pub mod domination;
pub mod enumeration;
pub mod error;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod hamiltonicity;
pub mod invariants;
pub mod isomorphism;
pub mod lemmas;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use graph6::{from_graph6, to_graph6};
