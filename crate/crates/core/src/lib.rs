//! Rainbow triangles in arc-colored digraphs: constructions, classification,
//! and exhaustive desk-scale verification.
//!
//! The crate is organized around a small immutable [`digraph::Digraph`] core
//! with bitset adjacency, total arc-colorings on top of it, and search
//! machinery that enumerates digraphs up to isomorphism and maximizes
//! rainbow-free color counts by branch-and-bound.

pub mod classify;
pub mod coloring;
pub mod constructions;
pub mod digraph;
pub mod enumerate;
pub mod randgen;
pub mod search;
pub mod tournament;
pub mod triangles;

pub use coloring::{ColorId, ColoredDigraph, ColorProfile};
pub use digraph::{CanonicalKey, Digraph, Vertex};
pub use triangles::Triangle;
