//! Exact acyclic colorings of digraphs.
//!
//! The crate computes the dichromatic number `dc`, the diachromatic number
//! `dac` and the dib-chromatic number `dib` (the largest number of colors in
//! an acyclic coloring where every class holds a vertex with an out-neighbor
//! in each other class and a vertex with an in-neighbor in each other class),
//! together with the clique, independence and acyclic numbers that bound them.
//! It also builds the standard digraph families with their closed-form
//! b-colorings and enumerates small regular digraphs up to isomorphism.

pub mod codec;
pub mod coloring;
pub mod constructions;
pub mod digraph;
pub mod enumeration;
mod error;
pub mod solvers;

pub use coloring::{audit, b_reduce, greedy_acyclic, Coloring, ColoringAudit};
pub use digraph::{Condensation, Digraph, VertexSet};
pub use error::{Error, Result};
pub use solvers::{
    b_coloring_exists, bounds_report, dac_exact, dc_exact, dib_exact, BoundsReport, Parameter,
    SolveOutcome,
};
