//! Monochromatic disconnection colorings of graphs.
//!
//! An edge coloring is an MD-coloring when every pair of distinct vertices
//! is separated by an edge cut whose edges all share one color; `md(G)` is
//! the largest number of colors such a coloring can use. This crate builds
//! and checks such colorings, computes `md` exactly for small graphs,
//! produces checkable certificates for `md(G) = 1`, and runs the
//! complement-pair and random-graph experiments built on top of them.

pub mod coloring;
pub mod constructions;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod nordhaus;
pub mod solver;

pub use coloring::{separating_colors, verify_md, EdgeColoring, MdVerdict};
pub use error::{Error, Result};
pub use graph::{BlockDecomposition, Graph};
pub use solver::{
    brute_force_oracle, check_certificate, md1_certificate, md_decide, md_exact,
    ClosureCertificate, MdResult,
};
