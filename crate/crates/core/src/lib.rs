//! Verification engine for spectral Nordhaus-Gaddum inequalities.
//!
//! The crate computes the positive and negative eigenvalue square sums
//! `s+`/`s-` of graph adjacency matrices together with the invariants they are
//! compared against, evaluates a catalog of bounds and conjectures on single
//! graphs, exhaustive labelled sweeps, family lists and graph6 corpora, and
//! runs seeded local search for extremal graphs and counterexamples.

pub mod bounds;
pub mod chromatic;
pub mod eigen;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod inertia;
pub mod invariants;
pub mod report;
pub mod scan;
pub mod search;
pub mod spectral;
pub mod stream;
pub mod structure;

pub use error::{Error, Result};
pub use graph::Graph;
