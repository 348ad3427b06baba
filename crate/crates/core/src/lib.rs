//! Spectral theory of self-loop graphs.
//!
//! A self-loop graph `G_S` is a simple graph `G` on `n` vertices with one loop
//! attached at every vertex of a subset `S`, `|S| = σ`. Its adjacency matrix is
//! `A(G) + I_S`, so each loop contributes 1 to the diagonal (and 2 to the
//! degree of its vertex). Energies are measured around the mean eigenvalue
//! `σ/n`.
//!
//! This crate is `no_std` and only needs `alloc`. It provides:
//!
//! | module | contents |
//! |--------|----------|
//! | [`graph`] | simple graphs, loop sets, named families, structural predicates |
//! | [`construct`] | complements, line graphs, adjacency / incidence / signless Laplacian matrices, quotient matrices |
//! | [`numerics`] | dense symmetric eigensolver, exact integer characteristic polynomials, polynomial algebra |
//! | [`invariants`] | energies, Zagreb indices, degree deviation, trace identities, interlacing |
//! | [`bounds`] | the catalog of eigenvalue and energy inequalities (`B1`..`B18`) as hypothesis-guarded evaluators |
//!
//! ```
//! use selfloop_core::graph::{LoopSet, LoopedGraph, SimpleGraph};
//! use selfloop_core::invariants::energy;
//!
//! let k2 = SimpleGraph::complete(2);
//! let gs = LoopedGraph::new(k2, LoopSet::from_indices([0]).unwrap()).unwrap();
//! let e = energy(&gs).unwrap();
//! assert!((e.value - 5f64.sqrt()).abs() < 1e-12);
//! ```

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod construct;
mod error;
pub mod graph;
pub mod invariants;
pub mod numerics;
pub mod surd;

pub use error::{Error, Result};

/// Absolute float tolerance used by spectral comparisons.
pub const SPECTRAL_TOL: f64 = 1e-9;

/// Margin below which a bound's slack counts as a violation, and within which
/// it counts as equality.
pub const SLACK_TOL: f64 = 1e-7;
