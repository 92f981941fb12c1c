//! Lattice cones of trivalent graphs.
//!
//! A trivalent graph `G` (loops and parallel edges allowed) determines a
//! graded cone `τ(G)` inside `ℤ ⊕ ℤ^E`: an edge labeling `ω` with a degree `m`
//! belongs to it when, at every inner vertex, the three incident labels have
//! even sum, satisfy the triangle inequalities and sum to at most `2m`.
//!
//! Modules, bottom-up:
//!
//! * [`graph`]: the graphs themselves, surgery, networks, mutations and the
//!   caterpillar-with-loops normal form.
//! * [`cone`]: cone elements, membership, local paths, cut lifts.
//! * [`semigroup`]: lattice points by degree, minimal generators and
//!   decompositions into generators.
//! * [`hilbert`]: Hilbert tables by brute force, by graft/glue convolution
//!   and from rational series.
//! * [`cli`]: the `graphcone` command line.

pub mod cli;
pub mod cone;
pub mod fixtures;
pub mod graph;
pub mod hilbert;
pub mod semigroup;

pub use cone::{ConeElement, ConeError, LocalTriple, Violation};
pub use graph::{EdgeId, GraphError, MutationStep, Network, TrivalentGraph, Variant, VertexId};
