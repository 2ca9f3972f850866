//! Higher independence complexes of finite simple graphs.
//!
//! `Ind_r(G)` is the simplicial complex of vertex subsets whose induced
//! subgraph has all connected components of size at most `r`. This crate
//! builds these complexes and decides their structural properties:
//!
//! - [`graph`]: graphs, the named families (caterpillars, `H_r`, `G_r`, ...),
//!   free-tree enumeration and chordality.
//! - [`hypergraph`]: simple hypergraphs, the connected-subset hypergraph
//!   `Con_r(G)`, minors, simplicial vertices, chordality and minimal covers.
//! - [`complex`]: facet-represented simplicial complexes with links,
//!   deletions, pure skeletons and Alexander duality.
//! - [`homology`]: reduced Betti numbers over Q or GF(p), Reisner's
//!   Cohen–Macaulay test and sequential Cohen–Macaulayness.
//! - [`decomposability`]: vertex decomposability and non-pure shellability
//!   with replayable certificates.
//! - [`algebra`]: square-free monomial ideals, Stanley–Reisner ideals,
//!   Alexander dual ideals and vertex-splittable recursion.
//! - [`scan`]: corpus sweeps over trees and caterpillars.
//!
//! Vertex subsets are stored as 64-bit masks ([`VertexSet`]) indexed into a
//! shared label table, so every structure supports at most 64 vertices.

pub mod algebra;
pub mod complex;
pub mod decomposability;
mod error;
pub mod exec;
pub mod graph;
pub mod homology;
pub mod hypergraph;
pub mod outcome;
pub mod scan;
mod vset;

pub use error::{Error, Result};
pub use exec::Exec;
pub use outcome::Outcome;
pub use vset::{Labels, VertexSet, MAX_VERTICES};

pub use algebra::MonomialIdeal;
pub use complex::SimplicialComplex;
pub use graph::Graph;
pub use homology::Coefficients;
pub use hypergraph::Hypergraph;
