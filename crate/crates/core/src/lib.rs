//! Rooted cycle bases of undirected multigraphs.
//!
//! A cycle basis is *rooted* at an edge `e` when every basis cycle passes
//! through `e`. This crate decides when such a basis exists, constructs one
//! in O(mn), finds a minimum-weight one via tie-broken shortest disjoint
//! path pairs, and explores fundamental rooted bases, planar duality, and
//! the connection to Hamiltonian cycles.
//!
//! Modules:
//! - [`graph`]: multigraphs, rooted graphs, cycles, GF(2) cycle-space tools.
//! - [`connectivity`]: 2-cores, biconnectivity, open ear decompositions,
//!   disjoint paths to the root edge.
//! - [`rooted_basis`]: existence and the O(mn) construction.
//! - [`tiebreak`]: deterministic and randomized weight tie-breaking.
//! - [`suurballe`]: shortest disjoint path pairs and shortest rooted
//!   cycles through a designated edge.
//! - [`min_basis`]: the greedy minimum-weight rooted basis.
//! - [`fundamental`]: fundamental rooted bases, plane duals, rooted
//!   Hamiltonian cycles, and the forced-edge gadget.
//! - [`generators`]: parameterized instance families.
//! - [`testkit`]: brute-force oracles and random instances for testing.

pub mod connectivity;
pub mod fundamental;
pub mod generators;
pub mod graph;
pub mod min_basis;
pub mod rooted_basis;
pub mod suurballe;
pub mod testkit;
pub mod tiebreak;

pub use graph::{Cycle, CycleBasis, Edge, EdgeId, Graph, GraphError, RootedGraph, VertexId, Weight};
pub use min_basis::{min_weight_rooted_basis, min_weight_rooted_basis_with, MinBasisOptions};
pub use rooted_basis::{build_rooted_cycle_basis, has_rooted_cycle_basis, NoRootedBasis};
pub use tiebreak::{TieBreakContext, TieBreakMode};
