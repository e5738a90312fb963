//! Exact solvers for community-aware network sparsification.
//!
//! Given an edge-weighted graph, a collection of communities, and budgets
//! on edge count and total weight, decide or optimize the two variants of
//! the problem: every community must contain a spanning star (`Stars`), or
//! every community must induce a connected subgraph (`Connectivity`).
//!
//! The crate provides exponential-time oracle baselines, a Kruskal-based
//! polynomial algorithm for forest-shaped connectivity solutions, a solver
//! for stars built on local-cycle edge-set enumeration, a twin-class
//! branching solver for unweighted stars, and generators that translate
//! classic hard problems (3-SAT, Hamiltonian Cycle, Hitting Set,
//! Multicolored Clique, Independent Set) into instances for testing.

pub mod dsu;
pub mod error;
pub mod graph;
pub mod instance;
pub mod io;
pub mod oracle;
pub mod rational;
pub mod reductions;
pub mod select;
pub mod solution;
pub mod stars_fitting;
pub mod stars_twins;
pub mod stop;
pub mod tree_support;

pub use error::{GenerateError, InstanceError, ParseError, SolveError};
pub use graph::{
    is_community_connected, universal_in_graph, universal_vertices, Community, Edge, EdgeId,
    WeightedGraph,
};
pub use instance::{HypergraphComponents, Instance, Property};
pub use oracle::{Mode, OracleResult, OracleStatus};
pub use rational::{Budget, Rational};
pub use solution::{verify_solution, Certificate, Solution, VerifyReport, Violation};
pub use stop::{SearchOptions, Stop};
