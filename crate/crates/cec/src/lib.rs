//! Exact computation and verification of connected edge cover
//! polynomials E_c(G,x).
//!
//! A connected edge cover of a graph is an edge subset that touches
//! every vertex and induces a connected subgraph; E_c(G,x) counts them
//! by size. This crate provides:
//!
//! - [`graph`] / [`families`]: labeled graphs, generators for the named
//!   families, and edge-list file I/O;
//! - [`poly`]: dense polynomials with arbitrary-precision nonnegative
//!   coefficients;
//! - [`oracle`]: definition-level brute force over edge subsets, the
//!   arbiter for everything else;
//! - [`engine`]: deletion–contraction with memoization for graphs past
//!   the oracle budget, plus a matrix-tree spanning tree counter;
//! - [`formulas`]: faithful evaluators for the claimed closed forms per
//!   family, right or wrong;
//! - [`verify`]: the claim registry that adjudicates each closed form
//!   against ground truth and reports CONFIRMED/REFUTED/UNTESTED, and
//!   the unimodality scanner;
//! - [`methods`]: method selection glue shared by the CLI and examples.
//!
//! The `cec` binary exposes all of it as `poly`, `table`, `verify` and
//! `scan-unimodal` subcommands; see the examples directory for library
//! usage.

pub mod cli;
pub mod corpus;
pub mod engine;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod methods;
pub mod oracle;
pub mod poly;
pub mod verify;

pub use engine::{cec_poly_engine, spanning_tree_count, Engine, EngineConfig};
pub use families::{generate, Family, FamilySpec};
pub use graph::{Graph, GraphError};
pub use oracle::{cec_poly_oracle, ec_poly_oracle, min_cec_size, OracleConfig};
pub use poly::Poly;
