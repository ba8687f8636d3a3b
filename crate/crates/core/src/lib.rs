//! Cyclic colorings of connected plane multigraphs.
//!
//! A cyclic coloring assigns colors to vertices so that any two vertices
//! incident with a common face receive distinct colors. This crate provides
//! the machinery to study such colorings at desk scale:
//!
//! - [`embedding`]: plane multigraphs as rotation systems, face tracing, and
//!   the derived parameters (maximum face degree, shared-face counts,
//!   degree-2 chains, cyclic adjacency).
//! - [`reduction`]: suppression of degree-2 chains, the structure
//!   classification of the reduced graph, the subdivision multigraph, and
//!   separating-cycle extraction and splitting.
//! - [`edgecolor`]: exact proper edge coloring of loopless multigraphs
//!   within the Shannon and Vizing-Gupta budgets.
//! - [`coloring`]: an exact cyclic chromatic oracle, a constructive pipeline
//!   that colors suppressed vertices by edge-coloring the subdivision
//!   multigraph, and a recursive decompose-and-merge procedure.
//! - [`bounds`]: evaluation of the published upper bounds and conjecture
//!   predicates, with a per-graph report.
//! - [`generators`]: all graph families used by the corpus and test suite.
//! - [`format`]: a deterministic text format for rotation systems.
//! - [`cli`]: the `ccc` command-line frontend.

pub mod bounds;
pub mod cli;
pub mod coloring;
pub mod corpus;
pub mod edgecolor;
pub mod embedding;
pub mod error;
pub mod format;
pub mod generators;
pub mod reduction;

pub use error::{Error, Result};
