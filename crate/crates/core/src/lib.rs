//! Decide whether a graph of odd-girth `2k+1` bounds the class of
//! K4-minor-free graphs of odd-girth at least `2k+1`, with checkable
//! certificates either way.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] holds the simple-graph carrier, BFS distances, odd-girth,
//!   cycle queries and a small isomorphism test.
//! * [`families`] generates every named graph and family used here.
//! * [`triples`] classifies k-good triples and tests their realization.
//! * [`bound`] runs the pruning decision procedure, verifies certificates,
//!   builds NO-witnesses by gadget gluing and lints minimal bounds.
//! * [`sp`] covers series-parallel recognition, 2-tree completions,
//!   random instances and homomorphism search/construction.
//! * [`colour`] has the Cayley edge-colouring machinery.
//! * [`report`] is the batch runner behind `girthbound reproduce`.

pub mod bound;
pub mod colour;
pub mod error;
pub mod families;
pub mod graph;
pub mod par;
pub mod report;
pub mod sp;
pub mod triples;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};

/// Environment variable overriding the default search budgets.
pub const BUDGET_ENV: &str = "GIRTHBOUND_BUDGET";

/// Reads [`BUDGET_ENV`], falling back to `default` when unset or malformed.
pub fn budget_from_env(default: u64) -> u64 {
    std::env::var(BUDGET_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(default)
}
