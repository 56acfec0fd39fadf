//! Reconfiguration graphs of colourings and independent sets, and the
//! reconstruction of a graph from an unlabelled copy of one of them.
//!
//! The crate builds the single-vertex recolouring graph `C_k(G)`, the Kempe
//! recolouring graph `K_k(G)` and the token graphs under jumping, sliding and
//! addition/removal, strips their labels, and recovers `G` from what is left.
//! It also builds the counterexample families showing where recovery fails.

pub mod chromatic;
pub mod colouring;
pub mod constructions;
mod error;
pub mod format;
pub mod graph;
pub mod harness;
pub mod indep;
pub mod iso;
pub mod line_root;
mod par;
pub mod reconfig;
pub mod reconstruct;

pub use chromatic::chromatic_number;
pub use colouring::Colouring;
pub use error::{Error, Result};
pub use graph::{Component, Graph};
pub use indep::TokenSet;
pub use iso::{is_isomorphic, IsoWitness};
pub use par::parallel_available;
pub use reconfig::{ReconfigGraph, ReconfigKind, TokenRule};

/// Resource limits and execution mode shared by the expensive operations.
///
/// Every exponential search is bounded; hitting a bound is reported as
/// [`Error::ResourceCap`], never as a silently truncated result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Backtracking nodes allowed in a single search (colourability, layering, roots).
    pub max_search_nodes: u64,
    /// Largest number of colourings an enumeration may produce.
    pub max_colourings: u64,
    /// Largest number of independent sets an enumeration may produce.
    pub max_sets: u64,
    /// Spread data-parallel loops over the rayon pool (needs the `parallel` feature).
    pub parallel: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_search_nodes: 200_000_000,
            max_colourings: 10_000_000,
            max_sets: 10_000_000,
            parallel: true,
        }
    }
}

impl Config {
    pub fn sequential() -> Self {
        Config {
            parallel: false,
            ..Config::default()
        }
    }
}
