//! Finite workbench for connectivity-aware Ramsey relations.
//!
//! `n →_{κ-c} (m)²_k` holds when every `k`-coloring of the edges of `K_n` has
//! a color `ξ` and an `m`-set `X` such that the color-`ξ` graph on `X` is
//! κ-connected. This crate certifies connectivity, builds the classical
//! extremal colorings and their structural checks, decides the relation on
//! concrete colorings, searches for avoiding colorings, and compiles
//! avoidance instances to CNF.

pub mod coloring;
pub mod colorings;
pub mod error;
mod flow;
pub mod formats;
pub mod graph;
pub mod sat;
pub mod search;

pub use coloring::{induced_color_graph, EdgeColoring, InducedColorGraph};
pub use error::{Error, Result};
pub use graph::{
    brute_force_kappa, is_connected, is_forest, is_highly_connected, is_kappa_connected, vertex_connectivity,
    ConnectivityVerdict, Graph, PathFamily,
};
