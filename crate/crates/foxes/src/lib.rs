//! Contractible edges, fragments, and DFS trees of k-connected graphs.
//!
//! An edge of a k-connected graph is *k-contractible* if contracting it
//! leaves the graph k-connected. The library computes contractible edges,
//! smallest separating sets and their fragments, fragment systems relative
//! to a family of vertex sets, spanning and DFS trees, and *foxes*:
//! k-connected graphs that own a spanning tree without any k-contractible
//! edge. A verification harness checks a catalog of structural statements
//! exhaustively on all small graphs.
//!
//! Graphs are simple and undirected, with vertices `0..n` for `n <= 64`,
//! stored as one adjacency bitmask per vertex. All operations are pure:
//! they never mutate their input graph.

#![forbid(unsafe_code)]

pub mod connectivity;
pub mod constructions;
pub mod format;
pub mod fragments;
pub mod graph;
pub mod harness;
pub mod trees;

pub use graph::{Edge, Graph, VertexSet, MAX_ORDER};

use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order must be between 1 and {MAX_ORDER}, got {0}")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("{0} is not an edge of the graph")]
    NotAnEdge(Edge),
    #[error("vertex set {0} does not induce a connected nonempty subgraph")]
    DisconnectedSet(VertexSet),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not {k}-connected (order {order}, connectivity {kappa})")]
    NotKConnected {
        k: usize,
        order: usize,
        kappa: usize,
    },
    #[error("{0} is not a smallest separating set of the graph")]
    NotASeparator(VertexSet),
    #[error("{0} is not a fragment of the graph")]
    NotAFragment(VertexSet),
    #[error("graph6 error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("spanning tree enumeration exceeded the cap of {0} trees")]
    TreeCapExceeded(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
