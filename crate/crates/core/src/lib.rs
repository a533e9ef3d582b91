//! Color-avoiding connectivity toolkit.
//!
//! Models networks whose edges or vertices carry failure labels (colors):
//! all elements sharing a color fail together, as in shared-risk link
//! groups. The crate decides whether a colored graph, digraph, or matroid
//! stays connected when any small set of colors is removed, constructs
//! optimal colorings and orientations where polynomial algorithms exist,
//! runs exact desk-scale solvers for the NP-hard variants, and builds the
//! associated hardness gadgets with brute-force oracles for both sides.

pub mod conn;
pub mod coloring;
pub mod enumerate;
pub mod error;
pub mod gen;
pub mod graph;
pub mod matroid;
pub mod orientation;
pub mod reductions;
pub mod verify;

pub use error::Error;
pub use graph::{ColoredGraph, ColorId, ColorSet, EdgeId, VertexId};
pub use verify::{ColoredPart, ConnMode, Notion, Scope, Verdict};
