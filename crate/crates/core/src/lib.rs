//! Recognition and coloring of graphs with no long unichord.
//!
//! A long unichord is an edge that is the unique chord of some cycle of
//! length at least five. The recognizer decomposes a graph by universal
//! vertices, cutvertices and amalgams until every piece is chordal or
//! unichord-free. The colorer peels splitters off in three levels and uses at
//! most `f_3(ω)` colors, where `f_3` is the cubic bound from [`splitter::f_k`].

mod bits;
pub mod basics;
pub mod coloring;
pub mod canon;
pub mod constraint;
pub mod decomp;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod petersen;
pub mod recognizer;
pub mod splitter;
mod twosat;

pub use constraint::Constraint;
pub use error::{Error, Result};
pub use graph::{named_graph, Graph, Named, VertexId, VertexSet};
