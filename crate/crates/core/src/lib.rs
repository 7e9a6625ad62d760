//! Cycle spaces of 3-connected graphs.
//!
//! A circuit `C` of a graph `G` is non-separating when contracting it leaves
//! no more blocks than `G` had. In a 3-connected graph these circuits span
//! the cycle space over GF(2), and this crate builds the spanning sums
//! explicitly:
//!
//! * [`graph`] holds multigraphs with stable edge ids, blocks, threads and
//!   connectivity tests.
//! * [`cycle_space`] does GF(2) elimination over edge sets.
//! * [`circuits`] enumerates circuits and classifies them.
//! * [`decompose`] reduces a graph thread by thread down to a subdivided K4
//!   and writes any cycle-space element as a sum of non-separating circuits.
//! * [`cocircuits`] recovers the bonds from the non-separating circuits.
//!
//! ```
//! use cyclespan::circuits::{enumerate_circuits, non_separating_circuits, Circuit};
//! use cyclespan::corpus::k4;
//! use cyclespan::decompose::decompose_circuit;
//! use cyclespan::graph::EdgeSet;
//!
//! let g = k4();
//! assert_eq!(enumerate_circuits(&g, 100).unwrap().len(), 7);
//! assert_eq!(non_separating_circuits(&g, 100).unwrap().len(), 4);
//!
//! // The square 0-1-3-2 is the sum of two triangles.
//! let square = Circuit::from_edges(&g, EdgeSet::from_ids(6, [0, 2, 3, 5]).unwrap()).unwrap();
//! let cert = decompose_circuit(&g, &square).unwrap();
//! assert_eq!(cert.parts.len(), 2);
//! assert_eq!(cert.replay(), *square.edges());
//! ```

pub mod circuits;
pub mod cocircuits;
pub mod corpus;
pub mod cycle_space;
pub mod decompose;
pub mod error;
pub mod format;
pub mod graph;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{build_graph, EdgeId, EdgeSet, Graph, VertexId};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/cycle-space.md")]
    mod cycle_space {}
    #[doc = include_str!("../../../book/src/circuits.md")]
    mod circuits {}
    #[doc = include_str!("../../../book/src/decomposition.md")]
    mod decomposition {}
    #[doc = include_str!("../../../book/src/cocircuits.md")]
    mod cocircuits {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
