//! Letter graphs and lettericity, permutation grid classes, chain circuits,
//! chain-partition parameters and locally ordered hypergraphs, with exact
//! small-scale solvers.
//!
//! Graph vertices are `0..n` throughout the API; all text formats are 1-based.

pub mod budget;
pub mod circuit;
pub mod encode;
pub mod digraph;
pub mod error;
pub mod graph;
pub mod grid;
pub mod letters;
pub mod loh;
pub mod partition;
pub mod perm;

pub use budget::{Budget, Exhausted};
pub use error::{CircuitError, Error, LohError, Result};
pub use graph::{Family, Graph};
pub use digraph::Digraph;
pub use letters::{Decoder, LetterCertificate, LetterRepresentation, Word};
pub use grid::{CellWord, GridMatrix, Gridding, SignVector};
pub use perm::Permutation;
pub use circuit::{ChainCircuit, CyclicWord, Encoding, Split};
pub use encode::encode;
pub use loh::Loh;
pub use partition::{Level, LinkedChainGraph, PartitionCertificate, Sign};
