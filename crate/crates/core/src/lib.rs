//! Constructive edge-decompositions of regular graphs into double stars.
//!
//! A double star S_{a,b} is the tree obtained by joining the centers of a
//! star with `a` edges and a star with `b` edges. This crate builds such
//! decompositions for several families of regular graphs — regular
//! bipartite, even-regular, and odd-regular graphs satisfying matching or
//! common-neighbor hypotheses — and independently verifies every output.

pub mod certificate;
pub mod decompose;
pub mod error;
pub mod factorize;
pub mod generate;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod star;

pub use error::{Error, Result};
pub use graph::{Bipartition, EdgeId, Graph, Side, Vertex};
pub use star::{verify_decomposition, Decomposition, DoubleStar, VerifyReport};
