//! Recognition, orientation and minimum word-representants for
//! arborescence-like graphs.
//!
//! The crate is organized around two independent recognition routes that the
//! test suite plays against each other:
//!
//! * [`orientation`] builds rooted Hasse trees directly (universal-vertex
//!   peeling and co-component bipartition), the definition-level route;
//! * [`splitdec`] prunes a graph to a clique-star split tree and reads the
//!   same classes off structural conditions of that tree.
//!
//! [`wordrep`] turns the orientations into words whose letter alternations
//! reproduce the graph exactly, at the provably minimal length `2n - k`
//! (`k` = longest chain = clique number), and carries a brute-force oracle
//! for cross-validation. [`lab`] holds seeded generators and the
//! exhaustive-enumeration cross-checker the acceptance suite runs on.

pub mod bitset;
pub mod error;
pub mod graph;
pub mod lab;
pub mod orientation;
pub mod splitdec;
pub mod wordrep;

pub use bitset::VertexSet;
pub use error::Error;
pub use graph::Graph;
pub use orientation::{DoubleArbOrientation, RootedForestPoset};
pub use splitdec::{CliqueStarTree, GraphClass, RecognitionReport};
pub use wordrep::Word;
