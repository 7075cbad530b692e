//! Word-representability and comparability of finite simple graphs through
//! modular decomposition.
//!
//! The crate decides whether a graph can be represented by a word (two
//! vertices adjacent iff their letters alternate), computes representation
//! numbers and permutation-representation numbers by exhaustive search at
//! small scale, and composes representations along modules so that larger
//! graphs built by substitution or lexicographic product get certified
//! numbers without searching them directly.
//!
//! Every positive answer comes with a certificate that can be replayed:
//! a representing word, a transitive orientation, or a vertex set whose
//! induced subgraph has no transitive orientation.

pub mod characterizer;
pub mod cli;
pub mod error;
pub mod graph;
pub mod modular;
pub mod orientation;
pub mod representation;
pub mod word;

pub use characterizer::{classify, nonwr_screen, verify, Caps, Status, Verdict};
pub use error::{Error, Result};
pub use graph::{Graph, SetAdjacency, VertexSet};
pub use modular::ModularPartition;
pub use orientation::{Orientation, Poset};
pub use representation::{Mode, Representation};
pub use word::Word;
