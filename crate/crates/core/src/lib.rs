//! Weight-equitable partitions of graphs.
//!
//! Graphs are simple and undirected with vertices `0..n`. Text formats and
//! error messages number vertices from 1.

pub mod cograph;
pub mod equitability;
pub mod error;
pub mod experiment;
pub mod format;
pub mod graph;
pub mod joint;
pub mod matrix;
pub mod oracle;
pub mod partition;
pub mod perm;
pub mod spectral;
pub mod weighted;

pub use cograph::Cotree;
pub use error::{Error, Result};
pub use graph::Graph;
pub use joint::{JointContext, Side};
pub use matrix::Matrix;
pub use partition::Partition;
pub use perm::Permutation;
pub use spectral::PerronData;
pub use weighted::WeightedView;
