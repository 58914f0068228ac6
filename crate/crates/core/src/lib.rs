//! Exact counting for collective decision-making on influence graphs.
//!
//! The crate evaluates gOLF, oblivious and non-oblivious decision functions,
//! counts satisfaction, Rae and Banzhaf values and influence expansions by
//! brute force, and computes the same quantities in polynomial time for
//! strong hierarchical graphs and star games.

pub mod count;
pub mod decision;
pub mod error;
pub mod generate;
pub mod graph;
pub mod hierarchical;
pub mod io;
pub mod label;
pub mod oracle;
pub mod reductions;
pub mod star;
pub mod vertex_set;

pub use count::{binomial, pow2, BigCount, CountTable};
pub use decision::{DecisionModel, DecisionVector, GolfModel, InfluenceGame, ModelKind};
pub use error::{Error, Result};
pub use graph::{ActorPartition, InfluenceGraph};
pub use label::Label;
pub use oracle::DEFAULT_CAP;
pub use vertex_set::VertexSet;
