//! Exact workbench for the edge revised Szeged index on cacti.
//!
//! The crate computes the Wiener, Szeged and edge revised Szeged indices in
//! exact quarter-integer arithmetic, builds the extremal cactus families,
//! enumerates the class of cacti with `n` vertices and `k` cycles up to
//! isomorphism, and audits the known lower bounds against all of it.
//!
//! ```
//! use szeged_core::{families, indices};
//!
//! let paw = families::c0(4, 1).unwrap();
//! assert_eq!(indices::edge_revised_szeged(&paw).unwrap().to_string(), "53/4");
//! ```

pub mod bounds;
pub mod canon;
pub mod enumerate;
mod error;
pub mod exec;
pub mod families;
pub mod graph;
pub mod indices;
pub mod io;
pub mod verify;

pub use canon::{certificate, Certificate};
pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::Graph;
pub use indices::QuarterInt;

/// Version string echoed into every JSON report.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
