//! Chain decompositions of finite posets.
//!
//! The crate covers Dilworth decompositions, the unique minimum homogeneous
//! chain decomposition (MHCD) and its chain graph, cuts of homogeneous
//! decompositions with their signed chain-count matrices, and noncrossing
//! decompositions together with the pattern-avoiding permutations and plane
//! trees that bound their size. Every construction is paired with exhaustive
//! checks used by the `poset-decomp verify` command.

pub mod analyze;
pub mod bitmatrix;
pub mod chain;
pub mod cut;
pub mod error;
pub mod hcd;
pub mod matrix;
pub mod nccd;
pub mod poset;
pub mod report;
pub mod scope;
pub mod verify;

pub use error::{Error, Result};
pub use poset::Poset;
pub use scope::Scope;
