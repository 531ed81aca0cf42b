//! Combinatorics of Specht modules for symmetric groups in odd characteristic:
//! partitions, abacus displays, modular branching, the Mullineux map,
//! Rouquier blocks and homomorphisms between Specht and permutation modules.

pub mod abacus;
pub mod classify;
pub mod error;
pub mod hom;
pub mod partition;
pub mod restriction;
pub mod rouquier;

pub use error::{Error, Result};
pub use partition::{make_partition, part, partitions, Node, Partition};
