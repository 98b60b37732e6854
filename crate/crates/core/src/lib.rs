//! Finite permutation groups: stabilizer chains, subgroup lattices, block
//! systems, chief series, crowns and crown-based powers.

pub mod bitset;
pub mod blocks;
pub mod crowns;
pub mod error;
pub mod lattice;
pub mod par;
pub mod permcore;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::Subgroup;
pub use permcore::{FiniteGroup, PermGroup, Permutation};
