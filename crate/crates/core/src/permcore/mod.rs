//! Permutations, permutation groups and the basic constructions on them.

mod chain;
pub mod group;
pub mod hom;
pub mod ops;
pub mod perm;

pub use group::{FiniteGroup, PermGroup, DEFAULT_ELEMENT_CAP};
pub use hom::{coset_action, GroupHom};
pub use ops::{
    centralizer_of, core_of_subgroup, direct_product, direct_product_of, group_order, indices_of, is_soluble, membership, normal_closure,
    normal_closure_of, orbit_partition, orbits_of, point_stabilizer, DirectProduct, Orbits,
};
pub use perm::Permutation;
