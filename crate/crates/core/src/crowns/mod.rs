//! Chief-factor equivalence, monolithic groups, crown-based powers, crowns
//! and strips.

pub mod crown;
pub mod equivalence;
pub mod iso;
pub mod linalg;
pub mod monolithic;
pub mod strips;

pub use crown::{all_crowns, compute_crown, sotto_decomposition, CrownRecord, SottoWitness};
pub use equivalence::{delta_count, delta_count_seeded, factor_classes, g_equivalent, g_isomorphic, AbelianCoords};
pub use iso::{for_each_isomorphism, is_isomorphism, iso_search, Isomorphism, ISO_SEARCH_MAX};
pub use monolithic::{crown_based_power, monolithic_associated, MonolithicGroup};
pub use strips::{strip_decomposition, StripDecomposition};
