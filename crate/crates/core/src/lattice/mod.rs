//! Subgroup handles, interval search, normal structure and chief series.

pub mod chief;
pub mod interval;
pub mod normal;
pub mod quotient;
pub mod subgroup;

pub use chief::{chief_series, is_frattini_factor, ChiefFactor, ChiefSeries};
pub use interval::{
    all_subgroups, conjugacy_classes_of_subgroups, frattini, greedy_maximal_overgroup, interval, maximal_overgroups, Interval, INTERVAL_CAP,
};
pub use normal::{conjugacy_classes, minimal_normal_subgroups, normal_subgroups, socle};
pub use quotient::FactorGroup;
pub use subgroup::{generated, Subgroup};
