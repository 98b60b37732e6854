//! Catalog ingestion and the verification harness.

pub mod bounds;
pub mod builtin;
pub mod catalog;
pub mod lemmas;
pub mod report;
pub mod suites;

pub use bounds::{pair_reports, scoped_subgroups, sigma_rho, sigma_rho_report, Scope, ScopedSubgroups, SigmaRho};
pub use builtin::builtin;
pub use catalog::{desk_catalog, load_catalog, parse_catalog, resolve_group, CatalogEntry};
pub use report::{BoundReport, Report, Summary, Verdict, A_PRIME, RATIO_BASELINE};
pub use suites::{run_suite, Suite, SuiteOptions};
