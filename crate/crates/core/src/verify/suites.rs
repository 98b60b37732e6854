//! Suite drivers: build every catalog entry, run the selected checks on the
//! worker pool and fold the rows into one sorted report.

use std::fmt;
use std::str::FromStr;

use super::bounds::pair_reports;
use super::catalog::CatalogEntry;
use super::lemmas::{
    check_block_correspondence, check_case1_claim, check_crown_reconstruction, check_delta_invariance, check_lemma_crown_socle,
    check_lemma_normal_dichotomy, check_reductions, check_sotto_properties, error_row, frattini_trivial, is_transitive,
};
use super::report::{BoundReport, Report, Verdict, RATIO_BASELINE};
use crate::crowns::MonolithicGroup;
use crate::error::{Error, Result};
use crate::par;
use crate::permcore::{is_soluble, PermGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Soluble,
    Ratio,
    Lemmas,
    Sotto,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "soluble" => Ok(Suite::Soluble),
            "ratio" => Ok(Suite::Ratio),
            "lemmas" => Ok(Suite::Lemmas),
            "sotto" => Ok(Suite::Sotto),
            "all" => Ok(Suite::All),
            _ => Err(Error::Precondition(format!("unknown suite {s:?}"))),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Soluble => "soluble",
            Suite::Ratio => "ratio",
            Suite::Lemmas => "lemmas",
            Suite::Sotto => "sotto",
            Suite::All => "all",
        })
    }
}

/// Per-group scopes of the lemma checks.
pub const CROWN_CHECK_MAX: usize = 100;
pub const DELTA_CHECK_MAX: usize = 200;
pub const SOTTO_CHECK_MAX: usize = 100;
pub const BLOCK_CHECK_DEGREE: usize = 8;
const DELTA_SEEDS: u64 = 4;
const LEMMA_SAMPLES: usize = 24;
const LEMMA_SEED: u64 = 0;

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Entries of larger order are skipped.
    pub max_order: Option<usize>,
}

fn has(suite: Suite, part: Suite) -> bool {
    suite == Suite::All || suite == part
}

fn push<T>(rows: &mut Vec<BoundReport>, kind: &str, label: &str, r: Result<T>, f: impl FnOnce(&mut Vec<BoundReport>, T)) {
    match r {
        Ok(v) => f(rows, v),
        Err(e) => rows.push(error_row(kind, label, &e)),
    }
}

fn group_rows(g: &PermGroup, suite: Suite) -> Vec<BoundReport> {
    let mut rows = Vec::new();
    let name = format!("G={}", g.name());
    let n = g.order();
    let soluble = match is_soluble(g) {
        Ok(s) => s,
        Err(e) => return vec![error_row("group", &name, &e)],
    };
    let pairs = match suite {
        Suite::Soluble => soluble,
        Suite::Ratio | Suite::All => true,
        Suite::Sotto => n <= super::bounds::SIGMA_RHO_MAX,
        Suite::Lemmas => false,
    };
    if pairs {
        let split = matches!(suite, Suite::Sotto | Suite::All);
        push(&mut rows, "pairs", &name, pair_reports(g, split), |rows, v| rows.extend(v));
    }
    if has(suite, Suite::Sotto) && n <= SOTTO_CHECK_MAX && n > 1 {
        match frattini_trivial(g) {
            Ok(true) => push(&mut rows, "sotto", &name, check_sotto_properties(g), |rows, v| rows.push(v)),
            Ok(false) => {}
            Err(e) => rows.push(error_row("sotto", &name, &e)),
        }
    }
    if has(suite, Suite::Lemmas) {
        if n <= CROWN_CHECK_MAX && n > 1 {
            push(&mut rows, "crown", &name, check_crown_reconstruction(g), |rows, v| rows.push(v));
        }
        if n <= DELTA_CHECK_MAX && n > 1 {
            push(&mut rows, "delta", &name, check_delta_invariance(g, DELTA_SEEDS), |rows, v| rows.push(v));
        }
        if n <= super::bounds::ALL_SUBGROUPS_MAX {
            push(&mut rows, "reductions", &name, check_reductions(g), |rows, v| rows.push(v));
        }
        if g.degree() <= BLOCK_CHECK_DEGREE && is_transitive(g) {
            push(&mut rows, "blocks", &name, check_block_correspondence(g), |rows, v| rows.push(v));
        }
    }
    rows
}

/// Checks on crown-based powers of fixed monolithic groups.
fn power_rows() -> Vec<BoundReport> {
    let mut rows = Vec::new();
    let build = |expr: &str| super::builtin::builtin(expr).and_then(MonolithicGroup::new);
    match build("Alt(5)") {
        Ok(a5) => {
            for k in 1..=2 {
                let label = format!("L=Alt(5) k={k}");
                push(&mut rows, "crown_socle", &label, check_lemma_crown_socle(&a5, k, LEMMA_SAMPLES, LEMMA_SEED), |rows, v| {
                    rows.extend(v)
                });
                push(&mut rows, "dichotomy", &label, check_lemma_normal_dichotomy(&a5, k), |rows, v| rows.push(v));
            }
            for k in 1..=3 {
                let label = format!("L=Alt(5) k={k}");
                push(&mut rows, "case1", &label, check_case1_claim(&a5, k, LEMMA_SAMPLES, LEMMA_SEED), |rows, v| rows.push(v));
            }
        }
        Err(e) => rows.push(error_row("lemmas", "L=Alt(5)", &e)),
    }
    match build("Sym(4)") {
        Ok(s4) => {
            for k in 1..=2 {
                let label = format!("L=Sym(4) k={k}");
                push(&mut rows, "dichotomy", &label, check_lemma_normal_dichotomy(&s4, k), |rows, v| rows.push(v));
            }
        }
        Err(e) => rows.push(error_row("lemmas", "L=Sym(4)", &e)),
    }
    rows
}

fn ratio_row(report_rows: &[BoundReport]) -> BoundReport {
    // ties go to the first pair in (group, H) order, as in the summary
    let best = report_rows.iter().filter(|r| !r.is_check()).filter_map(|r| r.ratio.map(|x| (x, r))).fold(
        None::<(f64, &BoundReport)>,
        |acc, (x, r)| match acc {
            Some((m, b)) if m > x || (m == x && (&b.group, &b.h) <= (&r.group, &r.h)) => acc,
            _ => Some((x, r)),
        },
    );
    match best {
        Some((m, r)) => {
            let ok = m.is_finite() && m <= RATIO_BASELINE + 1e-12;
            let mut row = BoundReport::check(
                "ratio",
                format!("max at {} {}", r.group, r.h),
                if ok { Verdict::Pass } else { Verdict::Fail },
                if ok { String::new() } else { format!("maximum ratio {m:.9} above baseline {RATIO_BASELINE}") },
            );
            row.ratio = Some(m);
            row
        }
        None => BoundReport::check("ratio", "no pairs", Verdict::Skip, ""),
    }
}

/// Builds every entry and runs `suite`. Entries are processed in parallel;
/// the report does not depend on scheduling.
pub fn run_suite(entries: &[CatalogEntry], suite: Suite, opts: &SuiteOptions) -> Report {
    let per_entry = par::map(entries, |e| -> Vec<BoundReport> {
        let g = match e.build_in(entries) {
            Ok(g) => g,
            Err(err) => return vec![error_row("build", &format!("G={}", e.name), &err)],
        };
        if opts.max_order.is_some_and(|m| g.order() > m) {
            return Vec::new();
        }
        if let Err(err) = g.require_elements() {
            return vec![error_row("build", &format!("G={}", e.name), &err)];
        }
        group_rows(&g, suite)
    });
    let mut rows: Vec<BoundReport> = per_entry.into_iter().flatten().collect();
    if has(suite, Suite::Lemmas) {
        rows.extend(power_rows());
    }
    if has(suite, Suite::Ratio) {
        let r = ratio_row(&rows);
        rows.push(r);
    }
    Report::new(&suite.to_string(), entries.len(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::catalog::parse_catalog;

    fn small() -> Vec<CatalogEntry> {
        parse_catalog(
            "{\"name\":\"C2\",\"builtin\":\"Cyclic(2)\"}\n{\"name\":\"V4\",\"builtin\":\"ElemAbelian(2,2)\"}\n{\"name\":\"S4\",\"builtin\":\"Sym(4)\"}\n{\"name\":\"A5\",\"builtin\":\"Alt(5)\"}",
        )
        .unwrap()
    }

    #[test]
    fn soluble_suite_skips_a5() {
        let r = run_suite(&small(), Suite::Soluble, &SuiteOptions::default());
        assert!(r.rows.iter().all(|x| x.group != "A5"));
        assert_eq!(r.exit_code(), 0);
        assert!(r.summary.equality_witnesses >= 2);
    }

    #[test]
    fn ratio_suite_max() {
        let r = run_suite(&small(), Suite::Ratio, &SuiteOptions::default());
        let row = r.rows.iter().find(|x| x.group == "check:ratio").unwrap();
        assert_eq!(row.ratio, Some(0.375));
        assert_eq!(row.verdict, Verdict::Pass);
    }

    #[test]
    fn max_order_filter() {
        let r = run_suite(&small(), Suite::Sotto, &SuiteOptions { max_order: Some(4) });
        assert!(r.rows.iter().all(|x| !x.group.contains("S4") && !x.h.contains("S4")));
        assert_eq!(r.exit_code(), 0, "{}", r.to_tsv());
    }
}
