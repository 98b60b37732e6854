//! Report rows and their TSV / JSON renderings.

use std::fmt::{self, Write as _};

use serde::Serialize;

/// Value of `a'`, the sum of `u^(-3/2)` over `u >= 1`, that is `zeta(3/2)`.
pub const A_PRIME: f64 = 2.612_375_348_685_488;

/// Pinned regression baseline for the maximum of `max(H,G) / |G:H|^(3/2)`.
pub const RATIO_BASELINE: f64 = 0.375;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
    Skip,
    Cap,
    Error,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "n/a",
            Verdict::Skip => "skip",
            Verdict::Cap => "cap",
            Verdict::Error => "error",
        })
    }
}

/// One (G, H) pair, or one lemma check when `group` starts with `check:`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub group: String,
    #[serde(rename = "H")]
    pub h: String,
    /// Generators of `H` as 0-based image arrays.
    pub h_generators: Vec<Vec<usize>>,
    pub index: Option<usize>,
    pub max_count: Option<usize>,
    pub sigma: Option<usize>,
    pub rho: Option<usize>,
    pub ratio: Option<f64>,
    pub soluble: Option<bool>,
    pub verdict: Verdict,
    /// Maximal overgroups of `H`, as descriptors.
    pub witnesses: Vec<String>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub note: String,
}

impl BoundReport {
    pub fn check(kind: &str, label: impl Into<String>, verdict: Verdict, note: impl Into<String>) -> Self {
        BoundReport {
            group: format!("check:{kind}"),
            h: label.into(),
            h_generators: Vec::new(),
            index: None,
            max_count: None,
            sigma: None,
            rho: None,
            ratio: None,
            soluble: None,
            verdict,
            witnesses: Vec::new(),
            note: note.into(),
        }
    }

    pub fn is_check(&self) -> bool {
        self.group.starts_with("check:")
    }

    pub fn is_equality(&self) -> bool {
        matches!((self.max_count, self.index), (Some(m), Some(i)) if m + 1 == i)
    }

    fn tsv_line(&self) -> String {
        fn opt<T: ToString>(v: Option<T>) -> String {
            v.map_or_else(|| "-".to_string(), |x| x.to_string())
        }
        let verdict = match self.verdict {
            Verdict::Pass | Verdict::NotApplicable => self.verdict.to_string(),
            v if self.note.is_empty() => v.to_string(),
            v => format!("{v}: {}", self.note),
        };
        [
            clean(&self.group),
            clean(&self.h),
            opt(self.index),
            opt(self.max_count),
            opt(self.sigma),
            opt(self.rho),
            self.ratio.map_or_else(|| "-".to_string(), |r| format!("{r:.9}")),
            self.soluble.map_or_else(|| "-".to_string(), |s| if s { "yes".into() } else { "no".into() }),
            clean(&verdict),
        ]
        .join("\t")
    }
}

fn clean(s: &str) -> String {
    s.replace(['\t', '\n'], " ")
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Summary {
    pub pairs: usize,
    pub checks: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub capped: usize,
    pub errors: usize,
    pub equality_witnesses: usize,
    pub max_ratio: Option<f64>,
    pub max_ratio_witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub header: Vec<String>,
    pub rows: Vec<BoundReport>,
    pub summary: Summary,
}

impl Report {
    /// Sorts rows by (group, H) and folds the summary.
    pub fn new(suite: &str, entries: usize, mut rows: Vec<BoundReport>) -> Self {
        rows.sort_by(|a, b| (&a.group, &a.h).cmp(&(&b.group, &b.h)));
        let mut s = Summary::default();
        for r in &rows {
            if r.is_check() {
                s.checks += 1;
            } else {
                s.pairs += 1;
            }
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Skip | Verdict::NotApplicable => s.skipped += 1,
                Verdict::Cap => s.capped += 1,
                Verdict::Error => s.errors += 1,
            }
            if r.is_equality() {
                s.equality_witnesses += 1;
            }
            if let (Some(x), false) = (r.ratio, r.is_check()) {
                if s.max_ratio.is_none_or(|m| x > m) {
                    s.max_ratio = Some(x);
                    s.max_ratio_witness = Some(format!("{} {}", r.group, r.h));
                }
            }
        }
        let header = vec![
            "crownkit verify report".to_string(),
            format!("suite: {suite}"),
            format!("catalog entries: {entries}"),
            format!("a' = zeta(3/2) = {A_PRIME:.9}"),
            "c has no explicit value, so a = 11 c a' / (1 - 2^(-3/2)) is not computable; ratios are monitored only".to_string(),
            format!("ratio baseline: {RATIO_BASELINE}"),
        ];
        Report { suite: suite.to_string(), header, rows, summary: s }
    }

    /// 0 when everything passed, 1 on any violation or internal error,
    /// 3 when only caps stopped some computation.
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail > 0 || self.summary.errors > 0 {
            1
        } else if self.summary.capped > 0 {
            3
        } else {
            0
        }
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for h in &self.header {
            let _ = writeln!(out, "# {h}");
        }
        out.push_str("group\tH\tindex\tmax_count\tsigma\trho\tratio\tsoluble\tverdict\n");
        for r in &self.rows {
            out.push_str(&r.tsv_line());
            out.push('\n');
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "# summary: pairs={} checks={} pass={} fail={} skipped={} cap={} error={} equality={}",
            s.pairs, s.checks, s.pass, s.fail, s.skipped, s.capped, s.errors, s.equality_witnesses
        );
        if let (Some(m), Some(w)) = (s.max_ratio, &s.max_ratio_witness) {
            let _ = writeln!(out, "# max ratio: {m:.9} at {w}");
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(group: &str, h: &str, index: usize, max: usize) -> BoundReport {
        BoundReport {
            group: group.into(),
            h: h.into(),
            h_generators: Vec::new(),
            index: Some(index),
            max_count: Some(max),
            sigma: None,
            rho: None,
            ratio: Some(max as f64 / (index as f64).powf(1.5)),
            soluble: Some(true),
            verdict: Verdict::Pass,
            witnesses: Vec::new(),
            note: String::new(),
        }
    }

    #[test]
    fn rows_sorted_and_summarized() {
        let rows = vec![pair("V4", "<>", 4, 3), pair("C2", "<>", 2, 1), BoundReport::check("x", "y", Verdict::Fail, "bad")];
        let r = Report::new("all", 2, rows);
        assert_eq!(r.rows[0].group, "C2");
        assert_eq!(r.summary.equality_witnesses, 2);
        assert_eq!(r.summary.max_ratio, Some(0.375));
        assert_eq!(r.exit_code(), 1);
        let tsv = r.to_tsv();
        assert!(tsv.contains("V4\t<>\t4\t3\t-\t-\t0.375000000\tyes\tpass\n"));
        assert!(tsv.contains("check:x\ty\t-\t-\t-\t-\t-\t-\tfail: bad\n"));
        assert!(r.to_json().contains("\"verdict\": \"fail\""));
    }
}
