//! Acceptance run over the desk catalog. Prints one PASS/FAIL line per
//! criterion and exits nonzero if any fails.

use std::collections::HashSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use crownkit::blocks::maximal_block_systems;
use crownkit::crowns::{all_crowns, crown_based_power, delta_count_seeded, factor_classes, MonolithicGroup};
use crownkit::lattice::{chief_series, maximal_overgroups, normal_subgroups, FactorGroup, Subgroup};
use crownkit::par;
use crownkit::permcore::{is_soluble, orbit_partition, point_stabilizer, FiniteGroup};
use crownkit::verify::lemmas::{check_lemma_crown_socle, check_lemma_normal_dichotomy, power_socle};
use crownkit::verify::{builtin, desk_catalog, pair_reports, run_suite, BoundReport, Suite, SuiteOptions, Verdict, RATIO_BASELINE};
use crownkit::PermGroup;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn desk() -> Vec<PermGroup> {
    let entries = desk_catalog().expect("desk catalog parses");
    entries.iter().map(|e| e.build_in(&entries).expect("desk entry builds")).collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn soluble_bound(groups: &[PermGroup]) -> Outcome {
    let start = Instant::now();
    let (pairs, equalities) = par::with_jobs(1, || -> Result<(usize, Vec<String>), String> {
        let mut pairs = 0;
        let mut equalities = Vec::new();
        for g in groups.iter().filter(|g| is_soluble(g).unwrap()) {
            let rows = pair_reports(g, false).map_err(|e| format!("{}: {e}", g.name()))?;
            for r in &rows {
                let (m, i) = (r.max_count.unwrap(), r.index.unwrap());
                ensure(m < i, || format!("{} H={} max {m} index {i}", g.name(), r.h))?;
                if m + 1 == i {
                    equalities.push(format!("{} {}", g.name(), r.h));
                }
            }
            pairs += rows.len();
            // transitive constructions of degree <= 8 with H = G_0
            if g.degree() <= 8 && orbit_partition(g).is_transitive {
                let stab = point_stabilizer(g, 0).unwrap();
                let m = maximal_overgroups(g, &stab).unwrap().len();
                ensure(m < g.degree(), || format!("{} point stabilizer: max {m} degree {}", g.name(), g.degree()))?;
                pairs += 1;
            }
        }
        Ok((pairs, equalities))
    })?;
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    for w in ["C2 <>", "E2^2 <>"] {
        ensure(equalities.iter().any(|e| e == w), || format!("missing equality witness {w}"))?;
    }
    Ok(format!("{pairs} pairs, {} equalities, 0 violations, {:.1}s on one worker", equalities.len(), elapsed.as_secs_f64()))
}

fn ratio(entries_report: &crownkit::verify::Report) -> Outcome {
    let max = entries_report.summary.max_ratio.ok_or("no ratios")?;
    ensure(max.is_finite() && max <= RATIO_BASELINE + 1e-12, || format!("max ratio {max}"))?;
    let spot = |group: &str, h: &str| -> Result<f64, String> {
        entries_report.rows.iter().find(|r| r.group == group && r.h == h).and_then(|r| r.ratio).ok_or(format!("no row {group} {h}"))
    };
    let s4 = spot("S4", "<>")?;
    let v4 = spot("E2^2", "<>")?;
    // S4 has 8 maximal subgroups, V4 has 3
    let (want_s4, want_v4) = (8.0 / 24f64.powf(1.5), 3.0 / 4f64.powf(1.5));
    ensure((s4 - want_s4).abs() < 1e-6 && (v4 - want_v4).abs() < 1e-6, || format!("spot values {s4} {v4}"))?;
    Ok(format!("max {max:.9} <= {RATIO_BASELINE}, S4 {s4:.6}, C2xC2 {v4:.6}"))
}

/// Restricted growth strings of length `n`.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let top = cur.iter().max().map_or(0, |m| m + 1);
        for v in 0..=top {
            cur.push(v);
            go(n, cur, out);
            cur.pop();
        }
    }
    go(n, &mut cur, &mut out);
    out
}

fn preserved(g: &PermGroup, labels: &[usize]) -> bool {
    let n = labels.len();
    g.generators().iter().all(|s| (0..n).all(|x| (0..n).all(|y| labels[x] != labels[y] || labels[s.apply(x)] == labels[s.apply(y)])))
}

fn block_correspondence(groups: &[PermGroup]) -> Outcome {
    let start = Instant::now();
    let bell: Vec<usize> = (1..=7).map(|n| partitions(n).len()).collect();
    ensure(bell == [1, 2, 5, 15, 52, 203, 877], || format!("partition counts {bell:?}"))?;
    let mut checked = 0;
    for g in groups.iter().filter(|g| g.degree() <= 7 && orbit_partition(g).is_transitive) {
        let n = g.degree();
        let systems: Vec<Vec<usize>> = partitions(n).into_iter().filter(|p| p.iter().any(|&b| b > 0) && preserved(g, p)).collect();
        let refines = |p: &[usize], q: &[usize]| (0..n).all(|x| (0..n).all(|y| p[x] != p[y] || q[x] == q[y]));
        let oracle = systems.iter().filter(|p| !systems.iter().any(|q| q != *p && refines(p, q))).count();
        let ours = maximal_block_systems(g, 0, false).map_err(|e| e.to_string())?.len();
        ensure(ours == oracle, || format!("{}: {ours} systems, oracle {oracle}", g.name()))?;
        checked += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{checked} transitive groups of degree <= 7 match, {:.2}s", elapsed.as_secs_f64()))
}

fn crown_socle() -> Outcome {
    let a5 = MonolithicGroup::new(builtin("Alt(5)").unwrap()).unwrap();
    let mut count = 0;
    for k in 1..=2u32 {
        let rows = check_lemma_crown_socle(&a5, k as usize, 24, 0).map_err(|e| e.to_string())?;
        for r in &rows {
            ensure(r.verdict != Verdict::Fail && r.verdict != Verdict::Error, || format!("{}: {}", r.h, r.note))?;
            let idx = r.index.unwrap();
            if r.verdict == Verdict::Pass {
                ensure(idx >= 5usize.pow(k), || format!("{} index {idx}", r.h))?;
                count += 1;
            }
            // equality only for point stabilizer products: a common fixed
            // point in each block of 5
            if idx == 5usize.pow(k) {
                let fixes = (0..k as usize).all(|c| (5 * c..5 * c + 5).any(|x| r.h_generators.iter().all(|g| g[x] == x)));
                ensure(fixes, || format!("equality for {}", r.h))?;
            }
        }
        let stab = rows.iter().find(|r| r.h.contains("stabilizers")).ok_or("no stabilizer sample")?;
        ensure(stab.index == Some(5usize.pow(k)) && stab.verdict == Verdict::Pass, || format!("A4^{k} row {stab:?}"))?;
    }
    Ok(format!("{count} core-free samples, A4 and A4^2 attain 5 and 25"))
}

fn dichotomy() -> Outcome {
    let mut details = Vec::new();
    for (name, expr, order) in [("S4", "Sym(4)", 96), ("A5", "Alt(5)", 3600)] {
        let l = MonolithicGroup::new(builtin(expr).unwrap()).unwrap();
        let row = check_lemma_normal_dichotomy(&l, 2).map_err(|e| e.to_string())?;
        ensure(row.verdict == Verdict::Pass, || format!("{name}: {}", row.note))?;
        let lk = crown_based_power(&l, 2).unwrap();
        ensure(lk.order() == order, || format!("({name})_2 has order {}", lk.order()))?;
        let nk = power_socle(&l, &lk, 2).unwrap();
        let normals = normal_subgroups(&lk);
        for m in &normals {
            // normality by conjugating every member by every generator
            let ok = m.members().iter().all(|&x| lk.generator_indices().iter().all(|&s| m.contains(lk.conj(x, s))));
            ensure(ok, || format!("{name}: listed subgroup not normal"))?;
            ensure(m.is_subgroup_of(&nk) || nk.is_subgroup_of(m), || format!("{name}: {}", m.descriptor(&lk)))?;
        }
        details.push(format!("({name})_2 order {order}: {} normals", normals.len()));
    }
    Ok(details.join(", "))
}

/// `map` is a bijective homomorphism, checked on all pairs.
fn is_iso<A: FiniteGroup, B: FiniteGroup>(a: &A, b: &B, map: &[u32]) -> bool {
    let n = a.order();
    if b.order() != n || map.len() != n || map.iter().copied().collect::<HashSet<_>>().len() != n {
        return false;
    }
    (0..n).all(|x| (0..n).all(|y| map[a.mul(x, y)] as usize == b.mul(map[x] as usize, map[y] as usize)))
}

fn crown_reconstruction(groups: &[PermGroup]) -> Outcome {
    let mut classes = 0;
    let mut n_groups = 0;
    for g in groups.iter().filter(|g| g.order() > 1 && g.order() <= 100) {
        let crowns = all_crowns(g).map_err(|e| format!("{}: {e}", g.name()))?;
        let series = chief_series(g, 0).unwrap();
        let expected = factor_classes(g, &series).unwrap().len();
        ensure(crowns.len() == expected, || format!("{}: {} crowns for {expected} classes", g.name(), crowns.len()))?;
        for c in &crowns {
            let q = FactorGroup::new(g.clone(), &Subgroup::whole(g), &c.r).unwrap();
            let power = crown_based_power(&c.l_a, c.delta).unwrap();
            ensure(is_iso(&q, &power, &c.witness.map), || {
                format!("{}: witness for {}/{}", g.name(), c.factor.upper.order(), c.factor.lower.order())
            })?;
        }
        classes += crowns.len();
        n_groups += 1;
    }
    Ok(format!("{classes} factor classes over {n_groups} groups reconstructed"))
}

fn delta_invariance(groups: &[PermGroup]) -> Outcome {
    let mut classes = 0;
    for g in groups.iter().filter(|g| g.order() > 1 && g.order() <= 200) {
        let series = chief_series(g, 0).unwrap();
        for class in factor_classes(g, &series).unwrap() {
            let a = &series.factors[class[0]];
            let d: Vec<usize> = (0..4).map(|s| delta_count_seeded(g, a, s).unwrap()).collect();
            ensure(d.iter().all(|&x| x == class.len()), || format!("{}: deltas {d:?}, class size {}", g.name(), class.len()))?;
            classes += 1;
        }
    }
    Ok(format!("{classes} classes agree across seeds 0..3"))
}

fn sigma_rho(groups: &[PermGroup], report: &crownkit::verify::Report) -> Outcome {
    let split: Vec<&BoundReport> = report.rows.iter().filter(|r| r.sigma.is_some()).collect();
    for r in &split {
        ensure(r.sigma.unwrap() + r.rho.unwrap() == r.max_count.unwrap(), || format!("{} {}", r.group, r.h))?;
        ensure(r.verdict == Verdict::Pass, || format!("{} {}: {}", r.group, r.h, r.note))?;
    }
    let bad: Vec<&BoundReport> =
        report.rows.iter().filter(|r| matches!(r.verdict, Verdict::Fail | Verdict::Error | Verdict::Cap)).collect();
    ensure(bad.is_empty(), || format!("{} failing rows, first {} {}: {}", bad.len(), bad[0].group, bad[0].h, bad[0].note))?;
    let find = |g: &str, h: &str| report.rows.iter().find(|r| r.group == g && r.h == h).map(|r| (r.sigma, r.rho));
    ensure(find("E2^2", "<>") == Some((Some(0), Some(3))), || format!("C2xC2 split {:?}", find("E2^2", "<>")))?;
    ensure(find("S4", "<>") == Some((Some(4), Some(4))), || format!("S4 split {:?}", find("S4", "<>")))?;
    let mut sotto = 0;
    for g in groups.iter().filter(|g| g.order() > 1 && g.order() <= 100) {
        let maxes = maximal_overgroups(g, &Subgroup::trivial(g)).unwrap();
        let phi = (0..g.order()).filter(|&x| maxes.iter().all(|m| m.contains(x))).count();
        if phi != 1 {
            continue;
        }
        let label = format!("G={} ", g.name());
        let row = report.rows.iter().find(|r| r.group == "check:sotto" && r.h.starts_with(&label));
        ensure(row.is_some_and(|r| r.verdict == Verdict::Pass), || format!("no sotto witness for {}", g.name()))?;
        sotto += 1;
    }
    Ok(format!("{} split pairs, {sotto} Frattini-free groups with witnesses", split.len()))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_crownkit");
    let catalog = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("catalog/desk.jsonl");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for (i, jobs) in [(0, None), (1, None), (2, Some("2"))] {
        let out = dir.path().join(format!("run{i}.tsv"));
        let mut cmd = Command::new(bin);
        cmd.args(["verify", "--suite", "all", "--catalog"]).arg(&catalog).arg("--out").arg(&out);
        if let Some(j) = jobs {
            cmd.args(["--jobs", j]);
        }
        let status = cmd.output().map_err(|e| e.to_string())?;
        ensure(status.status.code() == Some(0), || {
            format!("run {i} exited {:?}: {}", status.status.code(), String::from_utf8_lossy(&status.stderr))
        })?;
        outputs.push(std::fs::read(&out).map_err(|e| e.to_string())?);
    }
    ensure(outputs[0] == outputs[1], || "consecutive reports differ".into())?;
    ensure(outputs[0] == outputs[2], || "report depends on the worker count".into())?;
    Ok(format!("two consecutive runs and a 2-worker run, {} identical bytes", outputs[0].len()))
}

fn main() {
    let groups = desk();
    let entries = desk_catalog().unwrap();
    let ratio_report = run_suite(&entries, Suite::Ratio, &SuiteOptions::default());
    let sotto_report = run_suite(&entries, Suite::Sotto, &SuiteOptions::default());
    let criteria: Vec<Criterion> = vec![
        ("soluble bound max(H,G) <= |G:H| - 1", Box::new(|| soluble_bound(&groups))),
        ("ratio max(H,G)/|G:H|^(3/2) against baseline and spot values", Box::new(|| ratio(&ratio_report))),
        ("maximal block systems against partition enumeration", Box::new(|| block_correspondence(&groups))),
        ("|N^k:H'| >= 5^k for L = A5", Box::new(crown_socle)),
        ("normal subgroups of L_k lie in or contain N^k", Box::new(dichotomy)),
        ("G/R isomorphic to (L_A)_delta", Box::new(|| crown_reconstruction(&groups))),
        ("delta independent of the chief series", Box::new(|| delta_invariance(&groups))),
        ("sigma + rho = max(H,G) and complement witnesses", Box::new(|| sigma_rho(&groups, &sotto_report))),
        ("byte-identical verify reports", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
