//! Lemma checks on crown-based powers, crowns, chief series and block
//! systems. Each check returns report rows; `Err` only for failures that
//! prevent the check from running at all.

use std::collections::{BTreeMap, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bounds::{h_tilde, overgroups_of};
use super::report::{BoundReport, Verdict};
use crate::bitset::BitSet;
use crate::blocks::{is_block_system, maximal_block_systems, set_partitions, BlockSystem};
use crate::crowns::crown::supplements;
use crate::crowns::equivalence::delta_in_series;
use crate::crowns::{
    all_crowns, crown_based_power, delta_count_seeded, factor_classes, is_isomorphism, sotto_decomposition, MonolithicGroup,
};
use crate::error::{Error, Result};
use crate::lattice::{
    all_subgroups, chief_series, frattini, generated, greedy_maximal_overgroup, interval, maximal_overgroups, minimal_normal_subgroups,
    normal_subgroups, FactorGroup, Subgroup, INTERVAL_CAP,
};
use crate::permcore::{core_of_subgroup, indices_of, orbit_partition, point_stabilizer, PermGroup, Permutation};

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

/// Row for an error raised while running a check.
pub fn error_row(kind: &str, label: &str, e: &Error) -> BoundReport {
    let v = if matches!(e, Error::CapExceeded { .. }) { Verdict::Cap } else { Verdict::Error };
    BoundReport::check(kind, label, v, e.to_string())
}

/// `N^k`, the socle of `L_k`: the socle of `L` in every coordinate.
pub fn power_socle(l: &MonolithicGroup, lk: &PermGroup, k: usize) -> Result<Subgroup> {
    let n = l.group.degree();
    let gens: Vec<Permutation> =
        (0..k).flat_map(|c| l.socle.permutations(&l.group).into_iter().map(move |p| p.shifted(c * n, n * k))).collect();
    Ok(generated(lk, &indices_of(lk, &gens)?))
}

fn diagonal(l: &MonolithicGroup, lk: &PermGroup, k: usize) -> Result<Subgroup> {
    let n = l.group.degree();
    let gens: Vec<Permutation> = l
        .socle
        .permutations(&l.group)
        .iter()
        .map(|p| Permutation::from_images((0..k).flat_map(|c| (0..n).map(move |x| c * n + p.apply(x))).collect()))
        .collect::<Result<_>>()?;
    Ok(generated(lk, &indices_of(lk, &gens)?))
}

/// `N^k` intersected with the stabilizer of the first point of every
/// coordinate.
fn stabilizer_product(l: &MonolithicGroup, lk: &PermGroup, nk: &Subgroup, k: usize) -> Result<Subgroup> {
    let n = l.group.degree();
    let mut s = nk.clone();
    for c in 0..k {
        s = s.intersection(lk, &point_stabilizer(lk, c * n)?);
    }
    Ok(s)
}

/// Sampled subgroups of `N^k`: the stabilizer product, the diagonal and
/// `samples` subgroups generated by one or two random elements.
fn socle_samples(
    l: &MonolithicGroup,
    lk: &PermGroup,
    nk: &Subgroup,
    k: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<(String, Subgroup)>> {
    let mut out = vec![("stabilizers".to_string(), stabilizer_product(l, lk, nk, k)?), ("diag".to_string(), diagonal(l, lk, k)?)];
    let members = nk.members();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for j in 0..samples {
        let count = 1 + j % 2;
        let elems: Vec<usize> = (0..count).map(|_| members[rng.gen_range(0..members.len())]).collect();
        out.push((format!("random{j}"), generated(lk, &elems)));
    }
    Ok(out)
}

/// `|N^k : H'| >= 5^k` for core-free samples `H' <= N^k` of `L_k`, `L` with
/// nonabelian socle.
pub fn check_lemma_crown_socle(l: &MonolithicGroup, k: usize, samples: usize, seed: u64) -> Result<Vec<BoundReport>> {
    if l.socle_is_abelian {
        return Err(Error::Precondition("socle is abelian".into()));
    }
    let lk = crown_based_power(l, k)?;
    lk.require_elements()?;
    let nk = power_socle(l, &lk, k)?;
    let bound = 5usize.pow(k as u32);
    let mut rows = Vec::new();
    for (name, h) in socle_samples(l, &lk, &nk, k, samples, seed)? {
        let label = format!("L={} k={k} {name} {}", l.group.name(), h.descriptor(&lk));
        let mut row = if !core_of_subgroup(&lk, &h)?.is_trivial() {
            BoundReport::check("crown_socle", label, Verdict::Skip, "sample is not core-free")
        } else {
            let index = nk.order() / h.order();
            let note = if index == bound { "equality" } else { "" };
            BoundReport::check("crown_socle", label, verdict(index >= bound), note)
        };
        row.index = Some(nk.order() / h.order());
        row.h_generators = h.permutations(&lk).iter().map(Permutation::images).collect();
        rows.push(row);
    }
    Ok(rows)
}

/// Every normal subgroup of `L_k` lies in `N^k` or contains it.
pub fn check_lemma_normal_dichotomy(l: &MonolithicGroup, k: usize) -> Result<BoundReport> {
    let lk = crown_based_power(l, k)?;
    lk.require_elements()?;
    let nk = power_socle(l, &lk, k)?;
    let normals = normal_subgroups(&lk);
    let bad: Vec<String> = normals.iter().filter(|m| !m.is_subgroup_of(&nk) && !nk.is_subgroup_of(m)).map(|m| m.descriptor(&lk)).collect();
    let label = format!("L={} k={k} order={} normals={}", l.group.name(), lk.order(), normals.len());
    let mut row = BoundReport::check("dichotomy", label, verdict(bad.is_empty()), bad.join(" "));
    row.witnesses = normals.iter().map(|m| m.descriptor(&lk)).collect();
    Ok(row)
}

/// Maximal subgroups of `L_k` grown from sampled seeds each contain at
/// least `k - 2` minimal normal subgroups.
pub fn check_case1_claim(l: &MonolithicGroup, k: usize, samples: usize, seed: u64) -> Result<BoundReport> {
    if l.socle_is_abelian {
        return Err(Error::Precondition("socle is abelian".into()));
    }
    let label = format!("L={} k={k}", l.group.name());
    let lk = match crown_based_power(l, k).and_then(|g| g.require_elements().map(|_| g)) {
        Ok(g) => g,
        Err(e @ Error::CapExceeded { .. }) => return Ok(BoundReport::check("case1", label, Verdict::Skip, e.to_string())),
        Err(e) => return Err(e),
    };
    let mins = minimal_normal_subgroups(&lk)?;
    let nk = power_socle(l, &lk, k)?;
    let mut seeds = socle_samples(l, &lk, &nk, k, samples, seed)?;
    seeds.retain(|(_, s)| s.order() < lk.order());
    let mut distribution: BTreeMap<usize, usize> = BTreeMap::new();
    let mut witnesses = Vec::new();
    let mut ok = true;
    for (_, s) in &seeds {
        let m = greedy_maximal_overgroup(&lk, s)?;
        let count = mins.iter().filter(|x| x.is_subgroup_of(&m)).count();
        *distribution.entry(count).or_default() += 1;
        ok &= count + 2 >= k;
        witnesses.push(m.descriptor(&lk));
    }
    witnesses.sort();
    witnesses.dedup();
    let dist: Vec<String> = distribution.iter().map(|(c, n)| format!("{c}:{n}")).collect();
    let mut row = BoundReport::check("case1", format!("{label} seeds={} contained={{{}}}", seeds.len(), dist.join(",")), verdict(ok), "");
    row.witnesses = witnesses;
    Ok(row)
}

/// A crown `R <= I` with `I = R x D`, and: `G = KD = KR` forces `K = G`
/// for every subgroup `K` (every subgroup up to order 100, otherwise the
/// maximal subgroups).
pub fn check_sotto_properties(g: &PermGroup) -> Result<BoundReport> {
    let w = sotto_decomposition(g)?;
    let (r, i, d) = (&w.crown.r, &w.crown.i, &w.d);
    let mut problems = Vec::new();
    if d.is_trivial() || !d.is_normal_in(g) || !d.is_subgroup_of(i) {
        problems.push("D is not a nontrivial normal subgroup of I".to_string());
    }
    if !d.intersection(g, r).is_trivial() || d.order() * r.order() != i.order() {
        problems.push("I is not the direct product of R and D".to_string());
    }
    let ks = if g.order() <= 100 { all_subgroups(g)? } else { maximal_overgroups(g, &Subgroup::trivial(g))? };
    let mut supplemented = 0;
    for k in &ks {
        if supplements(g, k, d) && supplements(g, k, r) {
            supplemented += 1;
            if k.order() != g.order() {
                problems.push(format!("{} supplements D and R", k.descriptor(g)));
            }
        }
    }
    let label = format!(
        "G={} A={}/{} R={} I={} D={} scanned={} supplements={}",
        g.name(),
        w.crown.factor.upper.order(),
        w.crown.factor.lower.order(),
        r.descriptor(g),
        i.descriptor(g),
        d.descriptor(g),
        ks.len(),
        supplemented
    );
    let mut row = BoundReport::check("sotto", label, verdict(problems.is_empty()), problems.join("; "));
    row.h_generators = d.permutations(g).iter().map(Permutation::images).collect();
    Ok(row)
}

/// `G/R` is isomorphic to `(L_A)_delta` for every class of non-Frattini
/// chief factors; the witness is rechecked as a homomorphism.
pub fn check_crown_reconstruction(g: &PermGroup) -> Result<BoundReport> {
    let crowns = all_crowns(g)?;
    let mut problems = Vec::new();
    let mut deltas = Vec::new();
    for c in &crowns {
        let q = FactorGroup::new(g.clone(), &Subgroup::whole(g), &c.r)?;
        let power = crown_based_power(&c.l_a, c.delta)?;
        if !is_isomorphism(&q, &power, &c.witness.map) {
            problems.push(format!("witness for factor {}/{} is not an isomorphism", c.factor.upper.order(), c.factor.lower.order()));
        }
        deltas.push(format!("{}^{}", c.l_a.order(), c.delta));
    }
    let label = format!("G={} crowns={} L^delta=[{}]", g.name(), crowns.len(), deltas.join(","));
    Ok(BoundReport::check("crown", label, verdict(problems.is_empty()), problems.join("; ")))
}

/// `delta` of every factor class agrees across chief series built with
/// seeds `0..seeds`.
pub fn check_delta_invariance(g: &PermGroup, seeds: u64) -> Result<BoundReport> {
    let series = chief_series(g, 0)?;
    let classes = factor_classes(g, &series)?;
    let mut problems = Vec::new();
    let mut deltas = Vec::new();
    for class in &classes {
        let a = &series.factors[class[0]];
        let d0 = delta_in_series(g, a, &series)?;
        if d0 != class.len() {
            problems.push(format!("class of size {} counted {d0}", class.len()));
        }
        for s in 1..seeds {
            let ds = delta_count_seeded(g, a, s)?;
            if ds != d0 {
                problems.push(format!("factor {}/{}: seed {s} gives {ds}, seed 0 gives {d0}", a.upper.order(), a.lower.order()));
            }
        }
        deltas.push(d0.to_string());
    }
    let label = format!("G={} seeds={seeds} deltas=[{}]", g.name(), deltas.join(","));
    Ok(BoundReport::check("delta", label, verdict(problems.is_empty()), problems.join("; ")))
}

/// `max(H,G) = max(H~,G)` with the right side from a fresh interval search,
/// and `max(H,G) = max(H/N, G/N)` for every nontrivial normal `N <= H`,
/// over all proper subgroups `H`.
pub fn check_reductions(g: &PermGroup) -> Result<BoundReport> {
    let lat = interval(g, &Subgroup::trivial(g), INTERVAL_CAP)?;
    let normals: Vec<Subgroup> = normal_subgroups(g).into_iter().filter(|n| !n.is_trivial() && n.order() < g.order()).collect();
    let whole = Subgroup::whole(g);
    let quotient_maximals: Vec<(FactorGroup<PermGroup>, Vec<Subgroup>)> = normals
        .iter()
        .map(|n| {
            let f = FactorGroup::new(g.clone(), &whole, n)?;
            let ms = maximal_overgroups(&f, &Subgroup::trivial(&f))?;
            Ok((f, ms))
        })
        .collect::<Result<_>>()?;
    let mut tilde_cache: HashMap<BitSet, usize> = HashMap::new();
    let mut problems = Vec::new();
    let (mut pairs, mut quotient_pairs) = (0, 0);
    for h in lat.subgroups.iter().filter(|h| h.order() < g.order()) {
        let overs = overgroups_of(g, h, Some(&lat.maximal))?;
        let ht = h_tilde(g, &overs);
        let mt = match tilde_cache.get(ht.bits()) {
            Some(&m) => m,
            None => {
                let m = maximal_overgroups(g, &ht)?.len();
                tilde_cache.insert(ht.bits().clone(), m);
                m
            }
        };
        pairs += 1;
        if mt != overs.len() {
            problems.push(format!("H={}: max(H~,G)={mt} but max(H,G)={}", h.descriptor(g), overs.len()));
        }
        for (n, (f, ms)) in normals.iter().zip(&quotient_maximals) {
            if !n.is_subgroup_of(h) {
                continue;
            }
            quotient_pairs += 1;
            let hn = f.image(h)?;
            let mq = ms.iter().filter(|m| hn.is_subgroup_of(m)).count();
            if mq != overs.len() {
                problems.push(format!("H={} N={}: max(H/N,G/N)={mq} but max(H,G)={}", h.descriptor(g), n.descriptor(g), overs.len()));
            }
        }
    }
    let label = format!("G={} pairs={pairs} quotient_pairs={quotient_pairs}", g.name());
    Ok(BoundReport::check("reductions", label, verdict(problems.is_empty()), problems.join("; ")))
}

/// Block systems by brute force: all set partitions preserved by `g`, then
/// those that are maximal among the systems other than the one-block system.
pub fn maximal_systems_by_partitions(g: &PermGroup) -> Result<Vec<BlockSystem>> {
    let n = g.degree();
    let mut systems = Vec::new();
    for labels in set_partitions(n) {
        let p = BlockSystem::from_labels(&labels);
        if p.blocks().len() > 1 && is_block_system(g, &p)? {
            systems.push(labels);
        }
    }
    // q is strictly coarser than p when p refines q and they differ
    let coarser = |p: &[usize], q: &[usize]| p != q && (0..n).all(|x| (0..n).all(|y| p[x] != p[y] || q[x] == q[y]));
    let mut out: Vec<BlockSystem> =
        systems.iter().filter(|p| !systems.iter().any(|q| coarser(p, q))).map(|p| BlockSystem::from_labels(p)).collect();
    out.sort();
    Ok(out)
}

/// `maximal_block_systems` agrees with the partition oracle on a transitive
/// group.
pub fn check_block_correspondence(g: &PermGroup) -> Result<BoundReport> {
    let mut ours = maximal_block_systems(g, 0, false)?;
    ours.sort();
    let oracle = maximal_systems_by_partitions(g)?;
    let stab = point_stabilizer(g, 0)?;
    let maxes = maximal_overgroups(g, &stab)?.len();
    let ok = ours == oracle && ours.len() == maxes;
    let label = format!("G={} degree={} systems={} oracle={} max(G_0,G)={maxes}", g.name(), g.degree(), ours.len(), oracle.len());
    Ok(BoundReport::check("blocks", label, verdict(ok), if ok { String::new() } else { "system lists differ".into() }))
}

pub fn is_transitive(g: &PermGroup) -> bool {
    orbit_partition(g).is_transitive
}

/// Whether `g` has trivial Frattini subgroup.
pub fn frattini_trivial(g: &PermGroup) -> Result<bool> {
    Ok(frattini(g)?.is_trivial())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::builtin::builtin;

    fn mono(expr: &str) -> MonolithicGroup {
        MonolithicGroup::new(builtin(expr).unwrap()).unwrap()
    }

    #[test]
    fn crown_socle_a5() {
        let a5 = mono("Alt(5)");
        let k1 = check_lemma_crown_socle(&a5, 1, 4, 0).unwrap();
        let stab = k1.iter().find(|r| r.h.contains("stabilizers")).unwrap();
        assert_eq!((stab.index, stab.verdict, stab.note.as_str()), (Some(5), Verdict::Pass, "equality"));
        assert!(k1.iter().any(|r| r.h.contains("diag") && r.verdict == Verdict::Skip));
        let k2 = check_lemma_crown_socle(&a5, 2, 4, 0).unwrap();
        let stab = k2.iter().find(|r| r.h.contains("stabilizers")).unwrap();
        assert_eq!((stab.index, stab.note.as_str()), (Some(25), "equality"));
        let diag = k2.iter().find(|r| r.h.contains("diag")).unwrap();
        assert_eq!((diag.index, diag.verdict), (Some(60), Verdict::Pass));
        assert!(k2.iter().all(|r| r.verdict != Verdict::Fail));
    }

    #[test]
    fn dichotomy_s4() {
        let row = check_lemma_normal_dichotomy(&mono("Sym(4)"), 2).unwrap();
        assert_eq!(row.verdict, Verdict::Pass);
        assert!(check_lemma_normal_dichotomy(&mono("Sym(4)"), 1).unwrap().verdict == Verdict::Pass);
    }

    #[test]
    fn case1_small_k() {
        let a5 = mono("Alt(5)");
        assert_eq!(check_case1_claim(&a5, 1, 3, 0).unwrap().verdict, Verdict::Pass);
        assert_eq!(check_case1_claim(&a5, 3, 3, 0).unwrap().verdict, Verdict::Skip);
    }

    #[test]
    fn sotto_c6_scans_every_subgroup() {
        let row = check_sotto_properties(&builtin("Cyclic(6)").unwrap()).unwrap();
        assert_eq!(row.verdict, Verdict::Pass);
        assert!(row.h.contains("scanned=4 "), "{}", row.h);
        assert!(row.h.contains("supplements=1"), "{}", row.h);
    }

    #[test]
    fn per_group_checks() {
        let s4 = builtin("Sym(4)").unwrap();
        assert_eq!(check_crown_reconstruction(&s4).unwrap().verdict, Verdict::Pass);
        assert_eq!(check_delta_invariance(&s4, 4).unwrap().verdict, Verdict::Pass);
        assert_eq!(check_reductions(&s4).unwrap().verdict, Verdict::Pass);
        assert_eq!(check_block_correspondence(&s4).unwrap().verdict, Verdict::Pass);
        let d8 = builtin("Dihedral(4)").unwrap();
        let b = check_block_correspondence(&d8).unwrap();
        assert_eq!(b.verdict, Verdict::Pass);
        assert!(b.h.contains("systems=1"), "{}", b.h);
    }
}
