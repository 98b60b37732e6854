//! max(H,G) over subgroup scopes, the soluble bound, ratios and the
//! sigma/rho split.

use std::collections::HashMap;

use crate::bitset::BitSet;
use crate::crowns::sotto_decomposition;
use crate::error::{Error, Result};
use crate::lattice::{conjugacy_classes_of_subgroups, frattini, interval, maximal_overgroups, FactorGroup, Subgroup, INTERVAL_CAP};
use crate::permcore::{core_of_subgroup, coset_action, is_soluble, orbit_partition, point_stabilizer, PermGroup};

use super::report::{BoundReport, Verdict};

/// Groups up to this order are checked against every subgroup.
pub const ALL_SUBGROUPS_MAX: usize = 100;
/// Groups up to this order are checked against one subgroup per class.
pub const CONJUGACY_SCOPE_MAX: usize = 200;
/// The sigma/rho split is computed for groups up to this order.
pub const SIGMA_RHO_MAX: usize = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    All,
    UpToConjugacy,
    PointStabilizers,
}

impl Scope {
    pub fn for_order(n: usize) -> Scope {
        if n <= ALL_SUBGROUPS_MAX {
            Scope::All
        } else if n <= CONJUGACY_SCOPE_MAX {
            Scope::UpToConjugacy
        } else {
            Scope::PointStabilizers
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScopedSubgroups {
    pub scope: Scope,
    /// Proper subgroups in scope, sorted.
    pub subgroups: Vec<Subgroup>,
    /// All maximal subgroups of `G`, when the whole lattice was walked.
    pub maximals: Option<Vec<Subgroup>>,
}

pub fn scoped_subgroups(g: &PermGroup) -> Result<ScopedSubgroups> {
    g.require_elements()?;
    let scope = Scope::for_order(g.order());
    match scope {
        Scope::All | Scope::UpToConjugacy => {
            let lat = interval(g, &Subgroup::trivial(g), INTERVAL_CAP)?;
            let proper: Vec<Subgroup> = lat.subgroups.into_iter().filter(|s| s.order() < g.order()).collect();
            let mut subgroups = if scope == Scope::All {
                proper
            } else {
                conjugacy_classes_of_subgroups(g, &proper).into_iter().map(|c| c[0].clone()).collect()
            };
            subgroups.sort();
            Ok(ScopedSubgroups { scope, subgroups, maximals: Some(lat.maximal) })
        }
        Scope::PointStabilizers => {
            let mut subgroups = Vec::new();
            for orbit in orbit_partition(g).orbits {
                let s = point_stabilizer(g, orbit[0])?;
                if s.order() < g.order() && !subgroups.contains(&s) {
                    subgroups.push(s);
                }
            }
            subgroups.sort();
            Ok(ScopedSubgroups { scope, subgroups, maximals: None })
        }
    }
}

/// Maximal subgroups of `g` containing `h`, filtered from `maximals` when
/// that list is known.
pub fn overgroups_of(g: &PermGroup, h: &Subgroup, maximals: Option<&[Subgroup]>) -> Result<Vec<Subgroup>> {
    match maximals {
        Some(ms) => Ok(ms.iter().filter(|m| h.is_subgroup_of(m)).cloned().collect()),
        None => maximal_overgroups(g, h),
    }
}

pub fn ratio(max_count: usize, index: usize) -> f64 {
    max_count as f64 / (index as f64).powf(1.5)
}

/// `H~`: the intersection of the maximal subgroups containing `h`.
pub fn h_tilde(g: &PermGroup, overs: &[Subgroup]) -> Subgroup {
    let mut bits = BitSet::full(g.order());
    for m in overs {
        bits.intersect_with(m.bits());
    }
    Subgroup::from_bits(g, bits).expect("intersection of subgroups")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaRho {
    /// Maximal overgroups of `H` containing `D`.
    pub sigma: usize,
    /// Maximal overgroups of `H` not containing `D`.
    pub rho: usize,
    /// `max(HD/D, G/D)`, computed in the factor group.
    pub sigma_quotient: usize,
    /// `|G:HD|`.
    pub hd_index: usize,
    /// `sigma <= |G:HD| - 1`, checked when the group is soluble and `HD < G`.
    pub soluble_sigma_bound: Option<bool>,
    /// Whether `H` had to be replaced by `H~` and `G` by `G/core(H~)`.
    pub reduced: bool,
    /// Generators of `D` in the (possibly reduced) group.
    pub d: Vec<Vec<usize>>,
}

/// The split for a proper subgroup `h` whose maximal overgroups are `overs`.
/// If `h` is not an intersection of maximal subgroups, is not core-free or
/// `Phi(G)` is nontrivial, the computation runs on `H~` inside `G/core(H~)`,
/// realized as the action on the cosets of `H~`.
pub fn sigma_rho(g: &PermGroup, h: &Subgroup, overs: &[Subgroup]) -> Result<SigmaRho> {
    if overs.is_empty() {
        return Err(Error::Precondition("H has no maximal overgroup".into()));
    }
    let ht = h_tilde(g, overs);
    let direct = ht == *h && core_of_subgroup(g, h)?.is_trivial() && frattini(g)?.is_trivial();
    let (q, hq) = if direct {
        (g.clone(), h.clone())
    } else {
        let hom = coset_action(g, &ht)?;
        let hq = hom.image_of_subgroup(&ht);
        let q = hom.target().clone();
        (q, hq)
    };
    if !core_of_subgroup(&q, &hq)?.is_trivial() {
        return Err(Error::Internal("reduced subgroup is not core-free".into()));
    }
    let w = sotto_decomposition(&q)?;
    let d = w.d;
    let q_overs = maximal_overgroups(&q, &hq)?;
    let sigma = q_overs.iter().filter(|m| d.is_subgroup_of(m)).count();
    let rho = q_overs.len() - sigma;
    let f = FactorGroup::new(q.clone(), &Subgroup::whole(&q), &d)?;
    let sigma_quotient = maximal_overgroups(&f, &f.image(&hq)?)?.len();
    let hd = hq.join(&q, &d);
    let hd_index = q.order() / hd.order();
    let soluble_sigma_bound = (hd_index > 1 && is_soluble(&q)?).then_some(sigma < hd_index);
    let d_gens = d.canonical_gens(&q).into_iter().map(|i| q.element(i).images()).collect();
    Ok(SigmaRho { sigma, rho, sigma_quotient, hd_index, soluble_sigma_bound, reduced: !direct, d: d_gens })
}

fn gens_of(g: &PermGroup, s: &Subgroup) -> Vec<Vec<usize>> {
    s.canonical_gens(g).into_iter().map(|i| g.element(i).images()).collect()
}

/// Rows for every subgroup in scope. The soluble bound is checked when `g`
/// is soluble; the split is added when `with_sigma_rho` holds and
/// `|G| <= SIGMA_RHO_MAX`.
pub fn pair_reports(g: &PermGroup, with_sigma_rho: bool) -> Result<Vec<BoundReport>> {
    let scoped = scoped_subgroups(g)?;
    let soluble = is_soluble(g)?;
    let split = with_sigma_rho && g.order() <= SIGMA_RHO_MAX;
    let maximals = scoped.maximals.as_deref();
    let overs: Vec<Result<Vec<Subgroup>>> = if maximals.is_some() {
        scoped.subgroups.iter().map(|h| overgroups_of(g, h, maximals)).collect()
    } else {
        crate::par::map(&scoped.subgroups, |h| overgroups_of(g, h, None))
    };
    let mut cache: HashMap<BitSet, Result<SigmaRho>> = HashMap::new();
    let mut rows = Vec::with_capacity(scoped.subgroups.len());
    for (h, overs) in scoped.subgroups.iter().zip(overs) {
        let overs = overs?;
        let index = g.order() / h.order();
        let max_count = overs.len();
        let mut verdict = if soluble {
            if max_count < index {
                Verdict::Pass
            } else {
                Verdict::Fail
            }
        } else {
            Verdict::NotApplicable
        };
        let mut note = String::new();
        if verdict == Verdict::Fail {
            note = format!("max {max_count} exceeds index - 1 = {}", index - 1);
        }
        let (mut sigma, mut rho) = (None, None);
        if split {
            let key = h_tilde(g, &overs).bits().clone();
            let sr = cache.entry(key).or_insert_with(|| sigma_rho(g, h, &overs)).clone();
            match sr {
                Ok(sr) => {
                    sigma = Some(sr.sigma);
                    rho = Some(sr.rho);
                    let mut bad = Vec::new();
                    if sr.sigma + sr.rho != max_count {
                        bad.push(format!("sigma + rho = {} but max = {max_count}", sr.sigma + sr.rho));
                    }
                    if sr.sigma != sr.sigma_quotient {
                        bad.push(format!("sigma = {} but max(HD/D, G/D) = {}", sr.sigma, sr.sigma_quotient));
                    }
                    if sr.soluble_sigma_bound == Some(false) {
                        bad.push(format!("sigma = {} exceeds |G:HD| - 1 = {}", sr.sigma, sr.hd_index - 1));
                    }
                    if !bad.is_empty() {
                        verdict = Verdict::Fail;
                        note = bad.join("; ");
                    } else if verdict == Verdict::NotApplicable {
                        verdict = Verdict::Pass;
                    }
                }
                Err(e @ Error::CapExceeded { .. }) => {
                    verdict = Verdict::Cap;
                    note = e.to_string();
                }
                Err(e) => {
                    verdict = Verdict::Error;
                    note = e.to_string();
                }
            }
        }
        rows.push(BoundReport {
            group: g.name().to_string(),
            h: h.descriptor(g),
            h_generators: gens_of(g, h),
            index: Some(index),
            max_count: Some(max_count),
            sigma,
            rho,
            ratio: Some(ratio(max_count, index)),
            soluble: Some(soluble),
            verdict,
            witnesses: overs.iter().map(|m| m.descriptor(g)).collect(),
            note,
        });
    }
    Ok(rows)
}

/// The split for a single pair, as a report row.
pub fn sigma_rho_report(g: &PermGroup, h: &Subgroup) -> Result<BoundReport> {
    let overs = maximal_overgroups(g, h)?;
    let sr = sigma_rho(g, h, &overs)?;
    let index = g.order() / h.order();
    let ok = sr.sigma + sr.rho == overs.len() && sr.sigma == sr.sigma_quotient && sr.soluble_sigma_bound != Some(false);
    Ok(BoundReport {
        group: g.name().to_string(),
        h: h.descriptor(g),
        h_generators: gens_of(g, h),
        index: Some(index),
        max_count: Some(overs.len()),
        sigma: Some(sr.sigma),
        rho: Some(sr.rho),
        ratio: Some(ratio(overs.len(), index)),
        soluble: Some(is_soluble(g)?),
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        witnesses: overs.iter().map(|m| m.descriptor(g)).collect(),
        note: if sr.reduced { "reduced".into() } else { String::new() },
    })
}
