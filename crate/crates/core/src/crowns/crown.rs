//! Crowns `R_G(A) <= I_G(A)` and the decomposition `I = R x D`.

use super::equivalence::{delta_count, factor_classes, g_equivalent};
use super::iso::{iso_search, Isomorphism};
use super::monolithic::{crown_based_power, monolithic_associated, MonolithicGroup};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::lattice::normal::{minimal_above, normal_subgroups};
use crate::lattice::{chief_series, frattini, ChiefFactor, FactorGroup, Subgroup};
use crate::par;
use crate::permcore::{FiniteGroup, PermGroup};

#[derive(Clone, Debug)]
pub struct CrownRecord {
    pub factor: ChiefFactor,
    pub delta: usize,
    pub r: Subgroup,
    pub i: Subgroup,
    pub l_a: MonolithicGroup,
    /// Normal subgroups `N` with `G/N` isomorphic to `L_A` and socle
    /// equivalent to `A`; `r` is their intersection.
    pub n_a: Vec<Subgroup>,
    /// Isomorphism `G/R -> (L_A)_delta` on quotient ids.
    pub witness: Isomorphism,
}

fn intersect_all(g: &PermGroup, subs: &[Subgroup]) -> Subgroup {
    let mut bits = BitSet::full(g.order());
    for s in subs {
        bits.intersect_with(s.bits());
    }
    Subgroup::from_bits_unchecked(g, bits)
}

pub fn compute_crown(g: &PermGroup, a: &ChiefFactor) -> Result<CrownRecord> {
    let normals = normal_subgroups(g);
    compute_crown_with(g, a, &normals)
}

pub(crate) fn compute_crown_with(g: &PermGroup, a: &ChiefFactor, normals: &[Subgroup]) -> Result<CrownRecord> {
    if !a.belongs_to(g) {
        return Err(Error::ForeignFactor);
    }
    let l = monolithic_associated(g, a)?;
    let whole = Subgroup::whole(g);
    let cands: Vec<&Subgroup> = normals.iter().filter(|n| n.order() * l.order() == g.order()).collect();
    let hits = par::map(&cands, |n| -> Result<bool> {
        let q = FactorGroup::new(g.clone(), &whole, n)?;
        if iso_search(&q, &l.group)?.is_none() {
            return Ok(false);
        }
        // G/N is monolithic; its socle pulls back to the unique normal
        // subgroup covering N.
        let cover = minimal_above(normals, n);
        if cover.len() != 1 {
            return Err(Error::Internal("quotient isomorphic to a monolithic group is not monolithic".into()));
        }
        let f = ChiefFactor::with_normals(g, &cover[0], n, normals)?;
        g_equivalent(g, a, &f)
    });
    let mut n_a = Vec::new();
    for (n, hit) in cands.into_iter().zip(hits) {
        if hit? {
            n_a.push(n.clone());
        }
    }
    if n_a.is_empty() {
        return Err(Error::EmptyCrown);
    }
    let r = intersect_all(g, &n_a);
    let mut i = r.clone();
    for m in minimal_above(normals, &r) {
        i = i.join(g, &m);
    }
    let delta = delta_count(g, a)?;
    let q = FactorGroup::new(g.clone(), &whole, &r)?;
    let power = crown_based_power(&l, delta)?;
    power.require_elements()?;
    let witness = iso_search(&q, &power)?
        .ok_or_else(|| Error::Internal(format!("G/R is not isomorphic to the crown-based power of degree {delta}")))?;
    Ok(CrownRecord { factor: a.clone(), delta, r, i, l_a: l, n_a, witness })
}

/// One crown per equivalence class of non-Frattini factors of the seed-0
/// chief series, classes ordered by their lowest factor.
pub fn all_crowns(g: &PermGroup) -> Result<Vec<CrownRecord>> {
    let normals = normal_subgroups(g);
    let series = chief_series(g, 0)?;
    factor_classes(g, &series)?.iter().map(|c| compute_crown_with(g, &series.factors[c[0]], &normals)).collect()
}

/// A crown `R <= I` together with a normal `D` such that `I = R x D`.
#[derive(Clone, Debug)]
pub struct SottoWitness {
    pub crown: CrownRecord,
    pub d: Subgroup,
}

/// Searches the factor classes bottom-up for a crown admitting a normal
/// complement `D` of `R` inside `I`; the first `D` in (order, bitset) order
/// is returned. Requires trivial Frattini subgroup.
pub fn sotto_decomposition(g: &PermGroup) -> Result<SottoWitness> {
    if g.order() == 1 {
        return Err(Error::TrivialGroup);
    }
    if !frattini(g)?.is_trivial() {
        return Err(Error::Precondition(format!("{} has nontrivial Frattini subgroup", g.name())));
    }
    let normals = normal_subgroups(g);
    let series = chief_series(g, 0)?;
    for class in factor_classes(g, &series)? {
        let crown = compute_crown_with(g, &series.factors[class[0]], &normals)?;
        let d = normals.iter().find(|d| {
            !d.is_trivial()
                && d.is_subgroup_of(&crown.i)
                && d.order() * crown.r.order() == crown.i.order()
                && d.intersection(g, &crown.r).is_trivial()
        });
        if let Some(d) = d {
            return Ok(SottoWitness { d: d.clone(), crown });
        }
    }
    Err(Error::Internal(format!("no crown of {} splits as R x D", g.name())))
}

/// `|KX| = |G|` for subgroups of `g`.
pub fn supplements<G: FiniteGroup + ?Sized>(g: &G, k: &Subgroup, x: &Subgroup) -> bool {
    k.order() * x.order() == g.order() * k.bits().intersection_count(x.bits())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str, n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycles(name, n, gens).unwrap()
    }

    #[test]
    fn klein_crown() {
        let v = g("V4", 4, &["(1 2)", "(3 4)"]);
        let s = chief_series(&v, 0).unwrap();
        let c = compute_crown(&v, &s.factors[0]).unwrap();
        assert!(c.r.is_trivial());
        assert_eq!((c.i.order(), c.delta, c.n_a.len()), (4, 2, 3));
    }

    #[test]
    fn s4_crowns() {
        let s4 = g("S4", 4, &["(1 2)", "(1 2 3 4)"]);
        let s = chief_series(&s4, 0).unwrap();
        let bottom = compute_crown(&s4, &s.factors[0]).unwrap();
        assert!(bottom.r.is_trivial());
        assert_eq!((bottom.i.order(), bottom.delta), (4, 1));
        let top = compute_crown(&s4, &s.factors[2]).unwrap();
        assert_eq!((top.r.order(), top.i.order(), top.l_a.order()), (12, 24, 2));
        assert_eq!(all_crowns(&s4).unwrap().len(), 3);
    }

    #[test]
    fn frattini_factor_is_an_error() {
        let c4 = g("C4", 4, &["(1 2 3 4)"]);
        let s = chief_series(&c4, 0).unwrap();
        assert!(matches!(compute_crown(&c4, &s.factors[0]), Err(Error::FrattiniFactor)));
    }

    #[test]
    fn sotto_examples() {
        let s4 = g("S4", 4, &["(1 2)", "(1 2 3 4)"]);
        let w = sotto_decomposition(&s4).unwrap();
        assert_eq!((w.crown.r.order(), w.crown.i.order(), w.d.order()), (1, 4, 4));
        let v = g("V4", 4, &["(1 2)", "(3 4)"]);
        let w = sotto_decomposition(&v).unwrap();
        assert_eq!(w.d.order(), 4);
        let c6 = g("C6", 6, &["(1 2 3 4 5 6)"]);
        let w = sotto_decomposition(&c6).unwrap();
        assert_eq!((w.crown.factor.order(), w.crown.r.order(), w.crown.i.order(), w.d.order()), (2, 3, 6, 2));
    }
}
