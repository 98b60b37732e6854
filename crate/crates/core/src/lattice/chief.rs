//! Chief factors and chief series.

use super::interval::frattini;
use super::normal::{minimal_above, normal_subgroups};
use super::quotient::FactorGroup;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};
use crate::permcore::{coset_action, FiniteGroup, PermGroup};

/// A chief factor `X/Y` of a parent group together with the conjugation
/// action of the parent's generators on the quotient.
#[derive(Clone, Debug)]
pub struct ChiefFactor {
    parent: PermGroup,
    pub upper: Subgroup,
    pub lower: Subgroup,
    pub quotient: FactorGroup<PermGroup>,
    /// For each parent generator (in `generator_indices` order), the induced
    /// permutation of quotient ids.
    pub action: Vec<Vec<u32>>,
    pub is_abelian: bool,
    pub is_frattini: bool,
}

impl ChiefFactor {
    /// Validates that `upper/lower` is a chief factor of `g`.
    pub fn new(g: &PermGroup, upper: &Subgroup, lower: &Subgroup) -> Result<Self> {
        let normals = normal_subgroups(g);
        Self::with_normals(g, upper, lower, &normals)
    }

    pub(crate) fn with_normals(g: &PermGroup, upper: &Subgroup, lower: &Subgroup, normals: &[Subgroup]) -> Result<Self> {
        g.require_elements()?;
        if upper.bits().len() != g.order() || lower.bits().len() != g.order() {
            return Err(Error::ForeignFactor);
        }
        if !normals.contains(upper) || !normals.contains(lower) {
            return Err(Error::NotChiefFactor("terms are not normal in the group".into()));
        }
        if !lower.is_subgroup_of(upper) || lower == upper {
            return Err(Error::NotChiefFactor("lower term is not properly contained in the upper term".into()));
        }
        if !minimal_above(normals, lower).contains(upper) {
            return Err(Error::NotChiefFactor("a normal subgroup lies strictly between the terms".into()));
        }
        let quotient = FactorGroup::new(g.clone(), upper, lower)?;
        let m = quotient.order();
        let action = g.generator_indices().into_iter().map(|s| (0..m).map(|a| quotient.conj_by_parent(a, s) as u32).collect()).collect();
        let ug = upper.gens();
        let is_abelian = ug.iter().all(|&a| ug.iter().all(|&b| lower.contains(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)))));
        let is_frattini = is_abelian && frattini_in_quotient(g, upper, lower)?;
        Ok(ChiefFactor { parent: g.clone(), upper: upper.clone(), lower: lower.clone(), quotient, action, is_abelian, is_frattini })
    }

    pub fn parent(&self) -> &PermGroup {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.quotient.order()
    }

    /// `(p, d)` with order `p^d` for abelian factors.
    pub fn prime_power(&self) -> Option<(usize, usize)> {
        if !self.is_abelian {
            return None;
        }
        let n = self.order();
        let p = (2..=n).find(|&d| n.is_multiple_of(d))?;
        let mut d = 0;
        let mut m = n;
        while m.is_multiple_of(p) {
            m /= p;
            d += 1;
        }
        (m == 1).then_some((p, d))
    }

    pub fn belongs_to(&self, g: &PermGroup) -> bool {
        self.parent.same_group(g)
    }
}

/// `X/Y <= Frattini(G/Y)`, evaluated in the action of `G` on the cosets of `Y`.
fn frattini_in_quotient(g: &PermGroup, upper: &Subgroup, lower: &Subgroup) -> Result<bool> {
    let hom = coset_action(g, lower)?;
    let q = hom.target();
    let x = hom.image_of_subgroup(upper);
    Ok(x.is_subgroup_of(&frattini(q)?))
}

pub fn is_frattini_factor(g: &PermGroup, f: &ChiefFactor) -> Result<bool> {
    if !f.belongs_to(g) {
        return Err(Error::ForeignFactor);
    }
    Ok(f.is_frattini)
}

#[derive(Clone, Debug)]
pub struct ChiefSeries {
    /// Bottom to top.
    pub factors: Vec<ChiefFactor>,
}

impl ChiefSeries {
    pub fn orders(&self) -> Vec<usize> {
        self.factors.iter().map(ChiefFactor::order).collect()
    }
}

/// Greedy bottom-up chief series. At each step the next term is one of the
/// minimal normal subgroups above the current one; seed 0 always takes the
/// first in (order, bitset) order, other seeds rotate the choice.
pub fn chief_series(g: &PermGroup, seed: u64) -> Result<ChiefSeries> {
    g.require_elements()?;
    let normals = normal_subgroups(g);
    let mut cur = Subgroup::trivial(g);
    let mut factors = Vec::new();
    let mut step = 0usize;
    while cur.order() < g.order() {
        let cands = minimal_above(&normals, &cur);
        let pick = if seed == 0 { 0 } else { (seed as usize).wrapping_add(step) % cands.len() };
        let next = cands[pick].clone();
        factors.push(ChiefFactor::with_normals(g, &next, &cur, &normals)?);
        cur = next;
        step += 1;
    }
    Ok(ChiefSeries { factors })
}
