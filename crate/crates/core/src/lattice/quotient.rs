//! Section groups `X/Y` realized on coset ids.
//!
//! Element `a` of the quotient is the coset `Y r_a`, where `r_a` is the
//! smallest-index member of the coset; id 0 is `Y` itself.

use super::subgroup::Subgroup;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::permcore::FiniteGroup;

const TABLE_MAX: usize = 1024;

#[derive(Clone, Debug)]
pub struct FactorGroup<P> {
    parent: P,
    upper: Subgroup,
    lower: Subgroup,
    coset_of: Vec<u32>,
    reps: Vec<usize>,
    inverse: Vec<u32>,
    table: Option<Vec<u32>>,
    gens: Vec<usize>,
}

const OUTSIDE: u32 = u32::MAX;

impl<P: FiniteGroup> FactorGroup<P> {
    /// `upper / lower`; `lower` must be normal in `upper`.
    pub fn new(parent: P, upper: &Subgroup, lower: &Subgroup) -> Result<Self> {
        let n = parent.order();
        if upper.bits().len() != n || lower.bits().len() != n {
            return Err(Error::NotSubgroup("handle belongs to a different group".into()));
        }
        if !lower.is_subgroup_of(upper) {
            return Err(Error::Precondition("lower term is not contained in the upper term".into()));
        }
        if !lower.gens().iter().all(|&a| upper.gens().iter().all(|&s| lower.contains(parent.conj(a, s)))) {
            return Err(Error::Precondition("lower term is not normal in the upper term".into()));
        }
        let low = lower.members();
        let mut coset_of = vec![OUTSIDE; n];
        let mut reps = Vec::new();
        for x in upper.bits().iter() {
            if coset_of[x] != OUTSIDE {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &y in &low {
                coset_of[parent.mul(y, x)] = c;
            }
        }
        let m = reps.len();
        let inverse = reps.iter().map(|&r| coset_of[parent.inv(r)]).collect();
        let table = (m <= TABLE_MAX).then(|| {
            let mut t = vec![0u32; m * m];
            for a in 0..m {
                for b in 0..m {
                    t[a * m + b] = coset_of[parent.mul(reps[a], reps[b])];
                }
            }
            t
        });
        let mut gens: Vec<usize> = Vec::new();
        for &s in upper.gens() {
            let c = coset_of[s] as usize;
            if c != 0 && !gens.contains(&c) {
                gens.push(c);
            }
        }
        Ok(FactorGroup { parent, upper: upper.clone(), lower: lower.clone(), coset_of, reps, inverse, table, gens })
    }

    pub fn parent(&self) -> &P {
        &self.parent
    }

    pub fn upper(&self) -> &Subgroup {
        &self.upper
    }

    pub fn lower(&self) -> &Subgroup {
        &self.lower
    }

    /// Coset id of a parent element, `None` outside the upper term.
    pub fn project(&self, x: usize) -> Option<usize> {
        let c = self.coset_of[x];
        (c != OUTSIDE).then_some(c as usize)
    }

    /// Canonical parent representative of coset `a`.
    pub fn lift(&self, a: usize) -> usize {
        self.reps[a]
    }

    /// Image of a parent subgroup contained in the upper term.
    pub fn image(&self, s: &Subgroup) -> Result<Subgroup> {
        if !s.is_subgroup_of(&self.upper) {
            return Err(Error::Precondition("subgroup is not inside the upper term".into()));
        }
        let bits = BitSet::from_indices(self.order(), s.bits().iter().map(|x| self.coset_of[x] as usize));
        Ok(Subgroup::from_bits_unchecked(self, bits))
    }

    /// Full preimage in the parent of a subgroup of the quotient.
    pub fn preimage(&self, t: &Subgroup) -> Subgroup {
        let bits = BitSet::from_indices(self.parent.order(), self.upper.bits().iter().filter(|&x| t.contains(self.coset_of[x] as usize)));
        Subgroup::from_bits_unchecked(&self.parent, bits)
    }

    /// Conjugation action of a parent element normalizing both terms.
    pub fn conj_by_parent(&self, a: usize, g: usize) -> usize {
        self.coset_of[self.parent.conj(self.reps[a], g)] as usize
    }
}

impl<P: FiniteGroup> FiniteGroup for FactorGroup<P> {
    fn order(&self) -> usize {
        self.reps.len()
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.reps.len() + b] as usize,
            None => self.coset_of[self.parent.mul(self.reps[a], self.reps[b])] as usize,
        }
    }

    #[inline]
    fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    fn generator_ids(&self) -> Vec<usize> {
        self.gens.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::subgroup::generated;
    use crate::permcore::{PermGroup, Permutation};

    fn idx(g: &PermGroup, c: &str) -> usize {
        g.index_of(&Permutation::parse_cycles(c, g.degree()).unwrap()).unwrap()
    }

    #[test]
    fn s4_mod_v4_is_s3() {
        let g = PermGroup::from_cycles("S4", 4, &["(1 2)", "(1 2 3 4)"]).unwrap();
        let v = generated(&g, &[idx(&g, "(1 2)(3 4)"), idx(&g, "(1 3)(2 4)")]);
        let q = FactorGroup::new(g.clone(), &Subgroup::whole(&g), &v).unwrap();
        assert_eq!(q.order(), 6);
        let orders: Vec<usize> = (0..6).map(|a| q.element_order(a)).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 3);
        assert_eq!(q.preimage(&Subgroup::trivial(&q)), v);
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(q.project(g.mul(q.lift(a), q.lift(b))), Some(q.mul(a, b)));
            }
        }
    }

    #[test]
    fn rejects_non_normal_lower_term() {
        let g = PermGroup::from_cycles("S3", 3, &["(1 2)", "(1 2 3)"]).unwrap();
        let t = generated(&g, &[idx(&g, "(1 2)")]);
        assert!(FactorGroup::new(g.clone(), &Subgroup::whole(&g), &t).is_err());
    }
}
