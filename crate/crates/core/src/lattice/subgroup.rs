//! Subgroups of a parent group, stored as bitsets over the parent's element
//! indexing. Two handles of the same parent are equal iff their bitsets are.

use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::permcore::{FiniteGroup, PermGroup, Permutation};

#[derive(Clone, Debug)]
pub struct Subgroup {
    bits: BitSet,
    order: usize,
    gens: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state)
    }
}

/// Ties are broken by (order, bitset) everywhere.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.cmp(&other.order).then_with(|| self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Subgroup {
    pub(crate) fn from_parts(bits: BitSet, gens: Vec<usize>) -> Self {
        let order = bits.count();
        Subgroup { bits, order, gens }
    }

    pub fn trivial<G: FiniteGroup + ?Sized>(g: &G) -> Self {
        Subgroup::from_parts(BitSet::from_indices(g.order(), [0]), Vec::new())
    }

    pub fn whole<G: FiniteGroup + ?Sized>(g: &G) -> Self {
        Subgroup::from_parts(BitSet::full(g.order()), g.generator_ids())
    }

    /// Builds a handle from a member bitset, checking closure.
    pub fn from_bits<G: FiniteGroup + ?Sized>(g: &G, bits: BitSet) -> Result<Self> {
        if bits.len() != g.order() || !bits.contains(0) {
            return Err(Error::NotSubgroup("bitset does not contain the identity".into()));
        }
        let members: Vec<usize> = bits.iter().collect();
        for &a in &members {
            if !bits.contains(g.inv(a)) {
                return Err(Error::NotSubgroup("not closed under inverses".into()));
            }
        }
        let gens = greedy_generators(g, &bits);
        for &a in &members {
            for &s in &gens {
                if !bits.contains(g.mul(a, s)) {
                    return Err(Error::NotSubgroup("not closed under products".into()));
                }
            }
        }
        Ok(Subgroup::from_parts(bits, gens))
    }

    /// Trusted constructor: `bits` must already be a subgroup.
    pub(crate) fn from_bits_unchecked<G: FiniteGroup + ?Sized>(g: &G, bits: BitSet) -> Self {
        let gens = greedy_generators(g, &bits);
        Subgroup::from_parts(bits, gens)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    /// Generator witnesses (element indices of the parent).
    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn members(&self) -> Vec<usize> {
        self.bits.iter().collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn index_in(&self, other: &Subgroup) -> usize {
        other.order / self.order
    }

    pub fn intersection<G: FiniteGroup + ?Sized>(&self, g: &G, other: &Subgroup) -> Subgroup {
        Subgroup::from_bits_unchecked(g, self.bits.intersection(&other.bits))
    }

    pub fn join<G: FiniteGroup + ?Sized>(&self, g: &G, other: &Subgroup) -> Subgroup {
        if other.is_subgroup_of(self) {
            return self.clone();
        }
        if self.is_subgroup_of(other) {
            return other.clone();
        }
        extend(g, self, &other.gens, usize::MAX).expect("no limit")
    }

    /// `self^x = x^-1 self x`.
    pub fn conjugate<G: FiniteGroup + ?Sized>(&self, g: &G, x: usize) -> Subgroup {
        let xi = g.inv(x);
        let bits = BitSet::from_indices(g.order(), self.bits.iter().map(|a| g.mul(g.mul(xi, a), x)));
        let gens = self.gens.iter().map(|&a| g.mul(g.mul(xi, a), x)).collect();
        Subgroup::from_parts(bits, gens)
    }

    pub fn is_normal_in<G: FiniteGroup + ?Sized>(&self, g: &G) -> bool {
        let ggens = g.generator_ids();
        self.gens.iter().all(|&a| ggens.iter().all(|&s| self.bits.contains(g.conj(a, s))))
    }

    /// Canonical generating set: scan members in index order, keeping each one
    /// not already in the span of those kept.
    pub fn canonical_gens<G: FiniteGroup + ?Sized>(&self, g: &G) -> Vec<usize> {
        greedy_generators(g, &self.bits)
    }

    /// `<(1 2), (3 4)>` style descriptor built from the canonical generators.
    pub fn descriptor(&self, g: &PermGroup) -> String {
        let gens: Vec<String> = self.canonical_gens(g).into_iter().map(|i| g.element(i).to_string()).collect();
        format!("<{}>", gens.join(", "))
    }

    pub fn permutations(&self, g: &PermGroup) -> Vec<Permutation> {
        self.gens.iter().map(|&i| g.element(i)).collect()
    }
}

fn greedy_generators<G: FiniteGroup + ?Sized>(g: &G, bits: &BitSet) -> Vec<usize> {
    let mut cur = Subgroup::trivial(g);
    let mut gens = Vec::new();
    for a in bits.iter() {
        if cur.order == bits.count() {
            break;
        }
        if !cur.bits.contains(a) {
            cur = extend(g, &cur, &[a], usize::MAX).expect("no limit");
            gens.push(a);
        }
    }
    gens
}

/// `<base, new>`, grown coset by coset. Returns `None` as soon as the
/// closure has more than `limit` elements.
pub(crate) fn extend<G: FiniteGroup + ?Sized>(g: &G, base: &Subgroup, new: &[usize], limit: usize) -> Option<Subgroup> {
    let fresh: Vec<usize> = new.iter().copied().filter(|&s| !base.bits.contains(s)).collect();
    if fresh.is_empty() {
        return Some(base.clone());
    }
    let base_elems = base.members();
    let mut bits = base.bits.clone();
    let mut count = base.order;
    let mut gens = base.gens.clone();
    gens.extend_from_slice(&fresh);
    let mut reps = vec![0usize];
    let mut head = 0;
    while head < reps.len() {
        let t = reps[head];
        head += 1;
        for &s in &gens {
            let ts = g.mul(t, s);
            if bits.contains(ts) {
                continue;
            }
            for &k in &base_elems {
                bits.insert(g.mul(k, ts));
            }
            count += base_elems.len();
            if count > limit {
                return None;
            }
            reps.push(ts);
        }
    }
    Some(Subgroup { bits, order: count, gens })
}

/// Smallest subgroup containing the given elements.
pub fn generated<G: FiniteGroup + ?Sized>(g: &G, elems: &[usize]) -> Subgroup {
    let mut cur = Subgroup::trivial(g);
    for &a in elems {
        if !cur.contains(a) {
            cur = extend(g, &cur, &[a], usize::MAX).expect("no limit");
        }
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> PermGroup {
        PermGroup::from_cycles("S4", 4, &["(1 2)", "(1 2 3 4)"]).unwrap()
    }

    fn idx(g: &PermGroup, c: &str) -> usize {
        g.index_of(&Permutation::parse_cycles(c, g.degree()).unwrap()).unwrap()
    }

    #[test]
    fn generated_subgroups() {
        let g = s4();
        assert_eq!(generated(&g, &[]).order(), 1);
        assert_eq!(generated(&g, &[idx(&g, "(1 2)"), idx(&g, "(3 4)")]).order(), 4);
        let a4 = generated(&g, &[idx(&g, "(1 2 3)"), idx(&g, "(2 3 4)")]);
        assert_eq!(a4.order(), 12);
        let mut with_t = a4.members();
        with_t.push(idx(&g, "(1 2)"));
        assert_eq!(generated(&g, &with_t).order(), 24);
    }

    #[test]
    fn extend_respects_limit() {
        let g = s4();
        let t = Subgroup::trivial(&g);
        assert!(extend(&g, &t, &[idx(&g, "(1 2)"), idx(&g, "(1 2 3 4)")], 12).is_none());
        assert_eq!(extend(&g, &t, &[idx(&g, "(1 2)"), idx(&g, "(1 2 3 4)")], 24).unwrap().order(), 24);
    }

    #[test]
    fn from_bits_validates() {
        let g = s4();
        let bad = BitSet::from_indices(24, [0, idx(&g, "(1 2 3)")]);
        assert!(Subgroup::from_bits(&g, bad).is_err());
        let good = generated(&g, &[idx(&g, "(1 2 3)")]);
        assert_eq!(Subgroup::from_bits(&g, good.bits().clone()).unwrap(), good);
    }

    #[test]
    fn descriptor_is_canonical() {
        let g = s4();
        let a = generated(&g, &[idx(&g, "(1 2)"), idx(&g, "(3 4)")]);
        let b = generated(&g, &[idx(&g, "(1 2)(3 4)"), idx(&g, "(3 4)")]);
        assert_eq!(a, b);
        assert_eq!(a.descriptor(&g), b.descriptor(&g));
    }
}
