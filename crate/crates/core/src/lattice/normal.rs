//! Conjugacy classes, normal subgroups, minimal normal subgroups, socle.

use std::collections::HashSet;

use super::subgroup::{extend, Subgroup};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::par;
use crate::permcore::ops::normal_closure;
use crate::permcore::FiniteGroup;

/// Conjugacy classes, each sorted, ordered by smallest member (so the class
/// of the identity comes first).
pub fn conjugacy_classes<G: FiniteGroup + ?Sized>(g: &G) -> Vec<Vec<usize>> {
    let n = g.order();
    let gens = g.generator_ids();
    let mut done = BitSet::new(n);
    let mut out = Vec::new();
    for x in 0..n {
        if !done.insert(x) {
            continue;
        }
        let mut class = vec![x];
        let mut head = 0;
        while head < class.len() {
            let y = class[head];
            head += 1;
            for &s in &gens {
                let z = g.conj(y, s);
                if done.insert(z) {
                    class.push(z);
                }
            }
        }
        class.sort_unstable();
        out.push(class);
    }
    out
}

/// Class id of every element, following [`conjugacy_classes`].
pub fn class_labels<G: FiniteGroup + ?Sized>(g: &G) -> (Vec<Vec<usize>>, Vec<u32>) {
    let classes = conjugacy_classes(g);
    let mut label = vec![0u32; g.order()];
    for (c, class) in classes.iter().enumerate() {
        for &x in class {
            label[x] = c as u32;
        }
    }
    (classes, label)
}

/// All normal subgroups sorted by (order, bitset): normal closures of single
/// classes, closed under joins.
pub fn normal_subgroups<G: FiniteGroup + ?Sized>(g: &G) -> Vec<Subgroup> {
    let classes = conjugacy_classes(g);
    let closures = par::map(&classes[1..], |c| normal_closure(g, &c[..1]));
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut atoms: Vec<Subgroup> = Vec::new();
    for c in closures {
        if seen.insert(c.bits().clone()) {
            atoms.push(c);
        }
    }
    let triv = Subgroup::trivial(g);
    seen.insert(triv.bits().clone());
    let mut all: Vec<Subgroup> = std::iter::once(triv).chain(atoms.iter().cloned()).collect();
    let mut head = 1;
    while head < all.len() {
        let cur = all[head].clone();
        head += 1;
        for a in &atoms {
            if a.is_subgroup_of(&cur) {
                continue;
            }
            let j = extend(g, &cur, a.gens(), usize::MAX).expect("no limit");
            if seen.insert(j.bits().clone()) {
                all.push(j);
            }
        }
    }
    all.sort();
    all
}

/// Members of `normals` minimal among those strictly containing `below`.
pub fn minimal_above(normals: &[Subgroup], below: &Subgroup) -> Vec<Subgroup> {
    let above: Vec<&Subgroup> = normals.iter().filter(|n| below.is_subgroup_of(n) && n.order() > below.order()).collect();
    above.iter().filter(|n| !above.iter().any(|m| m.order() < n.order() && m.is_subgroup_of(n))).map(|n| (*n).clone()).collect()
}

pub fn minimal_normal_subgroups<G: FiniteGroup + ?Sized>(g: &G) -> Result<Vec<Subgroup>> {
    if g.order() == 1 {
        return Err(Error::TrivialGroup);
    }
    Ok(minimal_above(&normal_subgroups(g), &Subgroup::trivial(g)))
}

pub fn socle<G: FiniteGroup + ?Sized>(g: &G) -> Result<Subgroup> {
    let mins = minimal_normal_subgroups(g)?;
    Ok(mins.iter().skip(1).fold(mins[0].clone(), |acc, m| acc.join(g, m)))
}
