//! Breadth-first search of subgroup intervals `[H, G]`.

use std::collections::HashSet;

use super::subgroup::{extend, Subgroup};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::par;
use crate::permcore::FiniteGroup;

/// Default bound on the number of distinct subgroups an interval may hold.
pub const INTERVAL_CAP: usize = 100_000;

/// All subgroups between a bottom subgroup and the whole group.
#[derive(Clone, Debug)]
pub struct Interval {
    /// Every subgroup of the interval, sorted by (order, bitset).
    pub subgroups: Vec<Subgroup>,
    /// The maximal subgroups of the group lying in the interval, same order.
    pub maximal: Vec<Subgroup>,
}

fn check_parent<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Result<()> {
    if h.bits().len() != g.order() {
        return Err(Error::NotSubgroup("handle belongs to a different group".into()));
    }
    Ok(())
}

/// Representatives `x` of the distinct subgroups `<k, x>` for `x` outside `k`,
/// paired with those subgroups. Elements of one double coset `k x k` give the
/// same extension, so one representative per double coset is tried.
fn extensions<G: FiniteGroup + ?Sized>(g: &G, k: &Subgroup) -> Vec<Subgroup> {
    let n = g.order();
    let mut marked = k.bits().clone();
    let kg = k.gens().to_vec();
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut out = Vec::new();
    let mut x = 0;
    while let Some(next) = marked.next_absent(x) {
        x = next;
        if x >= n {
            break;
        }
        let e = extend(g, k, &[x], usize::MAX).expect("no limit");
        let mut stack = vec![x];
        marked.insert(x);
        while let Some(y) = stack.pop() {
            for &s in &kg {
                for z in [g.mul(s, y), g.mul(y, s)] {
                    if marked.insert(z) {
                        stack.push(z);
                    }
                }
            }
        }
        if seen.insert(e.bits().clone()) {
            out.push(e);
        }
    }
    out
}

/// Interval `[h, G]` with at most `cap` members.
pub fn interval<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup, cap: usize) -> Result<Interval> {
    check_parent(g, h)?;
    let whole = g.order();
    let mut seen: HashSet<BitSet> = HashSet::new();
    seen.insert(h.bits().clone());
    let mut all = vec![h.clone()];
    let mut maximal = Vec::new();
    let mut frontier = vec![h.clone()];
    while !frontier.is_empty() {
        let expanded = par::map(&frontier, |k| {
            if k.order() == whole {
                return (Vec::new(), false);
            }
            let ext = extensions(g, k);
            let is_max = ext.iter().all(|e| e.order() == whole);
            (ext, is_max)
        });
        let mut next = Vec::new();
        for (k, (children, is_max)) in frontier.iter().zip(expanded) {
            if is_max {
                maximal.push(k.clone());
            }
            for c in children {
                if seen.insert(c.bits().clone()) {
                    if seen.len() > cap {
                        return Err(Error::cap(
                            "interval cap",
                            format!("more than {cap} subgroups above a subgroup of order {}", h.order()),
                        ));
                    }
                    all.push(c.clone());
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    all.sort();
    maximal.sort();
    Ok(Interval { subgroups: all, maximal })
}

/// Maximal subgroups of `g` containing `h`; their number is max(h, g).
/// For `h = g` the list is empty.
pub fn maximal_overgroups<G: FiniteGroup + ?Sized>(g: &G, h: &Subgroup) -> Result<Vec<Subgroup>> {
    Ok(interval(g, h, INTERVAL_CAP)?.maximal)
}

/// Walks elements in index order, absorbing each one that keeps the
/// subgroup proper. A single pass suffices: if `<K, x>` is proper and `x`
/// was rejected at an earlier stage `K' <= K`, then `<K', x> = G` forces
/// `<K, x> = G` too.
pub fn greedy_maximal_overgroup<G: FiniteGroup + ?Sized>(g: &G, k: &Subgroup) -> Result<Subgroup> {
    check_parent(g, k)?;
    let n = g.order();
    if k.order() == n {
        return Err(Error::Precondition("subgroup equals the whole group".into()));
    }
    let mut cur = k.clone();
    for x in 0..n {
        if cur.contains(x) {
            continue;
        }
        if let Some(e) = extend(g, &cur, &[x], n / 2) {
            cur = e;
        }
    }
    Ok(cur)
}

pub fn all_subgroups<G: FiniteGroup + ?Sized>(g: &G) -> Result<Vec<Subgroup>> {
    Ok(interval(g, &Subgroup::trivial(g), INTERVAL_CAP)?.subgroups)
}

/// Partition of `subs` into conjugacy classes; each class is sorted and the
/// classes are ordered by their first member.
pub fn conjugacy_classes_of_subgroups<G: FiniteGroup + ?Sized>(g: &G, subs: &[Subgroup]) -> Vec<Vec<Subgroup>> {
    let ggens = g.generator_ids();
    let mut done: HashSet<BitSet> = HashSet::new();
    let mut sorted = subs.to_vec();
    sorted.sort();
    let mut classes = Vec::new();
    for s in &sorted {
        if done.contains(s.bits()) {
            continue;
        }
        let mut class = vec![s.clone()];
        done.insert(s.bits().clone());
        let mut head = 0;
        while head < class.len() {
            let cur = class[head].clone();
            head += 1;
            for &x in &ggens {
                let c = cur.conjugate(g, x);
                if done.insert(c.bits().clone()) {
                    class.push(c);
                }
            }
        }
        class.sort();
        classes.push(class);
    }
    classes
}

/// Intersection of all maximal subgroups.
pub fn frattini<G: FiniteGroup + ?Sized>(g: &G) -> Result<Subgroup> {
    let maxes = maximal_overgroups(g, &Subgroup::trivial(g))?;
    let mut bits = BitSet::full(g.order());
    for m in &maxes {
        bits.intersect_with(m.bits());
    }
    Ok(Subgroup::from_bits_unchecked(g, bits))
}
