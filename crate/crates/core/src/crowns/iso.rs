//! Isomorphism search between small abstract groups.
//!
//! Invariants first (order, abelianization, histogram of element order and
//! class size), then a backtrack over images of a generating set chosen from
//! the rarest signatures. Every partial assignment is checked by walking the
//! Cayley graph of the subgroup generated so far.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::lattice::normal::class_labels;
use crate::lattice::subgroup::{extend, generated, Subgroup};
use crate::permcore::ops::normal_closure;
use crate::permcore::FiniteGroup;

/// Largest order handled by the backtracking search.
pub const ISO_SEARCH_MAX: usize = 10_000;

const NONE: u32 = u32::MAX;

/// A bijective homomorphism, as the image id of every domain id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub map: Vec<u32>,
}

impl Isomorphism {
    pub fn apply(&self, x: usize) -> usize {
        self.map[x] as usize
    }

    pub fn inverse(&self) -> Isomorphism {
        let mut inv = vec![0u32; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Isomorphism { map: inv }
    }
}

fn signatures<G: FiniteGroup + ?Sized>(g: &G) -> Vec<(usize, usize)> {
    let (classes, label) = class_labels(g);
    (0..g.order()).map(|x| (g.element_order(x), classes[label[x] as usize].len())).collect()
}

fn abelianization_order<G: FiniteGroup + ?Sized>(g: &G) -> usize {
    let gens = g.generator_ids();
    let mut comms = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            comms.push(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
        }
    }
    g.order() / normal_closure(g, &comms).order()
}

struct Search<'a, A: ?Sized, B: ?Sized> {
    a: &'a A,
    b: &'a B,
    xs: Vec<usize>,
    cands: Vec<Vec<usize>>,
    prefix: Vec<Subgroup>,
    ys: Vec<usize>,
    map: Vec<u32>,
    used: Vec<bool>,
}

impl<A: FiniteGroup + ?Sized, B: FiniteGroup + ?Sized> Search<'_, A, B> {
    /// Extends `x_j -> y_j` (j < depth) over the Cayley graph of the prefix
    /// subgroup; false on any inconsistency or collision.
    fn consistent(&mut self, depth: usize) -> bool {
        for v in self.map.iter_mut() {
            *v = NONE;
        }
        for v in self.used.iter_mut() {
            *v = false;
        }
        self.map[0] = 0;
        self.used[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let w = queue[head];
            head += 1;
            let fw = self.map[w] as usize;
            for j in 0..depth {
                let ws = self.a.mul(w, self.xs[j]);
                let img = self.b.mul(fw, self.ys[j]) as u32;
                if self.map[ws] == NONE {
                    if self.used[img as usize] {
                        return false;
                    }
                    self.used[img as usize] = true;
                    self.map[ws] = img;
                    queue.push(ws);
                } else if self.map[ws] != img {
                    return false;
                }
            }
        }
        debug_assert_eq!(queue.len(), self.prefix[depth - 1].order());
        true
    }

    fn run(&mut self, depth: usize, visit: &mut dyn FnMut(&[u32]) -> ControlFlow<()>) -> ControlFlow<()> {
        if depth == self.xs.len() {
            return visit(&self.map);
        }
        for ci in 0..self.cands[depth].len() {
            let y = self.cands[depth][ci];
            let ok = (0..depth)
                .all(|j| self.a.element_order(self.a.mul(self.xs[depth], self.xs[j])) == self.b.element_order(self.b.mul(y, self.ys[j])));
            if !ok {
                continue;
            }
            self.ys.push(y);
            if self.consistent(depth + 1) {
                self.run(depth + 1, visit)?;
            }
            self.ys.pop();
        }
        ControlFlow::Continue(())
    }
}

/// Calls `visit` with the full map of every isomorphism `a -> b` (in a
/// deterministic order) until it breaks.
pub fn for_each_isomorphism<A, B>(a: &A, b: &B, visit: &mut dyn FnMut(&[u32]) -> ControlFlow<()>) -> Result<()>
where
    A: FiniteGroup + ?Sized,
    B: FiniteGroup + ?Sized,
{
    let n = a.order();
    if n != b.order() {
        return Ok(());
    }
    if n > ISO_SEARCH_MAX {
        return Err(Error::cap("isomorphism search", format!("groups of order {n}")));
    }
    let sa = signatures(a);
    let sb = signatures(b);
    let mut ha = sa.clone();
    let mut hb = sb.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb || abelianization_order(a) != abelianization_order(b) {
        return Ok(());
    }
    if n == 1 {
        let _ = visit(&[0]);
        return Ok(());
    }
    let mut freq: HashMap<(usize, usize), usize> = HashMap::new();
    for s in &sa {
        *freq.entry(*s).or_default() += 1;
    }
    let mut order: Vec<usize> = (1..n).collect();
    order.sort_by_key(|&x| (freq[&sa[x]], std::cmp::Reverse(sa[x].0), x));
    let mut xs = Vec::new();
    let mut prefix = Vec::new();
    let mut cur = generated(a, &[]);
    for x in order {
        if cur.order() == n {
            break;
        }
        if !cur.contains(x) {
            cur = extend(a, &cur, &[x], usize::MAX).expect("no limit");
            xs.push(x);
            prefix.push(cur.clone());
        }
    }
    let cands = xs.iter().map(|&x| (0..n).filter(|&y| sb[y] == sa[x]).collect()).collect();
    let mut s = Search { a, b, xs, cands, prefix, ys: Vec::new(), map: vec![NONE; n], used: vec![false; n] };
    let _ = s.run(0, visit);
    Ok(())
}

/// First isomorphism accepted by `accept`, if any.
pub fn iso_search_filtered<A, B>(a: &A, b: &B, accept: &mut dyn FnMut(&[u32]) -> bool) -> Result<Option<Isomorphism>>
where
    A: FiniteGroup + ?Sized,
    B: FiniteGroup + ?Sized,
{
    let mut found = None;
    for_each_isomorphism(a, b, &mut |m| {
        if accept(m) {
            found = Some(Isomorphism { map: m.to_vec() });
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

pub fn iso_search<A, B>(a: &A, b: &B) -> Result<Option<Isomorphism>>
where
    A: FiniteGroup + ?Sized,
    B: FiniteGroup + ?Sized,
{
    iso_search_filtered(a, b, &mut |_| true)
}

/// Checks that `map` is a bijective homomorphism on all pairs.
pub fn is_isomorphism<A, B>(a: &A, b: &B, map: &[u32]) -> bool
where
    A: FiniteGroup + ?Sized,
    B: FiniteGroup + ?Sized,
{
    let n = a.order();
    if map.len() != n || b.order() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in map {
        if std::mem::replace(&mut seen[y as usize], true) {
            return false;
        }
    }
    (0..n).all(|x| (0..n).all(|y| map[a.mul(x, y)] as usize == b.mul(map[x] as usize, map[y] as usize)))
}
