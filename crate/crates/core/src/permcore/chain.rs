//! Deterministic Schreier–Sims.
//!
//! New base points are always the smallest point moved by the residue that
//! forced the extension, and Schreier generators are visited in orbit order,
//! so the chain (and hence the element indexing built on top of it) is a pure
//! function of the generator list.

use super::perm::Permutation;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Permutation>,
    pub orbit: Vec<usize>,
    pub pos: Vec<u32>,
    pub trans: Vec<Permutation>,
    pub trans_inv: Vec<Permutation>,
}

impl Level {
    fn new(base: usize, gens: Vec<Permutation>, degree: usize) -> Self {
        let mut l = Level { base, gens, orbit: Vec::new(), pos: vec![NONE; degree], trans: Vec::new(), trans_inv: Vec::new() };
        l.rebuild();
        l
    }

    fn rebuild(&mut self) {
        let degree = self.pos.len();
        self.pos.iter_mut().for_each(|p| *p = NONE);
        self.orbit = vec![self.base];
        self.pos[self.base] = 0;
        self.trans = vec![Permutation::identity(degree)];
        let mut head = 0;
        while head < self.orbit.len() {
            let beta = self.orbit[head];
            for s in &self.gens {
                let gamma = s.apply(beta);
                if self.pos[gamma] == NONE {
                    self.pos[gamma] = self.orbit.len() as u32;
                    self.orbit.push(gamma);
                    let u = self.trans[head].compose(s);
                    self.trans.push(u);
                }
            }
            head += 1;
        }
        self.trans_inv = self.trans.iter().map(Permutation::inverse).collect();
    }

    #[inline]
    pub fn position(&self, point: usize) -> Option<usize> {
        let p = self.pos[point];
        (p != NONE).then_some(p as usize)
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    pub degree: usize,
    pub levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> Self {
        let mut strong: Vec<Permutation> = Vec::new();
        for g in gens {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let mut base: Vec<usize> = Vec::new();
        for s in &strong {
            if base.iter().all(|&b| s.apply(b) == b) {
                base.push(s.first_moved().expect("non-identity"));
            }
        }
        let mut levels: Vec<Level> = base
            .iter()
            .enumerate()
            .map(|(l, &b)| {
                let fixing = strong.iter().filter(|s| base[..l].iter().all(|&c| s.apply(c) == c)).cloned().collect();
                Level::new(b, fixing, degree)
            })
            .collect();

        let mut i = levels.len() as isize - 1;
        while i >= 0 {
            let l = i as usize;
            let mut restart = None;
            'search: for oi in 0..levels[l].orbit.len() {
                let beta = levels[l].orbit[oi];
                for si in 0..levels[l].gens.len() {
                    let s = &levels[l].gens[si];
                    let gamma = s.apply(beta);
                    let gi = levels[l].position(gamma).expect("orbit closed under generators");
                    let h = levels[l].trans[oi].compose(s).compose(&levels[l].trans_inv[gi]);
                    let (res, j) = strip(&levels, h, l + 1);
                    if !res.is_identity() {
                        if j == levels.len() {
                            let b = res.first_moved().expect("non-identity");
                            levels.push(Level::new(b, Vec::new(), degree));
                        }
                        for lv in levels.iter_mut().take(j + 1).skip(l + 1) {
                            lv.gens.push(res.clone());
                            lv.rebuild();
                        }
                        restart = Some(j);
                        break 'search;
                    }
                }
            }
            match restart {
                Some(j) => i = j as isize,
                None => i -= 1,
            }
        }
        StabChain { degree, levels }
    }

    /// Product of orbit lengths, or `None` on overflow.
    pub fn order(&self) -> Option<usize> {
        self.levels.iter().try_fold(1usize, |acc, l| acc.checked_mul(l.orbit.len()))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        let (res, j) = strip(&self.levels, g.clone(), 0);
        j == self.levels.len() && res.is_identity()
    }

    /// Mixed-radix index of a group element given the images of the base
    /// points. Only meaningful for elements of the group.
    #[inline]
    pub fn index_from_base_images(&self, imgs: &mut [usize]) -> Option<usize> {
        let k = self.levels.len();
        let mut idx = 0usize;
        let mut radix = 1usize;
        for l in 0..k {
            let lv = &self.levels[l];
            let p = lv.position(imgs[l])?;
            idx += p * radix;
            radix *= lv.orbit.len();
            if p != 0 {
                let ui = &lv.trans_inv[p];
                for img in imgs.iter_mut().take(k).skip(l + 1) {
                    *img = ui.apply(*img);
                }
            }
        }
        Some(idx)
    }

    /// Orbit positions, level by level, of the element with mixed-radix index `idx`.
    pub fn digits(&self, mut idx: usize) -> Vec<usize> {
        self.levels
            .iter()
            .map(|l| {
                let d = idx % l.orbit.len();
                idx /= l.orbit.len();
                d
            })
            .collect()
    }
}

/// Sifts `h` through `levels[from..]`; returns the residue and the level at
/// which sifting stopped (`levels.len()` if it went all the way through).
pub(crate) fn strip(levels: &[Level], mut h: Permutation, from: usize) -> (Permutation, usize) {
    for (m, lv) in levels.iter().enumerate().skip(from) {
        let beta = h.apply(lv.base);
        match lv.position(beta) {
            None => return (h, m),
            Some(0) => {}
            Some(p) => h = h.compose(&lv.trans_inv[p]),
        }
    }
    (h, levels.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn symmetric_orders() {
        for n in 2..=7usize {
            let gens = vec![p("(1 2)", n), Permutation::from_images((0..n).map(|i| (i + 1) % n).collect()).unwrap()];
            let c = StabChain::new(n, &gens);
            assert_eq!(c.order(), Some((1..=n).product()));
        }
    }

    #[test]
    fn membership() {
        let c = StabChain::new(4, &[p("(1 2 3 4)", 4)]);
        assert!(c.contains(&p("(1 3)(2 4)", 4)));
        assert!(!c.contains(&p("(1 2)", 4)));
        assert!(c.contains(&Permutation::identity(4)));
    }

    #[test]
    fn trivial_group_has_empty_chain() {
        let c = StabChain::new(3, &[Permutation::identity(3)]);
        assert!(c.levels.is_empty());
        assert_eq!(c.order(), Some(1));
    }
}
