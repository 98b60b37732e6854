//! G-isomorphism and G-equivalence of chief factors, and the count delta.

use super::iso::iso_search_filtered;
use super::linalg::{is_invertible, nullspace, Matrix};
use crate::error::{Error, Result};
use crate::lattice::{chief_series, ChiefFactor, ChiefSeries, Subgroup};
use crate::permcore::{FiniteGroup, PermGroup};

/// Sweeps over at most this many intertwiners.
pub const INTERTWINER_SWEEP_MAX: usize = 1 << 20;

/// Coordinates of an elementary abelian chief factor over `F_p` and the
/// matrices of the parent generators acting on row vectors.
#[derive(Clone, Debug)]
pub struct AbelianCoords {
    pub p: u32,
    pub dim: usize,
    /// Quotient ids of the basis vectors.
    pub basis: Vec<usize>,
    coord: Vec<Vec<u32>>,
    elem: Vec<usize>,
    /// One matrix per parent generator, `v -> v M`.
    pub matrices: Vec<Matrix>,
}

impl AbelianCoords {
    pub fn new(f: &ChiefFactor) -> Result<Self> {
        let (p, dim) = f.prime_power().ok_or_else(|| Error::Precondition("factor is not elementary abelian".into()))?;
        let q = &f.quotient;
        let basis = Subgroup::whole(q).canonical_gens(q);
        if basis.len() != dim {
            return Err(Error::Internal(format!("basis of length {} for a factor of rank {dim}", basis.len())));
        }
        let n = q.order();
        let mut coord = vec![Vec::new(); n];
        coord[0] = vec![0u32; dim];
        let mut listed = vec![0usize];
        for (i, &b) in basis.iter().enumerate() {
            let old = listed.clone();
            for &e in &old {
                let mut x = e;
                for c in 1..p {
                    x = q.mul(x, b);
                    let mut v = coord[e].clone();
                    v[i] = c as u32;
                    coord[x] = v;
                    listed.push(x);
                }
            }
        }
        let p32 = p as u32;
        let mut elem = vec![0usize; n];
        for (x, v) in coord.iter().enumerate() {
            elem[encode(v, p32)] = x;
        }
        let matrices = f.action.iter().map(|act| basis.iter().map(|&b| coord[act[b] as usize].clone()).collect()).collect();
        Ok(AbelianCoords { p: p32, dim, basis, coord, elem, matrices })
    }

    pub fn coord(&self, a: usize) -> &[u32] {
        &self.coord[a]
    }

    pub fn element(&self, v: &[u32]) -> usize {
        self.elem[encode(v, self.p)]
    }
}

/// Base-`p` integer of a coordinate vector, first coordinate least significant.
pub fn encode(v: &[u32], p: u32) -> usize {
    v.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize)
}

pub fn decode(mut x: usize, p: u32, dim: usize) -> Vec<u32> {
    (0..dim)
        .map(|_| {
            let c = (x % p as usize) as u32;
            x /= p as usize;
            c
        })
        .collect()
}

fn check_same_parent(g: &PermGroup, a: &ChiefFactor, b: &ChiefFactor) -> Result<()> {
    if a.belongs_to(g) && b.belongs_to(g) {
        Ok(())
    } else {
        Err(Error::ForeignFactor)
    }
}

/// Invertible `T` with `M_s T = T N_s` for every generator, if one exists.
fn intertwiner(ca: &AbelianCoords, cb: &AbelianCoords) -> Result<Option<Matrix>> {
    let d = ca.dim;
    let p = ca.p;
    let mut rows: Matrix = Vec::new();
    for (m, nm) in ca.matrices.iter().zip(&cb.matrices) {
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![0u32; d * d];
                for k in 0..d {
                    row[k * d + j] = (row[k * d + j] + m[i][k]) % p;
                    row[i * d + k] = (row[i * d + k] + p - nm[k][j] % p) % p;
                }
                rows.push(row);
            }
        }
    }
    let basis = nullspace(&rows, d * d, p);
    let r = basis.len();
    let total = (p as usize).checked_pow(r as u32).filter(|&t| t <= INTERTWINER_SWEEP_MAX);
    let Some(total) = total else {
        return Err(Error::cap("intertwiner sweep", format!("space of dimension {r} over F_{p}")));
    };
    for code in 1..total {
        let coeffs = decode(code, p, r);
        let mut t = vec![0u64; d * d];
        for (c, v) in coeffs.iter().zip(&basis) {
            for (ti, &vi) in t.iter_mut().zip(v) {
                *ti += *c as u64 * vi as u64;
            }
        }
        let m: Matrix = (0..d).map(|i| (0..d).map(|j| (t[i * d + j] % p as u64) as u32).collect()).collect();
        if is_invertible(&m, p) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// An isomorphism `A -> B` commuting with the conjugation action of the
/// parent exists.
pub fn g_isomorphic(g: &PermGroup, a: &ChiefFactor, b: &ChiefFactor) -> Result<bool> {
    check_same_parent(g, a, b)?;
    if a.order() != b.order() || a.is_abelian != b.is_abelian {
        return Ok(false);
    }
    if a.upper == b.upper && a.lower == b.lower {
        return Ok(true);
    }
    if a.is_abelian {
        let ca = AbelianCoords::new(a)?;
        let cb = AbelianCoords::new(b)?;
        if ca.p != cb.p {
            return Ok(false);
        }
        return Ok(intertwiner(&ca, &cb)?.is_some());
    }
    let agens = a.quotient.generator_ids();
    let found = iso_search_filtered(&a.quotient, &b.quotient, &mut |m| {
        a.action.iter().zip(&b.action).all(|(aa, ba)| agens.iter().all(|&x| m[aa[x] as usize] == ba[m[x] as usize]))
    })?;
    Ok(found.is_some())
}

/// G-equivalence. Abelian factors are equivalent exactly when G-isomorphic.
/// For nonabelian factors (trivial center) the semidirect products with the
/// parent are isomorphic over the parent exactly when some isomorphism
/// `phi: A -> B` makes `phi a_s phi^-1` and `b_s` differ by an inner
/// automorphism of `B` for every generator `s`.
pub fn g_equivalent(g: &PermGroup, a: &ChiefFactor, b: &ChiefFactor) -> Result<bool> {
    check_same_parent(g, a, b)?;
    if a.order() != b.order() || a.is_abelian != b.is_abelian {
        return Ok(false);
    }
    if a.is_abelian || (a.upper == b.upper && a.lower == b.lower) {
        return g_isomorphic(g, a, b);
    }
    let qb = &b.quotient;
    let n = qb.order();
    let bgens = qb.generator_ids();
    let b_inv_action: Vec<Vec<u32>> = b
        .action
        .iter()
        .map(|act| {
            let mut inv = vec![0u32; n];
            for (x, &y) in act.iter().enumerate() {
                inv[y as usize] = x as u32;
            }
            inv
        })
        .collect();
    let is_inner = |tau: &[usize]| (0..n).any(|c| bgens.iter().zip(tau).all(|(&x, &t)| qb.conj(x, c) == t));
    let found = iso_search_filtered(&a.quotient, qb, &mut |m| {
        let mut minv = vec![0usize; n];
        for (x, &y) in m.iter().enumerate() {
            minv[y as usize] = x;
        }
        a.action.iter().zip(&b_inv_action).all(|(aa, binv)| {
            let tau: Vec<usize> = bgens.iter().map(|&y| m[aa[minv[binv[y] as usize]] as usize] as usize).collect();
            is_inner(&tau)
        })
    })?;
    Ok(found.is_some())
}

/// Number of non-Frattini factors of `series` equivalent to `a`.
pub fn delta_in_series(g: &PermGroup, a: &ChiefFactor, series: &ChiefSeries) -> Result<usize> {
    let mut count = 0;
    for f in &series.factors {
        if !f.is_frattini && g_equivalent(g, a, f)? {
            count += 1;
        }
    }
    Ok(count)
}

pub fn delta_count(g: &PermGroup, a: &ChiefFactor) -> Result<usize> {
    delta_count_seeded(g, a, 0)
}

pub fn delta_count_seeded(g: &PermGroup, a: &ChiefFactor, seed: u64) -> Result<usize> {
    if !a.belongs_to(g) {
        return Err(Error::ForeignFactor);
    }
    delta_in_series(g, a, &chief_series(g, seed)?)
}

/// Equivalence classes of the non-Frattini factors of a series, as lists of
/// factor positions in bottom-to-top order.
pub fn factor_classes(g: &PermGroup, series: &ChiefSeries) -> Result<Vec<Vec<usize>>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'next: for (i, f) in series.factors.iter().enumerate() {
        if f.is_frattini {
            continue;
        }
        for c in classes.iter_mut() {
            if g_equivalent(g, &series.factors[c[0]], f)? {
                c.push(i);
                continue 'next;
            }
        }
        classes.push(vec![i]);
    }
    Ok(classes)
}
