//! Monolithic primitive groups and crown-based powers.

use super::equivalence::{decode, encode, AbelianCoords};
use super::linalg::vec_mul;
use crate::error::{Error, Result};
use crate::lattice::{frattini, minimal_normal_subgroups, ChiefFactor, Subgroup};
use crate::permcore::{FiniteGroup, PermGroup, Permutation};

/// Degree bound for crown-based powers.
pub const CROWN_DEGREE_MAX: usize = 4096;

/// A primitive group with a unique minimal normal subgroup (its socle).
#[derive(Clone, Debug)]
pub struct MonolithicGroup {
    pub group: PermGroup,
    pub socle: Subgroup,
    pub socle_is_abelian: bool,
    /// The simple direct factors of a nonabelian socle; empty when abelian.
    pub socle_simple_factors: Vec<Subgroup>,
}

impl MonolithicGroup {
    /// Checks monolithicity and primitivity. A maximal subgroup missing the
    /// unique minimal normal subgroup is core-free, so primitivity amounts to
    /// the socle not lying in the Frattini subgroup. That subgroup is
    /// nilpotent, so only abelian socles need the check.
    pub fn new(group: PermGroup) -> Result<Self> {
        group.require_elements()?;
        let mins = minimal_normal_subgroups(&group)?;
        if mins.len() != 1 {
            return Err(Error::Precondition(format!("{} has {} minimal normal subgroups", group.name(), mins.len())));
        }
        let socle = mins.into_iter().next().expect("one");
        let sg = socle.gens();
        let socle_is_abelian = sg.iter().all(|&a| sg.iter().all(|&b| group.mul(a, b) == group.mul(b, a)));
        if socle_is_abelian && socle.is_subgroup_of(&frattini(&group)?) {
            return Err(Error::Precondition(format!("{} is not primitive", group.name())));
        }
        let socle_simple_factors = if socle_is_abelian { Vec::new() } else { simple_factors(&group, &socle)? };
        Ok(MonolithicGroup { group, socle, socle_is_abelian, socle_simple_factors })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn socle_order(&self) -> usize {
        self.socle.order()
    }
}

/// Minimal normal subgroups of the socle, as subgroups of the whole group.
fn simple_factors(group: &PermGroup, socle: &Subgroup) -> Result<Vec<Subgroup>> {
    let n = PermGroup::new("socle", group.degree(), socle.permutations(group))?;
    let mins = minimal_normal_subgroups(&n)?;
    Ok(mins
        .iter()
        .map(|m| {
            let idx: Vec<usize> = m.members().into_iter().map(|i| group.index_of(&n.element(i)).expect("socle member")).collect();
            Subgroup::from_bits_unchecked(group, crate::bitset::BitSet::from_indices(group.order(), idx))
        })
        .collect())
}

/// The monolithic primitive group attached to a non-Frattini chief factor:
/// for abelian `A` the affine group `A : (G/C_G(A))` on the vectors of `A`,
/// otherwise `G/C_G(A)` acting on `A` by conjugation.
pub fn monolithic_associated(g: &PermGroup, a: &ChiefFactor) -> Result<MonolithicGroup> {
    if !a.belongs_to(g) {
        return Err(Error::ForeignFactor);
    }
    if a.is_frattini {
        return Err(Error::FrattiniFactor);
    }
    let name = format!("L[{}:{}/{}]", g.name(), a.upper.order(), a.lower.order());
    let group = if a.is_abelian {
        let c = AbelianCoords::new(a)?;
        let (p, d) = (c.p, c.dim);
        let size = a.order();
        let mut gens = Vec::new();
        for i in 0..d {
            let mut e = vec![0u32; d];
            e[i] = 1;
            let images = (0..size)
                .map(|x| {
                    let v = decode(x, p, d);
                    let w: Vec<u32> = v.iter().zip(&e).map(|(a, b)| (a + b) % p).collect();
                    encode(&w, p)
                })
                .collect();
            gens.push(Permutation::from_images(images)?);
        }
        for m in &c.matrices {
            let perm = Permutation::from_images((0..size).map(|x| encode(&vec_mul(&decode(x, p, d), m, p), p)).collect())?;
            if !perm.is_identity() && !gens.contains(&perm) {
                gens.push(perm);
            }
        }
        PermGroup::new(name, size, gens)?
    } else {
        let mut gens: Vec<Permutation> = Vec::new();
        for act in &a.action {
            let perm = Permutation::from_images(act.iter().map(|&x| x as usize).collect())?;
            if !perm.is_identity() && !gens.contains(&perm) {
                gens.push(perm);
            }
        }
        PermGroup::new(name, a.order(), gens)?
    };
    MonolithicGroup::new(group)
}

/// `L_k`: the subgroup of `L^k` of tuples congruent modulo the socle,
/// generated by diagonal copies of the generators of `L` and the socle
/// generators in each coordinate. Order `|soc L|^(k-1) |L|`.
pub fn crown_based_power(l: &MonolithicGroup, k: usize) -> Result<PermGroup> {
    if k == 0 {
        return Err(Error::Precondition("crown-based power needs k >= 1".into()));
    }
    let n = l.group.degree();
    let total =
        n.checked_mul(k).filter(|&t| t <= CROWN_DEGREE_MAX).ok_or_else(|| Error::cap("degree cap", format!("{k} copies of degree {n}")))?;
    let mut gens = Vec::new();
    for s in l.group.generators() {
        let mut images = Vec::with_capacity(total);
        for c in 0..k {
            images.extend((0..n).map(|x| c * n + s.apply(x)));
        }
        gens.push(Permutation::from_images(images)?);
    }
    for p in l.socle.permutations(&l.group) {
        for c in 0..k {
            gens.push(p.shifted(c * n, total));
        }
    }
    let expected = l
        .socle_order()
        .checked_pow(k as u32 - 1)
        .and_then(|x| x.checked_mul(l.order()))
        .ok_or_else(|| Error::cap("order", "crown-based power order overflows"))?;
    let group = PermGroup::new(format!("CrownPower({},{k})", l.group.name()), total, gens)?;
    if group.order() != expected {
        return Err(Error::Internal(format!("crown-based power has order {} instead of {expected}", group.order())));
    }
    Ok(group)
}
