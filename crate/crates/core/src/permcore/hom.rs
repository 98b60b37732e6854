//! Action on right cosets, the workhorse for quotients and primitive actions.

use super::group::{FiniteGroup, PermGroup};
use super::ops::core_of_subgroup;
use super::perm::Permutation;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::lattice::Subgroup;
use crate::par;

/// The homomorphism `source -> Sym(source : H)` given by right multiplication
/// on right cosets `Hx`.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: PermGroup,
    target: PermGroup,
    generator_images: Vec<Permutation>,
    kernel: Subgroup,
    coset_of: Vec<u32>,
    reps: Vec<usize>,
    image_idx: Vec<u32>,
}

pub fn coset_action(group: &PermGroup, h: &Subgroup) -> Result<GroupHom> {
    group.require_elements()?;
    if h.bits().len() != group.order() {
        return Err(Error::NotSubgroup("handle belongs to a different group".into()));
    }
    let n = group.order();
    let hm = h.members();
    let mut coset_of = vec![u32::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset_of[x] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &a in &hm {
            coset_of[group.mul(a, x)] = c;
        }
    }
    let m = reps.len();
    let generator_images: Vec<Permutation> = group
        .generator_indices()
        .into_iter()
        .map(|s| Permutation::from_raw(reps.iter().map(|&r| coset_of[group.mul(r, s)]).collect()))
        .collect();
    let target = PermGroup::new(format!("{} on {} cosets", group.name(), m), m, generator_images.clone())?;
    let image_idx = par::map_range(n, |i| target.index_with(|c| coset_of[group.mul(reps[c], i)] as usize) as u32);
    let kernel = core_of_subgroup(group, h)?;
    Ok(GroupHom { source: group.clone(), target, generator_images, kernel, coset_of, reps, image_idx })
}

impl GroupHom {
    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.generator_images
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    /// Number of cosets, i.e. the degree of the target.
    pub fn degree(&self) -> usize {
        self.reps.len()
    }

    /// Coset index of source element `i`.
    pub fn coset_of(&self, i: usize) -> usize {
        self.coset_of[i] as usize
    }

    pub fn coset_reps(&self) -> &[usize] {
        &self.reps
    }

    /// Target element index of the image of source element `i`.
    pub fn image_index(&self, i: usize) -> usize {
        self.image_idx[i] as usize
    }

    pub fn image(&self, i: usize) -> Permutation {
        self.target.element(self.image_index(i))
    }

    pub fn image_of_subgroup(&self, s: &Subgroup) -> Subgroup {
        let bits = BitSet::from_indices(self.target.order(), s.bits().iter().map(|i| self.image_index(i)));
        Subgroup::from_bits_unchecked(&self.target, bits)
    }

    /// Full preimage in the source of a subgroup of the target.
    pub fn preimage(&self, t: &Subgroup) -> Subgroup {
        let n = self.source.order();
        let bits = BitSet::from_indices(n, (0..n).filter(|&i| t.contains(self.image_index(i))));
        Subgroup::from_bits_unchecked(&self.source, bits)
    }
}
