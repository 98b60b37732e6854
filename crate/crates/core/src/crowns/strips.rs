//! Projections, strips and the full-strip decomposition of subgroups of a
//! direct product of nonabelian simple groups.

use std::collections::BTreeMap;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::lattice::{normal_subgroups, Subgroup};
use crate::permcore::{DirectProduct, FiniteGroup, PermGroup};

#[derive(Clone, Debug)]
pub struct StripDecomposition {
    pub factors: Vec<PermGroup>,
    /// `pi_i(X)` as a subgroup of factor `i`.
    pub projections: Vec<Subgroup>,
    /// Coordinates with nontrivial projection.
    pub support: Vec<usize>,
    /// Full strips with pairwise disjoint supports whose product is `X`;
    /// empty unless every projection on the support is full.
    pub strips: Vec<(Vec<usize>, Subgroup)>,
    pub is_subdirect: bool,
}

fn is_nonabelian_simple(g: &PermGroup) -> bool {
    let gens = g.generator_indices();
    let abelian = gens.iter().all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)));
    !abelian && normal_subgroups(g).len() == 2
}

/// `x` is a subgroup of `dp.group`; every factor must be nonabelian simple.
pub fn strip_decomposition(dp: &DirectProduct, factors: &[PermGroup], x: &Subgroup) -> Result<StripDecomposition> {
    let g = &dp.group;
    g.require_elements()?;
    if factors.len() != dp.blocks.len() || factors.iter().zip(&dp.blocks).any(|(f, b)| f.degree() != b.len()) {
        return Err(Error::Precondition("factor list does not match the product".into()));
    }
    if let Some(f) = factors.iter().find(|f| !is_nonabelian_simple(f)) {
        return Err(Error::Precondition(format!("{} is not nonabelian simple", f.name())));
    }
    if x.bits().len() != g.order() {
        return Err(Error::NotSubgroup("handle belongs to a different group".into()));
    }
    let members = x.members();
    // coordinate projection of every member, as factor indices
    let proj: Vec<Vec<usize>> = (0..factors.len())
        .map(|i| {
            members.iter().map(|&m| factors[i].index_of(&dp.project(i, &g.element(m))).expect("projection lies in the factor")).collect()
        })
        .collect();
    let projections: Vec<Subgroup> = proj
        .iter()
        .zip(factors)
        .map(|(p, f)| Subgroup::from_bits_unchecked(f, BitSet::from_indices(f.order(), p.iter().copied())))
        .collect();
    let support: Vec<usize> = (0..factors.len()).filter(|&i| !projections[i].is_trivial()).collect();
    let is_subdirect =
        !x.is_trivial() && support.len() == factors.len() && projections.iter().zip(factors).all(|(p, f)| p.order() == f.order());
    let full_on_support = !x.is_trivial() && support.iter().all(|&i| projections[i].order() == factors[i].order());
    let mut strips = Vec::new();
    if full_on_support {
        // coordinates of one strip share the kernel of their projections
        let mut by_kernel: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for &i in &support {
            let kernel: Vec<usize> = (0..members.len()).filter(|&j| proj[i][j] == 0).collect();
            by_kernel.entry(kernel).or_default().push(i);
        }
        let mut groups: Vec<Vec<usize>> = by_kernel.into_values().collect();
        groups.sort();
        let mut product_order = 1usize;
        for supp in groups {
            let bits = BitSet::from_indices(
                g.order(),
                (0..members.len()).filter(|&j| support.iter().all(|&m| supp.contains(&m) || proj[m][j] == 0)).map(|j| members[j]),
            );
            let strip = Subgroup::from_bits_unchecked(g, bits);
            let full = supp.iter().all(|&i| {
                let imgs = BitSet::from_indices(
                    factors[i].order(),
                    (0..members.len()).filter(|&j| strip.contains(members[j])).map(|j| proj[i][j]),
                );
                imgs.count() == factors[i].order() && strip.order() == factors[i].order()
            });
            if !full {
                return Err(Error::ScottViolation(format!("strip on coordinates {supp:?} is not a full strip")));
            }
            product_order *= strip.order();
            strips.push((supp, strip));
        }
        if product_order != x.order() {
            return Err(Error::ScottViolation(format!("strips multiply to order {product_order}, subgroup has order {}", x.order())));
        }
    }
    Ok(StripDecomposition { factors: factors.to_vec(), projections, support, strips, is_subdirect })
}
