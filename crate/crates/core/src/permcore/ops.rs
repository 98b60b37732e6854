//! Orbits, stabilizers, closures, cores, centralizers, products, solubility.

use std::ops::Range;

use super::group::{FiniteGroup, PermGroup};
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::lattice::subgroup::{extend, generated};
use crate::lattice::Subgroup;

/// Order of `<gens>` through the stabilizer chain.
pub fn group_order(gens: &[Permutation], degree: usize) -> Result<usize> {
    Ok(PermGroup::with_cap("", degree, gens.to_vec(), 0)?.order())
}

pub fn membership(g: &Permutation, group: &PermGroup) -> Result<bool> {
    group.contains(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbits {
    /// Orbits sorted by their smallest point, points sorted inside each orbit.
    pub orbits: Vec<Vec<usize>>,
    pub is_transitive: bool,
}

/// Orbits of the group generated by `gens` on `0..degree`.
pub fn orbits_of(gens: &[Permutation], degree: usize) -> Vec<Vec<usize>> {
    let mut label = vec![usize::MAX; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if label[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        label[start] = id;
        let mut orb = vec![start];
        let mut head = 0;
        while head < orb.len() {
            let x = orb[head];
            head += 1;
            for g in gens {
                let y = g.apply(x);
                if label[y] == usize::MAX {
                    label[y] = id;
                    orb.push(y);
                }
            }
        }
        orb.sort_unstable();
        out.push(orb);
    }
    out
}

pub fn orbit_partition(group: &PermGroup) -> Orbits {
    let orbits = orbits_of(group.generators(), group.degree());
    let is_transitive = orbits.len() == 1;
    Orbits { orbits, is_transitive }
}

pub fn point_stabilizer(group: &PermGroup, point: usize) -> Result<Subgroup> {
    if point >= group.degree() {
        return Err(Error::PointOutOfRange { point, degree: group.degree() });
    }
    group.require_elements()?;
    let bits = crate::bitset::BitSet::from_indices(group.order(), (0..group.order()).filter(|&i| group.act(i, point) == point));
    Ok(Subgroup::from_bits_unchecked(group, bits))
}

/// Converts permutations to element indices, failing on non-members.
pub fn indices_of(group: &PermGroup, elems: &[Permutation]) -> Result<Vec<usize>> {
    group.require_elements()?;
    elems
        .iter()
        .map(|p| {
            if p.degree() != group.degree() {
                return Err(Error::DegreeMismatch { expected: group.degree(), got: p.degree() });
            }
            group.index_of(p).ok_or(Error::NotInGroup)
        })
        .collect()
}

/// Normal closure of a set of element indices.
pub fn normal_closure<G: FiniteGroup + ?Sized>(group: &G, elems: &[usize]) -> Subgroup {
    let ggens = group.generator_ids();
    let mut n = generated(group, elems);
    let mut i = 0;
    while i < n.gens().len() {
        let a = n.gens()[i];
        for &s in &ggens {
            let c = group.conj(a, s);
            if !n.contains(c) {
                n = extend(group, &n, &[c], usize::MAX).expect("no limit");
            }
        }
        i += 1;
    }
    n
}

pub fn normal_closure_of(group: &PermGroup, elems: &[Permutation]) -> Result<Subgroup> {
    let idx = indices_of(group, elems)?;
    Ok(normal_closure(group, &idx))
}

fn check_parent<G: FiniteGroup + ?Sized>(group: &G, m: &Subgroup) -> Result<()> {
    if m.bits().len() != group.order() {
        return Err(Error::NotSubgroup("handle belongs to a different group".into()));
    }
    Ok(())
}

/// Largest normal subgroup of `group` inside `m`.
pub fn core_of_subgroup<G: FiniteGroup + ?Sized>(group: &G, m: &Subgroup) -> Result<Subgroup> {
    check_parent(group, m)?;
    let ggens = group.generator_ids();
    let mut bits = m.bits().clone();
    loop {
        let before = bits.count();
        for &s in &ggens {
            let si = group.inv(s);
            let conj = crate::bitset::BitSet::from_indices(group.order(), bits.iter().map(|a| group.mul(group.mul(si, a), s)));
            bits.intersect_with(&conj);
        }
        if bits.count() == before {
            break;
        }
    }
    Ok(Subgroup::from_bits_unchecked(group, bits))
}

/// `{g in group : g s = s g for all s}`; `elems` need not lie in the group.
pub fn centralizer_of(group: &PermGroup, elems: &[Permutation]) -> Result<Subgroup> {
    group.require_elements()?;
    for s in elems {
        if s.degree() != group.degree() {
            return Err(Error::DegreeMismatch { expected: group.degree(), got: s.degree() });
        }
    }
    let n = group.degree();
    let bits = crate::bitset::BitSet::from_indices(
        group.order(),
        (0..group.order()).filter(|&i| {
            let r = group.row(i);
            elems.iter().all(|s| (0..n).all(|x| s.apply(r[x] as usize) == r[s.apply(x)] as usize))
        }),
    );
    Ok(Subgroup::from_bits_unchecked(group, bits))
}

/// Centralizer in `group` of a subgroup given by element indices.
pub fn centralizer_of_indices(group: &PermGroup, elems: &[usize]) -> Subgroup {
    let perms: Vec<Permutation> = elems.iter().map(|&i| group.element(i)).collect();
    centralizer_of(group, &perms).expect("members of the group")
}

#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: PermGroup,
    /// Point range occupied by each factor.
    pub blocks: Vec<Range<usize>>,
}

impl DirectProduct {
    /// Embeds a permutation of factor `i` into the product.
    pub fn embed(&self, i: usize, p: &Permutation) -> Permutation {
        p.shifted(self.blocks[i].start, self.group.degree())
    }

    /// Restriction of a product permutation to factor `i`.
    pub fn project(&self, i: usize, p: &Permutation) -> Permutation {
        let r = &self.blocks[i];
        Permutation::from_raw(r.clone().map(|x| (p.apply(x) - r.start) as u32).collect())
    }
}

pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<DirectProduct> {
    direct_product_of(&[a.clone(), b.clone()])
}

pub fn direct_product_of(factors: &[PermGroup]) -> Result<DirectProduct> {
    let total: usize = factors.iter().map(PermGroup::degree).sum();
    let mut gens = Vec::new();
    let mut blocks = Vec::new();
    let mut off = 0;
    for f in factors {
        gens.extend(f.generators().iter().map(|g| g.shifted(off, total)));
        blocks.push(off..off + f.degree());
        off += f.degree();
    }
    let name = factors.iter().map(|f| f.name().to_string()).collect::<Vec<_>>().join(" x ");
    Ok(DirectProduct { group: PermGroup::new(name, total, gens)?, blocks })
}

/// Derived subgroup as a standalone group, built through chain membership so
/// that it works above the element cap.
pub fn derived_group(group: &PermGroup) -> Result<PermGroup> {
    let n = group.degree();
    let gens = group.generators();
    let mut comm = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
            if !c.is_identity() {
                comm.push(c);
            }
        }
    }
    let mut d = PermGroup::with_cap("", n, comm.clone(), 0)?;
    let mut i = 0;
    while i < comm.len() {
        for s in gens {
            let c = comm[i].conjugate_by(s);
            if !d.contains(&c)? {
                comm.push(c);
                d = PermGroup::with_cap("", n, comm.clone(), 0)?;
            }
        }
        i += 1;
    }
    PermGroup::new(format!("[{0},{0}]", group.name()), n, comm)
}

pub fn is_soluble(group: &PermGroup) -> Result<bool> {
    let mut cur = group.clone();
    while cur.order() > 1 {
        let d = derived_group(&cur)?;
        if d.order() == cur.order() {
            return Ok(false);
        }
        cur = d;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str, n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycles(name, n, gens).unwrap()
    }

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    /// Naive closure: multiply until nothing new appears.
    fn naive_order(gens: &[Permutation], n: usize) -> usize {
        let mut seen = std::collections::BTreeSet::new();
        let id = Permutation::identity(n);
        seen.insert(id.clone());
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for s in gens {
                let y = x.compose(s);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn orders() {
        assert_eq!(group_order(&[], 3).unwrap(), 1);
        let gens = [p("(1 2)", 4), p("(1 2 3 4)", 4)];
        assert_eq!(naive_order(&gens, 4), 24);
        assert_eq!(group_order(&gens, 4).unwrap(), 24);
        assert_eq!(group_order(&[p("(1 2 3 4 5)", 5)], 5).unwrap(), 5);
        assert!(matches!(group_order(&[], 0), Err(Error::ZeroDegree)));
    }

    #[test]
    fn membership_examples() {
        let c3 = g("C3", 3, &["(1 2 3)"]);
        assert!(membership(&Permutation::identity(3), &c3).unwrap());
        assert!(!membership(&p("(1 2)", 3), &c3).unwrap());
        let c4 = g("C4", 4, &["(1 2 3 4)"]);
        assert!(membership(&p("(1 3)(2 4)", 4), &c4).unwrap());
        assert!(membership(&p("(1 2)", 3), &c4).is_err());
    }

    #[test]
    fn orbit_examples() {
        let t = g("C2", 3, &["(1 2)"]);
        let o = orbit_partition(&t);
        assert_eq!(o.orbits, vec![vec![0, 1], vec![2]]);
        assert!(!o.is_transitive);
        assert!(orbit_partition(&g("S4", 4, &["(1 2)", "(1 2 3 4)"])).is_transitive);
        assert_eq!(orbit_partition(&PermGroup::trivial(3).unwrap()).orbits.len(), 3);
    }

    #[test]
    fn stabilizer_examples() {
        let s3 = g("S3", 3, &["(1 2)", "(1 2 3)"]);
        let st = point_stabilizer(&s3, 2).unwrap();
        assert_eq!(st.order(), 2);
        assert!(st.contains(s3.index_of(&p("(1 2)", 3)).unwrap()));
        let c4 = g("C4", 4, &["(1 2 3 4)"]);
        for w in 0..4 {
            assert_eq!(point_stabilizer(&c4, w).unwrap().order(), 1);
        }
        let s4 = g("S4", 4, &["(1 2)", "(1 2 3 4)"]);
        assert_eq!(point_stabilizer(&s4, 3).unwrap().order(), 6);
        assert!(matches!(point_stabilizer(&s4, 4), Err(Error::PointOutOfRange { .. })));
    }

    #[test]
    fn normal_closure_examples() {
        let s4 = g("S4", 4, &["(1 2)", "(1 2 3 4)"]);
        assert_eq!(normal_closure_of(&s4, &[p("(1 2 3)", 4)]).unwrap().order(), 12);
        assert_eq!(normal_closure_of(&s4, &[p("(1 2)", 4)]).unwrap().order(), 24);
        let c6 = g("C6", 6, &["(1 2 3 4 5 6)"]);
        assert_eq!(normal_closure_of(&c6, &[p("(1 4)(2 5)(3 6)", 6)]).unwrap().order(), 2);
        let c3 = g("C3", 3, &["(1 2 3)"]);
        assert!(matches!(normal_closure_of(&c3, &[p("(1 2)", 3)]), Err(Error::NotInGroup)));
    }

    #[test]
    fn core_examples() {
        let s3 = g("S3", 3, &["(1 2)", "(1 2 3)"]);
        let t = generated(&s3, &[s3.index_of(&p("(1 2)", 3)).unwrap()]);
        assert!(core_of_subgroup(&s3, &t).unwrap().is_trivial());
        let s4 = g("S4", 4, &["(1 2)", "(1 2 3 4)"]);
        let a4 = normal_closure_of(&s4, &[p("(1 2 3)", 4)]).unwrap();
        assert_eq!(core_of_subgroup(&s4, &a4).unwrap(), a4);
        let st = point_stabilizer(&s4, 3).unwrap();
        assert!(core_of_subgroup(&s4, &st).unwrap().is_trivial());
        assert!(core_of_subgroup(&s4, &Subgroup::trivial(&s3)).is_err());
    }

    #[test]
    fn centralizer_examples() {
        let s3 = g("S3", 3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(centralizer_of(&s3, &[p("(1 2 3)", 3)]).unwrap().order(), 3);
        assert_eq!(centralizer_of(&s3, &[Permutation::identity(3)]).unwrap().order(), 6);
        let s4 = g("S4", 4, &["(1 2)", "(1 2 3 4)"]);
        let v4 = centralizer_of(&s4, &[p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4)]).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(centralizer_of(&s4, &[p("(1 2)", 3)]).is_err());
    }

    #[test]
    fn direct_products() {
        let c2 = g("C2", 2, &["(1 2)"]);
        let s3 = g("S3", 3, &["(1 2)", "(1 2 3)"]);
        let v = direct_product(&c2, &c2).unwrap();
        assert_eq!((v.group.degree(), v.group.order()), (4, 4));
        assert_eq!(direct_product(&s3, &c2).unwrap().group.order(), 12);
        let t = PermGroup::trivial(1).unwrap();
        let st = direct_product(&s3, &t).unwrap();
        assert_eq!(st.group.order(), 6);
        let x = st.embed(0, &p("(1 2 3)", 3));
        assert_eq!(st.project(0, &x), p("(1 2 3)", 3));
    }

    #[test]
    fn solubility() {
        assert!(is_soluble(&g("S4", 4, &["(1 2)", "(1 2 3 4)"])).unwrap());
        assert!(!is_soluble(&g("A5", 5, &["(1 2 3)", "(1 2 3 4 5)"])).unwrap());
        assert!(is_soluble(&g("C6", 6, &["(1 2 3 4 5 6)"])).unwrap());
        assert!(!is_soluble(&g("S5", 5, &["(1 2)", "(1 2 3 4 5)"])).unwrap());
    }
}
