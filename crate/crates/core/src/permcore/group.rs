use std::fmt;
use std::sync::Arc;

use super::chain::StabChain;
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::par;

/// Groups with at most this many elements get an explicit element list.
pub const DEFAULT_ELEMENT_CAP: usize = 200_000;

/// Groups with at most this many elements also get a full multiplication table.
const MUL_TABLE_MAX: usize = 1024;

/// Abstract finite group on element ids `0..order`, id 0 the identity.
///
/// Implemented by [`PermGroup`] (ids are the stabilizer-chain indexing) and
/// by quotient groups.
pub trait FiniteGroup: Sync {
    fn order(&self) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;
    /// A generating set, as element ids.
    fn generator_ids(&self) -> Vec<usize>;

    fn identity(&self) -> usize {
        0
    }

    fn conj(&self, x: usize, by: usize) -> usize {
        self.mul(self.mul(self.inv(by), x), by)
    }

    fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }
}

struct ElementTable {
    flat: Vec<u32>,
    inverse: Vec<u32>,
    table: Option<Vec<u32>>,
}

struct GroupData {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: usize,
    elements: Option<ElementTable>,
}

/// A permutation group with an eagerly built stabilizer chain and, when the
/// order is at most the element cap, an indexed list of all elements.
///
/// Cloning is cheap; the data is shared and immutable.
#[derive(Clone)]
pub struct PermGroup {
    inner: Arc<GroupData>,
}

impl PermGroup {
    pub fn new(name: impl Into<String>, degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_cap(name, degree, generators, DEFAULT_ELEMENT_CAP)
    }

    pub fn with_cap(name: impl Into<String>, degree: usize, generators: Vec<Permutation>, element_cap: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, got: g.degree() });
            }
        }
        let chain = StabChain::new(degree, &generators);
        let order = chain.order().ok_or_else(|| Error::cap("order", "group order overflows usize"))?;
        let elements = (order <= element_cap).then(|| build_elements(&chain, order));
        Ok(PermGroup { inner: Arc::new(GroupData { name: name.into(), degree, generators, chain, order, elements }) })
    }

    /// Parses each generator from 1-based cycle notation.
    pub fn from_cycles(name: impl Into<String>, degree: usize, gens: &[&str]) -> Result<Self> {
        let gens = gens.iter().map(|s| Permutation::parse_cycles(s, degree)).collect::<Result<Vec<_>>>()?;
        Self::new(name, degree, gens)
    }

    pub fn trivial(degree: usize) -> Result<Self> {
        Self::new("1", degree, Vec::new())
    }

    pub fn renamed(&self, name: impl Into<String>) -> PermGroup {
        let d = &self.inner;
        PermGroup {
            inner: Arc::new(GroupData {
                name: name.into(),
                degree: d.degree,
                generators: d.generators.clone(),
                chain: d.chain.clone(),
                order: d.order,
                elements: d.elements.as_ref().map(|e| ElementTable {
                    flat: e.flat.clone(),
                    inverse: e.inverse.clone(),
                    table: e.table.clone(),
                }),
            }),
        }
    }

    pub fn name(&self) -> &str {
        &self.inner.name
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn base(&self) -> Vec<usize> {
        self.inner.chain.base()
    }

    /// Orbit lengths of the stabilizer chain, level by level.
    pub fn transversal_sizes(&self) -> Vec<usize> {
        self.inner.chain.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn has_elements(&self) -> bool {
        self.inner.elements.is_some()
    }

    /// Fails with `CapExceeded` when the group has no element list.
    pub fn require_elements(&self) -> Result<()> {
        if self.has_elements() {
            Ok(())
        } else {
            Err(Error::cap("element cap", format!("{} has order {}", self.name(), self.order())))
        }
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    fn table(&self) -> &ElementTable {
        self.inner.elements.as_ref().expect("element list required; call require_elements first")
    }

    #[inline]
    pub(crate) fn row(&self, i: usize) -> &[u32] {
        let n = self.inner.degree;
        &self.table().flat[i * n..(i + 1) * n]
    }

    /// Element with index `i` (requires the element list).
    pub fn element(&self, i: usize) -> Permutation {
        Permutation::from_raw(self.row(i).to_vec())
    }

    /// Membership test through the stabilizer chain; works above the element cap.
    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), got: g.degree() });
        }
        Ok(self.inner.chain.contains(g))
    }

    /// Index of `g` in the element list, or `None` if `g` is not in the group.
    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        if g.degree() != self.degree() || !self.inner.chain.contains(g) {
            return None;
        }
        let mut imgs: Vec<usize> = self.inner.chain.levels.iter().map(|l| g.apply(l.base)).collect();
        self.inner.chain.index_from_base_images(&mut imgs)
    }

    /// Index of the member whose image of each point `x` is `img(x)`; only
    /// the base points are queried.
    #[inline]
    pub(crate) fn index_with<F: Fn(usize) -> usize>(&self, img: F) -> usize {
        let levels = &self.inner.chain.levels;
        let k = levels.len();
        if k <= 32 {
            let mut buf = [0usize; 32];
            for (b, l) in buf.iter_mut().zip(levels) {
                *b = img(l.base);
            }
            self.inner.chain.index_from_base_images(&mut buf[..k]).expect("product of members")
        } else {
            let mut buf: Vec<usize> = levels.iter().map(|l| img(l.base)).collect();
            self.inner.chain.index_from_base_images(&mut buf).expect("product of members")
        }
    }

    /// Element indices of the generators.
    pub fn generator_indices(&self) -> Vec<usize> {
        self.inner.generators.iter().map(|g| self.index_of(g).expect("generator is a member")).collect()
    }

    /// Image of point `x` under element `i`.
    #[inline]
    pub fn act(&self, i: usize, x: usize) -> usize {
        self.row(i)[x] as usize
    }
}

fn build_elements(chain: &StabChain, order: usize) -> ElementTable {
    let n = chain.degree;
    let k = chain.levels.len();
    let rows: Vec<Vec<u32>> = par::map_range(order, |idx| {
        let d = chain.digits(idx);
        (0..n)
            .map(|x| {
                let mut y = x;
                for l in (0..k).rev() {
                    y = chain.levels[l].trans[d[l]].apply(y);
                }
                y as u32
            })
            .collect()
    });
    let flat: Vec<u32> = rows.concat();
    let index_with = |row: &dyn Fn(usize) -> usize| {
        let mut imgs: Vec<usize> = chain.levels.iter().map(|l| row(l.base)).collect();
        chain.index_from_base_images(&mut imgs).expect("member")
    };
    let inverse: Vec<u32> = par::map_range(order, |i| {
        let r = &flat[i * n..(i + 1) * n];
        let mut inv = vec![0usize; n];
        for (x, &y) in r.iter().enumerate() {
            inv[y as usize] = x;
        }
        index_with(&|b| inv[b]) as u32
    });
    let table = (order <= MUL_TABLE_MAX).then(|| {
        par::map_range(order, |i| {
            let ri = &flat[i * n..(i + 1) * n];
            (0..order)
                .map(|j| {
                    let rj = &flat[j * n..(j + 1) * n];
                    index_with(&|b| rj[ri[b] as usize] as usize) as u32
                })
                .collect::<Vec<u32>>()
        })
        .concat()
    });
    ElementTable { flat, inverse, table }
}

impl FiniteGroup for PermGroup {
    fn order(&self) -> usize {
        self.inner.order
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        let t = self.table();
        if let Some(tab) = &t.table {
            return tab[a * self.inner.order + b] as usize;
        }
        let ra = self.row(a);
        let rb = self.row(b);
        self.index_with(|x| rb[ra[x] as usize] as usize)
    }

    #[inline]
    fn inv(&self, a: usize) -> usize {
        self.table().inverse[a] as usize
    }

    fn generator_ids(&self) -> Vec<usize> {
        self.generator_indices()
    }

    fn element_order(&self, x: usize) -> usize {
        Permutation::from_raw(self.row(x).to_vec()).order()
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup({}, degree {}, order {})", self.name(), self.degree(), self.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_round_trips() {
        let g = PermGroup::from_cycles("S4", 4, &["(1 2)", "(1 2 3 4)"]).unwrap();
        assert_eq!(g.order(), 24);
        assert!(g.element(0).is_identity());
        for i in 0..24 {
            assert_eq!(g.index_of(&g.element(i)), Some(i));
            assert_eq!(g.mul(i, g.inv(i)), 0);
            for j in 0..24 {
                assert_eq!(g.element(g.mul(i, j)), g.element(i).compose(&g.element(j)));
            }
        }
    }

    #[test]
    fn computed_product_matches_table_free_path() {
        // order 5040 > MUL_TABLE_MAX, so products go through base images
        let g = PermGroup::from_cycles("S7", 7, &["(1 2)", "(1 2 3 4 5 6 7)"]).unwrap();
        for (i, j) in [(3, 4000), (5039, 17), (1234, 2345)] {
            assert_eq!(g.element(g.mul(i, j)), g.element(i).compose(&g.element(j)));
        }
    }

    #[test]
    fn element_cap_is_respected() {
        let g = PermGroup::with_cap(
            "S5",
            5,
            vec![Permutation::parse_cycles("(1 2)", 5).unwrap(), Permutation::parse_cycles("(1 2 3 4 5)", 5).unwrap()],
            100,
        )
        .unwrap();
        assert_eq!(g.order(), 120);
        assert!(!g.has_elements());
        assert!(matches!(g.require_elements(), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn zero_degree_rejected() {
        assert!(matches!(PermGroup::new("x", 0, vec![]), Err(Error::ZeroDegree)));
    }
}
