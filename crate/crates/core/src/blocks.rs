//! Block systems of transitive groups and their correspondence with the
//! overgroups of a point stabilizer.

use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::lattice::{interval, maximal_overgroups, Subgroup, INTERVAL_CAP};
use crate::permcore::{orbit_partition, point_stabilizer, PermGroup};

/// A partition of `0..degree` in canonical form: points sorted inside each
/// block, blocks sorted by their smallest point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockSystem {
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

impl BlockSystem {
    pub fn new(degree: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; degree];
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        if blocks.iter().any(Vec::is_empty) {
            return Err(Error::NotPartition("empty block".into()));
        }
        blocks.sort();
        for (i, b) in blocks.iter().enumerate() {
            for &x in b {
                if x >= degree {
                    return Err(Error::NotPartition(format!("point {} outside the domain", x + 1)));
                }
                if block_of[x] != usize::MAX {
                    return Err(Error::NotPartition(format!("point {} in two blocks", x + 1)));
                }
                block_of[x] = i;
            }
        }
        if let Some(x) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::NotPartition(format!("point {} not covered", x + 1)));
        }
        Ok(BlockSystem { blocks, block_of })
    }

    /// Partition from a block label per point.
    pub fn from_labels(labels: &[usize]) -> Self {
        let k = labels.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (x, &l) in labels.iter().enumerate() {
            blocks[l].push(x);
        }
        blocks.retain(|b| !b.is_empty());
        BlockSystem::new(labels.len(), blocks).expect("labels define a partition")
    }

    pub fn singletons(degree: usize) -> Self {
        Self::from_labels(&(0..degree).collect::<Vec<_>>())
    }

    pub fn one_block(degree: usize) -> Self {
        Self::from_labels(&vec![0; degree])
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn degree(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.len() == 1 || self.blocks.len() == self.degree()
    }
}

impl fmt::Display for BlockSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let pts: Vec<String> = b.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "{{{}}}", pts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BlockSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Every generator maps every block onto a block.
pub fn is_block_system(g: &PermGroup, p: &BlockSystem) -> Result<bool> {
    if p.degree() != g.degree() {
        return Err(Error::NotPartition(format!("partition of {} points for degree {}", p.degree(), g.degree())));
    }
    Ok(g.generators().iter().all(|s| {
        p.blocks.iter().all(|b| {
            let t = p.block_of(s.apply(b[0]));
            b.iter().all(|&x| p.block_of(s.apply(x)) == t)
        })
    }))
}

fn require_transitive(g: &PermGroup) -> Result<()> {
    if orbit_partition(g).is_transitive {
        Ok(())
    } else {
        Err(Error::NotTransitive)
    }
}

/// The system whose block through `omega` is the orbit `omega^M`; the other
/// blocks are its images under the group.
pub fn system_of_overgroup(g: &PermGroup, m: &Subgroup, omega: usize) -> BlockSystem {
    let n = g.degree();
    let mut block = BitSet::new(n);
    block.insert(omega);
    for i in m.bits().iter() {
        block.insert(g.act(i, omega));
    }
    let mut labels = vec![usize::MAX; n];
    let mut found = vec![block];
    let mut head = 0;
    while head < found.len() {
        let b = found[head].clone();
        for x in b.iter() {
            labels[x] = head;
        }
        head += 1;
        for s in g.generators() {
            let img = BitSet::from_indices(n, b.iter().map(|x| s.apply(x)));
            let first = img.iter().next().expect("nonempty block");
            if labels[first] == usize::MAX && !found.contains(&img) {
                found.push(img);
            }
        }
    }
    BlockSystem::from_labels(&labels)
}

/// Setwise stabilizer of the block of `p` containing `omega`.
pub fn block_stabilizer(g: &PermGroup, p: &BlockSystem, omega: usize) -> Result<Subgroup> {
    g.require_elements()?;
    let b = p.block_of(omega);
    let block = &p.blocks[b];
    let bits = BitSet::from_indices(g.order(), (0..g.order()).filter(|&i| block.iter().all(|&x| p.block_of(g.act(i, x)) == b)));
    Ok(Subgroup::from_bits_unchecked(g, bits))
}

/// One system per maximal subgroup containing the stabilizer of `omega`.
/// For primitive groups this is the singleton partition; with
/// `exclude_trivial` that system is dropped.
pub fn maximal_block_systems(g: &PermGroup, omega: usize, exclude_trivial: bool) -> Result<Vec<BlockSystem>> {
    require_transitive(g)?;
    let stab = point_stabilizer(g, omega)?;
    let maxes = maximal_overgroups(g, &stab)?;
    Ok(maxes.iter().map(|m| system_of_overgroup(g, m, omega)).filter(|s| !(exclude_trivial && s.blocks.len() == g.degree())).collect())
}

/// Systems of all subgroups between the stabilizer of `omega` and the group,
/// in canonical partition order.
pub fn all_block_systems(g: &PermGroup, omega: usize) -> Result<Vec<BlockSystem>> {
    require_transitive(g)?;
    let stab = point_stabilizer(g, omega)?;
    let iv = interval(g, &stab, INTERVAL_CAP)?;
    let mut out: Vec<BlockSystem> = iv.subgroups.iter().map(|m| system_of_overgroup(g, m, omega)).collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// All set partitions of `0..n` as restricted growth strings.
pub fn set_partitions(n: usize) -> SetPartitions {
    SetPartitions { a: vec![0; n], done: false }
}

pub struct SetPartitions {
    a: Vec<usize>,
    done: bool,
}

impl Iterator for SetPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.a.clone();
        let n = self.a.len();
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            let bound = self.a[..i].iter().max().copied().unwrap_or(0) + 1;
            if self.a[i] < bound {
                self.a[i] += 1;
                for j in i + 1..n {
                    self.a[j] = 0;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycles("G", n, gens).unwrap()
    }

    #[test]
    fn block_checks() {
        let c4 = g(4, &["(1 2 3 4)"]);
        assert!(is_block_system(&c4, &BlockSystem::singletons(4)).unwrap());
        assert!(is_block_system(&c4, &BlockSystem::one_block(4)).unwrap());
        assert!(is_block_system(&c4, &BlockSystem::new(4, vec![vec![0, 2], vec![1, 3]]).unwrap()).unwrap());
        assert!(!is_block_system(&c4, &BlockSystem::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap()).unwrap());
        assert!(BlockSystem::new(4, vec![vec![0, 1], vec![1, 2, 3]]).is_err());
        assert!(BlockSystem::new(4, vec![vec![0, 1], vec![2]]).is_err());
    }

    #[test]
    fn maximal_systems() {
        let c4 = g(4, &["(1 2 3 4)"]);
        let m = maximal_block_systems(&c4, 0, false).unwrap();
        assert_eq!(m.iter().map(ToString::to_string).collect::<Vec<_>>(), vec!["{1,3}{2,4}"]);
        let d8 = g(4, &["(1 2 3 4)", "(1 3)"]);
        let m = maximal_block_systems(&d8, 0, false).unwrap();
        assert_eq!(m.iter().map(ToString::to_string).collect::<Vec<_>>(), vec!["{1,3}{2,4}"]);
        let s4 = g(4, &["(1 2)", "(1 2 3 4)"]);
        let m = maximal_block_systems(&s4, 0, false).unwrap();
        assert_eq!(m, vec![BlockSystem::singletons(4)]);
        assert!(maximal_block_systems(&s4, 0, true).unwrap().is_empty());
        assert!(matches!(maximal_block_systems(&g(3, &["(1 2)"]), 0, false), Err(Error::NotTransitive)));
    }

    #[test]
    fn all_systems() {
        assert_eq!(all_block_systems(&g(4, &["(1 2 3 4)"]), 0).unwrap().len(), 3);
        assert_eq!(all_block_systems(&g(4, &["(1 2)", "(1 2 3 4)"]), 0).unwrap().len(), 2);
        assert_eq!(all_block_systems(&g(4, &["(1 2 3 4)", "(1 3)"]), 0).unwrap().len(), 3);
    }

    #[test]
    fn stabilizer_of_block_recovers_subgroup() {
        let d8 = g(4, &["(1 2 3 4)", "(1 3)"]);
        let stab = point_stabilizer(&d8, 0).unwrap();
        for m in interval(&d8, &stab, INTERVAL_CAP).unwrap().subgroups {
            let p = system_of_overgroup(&d8, &m, 0);
            assert_eq!(block_stabilizer(&d8, &p, 0).unwrap(), m);
        }
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (1..=7).map(|n| set_partitions(n).count()).collect();
        assert_eq!(counts, vec![1, 2, 5, 15, 52, 203, 877]);
    }
}
