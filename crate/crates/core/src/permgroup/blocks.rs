//! Block systems of transitive groups.
//!
//! The finest invariant partition joining a seed pair is computed with the
//! classic union-find closure; minimal nontrivial systems are the
//! refinement-minimal results over all seed pairs through a fixed point.

use crate::permgroup::PermGroup;
use crate::{Error, Result};

/// A G-invariant partition of the domain into blocks of equal size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSystem {
    blocks: Vec<Vec<u32>>,
}

impl BlockSystem {
    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_size(&self) -> usize {
        self.blocks.first().map_or(0, Vec::len)
    }

    /// Whether every block of `self` is contained in a block of `other`.
    pub fn refines(&self, other: &BlockSystem) -> bool {
        other_contains(&self.blocks, &other.blocks)
    }

    /// Check invariance: every generator maps blocks onto blocks.
    pub fn is_invariant_under(&self, group: &PermGroup) -> bool {
        let mut block_of = vec![usize::MAX; group.degree()];
        for (bi, block) in self.blocks.iter().enumerate() {
            for &p in block {
                block_of[p as usize] = bi;
            }
        }
        for g in group.generators() {
            for block in &self.blocks {
                let target = block_of[g.apply(block[0]) as usize];
                if block.iter().any(|&p| block_of[g.apply(p) as usize] != target) {
                    return false;
                }
            }
        }
        true
    }
}

fn other_contains(fine: &[Vec<u32>], coarse: &[Vec<u32>]) -> bool {
    fine.iter().all(|fb| {
        coarse
            .iter()
            .any(|cb| fb.iter().all(|p| cb.binary_search(p).is_ok()))
    })
}

struct Dsu {
    parent: Vec<u32>,
}

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu { parent: (0..n as u32).collect() }
    }
    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = x;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }
    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb) as usize] = ra.min(rb);
        true
    }
}

/// The finest block system of the transitive group joining `a` and `b`.
fn finest_system_joining(group: &PermGroup, a: u32, b: u32) -> BlockSystem {
    let n = group.degree();
    let mut dsu = Dsu::new(n);
    let mut queue = vec![(a, b)];
    dsu.union(a, b);
    while let Some((x, y)) = queue.pop() {
        for g in group.generators() {
            let (gx, gy) = (g.apply(x), g.apply(y));
            if dsu.union(gx, gy) {
                queue.push((gx, gy));
            }
        }
    }
    let mut blocks_map: std::collections::BTreeMap<u32, Vec<u32>> = Default::default();
    for p in 0..n as u32 {
        blocks_map.entry(dsu.find(p)).or_default().push(p);
    }
    let blocks: Vec<Vec<u32>> = blocks_map.into_values().collect();
    BlockSystem { blocks }
}

/// All minimal nontrivial block systems of a transitive group. Primitive
/// groups return an empty list.
pub fn minimal_block_systems(group: &PermGroup) -> Result<Vec<BlockSystem>> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let n = group.degree();
    let mut candidates: Vec<BlockSystem> = Vec::new();
    for b in 1..n as u32 {
        let sys = finest_system_joining(group, 0, b);
        if sys.block_count() > 1 && sys.block_count() < n && !candidates.contains(&sys) {
            candidates.push(sys);
        }
    }
    let minimal: Vec<BlockSystem> = candidates
        .iter()
        .filter(|sys| {
            candidates
                .iter()
                .all(|other| !(other.refines(sys) && other != *sys))
        })
        .cloned()
        .collect();
    debug_assert!(minimal.iter().all(|s| s.is_invariant_under(group)));
    Ok(minimal)
}

pub fn is_primitive(group: &PermGroup) -> Result<bool> {
    Ok(minimal_block_systems(group)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::Permutation;

    #[test]
    fn cyclic_four_is_imprimitive() {
        let g = PermGroup::from_generators(vec![
            Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
        ])
        .unwrap();
        let systems = minimal_block_systems(&g).unwrap();
        assert_eq!(systems.len(), 1);
        assert_eq!(systems[0].blocks(), &[vec![0, 2], vec![1, 3]]);
        assert!(!is_primitive(&g).unwrap());
    }

    #[test]
    fn symmetric_group_is_primitive() {
        let g = PermGroup::from_generators(vec![
            Permutation::from_cycles(5, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap(),
        ])
        .unwrap();
        assert!(is_primitive(&g).unwrap());
    }

    #[test]
    fn intransitive_rejected() {
        let g = PermGroup::from_generators(vec![
            Permutation::from_cycles(4, &[&[0, 1]]).unwrap(),
        ])
        .unwrap();
        assert!(matches!(minimal_block_systems(&g), Err(Error::NotTransitive)));
    }

    #[test]
    fn block_images_are_blocks() {
        // S3 wr S2 style action on 6 points with blocks {0,1,2},{3,4,5}
        let g = PermGroup::from_generators(vec![
            Permutation::from_cycles(6, &[&[0, 1, 2]]).unwrap(),
            Permutation::from_cycles(6, &[&[3, 4, 5]]).unwrap(),
            Permutation::from_cycles(6, &[&[0, 3], &[1, 4], &[2, 5]]).unwrap(),
        ])
        .unwrap();
        let systems = minimal_block_systems(&g).unwrap();
        assert!(!systems.is_empty());
        for s in &systems {
            assert!(s.is_invariant_under(&g));
            assert_eq!(s.block_count() * s.block_size(), 6);
        }
        assert!(systems.iter().any(|s| s.block_count() == 2 && s.block_size() == 3));
    }
}
