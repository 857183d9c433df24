//! Coset geometries Cos(G; A, B): points are the right cosets of A, lines
//! the right cosets of B, incident when the cosets meet.

use crate::geometry::IncidenceStructure;
use crate::permgroup::{PermGroup, Permutation};
use crate::{Error, Result};

/// Default guard on the number of cosets on either side.
const COSET_CAP: u64 = 100_000;

/// A coset geometry together with the action of G on it (points first,
/// then lines), which is flag-transitive by construction.
///
/// Degenerate inputs can give distinct lines with equal point sets, so the
/// incidence is held as raw (point, line) pairs; `to_incidence_structure`
/// converts when the lines are set-distinct.
pub struct CosetGeometry {
    pub num_points: usize,
    pub num_lines: usize,
    /// Sorted incident (point, line) pairs.
    pub flags: Vec<(u32, u32)>,
    /// For each generator of G, its action on cosets of A followed by
    /// cosets of B (B-coset j is vertex `num_points + j`).
    pub action: Vec<Permutation>,
}

impl CosetGeometry {
    pub fn line_sets(&self) -> Vec<Vec<u32>> {
        let mut lines = vec![Vec::new(); self.num_lines];
        for &(p, l) in &self.flags {
            lines[l as usize].push(p);
        }
        lines
    }

    pub fn to_incidence_structure(&self) -> Result<IncidenceStructure> {
        IncidenceStructure::new(self.num_points, self.line_sets())
    }
}

/// Enumerate the right cosets of `sub` in `group` and the action of the
/// group generators on them; returns the permutation each generator induces.
fn coset_action(group: &PermGroup, sub: &PermGroup, cap: u64) -> Result<(usize, Vec<Vec<u32>>)> {
    let degree = group.degree();
    let mut reps: Vec<Permutation> = vec![Permutation::identity(degree)];
    let mut table: Vec<Vec<u32>> = vec![Vec::new()]; // table[coset][gen] = image coset
    let gens = group.generators();
    let mut head = 0;
    while head < reps.len() {
        let rep = reps[head].clone();
        let mut row = Vec::with_capacity(gens.len());
        for g in gens {
            let cand = rep.compose(g);
            let mut found = None;
            for (j, r) in reps.iter().enumerate() {
                // same coset iff cand * r^-1 lies in the subgroup
                if sub.contains(&cand.compose(&r.inverse())) {
                    found = Some(j as u32);
                    break;
                }
            }
            let idx = match found {
                Some(j) => j,
                None => {
                    if reps.len() as u64 >= cap {
                        return Err(Error::CosetCap(cap));
                    }
                    reps.push(cand);
                    table.push(Vec::new());
                    (reps.len() - 1) as u32
                }
            };
            row.push(idx);
        }
        table[head] = row;
        head += 1;
    }
    Ok((reps.len(), table))
}

/// Build Cos(G; A, B). A and B must be proper subgroups of G given as
/// groups on the same domain; the incidence relation is realized as the
/// G-orbit of the base flag (A, B) under simultaneous right multiplication.
pub fn coset_geometry(group: &PermGroup, a: &PermGroup, b: &PermGroup) -> Result<CosetGeometry> {
    for (which, sub) in [(0, a), (1, b)] {
        for (i, g) in sub.generators().iter().enumerate() {
            if !group.contains(g) {
                let _ = which;
                return Err(Error::NotASubgroup { index: i });
            }
        }
        if sub.order() >= group.order() {
            return Err(Error::NotProper);
        }
    }
    let (num_a, table_a) = coset_action(group, a, COSET_CAP)?;
    let (num_b, table_b) = coset_action(group, b, COSET_CAP)?;

    // incidence = orbit of the pair (identity coset, identity coset)
    let mut incident = vec![false; num_a * num_b];
    let mut stack = vec![(0u32, 0u32)];
    incident[0] = true;
    let mut pairs = Vec::new();
    while let Some((x, y)) = stack.pop() {
        pairs.push((x, y));
        for gi in 0..group.generators().len() {
            let nx = table_a[x as usize][gi];
            let ny = table_b[y as usize][gi];
            let key = nx as usize * num_b + ny as usize;
            if !incident[key] {
                incident[key] = true;
                stack.push((nx, ny));
            }
        }
    }

    pairs.sort_unstable();

    let action: Vec<Permutation> = (0..group.generators().len())
        .map(|gi| {
            let mut img: Vec<u32> = (0..num_a).map(|x| table_a[x][gi]).collect();
            img.extend((0..num_b).map(|y| num_a as u32 + table_b[y][gi]));
            Permutation::from_images(img).expect("coset actions are bijections")
        })
        .collect();

    Ok(CosetGeometry { num_points: num_a, num_lines: num_b, flags: pairs, action })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_with_transposition_and_rotation() {
        let g = PermGroup::from_generators(vec![
            Permutation::from_cycles(3, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
        ])
        .unwrap();
        let a = PermGroup::from_generators(vec![Permutation::from_cycles(3, &[&[0, 1]]).unwrap()])
            .unwrap();
        let b =
            PermGroup::from_generators(vec![Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()])
                .unwrap();
        let cos = coset_geometry(&g, &a, &b).unwrap();
        assert_eq!(cos.num_points, 3);
        assert_eq!(cos.num_lines, 2);
        // every point meets every line: complete bipartite incidence
        for line in cos.line_sets() {
            assert_eq!(line.len(), 3);
        }
    }

    #[test]
    fn equal_subgroups_give_diagonal_incidence() {
        let g = PermGroup::from_generators(vec![
            Permutation::from_cycles(3, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
        ])
        .unwrap();
        let a = PermGroup::from_generators(vec![Permutation::from_cycles(3, &[&[0, 1]]).unwrap()])
            .unwrap();
        let cos = coset_geometry(&g, &a, &a).unwrap();
        // each coset meets exactly itself
        assert_eq!(cos.num_points, 3);
        for (li, line) in cos.line_sets().iter().enumerate() {
            assert_eq!(line.len(), 1, "line {li} should be a single coset");
        }
    }

    #[test]
    fn non_subgroup_rejected() {
        let g = PermGroup::from_generators(vec![
            Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap(),
        ])
        .unwrap();
        let h = PermGroup::from_generators(vec![Permutation::from_cycles(4, &[&[0, 1]]).unwrap()])
            .unwrap();
        assert!(matches!(coset_geometry(&g, &h, &h), Err(Error::NotASubgroup { .. })));
    }
}
