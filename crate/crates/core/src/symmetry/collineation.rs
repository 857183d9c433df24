//! Collineation groups: permutation groups on points followed by lines,
//! with the line-preservation property verified at construction.

use crate::geometry::GeneralizedQuadrangle;
use crate::permgroup::{PermGroup, Permutation};
use crate::{Error, Result};

/// All flags (incident point-line pairs), ordered by point then line.
pub fn flags(gq: &GeneralizedQuadrangle) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(gq.num_points() * (gq.t() as usize + 1));
    for p in 0..gq.num_points() as u32 {
        for &l in gq.lines_through(p) {
            out.push((p, l));
        }
    }
    out.sort_unstable();
    out
}

/// All antiflags (non-incident point-line pairs), ordered by point then line.
pub fn antiflags(gq: &GeneralizedQuadrangle) -> Vec<(u32, u32)> {
    let mut out = Vec::with_capacity(gq.num_points() * gq.num_lines());
    for p in 0..gq.num_points() as u32 {
        for l in 0..gq.num_lines() as u32 {
            if !gq.is_incident(p, l) {
                out.push((p, l));
            }
        }
    }
    out
}

/// A permutation group acting on the vertex set of the incidence graph
/// (points first, then lines) whose generators all preserve incidence.
#[derive(Debug, Clone)]
pub struct CollineationGroup {
    group: PermGroup,
    num_points: usize,
    num_lines: usize,
}

impl CollineationGroup {
    /// Verify that every generator maps every line onto a line consistent
    /// with its action on line vertices.
    pub fn new(gq: &GeneralizedQuadrangle, group: PermGroup) -> Result<CollineationGroup> {
        let np = gq.num_points();
        let nl = gq.num_lines();
        if group.degree() != np + nl && !(group.generators().is_empty() && group.degree() == 0) {
            return Err(Error::ActionDegreeMismatch { expected: np + nl, got: group.degree() });
        }
        let group = if group.generators().is_empty() {
            PermGroup::trivial(np + nl)
        } else {
            group
        };
        for (index, g) in group.generators().iter().enumerate() {
            for (li, line) in gq.lines().iter().enumerate() {
                let target = g.apply((np + li) as u32);
                if (target as usize) < np {
                    return Err(Error::NotACollineation { index, line: li });
                }
                let mut image: Vec<u32> = line.iter().map(|&p| g.apply(p)).collect();
                image.sort_unstable();
                if image.iter().any(|&p| p as usize >= np)
                    || gq.line(target as usize - np) != image.as_slice()
                {
                    return Err(Error::NotACollineation { index, line: li });
                }
            }
        }
        Ok(CollineationGroup { group, num_points: np, num_lines: nl })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn num_lines(&self) -> usize {
        self.num_lines
    }

    pub fn order(&self) -> num_bigint::BigUint {
        self.group.order()
    }

    /// The subgroup stabilizing a vertex, rewrapped (stabilizers of
    /// collineations are collineations).
    pub fn vertex_stabilizer(&self, v: u32) -> Result<CollineationGroup> {
        Ok(CollineationGroup {
            group: self.group.stabilizer(v)?,
            num_points: self.num_points,
            num_lines: self.num_lines,
        })
    }

    /// The action restricted to point vertices.
    pub fn point_action(&self) -> Result<PermGroup> {
        let pts: Vec<u32> = (0..self.num_points as u32).collect();
        self.group.action_on_subset(&pts)
    }

    /// The action restricted to line vertices.
    pub fn line_action(&self) -> Result<PermGroup> {
        let lines: Vec<u32> = (self.num_points as u32..(self.num_points + self.num_lines) as u32)
            .collect();
        self.group.action_on_subset(&lines)
    }

    /// Wrap a subgroup given by generator permutations on the same domain.
    pub fn subgroup(&self, gens: Vec<Permutation>) -> Result<CollineationGroup> {
        for (index, g) in gens.iter().enumerate() {
            if !self.group.contains(g) {
                return Err(Error::NotASubgroup { index });
            }
        }
        let group = if gens.is_empty() {
            PermGroup::trivial(self.num_points + self.num_lines)
        } else {
            PermGroup::from_generators(gens)?
        };
        Ok(CollineationGroup { group, num_points: self.num_points, num_lines: self.num_lines })
    }
}
