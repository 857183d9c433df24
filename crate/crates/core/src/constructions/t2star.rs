//! The quadrangle T2*(O) of a hyperoval O in PG(2,q).
//!
//! Fix the hyperplane at infinity of PG(3,q). Points of the quadrangle are
//! the q^3 affine points; lines are the affine lines whose direction is a
//! point of O. The result has order (q-1, q+1).

use crate::constructions::Hyperoval;
use crate::geometry::{verify_gq, GeneralizedQuadrangle, IncidenceStructure};
use crate::Result;

/// Coordinate data retained from the construction: the affine point order
/// and the hyperoval, so collineations of the affine space can act.
pub struct T2StarData {
    pub hyperoval: Hyperoval,
    /// Affine point with index i has coordinates `affine_coords(i)`.
    pub q: u64,
    /// line_sets[l] = sorted affine point indices of line l.
    pub line_sets: Vec<Vec<u32>>,
    /// Direction (hyperoval point position) of each line.
    pub line_direction: Vec<usize>,
}

impl T2StarData {
    /// Base-q digits of an affine point index, most significant first.
    pub fn affine_coords(&self, index: u32) -> [u64; 3] {
        let q = self.q;
        let i = index as u64;
        [i / (q * q), i / q % q, i % q]
    }

    pub fn affine_index(&self, v: &[u64; 3]) -> u32 {
        (v[0] * self.q * self.q + v[1] * self.q + v[2]) as u32
    }
}

/// Build T2*(O) and verify it. For q = 2 the order is (1, 3), which the
/// verifier rejects as thin.
pub fn t2_star(hyperoval: &Hyperoval) -> Result<(GeneralizedQuadrangle, T2StarData)> {
    let field = hyperoval.field().clone();
    let q = field.order();
    let num_points = (q * q * q) as usize;
    let data_stub = T2StarData {
        hyperoval: hyperoval.clone(),
        q,
        line_sets: Vec::new(),
        line_direction: Vec::new(),
    };

    let mut line_sets: Vec<Vec<u32>> = Vec::new();
    let mut line_direction: Vec<usize> = Vec::new();
    let mut on_some_line = vec![false; num_points];
    for (hpos, h) in hyperoval.points().iter().enumerate() {
        // direction vector of the infinite point (its plane coordinates)
        on_some_line.iter_mut().for_each(|b| *b = false);
        for start in 0..num_points as u32 {
            if on_some_line[start as usize] {
                continue;
            }
            let base = data_stub.affine_coords(start);
            let mut line: Vec<u32> = field
                .elements()
                .map(|lambda| {
                    let v = [
                        field.add(base[0], field.mul(lambda, h[0])),
                        field.add(base[1], field.mul(lambda, h[1])),
                        field.add(base[2], field.mul(lambda, h[2])),
                    ];
                    data_stub.affine_index(&v)
                })
                .collect();
            line.sort_unstable();
            for &p in &line {
                on_some_line[p as usize] = true;
            }
            line_sets.push(line);
            line_direction.push(hpos);
        }
    }

    let inc = IncidenceStructure::new(num_points, line_sets.clone())?;
    let gq = verify_gq(inc)?;
    let data = T2StarData { hyperoval: hyperoval.clone(), q, line_sets, line_direction };
    Ok((gq, data))
}
