//! Raw incidence structures: points are dense indices, lines are sorted
//! point sets.

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    num_points: usize,
    lines: Vec<Vec<u32>>,
}

impl IncidenceStructure {
    /// Build from lines (each a set of point indices). Lines are sorted and
    /// checked for duplicates and range.
    pub fn new(num_points: usize, mut lines: Vec<Vec<u32>>) -> Result<IncidenceStructure> {
        if num_points == 0 || lines.is_empty() {
            return Err(Error::EmptyStructure);
        }
        for line in lines.iter_mut() {
            if line.is_empty() {
                return Err(Error::EmptyStructure);
            }
            line.sort_unstable();
            line.dedup();
            if let Some(&p) = line.last() {
                if p as usize >= num_points {
                    return Err(Error::PointOutOfRange { point: p as usize, degree: num_points });
                }
            }
        }
        let mut sorted: Vec<(usize, &Vec<u32>)> = lines.iter().enumerate().collect();
        sorted.sort_by_key(|(_, l)| *l);
        for w in sorted.windows(2) {
            if w[0].1 == w[1].1 {
                return Err(Error::DuplicateLine(w[1].0));
            }
        }
        Ok(IncidenceStructure { num_points, lines })
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn lines(&self) -> &[Vec<u32>] {
        &self.lines
    }

    pub fn line(&self, i: usize) -> &[u32] {
        &self.lines[i]
    }

    /// Lines through each point.
    pub fn point_lines(&self) -> Vec<Vec<u32>> {
        let mut pl = vec![Vec::new(); self.num_points];
        for (li, line) in self.lines.iter().enumerate() {
            for &p in line {
                pl[p as usize].push(li as u32);
            }
        }
        pl
    }

    pub fn is_incident(&self, point: u32, line: usize) -> bool {
        self.lines[line].binary_search(&point).is_ok()
    }
}
