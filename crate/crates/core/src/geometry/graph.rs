//! The bipartite incidence graph of a quadrangle, with BFS girth and
//! diameter.

use crate::geometry::GeneralizedQuadrangle;
use crate::{Error, Result};

/// Bipartite graph on points followed by lines; vertex `num_points + j` is
/// line `j`.
#[derive(Debug, Clone)]
pub struct IncidenceGraph {
    num_points: usize,
    num_lines: usize,
    adj: Vec<Vec<u32>>,
}

impl IncidenceGraph {
    pub fn from_quadrangle(gq: &GeneralizedQuadrangle) -> IncidenceGraph {
        Self::from_parts(gq.num_points(), gq.lines())
    }

    /// Build directly from lines over `num_points` points.
    pub fn from_parts(num_points: usize, lines: &[Vec<u32>]) -> IncidenceGraph {
        let num_lines = lines.len();
        let mut adj = vec![Vec::new(); num_points + num_lines];
        for (li, line) in lines.iter().enumerate() {
            let lv = (num_points + li) as u32;
            for &p in line {
                adj[p as usize].push(lv);
                adj[lv as usize].push(p);
            }
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        IncidenceGraph { num_points, num_lines, adj }
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn num_lines(&self) -> usize {
        self.num_lines
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn is_point_vertex(&self, v: u32) -> bool {
        (v as usize) < self.num_points
    }

    pub fn is_connected(&self) -> bool {
        let dist = self.bfs(0);
        dist.iter().all(|&d| d != u32::MAX)
    }

    fn bfs(&self, start: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.adj.len()];
        dist[start as usize] = 0;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v as usize] {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[v as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle, by BFS from every vertex.
    pub fn girth(&self) -> Result<u32> {
        let mut best = u32::MAX;
        for start in 0..self.adj.len() as u32 {
            let mut dist = vec![u32::MAX; self.adj.len()];
            let mut parent = vec![u32::MAX; self.adj.len()];
            dist[start as usize] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v as usize] {
                    if dist[w as usize] == u32::MAX {
                        dist[w as usize] = dist[v as usize] + 1;
                        parent[w as usize] = v;
                        queue.push_back(w);
                    } else if parent[v as usize] != w {
                        best = best.min(dist[v as usize] + dist[w as usize] + 1);
                    }
                }
            }
        }
        if best == u32::MAX {
            Err(Error::NoCycle)
        } else {
            Ok(best)
        }
    }

    /// Largest BFS eccentricity; errs on disconnected graphs.
    pub fn diameter(&self) -> Result<u32> {
        let mut best = 0;
        for start in 0..self.adj.len() as u32 {
            let dist = self.bfs(start);
            for &d in &dist {
                if d == u32::MAX {
                    return Err(Error::Disconnected);
                }
                best = best.max(d);
            }
        }
        Ok(best)
    }

    pub fn distance(&self, a: u32, b: u32) -> Option<u32> {
        let d = self.bfs(a)[b as usize];
        (d != u32::MAX).then_some(d)
    }
}
