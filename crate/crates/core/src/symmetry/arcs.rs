//! Arcs of the incidence graph: vertex paths with no immediate backtracking.

use crate::geometry::{GeneralizedQuadrangle, IncidenceGraph};
use crate::{Error, Result};

/// An s-arc: s+1 vertices, consecutive ones adjacent, no u-turns.
pub type Arc = Vec<u32>;

/// All s-arcs starting at `v`, in lexicographic order of their vertex
/// sequences.
pub fn s_arcs_from(graph: &IncidenceGraph, v: u32, s: u32) -> Vec<Arc> {
    let mut out = Vec::new();
    let mut path = vec![v];
    extend(graph, &mut path, s, &mut out);
    out
}

fn extend(graph: &IncidenceGraph, path: &mut Vec<u32>, s: u32, out: &mut Vec<Arc>) {
    if path.len() as u32 == s + 1 {
        out.push(path.clone());
        return;
    }
    let last = *path.last().unwrap();
    let forbidden = path.len().checked_sub(2).map(|i| path[i]);
    for &w in graph.neighbors(last) {
        if Some(w) != forbidden {
            path.push(w);
            extend(graph, path, s, out);
            path.pop();
        }
    }
}

/// The unique 3-arc from an antiflag's point to its line. A count other
/// than one indicates the structure is not a generalized quadrangle.
pub fn unique_3arc(
    gq: &GeneralizedQuadrangle,
    graph: &IncidenceGraph,
    point: u32,
    line: u32,
) -> Result<Arc> {
    if gq.is_incident(point, line) || point as usize >= gq.num_points() {
        return Err(Error::NotAnAntiflag(point, line));
    }
    let target = gq.num_points() as u32 + line;
    let arcs: Vec<Arc> = s_arcs_from(graph, point, 3)
        .into_iter()
        .filter(|a| a[3] == target)
        .collect();
    if arcs.len() != 1 {
        return Err(Error::ThreeArcCount { point, line, count: arcs.len() });
    }
    Ok(arcs.into_iter().next().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{classical_gq, ClassicalFamily};

    #[test]
    fn three_arc_count_from_a_point() {
        let (gq, _) = classical_gq(ClassicalFamily::W3, 2, None).unwrap();
        let graph = IncidenceGraph::from_quadrangle(&gq);
        // st(t+1) = 2*2*3 = 12 arcs from any point vertex
        assert_eq!(s_arcs_from(&graph, 0, 3).len(), 12);
    }

    #[test]
    fn antiflags_have_unique_three_arcs() {
        let (gq, _) = classical_gq(ClassicalFamily::W3, 2, None).unwrap();
        let graph = IncidenceGraph::from_quadrangle(&gq);
        for l in 0..gq.num_lines() as u32 {
            if !gq.is_incident(0, l) {
                let arc = unique_3arc(&gq, &graph, 0, l).unwrap();
                assert_eq!(arc.len(), 4);
                assert_eq!(arc[0], 0);
            }
        }
    }
}
