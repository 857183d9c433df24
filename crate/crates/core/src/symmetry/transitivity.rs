//! Flag/antiflag transitivity, local s-arc-transitivity, and local actions.

use std::collections::HashMap;

use crate::geometry::{GeneralizedQuadrangle, IncidenceGraph};
use crate::permgroup::{PermGroup, Permutation};
use crate::symmetry::{antiflags, flags, s_arcs_from, CollineationGroup};
use crate::{Error, Result};

/// Orbit size of a point-line pair under the vertex action, computed on
/// demand as index pairs.
fn pair_orbit_size(cg: &CollineationGroup, start: (u32, u32)) -> usize {
    let np = cg.num_points() as u32;
    let gens = cg.group().generators();
    let mut seen = std::collections::HashSet::new();
    seen.insert(start);
    let mut stack = vec![start];
    while let Some((p, l)) = stack.pop() {
        for g in gens {
            let next = (g.apply(p), g.apply(np + l) - np);
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    seen.len()
}

/// Whether the group is transitive on flags.
pub fn is_flag_transitive(cg: &CollineationGroup, gq: &GeneralizedQuadrangle) -> Result<bool> {
    check_degrees(cg, gq)?;
    let all = flags(gq);
    let first = *all.first().expect("thick quadrangles have flags");
    if !gq.is_incident(first.0, first.1) {
        return Err(Error::NotAFlag(first.0, first.1));
    }
    Ok(pair_orbit_size(cg, first) == all.len())
}

/// Whether the group is transitive on antiflags.
pub fn is_antiflag_transitive(cg: &CollineationGroup, gq: &GeneralizedQuadrangle) -> Result<bool> {
    check_degrees(cg, gq)?;
    let all = antiflags(gq);
    let first = *all.first().expect("thick quadrangles have antiflags");
    Ok(pair_orbit_size(cg, first) == all.len())
}

fn check_degrees(cg: &CollineationGroup, gq: &GeneralizedQuadrangle) -> Result<()> {
    let expected = gq.num_points() + gq.num_lines();
    let got = cg.num_points() + cg.num_lines();
    if expected != got {
        return Err(Error::ActionDegreeMismatch { expected, got });
    }
    Ok(())
}

/// Locally (G,s)-arc-transitive: for one representative vertex per orbit,
/// the vertex stabilizer is transitive on the s-arcs starting there.
pub fn is_locally_s_arc_transitive(
    cg: &CollineationGroup,
    graph: &IncidenceGraph,
    s: u32,
) -> Result<bool> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    let group = cg.group();
    let reps = if group.generators().is_empty() {
        (0..graph.num_vertices() as u32).collect()
    } else {
        group.orbit_representatives()
    };
    for v in reps {
        let arcs = s_arcs_from(graph, v, s);
        if arcs.is_empty() {
            return Ok(false);
        }
        let index: HashMap<&[u32], usize> =
            arcs.iter().enumerate().map(|(i, a)| (a.as_slice(), i)).collect();
        let stab = group.stabilizer(v)?;
        let gens: Vec<&Permutation> = stab.generators().iter().collect();
        let mut seen = vec![false; arcs.len()];
        seen[0] = true;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(i) = stack.pop() {
            for g in &gens {
                let image: Vec<u32> = arcs[i].iter().map(|&x| g.apply(x)).collect();
                let j = *index.get(image.as_slice()).expect("stabilizer maps arcs to arcs");
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    stack.push(j);
                }
            }
        }
        if count != arcs.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The permutation group induced by the stabilizer of `v` on the neighbor
/// list of `v` (the kernel of the restriction is quotiented away by taking
/// images).
pub fn local_action(
    cg: &CollineationGroup,
    graph: &IncidenceGraph,
    v: u32,
) -> Result<PermGroup> {
    let neighbors = graph.neighbors(v);
    let position: HashMap<u32, u32> =
        neighbors.iter().enumerate().map(|(i, &n)| (n, i as u32)).collect();
    let stab = cg.group().stabilizer(v)?;
    let mut gens = Vec::new();
    for g in stab.generators() {
        let img: Vec<u32> = neighbors.iter().map(|&n| position[&g.apply(n)]).collect();
        let p = Permutation::from_images(img)?;
        if !p.is_identity() {
            gens.push(p);
        }
    }
    if gens.is_empty() {
        return Ok(PermGroup::trivial(neighbors.len()));
    }
    PermGroup::from_generators(gens)
}
