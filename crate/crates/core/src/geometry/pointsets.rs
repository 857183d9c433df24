//! Perp operators, regular pairs, and ovoids.

use crate::geometry::GeneralizedQuadrangle;
use crate::{Error, Result};

/// perp(P): P together with all points collinear with it.
pub fn perp(gq: &GeneralizedQuadrangle, p: u32) -> Result<Vec<u32>> {
    if p as usize >= gq.num_points() {
        return Err(Error::PointOutOfRange { point: p as usize, degree: gq.num_points() });
    }
    let mut out = gq.collinear_points(p);
    out.push(p);
    out.sort_unstable();
    Ok(out)
}

fn perp_of_set(gq: &GeneralizedQuadrangle, set: &[u32]) -> Result<Vec<u32>> {
    let mut iter = set.iter();
    let Some(&first) = iter.next() else {
        return Ok((0..gq.num_points() as u32).collect());
    };
    let mut acc = perp(gq, first)?;
    for &p in iter {
        let next = perp(gq, p)?;
        acc.retain(|x| next.binary_search(x).is_ok());
    }
    Ok(acc)
}

/// {P1, P2}^perp: the points at distance 0 or 2 in the collinearity graph
/// from both, i.e. the intersection of the two perps.
pub fn perp_pair(gq: &GeneralizedQuadrangle, p1: u32, p2: u32) -> Result<Vec<u32>> {
    if p1 == p2 {
        return Err(Error::CollinearPair);
    }
    perp_of_set(gq, &[p1, p2])
}

/// S^perp-perp: the points at distance 0 or 2 from every point of S^perp.
pub fn perp_perp(gq: &GeneralizedQuadrangle, set: &[u32]) -> Result<Vec<u32>> {
    let inner = perp_of_set(gq, set)?;
    perp_of_set(gq, &inner)
}

/// A noncollinear pair (P1, P2) is regular when its double perp has size
/// t + 1 (the size the single perp always has).
pub fn is_regular_pair(gq: &GeneralizedQuadrangle, p1: u32, p2: u32) -> Result<bool> {
    if p1 == p2 || gq.are_collinear(p1, p2) {
        return Err(Error::CollinearPair);
    }
    let hull = perp_perp(gq, &[p1, p2])?;
    Ok(hull.len() == gq.t() as usize + 1)
}

/// Whether every line meets the set in exactly one point. A true result
/// forces |S| = st + 1 (asserted).
pub fn is_ovoid(gq: &GeneralizedQuadrangle, set: &[u32]) -> bool {
    let sorted: Vec<u32> = {
        let mut v = set.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    };
    let ok = gq
        .lines()
        .iter()
        .all(|line| line.iter().filter(|p| sorted.binary_search(p).is_ok()).count() == 1);
    if ok {
        assert_eq!(
            sorted.len() as u64,
            gq.s() as u64 * gq.t() as u64 + 1,
            "an ovoid has st + 1 points"
        );
    }
    ok
}

/// Backtracking search for an ovoid. Points are added in increasing order;
/// a partial set is pruned as soon as it covers some line twice or some
/// uncovered line has no remaining candidate.
pub fn find_ovoid(gq: &GeneralizedQuadrangle) -> Option<Vec<u32>> {
    let target = gq.s() as usize * gq.t() as usize + 1;
    let np = gq.num_points();
    let mut chosen: Vec<u32> = Vec::new();
    let mut blocked = vec![false; np]; // collinear with a chosen point
    fn rec(
        gq: &GeneralizedQuadrangle,
        start: u32,
        target: usize,
        chosen: &mut Vec<u32>,
        blocked: &mut Vec<bool>,
    ) -> bool {
        if chosen.len() == target {
            return is_ovoid(gq, chosen);
        }
        // remaining candidates must be able to fill the set
        let remaining = (start..gq.num_points() as u32).filter(|&p| !blocked[p as usize]).count();
        if chosen.len() + remaining < target {
            return false;
        }
        for p in start..gq.num_points() as u32 {
            if blocked[p as usize] {
                continue;
            }
            let newly: Vec<u32> = gq
                .collinear_points(p)
                .into_iter()
                .filter(|&x| !blocked[x as usize] && x != p)
                .collect();
            blocked[p as usize] = true;
            for &x in &newly {
                blocked[x as usize] = true;
            }
            chosen.push(p);
            if rec(gq, p + 1, target, chosen, blocked) {
                return true;
            }
            chosen.pop();
            for &x in &newly {
                blocked[x as usize] = false;
            }
            blocked[p as usize] = false;
        }
        false
    }
    if rec(gq, 0, target, &mut chosen, &mut blocked) {
        Some(chosen)
    } else {
        None
    }
}
