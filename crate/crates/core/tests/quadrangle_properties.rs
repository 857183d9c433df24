//! Structural properties of the constructed quadrangles: parameter
//! identities, incidence-graph metrics, perps, regular pairs, ovoids, and
//! the coset-geometry round trip.

use gq_core::algebra::count_totally_singular;
use gq_core::constructions::{
    classical_gq, coset_geometry, regular_hyperoval, t2_star, ClassicalFamily,
};
use gq_core::geometry::{
    find_ovoid, is_ovoid, is_regular_pair, perp, perp_pair, verify_gq, GeneralizedQuadrangle,
    IncidenceGraph,
};
use gq_core::sieve::{parameter_feasible, pbounds_with_s, solve_order_equation};
use gq_core::symmetry::{antiflags, flags, t2star_collineations, unique_3arc};
use num_bigint::BigUint;

fn fixtures() -> Vec<(String, GeneralizedQuadrangle)> {
    let mut out = Vec::new();
    for (family, q) in [
        (ClassicalFamily::W3, 2),
        (ClassicalFamily::W3, 3),
        (ClassicalFamily::Q4, 3),
        (ClassicalFamily::QMinus5, 2),
        (ClassicalFamily::H3, 2),
        (ClassicalFamily::H4, 2),
    ] {
        let (gq, _) = classical_gq(family, q, None).unwrap();
        out.push((format!("{} q={q}", family.name()), gq));
    }
    let h = regular_hyperoval(4).unwrap();
    out.push(("T2* q=4".to_string(), t2_star(&h).unwrap().0));
    out
}

#[test]
fn parameter_identities_hold_for_every_fixture() {
    for (name, gq) in fixtures() {
        let (s, t) = gq.order();
        let (s, t) = (s as u64, t as u64);
        assert_eq!(gq.num_points() as u64, (s + 1) * (s * t + 1), "{name}");
        assert_eq!(gq.num_lines() as u64, (t + 1) * (s * t + 1), "{name}");
        let v = parameter_feasible(s, t);
        assert!(v.feasible, "{name}: {:?}", v.witness);
        // the order equation inverts the point count
        let sol = solve_order_equation(&BigUint::from(gq.num_points() as u64), &BigUint::from(t));
        assert_eq!(sol.s, Some(BigUint::from(s)), "{name}");
        if s <= t {
            let bounds = pbounds_with_s(&BigUint::from(gq.num_points() as u64), s, t);
            assert!(bounds.holds, "{name}");
        }
    }
}

#[test]
fn incidence_graphs_have_girth_eight_and_diameter_four() {
    for (name, gq) in fixtures() {
        let g = IncidenceGraph::from_quadrangle(&gq);
        assert_eq!(g.num_edges(), gq.num_points() * (gq.t() as usize + 1), "{name}");
        assert_eq!(g.girth().unwrap(), 8, "{name}");
        assert_eq!(g.diameter().unwrap(), 4, "{name}");
    }
}

#[test]
fn flag_and_antiflag_counts() {
    let (w32, _) = classical_gq(ClassicalFamily::W3, 2, None).unwrap();
    assert_eq!(flags(&w32).len(), 45);
    assert_eq!(antiflags(&w32).len(), 180);

    let h = regular_hyperoval(4).unwrap();
    let (gq35, _) = t2_star(&h).unwrap();
    assert_eq!(flags(&gq35).len(), 384);
    assert_eq!(antiflags(&gq35).len(), 5760);
}

#[test]
fn every_antiflag_has_a_unique_three_arc() {
    for (name, gq) in fixtures() {
        let graph = IncidenceGraph::from_quadrangle(&gq);
        // exhaustive on the smaller fixtures, sampled on the larger ones
        let step = if gq.num_points() > 50 { 17 } else { 1 };
        for (i, (p, l)) in antiflags(&gq).into_iter().enumerate() {
            if i % step == 0 {
                unique_3arc(&gq, &graph, p, l).unwrap_or_else(|e| panic!("{name}: {e}"));
            }
        }
    }
}

#[test]
fn three_arc_counts_match_the_closed_count() {
    use gq_core::symmetry::s_arcs_from;
    for (name, gq) in fixtures() {
        let graph = IncidenceGraph::from_quadrangle(&gq);
        let (s, t) = (gq.s() as usize, gq.t() as usize);
        // from a point vertex: (t+1) s t arcs; from a line vertex: (s+1) t s
        assert_eq!(s_arcs_from(&graph, 0, 3).len(), (t + 1) * s * t, "{name}");
        let line_vertex = gq.num_points() as u32;
        assert_eq!(s_arcs_from(&graph, line_vertex, 3).len(), (s + 1) * t * s, "{name}");
    }
}

#[test]
fn perp_sizes_in_the_doily() {
    let (gq, _) = classical_gq(ClassicalFamily::W3, 2, None).unwrap();
    for p in 0..15 {
        assert_eq!(perp(&gq, p).unwrap().len(), 7); // 1 + (t+1)s
    }
    for p1 in 0..15u32 {
        for p2 in p1 + 1..15 {
            if !gq.are_collinear(p1, p2) {
                assert_eq!(perp_pair(&gq, p1, p2).unwrap().len(), 3); // t+1
                // every noncollinear pair of W(3,2) is regular
                assert!(is_regular_pair(&gq, p1, p2).unwrap());
            } else {
                // perp of a collinear pair contains their common line
                let pp = perp_pair(&gq, p1, p2).unwrap();
                let line = gq
                    .lines()
                    .iter()
                    .find(|l| l.contains(&p1) && l.contains(&p2))
                    .unwrap();
                assert!(line.iter().all(|x| pp.contains(x)));
                assert!(is_regular_pair(&gq, p1, p2).is_err());
            }
        }
    }
}

#[test]
fn qminus5_pairs_are_not_regular() {
    let (gq, _) = classical_gq(ClassicalFamily::QMinus5, 2, None).unwrap();
    for p1 in 0..gq.num_points() as u32 {
        for p2 in p1 + 1..gq.num_points() as u32 {
            if !gq.are_collinear(p1, p2) {
                assert!(!is_regular_pair(&gq, p1, p2).unwrap(), "pair ({p1},{p2})");
            }
        }
    }
}

#[test]
fn ovoid_search() {
    // W(3,2) has ovoids; the backtracking oracle finds one of size st+1 = 5
    let (w32, _) = classical_gq(ClassicalFamily::W3, 2, None).unwrap();
    let ovoid = find_ovoid(&w32).expect("the doily has ovoids");
    assert_eq!(ovoid.len(), 5);
    assert!(is_ovoid(&w32, &ovoid));
    // the full point set and the empty set are not ovoids
    let all: Vec<u32> = (0..15).collect();
    assert!(!is_ovoid(&w32, &all));
    assert!(!is_ovoid(&w32, &[]));

    // exhaustive search over 9-point candidates in the (2,4) quadrangle
    // finds none: its collinearity graph has no coclique of size st+1
    let (qm5, _) = classical_gq(ClassicalFamily::QMinus5, 2, None).unwrap();
    assert!(find_ovoid(&qm5).is_none());
}

#[test]
fn dual_swaps_order_and_is_involutive() {
    let (gq, _) = classical_gq(ClassicalFamily::QMinus5, 2, None).unwrap();
    let dual = gq.dual().unwrap();
    assert_eq!(dual.order(), (4, 2));
    assert_eq!(dual.num_points(), 45);
    assert_eq!(dual.num_lines(), 27);
    let back = dual.dual().unwrap();
    assert_eq!(back.lines(), gq.lines());

    let h = regular_hyperoval(4).unwrap();
    let (gq35, _) = t2_star(&h).unwrap();
    assert_eq!(gq35.dual().unwrap().order(), (5, 3));
}

#[test]
fn counts_match_the_closed_formula() {
    use gq_core::algebra::FormKind;
    let cases = [
        (ClassicalFamily::W3, 2u64, FormKind::Symplectic, 4usize, 2u64),
        (ClassicalFamily::W3, 3, FormKind::Symplectic, 4, 3),
        (ClassicalFamily::Q4, 3, FormKind::QuadraticParabolic, 5, 3),
        (ClassicalFamily::QMinus5, 2, FormKind::QuadraticMinus, 6, 2),
        (ClassicalFamily::H3, 2, FormKind::Hermitian, 4, 4),
        (ClassicalFamily::H4, 2, FormKind::Hermitian, 5, 4),
    ];
    for (family, q, kind, n, field_q) in cases {
        let (gq, _) = classical_gq(family, q, None).unwrap();
        let points = count_totally_singular(kind, n, 1, field_q).unwrap();
        let lines = count_totally_singular(kind, n, 2, field_q).unwrap();
        assert_eq!(BigUint::from(gq.num_points() as u64), points, "{}", family.name());
        assert_eq!(BigUint::from(gq.num_lines() as u64), lines, "{}", family.name());
    }
}

#[test]
fn coset_round_trip_for_the_doily() {
    let (gq, data) = classical_gq(ClassicalFamily::W3, 2, None).unwrap();
    let cg = gq_core::symmetry::induced_collineations(&gq, &data).unwrap();
    let group = cg.group();
    // point stabilizer and the stabilizer of an incident line
    let a = group.stabilizer(0).unwrap();
    let line_vertex = gq.num_points() as u32 + gq.lines_through(0)[0];
    let b = group.stabilizer(line_vertex).unwrap();
    let cos = coset_geometry(group, &a, &b).unwrap();
    let rebuilt = verify_gq(cos.to_incidence_structure().unwrap()).unwrap();
    assert_eq!(rebuilt.order(), gq.order());
    assert_eq!(rebuilt.num_points(), gq.num_points());
    assert_eq!(rebuilt.num_lines(), gq.num_lines());
    assert_eq!(flags(&rebuilt).len(), flags(&gq).len());
    assert_eq!(antiflags(&rebuilt).len(), antiflags(&gq).len());
}

#[test]
fn h4dual_swaps_the_hermitian_parameters() {
    let (gq, data) = classical_gq(ClassicalFamily::H4Dual, 2, None).unwrap();
    assert!(data.dualized);
    assert_eq!(gq.order(), (8, 4));
    assert_eq!(gq.num_points(), 297);
    assert_eq!(gq.num_lines(), 165);
}

#[test]
fn q4_reflection_group_reaches_the_full_orthogonal_image() {
    let (gq, data) = classical_gq(ClassicalFamily::Q4, 3, None).unwrap();
    let cg = gq_core::symmetry::induced_collineations(&gq, &data).unwrap();
    assert_eq!(cg.order(), BigUint::from(51_840u32));
    assert!(gq_core::symmetry::is_antiflag_transitive(&cg, &gq).unwrap());
}

#[test]
fn t2star_line_count_matches_hyperoval_size() {
    let h = regular_hyperoval(4).unwrap();
    let (gq, _) = t2_star(&h).unwrap();
    // (q+2) q^2 lines
    assert_eq!(gq.num_lines() as u64, 6 * 16);
}

#[test]
fn t2star_full_group_antiflag_orbit() {
    let h = regular_hyperoval(4).unwrap();
    let (gq, data) = t2_star(&h).unwrap();
    let cg = t2star_collineations(&gq, &data).unwrap();
    assert!(gq_core::symmetry::is_antiflag_transitive(&cg, &gq).unwrap());
}
