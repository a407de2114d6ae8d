mod common;

use oneplane::generators::{gen_hh, gen_m, gen_xh, gen_xm, gen_yh};
use oneplane::maximality::{
    immovability_witness, insertion_candidates, is_immovable, is_maximal, maximality_witness,
    min_redraw_crossings, reduce_crossings, saturate, RedrawRoute, Route, SaturationPolicy,
};
use oneplane::properties::fuzz_instance;
use oneplane::{plane_from_faces, EdgeId, Error};

#[test]
fn hh1_has_one_face_candidates() {
    let g = gen_hh(1).unwrap();
    let cands = insertion_candidates(&g);
    assert!(cands
        .iter()
        .any(|c| matches!(c.route, Route::OneFace(f) if g.faces().walk(f).len() == 4)));
    for c in &cands {
        assert!(c.u < c.v && !g.has_edge(c.u, c.v));
    }
}

#[test]
fn complete_and_family_drawings_admit_nothing() {
    let k4 = plane_from_faces(
        vec![None; 4],
        &[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]],
    )
    .unwrap();
    assert!(insertion_candidates(&k4).is_empty());
    assert!(insertion_candidates(&gen_xh(1).unwrap()).is_empty());
    assert!(is_maximal(&gen_yh(1).unwrap()));
    for k in 2..=4 {
        assert!(is_maximal(&gen_xm(k).unwrap()), "XM^{k}");
    }
}

#[test]
fn removing_diagonals_breaks_maximality() {
    let g = gen_xh(1).unwrap();
    let (_, e, f) = g.crossing_pairs()[0];
    let (u, v) = (g.edge(e).u.min(g.edge(e).v), g.edge(e).u.max(g.edge(e).v));

    // the partner diagonal survives uncrossed, so e comes back across it
    let (h, _) = g.remove_edges(&[e]).unwrap();
    let back = insertion_candidates(&h);
    assert!(back.iter().all(|c| c.delta() == 1));
    assert!(back.iter().any(|c| (c.u, c.v) == (u, v)));

    // without both diagonals the quadrangle is a face again
    let (h, _) = g.remove_edges(&[e, f]).unwrap();
    let w = maximality_witness(&h).unwrap();
    assert!(
        matches!(w.route, Route::OneFace(q) if h.faces().walk(q).len() == 4),
        "{w}"
    );
    assert!(!common::brute_force_insertable(&g));
    assert!(common::brute_force_insertable(&h));
}

#[test]
fn saturation_examples() {
    let c5 = plane_from_faces(vec![None; 5], &[vec![0, 1, 2, 3, 4], vec![4, 3, 2, 1, 0]]).unwrap();
    let s = saturate(&c5, SaturationPolicy::Deterministic).unwrap();
    assert!(is_maximal(&s));
    assert_eq!(s.n(), 5);
    assert!(s.edge_count() >= common::tc_bound(5));

    let xh = gen_xh(1).unwrap();
    let fixed = saturate(&xh, SaturationPolicy::Seeded(9)).unwrap();
    assert_eq!(fixed.to_raw(), xh.to_raw());

    let prism = saturate(&gen_m(2).unwrap(), SaturationPolicy::Seeded(4)).unwrap();
    assert!(is_maximal(&prism));
    assert!(prism.edge_count() >= common::tc_bound(8));
}

#[test]
fn deterministic_saturation_is_reproducible() {
    let g = gen_m(3).unwrap();
    let a = saturate(&g, SaturationPolicy::Deterministic).unwrap();
    let b = saturate(&g, SaturationPolicy::Deterministic).unwrap();
    assert_eq!(a.to_raw(), b.to_raw());
}

#[test]
fn redraw_costs() {
    let yh = gen_yh(1).unwrap();
    let plain = yh
        .edge_ids()
        .find(|&e| yh.edge(e).crossing.is_none())
        .unwrap();
    assert_eq!(min_redraw_crossings(&yh, plain).unwrap().crossings, 0);

    for g in [gen_xh(1).unwrap(), gen_xm(2).unwrap()] {
        for e in g.edge_ids().filter(|&e| g.edge(e).crossing.is_some()) {
            let r = min_redraw_crossings(&g, e).unwrap();
            assert_eq!(r.crossings, 1);
            assert!(matches!(r.route, RedrawRoute::Original { .. }));
        }
    }
    assert!(matches!(
        min_redraw_crossings(&yh, EdgeId(10_000)),
        Err(Error::UnknownEdge(_))
    ));
}

#[test]
fn family_members_are_immovable() {
    for g in [
        gen_yh(1).unwrap(),
        gen_yh(2).unwrap(),
        gen_xh(1).unwrap(),
        gen_xh(2).unwrap(),
    ] {
        assert!(is_immovable(&g).unwrap());
    }
    assert!(matches!(
        is_immovable(&gen_hh(1).unwrap()),
        Err(Error::NotMaximal)
    ));
}

#[test]
fn movable_witness_redraws_without_crossing() {
    // found by the fuzzer: a maximal drawing on 5 vertices with 2 crossings
    let (g, _) = fuzz_instance(5, 11796131379044734736).unwrap();
    assert!(is_maximal(&g));
    let (e, r) = immovability_witness(&g).unwrap().expect("movable");
    assert!(g.edge(e).crossing.is_some());
    let redrawn = r.apply().unwrap();
    assert_eq!(redrawn.edge_count(), g.edge_count());
    assert_eq!(redrawn.crossing_count(), g.crossing_count() - 1);
    let reduced = reduce_crossings(&g).unwrap();
    assert!(is_immovable_or_not_maximal(&reduced));
}

fn is_immovable_or_not_maximal(g: &oneplane::OnePlaneGraph) -> bool {
    g.edge_ids()
        .filter(|&e| g.edge(e).crossing.is_some())
        .all(|e| min_redraw_crossings(g, e).unwrap().crossings == 1)
}
