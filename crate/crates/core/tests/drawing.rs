use oneplane::generators::{gen_h, gen_hh, gen_random_seed, gen_xh, gen_xm, gen_yh};
use oneplane::maximality::{saturate, SaturationPolicy};
use oneplane::{plane_from_faces, validate, FaceKind, Half, RawDrawing, VertexId, VertexKind};
use proptest::prelude::*;

fn c4() -> oneplane::OnePlaneGraph {
    plane_from_faces(vec![None; 4], &[vec![0, 1, 2, 3], vec![3, 2, 1, 0]]).unwrap()
}

#[test]
fn xh1_validates_with_expected_faces() {
    let g = gen_xh(1).unwrap();
    let raw = g.to_raw();
    let again = validate(&raw).unwrap();
    assert_eq!(again.to_raw(), raw);
    assert_eq!(g.map().vertex_count(), 18);
    assert_eq!(g.map().segment_count(), 48);
    assert_eq!(g.faces().len(), 32);
    assert_eq!(g.faces().fake_count(), 24);
    assert_eq!(g.faces().true_count(), 8);
}

#[test]
fn plane_c4_has_two_true_faces() {
    let g = c4();
    assert_eq!(g.faces().len(), 2);
    assert!(g.faces().ids().all(|f| g.faces().kind(f) == FaceKind::True));
}

#[test]
fn fake_vertex_of_degree_three_is_rejected() {
    let mut raw = gen_xh(1).unwrap().to_raw();
    let c = (0..raw.vertices.len())
        .find(|&v| raw.vertices[v].kind == VertexKind::Fake)
        .unwrap();
    raw.rotation[c].pop();
    let err = validate(&raw).unwrap_err();
    assert!(err.has("FAKE_DEGREE_NOT_4"), "{err}");
}

#[test]
fn adjacent_crossing_edges_are_rejected() {
    // star from 0 with two spokes forced through one fake vertex
    let mut raw = RawDrawing::default();
    let v: Vec<VertexId> = (0..3)
        .map(|_| raw.add_vertex(VertexKind::True, None))
        .collect();
    let c = raw.add_vertex(VertexKind::Fake, None);
    let a = raw.add_edge(v[0], v[1]);
    let b = raw.add_edge(v[0], v[2]);
    raw.edges[a.0].crossings = vec![c];
    raw.edges[b.0].crossings = vec![c];
    raw.rotation[v[0].0] = vec![(a, Half::USide), (b, Half::USide)];
    raw.rotation[v[1].0] = vec![(a, Half::VSide)];
    raw.rotation[v[2].0] = vec![(b, Half::VSide)];
    raw.rotation[c.0] = vec![
        (a, Half::USide),
        (b, Half::USide),
        (a, Half::VSide),
        (b, Half::VSide),
    ];
    let err = validate(&raw).unwrap_err();
    assert!(err.has("ADJACENT_EDGES_CROSS"), "{err}");
}

#[test]
fn validation_reports_every_violation() {
    let mut raw = c4().to_raw();
    raw.add_vertex(VertexKind::Fake, None);
    raw.rotation[0].pop();
    let err = validate(&raw).unwrap_err();
    assert!(err.violations.len() >= 2, "{err}");
}

#[test]
fn crossing_and_degree_queries() {
    let g = gen_xh(1).unwrap();
    assert_eq!(g.crossing_count(), 6);
    assert!(g.true_vertices().all(|v| g.c_of(v).unwrap() == 2));
    assert_eq!(gen_hh(1).unwrap().crossing_count(), 0);
    assert!(matches!(
        g.degree(VertexId(99)),
        Err(oneplane::Error::UnknownVertex(_))
    ));
}

#[test]
fn underlying_counts() {
    for (g, n, m) in [
        (gen_xm(1).unwrap(), 6, 14),
        (gen_yh(1).unwrap(), 20, 60),
        (gen_h(2).unwrap(), 12, 20),
    ] {
        let u = g.underlying();
        assert_eq!((u.order(), u.size()), (n, m));
    }
}

fn random_drawing() -> impl Strategy<Value = oneplane::OnePlaneGraph> {
    (4usize..=16, any::<u64>(), any::<bool>()).prop_map(|(n, seed, sat)| {
        let g = gen_random_seed(n, seed).unwrap();
        if sat {
            saturate(&g, SaturationPolicy::Seeded(seed)).unwrap()
        } else {
            g
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn planarization_counts_and_euler(g in random_drawing()) {
        let map = g.map();
        prop_assert_eq!(map.vertex_count(), g.n() + g.crossing_count());
        prop_assert_eq!(map.segment_count(), g.edge_count() + 2 * g.crossing_count());
        prop_assert_eq!(map.euler_characteristic(), 2);
    }

    #[test]
    fn fake_vertices_see_four_distinct_fake_faces(g in random_drawing()) {
        let faces = g.faces();
        for c in g.fake_vertices() {
            let mut around: Vec<_> = g.map().rotation(c).iter().map(|&d| faces.face_of(d)).collect();
            prop_assert!(around.iter().all(|&f| faces.is_fake(f)));
            around.sort_unstable();
            around.dedup();
            prop_assert_eq!(around.len(), 4);
        }
    }

    #[test]
    fn edges_share_at_most_one_crossing(g in random_drawing()) {
        for (c, e, f) in g.crossing_pairs() {
            prop_assert_eq!(g.edge(e).crossing, Some(c));
            prop_assert_eq!(g.edge(f).crossing, Some(c));
            prop_assert!(e != f);
        }
    }

    #[test]
    fn faces_are_deterministic(g in random_drawing()) {
        let again = validate(&g.to_raw()).unwrap();
        let walks = |h: &oneplane::OnePlaneGraph| h.faces().ids().map(|f| h.faces().walk(f).to_vec()).collect::<Vec<_>>();
        prop_assert_eq!(walks(&g), walks(&again));
    }
}
