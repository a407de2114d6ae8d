//! Independent reference implementations used to cross-check the library.
#![allow(dead_code)]

use oneplane::drawing::Half;
use oneplane::{validate, DartId, OnePlaneGraph, SimpleGraph, VertexId, VertexKind};

/// Tries every nonadjacent true pair at every pair of corners of one face, and
/// across every uncrossed segment separating two corners, keeping whatever
/// passes validation.
pub fn brute_force_insertable(g: &OnePlaneGraph) -> bool {
    let map = g.map();
    let faces = g.faces();
    let ok_pair = |u: VertexId, v: VertexId| {
        u != v && g.is_true_vertex(u) && g.is_true_vertex(v) && !g.has_edge(u, v)
    };
    let corners = |f| {
        faces
            .walk(f)
            .iter()
            .map(|&d: &DartId| (map.tail(d), d))
            .collect::<Vec<_>>()
    };

    for f in faces.ids() {
        let cs = corners(f);
        for &(u, du) in &cs {
            for &(v, dv) in &cs {
                if u >= v || !ok_pair(u, v) {
                    continue;
                }
                let mut raw = g.to_raw();
                let e = raw.add_edge(u, v);
                raw.rotation[u.0].insert(map.rotation_position(du), (e, Half::Whole));
                raw.rotation[v.0].insert(map.rotation_position(dv), (e, Half::Whole));
                if validate(&raw).is_ok() {
                    return true;
                }
            }
        }
    }

    for (s, seg) in g.segments().iter().enumerate() {
        let crossed = seg.edge;
        let edge = *g.edge(crossed);
        if edge.crossing.is_some() {
            continue;
        }
        let fwd = DartId(2 * s);
        for (side_u, side_v, forward) in [(fwd, fwd.twin(), true), (fwd.twin(), fwd, false)] {
            for &(u, du) in &corners(faces.face_of(side_u)) {
                for &(v, dv) in &corners(faces.face_of(side_v)) {
                    if !ok_pair(u, v) || edge.touches(u) || edge.touches(v) {
                        continue;
                    }
                    let mut raw = g.to_raw();
                    let c = raw.add_vertex(VertexKind::Fake, None);
                    raw.edges[crossed.0].crossings = vec![c];
                    for (end, half) in [(edge.u, Half::USide), (edge.v, Half::VSide)] {
                        for entry in raw.rotation[end.0].iter_mut().filter(|x| x.0 == crossed) {
                            entry.1 = half;
                        }
                    }
                    let e = raw.add_edge(u, v);
                    raw.edges[e.0].crossings = vec![c];
                    raw.rotation[u.0].insert(map.rotation_position(du), (e, Half::USide));
                    raw.rotation[v.0].insert(map.rotation_position(dv), (e, Half::VSide));
                    let (a, b) = if forward {
                        (Half::USide, Half::VSide)
                    } else {
                        (Half::VSide, Half::USide)
                    };
                    raw.rotation[c.0] = vec![
                        (crossed, Half::USide),
                        (e, a),
                        (crossed, Half::VSide),
                        (e, b),
                    ];
                    if validate(&raw).is_ok() {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Smallest vertex set whose removal disconnects `g`, by exhaustive search.
pub fn brute_force_connectivity(g: &SimpleGraph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n - 1;
    }
    for size in 0..n {
        let mut found = false;
        for_each_subset(n, size, &mut |set| {
            if !found {
                let mut removed = vec![false; n];
                for &v in set {
                    removed[v] = true;
                }
                found = components(g, &removed) >= 2;
            }
        });
        if found {
            return size;
        }
    }
    n - 1
}

fn for_each_subset(n: usize, size: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if left == 0 {
            f(cur);
            return;
        }
        for v in start..=n - left {
            cur.push(v);
            rec(v + 1, n, left - 1, cur, f);
            cur.pop();
        }
    }
    rec(0, n, size, &mut Vec::new(), f);
}

fn components(g: &SimpleGraph, removed: &[bool]) -> usize {
    let n = g.order();
    let mut seen = removed.to_vec();
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    count
}

/// `⌈7n/3⌉ - 3`.
pub fn tc_bound(n: usize) -> usize {
    (7 * n).div_ceil(3) - 3
}
