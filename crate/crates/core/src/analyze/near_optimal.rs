use std::collections::{BTreeMap, BTreeSet};

use crate::drawing::OnePlaneGraph;
use crate::ids::{DartId, EdgeId, VertexId};
use crate::transform::merge_faces_across;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearOptimal {
    pub holds: bool,
    pub violations: Vec<String>,
}

/// Checks the subgraph of uncrossed edges: it is connected and spans all
/// vertices, every face is a triangle or a quadrangle, each quadrangle holds
/// exactly one crossing, formed by its two diagonals, and no edge lies on two
/// triangles.
pub fn is_near_optimal(g: &OnePlaneGraph) -> NearOptimal {
    let mut violations = Vec::new();
    let plain = crate::graph::SimpleGraph::new(
        g.n(),
        g.edges()
            .iter()
            .filter(|e| e.crossing.is_none())
            .map(|e| (e.u.0, e.v.0)),
    );
    if !plain.is_connected() {
        violations.push("uncrossed edges do not form a connected spanning subgraph".to_string());
        return NearOptimal {
            holds: false,
            violations,
        };
    }
    let crossed: Vec<EdgeId> = g
        .edge_ids()
        .filter(|&e| g.edge(e).crossing.is_some())
        .collect();
    let rep = merge_faces_across(g, &crossed);
    let faces = g.faces();

    // boundary length and vertices of every merged face, from its uncrossed darts
    let mut length: BTreeMap<usize, usize> = BTreeMap::new();
    let mut corners: BTreeMap<usize, BTreeSet<VertexId>> = BTreeMap::new();
    let mut fakes: BTreeMap<usize, BTreeSet<VertexId>> = BTreeMap::new();
    for f in faces.ids() {
        let r = rep[f.0];
        length.entry(r).or_insert(0);
        for &d in faces.walk(f) {
            let tail = g.map().tail(d);
            if g.is_true_vertex(tail) {
                corners.entry(r).or_default().insert(tail);
            } else {
                fakes.entry(r).or_default().insert(tail);
            }
            if g.edge(g.segment_of_dart(d).edge).crossing.is_none() {
                *length.get_mut(&r).expect("entry") += 1;
            }
        }
    }
    for (&r, &len) in &length {
        match len {
            3 => {}
            4 => {
                let cross = fakes.get(&r).cloned().unwrap_or_default();
                if cross.len() != 1 {
                    violations.push(format!("quadrangle contains {} crossings", cross.len()));
                    continue;
                }
                let c = *cross.iter().next().expect("one crossing");
                let (e, f) = g.crossing_pair(c);
                let ends: BTreeSet<VertexId> =
                    [g.edge(e).u, g.edge(e).v, g.edge(f).u, g.edge(f).v].into();
                if corners.get(&r) != Some(&ends) {
                    violations.push(format!(
                        "crossing {c} is not formed by the diagonals of its quadrangle"
                    ));
                }
            }
            _ => violations.push(format!("face of length {len}")),
        }
    }
    for e in g.edge_ids().filter(|&e| g.edge(e).crossing.is_none()) {
        let s = g.edge_segments(e).start;
        let a = rep[faces.face_of(DartId(2 * s)).0];
        let b = rep[faces.face_of(DartId(2 * s + 1)).0];
        if length[&a] == 3 && length[&b] == 3 {
            violations.push(format!("{e} lies on two triangles"));
        }
    }
    NearOptimal {
        holds: violations.is_empty(),
        violations,
    }
}
