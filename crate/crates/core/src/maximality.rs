//! Edge-insertion search on a fixed drawing.
//!
//! A new edge crosses at most one existing edge, and that edge must still be
//! uncrossed. So its route either stays inside one face of the planarization,
//! or passes through two faces separated by one uncrossed segment. Crossing a
//! segment of an already crossed edge would give that edge a second crossing.
//! Enumerating both route shapes over all faces is therefore complete.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::drawing::OnePlaneGraph;
use crate::error::{Error, Result};
use crate::ids::{DartId, EdgeId, FaceId, VertexId};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    OneFace(FaceId),
    /// Leave `u` through `face_u`, cross `crossed`, reach `v` through `face_v`.
    TwoFaces {
        face_u: FaceId,
        crossed: EdgeId,
        face_v: FaceId,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InsertionCandidate {
    pub u: VertexId,
    pub v: VertexId,
    pub route: Route,
}

impl InsertionCandidate {
    /// Crossings added by the insertion.
    pub fn delta(&self) -> usize {
        match self.route {
            Route::OneFace(_) => 0,
            Route::TwoFaces { .. } => 1,
        }
    }

    pub fn apply(&self, g: &OnePlaneGraph) -> Result<(OnePlaneGraph, EdgeId)> {
        match self.route {
            Route::OneFace(f) => g.insert_in_face(f, self.u, self.v),
            Route::TwoFaces {
                face_u,
                crossed,
                face_v,
            } => g.insert_across(self.u, face_u, crossed, face_v, self.v),
        }
    }
}

impl std::fmt::Display for InsertionCandidate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.route {
            Route::OneFace(face) => write!(f, "{}-{} inside {face}", self.u, self.v),
            Route::TwoFaces {
                face_u,
                crossed,
                face_v,
            } => {
                write!(
                    f,
                    "{}-{} from {face_u} across {crossed} into {face_v}",
                    self.u, self.v
                )
            }
        }
    }
}

fn true_boundary(g: &OnePlaneGraph, f: FaceId) -> Vec<VertexId> {
    g.faces()
        .boundary(f)
        .iter()
        .copied()
        .filter(|&v| g.is_true_vertex(v))
        .collect()
}

/// Every admissible single-edge insertion, sorted by (u, v, route).
pub fn insertion_candidates(g: &OnePlaneGraph) -> Vec<InsertionCandidate> {
    let faces = g.faces();
    let bounds: Vec<Vec<VertexId>> = faces.ids().map(|f| true_boundary(g, f)).collect();
    let mut out = Vec::new();
    for f in faces.ids() {
        let b = &bounds[f.0];
        for (i, &u) in b.iter().enumerate() {
            for &v in &b[i + 1..] {
                if !g.has_edge(u, v) {
                    out.push(InsertionCandidate {
                        u,
                        v,
                        route: Route::OneFace(f),
                    });
                }
            }
        }
    }
    for e in g.edge_ids().filter(|&e| g.edge(e).crossing.is_none()) {
        let s = g.edge_segments(e).start;
        let f1 = faces.face_of(DartId(2 * s));
        let f2 = faces.face_of(DartId(2 * s + 1));
        if f1 == f2 {
            continue;
        }
        let (b1, b2) = (&bounds[f1.0], &bounds[f2.0]);
        let in1 = |x: &VertexId| b1.binary_search(x).is_ok();
        let in2 = |x: &VertexId| b2.binary_search(x).is_ok();
        for &x in b1.iter().filter(|x| !in2(x)) {
            for &y in b2.iter().filter(|y| !in1(y)) {
                if g.has_edge(x, y) {
                    continue;
                }
                let c = if x < y {
                    InsertionCandidate {
                        u: x,
                        v: y,
                        route: Route::TwoFaces {
                            face_u: f1,
                            crossed: e,
                            face_v: f2,
                        },
                    }
                } else {
                    InsertionCandidate {
                        u: y,
                        v: x,
                        route: Route::TwoFaces {
                            face_u: f2,
                            crossed: e,
                            face_v: f1,
                        },
                    }
                };
                out.push(c);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Some admissible insertion, or `None` when the drawing is maximal.
pub fn maximality_witness(g: &OnePlaneGraph) -> Option<InsertionCandidate> {
    insertion_candidates(g).into_iter().next()
}

pub fn is_maximal(g: &OnePlaneGraph) -> bool {
    maximality_witness(g).is_none()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SaturationPolicy {
    /// Always take the first candidate in sorted order.
    Deterministic,
    Seeded(u64),
}

/// Adds admissible edges until none remain.
pub fn saturate(g: &OnePlaneGraph, policy: SaturationPolicy) -> Result<OnePlaneGraph> {
    let mut rng = match policy {
        SaturationPolicy::Deterministic => None,
        SaturationPolicy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut cur = g.clone();
    loop {
        let cands = insertion_candidates(&cur);
        let pick = match rng.as_mut() {
            None => cands.first(),
            Some(r) => cands.choose(r),
        };
        let Some(c) = pick else { return Ok(cur) };
        cur = c.apply(&cur)?.0;
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum RedrawRoute {
    /// Crossing-free route through this face of the drawing without the edge.
    Free(FaceId),
    /// The edge's own route, crossing `crossed` again.
    Original { crossed: EdgeId },
}

#[derive(Clone, Debug)]
pub struct Redraw {
    pub crossings: usize,
    pub route: RedrawRoute,
    /// The drawing with the edge deleted; face ids in `route` refer to it.
    pub without: OnePlaneGraph,
    /// The edge's ends, in `without`.
    pub ends: (VertexId, VertexId),
}

impl Redraw {
    /// The drawing with the edge redrawn along `route`.
    pub fn apply(&self) -> Result<OnePlaneGraph> {
        let (u, v) = self.ends;
        match self.route {
            RedrawRoute::Free(f) => Ok(self.without.insert_in_face(f, u, v)?.0),
            RedrawRoute::Original { .. } => Err(Error::BadParameter(
                "redraw keeps the original route".into(),
            )),
        }
    }
}

/// Fewest crossings over all ways of redrawing `e` in the drawing minus `e`.
pub fn min_redraw_crossings(g: &OnePlaneGraph, e: EdgeId) -> Result<Redraw> {
    if e.0 >= g.edge_count() {
        return Err(Error::UnknownEdge(e));
    }
    let edge = *g.edge(e);
    let partner = g.crossing_partner(e);
    let (without, remap) = g.remove_edges(&[e])?;
    let u = remap.vertex[edge.u.0].expect("true vertex survives edge removal");
    let v = remap.vertex[edge.v.0].expect("true vertex survives edge removal");
    let faces = without.faces();
    let shared = faces.ids().find(|&f| {
        let b = faces.boundary(f);
        b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok()
    });
    let (crossings, route) = match (shared, partner) {
        (Some(f), _) => (0, RedrawRoute::Free(f)),
        (None, Some(p)) => (
            1,
            RedrawRoute::Original {
                crossed: remap.edge[p.0].expect("partner survives"),
            },
        ),
        (None, None) => {
            unreachable!("an uncrossed edge always leaves its endpoints on a merged face")
        }
    };
    Ok(Redraw {
        crossings,
        route,
        without,
        ends: (u, v),
    })
}

/// A crossed edge that can be redrawn without crossings, if any.
pub fn immovability_witness(g: &OnePlaneGraph) -> Result<Option<(EdgeId, Redraw)>> {
    if !is_maximal(g) {
        return Err(Error::NotMaximal);
    }
    for e in g.edge_ids().filter(|&e| g.edge(e).crossing.is_some()) {
        let r = min_redraw_crossings(g, e)?;
        if r.crossings == 0 {
            return Ok(Some((e, r)));
        }
    }
    Ok(None)
}

pub fn is_immovable(g: &OnePlaneGraph) -> Result<bool> {
    Ok(immovability_witness(g)?.is_none())
}

/// Redraws crossed edges crossing-free, one at a time, while possible. The
/// result draws the same graph, so its crossing count bounds `cr(G)` from
/// above.
pub fn reduce_crossings(g: &OnePlaneGraph) -> Result<OnePlaneGraph> {
    let mut cur = g.clone();
    'outer: loop {
        for e in cur.edge_ids().filter(|&e| cur.edge(e).crossing.is_some()) {
            let r = min_redraw_crossings(&cur, e)?;
            if r.crossings == 0 {
                cur = r.apply()?;
                continue 'outer;
            }
        }
        return Ok(cur);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::plane_from_faces;
    use crate::graph::SimpleGraph;

    fn cycle(n: usize) -> OnePlaneGraph {
        plane_from_faces(vec![None; n], &[(0..n).collect(), (0..n).rev().collect()]).unwrap()
    }

    #[test]
    fn plane_triangle_is_maximal() {
        assert!(is_maximal(&cycle(3)));
    }

    #[test]
    fn quadrangle_offers_both_diagonals_in_both_faces() {
        let c = insertion_candidates(&cycle(4));
        assert_eq!(c.len(), 4);
        assert!(c.iter().all(|c| c.delta() == 0));
    }

    #[test]
    fn saturating_a_cycle_reaches_k4_on_four_vertices() {
        let g = saturate(&cycle(4), SaturationPolicy::Deterministic).unwrap();
        assert!(is_maximal(&g));
        assert_eq!(g.underlying(), SimpleGraph::complete(4));
    }

    #[test]
    fn seeded_saturation_is_reproducible() {
        let a = saturate(&cycle(7), SaturationPolicy::Seeded(11)).unwrap();
        let b = saturate(&cycle(7), SaturationPolicy::Seeded(11)).unwrap();
        assert_eq!(a.to_raw(), b.to_raw());
        assert!(is_maximal(&a));
    }

    #[test]
    fn uncrossed_edge_redraws_for_free() {
        let g = saturate(&cycle(5), SaturationPolicy::Deterministic).unwrap();
        let e = g
            .edge_ids()
            .find(|&e| g.edge(e).crossing.is_none())
            .unwrap();
        assert_eq!(min_redraw_crossings(&g, e).unwrap().crossings, 0);
        assert!(matches!(
            min_redraw_crossings(&g, EdgeId(999)),
            Err(Error::UnknownEdge(_))
        ));
    }

    #[test]
    fn immovability_needs_a_maximal_drawing() {
        assert!(matches!(is_immovable(&cycle(5)), Err(Error::NotMaximal)));
    }
}
