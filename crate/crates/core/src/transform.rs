//! Planarization, skeleton and colored dual.

use crate::drawing::{OnePlaneGraph, PlanarMap};
use crate::error::{Error, Result};
use crate::ids::{DartId, EdgeId, FaceId, VertexId};

/// G^×: the drawing with every crossing read as a vertex of degree 4.
#[derive(Clone, Debug)]
pub struct Planarization<'a> {
    pub map: &'a PlanarMap,
    /// Every face walk has length 3 and visits 3 distinct vertices.
    pub is_triangulation: bool,
}

pub fn planarization(g: &OnePlaneGraph) -> Planarization<'_> {
    let map = g.map();
    Planarization {
        map,
        is_triangulation: map_is_triangulation(map),
    }
}

pub fn map_is_triangulation(map: &PlanarMap) -> bool {
    let faces = map.faces();
    faces
        .ids()
        .all(|f| faces.walk(f).len() == 3 && faces.boundary(f).len() == 3)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SkeletonStrategy {
    /// Drop the larger edge id of every crossing pair.
    LexMax,
    LexMin,
    /// Drop exactly the listed edges, one per crossing pair.
    Explicit(Vec<EdgeId>),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum FaceColor {
    Red,
    Blue,
}

/// G_P: a plane graph left after deleting one edge of each crossing pair.
#[derive(Clone, Debug)]
pub struct Skeleton {
    pub plane: OnePlaneGraph,
    /// Per crossing of the source: (fake vertex, kept edge, removed edge).
    pub provenance: Vec<(VertexId, EdgeId, EdgeId)>,
    /// Source edge of each skeleton edge.
    pub edge_origin: Vec<EdgeId>,
    pub colors: Vec<FaceColor>,
    /// Faces of the source planarization merged into each skeleton face.
    pub constituents: Vec<Vec<FaceId>>,
}

impl Skeleton {
    pub fn face_count(&self) -> usize {
        self.colors.len()
    }

    pub fn red_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c == FaceColor::Red).count()
    }

    pub fn blue_count(&self) -> usize {
        self.colors
            .iter()
            .filter(|&&c| c == FaceColor::Blue)
            .count()
    }

    pub fn removed_edges(&self) -> Vec<EdgeId> {
        self.provenance.iter().map(|&(_, _, r)| r).collect()
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Unions faces of `g`'s planarization across every segment of the given
/// edges. Returns the representative of each face.
pub(crate) fn merge_faces_across(g: &OnePlaneGraph, edges: &[EdgeId]) -> Vec<usize> {
    let faces = g.faces();
    let mut parent: Vec<usize> = (0..faces.len()).collect();
    for &e in edges {
        for s in g.edge_segments(e) {
            let a = find(&mut parent, faces.face_of(DartId(2 * s)).0);
            let b = find(&mut parent, faces.face_of(DartId(2 * s + 1)).0);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..faces.len()).map(|f| find(&mut parent, f)).collect()
}

pub fn skeleton(g: &OnePlaneGraph, strategy: &SkeletonStrategy) -> Result<Skeleton> {
    let pairs = g.crossing_pairs();
    let provenance: Vec<(VertexId, EdgeId, EdgeId)> = match strategy {
        SkeletonStrategy::LexMax => pairs.iter().map(|&(c, e, f)| (c, e, f)).collect(),
        SkeletonStrategy::LexMin => pairs.iter().map(|&(c, e, f)| (c, f, e)).collect(),
        SkeletonStrategy::Explicit(list) => {
            let mut chosen = vec![false; g.edge_count()];
            for &e in list {
                if e.0 >= g.edge_count() || g.crossing_partner(e).is_none() {
                    return Err(Error::BadExplicitSelection(format!(
                        "{e} is not in a crossing pair"
                    )));
                }
                chosen[e.0] = true;
            }
            let mut out = Vec::with_capacity(pairs.len());
            for &(c, e, f) in &pairs {
                match (chosen[e.0], chosen[f.0]) {
                    (true, false) => out.push((c, f, e)),
                    (false, true) => out.push((c, e, f)),
                    (false, false) => {
                        return Err(Error::BadExplicitSelection(format!(
                            "crossing pair {e},{f} is not covered"
                        )))
                    }
                    (true, true) => {
                        return Err(Error::BadExplicitSelection(format!(
                            "both {e} and {f} listed"
                        )));
                    }
                }
            }
            out
        }
    };
    let removed: Vec<EdgeId> = provenance.iter().map(|&(_, _, r)| r).collect();
    let (plane, remap) = g.remove_edges(&removed)?;
    let mut edge_origin = vec![EdgeId(0); plane.edge_count()];
    for (old, new) in remap.edge.iter().enumerate() {
        if let Some(new) = new {
            edge_origin[new.0] = EdgeId(old);
        }
    }

    let rep = merge_faces_across(g, &removed);
    let src_faces = g.faces();
    let sk_faces = plane.faces();
    let mut constituents = vec![Vec::new(); sk_faces.len()];
    let mut class_to_face = vec![usize::MAX; src_faces.len()];
    for f in sk_faces.ids() {
        let d = sk_faces.walk(f)[0];
        let seg = plane.segment_of_dart(d);
        let src_edge = edge_origin[seg.edge.0];
        let src_dart = g.dart_from(src_edge, plane.map().tail(d));
        // both darts leave the same true vertex along the same edge, so their
        // faces lie on the same side of it
        class_to_face[rep[src_faces.face_of(src_dart).0]] = f.0;
    }
    for sf in src_faces.ids() {
        let f = class_to_face[rep[sf.0]];
        debug_assert!(f != usize::MAX, "source face class without skeleton face");
        constituents[f].push(sf);
    }
    let colors = constituents
        .iter()
        .map(|c| {
            if c.len() == 1 && !src_faces.is_fake(c[0]) {
                FaceColor::Blue
            } else {
                FaceColor::Red
            }
        })
        .collect();
    Ok(Skeleton {
        plane,
        provenance,
        edge_origin,
        colors,
        constituents,
    })
}

/// G_P^*: one vertex per skeleton face, one edge per skeleton edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualMap {
    pub colors: Vec<FaceColor>,
    /// Dual edge `i` crosses skeleton edge `i`.
    pub edges: Vec<(FaceId, FaceId)>,
    adjacency: Vec<Vec<FaceId>>,
}

impl DualMap {
    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Neighbors with multiplicity; a loop contributes its face twice.
    pub fn neighbors(&self, f: FaceId) -> &[FaceId] {
        &self.adjacency[f.0]
    }

    pub fn degree(&self, f: FaceId) -> usize {
        self.adjacency[f.0].len()
    }

    pub fn color(&self, f: FaceId) -> FaceColor {
        self.colors[f.0]
    }

    pub fn red_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c == FaceColor::Red).count()
    }

    pub fn blue_count(&self) -> usize {
        self.colors
            .iter()
            .filter(|&&c| c == FaceColor::Blue)
            .count()
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adjacency.iter().all(|a| a.len() == d)
    }

    pub fn vertices(&self) -> impl Iterator<Item = FaceId> {
        (0..self.colors.len()).map(FaceId)
    }
}

pub fn dual(s: &Skeleton) -> DualMap {
    let faces = s.plane.faces();
    let mut adjacency = vec![Vec::new(); faces.len()];
    let edges: Vec<(FaceId, FaceId)> = (0..s.plane.map().segment_count())
        .map(|seg| {
            let a = faces.face_of(DartId(2 * seg));
            let b = faces.face_of(DartId(2 * seg + 1));
            adjacency[a.0].push(b);
            adjacency[b.0].push(a);
            (a, b)
        })
        .collect();
    for list in &mut adjacency {
        list.sort_unstable();
    }
    DualMap {
        colors: s.colors.clone(),
        edges,
        adjacency,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::plane_from_faces;

    fn k4_with_crossing() -> OnePlaneGraph {
        let g = plane_from_faces(vec![None; 4], &[vec![0, 1, 2, 3], vec![3, 2, 1, 0]]).unwrap();
        let f = g
            .find_face(&[VertexId(0), VertexId(1), VertexId(2), VertexId(3)])
            .unwrap();
        let (g, e) = g.insert_in_face(f, VertexId(0), VertexId(2)).unwrap();
        let fu = g
            .find_face(&[VertexId(0), VertexId(1), VertexId(2)])
            .unwrap();
        let fv = g
            .find_face(&[VertexId(0), VertexId(2), VertexId(3)])
            .unwrap();
        g.insert_across(VertexId(1), fu, e, fv, VertexId(3))
            .unwrap()
            .0
    }

    #[test]
    fn crossing_free_drawing_is_its_own_skeleton() {
        let g = plane_from_faces(vec![None; 3], &[vec![0, 1, 2], vec![2, 1, 0]]).unwrap();
        let s = skeleton(&g, &SkeletonStrategy::LexMax).unwrap();
        assert_eq!(s.plane.edge_count(), 3);
        assert_eq!(s.blue_count(), 2);
        assert_eq!(s.red_count(), 0);
    }

    #[test]
    fn one_crossing_merges_two_fake_faces() {
        let g = k4_with_crossing();
        assert!(!planarization(&g).is_triangulation);
        for strategy in [SkeletonStrategy::LexMax, SkeletonStrategy::LexMin] {
            let s = skeleton(&g, &strategy).unwrap();
            assert_eq!(s.plane.edge_count(), 5);
            assert_eq!(s.face_count(), 3);
            assert_eq!(s.red_count(), 2);
            assert_eq!(s.blue_count(), 1);
            assert!(s.constituents.iter().all(|c| c.len() <= 2));
            let d = dual(&s);
            assert_eq!(d.vertex_count(), 3);
            assert_eq!(d.edge_count(), 5);
        }
    }

    #[test]
    fn explicit_selection_must_cover_each_pair_once() {
        let g = k4_with_crossing();
        let (e, f) = g.crossing_pair(VertexId(4));
        assert!(skeleton(&g, &SkeletonStrategy::Explicit(vec![f])).is_ok());
        assert!(matches!(
            skeleton(&g, &SkeletonStrategy::Explicit(vec![])),
            Err(Error::BadExplicitSelection(_))
        ));
        assert!(matches!(
            skeleton(&g, &SkeletonStrategy::Explicit(vec![e, f])),
            Err(Error::BadExplicitSelection(_))
        ));
        let uncrossed = g
            .edge_ids()
            .find(|&x| g.crossing_partner(x).is_none())
            .unwrap();
        assert!(matches!(
            skeleton(&g, &SkeletonStrategy::Explicit(vec![uncrossed])),
            Err(Error::BadExplicitSelection(_))
        ));
    }
}
