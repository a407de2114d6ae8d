//! The drawing data model.
//!
//! A 1-plane drawing is stored as its planarization: a rotation system on the
//! sphere whose degree-4 fake vertices stand for crossings. Every original edge
//! is either a single segment (`Whole`) or two segments meeting at its fake
//! vertex (`USide` from `u`, `VSide` towards `v`).
//!
//! [`RawDrawing`] is the unchecked, editable form; [`validate`] turns it into an
//! immutable [`OnePlaneGraph`] or reports every violated invariant.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::ids::{DartId, EdgeId, FaceId, VertexId};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    True,
    Fake,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Half {
    Whole,
    USide,
    VSide,
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Half::Whole => "",
            Half::USide => "u",
            Half::VSide => "v",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawVertex {
    pub kind: VertexKind,
    pub label: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawEdge {
    pub u: VertexId,
    pub v: VertexId,
    /// Fake vertices on this edge. A valid drawing has at most one.
    pub crossings: Vec<VertexId>,
}

/// Unchecked drawing: vertex table, edge table and, per vertex, the cyclic
/// order of incident segment ends.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawDrawing {
    pub vertices: Vec<RawVertex>,
    pub edges: Vec<RawEdge>,
    pub rotation: Vec<Vec<(EdgeId, Half)>>,
}

/// Old-to-new id tables produced by deletions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Remap {
    pub vertex: Vec<Option<VertexId>>,
    pub edge: Vec<Option<EdgeId>>,
}

impl RawDrawing {
    pub fn add_vertex(&mut self, kind: VertexKind, label: Option<String>) -> VertexId {
        self.vertices.push(RawVertex { kind, label });
        self.rotation.push(Vec::new());
        VertexId(self.vertices.len() - 1)
    }

    /// Appends an edge to the table without touching any rotation.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        self.edges.push(RawEdge {
            u,
            v,
            crossings: Vec::new(),
        });
        EdgeId(self.edges.len() - 1)
    }

    /// Deletes edges. A crossing that loses one of its two edges disappears and
    /// the surviving edge becomes a single segment again.
    pub fn remove_edges(&mut self, edges: &[EdgeId]) -> Remap {
        let mut gone_e = vec![false; self.edges.len()];
        for &e in edges {
            gone_e[e.0] = true;
        }
        let mut gone_v = vec![false; self.vertices.len()];
        let mut on_fake: Vec<Vec<EdgeId>> = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            for &c in &e.crossings {
                on_fake[c.0].push(EdgeId(i));
            }
        }
        for (c, list) in on_fake.iter().enumerate() {
            if list.is_empty() || !list.iter().any(|e| gone_e[e.0]) {
                continue;
            }
            gone_v[c] = true;
            for &f in list.iter().filter(|f| !gone_e[f.0]) {
                let (fu, fv) = (self.edges[f.0].u, self.edges[f.0].v);
                self.edges[f.0].crossings.clear();
                for x in [fu, fv] {
                    for entry in self.rotation[x.0].iter_mut().filter(|entry| entry.0 == f) {
                        entry.1 = Half::Whole;
                    }
                }
            }
        }
        for list in &mut self.rotation {
            list.retain(|(e, _)| !gone_e[e.0]);
        }
        self.compact(&gone_v, &gone_e)
    }

    /// Deletes vertices together with all incident edges.
    pub fn remove_vertices(&mut self, vertices: &[VertexId]) -> Remap {
        let doomed: HashSet<VertexId> = vertices.iter().copied().collect();
        let incident: Vec<EdgeId> = (0..self.edges.len())
            .filter(|&i| doomed.contains(&self.edges[i].u) || doomed.contains(&self.edges[i].v))
            .map(EdgeId)
            .collect();
        let first = self.remove_edges(&incident);
        let mut gone_v = vec![false; self.vertices.len()];
        for v in &doomed {
            if let Some(nv) = first.vertex[v.0] {
                gone_v[nv.0] = true;
            }
        }
        let second = self.compact(&gone_v, &vec![false; self.edges.len()]);
        Remap {
            vertex: first
                .vertex
                .iter()
                .map(|o| o.and_then(|v| second.vertex[v.0]))
                .collect(),
            edge: first.edge,
        }
    }

    fn compact(&mut self, gone_v: &[bool], gone_e: &[bool]) -> Remap {
        let mut vmap = vec![None; self.vertices.len()];
        let mut next = 0;
        for (i, slot) in vmap.iter_mut().enumerate() {
            if !gone_v[i] {
                *slot = Some(VertexId(next));
                next += 1;
            }
        }
        let mut emap = vec![None; self.edges.len()];
        let mut next = 0;
        for (i, slot) in emap.iter_mut().enumerate() {
            if !gone_e[i] {
                *slot = Some(EdgeId(next));
                next += 1;
            }
        }
        let vertices = std::mem::take(&mut self.vertices);
        let rotation = std::mem::take(&mut self.rotation);
        for (i, (vert, rot)) in vertices.into_iter().zip(rotation).enumerate() {
            if gone_v[i] {
                continue;
            }
            self.vertices.push(vert);
            self.rotation.push(
                rot.into_iter()
                    .map(|(e, h)| (emap[e.0].expect("dangling rotation entry"), h))
                    .collect(),
            );
        }
        let edges = std::mem::take(&mut self.edges);
        for (i, mut e) in edges.into_iter().enumerate() {
            if gone_e[i] {
                continue;
            }
            e.u = vmap[e.u.0].expect("edge endpoint deleted");
            e.v = vmap[e.v.0].expect("edge endpoint deleted");
            e.crossings = e
                .crossings
                .iter()
                .map(|c| vmap[c.0].expect("live crossing deleted"))
                .collect();
            self.edges.push(e);
        }
        Remap {
            vertex: vmap,
            edge: emap,
        }
    }

    /// Reorders vertices so that true vertices come first, keeping relative order.
    fn canonicalize(&self) -> RawDrawing {
        let order: Vec<usize> = (0..self.vertices.len())
            .filter(|&i| self.vertices[i].kind == VertexKind::True)
            .chain((0..self.vertices.len()).filter(|&i| self.vertices[i].kind == VertexKind::Fake))
            .collect();
        let mut new_id = vec![VertexId(0); order.len()];
        for (new, &old) in order.iter().enumerate() {
            new_id[old] = VertexId(new);
        }
        RawDrawing {
            vertices: order.iter().map(|&i| self.vertices[i].clone()).collect(),
            rotation: order.iter().map(|&i| self.rotation[i].clone()).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| RawEdge {
                    u: new_id[e.u.0],
                    v: new_id[e.v.0],
                    crossings: e.crossings.iter().map(|c| new_id[c.0]).collect(),
                })
                .collect(),
        }
    }

    fn is_canonical(&self) -> bool {
        let first_fake = self
            .vertices
            .iter()
            .position(|v| v.kind == VertexKind::Fake);
        match first_fake {
            None => true,
            Some(i) => self.vertices[i..]
                .iter()
                .all(|v| v.kind == VertexKind::Fake),
        }
    }
}

/// One violated drawing invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    BadReference(String),
    NotSimple(String),
    EdgeMulticrossed {
        edge: EdgeId,
        crossings: usize,
    },
    FakeDegreeNot4 {
        vertex: VertexId,
        degree: usize,
    },
    FakeEdgeCount {
        vertex: VertexId,
        edges: usize,
    },
    BadInvolution(String),
    AdjacentEdgesCross {
        fake: VertexId,
        first: EdgeId,
        second: EdgeId,
    },
    NonTransversal {
        fake: VertexId,
    },
    NotConnected {
        components: usize,
    },
    PositiveGenus {
        genus: isize,
    },
    FakeFacesNotDistinct {
        fake: VertexId,
    },
}

impl Violation {
    pub fn code(&self) -> &'static str {
        match self {
            Violation::BadReference(_) => "BAD_REFERENCE",
            Violation::NotSimple(_) => "NOT_SIMPLE",
            Violation::EdgeMulticrossed { .. } => "EDGE_MULTICROSSED",
            Violation::FakeDegreeNot4 { .. } => "FAKE_DEGREE_NOT_4",
            Violation::FakeEdgeCount { .. } => "FAKE_EDGE_COUNT",
            Violation::BadInvolution(_) => "BAD_INVOLUTION",
            Violation::AdjacentEdgesCross { .. } => "ADJACENT_EDGES_CROSS",
            Violation::NonTransversal { .. } => "NON_TRANSVERSAL",
            Violation::NotConnected { .. } => "NOT_CONNECTED",
            Violation::PositiveGenus { .. } => "POSITIVE_GENUS",
            Violation::FakeFacesNotDistinct { .. } => "FAKE_FACES_NOT_DISTINCT",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.code())?;
        match self {
            Violation::BadReference(s) | Violation::NotSimple(s) | Violation::BadInvolution(s) => {
                f.write_str(s)
            }
            Violation::EdgeMulticrossed { edge, crossings } => {
                write!(f, "{edge} is crossed {crossings} times")
            }
            Violation::FakeDegreeNot4 { vertex, degree } => {
                write!(f, "fake vertex {vertex} has degree {degree}")
            }
            Violation::FakeEdgeCount { vertex, edges } => {
                write!(f, "fake vertex {vertex} lies on {edges} edges instead of 2")
            }
            Violation::AdjacentEdgesCross {
                fake,
                first,
                second,
            } => {
                write!(
                    f,
                    "{first} and {second} share an endpoint but cross at {fake}"
                )
            }
            Violation::NonTransversal { fake } => {
                write!(f, "edges at {fake} touch without crossing")
            }
            Violation::NotConnected { components } => write!(f, "{components} components"),
            Violation::PositiveGenus { genus } => write!(f, "embedding has genus {genus}"),
            Violation::FakeFacesNotDistinct { fake } => {
                write!(f, "faces around {fake} are not pairwise distinct")
            }
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub struct ValidationError {
    pub violations: Vec<Violation>,
}

impl ValidationError {
    pub fn has(&self, code: &str) -> bool {
        self.violations.iter().any(|v| v.code() == code)
    }
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid drawing")?;
        for (i, v) in self.violations.iter().enumerate() {
            write!(f, "{}{v}", if i == 0 { ": " } else { "; " })?;
        }
        Ok(())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum FaceKind {
    Fake,
    True,
}

/// Face walks of a planar map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSet {
    walks: Vec<Vec<DartId>>,
    face_of: Vec<FaceId>,
    boundary: Vec<Vec<VertexId>>,
    kinds: Vec<FaceKind>,
}

impl FaceSet {
    fn compute(
        map_tail: &[VertexId],
        kinds: &[VertexKind],
        rotation: &[Vec<DartId>],
        rot_pos: &[usize],
    ) -> Self {
        let nd = map_tail.len();
        let mut face_of = vec![FaceId(usize::MAX); nd];
        let mut walks = Vec::new();
        for start in 0..nd {
            if face_of[start].0 != usize::MAX {
                continue;
            }
            let id = FaceId(walks.len());
            let mut walk = Vec::new();
            let mut d = DartId(start);
            loop {
                face_of[d.0] = id;
                walk.push(d);
                let t = d.twin();
                let at = &rotation[map_tail[t.0].0];
                d = at[(rot_pos[t.0] + 1) % at.len()];
                if d.0 == start {
                    break;
                }
            }
            walks.push(walk);
        }
        let boundary: Vec<Vec<VertexId>> = walks
            .iter()
            .map(|w| {
                let mut b: Vec<VertexId> = w.iter().map(|d| map_tail[d.0]).collect();
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        let face_kinds = boundary
            .iter()
            .map(|b| {
                if b.iter().any(|v| kinds[v.0] == VertexKind::Fake) {
                    FaceKind::Fake
                } else {
                    FaceKind::True
                }
            })
            .collect();
        FaceSet {
            walks,
            face_of,
            boundary,
            kinds: face_kinds,
        }
    }

    pub fn len(&self) -> usize {
        self.walks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.walks.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = FaceId> {
        (0..self.walks.len()).map(FaceId)
    }

    pub fn walk(&self, f: FaceId) -> &[DartId] {
        &self.walks[f.0]
    }

    pub fn face_of(&self, d: DartId) -> FaceId {
        self.face_of[d.0]
    }

    /// Sorted vertex set on the boundary, ∂(F).
    pub fn boundary(&self, f: FaceId) -> &[VertexId] {
        &self.boundary[f.0]
    }

    pub fn kind(&self, f: FaceId) -> FaceKind {
        self.kinds[f.0]
    }

    pub fn is_fake(&self, f: FaceId) -> bool {
        self.kinds[f.0] == FaceKind::Fake
    }

    pub fn fake_count(&self) -> usize {
        self.kinds.iter().filter(|&&k| k == FaceKind::Fake).count()
    }

    pub fn true_count(&self) -> usize {
        self.len() - self.fake_count()
    }
}

/// Rotation system on the sphere with true/fake vertex flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarMap {
    kinds: Vec<VertexKind>,
    tail: Vec<VertexId>,
    rotation: Vec<Vec<DartId>>,
    rot_pos: Vec<usize>,
    faces: FaceSet,
}

impl PlanarMap {
    pub(crate) fn from_parts(
        kinds: Vec<VertexKind>,
        tail: Vec<VertexId>,
        rotation: Vec<Vec<DartId>>,
    ) -> Self {
        let mut rot_pos = vec![0; tail.len()];
        for list in &rotation {
            for (i, d) in list.iter().enumerate() {
                rot_pos[d.0] = i;
            }
        }
        let faces = FaceSet::compute(&tail, &kinds, &rotation, &rot_pos);
        PlanarMap {
            kinds,
            tail,
            rotation,
            rot_pos,
            faces,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.kinds.len()
    }

    pub fn segment_count(&self) -> usize {
        self.tail.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.tail.len()
    }

    pub fn kind(&self, v: VertexId) -> VertexKind {
        self.kinds[v.0]
    }

    pub fn is_fake(&self, v: VertexId) -> bool {
        self.kinds[v.0] == VertexKind::Fake
    }

    pub fn fake_count(&self) -> usize {
        self.kinds
            .iter()
            .filter(|&&k| k == VertexKind::Fake)
            .count()
    }

    pub fn tail(&self, d: DartId) -> VertexId {
        self.tail[d.0]
    }

    pub fn head(&self, d: DartId) -> VertexId {
        self.tail[d.twin().0]
    }

    pub fn rotation(&self, v: VertexId) -> &[DartId] {
        &self.rotation[v.0]
    }

    pub fn rotation_position(&self, d: DartId) -> usize {
        self.rot_pos[d.0]
    }

    pub fn rotation_successor(&self, d: DartId) -> DartId {
        let at = &self.rotation[self.tail[d.0].0];
        at[(self.rot_pos[d.0] + 1) % at.len()]
    }

    /// Next dart along the face walk containing `d`.
    pub fn face_successor(&self, d: DartId) -> DartId {
        self.rotation_successor(d.twin())
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v.0].len()
    }

    pub fn faces(&self) -> &FaceSet {
        &self.faces
    }

    /// Tail vertices of a face walk, in walk order.
    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        self.faces.walk(f).iter().map(|&d| self.tail(d)).collect()
    }

    pub fn euler_characteristic(&self) -> isize {
        self.vertex_count() as isize - self.segment_count() as isize + self.faces.len() as isize
    }

    /// The graph of the map itself (fake vertices included), with repeated
    /// segments collapsed.
    pub fn graph(&self) -> SimpleGraph {
        SimpleGraph::new(
            self.vertex_count(),
            (0..self.segment_count()).map(|s| (self.tail[2 * s].0, self.tail[2 * s + 1].0)),
        )
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub crossing: Option<VertexId>,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

/// A segment of the planarization. Its forward dart runs `from -> to`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub edge: EdgeId,
    pub half: Half,
    pub from: VertexId,
    pub to: VertexId,
}

/// A validated 1-plane drawing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OnePlaneGraph {
    map: PlanarMap,
    edges: Vec<Edge>,
    segments: Vec<Segment>,
    first_segment: Vec<usize>,
    labels: Vec<Option<String>>,
    n: usize,
    adjacency: Vec<Vec<VertexId>>,
    incident: Vec<Vec<EdgeId>>,
    partner: Vec<Option<EdgeId>>,
}

/// Checks every drawing invariant and builds the immutable drawing.
pub fn validate(raw: &RawDrawing) -> std::result::Result<OnePlaneGraph, ValidationError> {
    OnePlaneGraph::from_raw(raw)
}

impl OnePlaneGraph {
    pub fn from_raw(raw: &RawDrawing) -> std::result::Result<OnePlaneGraph, ValidationError> {
        let g = check(raw).map_err(|violations| ValidationError { violations })?;
        if raw.is_canonical() {
            Ok(g)
        } else {
            check(&raw.canonicalize()).map_err(|violations| ValidationError { violations })
        }
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn faces(&self) -> &FaceSet {
        self.map.faces()
    }

    /// Number of true vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// cr_×: the number of fake vertices.
    pub fn crossing_count(&self) -> usize {
        self.map.vertex_count() - self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn true_vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId)
    }

    pub fn fake_vertices(&self) -> impl Iterator<Item = VertexId> {
        (self.n..self.map.vertex_count()).map(VertexId)
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn segment_of_dart(&self, d: DartId) -> &Segment {
        &self.segments[d.segment()]
    }

    /// Segment indices of an edge, ordered from `u` to `v`.
    pub fn edge_segments(&self, e: EdgeId) -> std::ops::Range<usize> {
        let start = self.first_segment[e.0];
        let len = if self.edges[e.0].crossing.is_some() {
            2
        } else {
            1
        };
        start..start + len
    }

    /// The dart leaving true vertex `x` along edge `e`.
    pub fn dart_from(&self, e: EdgeId, x: VertexId) -> DartId {
        let segs = self.edge_segments(e);
        if x == self.edges[e.0].u {
            DartId(2 * segs.start)
        } else {
            DartId(2 * (segs.end - 1) + 1)
        }
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels[v.0].as_deref()
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn is_true_vertex(&self, v: VertexId) -> bool {
        v.0 < self.n
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.require_true(v)?;
        Ok(self.map.degree(v))
    }

    /// c_G(v): number of crossed edges incident with `v`.
    pub fn c_of(&self, v: VertexId) -> Result<usize> {
        self.require_true(v)?;
        Ok(self.incident[v.0]
            .iter()
            .filter(|e| self.edges[e.0].crossing.is_some())
            .count())
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v.0]
    }

    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v.0]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u.0 < self.n && self.adjacency[u.0].binary_search(&v).is_ok()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.incident
            .get(u.0)?
            .iter()
            .copied()
            .find(|&e| self.edges[e.0].other(u) == v)
    }

    /// The edge crossing `e`, if any.
    pub fn crossing_partner(&self, e: EdgeId) -> Option<EdgeId> {
        self.partner[e.0]
    }

    /// The two edges meeting at fake vertex `c`, lower id first.
    pub fn crossing_pair(&self, c: VertexId) -> (EdgeId, EdgeId) {
        let d = self.map.rotation(c)[0];
        let e = self.segment_of_dart(d).edge;
        let f = self.partner[e.0].expect("fake vertex without crossing pair");
        (e.min(f), e.max(f))
    }

    /// All crossing pairs, ordered by fake vertex.
    pub fn crossing_pairs(&self) -> Vec<(VertexId, EdgeId, EdgeId)> {
        self.fake_vertices()
            .map(|c| {
                let (e, f) = self.crossing_pair(c);
                (c, e, f)
            })
            .collect()
    }

    /// Underlying abstract simple graph G (true vertices only).
    pub fn underlying(&self) -> SimpleGraph {
        SimpleGraph::new(self.n, self.edges.iter().map(|e| (e.u.0, e.v.0)))
    }

    pub fn to_raw(&self) -> RawDrawing {
        let vertices = (0..self.map.vertex_count())
            .map(|i| RawVertex {
                kind: self.map.kind(VertexId(i)),
                label: self.labels[i].clone(),
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|e| RawEdge {
                u: e.u,
                v: e.v,
                crossings: e.crossing.into_iter().collect(),
            })
            .collect();
        let rotation = (0..self.map.vertex_count())
            .map(|i| {
                self.map
                    .rotation(VertexId(i))
                    .iter()
                    .map(|&d| {
                        let s = self.segment_of_dart(d);
                        (s.edge, s.half)
                    })
                    .collect()
            })
            .collect();
        RawDrawing {
            vertices,
            edges,
            rotation,
        }
    }

    fn require_true(&self, v: VertexId) -> Result<()> {
        if v.0 < self.n {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// Face with exactly the given boundary vertex set, lowest id first.
    pub fn find_face(&self, vertices: &[VertexId]) -> Option<FaceId> {
        let mut want = vertices.to_vec();
        want.sort_unstable();
        want.dedup();
        self.faces()
            .ids()
            .find(|&f| self.faces().boundary(f) == want.as_slice())
    }

    /// The dart leaving `v` along the walk of `face`; when `v` has several
    /// corners on the face, the one earliest in the rotation of `v`.
    pub fn corner(&self, face: FaceId, v: VertexId) -> Option<DartId> {
        self.faces()
            .walk(face)
            .iter()
            .copied()
            .filter(|&d| self.map.tail(d) == v)
            .min_by_key(|&d| self.map.rotation_position(d))
    }

    fn face_checked(&self, face: FaceId) -> Result<()> {
        if face.0 < self.faces().len() {
            Ok(())
        } else {
            Err(Error::UnknownFace(face))
        }
    }

    /// Draws a new uncrossed edge `uv` through `face`.
    pub fn insert_in_face(
        &self,
        face: FaceId,
        u: VertexId,
        v: VertexId,
    ) -> Result<(OnePlaneGraph, EdgeId)> {
        self.face_checked(face)?;
        self.require_true(u)?;
        self.require_true(v)?;
        if u == v {
            return Err(Error::BadParameter(format!("loop at {u}")));
        }
        let cu = self
            .corner(face, u)
            .ok_or_else(|| Error::BadParameter(format!("{u} not on {face}")))?;
        let cv = self
            .corner(face, v)
            .ok_or_else(|| Error::BadParameter(format!("{v} not on {face}")))?;
        let mut raw = self.to_raw();
        let e = raw.add_edge(u, v);
        raw.rotation[u.0].insert(self.map.rotation_position(cu), (e, Half::Whole));
        raw.rotation[v.0].insert(self.map.rotation_position(cv), (e, Half::Whole));
        Ok((validate(&raw)?, e))
    }

    /// Draws a new edge `uv` from `face_u` across the uncrossed edge `crossed`
    /// into `face_v`, creating one crossing.
    pub fn insert_across(
        &self,
        u: VertexId,
        face_u: FaceId,
        crossed: EdgeId,
        face_v: FaceId,
        v: VertexId,
    ) -> Result<(OnePlaneGraph, EdgeId)> {
        self.face_checked(face_u)?;
        self.face_checked(face_v)?;
        self.require_true(u)?;
        self.require_true(v)?;
        let f = *self
            .edges
            .get(crossed.0)
            .ok_or(Error::UnknownEdge(crossed))?;
        if f.crossing.is_some() {
            return Err(Error::BadParameter(format!("{crossed} is already crossed")));
        }
        let s = self.first_segment[crossed.0];
        let (fwd, back) = (DartId(2 * s), DartId(2 * s + 1));
        let faces = self.faces();
        let forward = if faces.face_of(fwd) == face_u && faces.face_of(back) == face_v {
            true
        } else if faces.face_of(back) == face_u && faces.face_of(fwd) == face_v {
            false
        } else {
            return Err(Error::BadParameter(format!(
                "{crossed} does not separate {face_u} and {face_v}"
            )));
        };
        let cu = self
            .corner(face_u, u)
            .ok_or_else(|| Error::BadParameter(format!("{u} not on {face_u}")))?;
        let cv = self
            .corner(face_v, v)
            .ok_or_else(|| Error::BadParameter(format!("{v} not on {face_v}")))?;
        let mut raw = self.to_raw();
        let c = raw.add_vertex(VertexKind::Fake, None);
        raw.edges[crossed.0].crossings = vec![c];
        for entry in raw.rotation[f.u.0].iter_mut() {
            if entry.0 == crossed {
                entry.1 = Half::USide;
            }
        }
        for entry in raw.rotation[f.v.0].iter_mut() {
            if entry.0 == crossed {
                entry.1 = Half::VSide;
            }
        }
        let e = raw.add_edge(u, v);
        raw.edges[e.0].crossings = vec![c];
        raw.rotation[u.0].insert(self.map.rotation_position(cu), (e, Half::USide));
        raw.rotation[v.0].insert(self.map.rotation_position(cv), (e, Half::VSide));
        raw.rotation[c.0] = if forward {
            vec![
                (crossed, Half::USide),
                (e, Half::USide),
                (crossed, Half::VSide),
                (e, Half::VSide),
            ]
        } else {
            vec![
                (crossed, Half::USide),
                (e, Half::VSide),
                (crossed, Half::VSide),
                (e, Half::USide),
            ]
        };
        Ok((validate(&raw)?, e))
    }

    /// Adds a new true vertex inside `face`, joined to `w` by one edge.
    pub fn add_pendant(
        &self,
        face: FaceId,
        w: VertexId,
        label: Option<String>,
    ) -> Result<(OnePlaneGraph, VertexId, EdgeId)> {
        self.face_checked(face)?;
        self.require_true(w)?;
        let cw = self
            .corner(face, w)
            .ok_or_else(|| Error::BadParameter(format!("{w} not on {face}")))?;
        let mut raw = self.to_raw();
        let x = raw.add_vertex(VertexKind::True, label);
        let e = raw.add_edge(w, x);
        raw.rotation[w.0].insert(self.map.rotation_position(cw), (e, Half::Whole));
        raw.rotation[x.0].push((e, Half::Whole));
        Ok((validate(&raw)?, VertexId(self.n), e))
    }

    pub fn remove_edges(&self, edges: &[EdgeId]) -> Result<(OnePlaneGraph, Remap)> {
        if let Some(&e) = edges.iter().find(|e| e.0 >= self.edges.len()) {
            return Err(Error::UnknownEdge(e));
        }
        let mut raw = self.to_raw();
        let remap = raw.remove_edges(edges);
        Ok((validate(&raw)?, remap))
    }

    pub fn remove_vertices(&self, vertices: &[VertexId]) -> Result<(OnePlaneGraph, Remap)> {
        for &v in vertices {
            self.require_true(v)?;
        }
        let mut raw = self.to_raw();
        let remap = raw.remove_vertices(vertices);
        Ok((validate(&raw)?, remap))
    }
}

fn check(raw: &RawDrawing) -> std::result::Result<OnePlaneGraph, Vec<Violation>> {
    let mut out = Vec::new();
    let nv = raw.vertices.len();
    if raw.rotation.len() != nv {
        out.push(Violation::BadReference(format!(
            "{} rotation records for {nv} vertices",
            raw.rotation.len()
        )));
        return Err(out);
    }
    let kind = |v: VertexId| raw.vertices[v.0].kind;
    let mut buildable = true;
    let mut on_fake: Vec<Vec<EdgeId>> = vec![Vec::new(); nv];
    let mut pairs = HashSet::new();
    for (i, e) in raw.edges.iter().enumerate() {
        let id = EdgeId(i);
        let mut ends_ok = true;
        for x in [e.u, e.v] {
            if x.0 >= nv {
                out.push(Violation::BadReference(format!(
                    "{id} endpoint {x} out of range"
                )));
                ends_ok = false;
            } else if kind(x) != VertexKind::True {
                out.push(Violation::BadReference(format!(
                    "{id} endpoint {x} is a fake vertex"
                )));
                ends_ok = false;
            }
        }
        buildable &= ends_ok;
        if e.u == e.v {
            out.push(Violation::NotSimple(format!("{id} is a loop at {}", e.u)));
        } else if ends_ok && !pairs.insert((e.u.min(e.v), e.u.max(e.v))) {
            out.push(Violation::NotSimple(format!(
                "{id} duplicates the pair {}{}",
                e.u, e.v
            )));
        }
        if e.crossings.len() > 1 {
            out.push(Violation::EdgeMulticrossed {
                edge: id,
                crossings: e.crossings.len(),
            });
            buildable = false;
        }
        for &c in &e.crossings {
            if c.0 >= nv || kind(c) != VertexKind::Fake {
                out.push(Violation::BadReference(format!(
                    "{id} crossing {c} is not a fake vertex"
                )));
                buildable = false;
            } else {
                on_fake[c.0].push(id);
            }
        }
    }
    for x in (0..nv).map(VertexId) {
        if kind(x) == VertexKind::Fake {
            if on_fake[x.0].len() != 2 {
                out.push(Violation::FakeEdgeCount {
                    vertex: x,
                    edges: on_fake[x.0].len(),
                });
                buildable = false;
            }
            if raw.rotation[x.0].len() != 4 {
                out.push(Violation::FakeDegreeNot4 {
                    vertex: x,
                    degree: raw.rotation[x.0].len(),
                });
            }
        }
        if let Some(&(e, _)) = raw.rotation[x.0]
            .iter()
            .find(|(e, _)| e.0 >= raw.edges.len())
        {
            out.push(Violation::BadReference(format!(
                "rotation of {x} names unknown {e}"
            )));
            buildable = false;
        }
    }
    if !buildable {
        return Err(out);
    }

    let mut segments = Vec::new();
    let mut first_segment = Vec::with_capacity(raw.edges.len());
    for (i, e) in raw.edges.iter().enumerate() {
        let edge = EdgeId(i);
        first_segment.push(segments.len());
        match e.crossings.first() {
            None => segments.push(Segment {
                edge,
                half: Half::Whole,
                from: e.u,
                to: e.v,
            }),
            Some(&c) => {
                segments.push(Segment {
                    edge,
                    half: Half::USide,
                    from: e.u,
                    to: c,
                });
                segments.push(Segment {
                    edge,
                    half: Half::VSide,
                    from: c,
                    to: e.v,
                });
            }
        }
    }
    let segment_index = |e: EdgeId, h: Half| -> Option<usize> {
        let base = first_segment[e.0];
        match (raw.edges[e.0].crossings.is_empty(), h) {
            (true, Half::Whole) => Some(base),
            (false, Half::USide) => Some(base),
            (false, Half::VSide) => Some(base + 1),
            _ => None,
        }
    };

    let nd = 2 * segments.len();
    let mut seen = vec![false; nd];
    let mut tail = vec![VertexId(0); nd];
    for (s, seg) in segments.iter().enumerate() {
        tail[2 * s] = seg.from;
        tail[2 * s + 1] = seg.to;
    }
    let mut rotation: Vec<Vec<DartId>> = vec![Vec::new(); nv];
    let mut paired = true;
    for x in (0..nv).map(VertexId) {
        for &(e, h) in &raw.rotation[x.0] {
            let Some(s) = segment_index(e, h) else {
                out.push(Violation::BadInvolution(format!(
                    "{e}{h} at {x} is not a segment of {e}"
                )));
                paired = false;
                continue;
            };
            let seg = segments[s];
            let d = if seg.from == x && !(seg.to == x && seen[2 * s]) {
                2 * s
            } else if seg.to == x {
                2 * s + 1
            } else {
                out.push(Violation::BadInvolution(format!(
                    "{e}{h} listed at {x}, which is not one of its ends"
                )));
                paired = false;
                continue;
            };
            if seen[d] {
                out.push(Violation::BadInvolution(format!(
                    "{e}{h} listed twice at {x}"
                )));
                paired = false;
                continue;
            }
            seen[d] = true;
            rotation[x.0].push(DartId(d));
        }
    }
    for (d, _) in seen.iter().enumerate().filter(|(_, s)| !**s) {
        let seg = segments[d / 2];
        out.push(Violation::BadInvolution(format!(
            "{}{} has no partner end at {}",
            seg.edge, seg.half, tail[d]
        )));
        paired = false;
    }
    if !paired {
        return Err(out);
    }

    let mut partner = vec![None; raw.edges.len()];
    for c in (0..nv)
        .map(VertexId)
        .filter(|&c| kind(c) == VertexKind::Fake)
    {
        let (e, f) = (on_fake[c.0][0], on_fake[c.0][1]);
        partner[e.0] = Some(f);
        partner[f.0] = Some(e);
        let (a, b) = (&raw.edges[e.0], &raw.edges[f.0]);
        if a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v {
            out.push(Violation::AdjacentEdgesCross {
                fake: c,
                first: e,
                second: f,
            });
        }
        let around: Vec<EdgeId> = rotation[c.0]
            .iter()
            .map(|d| segments[d.segment()].edge)
            .collect();
        if around.len() == 4
            && !(around[0] == around[2] && around[1] == around[3] && around[0] != around[1])
        {
            out.push(Violation::NonTransversal { fake: c });
        }
    }

    let kinds: Vec<VertexKind> = raw.vertices.iter().map(|v| v.kind).collect();
    let map = PlanarMap::from_parts(kinds, tail, rotation);

    let components = map.graph().components_without(&[]);
    if components > 1 {
        out.push(Violation::NotConnected { components });
    } else {
        let chi = map.euler_characteristic();
        if chi != 2 {
            out.push(Violation::PositiveGenus {
                genus: (2 - chi) / 2,
            });
        }
    }
    for c in (0..nv)
        .map(VertexId)
        .filter(|&c| map.kind(c) == VertexKind::Fake)
    {
        let mut around: Vec<FaceId> = map
            .rotation(c)
            .iter()
            .map(|&d| map.faces().face_of(d))
            .collect();
        around.sort_unstable();
        around.dedup();
        if around.len() != map.degree(c) {
            out.push(Violation::FakeFacesNotDistinct { fake: c });
        }
    }
    if !out.is_empty() {
        return Err(out);
    }

    let n = raw
        .vertices
        .iter()
        .filter(|v| v.kind == VertexKind::True)
        .count();
    let mut adjacency = vec![Vec::new(); nv];
    let mut incident = vec![Vec::new(); nv];
    let edges: Vec<Edge> = raw
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            adjacency[e.u.0].push(e.v);
            adjacency[e.v.0].push(e.u);
            incident[e.u.0].push(EdgeId(i));
            incident[e.v.0].push(EdgeId(i));
            Edge {
                u: e.u,
                v: e.v,
                crossing: e.crossings.first().copied(),
            }
        })
        .collect();
    for list in &mut adjacency {
        list.sort_unstable();
    }
    Ok(OnePlaneGraph {
        map,
        edges,
        segments,
        first_segment,
        labels: raw.vertices.iter().map(|v| v.label.clone()).collect(),
        n,
        adjacency,
        incident,
        partner,
    })
}

/// Builds a crossing-free drawing from its face boundaries. Each face is a
/// cyclic vertex sequence, and all faces must be listed with the same
/// orientation, so that every edge is traversed once in each direction.
pub fn plane_from_faces(
    labels: Vec<Option<String>>,
    faces: &[Vec<usize>],
) -> Result<OnePlaneGraph> {
    use std::collections::HashMap;
    let n = labels.len();
    let mut raw = RawDrawing::default();
    for label in labels {
        raw.add_vertex(VertexKind::True, label);
    }
    let mut edge_of: HashMap<(usize, usize), EdgeId> = HashMap::new();
    let mut next_after: HashMap<(usize, usize), usize> = HashMap::new();
    let mut directed = HashSet::new();
    for face in faces {
        let k = face.len();
        if k < 2 {
            return Err(Error::BadParameter(
                "face with fewer than two vertices".into(),
            ));
        }
        for i in 0..k {
            let (a, b, c) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
            if a >= n || b >= n {
                return Err(Error::BadParameter(format!(
                    "face names vertex outside 0..{n}"
                )));
            }
            if !directed.insert((a, b)) {
                return Err(Error::BadParameter(format!(
                    "directed edge {a}->{b} appears twice"
                )));
            }
            edge_of
                .entry((a.min(b), a.max(b)))
                .or_insert_with(|| raw.add_edge(VertexId(a), VertexId(b)));
            // walking a -> b -> c, the rotation at b turns from b->a to b->c
            next_after.insert((b, a), c);
        }
    }
    if let Some(&(a, b)) = directed.iter().find(|&&(a, b)| !directed.contains(&(b, a))) {
        return Err(Error::BadParameter(format!(
            "edge {a}{b} is traversed in one direction only"
        )));
    }
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in &directed {
        nbrs[a].push(b);
    }
    for v in 0..n {
        nbrs[v].sort_unstable();
        let Some(&start) = nbrs[v].first() else {
            continue;
        };
        let mut order = vec![start];
        let mut cur = start;
        loop {
            cur = next_after[&(v, cur)];
            if cur == start {
                break;
            }
            order.push(cur);
            if order.len() > nbrs[v].len() {
                break;
            }
        }
        if order.len() != nbrs[v].len() {
            return Err(Error::BadParameter(format!(
                "faces around vertex {v} do not close into one disk"
            )));
        }
        raw.rotation[v] = order
            .iter()
            .map(|&w| (edge_of[&(v.min(w), v.max(w))], Half::Whole))
            .collect();
    }
    Ok(validate(&raw)?)
}
