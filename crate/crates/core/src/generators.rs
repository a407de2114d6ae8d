//! Deterministic drawing families and the face operations used to build them.
//!
//! Vertex labels follow the construction: `a{j}_{i}` and `b{j}_{i}` for the two
//! copies of H^k, `z{i}` for the ring joining them, `y{t}` for cone vertices,
//! `c{j}_{i}` for C4 x P_k, `x{j}_{i}`, `p` and `q` for vertices added inside
//! its quadrangles. Indices start at 1 to match the usual notation.

use std::fmt;
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::drawing::{plane_from_faces, OnePlaneGraph};
use crate::error::{Error, Result};
use crate::ids::{DartId, FaceId, VertexId};
use crate::maximality::insertion_candidates;
use crate::transform::{skeleton, SkeletonStrategy};

/// Face whose walk visits `cycle` in this cyclic order.
pub fn face_by_walk(g: &OnePlaneGraph, cycle: &[VertexId]) -> Option<FaceId> {
    let k = cycle.len();
    g.faces().ids().find(|&f| {
        let w = g.map().face_vertices(f);
        w.len() == k && (0..k).any(|r| (0..k).all(|i| w[(r + i) % k] == cycle[i]))
    })
}

/// Boundary walk of a face whose vertices are distinct true vertices.
fn simple_boundary(g: &OnePlaneGraph, face: FaceId) -> Result<Vec<VertexId>> {
    if face.0 >= g.faces().len() {
        return Err(Error::UnknownFace(face));
    }
    let walk = g.map().face_vertices(face);
    let simple =
        walk.len() == g.faces().boundary(face).len() && walk.iter().all(|&v| g.is_true_vertex(v));
    if simple {
        Ok(walk)
    } else {
        Err(Error::BoundaryNotSimple(face))
    }
}

fn quad_boundary(g: &OnePlaneGraph, face: FaceId) -> Result<Vec<VertexId>> {
    if face.0 < g.faces().len() && g.faces().walk(face).len() != 4 {
        return Err(Error::FaceNotQuad(face));
    }
    simple_boundary(g, face)
}

fn face_with(g: &OnePlaneGraph, vertices: &[VertexId]) -> Result<FaceId> {
    g.faces()
        .ids()
        .find(|&f| {
            vertices
                .iter()
                .all(|v| g.faces().boundary(f).binary_search(v).is_ok())
        })
        .ok_or_else(|| Error::BadParameter(format!("no face contains all of {vertices:?}")))
}

/// Joins `x` to `y` inside the first face containing both.
fn join(g: &OnePlaneGraph, x: VertexId, y: VertexId) -> Result<OnePlaneGraph> {
    let f = face_with(g, &[x, y])?;
    Ok(g.insert_in_face(f, x, y)?.0)
}

/// Draws `x`-`y` across the uncrossed edge `a`-`b`.
fn join_across(
    g: &OnePlaneGraph,
    x: VertexId,
    y: VertexId,
    a: VertexId,
    b: VertexId,
) -> Result<OnePlaneGraph> {
    let e = g
        .edge_between(a, b)
        .ok_or_else(|| Error::BadParameter(format!("no edge {a}{b}")))?;
    let s = g.edge_segments(e).start;
    let sides = [
        g.faces().face_of(DartId(2 * s)),
        g.faces().face_of(DartId(2 * s + 1)),
    ];
    let on = |f: FaceId, v: VertexId| g.faces().boundary(f).binary_search(&v).is_ok();
    let (fx, fy) = if on(sides[0], x) && on(sides[1], y) {
        (sides[0], sides[1])
    } else {
        (sides[1], sides[0])
    };
    Ok(g.insert_across(x, fx, e, fy, y)?.0)
}

/// K₁: a new vertex inside `face` joined to every boundary vertex.
pub fn k1_triangulate(g: &OnePlaneGraph, face: FaceId) -> Result<OnePlaneGraph> {
    k1_labeled(g, face, None)
}

fn k1_labeled(g: &OnePlaneGraph, face: FaceId, label: Option<String>) -> Result<OnePlaneGraph> {
    let w = simple_boundary(g, face)?;
    let (mut h, x, _) = g.add_pendant(face, w[0], label)?;
    for &wi in &w[1..] {
        h = join(&h, x, wi)?;
    }
    Ok(h)
}

/// K₂: two adjacent new vertices inside a quadrangle `w0 w1 w2 w3` (`w0` the
/// lowest id), `p` joined to `w0, w1, w2` and `q` to `w2, w3, w0`.
pub fn k2_triangulate(g: &OnePlaneGraph, face: FaceId) -> Result<OnePlaneGraph> {
    k2_labeled(g, face, None, None)
}

fn k2_labeled(
    g: &OnePlaneGraph,
    face: FaceId,
    lp: Option<String>,
    lq: Option<String>,
) -> Result<OnePlaneGraph> {
    let w = rotate_to_min(quad_boundary(g, face)?);
    let (h, p, _) = g.add_pendant(face, w[0], lp)?;
    let h = join(&h, p, w[1])?;
    let h = join(&h, p, w[2])?;
    let f = face_with(&h, &[p, w[2], w[3], w[0]])?;
    let (h, q, _) = h.add_pendant(f, w[2], lq)?;
    let h = join(&h, q, w[3])?;
    let h = join(&h, q, w[0])?;
    join(&h, q, p)
}

fn rotate_to_min(mut w: Vec<VertexId>) -> Vec<VertexId> {
    let i = (0..w.len()).min_by_key(|&i| w[i]).unwrap_or(0);
    w.rotate_left(i);
    w
}

/// T×: both diagonals of a quadrangle, crossing each other. The diagonal with
/// the lower sorted endpoint pair is drawn first.
pub fn tx_triangulate(g: &OnePlaneGraph, face: FaceId) -> Result<OnePlaneGraph> {
    let w = quad_boundary(g, face)?;
    let d0 = sorted_pair(w[0], w[2]);
    let d1 = sorted_pair(w[1], w[3]);
    let first = d0.min(d1);
    tx_triangulate_first(g, face, first.0, first.1)
}

fn sorted_pair(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    (a.min(b), a.max(b))
}

/// T× with the diagonal `a`-`b` drawn first, so it gets the lower edge id.
pub fn tx_triangulate_first(
    g: &OnePlaneGraph,
    face: FaceId,
    a: VertexId,
    b: VertexId,
) -> Result<OnePlaneGraph> {
    let w = quad_boundary(g, face)?;
    for (x, y) in [(w[0], w[2]), (w[1], w[3])] {
        if g.has_edge(x, y) {
            return Err(Error::DiagonalExists(x, y));
        }
    }
    let i = w
        .iter()
        .position(|&v| v == a)
        .filter(|&i| w[(i + 2) % 4] == b)
        .ok_or_else(|| Error::BadParameter(format!("{a}{b} is not a diagonal of {face}")))?;
    let (c, d) = (w[(i + 1) % 4], w[(i + 3) % 4]);
    let (h, _) = g.insert_in_face(face, a, b)?;
    join_across(&h, c, d, a, b)
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::BadParameter("k must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Index layout of H^k: ring `j` (1-based) holds `2^{j+1}` vertices.
struct HLayout {
    k: usize,
}

impl HLayout {
    fn ring_len(j: usize) -> usize {
        1 << (j + 1)
    }

    fn len(&self) -> usize {
        (1 << (self.k + 2)) - 4
    }

    /// Vertex `a^j_i`, with `i` read cyclically (so `a^j_0 = a^j_{2^{j+1}}`).
    fn id(&self, j: usize, i: isize) -> usize {
        let m = Self::ring_len(j) as isize;
        Self::ring_len(j) - 4 + (i - 1).rem_euclid(m) as usize
    }

    fn labels(&self, prefix: &str) -> Vec<Option<String>> {
        let mut out = vec![None; self.len()];
        for j in 1..=self.k {
            for i in 1..=Self::ring_len(j) {
                out[self.id(j, i as isize)] = Some(format!("{prefix}{j}_{i}"));
            }
        }
        out
    }

    /// Inner faces of H^k, all with one orientation.
    fn inner_faces(&self) -> Vec<Vec<usize>> {
        let mut faces = vec![(1..=4).rev().map(|i| self.id(1, i)).collect::<Vec<_>>()];
        for j in 1..self.k {
            for i in 1..=Self::ring_len(j) as isize {
                faces.push(vec![
                    self.id(j, i),
                    self.id(j + 1, 2 * i),
                    self.id(j + 1, 2 * i - 1),
                    self.id(j + 1, 2 * i - 2),
                ]);
                faces.push(vec![
                    self.id(j, i),
                    self.id(j, i + 1),
                    self.id(j + 1, 2 * i),
                ]);
            }
        }
        faces
    }

    fn outer_face(&self) -> Vec<usize> {
        (1..=Self::ring_len(self.k) as isize)
            .map(|i| self.id(self.k, i))
            .collect()
    }
}

/// H^k: nested cycles `C_4, C_8, ..., C_{2^{k+1}}`, each `a^j_i` joined to
/// `a^{j+1}_{2i-2}` and `a^{j+1}_{2i}`.
pub fn gen_h(k: usize) -> Result<OnePlaneGraph> {
    check_k(k)?;
    let h = HLayout { k };
    let mut faces = h.inner_faces();
    faces.push(h.outer_face());
    plane_from_faces(h.labels("a"), &faces)
}

/// Face lists of H^k ∘ H^k with its labels.
fn hh_faces(k: usize) -> (Vec<Option<String>>, Vec<Vec<usize>>) {
    let h = HLayout { k };
    let n = h.len();
    let m = HLayout::ring_len(k);
    let mut labels = h.labels("a");
    labels.extend(h.labels("b"));
    labels.extend((1..=m).map(|i| Some(format!("z{i}"))));
    let a = |i: isize| h.id(k, i);
    let b = |i: isize| n + h.id(k, i);
    let z = |i: isize| 2 * n + (i - 1).rem_euclid(m as isize) as usize;
    let mut faces = h.inner_faces();
    // the second copy is glued in mirrored, so its faces run the other way
    faces.extend(
        h.inner_faces()
            .into_iter()
            .map(|f| f.into_iter().rev().map(|v| v + n).collect()),
    );
    for i in 1..=m as isize {
        faces.push(vec![a(i), a(i + 1), z(i)]);
        faces.push(vec![z(i), b(i + 1), b(i)]);
        faces.push(vec![a(i + 1), z(i + 1), b(i + 1), z(i)]);
    }
    (labels, faces)
}

/// H^k ∘ H^k: two copies of H^k whose outer cycles are joined through a ring
/// of `2^{k+1}` degree-4 vertices `z_i ~ a_i, a_{i+1}, b_i, b_{i+1}`.
pub fn gen_hh(k: usize) -> Result<OnePlaneGraph> {
    check_k(k)?;
    let (labels, faces) = hh_faces(k);
    plane_from_faces(labels, &faces)
}

fn faces_of_length(g: &OnePlaneGraph, len: usize) -> Vec<Vec<VertexId>> {
    g.faces()
        .ids()
        .filter(|&f| g.faces().walk(f).len() == len)
        .map(|f| g.map().face_vertices(f))
        .collect()
}

/// XH^k: T× applied to every quadrangle of H^k ∘ H^k.
///
/// In each quadrangle the first-drawn diagonal (the one kept by the default
/// skeleton) is the one whose endpoints currently carry the smaller skeleton
/// degree.
pub fn gen_xh(k: usize) -> Result<OnePlaneGraph> {
    check_k(k)?;
    let base = gen_hh(k)?;
    let mut load: Vec<usize> = base.true_vertices().map(|v| base.map().degree(v)).collect();
    let mut g = base.clone();
    for quad in faces_of_length(&base, 4) {
        let f = face_by_walk(&g, &quad).expect("quadrangle survives earlier operations");
        let cost = |(a, b): (VertexId, VertexId)| (load[a.0].max(load[b.0]), sorted_pair(a, b));
        let d0 = sorted_pair(quad[0], quad[2]);
        let d1 = sorted_pair(quad[1], quad[3]);
        let first = if cost(d0) <= cost(d1) { d0 } else { d1 };
        load[first.0 .0] += 1;
        load[first.1 .0] += 1;
        g = tx_triangulate_first(&g, f, first.0, first.1)?;
    }
    Ok(g)
}

/// YH^k: XH^k with K₁ applied to every triangle of H^k ∘ H^k.
pub fn gen_yh(k: usize) -> Result<OnePlaneGraph> {
    let xh = gen_xh(k)?;
    let hh = gen_hh(k)?;
    let mut g = xh;
    for (t, tri) in faces_of_length(&hh, 3).into_iter().enumerate() {
        let f = face_by_walk(&g, &tri).expect("triangle survives earlier operations");
        g = k1_labeled(&g, f, Some(format!("y{}", t + 1)))?;
    }
    Ok(g)
}

fn m_id(j: usize, i: isize) -> usize {
    (j - 1) * 4 + (i - 1).rem_euclid(4) as usize
}

/// M^k = C_4 □ P_k drawn as `k` concentric 4-cycles.
pub fn gen_m(k: usize) -> Result<OnePlaneGraph> {
    check_k(k)?;
    let (labels, faces) = m_faces(k);
    plane_from_faces(labels, &faces)
}

fn m_faces(k: usize) -> (Vec<Option<String>>, Vec<Vec<usize>>) {
    let labels = (1..=k)
        .flat_map(|j| (1..=4).map(move |i| Some(format!("c{j}_{i}"))))
        .collect();
    let mut faces = vec![(1..=4).rev().map(|i| m_id(1, i)).collect::<Vec<_>>()];
    for j in 1..k {
        for i in 1..=4 {
            faces.push(vec![
                m_id(j, i),
                m_id(j, i + 1),
                m_id(j + 1, i + 1),
                m_id(j + 1, i),
            ]);
        }
    }
    faces.push((1..=4).map(|i| m_id(k, i)).collect());
    (labels, faces)
}

fn vid(i: usize) -> VertexId {
    VertexId(i)
}

/// XM^k, built from M^k:
/// the innermost quadrangle gets K₂ plus a diagonal crossing `pq`, the
/// outermost gets T×, and every other quadrangle gets K₁ plus the diagonal
/// `c^j_i c^{j+1}_{i+1}` crossing the spoke to `c^j_{i+1}`.
///
/// For k = 1 the inner and outer quadrangle share their boundary, so the
/// inner diagonal would duplicate a T× diagonal; there `q w_1` crossing
/// `p w_0` is used instead.
pub fn gen_xm(k: usize) -> Result<OnePlaneGraph> {
    check_k(k)?;
    let mut g = gen_m(k)?;
    let inner: Vec<VertexId> = (1..=4).rev().map(|i| vid(m_id(1, i))).collect();
    let outer: Vec<VertexId> = (1..=4).map(|i| vid(m_id(k, i))).collect();

    let f = face_by_walk(&g, &inner).expect("inner face");
    let w = rotate_to_min(inner.clone());
    let (p, q) = (vid(g.n()), vid(g.n() + 1));
    g = k2_labeled(&g, f, Some("p".into()), Some("q".into()))?;
    g = if k == 1 {
        join_across(&g, q, w[1], p, w[0])?
    } else {
        join_across(&g, w[0], w[2], p, q)?
    };

    let f = face_by_walk(&g, &outer).expect("outer face");
    g = tx_triangulate(&g, f)?;

    for j in 1..k {
        for i in 1..=4isize {
            let quad: Vec<VertexId> = [
                m_id(j, i),
                m_id(j, i + 1),
                m_id(j + 1, i + 1),
                m_id(j + 1, i),
            ]
            .into_iter()
            .map(vid)
            .collect();
            let f = face_by_walk(&g, &quad).expect("ring quadrangle");
            let x = vid(g.n());
            g = k1_labeled(&g, f, Some(format!("x{j}_{i}")))?;
            g = join_across(&g, quad[0], quad[2], x, quad[1])?;
        }
    }
    Ok(g)
}

/// P(XM^k): XM^k without the vertices added inside quadrangles, then with the
/// larger-id edge of each remaining crossing pair removed.
pub fn gen_p_xm(k: usize) -> Result<OnePlaneGraph> {
    let g = gen_xm(k)?;
    let added: Vec<VertexId> = (4 * k..g.n()).map(vid).collect();
    let (h, _) = g.remove_vertices(&added)?;
    Ok(skeleton(&h, &SkeletonStrategy::LexMax)?.plane)
}

/// P(XH^k): the default skeleton of XH^k.
pub fn gen_p_xh(k: usize) -> Result<OnePlaneGraph> {
    Ok(skeleton(&gen_xh(k)?, &SkeletonStrategy::LexMax)?.plane)
}

/// Random connected drawing on `n` vertices: a random plane graph grown by
/// pendant attachments and chords, then a few random admissible insertions,
/// some of them crossing.
pub fn gen_random_seed(n: usize, seed: u64) -> Result<OnePlaneGraph> {
    if n < 4 {
        return Err(Error::BadParameter(format!(
            "need at least 4 vertices, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = plane_from_faces(vec![None; 3], &[vec![0, 1, 2], vec![2, 1, 0]])?;
    while g.n() < n {
        let f = FaceId(rng.gen_range(0..g.faces().len()));
        let boundary: Vec<VertexId> = g
            .faces()
            .boundary(f)
            .iter()
            .copied()
            .filter(|&v| g.is_true_vertex(v))
            .collect();
        let w = *boundary.choose(&mut rng).expect("faces have true vertices");
        let (h, x, _) = g.add_pendant(f, w, None)?;
        g = h;
        if rng.gen_bool(0.7) {
            let f = face_with(&g, &[x])?;
            let others: Vec<VertexId> = g
                .faces()
                .boundary(f)
                .iter()
                .copied()
                .filter(|&v| g.is_true_vertex(v) && v != x && !g.has_edge(x, v))
                .collect();
            if let Some(&y) = others.choose(&mut rng) {
                g = g.insert_in_face(f, x, y)?.0;
            }
        }
    }
    let extra = rng.gen_range(0..=n / 2);
    for _ in 0..extra {
        let cands = insertion_candidates(&g);
        let crossing: Vec<_> = cands.iter().filter(|c| c.delta() == 1).collect();
        let pick = if !crossing.is_empty() && rng.gen_bool(0.6) {
            crossing.choose(&mut rng).map(|c| **c)
        } else {
            cands.choose(&mut rng).copied()
        };
        match pick {
            Some(c) => g = c.apply(&g)?.0,
            None => break,
        }
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    H,
    HH,
    XH,
    YH,
    M,
    XM,
    Fixture(PathBuf),
}

/// Closed-form statistics of a family member. `None` where no closed form is
/// claimed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedStats {
    pub n: usize,
    pub crossings: usize,
    pub edges: usize,
    pub connectivity: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub k: usize,
}

impl FamilySpec {
    pub fn new(family: Family, k: usize) -> Self {
        FamilySpec { family, k }
    }

    pub fn expected(&self) -> Option<ExpectedStats> {
        let k = self.k;
        let p = 1usize << (k + 1);
        let (n, crossings, edges, connectivity) = match self.family {
            Family::H => (2 * p - 4, 0, 4 * p - 12, Some(2)),
            Family::HH => (5 * p - 8, 0, 12 * p - 24, None),
            Family::XH => {
                let (n, cr) = (5 * p - 8, 3 * p - 6);
                (n, cr, 3 * n - 6 + cr, Some(6))
            }
            Family::YH => {
                let (n, cr) = (9 * p - 16, 3 * p - 6);
                (n, cr, 3 * n - 6 + cr, Some(3))
            }
            Family::M => (4 * k, 0, 8 * k - 4, Some(if k == 1 { 2 } else { 3 })),
            Family::XM => {
                let (n, cr) = (8 * k - 2, 4 * k - 2);
                (n, cr, 3 * n - 6 + cr, Some(4))
            }
            Family::Fixture(_) => return None,
        };
        Some(ExpectedStats {
            n,
            crossings,
            edges,
            connectivity,
        })
    }

    pub fn build(&self) -> Result<OnePlaneGraph> {
        match &self.family {
            Family::H => gen_h(self.k),
            Family::HH => gen_hh(self.k),
            Family::XH => gen_xh(self.k),
            Family::YH => gen_yh(self.k),
            Family::M => gen_m(self.k),
            Family::XM => gen_xm(self.k),
            Family::Fixture(path) => load_fixture(path),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match &self.family {
            Family::H => "H",
            Family::HH => "HH",
            Family::XH => "XH",
            Family::YH => "YH",
            Family::M => "M",
            Family::XM => "XM",
            Family::Fixture(p) => return write!(f, "fixture {}", p.display()),
        };
        write!(f, "{name}^{}", self.k)
    }
}

/// Reads a drawing in the `.1pg` interchange format.
pub fn load_fixture(path: impl AsRef<std::path::Path>) -> Result<OnePlaneGraph> {
    let text = std::fs::read_to_string(path)?;
    crate::format::parse(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h1_is_a_four_cycle() {
        let g = gen_h(1).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.faces().len()), (4, 4, 2));
    }

    #[test]
    fn h2_counts() {
        let g = gen_h(2).unwrap();
        assert_eq!((g.n(), g.edge_count()), (12, 20));
    }

    #[test]
    fn hh1_face_types() {
        let g = gen_hh(1).unwrap();
        assert_eq!(g.n(), 12);
        assert_eq!(faces_of_length(&g, 3).len(), 8);
        assert_eq!(faces_of_length(&g, 4).len(), 6);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(matches!(gen_xh(0), Err(Error::BadParameter(_))));
        assert!(matches!(gen_random_seed(3, 0), Err(Error::BadParameter(_))));
    }

    #[test]
    fn k1_on_a_triangle_adds_three_edges() {
        let g = plane_from_faces(vec![None; 3], &[vec![0, 1, 2], vec![2, 1, 0]]).unwrap();
        let h = k1_triangulate(&g, FaceId(0)).unwrap();
        assert_eq!((h.n(), h.edge_count(), h.crossing_count()), (4, 6, 0));
        assert!(h.faces().ids().all(|f| h.faces().walk(f).len() == 3));
    }

    #[test]
    fn k2_adds_two_vertices_and_seven_edges() {
        let g = gen_m(1).unwrap();
        let h = k2_triangulate(&g, FaceId(0)).unwrap();
        assert_eq!((h.n(), h.edge_count(), h.crossing_count()), (6, 11, 0));
    }

    #[test]
    fn tx_needs_a_quadrangle_without_diagonals() {
        let g = gen_m(1).unwrap();
        let h = tx_triangulate(&g, FaceId(0)).unwrap();
        assert_eq!(h.crossing_count(), 1);
        let f = face_by_walk(&h, &[vid(0), vid(1), vid(2), vid(3)]).unwrap();
        assert!(matches!(
            tx_triangulate(&h, f),
            Err(Error::DiagonalExists(..))
        ));
        let tri = h
            .faces()
            .ids()
            .find(|&f| h.faces().walk(f).len() == 3)
            .unwrap();
        assert!(matches!(
            tx_triangulate(&h, tri),
            Err(Error::FaceNotQuad(_))
        ));
    }

    #[test]
    fn random_seed_is_deterministic() {
        let a = gen_random_seed(8, 1).unwrap();
        let b = gen_random_seed(8, 1).unwrap();
        assert_eq!(a.to_raw(), b.to_raw());
        assert_eq!(gen_random_seed(4, 5).unwrap().n(), 4);
    }
}
