//! Structural facts known to hold for maximal 1-plane drawings, each checked
//! exhaustively on a concrete drawing.

use std::fmt;

use super::connectivity::vertex_connectivity;
use crate::drawing::OnePlaneGraph;
use crate::error::Result;
use crate::ids::FaceId;
use crate::maximality::{is_immovable, is_maximal};
use crate::transform::{dual, planarization, skeleton, DualMap, FaceColor, SkeletonStrategy};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Holds,
    Violated(String),
    NotApplicable(String),
}

impl CheckOutcome {
    pub fn is_violated(&self) -> bool {
        matches!(self, CheckOutcome::Violated(_))
    }

    pub fn holds(&self) -> bool {
        matches!(self, CheckOutcome::Holds)
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckOutcome::Holds => f.write_str("HOLDS"),
            CheckOutcome::Violated(w) => write!(f, "VIOLATED ({w})"),
            CheckOutcome::NotApplicable(r) => write!(f, "NOT_APPLICABLE ({r})"),
        }
    }
}

/// Expensive properties shared by several checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facts {
    pub connectivity: usize,
    pub maximal: bool,
    /// Computed only for maximal drawings.
    pub immovable: Option<bool>,
}

impl Facts {
    pub fn compute(g: &OnePlaneGraph) -> Result<Facts> {
        let connectivity = vertex_connectivity(&g.underlying())?;
        let maximal = is_maximal(g);
        let immovable = if maximal {
            Some(is_immovable(g)?)
        } else {
            None
        };
        Ok(Facts {
            connectivity,
            maximal,
            immovable,
        })
    }

    /// Largest `k` in 3..=7 with the drawing in 𝓖_k, if any.
    pub fn class(&self) -> Option<usize> {
        if !self.maximal || self.connectivity < 3 {
            return None;
        }
        let k = self.connectivity.min(7);
        if k == 3 && self.immovable != Some(true) {
            return None;
        }
        Some(k)
    }
}

fn needs_maximal(facts: &Facts) -> Option<CheckOutcome> {
    (!facts.maximal).then(|| CheckOutcome::NotApplicable("drawing is not maximal".into()))
}

/// Every face has at least two true vertices, and any two true vertices on a
/// face are adjacent.
pub fn check_face_adjacency(g: &OnePlaneGraph, facts: &Facts) -> CheckOutcome {
    if let Some(na) = needs_maximal(facts) {
        return na;
    }
    for f in g.faces().ids() {
        let b: Vec<_> = g
            .faces()
            .boundary(f)
            .iter()
            .copied()
            .filter(|&v| g.is_true_vertex(v))
            .collect();
        if b.len() < 2 {
            return CheckOutcome::Violated(format!("{f} has {} true vertices", b.len()));
        }
        for (i, &u) in b.iter().enumerate() {
            if let Some(&v) = b[i + 1..].iter().find(|&&v| !g.has_edge(u, v)) {
                return CheckOutcome::Violated(format!(
                    "{u} and {v} share {f} but are not adjacent"
                ));
            }
        }
    }
    CheckOutcome::Holds
}

/// The four ends of every crossing pair induce K₄.
pub fn check_crossing_k4(g: &OnePlaneGraph, facts: &Facts) -> CheckOutcome {
    if let Some(na) = needs_maximal(facts) {
        return na;
    }
    for (c, e, f) in g.crossing_pairs() {
        let ends = [g.edge(e).u, g.edge(e).v, g.edge(f).u, g.edge(f).v];
        for i in 0..4 {
            for j in i + 1..4 {
                if !g.has_edge(ends[i], ends[j]) {
                    return CheckOutcome::Violated(format!(
                        "crossing {c}: {} and {} are not adjacent",
                        ends[i], ends[j]
                    ));
                }
            }
        }
    }
    CheckOutcome::Holds
}

/// `k` for the adjacency bounds, or the reason they do not apply.
fn adjacency_k(n: usize, facts: &Facts) -> std::result::Result<usize, CheckOutcome> {
    let Some(k) = facts.class() else {
        return Err(CheckOutcome::NotApplicable("not in any class 𝓖_k".into()));
    };
    let k = k.min(5);
    if n < 5 || (k >= 4 && n < 6) {
        return Err(CheckOutcome::NotApplicable(format!(
            "n = {n} too small for k = {k}"
        )));
    }
    Ok(k)
}

/// Every true face of the planarization is adjacent to at most `5 - k` true
/// faces, for the drawing in 𝓖_k with 3 <= k <= 5.
pub fn check_true_face_adjacency(g: &OnePlaneGraph, facts: &Facts) -> CheckOutcome {
    let k = match adjacency_k(g.n(), facts) {
        Ok(k) => k,
        Err(na) => return na,
    };
    let faces = g.faces();
    for f in faces.ids().filter(|&f| !faces.is_fake(f)) {
        let mut nb: Vec<FaceId> = faces
            .walk(f)
            .iter()
            .map(|&d| faces.face_of(d.twin()))
            .filter(|&h| h != f && !faces.is_fake(h))
            .collect();
        nb.sort_unstable();
        nb.dedup();
        if nb.len() > 5 - k {
            return CheckOutcome::Violated(format!(
                "true {f} is adjacent to {} true faces, k = {k}",
                nb.len()
            ));
        }
    }
    CheckOutcome::Holds
}

/// Every blue dual vertex has at most `5 - k` blue neighbors.
pub fn check_blue_adjacency(d: &DualMap, n: usize, facts: &Facts) -> CheckOutcome {
    let k = match adjacency_k(n, facts) {
        Ok(k) => k,
        Err(na) => return na,
    };
    for f in d.vertices().filter(|&f| d.color(f) == FaceColor::Blue) {
        let mut nb: Vec<FaceId> = d
            .neighbors(f)
            .iter()
            .copied()
            .filter(|&h| h != f && d.color(h) == FaceColor::Blue)
            .collect();
        nb.dedup();
        if nb.len() > 5 - k {
            return CheckOutcome::Violated(format!(
                "blue {f} has {} blue neighbors, k = {k}",
                nb.len()
            ));
        }
    }
    CheckOutcome::Holds
}

/// ⌈deg/3⌉ <= c_G(v) <= ⌊deg/2⌋ for every vertex, when the drawing is in 𝓖_k
/// with k >= 5.
pub fn check_crossed_degrees(g: &OnePlaneGraph, facts: &Facts) -> CheckOutcome {
    match facts.class() {
        Some(k) if k >= 5 => {}
        _ => return CheckOutcome::NotApplicable("needs a 5-connected maximal drawing".into()),
    }
    for v in g.true_vertices() {
        let deg = g.map().degree(v);
        let c = g.c_of(v).expect("true vertex");
        if c < deg.div_ceil(3) || c > deg / 2 {
            return CheckOutcome::Violated(format!("{v}: degree {deg}, {c} crossed edges"));
        }
    }
    CheckOutcome::Holds
}

/// Skeleton and dual identities for maximal drawings, evaluated for both
/// lexicographic skeleton strategies: each red dual vertex has a red
/// neighbor, |V_rd| <= |F_fk|/2, |V_bl| = |F_tr|; and when the planarization
/// is a triangulation, the skeleton is a triangulation with 3n-6 edges and
/// 2n-4 faces, the dual is 3-regular with 2n-4 vertices and 3n-6 edges,
/// cr = |V_rd|/2 and |E| = 3n-6+cr.
pub fn check_skeleton_identities(g: &OnePlaneGraph, facts: &Facts) -> Result<CheckOutcome> {
    if let Some(na) = needs_maximal(facts) {
        return Ok(na);
    }
    if g.n() < 3 {
        return Ok(CheckOutcome::NotApplicable("fewer than 3 vertices".into()));
    }
    let n = g.n();
    let tri = planarization(g).is_triangulation;
    let fk = g.faces().fake_count();
    let tr = g.faces().true_count();
    for strategy in [SkeletonStrategy::LexMax, SkeletonStrategy::LexMin] {
        let s = skeleton(g, &strategy)?;
        let d = dual(&s);
        for f in d.vertices().filter(|&f| d.color(f) == FaceColor::Red) {
            if !d
                .neighbors(f)
                .iter()
                .any(|&h| h != f && d.color(h) == FaceColor::Red)
            {
                return Ok(CheckOutcome::Violated(format!(
                    "red dual vertex {f} has no red neighbor"
                )));
            }
        }
        if 2 * d.red_count() > fk {
            return Ok(CheckOutcome::Violated(format!(
                "{} red faces but only {fk} fake faces",
                d.red_count()
            )));
        }
        if d.blue_count() != tr {
            return Ok(CheckOutcome::Violated(format!(
                "{} blue faces but {tr} true faces",
                d.blue_count()
            )));
        }
        for f in s.plane.faces().ids() {
            let walk = s.plane.faces().walk(f).len();
            if d.degree(f) != walk {
                return Ok(CheckOutcome::Violated(format!(
                    "dual degree of {f} differs from its length {walk}"
                )));
            }
        }
        if tri {
            let checks = [
                (
                    crate::transform::map_is_triangulation(s.plane.map()),
                    "skeleton is not a triangulation",
                ),
                (
                    s.plane.edge_count() == 3 * n - 6,
                    "skeleton edge count is not 3n-6",
                ),
                (
                    s.face_count() == 2 * n - 4,
                    "skeleton face count is not 2n-4",
                ),
                (d.is_regular(3), "dual is not 3-regular"),
                (d.edge_count() == 3 * n - 6, "dual edge count is not 3n-6"),
                (
                    2 * g.crossing_count() == d.red_count(),
                    "cr differs from half the red vertices",
                ),
                (
                    g.edge_count() == 3 * n - 6 + g.crossing_count(),
                    "|E| differs from 3n-6+cr",
                ),
            ];
            if let Some((_, msg)) = checks.iter().find(|(ok, _)| !ok) {
                return Ok(CheckOutcome::Violated(format!("{msg} ({strategy:?})")));
            }
        }
    }
    Ok(CheckOutcome::Holds)
}
