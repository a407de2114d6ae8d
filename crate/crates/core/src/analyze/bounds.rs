use std::fmt;

use num_rational::Ratio;

use super::connectivity::vertex_connectivity;
use super::invariants::Facts;
use super::profile::DegreeProfile;
use crate::drawing::OnePlaneGraph;
use crate::error::{Error, Result};
use crate::maximality::{is_immovable, is_maximal, reduce_crossings};
use crate::transform::planarization;

type Q = Ratio<i64>;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum BoundCmp {
    Ge,
    Le,
    Eq,
}

impl BoundCmp {
    fn eval(self, lhs: Q, rhs: Q) -> bool {
        match self {
            BoundCmp::Ge => lhs >= rhs,
            BoundCmp::Le => lhs <= rhs,
            BoundCmp::Eq => lhs == rhs,
        }
    }
}

impl fmt::Display for BoundCmp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundCmp::Ge => ">=",
            BoundCmp::Le => "<=",
            BoundCmp::Eq => "==",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundStatus {
    Pass,
    Fail,
    NotApplicable(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEntry {
    pub id: &'static str,
    pub lhs: Q,
    pub cmp: BoundCmp,
    pub rhs: Q,
    pub status: BoundStatus,
}

impl BoundEntry {
    /// Holds with equality.
    pub fn is_tight(&self) -> bool {
        self.status == BoundStatus::Pass && self.lhs == self.rhs
    }
}

impl fmt::Display for BoundEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match &self.status {
            BoundStatus::Pass if self.lhs == self.rhs => "PASS tight",
            BoundStatus::Pass => "PASS",
            BoundStatus::Fail => "FAIL",
            BoundStatus::NotApplicable(_) => "NOT_APPLICABLE",
        };
        write!(
            f,
            "{} {} {} {} {status}",
            self.id, self.lhs, self.cmp, self.rhs
        )
    }
}

#[derive(Clone, Debug, Default)]
pub struct BoundOptions {
    /// Reuse already computed connectivity, maximality and immovability.
    pub facts: Option<Facts>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub crossings: usize,
    pub edges: usize,
    pub connectivity: usize,
    pub triangulation: bool,
    /// Computed when κ = 3, where the lower bounds need it.
    pub immovable: Option<bool>,
    /// Crossings left after redrawing movable edges crossing-free; an upper
    /// bound on the crossing number of the graph.
    pub reduced_crossings: usize,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn entry(&self, id: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status != BoundStatus::Fail)
    }

    /// Machine-readable lines `bound-id lhs cmp rhs status`.
    pub fn lines(&self) -> Vec<String> {
        self.entries.iter().map(|e| e.to_string()).collect()
    }
}

fn q(x: usize) -> Q {
    Q::from_integer(x as i64)
}

fn frac(a: i64, b: i64) -> Q {
    Q::new(a, b)
}

/// Evaluates every lower and upper bound on this maximal drawing in exact
/// rational arithmetic. Rows whose hypotheses fail are reported as not
/// applicable.
pub fn verify_bounds(g: &OnePlaneGraph, options: &BoundOptions) -> Result<BoundReport> {
    let (connectivity, maximal, mut immovable) = match &options.facts {
        Some(f) => (f.connectivity, f.maximal, f.immovable),
        None => (vertex_connectivity(&g.underlying())?, is_maximal(g), None),
    };
    if !maximal {
        return Err(Error::NotMaximal);
    }
    if connectivity == 3 && immovable.is_none() {
        immovable = Some(is_immovable(g)?);
    }
    let n = g.n();
    let cr = g.crossing_count();
    let m = g.edge_count();
    let triangulation = planarization(g).is_triangulation;
    let k = connectivity.min(7);
    let nm2 = q(n) - q(2);

    let mut entries = Vec::new();
    let mut row = |id: &'static str, lhs: Q, cmp: BoundCmp, rhs: Q, why_not: Option<String>| {
        let status = match why_not {
            Some(r) => BoundStatus::NotApplicable(r),
            None if cmp.eval(lhs, rhs) => BoundStatus::Pass,
            None => BoundStatus::Fail,
        };
        entries.push(BoundEntry {
            id,
            lhs,
            cmp,
            rhs,
            status,
        });
    };

    let class_row = |want: &[usize], min_n: usize| -> Option<String> {
        if !want.contains(&k) {
            Some(format!("connectivity {connectivity}"))
        } else if n < min_n {
            Some(format!("n = {n} < {min_n}"))
        } else if k == 3 && immovable != Some(true) {
            Some("not immovable".into())
        } else {
            None
        }
    };
    let lower = [
        (
            "cr-lower-k3",
            "size-lower-k3",
            &[3][..],
            5,
            nm2 / q(3),
            frac(10, 3) * nm2,
        ),
        (
            "cr-lower-k4",
            "size-lower-k4",
            &[4][..],
            6,
            nm2 / q(2),
            frac(7, 2) * nm2,
        ),
        (
            "cr-lower-k5-6",
            "size-lower-k5-6",
            &[5, 6][..],
            0,
            q(3) * nm2 / q(5),
            frac(18, 5) * nm2,
        ),
        (
            "cr-lower-k7",
            "size-lower-k7",
            &[7][..],
            0,
            q(3) * q(n) / q(4),
            frac(15, 4) * nm2 + frac(3, 2),
        ),
    ];
    for (cr_id, size_id, want, min_n, cr_rhs, size_rhs) in lower {
        let why_not = class_row(want, min_n);
        row(cr_id, q(cr), BoundCmp::Ge, cr_rhs, why_not.clone());
        row(size_id, q(m), BoundCmp::Ge, size_rhs, why_not);
    }

    let small = (n < 5).then(|| format!("n = {n} < 5"));
    row(
        "size-lower-maximal",
        q(m),
        BoundCmp::Ge,
        frac(7, 3) * q(n) - q(3),
        small,
    );
    row("cr-upper", q(cr), BoundCmp::Le, nm2, None);
    let p = DegreeProfile::of(&g.underlying());
    let refined = nm2 - q(2 * p.lambda1 + 2 * p.lambda2 + p.lambda3) / q(6);
    // this bound concerns cr(G); a movable drawing may exceed it with cr_×
    let cr_graph = if immovable == Some(true) {
        cr
    } else {
        reduce_crossings(g)?.crossing_count()
    };
    row("cr-upper-degree", q(cr_graph), BoundCmp::Le, refined, None);
    let not_tri = (!triangulation).then(|| "planarization is not a triangulation".to_string());
    row(
        "size-identity",
        q(m),
        BoundCmp::Eq,
        q(3 * n) - q(6) + q(cr),
        not_tri,
    );

    Ok(BoundReport {
        n,
        crossings: cr,
        edges: m,
        connectivity,
        triangulation,
        immovable,
        reduced_crossings: cr_graph,
        entries,
    })
}
