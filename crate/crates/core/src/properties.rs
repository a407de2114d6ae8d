//! Invariants every maximal 1-plane drawing must satisfy, and a seeded batch
//! runner that checks them on saturated random drawings.

use std::fmt;
use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::analyze::{
    check_blue_adjacency, check_crossing_k4, check_face_adjacency, check_skeleton_identities,
    check_true_face_adjacency, verify_bounds, BoundOptions, BoundStatus, CheckOutcome, Facts,
};
use crate::drawing::OnePlaneGraph;
use crate::error::Result;
use crate::generators::gen_random_seed;
use crate::maximality::{insertion_candidates, min_redraw_crossings, saturate, SaturationPolicy};
use crate::transform::{dual, planarization, skeleton, SkeletonStrategy};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyViolation {
    pub property: &'static str,
    pub detail: String,
}

impl fmt::Display for PropertyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.property, self.detail)
    }
}

/// Checks the full suite on `g`. Maximality-dependent properties are skipped
/// when `g` is not maximal, which is itself reported.
pub fn check_properties(g: &OnePlaneGraph) -> Result<Vec<PropertyViolation>> {
    let mut out = Vec::new();
    let mut fail =
        |property: &'static str, detail: String| out.push(PropertyViolation { property, detail });

    for e in g.edge_ids() {
        let r = min_redraw_crossings(g, e)?;
        let current = usize::from(g.edge(e).crossing.is_some());
        if r.crossings > current {
            fail(
                "redraw-not-worse",
                format!("{e} needs {} crossings, has {current}", r.crossings),
            );
        }
    }

    let facts = Facts::compute(g)?;
    if !facts.maximal {
        fail("maximal", "drawing admits an insertion".into());
        return Ok(out);
    }
    let n = g.n();
    let tri = planarization(g).is_triangulation;
    if n >= 5 && 3 * g.edge_count() + 9 < 7 * n {
        fail(
            "edge-lower-bound",
            format!("|E| = {} below 7n/3 - 3 for n = {n}", g.edge_count()),
        );
    }
    if facts.connectivity >= 4 && !tri {
        fail(
            "k4-triangulated",
            format!(
                "connectivity {} but planarization is not a triangulation",
                facts.connectivity
            ),
        );
    }
    if facts.connectivity == 3 && facts.immovable == Some(true) && !tri {
        fail(
            "k3-immovable-triangulated",
            "immovable 3-connected drawing with a non-triangular face".into(),
        );
    }

    let mut record = |property: &'static str, o: CheckOutcome| {
        if let CheckOutcome::Violated(w) = o {
            fail(property, w);
        }
    };
    record("face-vertices-adjacent", check_face_adjacency(g, &facts));
    record("crossing-induces-k4", check_crossing_k4(g, &facts));
    record("true-face-adjacency", check_true_face_adjacency(g, &facts));
    if n >= 3 {
        let d = dual(&skeleton(g, &SkeletonStrategy::LexMax)?);
        record("blue-dual-adjacency", check_blue_adjacency(&d, n, &facts));
    }
    record("skeleton-identities", check_skeleton_identities(g, &facts)?);

    let report = verify_bounds(g, &BoundOptions { facts: Some(facts) })?;
    for e in report
        .entries
        .iter()
        .filter(|e| e.status == BoundStatus::Fail)
    {
        out.push(PropertyViolation {
            property: "bound",
            detail: e.to_string(),
        });
    }
    Ok(out)
}

/// Applies every insertion candidate of `g` and checks that the result grows
/// by exactly one edge and the candidate's crossing delta.
pub fn check_candidate_soundness(g: &OnePlaneGraph) -> Vec<PropertyViolation> {
    insertion_candidates(g)
        .into_iter()
        .filter_map(|c| {
            let detail = match c.apply(g) {
                Err(err) => format!("{c}: {err}"),
                Ok((h, _))
                    if h.edge_count() == g.edge_count() + 1
                        && h.crossing_count() == g.crossing_count() + c.delta() =>
                {
                    return None
                }
                Ok((h, _)) => format!(
                    "{c}: |E| {} -> {}, cr {} -> {}",
                    g.edge_count(),
                    h.edge_count(),
                    g.crossing_count(),
                    h.crossing_count()
                ),
            };
            Some(PropertyViolation {
                property: "candidate-soundness",
                detail,
            })
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct InstanceResult {
    pub index: usize,
    pub seed: u64,
    pub n: usize,
    pub crossings: usize,
    pub edges: usize,
    pub violations: Vec<PropertyViolation>,
}

#[derive(Clone, Debug)]
pub struct FuzzReport {
    pub instances: Vec<InstanceResult>,
}

impl FuzzReport {
    pub fn violation_count(&self) -> usize {
        self.instances.iter().map(|i| i.violations.len()).sum()
    }
}

/// Per-instance seeds drawn from one master seed.
pub fn instance_seeds(count: usize, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| rng.gen()).collect()
}

/// Runs one fuzz instance: random base drawing, soundness of its candidates,
/// seeded saturation and the property suite.
pub fn fuzz_instance(n: usize, seed: u64) -> Result<(OnePlaneGraph, Vec<PropertyViolation>)> {
    let base = gen_random_seed(n, seed)?;
    let mut violations = check_candidate_soundness(&base);
    let g = saturate(&base, SaturationPolicy::Seeded(seed))?;
    violations.extend(check_properties(&g)?);
    Ok((g, violations))
}

/// Checks `count` saturated random drawings with orders drawn from `orders`.
/// Instances run in parallel; results come back in index order.
pub fn fuzz(count: usize, orders: RangeInclusive<usize>, seed: u64) -> Result<FuzzReport> {
    let seeds = instance_seeds(count, seed);
    let span = (orders.end() - orders.start() + 1) as u64;
    let instances = seeds
        .into_par_iter()
        .enumerate()
        .map(|(index, s)| {
            let n = orders.start() + (s % span) as usize;
            let (g, violations) = fuzz_instance(n, s)?;
            Ok(InstanceResult {
                index,
                seed: s,
                n,
                crossings: g.crossing_count(),
                edges: g.edge_count(),
                violations,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FuzzReport { instances })
}
