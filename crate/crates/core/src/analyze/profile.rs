use std::collections::BTreeMap;

use super::connectivity::vertex_connectivity;
use crate::graph::SimpleGraph;

/// Degree statistics of a simple graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    /// ω(k): number of vertices of degree k.
    pub histogram: BTreeMap<usize, usize>,
    pub min_degree: usize,
    /// Vertices of degree 2.
    pub lambda1: usize,
    /// Vertices of degree 4.
    pub lambda2: usize,
    /// Odd-degree vertices `w` with degree at most 9 or `G - w` 2-connected.
    pub lambda3: usize,
}

impl DegreeProfile {
    pub fn of(g: &SimpleGraph) -> Self {
        let mut histogram = BTreeMap::new();
        for v in 0..g.order() {
            *histogram.entry(g.degree(v)).or_insert(0) += 1;
        }
        let lambda3 = (0..g.order())
            .filter(|&w| {
                let d = g.degree(w);
                d % 2 == 1
                    && (d <= 9
                        || vertex_connectivity(&g.without_vertices(&[w])).is_ok_and(|k| k >= 2))
            })
            .count();
        DegreeProfile {
            min_degree: g.min_degree().unwrap_or(0),
            lambda1: histogram.get(&2).copied().unwrap_or(0),
            lambda2: histogram.get(&4).copied().unwrap_or(0),
            lambda3,
            histogram,
        }
    }

    pub fn omega(&self, k: usize) -> usize {
        self.histogram.get(&k).copied().unwrap_or(0)
    }

    pub fn order(&self) -> usize {
        self.histogram.values().sum()
    }

    pub fn degree_sum(&self) -> usize {
        self.histogram.iter().map(|(k, c)| k * c).sum()
    }

    /// Every degree is `a` or `b`.
    pub fn is_regular_in(&self, a: usize, b: usize) -> bool {
        self.histogram.keys().all(|&k| k == a || k == b)
    }
}
