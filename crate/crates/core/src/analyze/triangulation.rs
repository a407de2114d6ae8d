use super::connectivity::vertex_connectivity;
use super::profile::DegreeProfile;
use crate::drawing::{OnePlaneGraph, PlanarMap};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::transform::map_is_triangulation;

/// All faces are triangles bounded by three distinct vertices.
pub fn is_triangulation(map: &PlanarMap) -> bool {
    map_is_triangulation(map)
}

/// `s` induces a cycle and deleting it disconnects the graph.
pub fn is_separating_cycle(g: &SimpleGraph, s: &[usize]) -> bool {
    let mut inside = vec![false; g.order()];
    for &v in s {
        if v >= g.order() {
            return false;
        }
        inside[v] = true;
    }
    let members: Vec<usize> = (0..g.order()).filter(|&v| inside[v]).collect();
    if members.len() < 3 {
        return false;
    }
    if members
        .iter()
        .any(|&v| g.neighbors(v).iter().filter(|&&w| inside[w]).count() != 2)
    {
        return false;
    }
    let induced = SimpleGraph::new(
        members.len(),
        g.edges()
            .filter(|&(a, b)| inside[a] && inside[b])
            .map(|(a, b)| {
                (
                    members.binary_search(&a).expect("member"),
                    members.binary_search(&b).expect("member"),
                )
            }),
    );
    induced.is_connected() && g.components_without(&inside) >= 2
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityReport {
    pub profile: DegreeProfile,
    pub is_56_regular: bool,
    /// ⌊7ω(4)/3⌋ + ω(5).
    pub low_degree_value: usize,
    /// `low_degree_value < 14`, evaluated only when the minimum degree is at least 4.
    pub low_degree_condition: Option<bool>,
    /// Lower bound on κ implied by whichever criterion fires.
    pub implied_connectivity: Option<usize>,
    pub connectivity: usize,
}

impl RegularityReport {
    /// The implied bound does not exceed the computed connectivity.
    pub fn consistent(&self) -> bool {
        self.implied_connectivity
            .is_none_or(|k| k <= self.connectivity)
    }
}

/// Degree-based connectivity criteria for a plane triangulation: (5,6)-regular
/// implies 5-connected; minimum degree `d >= 4` with ⌊7ω(4)/3⌋ + ω(5) < 14
/// implies `d`-connected.
pub fn regularity_checks(g: &OnePlaneGraph) -> Result<RegularityReport> {
    if g.crossing_count() != 0 || !map_is_triangulation(g.map()) {
        return Err(Error::NotTriangulation);
    }
    let under = g.underlying();
    let profile = DegreeProfile::of(&under);
    let is_56_regular = profile.is_regular_in(5, 6);
    let low_degree_value = 7 * profile.omega(4) / 3 + profile.omega(5);
    let low_degree_condition = (profile.min_degree >= 4).then_some(low_degree_value < 14);
    let mut implied = None;
    if is_56_regular {
        implied = Some(5);
    }
    if low_degree_condition == Some(true) {
        implied = Some(implied.map_or(profile.min_degree, |k: usize| k.max(profile.min_degree)));
    }
    Ok(RegularityReport {
        connectivity: vertex_connectivity(&under)?,
        profile,
        is_56_regular,
        low_degree_value,
        low_degree_condition,
        implied_connectivity: implied,
    })
}
