//! Connectivity, degree statistics, structural predicates and bound checks.

mod bounds;
mod connectivity;
mod invariants;
mod near_optimal;
mod profile;
mod triangulation;

pub use bounds::{verify_bounds, BoundCmp, BoundEntry, BoundOptions, BoundReport, BoundStatus};
pub use connectivity::{local_connectivity, vertex_connectivity};
pub use invariants::{
    check_blue_adjacency, check_crossed_degrees, check_crossing_k4, check_face_adjacency,
    check_skeleton_identities, check_true_face_adjacency, CheckOutcome, Facts,
};
pub use near_optimal::{is_near_optimal, NearOptimal};
pub use profile::DegreeProfile;
pub use triangulation::{
    is_separating_cycle, is_triangulation, regularity_checks, RegularityReport,
};
