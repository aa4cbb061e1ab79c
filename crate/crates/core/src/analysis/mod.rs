//! Fingerprints and symmetries: `s(ρ)` distributions, `N_pq` matrices, the
//! residue tournament, symmetry groups, fixed-point complexes and orbit
//! intersections.

mod fingerprint;
mod fixed;
mod intersect;
mod symmetry;
mod tournament;

pub use fingerprint::{edge_matrix_npq, s_distribution, NpqMatrix, SDistribution};
pub use fixed::{fixed_point_complex, FixedPointComplex};
pub use intersect::{facet_intersection, intersection_table, orbit_intersection_counts};
pub use symmetry::{are_isomorphic, find_isomorphism, symmetry_group, MATCHER_MAX_VERTICES};
pub use tournament::{build_tournament, tournament_automorphisms, Tournament};
