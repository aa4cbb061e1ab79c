//! Permutations, enumerated permutation groups and the concrete groups
//! acting on the 27 vertices.

mod field;
pub mod g351;
mod perm_group;
mod permutation;

pub use field::{F27Numbering, F27};
pub use g351::{build_g351, build_normalizer, subgroups_g351, SubgroupClass, SubgroupLattice};
pub use perm_group::{PermGroup, MAX_ORDER};
pub use permutation::Permutation;
