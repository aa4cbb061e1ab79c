//! ν-parameters, distinguished triples and triple flips, the `K_S` family,
//! bistellar moves and the census of `K_S` by symmetry group.

mod bistellar;
mod census;
mod ks;
mod triples;

pub use bistellar::{bistellar_options, BistellarMove, BistellarOptions};
pub use census::{subgroup_census, Census, CensusRow};
pub use ks::{build_k_s, k2_triple};
pub use triples::{
    distinguished_triples, nu_parameters, nu_table, triple_flip, DistinguishedTriple, FacetSet, NuRow,
};
