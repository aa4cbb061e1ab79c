//! Combinatorial-manifold certification through nonevasive
//! `L_{ρ,σ}` complexes.

mod certify;
mod collapse;
mod lcomplex;
mod nonevasive;

pub use certify::{
    certify_expanded, certify_manifold, Certificate, CertificateEntry, CertifyOptions, CertifyReport, CertifyStats,
    Outcome,
};
pub use collapse::{collapse_oracle, Collapse, ORACLE_MAX_VERTICES};
pub use lcomplex::{l_complex, l_complexes_for_facet, LBatch, LComplex, MAX_BATCH_FACET};
pub use nonevasive::{is_nonevasive, nonevasive_by_definition, nonevasive_trace, replay_trace, Nonevasive, Trace};
