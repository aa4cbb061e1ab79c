use super::triples::DistinguishedTriple;
use crate::complex::{Complex, VertexSet};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use rustc_hash::FxHashSet;

/// The distinguished triple of `K₂` whose 351 translates are all of its
/// distinguished subcomplexes.
pub fn k2_triple() -> DistinguishedTriple {
    DistinguishedTriple::new(
        VertexSet::from_vertices([1, 2, 5, 6, 9, 10, 11, 16, 25]),
        VertexSet::from_vertices([3, 4, 7, 8, 12, 13, 14, 15, 17]),
        VertexSet::from_vertices([18, 19, 20, 21, 22, 23, 24, 26, 27]),
    )
}

/// `K_S`: replace `g(J)` by `g(J̃)` in `base` for every `g ∈ S`.
///
/// `subset` holds indices into the element list of `g` (lexicographic by
/// image array). The translates of `t` must have pairwise disjoint
/// interiors, which is checked.
pub fn build_k_s(base: &Complex, t: &DistinguishedTriple, g: &PermGroup, subset: &[usize]) -> Result<Complex> {
    let mut remove: FxHashSet<VertexSet> = FxHashSet::default();
    let mut add: Vec<VertexSet> = Vec::new();
    let mut seen: FxHashSet<usize> = FxHashSet::default();
    for &i in subset {
        if i >= g.order() {
            return Err(Error::domain(format!("element index {i} out of range 0..{}", g.order())));
        }
        if !seen.insert(i) {
            continue;
        }
        let gt = t.apply(&g.elements()[i]);
        for f in gt.j_facets() {
            if !base.contains_facet(f) {
                return Err(Error::domain(format!("{f:?} of a translate is not a facet")));
            }
            if !remove.insert(f) {
                return Err(Error::domain("translates of the triple overlap"));
            }
        }
        add.extend(gt.j_tilde_facets());
    }
    let mut facets: Vec<VertexSet> = base.facets().iter().copied().filter(|f| !remove.contains(f)).collect();
    facets.extend(add);
    Complex::new(base.m(), facets)
}
