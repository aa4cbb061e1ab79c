use crate::complex::{Complex, VertexSet};
use crate::error::{Error, Result};
use crate::group::{PermGroup, Permutation};
use rustc_hash::FxHashSet;

fn canonical_set(k: &Complex, g: &PermGroup) -> FxHashSet<u32> {
    k.facets().iter().map(|&f| g.canonical_rep(f).0).collect()
}

/// Number of `G`-orbits of facets shared by two `G`-invariant complexes,
/// each given by orbit representatives (any member of an orbit will do).
pub fn orbit_intersection_counts(ka: &Complex, kb: &Complex, g: &PermGroup) -> usize {
    let a = canonical_set(ka, g);
    canonical_set(kb, g).iter().filter(|w| a.contains(w)).count()
}

/// Shared orbits of `rows[i]` and `q · cols[j]` for every `i`, `j`.
///
/// `q` must normalise `G`, so that `q · cols[j]` is again `G`-invariant.
pub fn intersection_table(rows: &[Complex], cols: &[Complex], q: &Permutation, g: &PermGroup) -> Result<Vec<Vec<usize>>> {
    if g.generators().iter().any(|h| !g.contains(&q.compose(h).compose(&q.inverse()))) {
        return Err(Error::domain(format!("{q} does not normalise the group")));
    }
    let rs: Vec<FxHashSet<u32>> = rows.iter().map(|k| canonical_set(k, g)).collect();
    let cs: Vec<FxHashSet<u32>> = cols.iter().map(|k| canonical_set(&q.apply_complex(k), g)).collect();
    Ok(rs.iter().map(|r| cs.iter().map(|c| c.iter().filter(|w| r.contains(w)).count()).collect()).collect())
}

/// The complex of facets common to `a` and `b`.
pub fn facet_intersection(a: &Complex, b: &Complex) -> Result<Complex> {
    if a.m() != b.m() {
        return Err(Error::domain("complexes on different vertex universes"));
    }
    let bs: FxHashSet<VertexSet> = b.facets().iter().copied().collect();
    Complex::new(a.m(), a.facets().iter().copied().filter(|f| bs.contains(f)).collect())
}
