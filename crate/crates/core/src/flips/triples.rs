use crate::complex::{Complex, FaceIndex, VertexSet};
use crate::error::{Error, Result};
use crate::group::Permutation;
use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::Serialize;
use std::collections::BTreeSet;

/// `ν_K(σ, v)` for every vertex `v ∉ σ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NuRow {
    pub sigma: VertexSet,
    /// `(v, ν)` in increasing `v`.
    pub nu: Vec<(usize, u32)>,
}

impl NuRow {
    pub fn max(&self) -> u32 {
        self.nu.iter().map(|&(_, n)| n).max().unwrap_or(0)
    }
    pub fn sum(&self) -> u32 {
        self.nu.iter().map(|&(_, n)| n).sum()
    }
    pub fn count(&self, value: u32) -> usize {
        self.nu.iter().filter(|&&(_, n)| n == value).count()
    }
}

/// Hash set of facet words, for repeated membership tests.
pub struct FacetSet(FxHashSet<u32>);

impl FacetSet {
    pub fn new(k: &Complex) -> Self {
        FacetSet(k.facets().iter().map(|f| f.0).collect())
    }
    pub fn contains(&self, s: VertexSet) -> bool {
        self.0.contains(&s.0)
    }
}

fn nu_row(k: &Complex, set: &FacetSet, sigma: VertexSet) -> NuRow {
    let outside = VertexSet::full(k.m()).difference(sigma);
    let nu = outside
        .iter()
        .map(|v| {
            let n = sigma.iter().filter(|&u| set.contains(sigma.without(u).with(v))).count();
            (v, n as u32)
        })
        .collect();
    NuRow { sigma, nu }
}

/// ν-parameters of one facet.
pub fn nu_parameters(k: &Complex, sigma: VertexSet) -> Result<NuRow> {
    if !k.contains_facet(sigma) {
        return Err(Error::domain(format!("{sigma:?} is not a facet")));
    }
    Ok(nu_row(k, &FacetSet::new(k), sigma))
}

/// ν-parameters of every facet, in facet order.
pub fn nu_table(k: &Complex) -> Vec<NuRow> {
    let set = FacetSet::new(k);
    k.facets().par_iter().map(|&s| nu_row(k, &set, s)).collect()
}

/// Three `(d/2)`-simplices with `link(Δ₁) = ∂Δ₂`, `link(Δ₂) = ∂Δ₃` and
/// `link(Δ₃) = ∂Δ₁`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DistinguishedTriple {
    pub d1: VertexSet,
    pub d2: VertexSet,
    pub d3: VertexSet,
}

/// `A * ∂B` as facets.
fn join_boundary(a: VertexSet, b: VertexSet) -> impl Iterator<Item = VertexSet> {
    b.iter().map(move |w| a.union(b.without(w)))
}

impl DistinguishedTriple {
    pub fn new(d1: VertexSet, d2: VertexSet, d3: VertexSet) -> Self {
        DistinguishedTriple { d1, d2, d3 }
    }

    pub fn rotate(self) -> Self {
        DistinguishedTriple { d1: self.d2, d2: self.d3, d3: self.d1 }
    }

    /// Rotation with the smallest `Δ₁`.
    pub fn canonical(self) -> Self {
        let r1 = self.rotate();
        let r2 = r1.rotate();
        [self, r1, r2].into_iter().min_by_key(|t| t.d1).expect("three rotations")
    }

    /// The triple whose distinguished subcomplex is `J̃`.
    pub fn reversed(self) -> Self {
        DistinguishedTriple { d1: self.d2, d2: self.d1, d3: self.d3 }
    }

    pub fn apply(self, g: &Permutation) -> Self {
        DistinguishedTriple { d1: g.apply(self.d1), d2: g.apply(self.d2), d3: g.apply(self.d3) }
    }

    /// Facets of `J = (Δ₁*∂Δ₂) ∪ (Δ₂*∂Δ₃) ∪ (Δ₃*∂Δ₁)`.
    pub fn j_facets(&self) -> Vec<VertexSet> {
        let mut f: Vec<VertexSet> = join_boundary(self.d1, self.d2)
            .chain(join_boundary(self.d2, self.d3))
            .chain(join_boundary(self.d3, self.d1))
            .collect();
        f.sort_unstable();
        f
    }

    /// Facets of `J̃ = (∂Δ₁*Δ₂) ∪ (∂Δ₂*Δ₃) ∪ (∂Δ₃*Δ₁)`.
    pub fn j_tilde_facets(&self) -> Vec<VertexSet> {
        self.reversed().j_facets()
    }

    /// Check the three link conditions in `K`.
    pub fn is_distinguished_in(&self, k: &Complex, idx: &FaceIndex) -> bool {
        let (a, b, c) = (self.d1, self.d2, self.d3);
        if !a.intersection(b).is_empty() || !b.intersection(c).is_empty() || !a.intersection(c).is_empty() {
            return false;
        }
        [(a, b), (b, c), (c, a)].iter().all(|&(x, y)| {
            idx.star_count(x) == y.len() && join_boundary(x, y).all(|f| k.contains_facet(f))
        })
    }
}

fn check_shape(k: &Complex) -> Result<usize> {
    let d = k.dim();
    if d < 2 || d % 2 != 0 || !k.is_pure() {
        return Err(Error::domain(format!("expected a pure complex of even dimension, got dimension {d}")));
    }
    let d = d as usize;
    if k.num_vertices() != 3 * d / 2 + 3 {
        return Err(Error::domain(format!(
            "a {d}-dimensional complex needs {} vertices, found {}",
            3 * d / 2 + 3,
            k.num_vertices()
        )));
    }
    Ok(d)
}

/// All distinguished triples, one per cyclic class, sorted.
///
/// Candidates come from facets `σ` and vertices `v` with `ν(σ, v) = d/2`;
/// every candidate is then checked against the link conditions.
pub fn distinguished_triples(k: &Complex) -> Result<Vec<DistinguishedTriple>> {
    let d = check_shape(k)?;
    let half = (d / 2) as u32;
    let set = FacetSet::new(k);
    let verts = k.vertex_set();
    let cands: Vec<DistinguishedTriple> = k
        .facets()
        .par_iter()
        .flat_map_iter(|&sigma| {
            let row = nu_row(k, &set, sigma);
            let set = &set;
            row.nu
                .into_iter()
                .filter(move |&(_, n)| n == half)
                .map(move |(v, _)| {
                    let rho: VertexSet =
                        sigma.iter().filter(|&u| set.contains(sigma.without(u).with(v))).collect();
                    DistinguishedTriple::new(sigma.difference(rho), rho.with(v), verts.difference(sigma.with(v)))
                        .canonical()
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let uniq: BTreeSet<DistinguishedTriple> = cands.into_iter().collect();
    let idx = FaceIndex::new(k);
    Ok(uniq.into_iter().filter(|t| t.is_distinguished_in(k, &idx)).collect())
}

/// Replace `J` by `J̃`.
pub fn triple_flip(k: &Complex, t: &DistinguishedTriple) -> Result<Complex> {
    let idx = FaceIndex::new(k);
    if !t.is_distinguished_in(k, &idx) {
        return Err(Error::domain("triple is not distinguished"));
    }
    let remove: FxHashSet<VertexSet> = t.j_facets().into_iter().collect();
    let mut facets: Vec<VertexSet> = k.facets().iter().copied().filter(|f| !remove.contains(f)).collect();
    facets.extend(t.j_tilde_facets());
    Complex::new(k.m(), facets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn nu_on_triangle_boundary() {
        let k = Complex::simplex_boundary(3, VertexSet::full(3)).unwrap();
        let r = nu_parameters(&k, VertexSet::from_vertices([1, 2])).unwrap();
        assert_eq!(r.nu, vec![(3, 2)]);
        assert_eq!(r.sum(), 2);
    }

    #[test]
    fn rp2_triples_partition_edges() {
        let k = fixtures::rp2_6();
        let ts = distinguished_triples(&k).unwrap();
        assert_eq!(ts.len(), 5);
        let mut edges: Vec<VertexSet> = ts.iter().flat_map(|t| [t.d1, t.d2, t.d3]).collect();
        edges.sort_unstable();
        edges.dedup();
        assert_eq!(edges.len(), 15);
    }

    #[test]
    fn flip_twice_is_identity() {
        let k = fixtures::rp2_6();
        let t = distinguished_triples(&k).unwrap()[0];
        let k1 = triple_flip(&k, &t).unwrap();
        assert_ne!(k1, k);
        assert!(k1.is_weak_pseudomanifold());
        assert_eq!(triple_flip(&k1, &t.reversed()).unwrap(), k);
        assert!(triple_flip(&k, &t.reversed()).is_err());
    }

    #[test]
    fn cp2_triples() {
        // the special lines give one triple; six more come from
        // non-special line configurations (checked by brute force)
        let k = fixtures::cp2_9();
        let ts = distinguished_triples(&k).unwrap();
        assert_eq!(ts.len(), 7);
        let line = |y: usize| VertexSet::from_vertices((0..3).map(|x| fixtures::cp2_label(x, y)));
        let special = DistinguishedTriple::new(line(0), line(2), line(1)).canonical();
        assert!(ts.contains(&special));
        let k1 = triple_flip(&k, &special).unwrap();
        assert_eq!(k1.f_vector(), k.f_vector());
        assert!(k1.check_complementarity());
    }
}
