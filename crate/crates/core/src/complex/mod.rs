//! Simplicial complexes stored by their facets.

mod faces;
mod index;
mod io;
mod vertex_set;

pub use faces::{face_counts, FaceVector};
pub use index::FaceIndex;
pub use io::parse_complex;
pub use vertex_set::{binomial, k_subsets, Subsets, VertexSet, Vertices, MAX_VERTICES};

use crate::error::{Error, Result};
use serde::Serialize;
use std::sync::OnceLock;

/// A simplicial complex on the vertex universe `{1..m}`, given by its
/// maximal simplices in increasing word order.
///
/// Constructors other than [`Complex::from_maximal`] require all facets to
/// have the same cardinality.
#[derive(Debug, Serialize)]
pub struct Complex {
    m: usize,
    facets: Vec<VertexSet>,
    #[serde(skip)]
    pure: bool,
    #[serde(skip)]
    fvec: OnceLock<FaceVector>,
}

impl Clone for Complex {
    fn clone(&self) -> Self {
        Complex {
            m: self.m,
            facets: self.facets.clone(),
            pure: self.pure,
            fvec: self.fvec.clone(),
        }
    }
}

impl PartialEq for Complex {
    fn eq(&self, o: &Self) -> bool {
        self.m == o.m && self.facets == o.facets
    }
}

impl Eq for Complex {}

impl Complex {
    /// Pure complex from a list of facets. Duplicates are an error.
    pub fn new(m: usize, mut facets: Vec<VertexSet>) -> Result<Self> {
        check_universe(m, &facets)?;
        facets.sort_unstable();
        if let Some(w) = facets.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::domain(format!("duplicate facet {:?}", w[0])));
        }
        if let Some(f) = facets.first() {
            let c = f.len();
            if let Some(bad) = facets.iter().find(|f| f.len() != c) {
                return Err(Error::domain(format!(
                    "facet {bad:?} has {} vertices, expected {c}",
                    bad.len()
                )));
            }
        }
        Ok(Complex { m, facets, pure: true, fvec: OnceLock::new() })
    }

    /// Pure complex from facets, silently dropping duplicates.
    pub fn from_facets_dedup(m: usize, mut facets: Vec<VertexSet>) -> Result<Self> {
        facets.sort_unstable();
        facets.dedup();
        Self::new(m, facets)
    }

    /// Complex generated by arbitrary sets; dominated sets are pruned and
    /// the result may be non-pure.
    pub fn from_maximal(m: usize, sets: Vec<VertexSet>) -> Result<Self> {
        check_universe(m, &sets)?;
        let facets = maximal_sets(sets);
        let pure = facets.windows(2).all(|w| w[0].len() == w[1].len());
        Ok(Complex { m, facets, pure, fvec: OnceLock::new() })
    }

    /// The complex with no faces at all.
    pub fn void(m: usize) -> Self {
        Complex { m, facets: Vec::new(), pure: true, fvec: OnceLock::new() }
    }

    /// The complex `{∅}`.
    pub fn empty_simplex(m: usize) -> Self {
        Complex { m, facets: vec![VertexSet::EMPTY], pure: true, fvec: OnceLock::new() }
    }

    /// Boundary of the simplex on `vertices`.
    pub fn simplex_boundary(m: usize, vertices: VertexSet) -> Result<Self> {
        Self::new(m, vertices.iter().map(|v| vertices.without(v)).collect())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn into_facets(self) -> Vec<VertexSet> {
        self.facets
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_pure(&self) -> bool {
        self.pure
    }

    /// Dimension; `-1` for `{∅}` and for the void complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    /// Union of all facets.
    pub fn vertex_set(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |a, &f| a.union(f))
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_set().len()
    }

    pub fn contains_facet(&self, s: VertexSet) -> bool {
        self.facets.binary_search(&s).is_ok()
    }

    /// Linear-scan face test; use [`FaceIndex`] for repeated queries.
    pub fn contains_face(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|&f| s.is_subset(f))
    }

    /// Facets containing `s`.
    pub fn star(&self, s: VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
        self.facets.iter().copied().filter(move |&f| s.is_subset(f))
    }

    /// Link of a face: `{t \ s : t facet, t ⊇ s}`.
    pub fn link(&self, s: VertexSet) -> Result<Complex> {
        let facets: Vec<VertexSet> = self.star(s).map(|t| t.difference(s)).collect();
        if facets.is_empty() {
            return Err(Error::domain(format!("{s:?} is not a face")));
        }
        if self.pure {
            Complex::new(self.m, facets)
        } else {
            Complex::from_maximal(self.m, facets)
        }
    }

    /// Full subcomplex on the vertex set `u`, by maximal simplices.
    pub fn full_subcomplex(&self, u: VertexSet) -> Complex {
        let sets: Vec<VertexSet> = self.facets.iter().map(|f| f.intersection(u)).collect();
        Complex::from_maximal(self.m, sets).expect("subsets stay in the universe")
    }

    /// Contrastar of a face: the full subcomplex on the complement.
    pub fn cost(&self, s: VertexSet) -> Complex {
        self.full_subcomplex(s.complement(self.m))
    }

    /// Face numbers; cached after the first call.
    pub fn f_vector(&self) -> &FaceVector {
        self.fvec.get_or_init(|| FaceVector::from_counts(&face_counts(self)))
    }

    /// Every codimension-one face of a facet lies in exactly two facets.
    pub fn is_weak_pseudomanifold(&self) -> bool {
        if !self.pure || self.facets.is_empty() {
            return false;
        }
        let mut ridges: Vec<u32> = Vec::with_capacity(self.facets.len() * self.facets[0].len());
        for f in &self.facets {
            for v in f.iter() {
                ridges.push(f.without(v).0);
            }
        }
        ridges.sort_unstable();
        let mut i = 0;
        while i < ridges.len() {
            let mut j = i;
            while j < ridges.len() && ridges[j] == ridges[i] {
                j += 1;
            }
            if j - i != 2 {
                return false;
            }
            i = j;
        }
        true
    }

    /// For every `W ⊆ [m]` exactly one of `W` and its complement is a face.
    ///
    /// Counted rather than scanned: no facet may have a face as complement,
    /// and the total number of faces (with ∅) must be `2^(m-1)`.
    pub fn check_complementarity(&self) -> bool {
        if self.m == 0 || self.facets.is_empty() || self.m >= 64 {
            return false;
        }
        let idx = FaceIndex::new(self);
        if self.facets.iter().any(|f| idx.contains(f.complement(self.m))) {
            return false;
        }
        let total: u64 = 1 + self.f_vector().f.iter().sum::<u64>();
        total == 1u64 << (self.m - 1)
    }

    /// Direct scan over all `W` with `|W| ≤ m/2`; exponential, small `m` only.
    pub fn check_complementarity_scan(&self) -> bool {
        let m = self.m;
        if m == 0 || m > 24 {
            return false;
        }
        let idx = FaceIndex::new(self);
        (0..=m / 2).all(|k| {
            k_subsets(m, k).all(|w| idx.contains(w) != idx.contains(w.complement(m)))
        })
    }

    /// Largest `s` such that every `s`-subset of the vertex set is a face.
    pub fn neighborliness(&self) -> usize {
        let f = &self.f_vector().f;
        let n = self.num_vertices();
        let mut s = 0;
        while s < f.len() && f[s] == binomial(n, s + 1) {
            s += 1;
        }
        s
    }

    /// `.dat` text: count line then one row per facet.
    pub fn to_dat(&self) -> String {
        let mut out = String::with_capacity(self.facets.len() * (self.m + 1) + 8);
        out.push_str(&self.facets.len().to_string());
        out.push('\n');
        for f in &self.facets {
            out.push_str(&f.to_row(self.m));
            out.push('\n');
        }
        out
    }
}

fn check_universe(m: usize, sets: &[VertexSet]) -> Result<()> {
    if m > MAX_VERTICES {
        return Err(Error::domain(format!("universe of {m} vertices exceeds {MAX_VERTICES}")));
    }
    let full = VertexSet::full(m);
    if let Some(s) = sets.iter().find(|s| !s.is_subset(full)) {
        return Err(Error::domain(format!("{s:?} leaves the universe 1..{m}")));
    }
    Ok(())
}

/// Inclusion-maximal members of a family, in increasing word order.
pub fn maximal_sets(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|&k| k.len() > s.len() && s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}
