use crate::complex::{Complex, VertexSet};
use crate::error::{Error, Result};
use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

/// Codimension-two incidence counts: the key is `s(ρ)`, the number of facets
/// through a `(d−2)`-simplex `ρ`, and the value the number of such `ρ`.
pub type SDistribution = BTreeMap<usize, u64>;

/// The `(d−1)`-vertex subsets of each facet, with multiplicity.
fn codim2_words<'a>(facets: impl IntoParallelIterator<Item = &'a VertexSet>, size: usize) -> Vec<u32> {
    let mut words: Vec<u32> = facets
        .into_par_iter()
        .flat_map_iter(|&f| {
            let n = f.len();
            let verts: Vec<usize> = f.iter().collect();
            let drop = n.saturating_sub(size);
            let combos: Vec<u32> = if n < size {
                Vec::new()
            } else {
                verts
                    .iter()
                    .copied()
                    .combinations(drop)
                    .map(|out| out.into_iter().fold(f, |s, v| s.without(v)).0)
                    .collect()
            };
            combos
        })
        .collect();
    words.par_sort_unstable();
    words
}

fn run_lengths(words: &[u32]) -> Vec<(u32, u32)> {
    words.iter().dedup_with_count().map(|(c, &w)| (w, c as u32)).collect()
}

/// Histogram of `s(ρ)` over all `(d−2)`-simplices, `d = dim K`.
pub fn s_distribution(k: &Complex) -> SDistribution {
    let d = k.dim();
    let mut out = SDistribution::new();
    if d < 1 {
        return out;
    }
    let words = codim2_words(k.facets(), (d - 1) as usize);
    for (_, c) in run_lengths(&words) {
        *out.entry(c as usize).or_default() += 1;
    }
    out
}

/// `N_pq` for a directed edge `(a, b)`: the number of `(d−1)`-simplices
/// `τ ⊃ {a, b}` with `s(τ∖a) = p` and `s(τ∖b) = q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NpqMatrix {
    pub a: usize,
    pub b: usize,
    pub counts: BTreeMap<(usize, usize), u64>,
}

impl NpqMatrix {
    pub fn get(&self, p: usize, q: usize) -> u64 {
        self.counts.get(&(p, q)).copied().unwrap_or(0)
    }

    /// Smallest and largest `s` value appearing as a row or column.
    pub fn range(&self) -> Option<(usize, usize)> {
        let vals = self.counts.keys().flat_map(|&(p, q)| [p, q]);
        vals.clone().min().zip(vals.max())
    }

    /// Dense rows over [`NpqMatrix::range`].
    pub fn dense(&self) -> Vec<Vec<u64>> {
        let Some((lo, hi)) = self.range() else { return Vec::new() };
        (lo..=hi).map(|p| (lo..=hi).map(|q| self.get(p, q)).collect()).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.counts.iter().all(|(&(p, q), &n)| self.get(q, p) == n)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

pub fn edge_matrix_npq(k: &Complex, a: usize, b: usize) -> Result<NpqMatrix> {
    let edge = VertexSet::from_vertices([a, b]);
    if k.dim() < 1 || a == b || a == 0 || b == 0 || a > k.m() || b > k.m() || !k.star(edge).any(|_| true) {
        return Err(Error::domain(format!("{{{a},{b}}} is not an edge")));
    }
    let d = k.dim() as usize;
    // every facet through a (d−2)-simplex containing a or b contains that vertex
    let near: Vec<VertexSet> = k.facets().iter().copied().filter(|f| f.contains(a) || f.contains(b)).collect();
    let s = run_lengths(&codim2_words(&near, d - 1));
    let s_of = |rho: VertexSet| -> usize {
        s.binary_search_by_key(&rho.0, |&(w, _)| w).map(|i| s[i].1 as usize).unwrap_or(0)
    };
    let mut taus: Vec<u32> = k
        .star(edge)
        .flat_map(|f| f.difference(edge).iter().map(move |v| f.without(v).0).collect::<Vec<_>>())
        .filter(|&t| t.count_ones() as usize == d)
        .collect();
    taus.sort_unstable();
    taus.dedup();
    let mut counts = BTreeMap::new();
    for t in taus {
        let t = VertexSet(t);
        *counts.entry((s_of(t.without(a)), s_of(t.without(b)))).or_default() += 1;
    }
    Ok(NpqMatrix { a, b, counts })
}
