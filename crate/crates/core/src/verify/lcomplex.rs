use crate::complex::{Complex, FaceIndex, VertexSet};
use crate::error::{Error, Result};
use serde::Serialize;

/// `L_{ρ,σ} = {η ⊆ V∖σ : ρ∪η ∈ K}`, kept by its maximal simplices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LComplex {
    pub rho: VertexSet,
    pub sigma: VertexSet,
    pub maximal: Vec<VertexSet>,
}

/// Largest facet size for which the batched tables are built.
pub const MAX_BATCH_FACET: usize = 24;

/// All `L_{ρ,σ}` for one facet `σ`, generated in a single pass over the
/// facets of `K`.
///
/// For each `τ` the part `τ∖σ` is a candidate maximal simplex of every
/// `L_{ρ,σ}` with `ρ ⊆ σ∩τ`. Candidates are grouped by `τ∖σ`; each group
/// keeps the down-closure of its sets `σ∩τ` as a bitmap over subsets of `σ`
/// in local coordinates.
pub struct LBatch {
    sigma: VertexSet,
    inside: Vec<u32>,
    cands: Vec<u32>,
    rows: Vec<u64>,
    row_words: usize,
}

fn compress(x: u32, mask: u32) -> u32 {
    let mut out = 0;
    let mut rest = mask;
    let mut j = 0;
    while rest != 0 {
        let b = rest & rest.wrapping_neg();
        if x & b != 0 {
            out |= 1 << j;
        }
        rest ^= b;
        j += 1;
    }
    out
}

const LOW_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// In place: bit `x` becomes the OR of bits `y ⊇ x`.
fn down_close(row: &mut [u64], nbits: usize) {
    for (i, &mask) in LOW_MASKS.iter().enumerate().take(nbits.min(6)) {
        let sh = 1 << i;
        for w in row.iter_mut() {
            *w |= (*w >> sh) & mask;
        }
    }
    for i in 6..nbits {
        let s = 1 << (i - 6);
        for j in 0..row.len() {
            if j & s == 0 {
                row[j] |= row[j | s];
            }
        }
    }
}

impl LBatch {
    pub fn new(k: &Complex, sigma: VertexSet) -> Result<Self> {
        if !k.contains_facet(sigma) {
            return Err(Error::domain(format!("{sigma:?} is not a facet")));
        }
        let n = sigma.len();
        if n > MAX_BATCH_FACET {
            return Err(Error::domain(format!("facets of {n} vertices are too large to batch")));
        }
        let inside: Vec<u32> = sigma.iter().map(|v| 1u32 << (v - 1)).collect();
        let row_words = (1usize << n).div_ceil(64);
        let mut pairs: Vec<(u32, u32)> = k
            .facets()
            .iter()
            .map(|t| (t.difference(sigma).0, compress(t.0, sigma.0)))
            .collect();
        pairs.sort_unstable();
        let mut cands = Vec::new();
        let mut rows = Vec::new();
        let mut i = 0;
        while i < pairs.len() {
            let b = pairs[i].0;
            let start = rows.len();
            rows.resize(start + row_words, 0u64);
            let row = &mut rows[start..];
            while i < pairs.len() && pairs[i].0 == b {
                let a = pairs[i].1 as usize;
                row[a >> 6] |= 1 << (a & 63);
                i += 1;
            }
            down_close(row, n);
            cands.push(b);
        }
        Ok(LBatch { sigma, inside, cands, rows, row_words })
    }

    pub fn sigma(&self) -> VertexSet {
        self.sigma
    }

    /// Number of nonempty proper subsets `ρ`, i.e. the local indices
    /// `1..full` (exclusive).
    pub fn local_full(&self) -> u32 {
        ((1u64 << self.inside.len()) - 1) as u32
    }

    pub fn expand(&self, r: u32) -> VertexSet {
        let mut out = 0;
        let mut rest = r;
        while rest != 0 {
            out |= self.inside[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        VertexSet(out)
    }

    /// Maximal simplices of `L_{ρ,σ}` for the local subset `r`, as words.
    pub fn maximal_words(&self, r: u32) -> Vec<u32> {
        let (w, bit) = ((r >> 6) as usize, 1u64 << (r & 63));
        let mut hits: Vec<u32> = self
            .cands
            .iter()
            .enumerate()
            .filter(|&(c, _)| self.rows[c * self.row_words + w] & bit != 0)
            .map(|(_, &b)| b)
            .collect();
        hits.sort_unstable_by_key(|b| std::cmp::Reverse(b.count_ones()));
        let mut kept: Vec<u32> = Vec::with_capacity(hits.len());
        for b in hits {
            if !kept.iter().any(|&k| b & !k == 0) {
                kept.push(b);
            }
        }
        kept.sort_unstable();
        kept
    }

    pub fn l_complex(&self, r: u32) -> LComplex {
        LComplex {
            rho: self.expand(r),
            sigma: self.sigma,
            maximal: self.maximal_words(r).into_iter().map(VertexSet).collect(),
        }
    }
}

/// Every `L_{ρ,σ}` over nonempty proper `ρ ⊂ σ`, in increasing order of `ρ`.
pub fn l_complexes_for_facet(k: &Complex, sigma: VertexSet) -> Result<Vec<LComplex>> {
    let batch = LBatch::new(k, sigma)?;
    let mut out: Vec<LComplex> = (1..batch.local_full()).map(|r| batch.l_complex(r)).collect();
    out.sort_unstable_by_key(|l| l.rho);
    Ok(out)
}

/// One `L_{ρ,σ}` directly from the star of `ρ`.
pub fn l_complex(k: &Complex, idx: &FaceIndex, rho: VertexSet, sigma: VertexSet) -> LComplex {
    let sets: Vec<VertexSet> = idx.star(rho).into_iter().map(|i| k.facets()[i].difference(sigma)).collect();
    LComplex { rho, sigma, maximal: crate::complex::maximal_sets(sets) }
}
