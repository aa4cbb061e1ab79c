use super::lcomplex::{l_complex, LBatch, MAX_BATCH_FACET};
use super::nonevasive::{Nonevasive, Trace};
use crate::complex::{Complex, FaceIndex, VertexSet};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use rayon::prelude::*;
use rustc_hash::FxHashSet;
use serde::Serialize;

/// Universes up to this size track coverage with a bitmap over all subsets.
const BITMAP_MAX_M: usize = 28;

#[derive(Clone, Debug, Serialize)]
pub struct CertificateEntry {
    pub rho: VertexSet,
    pub sigma: VertexSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Trace>,
}

/// One entry per orbit of simplices `ρ` with `dim ρ < d`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Certificate {
    pub m: usize,
    pub entries: Vec<CertificateEntry>,
}

impl Certificate {
    /// Lines `rho-bits sigma-bits OK`.
    pub fn to_lines(&self) -> String {
        let mut out = String::with_capacity(self.entries.len() * (2 * self.m + 5));
        for e in &self.entries {
            out.push_str(&e.rho.to_row(self.m));
            out.push(' ');
            out.push_str(&e.sigma.to_row(self.m));
            out.push_str(" OK\n");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Outcome {
    /// Every simplex orbit has a nonevasive witness.
    Certified,
    /// No witness found for these orbit representatives. This is not a
    /// proof that the complex is not a manifold.
    Inconclusive { uncovered: Vec<VertexSet> },
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CertifyStats {
    pub facets_used: usize,
    pub l_checked: u64,
    pub l_evasive: u64,
    pub memo_hits: u64,
    pub memo_misses: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertifyReport {
    pub outcome: Outcome,
    pub certificate: Certificate,
    pub stats: CertifyStats,
}

impl CertifyReport {
    pub fn is_certified(&self) -> bool {
        self.outcome == Outcome::Certified
    }
}

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub traces: bool,
    pub memo_capacity: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { traces: false, memo_capacity: 1 << 20 }
    }
}

enum Coverage {
    Bits(Vec<u64>),
    Reps(FxHashSet<u32>),
}

impl Coverage {
    fn new(m: usize) -> Self {
        if m <= BITMAP_MAX_M {
            Coverage::Bits(vec![0; (1usize << m).div_ceil(64)])
        } else {
            Coverage::Reps(FxHashSet::default())
        }
    }

    fn contains(&self, g: &PermGroup, s: VertexSet) -> bool {
        match self {
            Coverage::Bits(b) => b[(s.0 >> 6) as usize] & (1 << (s.0 & 63)) != 0,
            Coverage::Reps(h) => h.contains(&g.canonical_rep(s).0),
        }
    }

    fn mark_orbit(&mut self, g: &PermGroup, s: VertexSet) {
        match self {
            Coverage::Bits(b) => {
                for i in 0..g.order() {
                    let t = g.apply_idx(i, s).0;
                    b[(t >> 6) as usize] |= 1 << (t & 63);
                }
            }
            Coverage::Reps(h) => {
                h.insert(g.canonical_rep(s).0);
            }
        }
    }
}

/// Source of `L_{ρ,σ}` complexes for one facet.
enum Source<'a> {
    Batch(LBatch),
    Direct { k: &'a Complex, idx: &'a FaceIndex, sigma: VertexSet, inside: Vec<usize> },
}

impl Source<'_> {
    fn expand(&self, r: u32) -> VertexSet {
        match self {
            Source::Batch(b) => b.expand(r),
            Source::Direct { inside, .. } => {
                VertexSet::from_vertices((0..inside.len()).filter(|j| r >> j & 1 == 1).map(|j| inside[j]))
            }
        }
    }

    fn words(&self, r: u32) -> Vec<u32> {
        match self {
            Source::Batch(b) => b.maximal_words(r),
            Source::Direct { k, idx, sigma, .. } => {
                l_complex(k, idx, self.expand(r), *sigma).maximal.iter().map(|s| s.0).collect()
            }
        }
    }
}

/// Check the sufficient condition for `K = G · reps` to be a combinatorial
/// manifold: every simplex `ρ` with `dim ρ < d` lies in a facet `σ` whose
/// `L_{ρ,σ}` is nonevasive.
///
/// Facets are taken in the order of `reps`; once an `L_{ρ,σ}` is found
/// nonevasive the whole orbit of `ρ` is marked. The result does not depend
/// on the size of the thread pool.
pub fn certify_manifold(reps: &Complex, g: &PermGroup, opts: &CertifyOptions) -> Result<CertifyReport> {
    let k = g.expand_orbits(reps)?;
    if !k.is_weak_pseudomanifold() {
        return Err(Error::domain("not a weak pseudomanifold"));
    }
    certify_expanded(&k, reps, g, opts)
}

/// As [`certify_manifold`] with the expanded complex already at hand.
pub fn certify_expanded(k: &Complex, reps: &Complex, g: &PermGroup, opts: &CertifyOptions) -> Result<CertifyReport> {
    let m = k.m();
    let mut cov = Coverage::new(m);
    let mut cert = Certificate { m, entries: Vec::new() };
    let mut stats = CertifyStats::default();
    let mut memo = Nonevasive::with_capacity(opts.memo_capacity);
    let idx = (m > BITMAP_MAX_M || reps.facets().iter().any(|s| s.len() > MAX_BATCH_FACET)).then(|| FaceIndex::new(k));
    let serial = rayon::current_num_threads() == 1;

    for &sigma in reps.facets() {
        if !k.contains_facet(sigma) {
            return Err(Error::domain(format!("{sigma:?} is not a facet")));
        }
        let n = sigma.len();
        let full = ((1u64 << n) - 1) as u32;
        let src = match &idx {
            Some(idx) if n > MAX_BATCH_FACET || m > BITMAP_MAX_M => {
                Source::Direct { k, idx, sigma, inside: sigma.iter().collect() }
            }
            _ => Source::Batch(LBatch::new(k, sigma)?),
        };
        let open: Vec<u32> = (1..full).filter(|&r| !cov.contains(g, src.expand(r))).collect();
        if open.is_empty() {
            continue;
        }
        stats.facets_used += 1;
        let verdicts: Vec<bool> = if serial {
            open.iter().map(|&r| memo.check_sets(&src.words(r))).collect()
        } else {
            open.par_iter()
                .map_init(|| Nonevasive::with_capacity(opts.memo_capacity / 4 + 1), |ne, &r| ne.check_sets(&src.words(r)))
                .collect()
        };
        stats.l_checked += open.len() as u64;
        for (&r, ok) in open.iter().zip(verdicts) {
            if !ok {
                stats.l_evasive += 1;
                continue;
            }
            let rho = src.expand(r);
            if cov.contains(g, rho) {
                continue;
            }
            cov.mark_orbit(g, rho);
            let trace = if opts.traces { memo.trace_sets(&src.words(r)) } else { None };
            cert.entries.push(CertificateEntry { rho, sigma, trace });
        }
    }
    stats.memo_hits = memo.hits;
    stats.memo_misses = memo.misses;

    let mut uncovered = Vec::new();
    for &sigma in reps.facets() {
        for rho in sigma.subsets() {
            if rho.is_empty() || rho == sigma || cov.contains(g, rho) {
                continue;
            }
            cov.mark_orbit(g, rho);
            uncovered.push(g.canonical_rep(rho));
        }
    }
    uncovered.sort_unstable();
    let outcome = if uncovered.is_empty() { Outcome::Certified } else { Outcome::Inconclusive { uncovered } };
    Ok(CertifyReport { outcome, certificate: cert, stats })
}
