use crate::complex::{maximal_sets, Complex, VertexSet};
use rustc_hash::FxHashMap;
use serde::Serialize;

/// How a complex was shown nonevasive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Trace {
    /// A single vertex.
    Point(usize),
    /// Every maximal simplex contains this vertex.
    Cone(usize),
    /// Link and contrastar of `v` are both nonevasive.
    Split { v: usize, link: Box<Trace>, cost: Box<Trace> },
}

/// Recursive nonevasiveness test on complexes given by maximal simplices,
/// with a bounded memo keyed on the relabelled maximal-simplex list.
pub struct Nonevasive {
    memo: FxHashMap<Vec<u32>, bool>,
    capacity: usize,
    pub hits: u64,
    pub misses: u64,
}

impl Default for Nonevasive {
    fn default() -> Self {
        Self::with_capacity(1 << 20)
    }
}

fn union(sets: &[u32]) -> u32 {
    sets.iter().fold(0, |a, &s| a | s)
}

fn apex(sets: &[u32]) -> u32 {
    sets.iter().fold(u32::MAX, |a, &s| a & s)
}

/// Maximal simplices of `link(v)` for an antichain `sets`.
pub(crate) fn link_sets(sets: &[u32], v: u32) -> Vec<u32> {
    sets.iter().filter(|&&s| s & v != 0).map(|&s| s & !v).collect()
}

/// Maximal simplices of `cost(v)` for an antichain `sets`.
pub(crate) fn cost_sets(sets: &[u32], v: u32) -> Vec<u32> {
    let keep: Vec<u32> = sets.iter().copied().filter(|&s| s & v == 0).collect();
    let mut out = keep.clone();
    for &s in sets {
        if s & v != 0 {
            let t = s & !v;
            if !keep.iter().any(|&k| t & !k == 0) {
                out.push(t);
            }
        }
    }
    out
}

/// Relabel the vertices in use as `0..n` (order preserving) and sort.
fn compact(sets: &[u32], verts: u32) -> Vec<u32> {
    let mut key: Vec<u32> = sets
        .iter()
        .map(|&s| {
            let mut out = 0u32;
            let mut rest = verts;
            let mut j = 0;
            while rest != 0 {
                let b = rest & rest.wrapping_neg();
                if s & b != 0 {
                    out |= 1 << j;
                }
                rest ^= b;
                j += 1;
            }
            out
        })
        .collect();
    key.sort_unstable();
    key
}

fn bits(mut x: u32) -> impl Iterator<Item = u32> {
    std::iter::from_fn(move || {
        if x == 0 {
            return None;
        }
        let b = x & x.wrapping_neg();
        x ^= b;
        Some(b)
    })
}

fn label(b: u32) -> usize {
    b.trailing_zeros() as usize + 1
}

impl Nonevasive {
    pub fn with_capacity(capacity: usize) -> Self {
        Nonevasive { memo: FxHashMap::default(), capacity, hits: 0, misses: 0 }
    }

    /// Test on an antichain of vertex words.
    pub fn check_sets(&mut self, sets: &[u32]) -> bool {
        if sets.is_empty() || sets == [0] {
            return false;
        }
        let verts = union(sets);
        if verts.count_ones() == 1 || apex(sets) != 0 {
            return true;
        }
        let key = compact(sets, verts);
        if let Some(&r) = self.memo.get(&key) {
            self.hits += 1;
            return r;
        }
        self.misses += 1;
        let mut res = false;
        for v in bits(verts) {
            if self.check_sets(&link_sets(sets, v)) && self.check_sets(&cost_sets(sets, v)) {
                res = true;
                break;
            }
        }
        if self.memo.len() >= self.capacity {
            self.memo.clear();
        }
        self.memo.insert(key, res);
        res
    }

    pub fn check(&mut self, k: &Complex) -> bool {
        let sets: Vec<u32> = k.facets().iter().map(|f| f.0).collect();
        self.check_sets(&sets)
    }

    /// A trace for a nonevasive complex; `None` if evasive.
    pub fn trace_sets(&mut self, sets: &[u32]) -> Option<Trace> {
        if sets.is_empty() || sets == [0] {
            return None;
        }
        let verts = union(sets);
        if verts.count_ones() == 1 {
            return Some(Trace::Point(label(verts)));
        }
        let a = apex(sets);
        if a != 0 {
            return Some(Trace::Cone(label(a & a.wrapping_neg())));
        }
        if !self.check_sets(sets) {
            return None;
        }
        for v in bits(verts) {
            let l = link_sets(sets, v);
            let c = cost_sets(sets, v);
            if self.check_sets(&l) && self.check_sets(&c) {
                let link = self.trace_sets(&l)?;
                let cost = self.trace_sets(&c)?;
                return Some(Trace::Split { v: label(v), link: Box::new(link), cost: Box::new(cost) });
            }
        }
        None
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }
}

/// Nonevasiveness of a complex given by its maximal simplices.
pub fn is_nonevasive(k: &Complex) -> bool {
    Nonevasive::with_capacity(1 << 16).check(k)
}

/// Nonevasiveness with a witness trace.
pub fn nonevasive_trace(k: &Complex) -> Option<Trace> {
    let sets: Vec<u32> = k.facets().iter().map(|f| f.0).collect();
    Nonevasive::with_capacity(1 << 16).trace_sets(&sets)
}

/// Re-derive the verdict along a trace, recomputing links and contrastars.
pub fn replay_trace(sets: &[VertexSet], t: &Trace) -> bool {
    let words: Vec<u32> = maximal_sets(sets.to_vec()).iter().map(|s| s.0).collect();
    replay(&words, t)
}

fn replay(sets: &[u32], t: &Trace) -> bool {
    if sets.is_empty() || sets == [0] {
        return false;
    }
    let verts = union(sets);
    match *t {
        Trace::Point(v) => verts == 1 << (v - 1),
        Trace::Cone(v) => apex(sets) & (1 << (v - 1)) != 0,
        Trace::Split { v, ref link, ref cost } => {
            let b = 1u32 << (v - 1);
            verts & b != 0 && replay(&link_sets(sets, b), link) && replay(&cost_sets(sets, b), cost)
        }
    }
}

/// Literal recursion on the definition, without shortcuts or memo.
pub fn nonevasive_by_definition(sets: &[VertexSet]) -> bool {
    let words: Vec<u32> = maximal_sets(sets.to_vec()).iter().map(|s| s.0).collect();
    fn go(sets: &[u32]) -> bool {
        if sets.is_empty() || sets == [0] {
            return false;
        }
        let verts = union(sets);
        if verts.count_ones() == 1 {
            return true;
        }
        bits(verts).any(|v| go(&link_sets(sets, v)) && go(&cost_sets(sets, v)))
    }
    go(&words)
}
