use super::{binomial, Complex};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceVector {
    /// `f[k]` is the number of `k`-dimensional faces.
    pub f: Vec<u64>,
    pub chi: i64,
}

impl FaceVector {
    /// From counts indexed by cardinality (`counts[0]` is the empty face).
    pub fn from_counts(counts: &[u64]) -> Self {
        let f: Vec<u64> = counts.iter().skip(1).copied().collect();
        let f = match f.iter().rposition(|&x| x > 0) {
            Some(i) => f[..=i].to_vec(),
            None => Vec::new(),
        };
        let chi = f
            .iter()
            .enumerate()
            .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
            .sum();
        FaceVector { f, chi }
    }
}

/// Number of faces of each cardinality, `counts[0]` being the empty face.
///
/// Depth-first over faces in increasing-vertex order: a face `τ` with
/// largest vertex `v` carries the list of facets containing it, and its
/// children `τ ∪ {w}`, `w > v`, are found by bucketing that list. Every face
/// is visited exactly once. The top level is sharded by smallest vertex.
pub fn face_counts(k: &Complex) -> Vec<u64> {
    let facets: Vec<u32> = k.facets().iter().map(|f| f.0).collect();
    let width = k.facets().iter().map(|f| f.len()).max().unwrap_or(0);
    let mut counts = vec![0u64; width + 1];
    if facets.is_empty() {
        return counts;
    }
    counts[0] = 1;
    let m = k.m();
    let shards: Vec<Vec<u64>> = (0..m)
        .into_par_iter()
        .map(|v| {
            let star: Vec<u32> = facets.iter().copied().filter(|f| f >> v & 1 == 1).collect();
            let mut c = vec![0u64; width + 1];
            if !star.is_empty() {
                let mut w = Walker { counts: &mut c, bufs: Vec::new() };
                w.visit(&star, 1, v as u32);
            }
            c
        })
        .collect();
    for s in shards {
        for (a, b) in counts.iter_mut().zip(s) {
            *a += b;
        }
    }
    counts
}

struct Walker<'a> {
    counts: &'a mut Vec<u64>,
    bufs: Vec<Vec<u32>>,
}

impl Walker<'_> {
    fn visit(&mut self, star: &[u32], card: usize, last: u32) {
        self.counts[card] += 1;
        let hi = if last >= 31 { 0 } else { !((2u32 << last) - 1) };
        if star.len() == 1 {
            let r = (star[0] & hi).count_ones() as usize;
            for j in 1..=r {
                self.counts[card + j] += binomial(r, j);
            }
            return;
        }
        let mut cnt = [0u32; 33];
        let mut any = 0u32;
        for &f in star {
            let mut b = f & hi;
            any |= b;
            while b != 0 {
                cnt[b.trailing_zeros() as usize + 1] += 1;
                b &= b - 1;
            }
        }
        if any == 0 {
            return;
        }
        let mut off = [0u32; 33];
        let mut acc = 0;
        for i in 0..33 {
            off[i] = acc;
            acc += cnt[i];
        }
        let mut buf = if self.bufs.len() > card { std::mem::take(&mut self.bufs[card]) } else { Vec::new() };
        buf.clear();
        buf.resize(acc as usize, 0);
        let mut pos = off;
        for &f in star {
            let mut b = f & hi;
            while b != 0 {
                let i = b.trailing_zeros() as usize + 1;
                buf[pos[i] as usize] = f;
                pos[i] += 1;
                b &= b - 1;
            }
        }
        let mut b = any;
        while b != 0 {
            let i = b.trailing_zeros() as usize + 1;
            let s = &buf[off[i] as usize..(off[i] + cnt[i]) as usize];
            self.visit(s, card + 1, (i - 1) as u32);
            b &= b - 1;
        }
        if self.bufs.len() <= card {
            self.bufs.resize_with(card + 1, Vec::new);
        }
        self.bufs[card] = buf;
    }
}
