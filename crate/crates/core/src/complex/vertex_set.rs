use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest supported vertex universe.
pub const MAX_VERTICES: usize = 32;

/// A set of vertices from `1..=m`, vertex `i` stored in bit `i - 1`.
///
/// The derived ordering is the numeric order of the word, which is the order
/// used for orbit representatives.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u32) -> Self {
        VertexSet(bits)
    }

    /// The set `{1, ..., m}`.
    pub fn full(m: usize) -> Self {
        if m >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << m) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1 << (v - 1))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(Self::EMPTY, |s, v| s.with(v))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << (v - 1))
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << (v - 1)))
    }

    pub fn union(self, o: Self) -> Self {
        VertexSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        VertexSet(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        VertexSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn complement(self, m: usize) -> Self {
        VertexSet(!self.0 & Self::full(m).0)
    }

    /// Largest vertex, or 0 for the empty set.
    pub fn max_vertex(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    pub fn min_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    /// Row of '0'/'1' characters, vertex 1 first.
    pub fn to_row(self, m: usize) -> String {
        (1..=m).map(|v| if self.contains(v) { '1' } else { '0' }).collect()
    }

    /// Iterate over all subsets of `self` (including empty and `self`).
    pub fn subsets(self) -> Subsets {
        Subsets { mask: self.0, cur: 0, done: false }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        Self::from_vertices(it)
    }
}

pub struct Vertices(u32);

impl Iterator for Vertices {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }
    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

/// Submask enumeration in increasing numeric order.
pub struct Subsets {
    mask: u32,
    cur: u32,
    done: bool,
}

impl Iterator for Subsets {
    type Item = VertexSet;
    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out = self.cur;
        if self.cur == self.mask {
            self.done = true;
        } else {
            self.cur = (self.cur.wrapping_sub(self.mask)) & self.mask;
        }
        Some(VertexSet(out))
    }
}

/// All `k`-subsets of `{1..m}` in increasing word order (Gosper's hack).
pub fn k_subsets(m: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let limit: u64 = 1u64 << m;
    let start: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut cur = if k > m { limit } else { start };
    let mut first = true;
    std::iter::from_fn(move || {
        if cur >= limit {
            return None;
        }
        if k == 0 {
            if first {
                first = false;
                return Some(VertexSet(0));
            }
            return None;
        }
        let out = cur;
        let c = cur & cur.wrapping_neg();
        let r = cur + c;
        cur = (((r ^ cur) >> 2) / c) | r;
        Some(VertexSet(out as u32))
    })
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_encoding() {
        let s = VertexSet::from_vertices([1, 3]);
        assert_eq!(s.bits(), 0b101);
        assert_eq!(s.to_row(4), "1010");
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(s.max_vertex(), 3);
        assert_eq!(VertexSet::EMPTY.max_vertex(), 0);
    }

    #[test]
    fn gosper_counts_and_order() {
        let v: Vec<_> = k_subsets(6, 3).collect();
        assert_eq!(v.len(), 20);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert!(v.iter().all(|s| s.len() == 3));
        assert_eq!(k_subsets(4, 0).count(), 1);
        assert_eq!(k_subsets(3, 4).count(), 0);
        assert_eq!(k_subsets(27, 17).count() as u64, binomial(27, 17));
    }

    #[test]
    fn submasks() {
        let s = VertexSet::from_vertices([2, 5, 7]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }
}
