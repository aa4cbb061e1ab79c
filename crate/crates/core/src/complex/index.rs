use super::{Complex, VertexSet};

/// Column bitsets over facets, one per vertex, for fast face queries.
pub struct FaceIndex {
    words: usize,
    nfacets: usize,
    cols: Vec<Vec<u64>>,
}

impl FaceIndex {
    pub fn new(k: &Complex) -> Self {
        let n = k.len();
        let words = n.div_ceil(64);
        let mut cols = vec![vec![0u64; words]; k.m() + 1];
        for (i, f) in k.facets().iter().enumerate() {
            for v in f.iter() {
                cols[v][i / 64] |= 1 << (i % 64);
            }
        }
        FaceIndex { words, nfacets: n, cols }
    }

    fn word(&self, s: VertexSet, w: usize) -> u64 {
        let mut acc = if w + 1 == self.words && !self.nfacets.is_multiple_of(64) {
            (1u64 << (self.nfacets % 64)) - 1
        } else {
            u64::MAX
        };
        for v in s.iter() {
            if v >= self.cols.len() {
                return 0;
            }
            acc &= self.cols[v][w];
            if acc == 0 {
                break;
            }
        }
        acc
    }

    /// Whether `s` lies in some facet.
    pub fn contains(&self, s: VertexSet) -> bool {
        (0..self.words).any(|w| self.word(s, w) != 0)
    }

    /// Number of facets containing `s`.
    pub fn star_count(&self, s: VertexSet) -> usize {
        (0..self.words).map(|w| self.word(s, w).count_ones() as usize).sum()
    }

    /// Indices of the facets containing `s`.
    pub fn star(&self, s: VertexSet) -> Vec<usize> {
        let mut out = Vec::new();
        for w in 0..self.words {
            let mut b = self.word(s, w);
            while b != 0 {
                out.push(w * 64 + b.trailing_zeros() as usize);
                b &= b - 1;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn queries() {
        let k = Complex::simplex_boundary(4, VertexSet::full(4)).unwrap();
        let idx = FaceIndex::new(&k);
        assert!(idx.contains(VertexSet::from_vertices([1, 2, 3])));
        assert!(!idx.contains(VertexSet::full(4)));
        assert!(idx.contains(VertexSet::EMPTY));
        assert_eq!(idx.star_count(VertexSet::from_vertices([1])), 3);
        assert_eq!(idx.star(VertexSet::from_vertices([1, 2])).len(), 2);
    }
}
