use super::triples::FacetSet;
use crate::complex::{Complex, FaceIndex, VertexSet};
use serde::Serialize;
use std::collections::BTreeSet;

/// A bistellar move replacing `σ * ∂τ` by `∂σ * τ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BistellarMove {
    pub sigma: VertexSet,
    pub tau: VertexSet,
}

impl BistellarMove {
    /// `k` for a `k`-move: the codimension of `σ`, which equals `dim τ`.
    pub fn k(&self) -> usize {
        self.tau.len() - 1
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BistellarOptions {
    /// Known neighborliness `s` of the complex; candidates with `|τ| ≤ s`
    /// are skipped since such `τ` is always a face. `None` checks all.
    pub neighborly: Option<usize>,
}

/// All `k`-moves with `k > 0` of a weak pseudomanifold.
///
/// A move lives on the `(n+2)`-set `U = σ ∪ τ`, and every `U ∖ w` with
/// `w ∈ τ` is a facet; so candidates are `U = F ∪ {x}` for facets `F` and
/// vertices `x ∉ F`, with `τ = {w : U ∖ w ∈ L}` and `σ = U ∖ τ`.
pub fn bistellar_options(l: &Complex, opts: BistellarOptions) -> Vec<BistellarMove> {
    let set = FacetSet::new(l);
    let idx = FaceIndex::new(l);
    let verts = l.vertex_set();
    let mut out = BTreeSet::new();
    for &f in l.facets() {
        for x in verts.difference(f).iter() {
            let u = f.with(x);
            let tau: VertexSet = u.iter().filter(|&w| set.contains(u.without(w))).collect();
            let sigma = u.difference(tau);
            if sigma.is_empty() || tau.len() < 2 {
                continue;
            }
            if opts.neighborly.is_some_and(|s| tau.len() <= s) {
                continue;
            }
            if out.contains(&BistellarMove { sigma, tau }) {
                continue;
            }
            if idx.star_count(sigma) == tau.len() && !idx.contains(tau) {
                out.insert(BistellarMove { sigma, tau });
            }
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_boundary_has_no_moves() {
        let b = Complex::simplex_boundary(4, VertexSet::full(4)).unwrap();
        assert!(bistellar_options(&b, BistellarOptions::default()).is_empty());
    }

    #[test]
    fn octahedron_moves() {
        // boundary of the octahedron: each edge {a,b} with link ∂{c,d}
        // where {c,d} is an antipodal non-edge
        let pairs = [(1, 2), (3, 4), (5, 6)];
        let mut f = Vec::new();
        for &a in &[1, 2] {
            for &b in &[3, 4] {
                for &c in &[5, 6] {
                    f.push(VertexSet::from_vertices([a, b, c]));
                }
            }
        }
        let oct = Complex::new(6, f).unwrap();
        let moves = bistellar_options(&oct, BistellarOptions::default());
        assert_eq!(moves.len(), 12);
        assert!(moves.iter().all(|m| m.k() == 1 && pairs.iter().any(|&(a, b)| m.tau == VertexSet::from_vertices([a, b]))));
    }

    #[test]
    fn stellar_vertex_gives_a_move() {
        // subdivided triangle boundary: vertex 4 inside edge {1,2}
        let f = [[1, 4], [2, 4], [2, 3], [1, 3]].iter().map(|e| VertexSet::from_vertices(e.iter().copied())).collect();
        let k = Complex::new(4, f).unwrap();
        let moves = bistellar_options(&k, BistellarOptions::default());
        assert!(moves.contains(&BistellarMove { sigma: VertexSet::singleton(4), tau: VertexSet::from_vertices([1, 2]) }));
    }
}
