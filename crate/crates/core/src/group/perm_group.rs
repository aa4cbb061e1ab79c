use super::Permutation;
use crate::complex::{k_subsets, Complex, VertexSet};
use crate::error::{Error, Result};
use rayon::prelude::*;
use rustc_hash::FxHashSet;
use std::collections::VecDeque;
use std::sync::Arc;

/// Largest group order accepted by [`PermGroup::generate`].
pub const MAX_ORDER: usize = 200_000;

type ByteTable = [[u32; 256]; 4];

/// A permutation group given by generators, with all elements enumerated
/// and sorted lexicographically by image array (identity first).
#[derive(Clone)]
pub struct PermGroup {
    m: usize,
    generators: Vec<Permutation>,
    elements: Arc<Vec<Permutation>>,
    tables: Arc<Vec<ByteTable>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("m", &self.m)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, o: &Self) -> bool {
        self.m == o.m && self.elements == o.elements
    }
}

fn table(p: &Permutation) -> ByteTable {
    let mut t = [[0u32; 256]; 4];
    for (b, tb) in t.iter_mut().enumerate() {
        for (x, slot) in tb.iter_mut().enumerate() {
            let mut img = 0u32;
            for bit in 0..8 {
                let v = b * 8 + bit + 1;
                if x >> bit & 1 == 1 && v <= p.m() {
                    img |= 1 << (p.image(v) - 1);
                }
            }
            *slot = img;
        }
    }
    t
}

impl PermGroup {
    pub fn trivial(m: usize) -> Self {
        Self::from_sorted(m, Vec::new(), vec![Permutation::identity(m)])
    }

    /// Closure of a generating set.
    pub fn generate(m: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.m() != m) {
            return Err(Error::Group(format!("generator {g} acts on {} points, expected {m}", g.m())));
        }
        let id = Permutation::identity(m);
        let mut seen: FxHashSet<Permutation> = FxHashSet::default();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    if seen.len() > MAX_ORDER {
                        return Err(Error::Group(format!("group order exceeds {MAX_ORDER}")));
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort_unstable();
        Ok(Self::from_sorted(m, generators, elements))
    }

    fn from_sorted(m: usize, generators: Vec<Permutation>, elements: Vec<Permutation>) -> Self {
        let tables = if m <= 32 { elements.iter().map(table).collect() } else { Vec::new() };
        PermGroup { m, generators, elements: Arc::new(elements), tables: Arc::new(tables) }
    }

    /// Subgroup from a subset of elements known to be closed; a small
    /// generating set is extracted and the closure re-checked.
    pub fn from_closed_subset(m: usize, mut elements: Vec<Permutation>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let mut gens: Vec<Permutation> = Vec::new();
        let mut span: FxHashSet<Permutation> = FxHashSet::from_iter([Permutation::identity(m)]);
        for e in &elements {
            if span.contains(e) {
                continue;
            }
            gens.push(e.clone());
            span = Self::generate(m, gens.clone())?.elements.iter().cloned().collect();
        }
        if span.len() != elements.len() || !elements.iter().all(|e| span.contains(e)) {
            return Err(Error::Group("element subset is not a subgroup".into()));
        }
        Ok(Self::from_sorted(m, gens, elements))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn is_subgroup_of(&self, o: &PermGroup) -> bool {
        self.elements.iter().all(|e| o.contains(e))
    }

    /// Image of `s` under the `i`-th element.
    #[inline]
    pub fn apply_idx(&self, i: usize, s: VertexSet) -> VertexSet {
        let t = &self.tables[i];
        let b = s.0;
        VertexSet(
            t[0][(b & 255) as usize]
                | t[1][(b >> 8 & 255) as usize]
                | t[2][(b >> 16 & 255) as usize]
                | t[3][(b >> 24) as usize],
        )
    }

    /// Minimum of the orbit of `s` in word order.
    pub fn canonical_rep(&self, s: VertexSet) -> VertexSet {
        (0..self.order()).map(|i| self.apply_idx(i, s)).min().unwrap_or(s)
    }

    pub fn is_canonical(&self, s: VertexSet) -> bool {
        (0..self.order()).all(|i| self.apply_idx(i, s) >= s)
    }

    /// Sorted, deduplicated orbit of `s`.
    pub fn orbit(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut o: Vec<VertexSet> = (0..self.order()).map(|i| self.apply_idx(i, s)).collect();
        o.sort_unstable();
        o.dedup();
        o
    }

    pub fn stabilizer_size(&self, s: VertexSet) -> usize {
        (0..self.order()).filter(|&i| self.apply_idx(i, s) == s).count()
    }

    /// One minimal representative per orbit on `k`-subsets, with orbit
    /// sizes, in word order.
    pub fn orbit_reps_k_subsets(&self, k: usize) -> Vec<(VertexSet, usize)> {
        let m = self.m;
        if k == 0 {
            return vec![(VertexSet::EMPTY, 1)];
        }
        // subsets with largest vertex t precede those with largest vertex t+1
        let shards: Vec<Vec<(VertexSet, usize)>> = (k..=m)
            .into_par_iter()
            .map(|t| {
                let top = VertexSet::singleton(t);
                k_subsets(t - 1, k - 1)
                    .map(|s| s.union(top))
                    .filter(|&s| self.is_canonical(s))
                    .map(|s| (s, self.order() / self.stabilizer_size(s)))
                    .collect()
            })
            .collect();
        shards.into_iter().flatten().collect()
    }

    /// Union of the orbits of the facets of `reps`.
    pub fn expand_orbits(&self, reps: &Complex) -> Result<Complex> {
        let mut all: Vec<VertexSet> = Vec::with_capacity(reps.len() * self.order());
        for &r in reps.facets() {
            all.extend((0..self.order()).map(|i| self.apply_idx(i, r)));
        }
        Complex::from_facets_dedup(reps.m(), all)
    }

    /// Minimal representatives of the facet orbits of an invariant complex.
    pub fn orbit_representatives(&self, k: &Complex) -> Result<Complex> {
        let mut reps: Vec<VertexSet> = k.facets().iter().map(|&f| self.canonical_rep(f)).collect();
        reps.sort_unstable();
        reps.dedup();
        Complex::new(k.m(), reps)
    }

    pub fn preserves(&self, p_idx: usize, k: &Complex) -> bool {
        k.facets().iter().all(|&f| k.contains_facet(self.apply_idx(p_idx, f)))
    }

    /// Whether every element maps the facet set onto itself.
    pub fn is_invariant(&self, k: &Complex) -> bool {
        self.generators
            .iter()
            .all(|g| k.facets().iter().all(|&f| k.contains_facet(g.apply(f))))
    }

    /// All elements satisfying `pred`, which must describe a subgroup.
    pub fn stabilizer_subgroup<F>(&self, pred: F) -> Result<PermGroup>
    where
        F: Fn(usize, &Permutation) -> bool + Sync,
    {
        let keep: Vec<Permutation> = (0..self.order())
            .into_par_iter()
            .filter(|&i| pred(i, &self.elements[i]))
            .map(|i| self.elements[i].clone())
            .collect();
        PermGroup::from_closed_subset(self.m, keep)
    }

    /// Orbits of the group on single vertices, each as a set, ordered by
    /// smallest vertex.
    pub fn vertex_orbits(&self) -> Vec<VertexSet> {
        let mut done = VertexSet::EMPTY;
        let mut out = Vec::new();
        for v in 1..=self.m {
            if done.contains(v) {
                continue;
            }
            let o = self.elements.iter().map(|g| g.image(v)).collect::<VertexSet>();
            done = done.union(o);
            out.push(o);
        }
        out
    }
}
