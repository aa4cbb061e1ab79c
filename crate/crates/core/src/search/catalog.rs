use crate::complex::{k_subsets, VertexSet};
use crate::group::PermGroup;
use rayon::prelude::*;
use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

/// Parameters of an orbit search.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub m: usize,
    pub d: usize,
    pub group: PermGroup,
    /// Lower bound on the number of facets.
    pub min_facets: u64,
    /// Weight of requirements in the branching score `p + w r`.
    pub branch_weight: u64,
    /// Budget pruning runs once `M |G| ≤ c N`.
    pub budget_factor: u64,
}

impl SearchConfig {
    pub fn new(m: usize, d: usize, group: PermGroup, min_facets: u64) -> Self {
        SearchConfig { m, d, group, min_facets, branch_weight: 10, budget_factor: 5 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Orbit {
    pub rep: VertexSet,
    pub size: usize,
    pub members: Vec<VertexSet>,
}

/// The admissible orbits of `(d+1)`-subsets, in order of representative.
#[derive(Debug)]
pub struct OrbitCatalog {
    pub m: usize,
    pub d: usize,
    /// Number of orbits before the admissibility filter.
    pub total_orbits: usize,
    pub orbits: Vec<Orbit>,
    member_index: FxHashMap<u32, u32>,
}

impl OrbitCatalog {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// Catalog from explicit orbits (already filtered).
    pub fn from_parts(m: usize, d: usize, total_orbits: usize, orbits: Vec<Orbit>) -> Self {
        let mut member_index = FxHashMap::default();
        member_index.reserve(orbits.iter().map(|o| o.size).sum());
        for (i, o) in orbits.iter().enumerate() {
            for s in &o.members {
                member_index.insert(s.0, i as u32);
            }
        }
        OrbitCatalog { m, d, total_orbits, orbits, member_index }
    }

    /// Admissible orbit containing the `(d+1)`-set `s`, if any.
    pub fn orbit_of(&self, s: VertexSet) -> Option<usize> {
        self.member_index.get(&s.0).map(|&i| i as usize)
    }
}

fn is_admissible(m: usize, rep: VertexSet, members: &[VertexSet]) -> bool {
    let full = VertexSet::full(m);
    // by invariance it suffices to pair the representative with each member
    if members.iter().any(|&t| rep.union(t) == full) {
        return false;
    }
    for v in rep.iter() {
        let rho = rep.without(v);
        let mut deg = 0;
        for x in full.difference(rho).iter() {
            if members.binary_search(&rho.with(x)).is_ok() {
                deg += 1;
            }
        }
        if deg >= 3 {
            return false;
        }
    }
    true
}

/// All orbits of `(d+1)`-subsets that could be part of a solution.
pub fn enumerate_admissible(cfg: &SearchConfig) -> OrbitCatalog {
    let g = &cfg.group;
    let reps = g.orbit_reps_k_subsets(cfg.d + 1);
    let total = reps.len();
    let orbits: Vec<Orbit> = reps
        .par_iter()
        .filter_map(|&(rep, size)| {
            let members = g.orbit(rep);
            debug_assert_eq!(members.len(), size);
            is_admissible(cfg.m, rep, &members).then_some(Orbit { rep, size, members })
        })
        .collect();
    OrbitCatalog::from_parts(cfg.m, cfg.d, total, orbits)
}

/// Initial prohibitions and adjacency groups.
#[derive(Clone, Debug, Default)]
pub struct Constraints {
    /// Unordered pairs `(a, b)` with `a < b`, sorted.
    pub prohibited: Vec<(u32, u32)>,
    /// Orbits once adjacent to a common `d`-subset; one group per orbit of
    /// `d`-subsets having at least one such orbit.
    pub groups: Vec<Vec<u32>>,
    /// Orbits of `d`-subsets examined.
    pub rho_orbits: usize,
}

/// Adjacency data of one `d`-subset: orbits containing it once and twice.
pub fn adjacency_of(cat: &OrbitCatalog, rho: VertexSet) -> (Vec<u32>, Vec<u32>) {
    let mut hits: Vec<u32> = VertexSet::full(cat.m)
        .difference(rho)
        .iter()
        .filter_map(|x| cat.orbit_of(rho.with(x)).map(|o| o as u32))
        .collect();
    hits.sort_unstable();
    let mut once = Vec::new();
    let mut twice = Vec::new();
    let mut i = 0;
    while i < hits.len() {
        let mut j = i;
        while j < hits.len() && hits[j] == hits[i] {
            j += 1;
        }
        if j - i == 1 {
            once.push(hits[i]);
        } else {
            twice.push(hits[i]);
        }
        i = j;
    }
    (once, twice)
}

/// Complementary-union prohibitions, twice-adjacency prohibitions and the
/// adjacency groups. Only `d`-subsets of representatives are scanned: any
/// `d`-subset of a member of an orbit is carried into the representative by
/// a group element, so every relevant `d`-subset orbit is reached.
pub fn build_constraints(cat: &OrbitCatalog, g: &PermGroup) -> Constraints {
    let m = cat.m;
    let k = cat.d + 1;
    let extra = (2 * k).checked_sub(m);
    let comp: Vec<Vec<(u32, u32)>> = (0..cat.len())
        .into_par_iter()
        .map(|a| {
            let Some(extra) = extra else { return Vec::new() };
            let rep = cat.orbits[a].rep;
            let c = rep.complement(m);
            let verts: Vec<usize> = rep.iter().collect();
            let mut out = Vec::new();
            for idx in k_subsets(verts.len(), extra) {
                let x: VertexSet = idx.iter().map(|i| verts[i - 1]).collect();
                if let Some(b) = cat.orbit_of(c.union(x)) {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    out.push((lo as u32, hi as u32));
                }
            }
            out
        })
        .collect();
    let mut prohibited: Vec<(u32, u32)> = comp.into_iter().flatten().collect();

    let mut seen: FxHashSet<u32> = FxHashSet::default();
    let mut rhos: Vec<VertexSet> = Vec::new();
    for o in &cat.orbits {
        for v in o.rep.iter() {
            let key = g.canonical_rep(o.rep.without(v));
            if seen.insert(key.0) {
                rhos.push(key);
            }
        }
    }
    let adj: Vec<(Vec<u32>, Vec<u32>)> = rhos.par_iter().map(|&r| adjacency_of(cat, r)).collect();
    let mut groups = Vec::new();
    for (once, twice) in adj {
        for &t in &twice {
            for &o in once.iter().chain(twice.iter()) {
                if o != t {
                    prohibited.push((t.min(o), t.max(o)));
                }
            }
        }
        if !once.is_empty() {
            groups.push(once);
        }
    }
    prohibited.sort_unstable();
    prohibited.dedup();
    Constraints { prohibited, groups, rho_orbits: rhos.len() }
}
