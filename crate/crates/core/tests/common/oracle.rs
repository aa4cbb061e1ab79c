//! Independent enumerations of the solutions of a search with the trivial
//! group, for checking the orbit search on tiny instances.

use octoplane::complex::k_subsets;
use octoplane::search::{run_search, SearchConfig};
use octoplane::{PermGroup, VertexSet};
use rustc_hash::FxHashMap;
use std::collections::BTreeSet;

pub type Solution = Vec<u32>;

pub fn admissible_singletons(m: usize, d: usize) -> Vec<VertexSet> {
    k_subsets(m, d + 1).filter(|&s| s != VertexSet::full(m)).collect()
}

pub fn satisfies(m: usize, d: usize, chosen: &[VertexSet], min: u64) -> bool {
    if (chosen.len() as u64) < min {
        return false;
    }
    let mut deg: FxHashMap<u32, u32> = FxHashMap::default();
    for &f in chosen {
        for v in f.iter() {
            *deg.entry(f.without(v).0).or_default() += 1;
        }
    }
    let full = VertexSet::full(m);
    d >= 1
        && deg.values().all(|&c| c == 2)
        && chosen.iter().all(|&a| chosen.iter().all(|&b| a.union(b) != full))
}

/// Every subset of the admissible orbits, checked against (i)–(iii).
pub fn brute_force(m: usize, d: usize, min: u64) -> BTreeSet<Solution> {
    let cands = admissible_singletons(m, d);
    assert!(cands.len() <= 22, "oracle too large");
    (1u64..1 << cands.len())
        .filter_map(|mask| {
            let chosen: Vec<VertexSet> =
                (0..cands.len()).filter(|i| mask >> i & 1 == 1).map(|i| cands[i]).collect();
            satisfies(m, d, &chosen, min).then(|| chosen.iter().map(|s| s.0).collect())
        })
        .collect()
}

pub fn searched(m: usize, d: usize, min: u64) -> BTreeSet<Solution> {
    let cfg = SearchConfig::new(m, d, PermGroup::trivial(m), min);
    let rep = run_search(&cfg, 1);
    let out: BTreeSet<Solution> =
        rep.results.iter().map(|r| r.complex.facets().iter().map(|s| s.0).collect()).collect();
    assert_eq!(out.len(), rep.results.len(), "duplicate solutions");
    out
}

/// Include/exclude recursion over candidates in word order. A `d`-subset
/// is closed once all candidates containing it are decided; it must then
/// have degree 0 or 2.
pub fn dfs_oracle(m: usize, d: usize, min: u64) -> BTreeSet<Solution> {
    let cands = admissible_singletons(m, d);
    let full = VertexSet::full(m);
    // last candidate index containing each d-subset
    let mut last: FxHashMap<u32, usize> = FxHashMap::default();
    for (i, f) in cands.iter().enumerate() {
        for v in f.iter() {
            last.insert(f.without(v).0, i);
        }
    }
    struct Ctx<'a> {
        cands: &'a [VertexSet],
        last: &'a FxHashMap<u32, usize>,
        full: VertexSet,
        min: u64,
        deg: FxHashMap<u32, u32>,
        chosen: Vec<VertexSet>,
        out: BTreeSet<Solution>,
    }
    fn closes_ok(c: &Ctx, i: usize) -> bool {
        let f = c.cands[i];
        f.iter().all(|v| {
            let r = f.without(v).0;
            c.last[&r] != i || matches!(c.deg.get(&r).copied().unwrap_or(0), 0 | 2)
        })
    }
    fn go(c: &mut Ctx, i: usize) {
        if (c.chosen.len() + c.cands.len() - i) < c.min as usize {
            return;
        }
        if i == c.cands.len() {
            c.out.insert(c.chosen.iter().map(|s| s.0).collect());
            return;
        }
        let f = c.cands[i];
        let fits = c.chosen.iter().all(|&a| a.union(f) != c.full)
            && f.iter().all(|v| c.deg.get(&f.without(v).0).copied().unwrap_or(0) < 2);
        if fits {
            for v in f.iter() {
                *c.deg.entry(f.without(v).0).or_default() += 1;
            }
            c.chosen.push(f);
            if closes_ok(c, i) {
                go(c, i + 1);
            }
            c.chosen.pop();
            for v in f.iter() {
                *c.deg.get_mut(&f.without(v).0).unwrap() -= 1;
            }
        }
        if closes_ok(c, i) {
            go(c, i + 1);
        }
    }
    let mut c = Ctx { cands: &cands, last: &last, full, min, deg: FxHashMap::default(), chosen: Vec::new(), out: BTreeSet::new() };
    go(&mut c, 0);
    c.out.remove(&Vec::new());
    c.out
}
