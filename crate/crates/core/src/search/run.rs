use super::catalog::{build_constraints, enumerate_admissible, Constraints, OrbitCatalog, SearchConfig};
use super::state::{Inconsistent, SearchState};
use crate::complex::{Complex, VertexSet};
use rayon::prelude::*;
use serde::Serialize;
use std::time::Instant;

/// Counters collected during a search.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct SearchStats {
    pub total_orbits: usize,
    pub admissible_orbits: usize,
    pub adjacency_groups: usize,
    pub initial_prohibited_pairs: usize,
    pub branches: u64,
    pub max_level: usize,
    /// Times the per-orbit budget check (`S - P_a < N`) ran.
    pub budget_checks: u64,
    pub budget_removals: u64,
    pub solutions: usize,
}

impl SearchStats {
    fn merge(&mut self, o: &SearchStats) {
        self.branches += o.branches;
        self.max_level = self.max_level.max(o.max_level);
        self.budget_checks += o.budget_checks;
        self.budget_removals += o.budget_removals;
    }
}

/// One solution: the chosen orbits and the complex they span.
#[derive(Clone, Debug)]
pub struct SearchResult {
    /// Indices into the catalog, increasing.
    pub orbits: Vec<usize>,
    /// Orbit representatives, as a complex.
    pub reps: Complex,
    pub complex: Complex,
}

#[derive(Debug)]
pub struct SearchReport {
    pub results: Vec<SearchResult>,
    pub stats: SearchStats,
    pub phase_seconds: Vec<(String, f64)>,
}

/// Apply the budget rules once the waiting list is empty: the running sum
/// must reach `N`, and when few orbits remain every orbit whose taking
/// would drop the sum below `N` is removed.
pub fn prune_by_budget(st: &mut SearchState, cfg: &SearchConfig, stats: &mut SearchStats) -> Result<(), Inconsistent> {
    loop {
        if st.budget() < cfg.min_facets {
            return Err(Inconsistent);
        }
        let m = st.indeterminate_count() as u64;
        if m * cfg.group.order() as u64 > cfg.budget_factor * cfg.min_facets {
            return Ok(());
        }
        stats.budget_checks += 1;
        let s = st.budget();
        let doomed: Vec<usize> = st
            .indeterminate()
            .into_iter()
            .filter(|&a| s - st.prohibited_weight(a) < cfg.min_facets)
            .collect();
        if doomed.is_empty() {
            return Ok(());
        }
        stats.budget_removals += doomed.len() as u64;
        for a in doomed {
            st.remove(a)?;
        }
    }
}

/// Indeterminate orbit maximizing `p + w r`; ties go to the smallest
/// representative, i.e. the smallest index.
pub fn choose_branch(st: &SearchState, w: u64) -> Option<usize> {
    let mut best: Option<(u64, usize)> = None;
    for a in st.indeterminate() {
        let (p, r) = st.scores(a);
        let score = p as u64 + w * r as u64;
        if best.is_none_or(|(b, _)| score > b) {
            best = Some((score, a));
        }
    }
    best.map(|(_, a)| a)
}

struct Dfs<'a> {
    cfg: &'a SearchConfig,
    stats: SearchStats,
    found: Vec<Vec<usize>>,
    /// Stop branching at this depth and record the decision path instead.
    split_depth: Option<usize>,
    frontier: Vec<Vec<(usize, bool)>>,
}

impl Dfs<'_> {
    /// Explore below a consistent, fully propagated state.
    fn explore(&mut self, st: &mut SearchState, level: usize, path: &mut Vec<(usize, bool)>) {
        let base = st.trail_len();
        let base_path = path.len();
        loop {
            if prune_by_budget(st, self.cfg, &mut self.stats).is_err() {
                break;
            }
            let Some(o) = choose_branch(st, self.cfg.branch_weight) else {
                self.found.push(st.taken());
                break;
            };
            if self.split_depth.is_some_and(|d| path.len() >= d) {
                self.frontier.push(path.clone());
                break;
            }
            self.stats.branches += 1;
            let mark = st.trail_len();
            path.push((o, true));
            if st.take(o).is_ok() {
                self.stats.max_level = self.stats.max_level.max(level + 1);
                self.explore(st, level + 1, path);
            }
            st.undo_to(mark);
            path.pop();
            path.push((o, false));
            if st.remove(o).is_err() {
                break;
            }
        }
        st.undo_to(base);
        path.truncate(base_path);
    }
}

fn replay(st: &mut SearchState, path: &[(usize, bool)]) -> Result<usize, Inconsistent> {
    let mut level = 0;
    for &(o, take) in path {
        if take {
            st.take(o)?;
            level += 1;
        } else {
            st.remove(o)?;
        }
    }
    Ok(level)
}

/// Find every invariant weak pseudomanifold with at least `N` facets and
/// no two facets covering all vertices.
///
/// With `jobs > 1` the top of the tree is split into subtrees that are
/// solved in parallel; results are identical to the sequential run.
pub fn run_search(cfg: &SearchConfig, jobs: usize) -> SearchReport {
    let mut phases = Vec::new();
    let t = Instant::now();
    let cat = enumerate_admissible(cfg);
    phases.push(("catalog".to_string(), t.elapsed().as_secs_f64()));
    let t = Instant::now();
    let cons = build_constraints(&cat, &cfg.group);
    phases.push(("constraints".to_string(), t.elapsed().as_secs_f64()));
    let t = Instant::now();
    let mut report = search_with(cfg, &cat, &cons, jobs);
    phases.push(("search".to_string(), t.elapsed().as_secs_f64()));
    report.phase_seconds = phases;
    report
}

/// Search over a prepared catalog and constraints.
pub fn search_with(cfg: &SearchConfig, cat: &OrbitCatalog, cons: &Constraints, jobs: usize) -> SearchReport {
    let mut stats = SearchStats {
        total_orbits: cat.total_orbits,
        admissible_orbits: cat.len(),
        adjacency_groups: cons.groups.len(),
        initial_prohibited_pairs: cons.prohibited.len(),
        ..Default::default()
    };
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut root = SearchState::new(cat, cons, cfg.min_facets);
    if root.budget() >= cfg.min_facets && root.propagate().is_ok() {
        let split = (jobs > 1).then(|| (usize::BITS - (4 * jobs).leading_zeros()) as usize);
        let mut dfs = Dfs { cfg, stats: SearchStats::default(), found: Vec::new(), split_depth: split, frontier: Vec::new() };
        dfs.explore(&mut root, 0, &mut Vec::new());
        stats.merge(&dfs.stats);
        found.append(&mut dfs.found);
        let frontier = std::mem::take(&mut dfs.frontier);
        let parts: Vec<(SearchStats, Vec<Vec<usize>>)> = frontier
            .par_iter()
            .map(|path| {
                let mut st = root.clone();
                let mut d = Dfs { cfg, stats: SearchStats::default(), found: Vec::new(), split_depth: None, frontier: Vec::new() };
                if let Ok(level) = replay(&mut st, path) {
                    d.stats.max_level = level;
                    d.explore(&mut st, level, &mut Vec::new());
                }
                (d.stats, d.found)
            })
            .collect();
        for (s, mut f) in parts {
            stats.merge(&s);
            found.append(&mut f);
        }
    }
    found.sort();
    found.dedup();
    stats.solutions = found.len();
    let results = found
        .into_iter()
        .map(|orbits| {
            let reps: Vec<VertexSet> = orbits.iter().map(|&i| cat.orbits[i].rep).collect();
            let all: Vec<VertexSet> = orbits.iter().flat_map(|&i| cat.orbits[i].members.iter().copied()).collect();
            SearchResult {
                reps: Complex::new(cat.m, reps).expect("distinct representatives"),
                complex: Complex::new(cat.m, all).expect("orbits are disjoint"),
                orbits,
            }
        })
        .collect();
    SearchReport { results, stats, phase_seconds: Vec::new() }
}

