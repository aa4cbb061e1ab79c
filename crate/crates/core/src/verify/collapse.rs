use crate::complex::{maximal_sets, VertexSet};
use rustc_hash::FxHashSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Collapse {
    Collapsible,
    NotCollapsible,
    /// The search budget ran out.
    Unknown,
}

/// Complexes with more vertices than this are refused.
pub const ORACLE_MAX_VERTICES: usize = 12;

/// Backtracking search for a sequence of elementary collapses down to a
/// point. `budget` bounds the number of distinct states visited.
pub fn collapse_oracle(maximal: &[VertexSet], budget: usize) -> Collapse {
    let maximal = maximal_sets(maximal.to_vec());
    let verts = maximal.iter().fold(VertexSet::EMPTY, |a, &s| a.union(s));
    if verts.is_empty() || verts.len() > ORACLE_MAX_VERTICES {
        return if verts.is_empty() { Collapse::NotCollapsible } else { Collapse::Unknown };
    }
    let mut faces: Vec<u32> = Vec::new();
    for s in &maximal {
        faces.extend(s.subsets().filter(|t| !t.is_empty()).map(|t| t.0));
    }
    faces.sort_unstable();
    faces.dedup();
    let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
    let mut exhausted = false;
    if dfs(faces, &mut seen, budget, &mut exhausted) {
        Collapse::Collapsible
    } else if exhausted {
        Collapse::Unknown
    } else {
        Collapse::NotCollapsible
    }
}

/// Free pairs `(sigma, tau)`: `tau` a codimension-one face of the maximal
/// face `sigma`, contained in no other face.
fn free_pairs(faces: &[u32]) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for &t in faces {
        let mut cofaces = faces.iter().filter(|&&s| s != t && s & t == t);
        if let (Some(&s), None) = (cofaces.next(), cofaces.next()) {
            if s.count_ones() == t.count_ones() + 1 {
                out.push((s, t));
            }
        }
    }
    out
}

fn dfs(faces: Vec<u32>, seen: &mut FxHashSet<Vec<u32>>, budget: usize, exhausted: &mut bool) -> bool {
    if faces.len() == 1 {
        return true;
    }
    if seen.len() >= budget {
        *exhausted = true;
        return false;
    }
    if !seen.insert(faces.clone()) {
        return false;
    }
    for (s, t) in free_pairs(&faces) {
        let next: Vec<u32> = faces.iter().copied().filter(|&f| f != s && f != t).collect();
        if dfs(next, seen, budget, exhausted) {
            return true;
        }
    }
    false
}
