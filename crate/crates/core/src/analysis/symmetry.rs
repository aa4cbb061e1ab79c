use crate::complex::{Complex, FaceIndex, VertexSet};
use crate::error::{Error, Result};
use crate::group::{PermGroup, Permutation};

/// Largest universe handled by the backtracking matcher.
pub const MATCHER_MAX_VERTICES: usize = 27;

/// Per-vertex invariant: facet degree, then the sorted facet degrees of the
/// edges through the vertex.
fn invariants(k: &Complex, idx: &FaceIndex) -> Vec<(usize, Vec<usize>)> {
    (0..=k.m())
        .map(|v| {
            if v == 0 {
                return (0, Vec::new());
            }
            let vs = VertexSet::singleton(v);
            let mut e: Vec<usize> = (1..=k.m()).filter(|&u| u != v).map(|u| idx.star_count(vs.with(u))).collect();
            e.sort_unstable();
            (idx.star_count(vs), e)
        })
        .collect()
}

struct Matcher<'a> {
    a: &'a Complex,
    b: &'a Complex,
    ia: FaceIndex,
    ib: FaceIndex,
    /// Vertices of `a` in assignment order.
    order: Vec<usize>,
    /// Admissible images of each vertex of `a`.
    cands: Vec<Vec<usize>>,
    img: Vec<usize>,
    pre: Vec<usize>,
    dom: VertexSet,
    limit: usize,
    found: Vec<Permutation>,
}

impl<'a> Matcher<'a> {
    fn new(a: &'a Complex, b: &'a Complex, limit: usize) -> Option<Self> {
        let m = a.m();
        if m != b.m() || a.len() != b.len() || m > MATCHER_MAX_VERTICES {
            return None;
        }
        let (ia, ib) = (FaceIndex::new(a), FaceIndex::new(b));
        let (va, vb) = (invariants(a, &ia), invariants(b, &ib));
        let cands: Vec<Vec<usize>> =
            (0..=m).map(|v| if v == 0 { Vec::new() } else { (1..=m).filter(|&w| va[v] == vb[w]).collect() }).collect();
        let mut sa: Vec<_> = va[1..].to_vec();
        let mut sb: Vec<_> = vb[1..].to_vec();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
        // rarest invariant first, ties by label
        let mut order: Vec<usize> = (1..=m).collect();
        order.sort_by_key(|&v| (cands[v].len(), v));
        Some(Matcher {
            a,
            b,
            ia,
            ib,
            order,
            cands,
            img: vec![0; m + 1],
            pre: vec![0; m + 1],
            dom: VertexSet::EMPTY,
            limit,
            found: Vec::new(),
        })
    }

    /// Faces through `v` inside the domain map to faces, and faces through
    /// `w` inside the image pull back to faces.
    fn consistent(&self, v: usize, w: usize) -> bool {
        let dom = self.dom.with(v);
        let forward = self.a.star(VertexSet::singleton(v)).all(|f| {
            let part = f.intersection(dom);
            let image: VertexSet = part.iter().map(|u| if u == v { w } else { self.img[u] }).collect();
            self.ib.contains(image)
        });
        if !forward {
            return false;
        }
        let range: VertexSet = dom.iter().map(|u| if u == v { w } else { self.img[u] }).collect();
        self.b.star(VertexSet::singleton(w)).all(|g| {
            let part = g.intersection(range);
            let back: VertexSet = part.iter().map(|x| if x == w { v } else { self.pre[x] }).collect();
            self.ia.contains(back)
        })
    }

    fn go(&mut self, depth: usize) {
        if self.found.len() >= self.limit {
            return;
        }
        if depth == self.order.len() {
            let images = (1..=self.a.m()).map(|v| self.img[v] as u8).collect();
            let p = Permutation::from_images(images).expect("bijective by construction");
            if p.apply_complex(self.a) == *self.b {
                self.found.push(p);
            }
            return;
        }
        let v = self.order[depth];
        for i in 0..self.cands[v].len() {
            let w = self.cands[v][i];
            if self.pre[w] != 0 || !self.consistent(v, w) {
                continue;
            }
            self.img[v] = w;
            self.pre[w] = v;
            self.dom = self.dom.with(v);
            self.go(depth + 1);
            self.dom = self.dom.without(v);
            self.pre[w] = 0;
            self.img[v] = 0;
        }
    }
}

/// A vertex bijection taking `a` onto `b`, if one exists.
pub fn find_isomorphism(a: &Complex, b: &Complex) -> Option<Permutation> {
    let mut mt = Matcher::new(a, b, 1)?;
    mt.go(0);
    mt.found.pop()
}

pub fn are_isomorphic(a: &Complex, b: &Complex) -> bool {
    find_isomorphism(a, b).is_some()
}

/// The full symmetry group of `k`: by filtering `supergroup` when given,
/// otherwise by backtracking over vertex bijections.
pub fn symmetry_group(k: &Complex, supergroup: Option<&PermGroup>) -> Result<PermGroup> {
    let elems = match supergroup {
        Some(g) => {
            if g.m() != k.m() {
                return Err(Error::domain(format!("group acts on {} points, complex has {}", g.m(), k.m())));
            }
            return g.stabilizer_subgroup(|i, _| g.preserves(i, k));
        }
        None => {
            let mut mt = Matcher::new(k, k, usize::MAX).ok_or_else(|| {
                Error::domain(format!("backtracking handles at most {MATCHER_MAX_VERTICES} vertices"))
            })?;
            mt.go(0);
            mt.found
        }
    };
    PermGroup::from_closed_subset(k.m(), elems)
}
