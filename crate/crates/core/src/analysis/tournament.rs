use crate::complex::VertexSet;
use crate::error::Result;
use crate::group::{F27Numbering, PermGroup, Permutation, F27};

/// The residue tournament on the 27 vertices: `a → b` iff `b − a` is a
/// nonzero square under the numbering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tournament {
    /// `out[a]` holds the heads of the arcs leaving `a`; index 0 unused.
    out: Vec<VertexSet>,
}

impl Tournament {
    pub fn m(&self) -> usize {
        self.out.len() - 1
    }

    pub fn has_arc(&self, a: usize, b: usize) -> bool {
        self.out[a].contains(b)
    }

    pub fn out_set(&self, a: usize) -> VertexSet {
        self.out[a]
    }

    pub fn in_set(&self, a: usize) -> VertexSet {
        (1..=self.m()).filter(|&b| self.has_arc(b, a)).collect()
    }

    pub fn reversed(&self) -> Tournament {
        Tournament { out: (0..=self.m()).map(|a| if a == 0 { VertexSet::EMPTY } else { self.in_set(a) }).collect() }
    }

    /// `g` maps every arc to an arc (`reversing = false`) or every arc to a
    /// reversed arc (`reversing = true`).
    pub fn maps_arcs(&self, g: &Permutation, reversing: bool) -> bool {
        (1..=self.m()).all(|a| {
            self.out[a].iter().all(|b| {
                let (x, y) = (g.image(a), g.image(b));
                if reversing { self.has_arc(y, x) } else { self.has_arc(x, y) }
            })
        })
    }
}

pub fn build_tournament() -> Tournament {
    let n = F27Numbering::new();
    let mut out = vec![VertexSet::EMPTY; 28];
    for (a, slot) in out.iter_mut().enumerate().skip(1) {
        let x = n.element(a);
        *slot = (1..=27).filter(|&b| n.element(b).sub(x).is_nonzero_square()).collect();
    }
    Tournament { out }
}

struct Extend<'a> {
    t: &'a Tournament,
    reversing: bool,
    order: Vec<usize>,
    img: Vec<usize>,
    used: VertexSet,
    found: Vec<Permutation>,
}

impl Extend<'_> {
    fn ok(&self, a: usize, x: usize, depth: usize) -> bool {
        self.order[..depth].iter().all(|&b| {
            let y = self.img[b];
            let want = self.t.has_arc(a, b);
            let got = if self.reversing { self.t.has_arc(y, x) } else { self.t.has_arc(x, y) };
            want == got
        })
    }

    fn go(&mut self, depth: usize) {
        if depth == self.order.len() {
            let images = (1..=self.t.m()).map(|v| self.img[v] as u8).collect();
            self.found.push(Permutation::from_images(images).expect("bijective by construction"));
            return;
        }
        let a = self.order[depth];
        for x in 1..=self.t.m() {
            if self.used.contains(x) || !self.ok(a, x, depth) {
                continue;
            }
            self.img[a] = x;
            self.used = self.used.with(x);
            self.go(depth + 1);
            self.used = self.used.without(x);
        }
    }
}

fn arc_maps(t: &Tournament, reversing: bool) -> Vec<Permutation> {
    let m = t.m();
    // 0 and 1 first, then the vertices they single out (α, α³, α⁹, ...)
    let n = F27Numbering::new();
    let head = [n.phi(F27::ZERO), n.phi(F27::ONE)];
    let order: Vec<usize> = head.into_iter().chain((1..=m).filter(|v| !head.contains(v))).collect();
    let mut e = Extend { t, reversing, order, img: vec![0; m + 1], used: VertexSet::EMPTY, found: Vec::new() };
    e.go(0);
    e.found
}

/// `Sym(Γ)`, or `Sym±(Γ)` when reversal of all arcs is allowed.
pub fn tournament_automorphisms(allow_reversal: bool) -> Result<PermGroup> {
    let t = build_tournament();
    let mut elems = arc_maps(&t, false);
    if allow_reversal {
        elems.extend(arc_maps(&t, true));
    }
    PermGroup::from_closed_subset(t.m(), elems)
}
