//! The 351-element group acting on 27 vertices, its normalizer and its
//! subgroup lattice.

use super::{F27Numbering, PermGroup, Permutation, F27};
use crate::error::{Error, Result};
use rustc_hash::FxHashMap;
use serde::Serialize;

pub const A_CYCLES: &str = "(1 2 3 4 5 6 7 8 9 10 11 12 13)(14 15 16 17 18 19 20 21 22 23 24 25 26)";
pub const B_CYCLES: &str =
    "(1 14 27)(2 4 10)(3 22 13)(5 6 21)(7 25 11)(8 19 18)(9 16 26)(12 20 24)(15 23 17)";
pub const S_CYCLES: &str =
    "(1 14)(2 15)(3 16)(4 17)(5 18)(6 19)(7 20)(8 21)(9 22)(10 23)(11 24)(12 25)(13 26)";
pub const F_CYCLES: &str =
    "(2 4 10)(3 7 6)(5 13 11)(8 9 12)(15 17 23)(16 20 19)(18 26 24)(21 22 25)";

pub fn perm_a() -> Permutation {
    Permutation::from_cycles(27, A_CYCLES).expect("valid constant")
}

pub fn perm_b() -> Permutation {
    Permutation::from_cycles(27, B_CYCLES).expect("valid constant")
}

pub fn perm_s() -> Permutation {
    Permutation::from_cycles(27, S_CYCLES).expect("valid constant")
}

pub fn perm_f() -> Permutation {
    Permutation::from_cycles(27, F_CYCLES).expect("valid constant")
}

/// `⟨A, B⟩`, checked to have order 351.
pub fn build_g351() -> Result<PermGroup> {
    let g = PermGroup::generate(27, vec![perm_a(), perm_b()])?;
    if g.order() != 351 {
        return Err(Error::Group(format!("<A,B> has order {}, expected 351", g.order())));
    }
    Ok(g)
}

/// `⟨A, B, S, F⟩`, checked to have order 2106.
pub fn build_normalizer() -> Result<PermGroup> {
    let g = PermGroup::generate(27, vec![perm_a(), perm_b(), perm_s(), perm_f()])?;
    if g.order() != 2106 {
        return Err(Error::Group(format!("<A,B,S,F> has order {}, expected 2106", g.order())));
    }
    Ok(g)
}

/// The printed generators agree with multiplication by α, translation by
/// 1, negation and Frobenius under the numbering.
pub fn field_generators() -> [Permutation; 4] {
    let n = F27Numbering::new();
    [
        n.induced(|x| x.mul(F27::ALPHA)),
        n.induced(|x| x.add(F27::ONE)),
        n.induced(|x| x.neg()),
        n.induced(|x| x.mul(x).mul(x)),
    ]
}

/// A subgroup of a fixed ambient group, as a bitset over element indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct ElementSet(Vec<u64>);

impl ElementSet {
    fn new(n: usize) -> Self {
        ElementSet(vec![0; n.div_ceil(64)])
    }
    fn insert(&mut self, i: usize) -> bool {
        let w = &mut self.0[i / 64];
        let was = *w >> (i % 64) & 1 == 1;
        *w |= 1 << (i % 64);
        !was
    }
    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
    pub fn is_subset(&self, o: &ElementSet) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.0.len() * 64).filter(|&i| self.contains(i))
    }
}

/// Subgroup lattice of a small group by closing joins of cyclic subgroups.
pub struct SubgroupLattice {
    pub group: PermGroup,
    mul: Vec<Vec<u16>>,
    inv: Vec<u16>,
    pub subgroups: Vec<ElementSet>,
}

impl SubgroupLattice {
    pub fn new(group: PermGroup) -> Self {
        let n = group.order();
        let idx: FxHashMap<&Permutation, u16> =
            group.elements().iter().enumerate().map(|(i, p)| (p, i as u16)).collect();
        let els = group.elements();
        let mul: Vec<Vec<u16>> =
            els.iter().map(|a| els.iter().map(|b| idx[&a.compose(b)]).collect()).collect();
        let inv: Vec<u16> = els.iter().map(|a| idx[&a.inverse()]).collect();
        let mut lat = SubgroupLattice { group, mul, inv, subgroups: Vec::new() };
        let mut seen: rustc_hash::FxHashSet<ElementSet> = Default::default();
        let mut subs: Vec<ElementSet> = Vec::new();
        for g in 0..n {
            let c = lat.closure(&[g]);
            if seen.insert(c.clone()) {
                subs.push(c);
            }
        }
        let mut frontier = subs.clone();
        let cyclic = subs.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for h in &frontier {
                for c in &cyclic {
                    if c.is_subset(h) {
                        continue;
                    }
                    let gens: Vec<usize> = h.iter().chain(c.iter()).collect();
                    let j = lat.closure(&gens);
                    if seen.insert(j.clone()) {
                        next.push(j.clone());
                        subs.push(j);
                    }
                }
            }
            frontier = next;
        }
        subs.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        lat.subgroups = subs;
        lat
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    fn closure(&self, gens: &[usize]) -> ElementSet {
        let mut set = ElementSet::new(self.order());
        let id = 0;
        set.insert(id);
        let mut list = vec![id];
        let mut i = 0;
        while i < list.len() {
            let a = list[i];
            for &g in gens {
                let p = self.mul[a][g] as usize;
                if set.insert(p) {
                    list.push(p);
                }
            }
            i += 1;
        }
        set
    }

    /// `g H g⁻¹` for the element index `g`.
    pub fn conjugate(&self, h: &ElementSet, g: usize) -> ElementSet {
        let mut out = ElementSet::new(self.order());
        let gi = self.inv[g] as usize;
        for x in h.iter() {
            out.insert(self.mul[self.mul[g][x] as usize][gi] as usize);
        }
        out
    }

    pub fn normalizer(&self, h: &ElementSet) -> ElementSet {
        let mut out = ElementSet::new(self.order());
        for g in 0..self.order() {
            if &self.conjugate(h, g) == h {
                out.insert(g);
            }
        }
        out
    }

    pub fn to_group(&self, h: &ElementSet) -> PermGroup {
        let els = h.iter().map(|i| self.group.elements()[i].clone()).collect();
        PermGroup::from_closed_subset(self.group.m(), els).expect("lattice members are subgroups")
    }

    /// Conjugacy classes, ordered by subgroup order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let pos: FxHashMap<&ElementSet, usize> =
            self.subgroups.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let mut class_of = vec![usize::MAX; self.subgroups.len()];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..self.subgroups.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let mut members = Vec::new();
            for g in 0..self.order() {
                let c = pos[&self.conjugate(&self.subgroups[i], g)];
                if class_of[c] == usize::MAX {
                    class_of[c] = classes.len();
                    members.push(c);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupClass {
    pub label: String,
    #[serde(skip)]
    pub representative: PermGroup,
    pub order: usize,
    pub class_size: usize,
    pub normalizer_order: usize,
    /// Lattice indices of the members of the class.
    pub members: Vec<usize>,
}

fn g351_label(order: usize) -> String {
    match order {
        1 => "1".into(),
        3 => "C3".into(),
        9 => "C3^2".into(),
        27 => "C3^3".into(),
        13 => "C13".into(),
        351 => "G351".into(),
        n => format!("order {n}"),
    }
}

/// Conjugacy classes of subgroups of the 351-element group, computed from
/// its lattice of subgroups.
pub fn subgroups_g351() -> Result<(SubgroupLattice, Vec<SubgroupClass>)> {
    let lat = SubgroupLattice::new(build_g351()?);
    let classes = lat
        .classes()
        .into_iter()
        .map(|members| {
            let h = &lat.subgroups[members[0]];
            SubgroupClass {
                label: g351_label(h.len()),
                representative: lat.to_group(h),
                order: h.len(),
                class_size: members.len(),
                normalizer_order: lat.normalizer(h).len(),
                members,
            }
        })
        .collect();
    Ok((lat, classes))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printed_generators_match_field_maps() {
        let [a, b, s, f] = field_generators();
        assert_eq!(a, perm_a());
        assert_eq!(b, perm_b());
        assert_eq!(s, perm_s());
        assert_eq!(f, perm_f());
    }

    #[test]
    fn orders() {
        let g = build_g351().unwrap();
        assert_eq!(g.order(), 351);
        let n = build_normalizer().unwrap();
        assert_eq!(n.order(), 2106);
        assert!(g.is_subgroup_of(&n));
        let (a, b, s) = (perm_a(), perm_b(), perm_s());
        assert!(g.contains(&a.compose(&b).compose(&a.inverse())));
        assert!(g.contains(&s.compose(&a).compose(&s.inverse())));
        assert!(!g.contains(&s));
    }

    #[test]
    fn six_classes() {
        let (lat, classes) = subgroups_g351().unwrap();
        assert_eq!(lat.subgroups.len(), 56);
        let got: Vec<(String, usize, usize)> =
            classes.iter().map(|c| (c.label.clone(), c.class_size, c.normalizer_order)).collect();
        let mut got = got;
        got.sort();
        let mut want = vec![
            ("1".to_string(), 1, 351),
            ("C3".into(), 13, 27),
            ("C3^2".into(), 13, 27),
            ("C3^3".into(), 1, 351),
            ("C13".into(), 27, 13),
            ("G351".into(), 1, 351),
        ];
        want.sort();
        assert_eq!(got, want);
    }
}
