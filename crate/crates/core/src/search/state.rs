use super::catalog::{Constraints, OrbitCatalog};
use std::collections::VecDeque;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Status {
    Indeterminate,
    Taken,
    Removed,
}

#[derive(Clone, Debug)]
enum Undo {
    Status(u32, u64),
    Prohibit(u32, u32),
    Require(u32, u32),
    Retire(u32),
}

#[derive(Copy, Clone, Debug)]
enum Op {
    Take(u32),
    Remove(u32),
}

/// Marker for a contradiction found during propagation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inconsistent;

type Step = Result<(), Inconsistent>;

/// Square bit matrix over orbit indices.
#[derive(Clone, Debug)]
struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix { words, bits: vec![0; words * n] }
    }
    #[inline]
    fn get(&self, a: u32, b: u32) -> bool {
        self.bits[a as usize * self.words + b as usize / 64] >> (b % 64) & 1 == 1
    }
    #[inline]
    fn set(&mut self, a: u32, b: u32) {
        self.bits[a as usize * self.words + b as usize / 64] |= 1 << (b % 64);
    }
    #[inline]
    fn clear(&mut self, a: u32, b: u32) {
        self.bits[a as usize * self.words + b as usize / 64] &= !(1 << (b % 64));
    }
    fn row(&self, a: u32) -> &[u64] {
        &self.bits[a as usize * self.words..(a as usize + 1) * self.words]
    }
}

fn masked(row: &[u64], mask: &[u64]) -> Vec<u32> {
    let mut out = Vec::new();
    for (w, (&r, &k)) in row.iter().zip(mask).enumerate() {
        let mut b = r & k;
        while b != 0 {
            out.push((w * 64) as u32 + b.trailing_zeros());
            b &= b - 1;
        }
    }
    out
}

/// Solver state: orbit statuses, the prohibition and requirement relations
/// among indeterminate orbits, the waiting list of adjacency groups, and
/// the running size budget. All mutations are recorded on a trail so a
/// branch can be undone.
#[derive(Clone)]
pub struct SearchState {
    n: usize,
    sizes: Vec<u64>,
    status: Vec<Status>,
    indet: Vec<u64>,
    prohib: BitMatrix,
    req: BitMatrix,
    rev: BitMatrix,
    /// number of indeterminate orbits prohibited with each orbit
    p: Vec<u32>,
    /// total size of those orbits
    pw: Vec<u64>,
    /// number of indeterminate orbits required by each orbit
    r: Vec<u32>,
    s_sum: u64,
    m_count: usize,
    min_facets: u64,
    groups: std::sync::Arc<Vec<Vec<u32>>>,
    groups_of: std::sync::Arc<Vec<Vec<u32>>>,
    retired: Vec<bool>,
    queued: Vec<bool>,
    waiting: VecDeque<u32>,
    ops: VecDeque<Op>,
    trail: Vec<Undo>,
}

impl SearchState {
    /// Fresh state with the initial prohibitions and every group waiting.
    pub fn new(cat: &OrbitCatalog, cons: &Constraints, min_facets: u64) -> Self {
        let n = cat.len();
        let sizes: Vec<u64> = cat.orbits.iter().map(|o| o.size as u64).collect();
        let mut indet = vec![0u64; n.div_ceil(64).max(1)];
        for i in 0..n {
            indet[i / 64] |= 1 << (i % 64);
        }
        let mut groups_of = vec![Vec::new(); n];
        for (gi, g) in cons.groups.iter().enumerate() {
            for &o in g {
                groups_of[o as usize].push(gi as u32);
            }
        }
        let ng = cons.groups.len();
        let mut st = SearchState {
            n,
            s_sum: sizes.iter().sum(),
            sizes,
            status: vec![Status::Indeterminate; n],
            indet,
            prohib: BitMatrix::new(n),
            req: BitMatrix::new(n),
            rev: BitMatrix::new(n),
            p: vec![0; n],
            pw: vec![0; n],
            r: vec![0; n],
            m_count: n,
            min_facets,
            groups: std::sync::Arc::new(cons.groups.clone()),
            groups_of: std::sync::Arc::new(groups_of),
            retired: vec![false; ng],
            queued: vec![false; ng],
            waiting: VecDeque::new(),
            ops: VecDeque::new(),
            trail: Vec::new(),
        };
        for &(a, b) in &cons.prohibited {
            st.add_prohib(a, b);
        }
        for gi in 0..ng {
            st.enqueue(gi as u32);
        }
        st.trail.clear();
        st
    }

    pub fn num_orbits(&self) -> usize {
        self.n
    }

    pub fn status(&self, a: usize) -> Status {
        self.status[a]
    }

    /// Running size of taken and indeterminate orbits.
    pub fn budget(&self) -> u64 {
        self.s_sum
    }

    /// Number of indeterminate orbits.
    pub fn indeterminate_count(&self) -> usize {
        self.m_count
    }

    pub fn is_prohibited(&self, a: usize, b: usize) -> bool {
        self.prohib.get(a as u32, b as u32)
    }

    pub fn requires(&self, a: usize, b: usize) -> bool {
        self.req.get(a as u32, b as u32)
    }

    pub fn taken(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.status[i] == Status::Taken).collect()
    }

    pub fn indeterminate(&self) -> Vec<usize> {
        masked(&self.indet, &self.indet).into_iter().map(|x| x as usize).collect()
    }

    /// `(p, r)` counts of an orbit: indeterminate orbits prohibited with
    /// it, and indeterminate orbits it requires.
    pub fn scores(&self, a: usize) -> (u32, u32) {
        (self.p[a], self.r[a])
    }

    /// Total size of the indeterminate orbits prohibited with `a`.
    pub fn prohibited_weight(&self, a: usize) -> u64 {
        self.pw[a]
    }

    pub fn trail_len(&self) -> usize {
        self.trail.len()
    }

    fn is_indet(&self, a: u32) -> bool {
        self.status[a as usize] == Status::Indeterminate
    }

    fn enqueue(&mut self, g: u32) {
        if !self.retired[g as usize] && !self.queued[g as usize] {
            self.queued[g as usize] = true;
            self.waiting.push_back(g);
        }
    }

    fn enqueue_groups_of(&mut self, a: u32) {
        let go = self.groups_of.clone();
        for &g in &go[a as usize] {
            self.enqueue(g);
        }
    }

    fn enqueue_common(&mut self, a: u32, b: u32) {
        let go = self.groups_of.clone();
        let (x, y) = (&go[a as usize], &go[b as usize]);
        let (mut i, mut j) = (0, 0);
        while i < x.len() && j < y.len() {
            match x[i].cmp(&y[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    self.enqueue(x[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
    }

    fn add_prohib(&mut self, a: u32, b: u32) {
        self.prohib.set(a, b);
        self.prohib.set(b, a);
        self.p[a as usize] += 1;
        self.p[b as usize] += 1;
        self.pw[a as usize] += self.sizes[b as usize];
        self.pw[b as usize] += self.sizes[a as usize];
        self.trail.push(Undo::Prohibit(a, b));
    }

    fn add_req(&mut self, a: u32, c: u32) {
        self.req.set(a, c);
        self.rev.set(c, a);
        self.r[a as usize] += 1;
        self.trail.push(Undo::Require(a, c));
    }

    fn set_status(&mut self, a: u32, s: Status) -> Step {
        let ai = a as usize;
        self.status[ai] = s;
        self.indet[ai / 64] &= !(1 << (ai % 64));
        self.m_count -= 1;
        let size = self.sizes[ai];
        let mut removed = 0;
        if s == Status::Removed {
            self.s_sum -= size;
            removed = size;
        }
        self.trail.push(Undo::Status(a, removed));
        for b in masked(self.prohib.row(a), &self.indet) {
            self.p[b as usize] -= 1;
            self.pw[b as usize] -= size;
        }
        for b in masked(self.rev.row(a), &self.indet) {
            self.r[b as usize] -= 1;
        }
        self.enqueue_groups_of(a);
        if self.s_sum < self.min_facets {
            return Err(Inconsistent);
        }
        Ok(())
    }

    /// Undo every mutation after trail position `mark`.
    pub fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().expect("nonempty trail") {
                Undo::Status(a, removed) => {
                    let ai = a as usize;
                    let size = self.sizes[ai];
                    for b in masked(self.prohib.row(a), &self.indet) {
                        self.p[b as usize] += 1;
                        self.pw[b as usize] += size;
                    }
                    for b in masked(self.rev.row(a), &self.indet) {
                        self.r[b as usize] += 1;
                    }
                    self.status[ai] = Status::Indeterminate;
                    self.indet[ai / 64] |= 1 << (ai % 64);
                    self.m_count += 1;
                    self.s_sum += removed;
                }
                Undo::Prohibit(a, b) => {
                    self.prohib.clear(a, b);
                    self.prohib.clear(b, a);
                    self.p[a as usize] -= 1;
                    self.p[b as usize] -= 1;
                    self.pw[a as usize] -= self.sizes[b as usize];
                    self.pw[b as usize] -= self.sizes[a as usize];
                }
                Undo::Require(a, c) => {
                    self.req.clear(a, c);
                    self.rev.clear(c, a);
                    self.r[a as usize] -= 1;
                }
                Undo::Retire(g) => self.retired[g as usize] = false,
            }
        }
        self.clear_queues();
    }

    fn clear_queues(&mut self) {
        for g in self.waiting.drain(..) {
            self.queued[g as usize] = false;
        }
        self.ops.clear();
    }

    /// Take `a` and propagate.
    pub fn take(&mut self, a: usize) -> Step {
        self.ops.push_back(Op::Take(a as u32));
        self.propagate()
    }

    /// Remove `a` and propagate.
    pub fn remove(&mut self, a: usize) -> Step {
        self.ops.push_back(Op::Remove(a as u32));
        self.propagate()
    }

    /// Prohibit the pair and propagate.
    pub fn prohibit(&mut self, a: usize, b: usize) -> Step {
        let r = self.prohibit_closure(a as u32, b as u32);
        r.and_then(|_| self.propagate())
    }

    /// Add the requirement `a → c` and propagate.
    pub fn require(&mut self, a: usize, c: usize) -> Step {
        let r = self.require_closure(a as u32, c as u32);
        r.and_then(|_| self.propagate())
    }

    /// Run pending status changes and waiting groups to a fixpoint. On
    /// contradiction the queues are cleared; the caller undoes the trail.
    pub fn propagate(&mut self) -> Step {
        let r = self.propagate_inner();
        if r.is_err() {
            self.clear_queues();
        }
        r
    }

    fn propagate_inner(&mut self) -> Step {
        loop {
            if let Some(op) = self.ops.pop_front() {
                match op {
                    Op::Take(a) => self.do_take(a)?,
                    Op::Remove(a) => self.do_remove(a)?,
                }
                continue;
            }
            if let Some(g) = self.waiting.pop_front() {
                self.queued[g as usize] = false;
                self.examine(g)?;
                continue;
            }
            return Ok(());
        }
    }

    fn do_take(&mut self, a: u32) -> Step {
        match self.status[a as usize] {
            Status::Taken => return Ok(()),
            Status::Removed => return Err(Inconsistent),
            Status::Indeterminate => {}
        }
        self.set_status(a, Status::Taken)?;
        for c in masked(self.req.row(a), &self.indet) {
            self.ops.push_back(Op::Take(c));
        }
        for d in masked(self.prohib.row(a), &self.indet) {
            self.ops.push_back(Op::Remove(d));
        }
        Ok(())
    }

    fn do_remove(&mut self, a: u32) -> Step {
        match self.status[a as usize] {
            Status::Removed => return Ok(()),
            Status::Taken => return Err(Inconsistent),
            Status::Indeterminate => {}
        }
        self.set_status(a, Status::Removed)?;
        for b in masked(self.rev.row(a), &self.indet) {
            self.ops.push_back(Op::Remove(b));
        }
        Ok(())
    }

    fn with_dependents(&self, x: u32) -> Vec<u32> {
        let mut v = vec![x];
        v.extend(masked(self.rev.row(x), &self.indet));
        v
    }

    /// Prohibit `{x, y}` together with every pair `{x', y'}` where `x'`
    /// requires `x` and `y'` requires `y`; a forced self-pair removes.
    fn prohibit_closure(&mut self, x: u32, y: u32) -> Step {
        let (sx, sy) = (self.status[x as usize], self.status[y as usize]);
        if sx == Status::Removed || sy == Status::Removed {
            return Ok(());
        }
        if x == y {
            if sx == Status::Taken {
                return Err(Inconsistent);
            }
            self.ops.push_back(Op::Remove(x));
            return Ok(());
        }
        match (sx, sy) {
            (Status::Taken, Status::Taken) => return Err(Inconsistent),
            (Status::Taken, _) => {
                self.ops.push_back(Op::Remove(y));
                return Ok(());
            }
            (_, Status::Taken) => {
                self.ops.push_back(Op::Remove(x));
                return Ok(());
            }
            _ => {}
        }
        if self.prohib.get(x, y) {
            return Ok(());
        }
        let xs = self.with_dependents(x);
        let ys = self.with_dependents(y);
        for &c in &xs {
            for &c2 in &ys {
                if c == c2 {
                    self.ops.push_back(Op::Remove(c));
                } else if !self.prohib.get(c, c2) {
                    self.add_prohib(c, c2);
                    self.enqueue_common(c, c2);
                }
            }
        }
        Ok(())
    }

    /// Add `a → c`, closed transitively, and inherit the prohibitions of
    /// `c` onto everything that now requires it.
    fn require_closure(&mut self, a: u32, c: u32) -> Step {
        if a == c {
            return Ok(());
        }
        let (sa, sc) = (self.status[a as usize], self.status[c as usize]);
        if sa == Status::Removed || sc == Status::Taken {
            return Ok(());
        }
        if sa == Status::Taken {
            self.ops.push_back(Op::Take(c));
            return Ok(());
        }
        if sc == Status::Removed {
            self.ops.push_back(Op::Remove(a));
            return Ok(());
        }
        if self.req.get(a, c) {
            return Ok(());
        }
        let sources = self.with_dependents(a);
        let mut targets = vec![c];
        targets.extend(masked(self.req.row(c), &self.indet));
        let inherited = masked(self.prohib.row(c), &self.indet);
        for &s in &sources {
            for &t in &targets {
                if s != t && !self.req.get(s, t) {
                    self.add_req(s, t);
                    self.enqueue_common(s, t);
                }
            }
        }
        for &s in &sources {
            for &d in &inherited {
                self.prohibit_closure(s, d)?;
            }
        }
        Ok(())
    }

    fn examine(&mut self, g: u32) -> Step {
        if self.retired[g as usize] {
            return Ok(());
        }
        let groups = self.groups.clone();
        let members = &groups[g as usize];
        let mut taken = 0;
        let mut ind: Vec<u32> = Vec::new();
        for &o in members {
            match self.status[o as usize] {
                Status::Taken => taken += 1,
                Status::Indeterminate => ind.push(o),
                Status::Removed => {}
            }
        }
        match taken {
            0 => self.examine_free(&ind),
            1 => match ind.len() {
                0 => Err(Inconsistent),
                1 => {
                    self.ops.push_back(Op::Take(ind[0]));
                    Ok(())
                }
                _ => {
                    for i in 0..ind.len() {
                        for j in i + 1..ind.len() {
                            self.prohibit_closure(ind[i], ind[j])?;
                        }
                    }
                    Ok(())
                }
            },
            2 => {
                for &o in &ind {
                    self.ops.push_back(Op::Remove(o));
                }
                self.retired[g as usize] = true;
                self.trail.push(Undo::Retire(g));
                Ok(())
            }
            _ => Err(Inconsistent),
        }
    }

    fn examine_free(&mut self, ind: &[u32]) -> Step {
        // two requirements inside the group would force three members
        let mut forced_out = false;
        for &a in ind {
            let n = ind.iter().filter(|&&c| c != a && self.req.get(a, c)).count();
            if n >= 2 {
                self.ops.push_back(Op::Remove(a));
                forced_out = true;
            }
        }
        if forced_out {
            return Ok(());
        }
        for &a in ind {
            for &b in ind {
                if a != b && self.is_indet(a) && self.is_indet(b) && self.req.get(a, b) {
                    for &c in ind {
                        if c != a && c != b {
                            self.prohibit_closure(a, c)?;
                        }
                    }
                }
            }
        }
        for &a in ind {
            if !self.is_indet(a) {
                continue;
            }
            let free: Vec<u32> = ind
                .iter()
                .copied()
                .filter(|&c| c != a && self.is_indet(c) && !self.prohib.get(a, c))
                .collect();
            match free.len() {
                0 => self.ops.push_back(Op::Remove(a)),
                1 => self.require_closure(a, free[0])?,
                _ => {}
            }
        }
        Ok(())
    }
}
