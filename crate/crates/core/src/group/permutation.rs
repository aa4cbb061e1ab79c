use crate::complex::{Complex, VertexSet};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A permutation of `{1..m}`; `images[i]` is the image of vertex `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation { images: (1..=m as u8).collect() }
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > m || seen[x] {
                return Err(Error::Group(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Parse cycle notation such as `(1 14 27)(2 4 10)`; vertices not
    /// mentioned are fixed.
    pub fn from_cycles(m: usize, text: &str) -> Result<Self> {
        let mut images: Vec<u8> = (1..=m as u8).collect();
        let mut seen = vec![false; m + 1];
        let bad = |msg: String| Error::Group(format!("cycle notation {text:?}: {msg}"));
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| bad("expected '('".into()))?;
            let close = open.find(')').ok_or_else(|| bad("unclosed cycle".into()))?;
            let body = &open[..close];
            let cyc: Vec<usize> = body
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad(format!("bad vertex {t:?}"))))
                .collect::<Result<_>>()?;
            for &v in &cyc {
                if v == 0 || v > m || seen[v] {
                    return Err(bad(format!("vertex {v} repeated or out of range")));
                }
                seen[v] = true;
            }
            for (i, &v) in cyc.iter().enumerate() {
                images[v - 1] = cyc[(i + 1) % cyc.len()] as u8;
            }
            rest = open[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn m(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// Image of vertex `v` (1-based).
    pub fn image(&self, v: usize) -> usize {
        self.images[v - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// `(self * o)(x) = self(o(x))`.
    pub fn compose(&self, o: &Permutation) -> Permutation {
        Permutation { images: o.images.iter().map(|&x| self.images[x as usize - 1]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.m()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize - 1] = (i + 1) as u8;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, e: usize) -> Permutation {
        (0..e).fold(Permutation::identity(self.m()), |acc, _| self.compose(&acc))
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = self.compose(&p);
            k += 1;
        }
        k
    }

    pub fn apply(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|v| self.image(v)).collect()
    }

    /// Image of a complex; cardinality pattern is preserved.
    pub fn apply_complex(&self, k: &Complex) -> Complex {
        let facets: Vec<VertexSet> = k.facets().iter().map(|&f| self.apply(f)).collect();
        if k.is_pure() {
            Complex::new(k.m(), facets).expect("a permutation preserves a valid complex")
        } else {
            Complex::from_maximal(k.m(), facets).expect("a permutation preserves a valid complex")
        }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.m() + 1];
        let mut out = Vec::new();
        for v in 1..=self.m() {
            if seen[v] {
                continue;
            }
            let mut c = vec![v];
            seen[v] = true;
            let mut w = self.image(v);
            while w != v {
                seen[w] = true;
                c.push(w);
                w = self.image(w);
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, v) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
