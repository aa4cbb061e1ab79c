//! The field with 27 elements as `F3[α]/(α³ − α − 1)` and its numbering
//! of the 27 vertices.

use super::Permutation;

/// Element `c0 + c1 α + c2 α²`, stored as `c0 + 3 c1 + 9 c2`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct F27(pub u8);

#[allow(clippy::should_implement_trait)]
impl F27 {
    pub const ZERO: F27 = F27(0);
    pub const ONE: F27 = F27(1);
    pub const ALPHA: F27 = F27(3);

    fn digits(self) -> [u8; 3] {
        [self.0 % 3, self.0 / 3 % 3, self.0 / 9]
    }

    fn from_digits(d: [u8; 3]) -> F27 {
        F27(d[0] % 3 + 3 * (d[1] % 3) + 9 * (d[2] % 3))
    }

    pub fn add(self, o: F27) -> F27 {
        let (a, b) = (self.digits(), o.digits());
        F27::from_digits([a[0] + b[0], a[1] + b[1], a[2] + b[2]])
    }

    pub fn neg(self) -> F27 {
        let a = self.digits();
        F27::from_digits([3 - a[0], 3 - a[1], 3 - a[2]])
    }

    pub fn sub(self, o: F27) -> F27 {
        self.add(o.neg())
    }

    pub fn mul(self, o: F27) -> F27 {
        let (a, b) = (self.digits(), o.digits());
        let mut c = [0u32; 5];
        for i in 0..3 {
            for j in 0..3 {
                c[i + j] += (a[i] * b[j]) as u32;
            }
        }
        // α⁴ = α² + α, α³ = α + 1
        c[2] += c[4];
        c[1] += c[4];
        c[1] += c[3];
        c[0] += c[3];
        F27::from_digits([(c[0] % 3) as u8, (c[1] % 3) as u8, (c[2] % 3) as u8])
    }

    pub fn pow(self, e: u32) -> F27 {
        (0..e).fold(F27::ONE, |acc, _| acc.mul(self))
    }

    pub fn all() -> impl Iterator<Item = F27> {
        (0..27).map(F27)
    }

    pub fn is_nonzero_square(self) -> bool {
        self != F27::ZERO && self.pow(13) == F27::ONE
    }
}

/// The bijection `φ` from the field to vertex labels `1..=27`:
/// `φ(α^k) = k + 1`, `φ(−α^k) = k + 14`, `φ(0) = 27`.
#[derive(Clone, Debug)]
pub struct F27Numbering {
    label: [u8; 27],
    elem: [F27; 28],
}

impl Default for F27Numbering {
    fn default() -> Self {
        Self::new()
    }
}

impl F27Numbering {
    pub fn new() -> Self {
        let mut label = [0u8; 27];
        let mut elem = [F27::ZERO; 28];
        let mut x = F27::ONE;
        for k in 0..13u8 {
            label[x.0 as usize] = k + 1;
            label[x.neg().0 as usize] = k + 14;
            x = x.mul(F27::ALPHA);
        }
        label[0] = 27;
        for e in F27::all() {
            elem[label[e.0 as usize] as usize] = e;
        }
        F27Numbering { label, elem }
    }

    pub fn phi(&self, x: F27) -> usize {
        self.label[x.0 as usize] as usize
    }

    pub fn element(&self, v: usize) -> F27 {
        self.elem[v]
    }

    /// The vertex permutation induced by a field map.
    pub fn induced(&self, f: impl Fn(F27) -> F27) -> Permutation {
        let images = (1..=27).map(|v| self.phi(f(self.element(v))) as u8).collect();
        Permutation::from_images(images).expect("field maps used here are bijective")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_sample() {
        for a in F27::all() {
            assert_eq!(a.add(a.neg()), F27::ZERO);
            assert_eq!(a.mul(F27::ONE), a);
            for b in F27::all() {
                assert_eq!(a.mul(b), b.mul(a));
                for c in [F27(5), F27(22)] {
                    assert_eq!(a.mul(b.add(c)), a.mul(b).add(a.mul(c)));
                }
            }
        }
        assert_eq!(F27::ALPHA.pow(3), F27::ALPHA.add(F27::ONE));
        assert_eq!(F27::ALPHA.pow(13), F27::ONE);
    }

    #[test]
    fn numbering_squares() {
        let n = F27Numbering::new();
        for v in 1..=27 {
            assert_eq!(n.phi(n.element(v)), v);
            let sq = n.element(v).is_nonzero_square();
            assert_eq!(sq, v <= 13, "vertex {v}");
        }
        assert_eq!(n.phi(F27::ZERO), 27);
    }
}
