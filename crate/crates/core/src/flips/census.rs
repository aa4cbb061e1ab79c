use crate::error::{Error, Result};
use crate::group::subgroups_g351;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

/// Counts for one conjugacy class `H` of subgroups: `n_{≥H}` subsets `S`
/// with `G_S ⊇ H`, `n_H` with `G_S = H`, and `m_H` isomorphism classes of
/// `K_S` with symmetry group conjugate to `H`.
#[derive(Clone, Debug, Serialize)]
pub struct CensusRow {
    pub label: String,
    pub order: usize,
    pub class_size: usize,
    pub normalizer_order: usize,
    #[serde(serialize_with = "as_decimal")]
    pub n_at_least: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub n_exact: BigUint,
    #[serde(serialize_with = "as_decimal")]
    pub m: BigUint,
}

#[derive(Clone, Debug, Serialize)]
pub struct Census {
    /// Ordered by decreasing subgroup order.
    pub rows: Vec<CensusRow>,
    /// `Σ m_H`, the number of `K_S` up to isomorphism.
    #[serde(serialize_with = "as_decimal")]
    pub total: BigUint,
    /// `total + 2`, adding the two complexes without distinguished
    /// subcomplexes.
    #[serde(serialize_with = "as_decimal")]
    pub with_exceptional: BigUint,
}

fn as_decimal<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_str_radix(10))
}

impl Census {
    pub fn row(&self, label: &str) -> Option<&CensusRow> {
        self.rows.iter().find(|r| r.label == label)
    }
}

/// Count subsets `S ⊆ G` by stabilizer under left shifts, over the lattice
/// of subgroups of the 351-element group.
pub fn subgroup_census() -> Result<Census> {
    let (lat, classes) = subgroups_g351()?;
    let g = lat.order();
    let subs = &lat.subgroups;
    let mut order: Vec<usize> = (0..subs.len()).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(subs[i].len()));
    let mut exact: Vec<BigUint> = vec![BigUint::zero(); subs.len()];
    let at_least = |i: usize| BigUint::one() << (g / subs[i].len());
    for (pos, &h) in order.iter().enumerate() {
        let mut n = at_least(h);
        for &q in &order[..pos] {
            if subs[q].len() > subs[h].len() && subs[h].is_subset(&subs[q]) {
                n -= &exact[q];
            }
        }
        exact[h] = n;
    }
    let mut rows: Vec<CensusRow> = classes
        .iter()
        .map(|c| {
            let h = c.members[0];
            let index = BigUint::from(c.normalizer_order / c.order);
            let n = exact[h].clone();
            if !(&n % &index).is_zero() {
                return Err(Error::Group(format!("n_H for {} is not divisible by [N(H):H]", c.label)));
            }
            Ok(CensusRow {
                label: c.label.clone(),
                order: c.order,
                class_size: c.class_size,
                normalizer_order: c.normalizer_order,
                n_at_least: at_least(h),
                m: &n / &index,
                n_exact: n,
            })
        })
        .collect::<Result<_>>()?;
    rows.sort_by_key(|r| std::cmp::Reverse(r.order));
    let total: BigUint = rows.iter().map(|r| &r.m).sum();
    let with_exceptional = &total + 2u32;
    Ok(Census { rows, total, with_exceptional })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p2(e: usize) -> BigUint {
        BigUint::one() << e
    }

    #[test]
    fn closed_forms() {
        let c = subgroup_census().unwrap();
        assert_eq!(c.row("G351").unwrap().m, BigUint::from(2u32));
        assert_eq!(c.row("C3^3").unwrap().m, BigUint::from(630u32));
        assert_eq!(c.row("C13").unwrap().m, p2(27) - 2u32);
        assert_eq!(c.row("C3^2").unwrap().m, (p2(39) - p2(13)) / 3u32);
        assert_eq!(c.row("C3").unwrap().m, (p2(117) - p2(41) + p2(13) * 3u32) / 9u32);
        let n1 = p2(351) + p2(39) * 39u32 - p2(117) * 13u32 - (p2(27) + p2(13) - 2u32) * 27u32;
        assert_eq!(c.row("1").unwrap().m, n1 / 351u32);
        assert_eq!(c.total, (p2(351) + p2(118) * 13u32 + p2(29) * 81u32) / 351u32);
        assert_eq!(c.with_exceptional, c.total.clone() + 2u32);
    }
}
