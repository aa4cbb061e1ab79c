use crate::complex::{Complex, FaceIndex, VertexSet};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use serde::Serialize;

/// `K^H`: one vertex per `H`-orbit on `[m]` that is a simplex of `K`.
#[derive(Clone, Debug, Serialize)]
pub struct FixedPointComplex {
    pub complex: Complex,
    /// `labels[i]` is the orbit behind vertex `i + 1`.
    pub labels: Vec<VertexSet>,
}

impl FixedPointComplex {
    /// Vertex of `K^H` whose orbit is `orbit`.
    pub fn vertex_of(&self, orbit: VertexSet) -> Option<usize> {
        self.labels.iter().position(|&o| o == orbit).map(|i| i + 1)
    }
}

pub fn fixed_point_complex(k: &Complex, h: &PermGroup) -> Result<FixedPointComplex> {
    if h.m() != k.m() {
        return Err(Error::domain(format!("group acts on {} points, complex has {}", h.m(), k.m())));
    }
    if !h.is_invariant(k) {
        return Err(Error::domain("the group is not a group of symmetries of the complex"));
    }
    let idx = FaceIndex::new(k);
    let labels: Vec<VertexSet> = h.vertex_orbits().into_iter().filter(|&o| idx.contains(o)).collect();
    let n = labels.len();
    if n == 0 {
        return Ok(FixedPointComplex { complex: Complex::void(0), labels });
    }
    // a set of orbits spans a simplex iff its union lies in some facet
    let sets: Vec<VertexSet> = k
        .facets()
        .iter()
        .map(|&f| (0..n).filter(|&i| labels[i].is_subset(f)).map(|i| i + 1).collect())
        .collect();
    let complex = Complex::from_maximal(n, sets)?;
    Ok(FixedPointComplex { complex, labels })
}
