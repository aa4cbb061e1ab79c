//! Embedded reference data: the orbit representatives of K1..K4 (stored as
//! the ten blocks shared between them) and the small classical complexes.

use crate::complex::{parse_complex, Complex, VertexSet};
use crate::error::{Error, Result};
use crate::group::{build_g351, PermGroup, Permutation};
use std::path::Path;

/// Blocks of representatives; the name lists the complexes sharing it.
pub const BLOCKS: [(&str, &str); 10] = [
    ("1234", include_str!("../data/table_1234.dat")),
    ("123", include_str!("../data/table_123.dat")),
    ("12", include_str!("../data/table_12.dat")),
    ("1", include_str!("../data/table_1.dat")),
    ("234", include_str!("../data/table_234.dat")),
    ("23", include_str!("../data/table_23.dat")),
    ("2", include_str!("../data/table_2.dat")),
    ("34", include_str!("../data/table_34.dat")),
    ("3", include_str!("../data/table_3.dat")),
    ("4", include_str!("../data/table_4.dat")),
];

/// Expected row counts of the blocks, in the order of [`BLOCKS`].
pub const BLOCK_SIZES: [usize; 10] = [112, 89, 23, 62, 37, 21, 4, 22, 5, 115];

pub const REPS_PER_COMPLEX: usize = 286;

pub fn block(name: &str) -> Result<Complex> {
    let (_, text) = BLOCKS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Fixture(format!("no block {name:?}")))?;
    parse_complex(text).map_err(|e| Error::Fixture(format!("block {name}: {e}")))
}

fn check_index(i: usize) -> Result<()> {
    if !(1..=4).contains(&i) {
        return Err(Error::domain(format!("complex index {i} not in 1..=4")));
    }
    Ok(())
}

/// The 286 minimal orbit representatives of `K_i`.
pub fn k_reps(i: usize) -> Result<Complex> {
    check_index(i)?;
    let digit = char::from_digit(i as u32, 10).expect("single digit");
    let mut rows = Vec::new();
    for (name, _) in BLOCKS.iter().filter(|(n, _)| n.contains(digit)) {
        rows.extend_from_slice(block(name)?.facets());
    }
    Complex::new(27, rows).map_err(|e| Error::Fixture(format!("K{i}: {e}")))
}

/// All 100386 facets of `K_i`.
pub fn k_expanded(i: usize) -> Result<Complex> {
    let g = build_g351()?;
    g.expand_orbits(&k_reps(i)?)
}

/// Row counts, cardinalities, sortedness and disjointness of the blocks,
/// and the 286-row assembly of each complex.
pub fn self_check() -> Result<()> {
    let mut all: Vec<VertexSet> = Vec::new();
    for ((name, text), &want) in BLOCKS.iter().zip(&BLOCK_SIZES) {
        let b = parse_complex(text).map_err(|e| Error::Fixture(format!("block {name}: {e}")))?;
        if b.len() != want {
            return Err(Error::Fixture(format!("block {name} has {} rows, expected {want}", b.len())));
        }
        if b.m() != 27 || b.facets().iter().any(|f| f.len() != 17) {
            return Err(Error::Fixture(format!("block {name} rows are not 17-subsets of 27")));
        }
        if b.to_dat() != *text {
            return Err(Error::Fixture(format!("block {name} is not in canonical sorted form")));
        }
        all.extend_from_slice(b.facets());
    }
    let n = all.len();
    all.sort_unstable();
    all.dedup();
    if all.len() != n {
        return Err(Error::Fixture("a row occurs in two blocks".into()));
    }
    for i in 1..=4 {
        let k = k_reps(i)?;
        if k.len() != REPS_PER_COMPLEX {
            return Err(Error::Fixture(format!("K{i} assembles to {} rows", k.len())));
        }
    }
    Ok(())
}

/// Write `K1.dat`..`K4.dat`, the blocks and the small fixtures to `dir`.
pub fn export(dir: &Path) -> Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut out = Vec::new();
    let mut write = |name: String, text: String| -> Result<()> {
        let p = dir.join(name);
        std::fs::write(&p, text)?;
        out.push(p);
        Ok(())
    };
    for i in 1..=4 {
        write(format!("K{i}.dat"), k_reps(i)?.to_dat())?;
    }
    for (name, text) in BLOCKS {
        write(format!("table_{name}.dat"), text.to_string())?;
    }
    write("RP2_6.dat".into(), rp2_6().to_dat())?;
    write("CP2_9.dat".into(), cp2_9().to_dat())?;
    Ok(out)
}

/// Six-vertex real projective plane (antipodal quotient of the icosahedron).
pub fn rp2_6() -> Complex {
    let tris = [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6],
    ];
    Complex::new(6, tris.iter().map(|t| VertexSet::from_vertices(t.iter().copied())).collect())
        .expect("valid fixture")
}

/// Vertex label of the point `(x, y)` of the affine plane over F3.
pub fn cp2_label(x: usize, y: usize) -> usize {
    1 + x % 3 + 3 * (y % 3)
}

/// Nine-vertex complex projective plane on the affine plane over F3, the
/// lines `y = i` being special.
pub fn cp2_9() -> Complex {
    let pt = |x: usize, y: usize| VertexSet::singleton(cp2_label(x, y));
    // non-special lines: x = c, y = x + c, y = 2x + c
    let mut lines: Vec<(usize, VertexSet)> = Vec::new();
    for c in 0..3 {
        lines.push((0, (0..3).map(|y| pt(c, y)).fold(VertexSet::EMPTY, VertexSet::union)));
        lines.push((1, (0..3).map(|x| pt(x, x + c)).fold(VertexSet::EMPTY, VertexSet::union)));
        lines.push((2, (0..3).map(|x| pt(x, 2 * x + c)).fold(VertexSet::EMPTY, VertexSet::union)));
    }
    let mut facets = Vec::new();
    for (i, &(ci, a)) in lines.iter().enumerate() {
        for &(cj, b) in &lines[i + 1..] {
            if ci != cj {
                facets.push(a.union(b));
            }
        }
    }
    let special = |i: usize| (0..3).map(|x| pt(x, i)).fold(VertexSet::EMPTY, VertexSet::union);
    for i in 0..3 {
        let u = special(i).union(special((i + 1) % 3));
        for x in 0..3 {
            facets.push(u.difference(pt(x, i)));
        }
    }
    Complex::new(9, facets).expect("valid fixture")
}

/// The correspondence between points `(x, y)` of the affine plane and the
/// orbits of `⟨B⟩` on the 27 vertices, under which the fixed-point complex
/// of `⟨B⟩` is the nine-vertex complex projective plane.
pub const CP2_BIJECTION: [((usize, usize), [usize; 3]); 9] = [
    ((0, 0), [1, 14, 27]),
    ((1, 0), [12, 20, 24]),
    ((2, 0), [7, 25, 11]),
    ((0, 1), [9, 16, 26]),
    ((1, 1), [5, 6, 21]),
    ((2, 1), [15, 23, 17]),
    ((0, 2), [3, 22, 13]),
    ((1, 2), [2, 4, 10]),
    ((2, 2), [8, 19, 18]),
];

/// Vertex label `4a + b` of the nonzero vector `(a, b)` of `F4²`, with
/// `F4 = {0, 1, ω, ω²}` encoded as 0, 1, 2, 3.
pub fn f4_vector_label(a: u8, b: u8) -> usize {
    (4 * a + b) as usize
}

fn f4_mul(a: u8, b: u8) -> u8 {
    if a == 0 || b == 0 {
        return 0;
    }
    // logs: 1 -> 0, ω -> 1, ω² -> 2
    let log = |x: u8| (x - 1) as usize;
    [1u8, 2, 3][(log(a) + log(b)) % 3]
}

fn f4_add(a: u8, b: u8) -> u8 {
    // 1 = 01, ω = 10, ω² = ω + 1 = 11
    a ^ b
}

/// `SL(2, F4) ≅ A5` acting on the 15 nonzero vectors of `F4²`.
pub fn a5_on_15() -> PermGroup {
    let act = |mat: [[u8; 2]; 2]| {
        let mut images = vec![0u8; 15];
        for a in 0..4u8 {
            for b in 0..4u8 {
                if a == 0 && b == 0 {
                    continue;
                }
                let na = f4_add(f4_mul(mat[0][0], a), f4_mul(mat[0][1], b));
                let nb = f4_add(f4_mul(mat[1][0], a), f4_mul(mat[1][1], b));
                images[f4_vector_label(a, b) - 1] = f4_vector_label(na, nb) as u8;
            }
        }
        Permutation::from_images(images).expect("invertible matrix")
    };
    let gens = vec![act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]]), act([[2, 0], [0, 3]])];
    PermGroup::generate(15, gens).expect("SL(2,4) is small")
}
