//! Published reference values shared by the integration tests and the
//! acceptance harness.
#![allow(dead_code)]

pub mod oracle;

use octoplane::{Complex, Permutation, VertexSet};

/// Face numbers `f_0..f_d` of the projective-plane-like manifolds.
pub const F_D2: [u64; 3] = [6, 15, 10];
pub const F_D4: [u64; 5] = [9, 36, 84, 90, 36];
pub const F_D8: [u64; 9] = [15, 105, 455, 1365, 3003, 4515, 4230, 2205, 490];
pub const F_D16: [u64; 17] = [
    27, 351, 2925, 17550, 80730, 296010, 888030, 2220075, 4686825, 8335899, 12184614, 14074164, 12301200,
    7757100, 3309696, 853281, 100386,
];

/// `s(ρ) = 3..=9` counts for `K_1..K_4`.
pub const S_DIST: [[u64; 7]; 4] = [
    [849771, 1509651, 697788, 201942, 40716, 9477, 351],
    [953316, 1364688, 690066, 237978, 55107, 7020, 1521],
    [940446, 1363986, 724815, 220662, 51597, 7722, 468],
    [868140, 1447524, 764829, 180297, 40716, 6669, 1521],
];

/// `N_pq` for the edge `{1, 2}`, rows and columns `3..=9`.
pub const NPQ: [[[u64; 7]; 7]; 4] = [
    [
        [10860, 22509, 13809, 5375, 1374, 360, 16],
        [22504, 62261, 31272, 10187, 2247, 624, 21],
        [14207, 31196, 20867, 6602, 1481, 372, 13],
        [5267, 10221, 6553, 2905, 737, 183, 13],
        [1400, 2166, 1488, 656, 242, 59, 6],
        [388, 567, 359, 171, 76, 40, 1],
        [16, 24, 14, 5, 6, 0, 0],
    ],
    [
        [14532, 21847, 15078, 6996, 2090, 322, 89],
        [21975, 52378, 28416, 10895, 2745, 389, 79],
        [15408, 28271, 20266, 7554, 1862, 268, 63],
        [6956, 10614, 7825, 3847, 1088, 138, 48],
        [2003, 2796, 1886, 1035, 400, 69, 20],
        [320, 391, 237, 146, 73, 19, 5],
        [72, 106, 50, 31, 18, 4, 0],
    ],
    [
        [14304, 21634, 15634, 6324, 1901, 368, 28],
        [21663, 51651, 30266, 10093, 2596, 408, 28],
        [15911, 30125, 21767, 7505, 1886, 300, 15],
        [6320, 9940, 7467, 3358, 928, 163, 13],
        [1806, 2673, 1904, 936, 328, 71, 7],
        [353, 397, 313, 168, 60, 19, 0],
        [20, 35, 15, 7, 11, 1, 0],
    ],
    [
        [12288, 21553, 15249, 4858, 1361, 276, 75],
        [21376, 56670, 34129, 8632, 2339, 406, 99],
        [15438, 34057, 23961, 6323, 1526, 307, 71],
        [4953, 8724, 6454, 2408, 586, 84, 36],
        [1259, 2286, 1586, 625, 247, 53, 8],
        [251, 409, 284, 112, 48, 17, 9],
        [75, 90, 79, 27, 9, 7, 0],
    ],
];

/// `N_pq` of `K_2 ∩ K_3` for the edge `{1, 2}`, rows and columns `1..=9`.
pub const NPQ_23: [[u64; 9]; 9] = [
    [17, 318, 241, 128, 37, 4, 2, 0, 0],
    [353, 3975, 4336, 3787, 1703, 462, 133, 12, 2],
    [312, 4671, 18186, 23937, 13733, 4676, 1401, 237, 28],
    [146, 3929, 24376, 48766, 23576, 6948, 1821, 259, 28],
    [41, 1655, 14156, 23770, 14830, 4470, 1095, 147, 15],
    [4, 397, 4678, 6910, 4622, 1776, 521, 78, 12],
    [0, 112, 1356, 1887, 1134, 492, 190, 42, 6],
    [0, 14, 228, 258, 156, 74, 36, 9, 0],
    [0, 1, 22, 38, 15, 5, 7, 1, 0],
];

/// Common facet orbits of `K_i` (rows) with `K_j`, `S K_j`, `F K_j`,
/// `SF K_j` (column blocks).
pub const COMMON: [[[usize; 4]; 4]; 4] = [
    [[286, 224, 201, 112], [224, 286, 259, 149], [201, 259, 286, 171], [112, 149, 171, 286]],
    [[12, 8, 8, 4], [8, 5, 5, 3], [8, 5, 5, 3], [4, 3, 3, 3]],
    [[9, 6, 6, 5], [7, 6, 6, 5], [7, 6, 6, 4], [9, 7, 7, 7]],
    [[2, 0, 0, 0], [5, 2, 1, 1], [5, 4, 3, 3], [6, 6, 5, 6]],
];

/// `m_H` for `C3^3`.
pub const M_C3_3: u64 = 630;

/// Random relabelling of `{1..m}` from a seed, by a small LCG shuffle.
pub fn shuffle(m: usize, seed: u64) -> Permutation {
    let mut img: Vec<u8> = (1..=m as u8).collect();
    let mut x = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
    for i in (1..m).rev() {
        x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let j = (x >> 33) as usize % (i + 1);
        img.swap(i, j);
    }
    Permutation::from_images(img).unwrap()
}

/// Complex generated by the sets encoded in `words`, restricted to `m`
/// vertices.
pub fn from_words(m: usize, words: &[u32]) -> Complex {
    let mask = VertexSet::full(m).0;
    let sets: Vec<VertexSet> = words.iter().map(|&w| VertexSet(w & mask)).filter(|s| !s.is_empty()).collect();
    Complex::from_maximal(m, sets).unwrap()
}
