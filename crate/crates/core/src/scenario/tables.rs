//! Reference data the scenarios compare against.

use crate::coxeter::{all_perms, EdgePartition};

/// One row of the two-indivisible case table: the two frequent triangle types over the
/// letters `a, b, c, d` and the number of edges carrying each letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub case: usize,
    pub t1: [u8; 3],
    pub t2: [u8; 3],
    pub counts: [usize; 4],
}

const A: u8 = 0;
const B: u8 = 1;
const C: u8 = 2;
const D: u8 = 3;

pub const TWO_INDIVISIBLE_ROWS: [TableRow; 5] = [
    TableRow { case: 1, t1: [A, A, B], t2: [A, C, D], counts: [4, 2, 2, 2] },
    TableRow { case: 2, t1: [A, A, A], t2: [A, B, C], counts: [6, 2, 2, 0] },
    TableRow { case: 3, t1: [A, A, B], t2: [A, A, C], counts: [6, 2, 2, 0] },
    TableRow { case: 4, t1: [A, A, B], t2: [A, C, C], counts: [4, 2, 4, 0] },
    TableRow { case: 5, t1: [A, A, B], t2: [A, B, C], counts: [4, 4, 2, 0] },
];

/// Table rows the partition realises: some renaming of its blocks to letters gives the row's
/// edge counts and makes both row types occur at least four times.
pub fn match_table_rows(p: &EdgePartition) -> Vec<usize> {
    let k = p.block_count();
    let census = p.triangle_census();
    let mut sizes = vec![0usize; k];
    for &b in &p.blocks {
        sizes[b as usize] += 1;
    }
    TWO_INDIVISIBLE_ROWS
        .iter()
        .filter(|row| row.counts.iter().filter(|&&c| c > 0).count() == k)
        .filter(|row| {
            all_perms(k).iter().any(|perm| {
                // block i gets letter perm(i)
                let letter_of = |b: u8| perm.apply(b as usize) as u8;
                let to_blocks = |t: [u8; 3]| {
                    let mut v: Vec<u8> = t
                        .iter()
                        .map(|&l| (0..k as u8).find(|&b| letter_of(b) == l).unwrap_or(u8::MAX))
                        .collect();
                    v.sort_unstable();
                    [v[0], v[1], v[2]]
                };
                (0..k).all(|b| sizes[b] == row.counts[letter_of(b as u8) as usize])
                    && [row.t1, row.t2]
                        .iter()
                        .all(|&t| census.get(&to_blocks(t)).is_some_and(|&c| c >= 4))
            })
        })
        .map(|row| row.case)
        .collect()
}

/// Determinants of the four parametric Gram matrices in `t = cos(beta)` as products of
/// integer polynomials (coefficients from the constant term up), with their real roots to
/// two decimals.
pub const PARAMETRIC: [(&str, &[&[i64]], &[f64]); 4] = [
    (
        "alpha-plus-2beta-1",
        &[&[0, 0, -1], &[-1, 2], &[-2, -1, 2], &[-2, -1, 4, 4]],
        &[-0.78, 0.0, 0.5, 0.63, 1.28],
    ),
    (
        "alpha-plus-2beta-2",
        &[&[0, 0, -1], &[-1, 2], &[-2, 1, 2], &[-2, -3, 2, 4]],
        &[-1.28, 0.0, 0.5, 0.78, 0.92],
    ),
    (
        "alpha-plus-2beta-3",
        &[&[0, 0, 0, 0, -1], &[-1, 2], &[1, 2], &[-3, 0, 4]],
        &[-0.87, -0.5, 0.0, 0.5, 0.87],
    ),
    (
        "alpha-plus-2beta-4",
        &[&[0, 0, 0, 0, -8], &[-1, 0, 2], &[2, 0, -7, 0, 4]],
        &[-1.18, -0.71, -0.60, 0.0, 0.60, 0.71, 1.18],
    ),
];

/// Per value of alpha (as `p/q` of pi): a short key, approximate edge lengths opposite
/// alpha, beta, gamma, and the realizable triangles containing alpha and containing beta
/// but not alpha. Triangles are written as angle forms.
pub struct CaseCTile {
    pub key: &'static str,
    pub alpha: (i64, i64),
    pub edges: [f64; 3],
    pub alpha_list: &'static [&'static str],
    pub beta_list: &'static [&'static str],
    /// Expressible candidates that admit no tiling.
    pub unrealizable: &'static [&'static str],
    /// Number of rich diagrams.
    pub diagrams: usize,
    /// Fixtures expected among the enumerated diagrams.
    pub fixtures: &'static [&'static str],
}

pub const CASE_C: [CaseCTile; 3] = [
    CaseCTile {
        key: "pi-4",
        alpha: (1, 4),
        edges: [0.615, 0.785, 0.955],
        alpha_list: &[
            "alpha, alpha, 2*beta",
            "alpha, gamma, gamma",
            "alpha, beta, 3*alpha",
            "alpha, gamma, 2*beta",
        ],
        beta_list: &[
            "beta, beta, gamma",
            "beta, beta, 2*beta",
            "beta, gamma, 2*beta",
            "beta, gamma, 3*alpha",
        ],
        unrealizable: &[],
        diagrams: 3,
        fixtures: &["quarter-pi-1", "quarter-pi-2", "quarter-pi-3"],
    },
    CaseCTile {
        key: "pi-5",
        alpha: (1, 5),
        edges: [0.365, 0.554, 0.652],
        alpha_list: &[
            "alpha, alpha, 2*beta",
            "alpha, 2*alpha, gamma",
            "alpha, beta, 3*alpha",
            "alpha, beta, 2*beta",
            "alpha, alpha, 4*alpha",
            "alpha, 2*alpha, 2*beta",
            "alpha, gamma, 3*alpha",
            "alpha, beta, 4*alpha",
            "alpha, gamma, 2*beta",
        ],
        beta_list: &[
            "beta, beta, 2*alpha",
            "beta, 2*alpha, gamma",
            "beta, 2*alpha, 3*alpha",
            "beta, gamma, 3*alpha",
            "beta, beta, 4*alpha",
            "beta, 2*alpha, 4*alpha",
            "beta, 3*alpha, 2*beta",
            "beta, gamma, 4*alpha",
        ],
        unrealizable: &[],
        diagrams: 3,
        fixtures: &["fifth-pi-1", "fifth-pi-2", "fifth-pi-3"],
    },
    CaseCTile {
        key: "2pi-9",
        alpha: (2, 9),
        edges: [0.485, 0.680, 0.812],
        alpha_list: &[
            "alpha, alpha, 2*beta",
            "alpha, 2*alpha, gamma",
            "alpha, beta, 2*beta",
            "alpha, gamma, alpha+beta",
            "alpha, beta, 2*alpha+beta",
            "alpha, alpha, 4*alpha",
            "alpha, gamma, 2*beta",
        ],
        beta_list: &[
            "beta, beta, 2*alpha",
            "beta, alpha+beta, 2*beta",
            "beta, gamma, 2*alpha+beta",
        ],
        unrealizable: &["beta, beta, 2*alpha+beta"],
        diagrams: 0,
        fixtures: &[],
    },
];

/// Approximate determinants of the six Gram matrices at fixed alpha, two decimals, with the
/// exact value where it is rational.
pub const FIXED_ALPHA_DETERMINANTS: [(&str, f64, Option<(i64, i64)>); 6] = [
    ("quarter-pi-1", 0.06, Some((1, 16))),
    ("quarter-pi-2", 0.13, Some((1, 8))),
    ("quarter-pi-3", 0.21, None),
    ("fifth-pi-1", 0.16, None),
    ("fifth-pi-2", 0.16, None),
    ("fifth-pi-3", 0.12, None),
];

/// Automorphism group orders of the two-indivisible fixtures with the table row each realises.
pub const TWO_INDIVISIBLE_FIXTURES: [(&str, usize, usize); 6] = [
    ("k5-cycle-split-spokes", 4, 1),
    ("k5-alpha-k4", 4, 2),
    ("k5-alpha-k23", 4, 3),
    ("k5-cycle-uniform-spokes", 8, 4),
    ("k5-cycle-alternating-spokes", 4, 5),
    ("k5-alpha-fork", 2, 5),
];
