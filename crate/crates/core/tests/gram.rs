use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use reptile_lab::angles::AngleAssignment;
use reptile_lab::exactmath::{int, rat, Exact, ExactMatrix, Poly, QuadExt, Rational};
use reptile_lab::fixtures;
use reptile_lab::gram::{
    dihedral_angles, dihedral_angles_by_projection, fiedler_check, gram_from_diagram,
    parametric_fiedler, EuclideanSimplex, GramMatrix,
};
use reptile_lab::spherical::is_valid_forms;

/// Parses a 5x5 matrix over Q[t] written with the tokens `0`, `-1`, `t`, `-t`, `s` (= 1-2t^2)
/// and `-s` (= 2t^2-1).
fn poly_matrix(rows: [&str; 5]) -> ExactMatrix {
    let s = Poly::from_ints(&[1, 0, -2]);
    let entries = rows
        .iter()
        .flat_map(|r| r.split_whitespace())
        .map(|tok| {
            Exact::Poly(match tok {
                "0" => Poly::zero(),
                "-1" => Poly::from_ints(&[-1]),
                "t" => Poly::t(),
                "-t" => Poly::t().neg(),
                "s" => s.clone(),
                "-s" => s.neg(),
                _ => panic!("bad token {tok}"),
            })
        })
        .collect();
    ExactMatrix::new(5, entries).unwrap()
}

/// Builds a 5x5 matrix over Q(sqrt m) from tokens `a` or `a|b` with rationals `a`, `b`
/// meaning `a + b*sqrt(m)`.
fn quad_matrix(m: i64, rows: [[&str; 5]; 5]) -> ExactMatrix {
    let q = |s: &str| s.parse::<Rational>().unwrap();
    let entries = rows
        .iter()
        .flatten()
        .map(|tok| {
            let (a, b) = match tok.split_once('|') {
                Some((a, b)) => (q(a), q(b)),
                None => (q(tok), int(0)),
            };
            Exact::Quad(QuadExt::new(a, b, m).unwrap())
        })
        .collect();
    ExactMatrix::new(5, entries).unwrap()
}

fn product(fs: &[&[i64]]) -> Poly {
    fs.iter()
        .fold(Poly::one(), |acc, f| acc.mul(&Poly::from_ints(f)))
}

fn gram_of(name: &str) -> GramMatrix {
    gram_from_diagram(&fixtures::diagram(name).unwrap(), None).unwrap()
}

struct ParamCase {
    fixture: &'static str,
    matrix: [&'static str; 5],
    factors: &'static [&'static [i64]],
    roots: &'static [f64],
}

const PARAM: &[ParamCase] = &[
    ParamCase {
        fixture: "alpha-plus-2beta-1",
        matrix: [
            "-1 0 t s t",
            "0 -1 -t t s",
            "t -t -1 0 0",
            "s t 0 -1 0",
            "t s 0 0 -1",
        ],
        // -t^2 (2t-1)(2t^2-t-2)(4t^3+4t^2-t-2)
        factors: &[&[0, 0, -1], &[-1, 2], &[-2, -1, 2], &[-2, -1, 4, 4]],
        roots: &[-0.78, 0.0, 0.5, 0.63, 1.28],
    },
    ParamCase {
        fixture: "alpha-plus-2beta-2",
        matrix: [
            "-1 t t s 0",
            "t -1 -t 0 s",
            "t -t -1 0 0",
            "s 0 0 -1 t",
            "0 s 0 t -1",
        ],
        factors: &[&[0, 0, -1], &[-1, 2], &[-2, 1, 2], &[-2, -3, 2, 4]],
        roots: &[-1.28, 0.0, 0.5, 0.78, 0.92],
    },
    ParamCase {
        fixture: "alpha-plus-2beta-3",
        matrix: [
            "-1 0 t s -t",
            "0 -1 t t s",
            "t t -1 0 0",
            "s t 0 -1 0",
            "-t s 0 0 -1",
        ],
        factors: &[&[0, 0, 0, 0, -1], &[-1, 2], &[1, 2], &[-3, 0, 4]],
        roots: &[-0.87, -0.5, 0.0, 0.5, 0.87],
    },
    ParamCase {
        fixture: "alpha-plus-2beta-4",
        matrix: [
            "-1 -s s t 0",
            "-s -1 s t 0",
            "s s -1 0 t",
            "t t 0 -1 s",
            "0 0 t s -1",
        ],
        factors: &[&[0, 0, 0, 0, -8], &[-1, 0, 2], &[2, 0, -7, 0, 4]],
        roots: &[-1.18, -0.71, -0.60, 0.0, 0.60, 0.71, 1.18],
    },
];

#[test]
fn parametric_matrices_come_from_the_fixtures() {
    for c in PARAM {
        let g = gram_of(c.fixture);
        assert_eq!(g.ring(), "Q[t]", "{}", c.fixture);
        assert_eq!(g.exact().unwrap(), &poly_matrix(c.matrix), "{}", c.fixture);
    }
}

#[test]
fn parametric_determinants_match_factorisations() {
    for c in PARAM {
        let det = poly_matrix(c.matrix).det().unwrap();
        assert_eq!(det, Exact::Poly(product(c.factors)), "{}", c.fixture);
    }
}

#[test]
fn parametric_roots_and_exclusion() {
    for c in PARAM {
        let g = gram_of(c.fixture);
        let r = parametric_fiedler(&g, &int(0), &rat(1, 2)).unwrap();
        assert_eq!(r.roots_in_interval, 0, "{}", c.fixture);
        assert!(r.excluded);
        let roots = r.real_roots(&rat(1, 1 << 20)).unwrap();
        let mids: Vec<f64> = roots.iter().map(|x| x.midpoint_f64()).collect();
        assert_eq!(mids.len(), c.roots.len(), "{}: {mids:?}", c.fixture);
        for (m, want) in mids.iter().zip(c.roots) {
            assert!(
                (m - want).abs() < 0.005 + 1e-9,
                "{}: {m} vs {want}",
                c.fixture
            );
        }
    }
}

#[test]
fn the_fifth_parametric_diagram_is_not_needed() {
    // its triangle on u, v, x is not a spherical triangle, so no matrix is listed for it
    let d = fixtures::diagram("alpha-plus-2beta-5").unwrap();
    let t = d.triangle_type(0, 1, 3);
    assert_eq!(t.to_string(), "(beta, 2*beta, pi-beta)");
    let forms = t.labels().clone().map(|l| l.as_angle().unwrap().clone());
    for k in 1..10 {
        // beta ranges over (pi/3, pi/2)
        let beta = PI / 3.0 + PI / 6.0 * k as f64 / 10.0;
        let sample = AngleAssignment::new(PI - 2.0 * beta, beta, PI / 2.0);
        assert!(
            !is_valid_forms(&forms, d.relations(), &sample)
                .unwrap()
                .valid
        );
    }
}

const H: &str = "1/2";
const MH: &str = "-1/2";

fn numeric_cases() -> Vec<(&'static str, ExactMatrix, Option<Rational>, f64)> {
    let r2 = "0|1/2"; // sqrt(2)/2
    let mr2 = "0|-1/2";
    let p = "1/4|1/4"; // (1 + sqrt 5)/4
    let mp = "-1/4|-1/4";
    let q = "-1/4|1/4"; // (sqrt 5 - 1)/4
    let mq = "1/4|-1/4";
    vec![
        (
            "quarter-pi-1",
            quad_matrix(
                2,
                [
                    ["-1", H, r2, H, "0"],
                    [H, "-1", "0", "0", H],
                    [r2, "0", "-1", "0", MH],
                    [H, "0", "0", "-1", r2],
                    ["0", H, MH, r2, "-1"],
                ],
            ),
            Some(rat(1, 16)),
            0.06,
        ),
        (
            "quarter-pi-2",
            quad_matrix(
                2,
                [
                    ["-1", MH, H, r2, "0"],
                    [MH, "-1", H, r2, mr2],
                    [H, H, "-1", "0", r2],
                    [r2, r2, "0", "-1", H],
                    ["0", mr2, r2, H, "-1"],
                ],
            ),
            Some(rat(1, 8)),
            0.13,
        ),
        (
            "quarter-pi-3",
            quad_matrix(
                2,
                [
                    ["-1", "0", H, r2, "0"],
                    ["0", "-1", H, MH, "0"],
                    [H, H, "-1", "0", r2],
                    [r2, MH, "0", "-1", H],
                    ["0", "0", r2, H, "-1"],
                ],
            ),
            None,
            0.21,
        ),
        (
            "fifth-pi-1",
            quad_matrix(
                5,
                [
                    ["-1", p, p, H, "0"],
                    [p, "-1", mp, "0", H],
                    [p, mp, "-1", MH, q],
                    [H, "0", MH, "-1", p],
                    ["0", H, q, p, "-1"],
                ],
            ),
            None,
            0.16,
        ),
        (
            "fifth-pi-2",
            quad_matrix(
                5,
                [
                    ["-1", mp, H, p, "0"],
                    [mp, "-1", H, p, mq],
                    [H, H, "-1", "0", p],
                    [p, p, "0", "-1", H],
                    ["0", mq, p, H, "-1"],
                ],
            ),
            None,
            0.16,
        ),
        (
            "fifth-pi-3",
            quad_matrix(
                5,
                [
                    ["-1", mp, H, p, "0"],
                    [mp, "-1", H, p, MH],
                    [H, H, "-1", "0", p],
                    [p, p, "0", "-1", H],
                    ["0", MH, p, H, "-1"],
                ],
            ),
            None,
            0.12,
        ),
    ]
}

#[test]
fn numeric_matrices_come_from_the_fixtures() {
    for (name, m, _, _) in numeric_cases() {
        let g = gram_of(name);
        assert_eq!(g.exact().unwrap(), &m, "{name}");
    }
}

#[test]
fn numeric_determinants_are_nonzero() {
    for (name, m, exact, approx) in numeric_cases() {
        let det = m.det().unwrap();
        if let Some(q) = exact {
            assert_eq!(det.as_rational(), Some(q), "{name}");
        }
        let v = det.to_f64().unwrap();
        assert!((v - approx).abs() <= 0.005 + 1e-12, "{name}: {v}");
        let r = fiedler_check(&GramMatrix::from_exact(m).unwrap(), 1e-9).unwrap();
        assert!(!r.is_singular);
        assert!(!r.simplex_possible, "{name}");
    }
}

#[test]
fn frozen_exact_determinants() {
    // computed once from the fixtures and kept as regression anchors
    let want = [
        ("quarter-pi-3", rat(9, 16), rat(-1, 4), 2),
        ("fifth-pi-1", rat(3, 32), rat(1, 32), 5),
        ("fifth-pi-2", rat(3, 32), rat(1, 32), 5),
        ("fifth-pi-3", rat(15, 32), rat(-5, 32), 5),
    ];
    for (name, a, b, m) in want {
        let d = gram_of(name).exact().unwrap().det().unwrap();
        assert_eq!(d, Exact::Quad(QuadExt::new(a, b, m).unwrap()), "{name}");
    }
}

fn random_simplex(rng: &mut ChaCha8Rng, d: usize) -> EuclideanSimplex {
    loop {
        let pts = (0..=d)
            .map(|_| {
                (0..d)
                    .map(|_| rat(rng.gen_range(-20..=20), rng.gen_range(1..=7)))
                    .collect()
            })
            .collect();
        if let Ok(s) = EuclideanSimplex::new(pts) {
            return s;
        }
    }
}

#[test]
fn regular_tetrahedron_angles() {
    let s = EuclideanSimplex::new(vec![
        vec![int(1), int(1), int(1)],
        vec![int(1), int(-1), int(-1)],
        vec![int(-1), int(1), int(-1)],
        vec![int(-1), int(-1), int(1)],
    ])
    .unwrap();
    let want = (1.0f64 / 3.0).acos();
    for a in [
        dihedral_angles(&s).unwrap(),
        dihedral_angles_by_projection(&s).unwrap(),
    ] {
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    assert!((a[i][j] - want).abs() < 1e-12);
                }
            }
        }
    }
}

#[test]
fn random_simplices_pass_the_singularity_test() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..100 {
        let d = 3 + k % 2;
        let s = random_simplex(&mut rng, d);
        let a = dihedral_angles(&s).unwrap();
        let b = dihedral_angles_by_projection(&s).unwrap();
        for i in 0..=d {
            for j in 0..=d {
                assert!((a[i][j] - b[i][j]).abs() < 1e-8, "simplex {k}");
            }
        }
        let r = fiedler_check(&GramMatrix::from_angles(&a).unwrap(), 1e-9).unwrap();
        assert!(r.is_singular, "simplex {k}: {:?}", r.eigenvalues);
        assert_eq!(r.rank, Some(d));
        assert_eq!(r.negative_semidefinite, Some(true));
        assert_eq!(r.kernel_positive, Some(true));
        assert!(r.simplex_possible);
    }
}

#[test]
fn perturbed_gram_is_rejected() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let s = random_simplex(&mut rng, 4);
    let mut a = dihedral_angles(&s).unwrap();
    a[0][1] += 1e-3;
    a[1][0] += 1e-3;
    let r = fiedler_check(&GramMatrix::from_angles(&a).unwrap(), 1e-9).unwrap();
    assert!(!r.simplex_possible);
}

#[test]
fn sliver_kernel_is_proportional_to_facet_areas() {
    // a nearly flat tetrahedron: three dihedral angles within 0.1 of pi
    let s = EuclideanSimplex::new(vec![
        vec![int(-13), rat(4, 3), rat(23, 2)],
        vec![rat(3, 8), int(12), int(-1)],
        vec![int(3), rat(-25, 6), rat(25, 8)],
        vec![rat(-3, 8), rat(7, 9), rat(10, 3)],
    ])
    .unwrap();
    let r = fiedler_check(&GramMatrix::from_angles(&dihedral_angles(&s).unwrap()).unwrap(), 1e-9).unwrap();
    assert!(r.simplex_possible, "{}", r.verdict);
    // facet areas, normalised, computed by hand from cross products
    let want = [0.13761061, 0.21142443, 0.48736509, 0.83596549];
    for (k, w) in r.kernel.unwrap().iter().zip(want) {
        assert!((k - w).abs() < 1e-7);
    }
}
