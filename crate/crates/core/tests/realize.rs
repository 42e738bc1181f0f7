use std::f64::consts::PI;

use proptest::prelude::*;

use reptile_lab::angles::AngleForm;
use reptile_lab::exactmath::{int, rat, to_f64, Rational};
use reptile_lab::realize::*;
use reptile_lab::spherical::{edge_lengths, is_valid};

fn radians(q: &Rational) -> f64 {
    to_f64(q) * PI
}

/// Degree of `k^(1/d)`: the least `n` with `k^n` a perfect `d`-th power, read off the
/// prime factorisation.
fn degree_by_factoring(k: u64, d: u32) -> u32 {
    let mut exps = vec![];
    let (mut m, mut p) = (k, 2);
    while m > 1 {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        if e > 0 {
            exps.push(e);
        }
        p += 1;
    }
    (1..=d).find(|n| exps.iter().all(|e| (n * e) % d == 0)).unwrap()
}

#[test]
fn algebraic_degree_matches_factoring() {
    for d in 2..=6 {
        for k in 2..=200 {
            let r = algebraic_degree(k, d).unwrap();
            assert_eq!(r.degree, degree_by_factoring(k, d), "k={k} d={d}");
            assert_eq!(integer_root(k, d / r.degree).map(|_| ()), Some(()));
        }
    }
    assert!(algebraic_degree(1, 4).is_err());
    assert!(algebraic_degree(5, 1).is_err());
}

#[test]
fn candidates_are_consistent() {
    for a in [(1, 4), (1, 5), (2, 9)] {
        let tile = TileSpec::new(rat(a.0, a.1), rat(1, 3), rat(1, 2)).unwrap();
        for (tau, lo) in [(AngleForm::alpha(), AngleForm::zero()), (AngleForm::beta(), AngleForm::alpha())] {
            for c in enumerate_candidates(&tile, &tau, &lo).unwrap() {
                let [t, p, q] = c.angles(&tile);
                assert!(is_valid([t, p, q]).valid);
                // area is n tiles
                let excess = tile.pi_value(&c.tau) + &c.phi_pi + &c.psi_pi - int(1);
                assert_eq!(excess, tile.area_pi() * int(c.n as i64));
                // phi + psi uses the recorded multiplicities of the tile angles
                let m = &c.m;
                let sum = &tile.pi_units[0] * int(m[0] as i64)
                    + &tile.pi_units[1] * int(m[1] as i64)
                    + &tile.pi_units[2] * int(m[2] as i64);
                assert_eq!(sum, &c.phi_pi + &c.psi_pi);
                // x is the edge opposite tau
                assert!((edge_lengths([t, p, q]).unwrap()[0] - c.x).abs() < 1e-12);
                // expressibility agrees with a direct scan of small combinations
                let e = tile.edges;
                let direct = (0..20u32).any(|i| {
                    (0..20 - i).any(|j| {
                        (0..20 - i - j).any(|k| {
                            (i as f64 * e[0] + j as f64 * e[1] + k as f64 * e[2] - c.x).abs() <= DEFAULT_TOL
                        })
                    })
                });
                assert_eq!(direct, c.edge.is_expressible(), "{c:?}");
            }
        }
    }
}

#[test]
fn edge_combination_reports_neighbours() {
    let edges = [1.0, 1.5, 2.25];
    match edge_combination(2.5, edges, 10, 1e-9) {
        EdgeStatus::Expressible { combo } => assert!((combo.value - 2.5).abs() < 1e-12),
        s => panic!("{s:?}"),
    }
    match edge_combination(0.4, edges, 10, 1e-9) {
        EdgeStatus::Inexpressible { below, above } => {
            assert_eq!(below.unwrap().value, 0.0);
            assert_eq!(above.unwrap().value, 1.0);
        }
        s => panic!("{s:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Two copies of a right triangle, mirrored in a leg, form the isosceles triangle
    /// `(2 beta, gamma, gamma)`.
    #[test]
    fn mirrored_right_triangles_are_found(b in 2i64..=11, g in 2i64..=11) {
        let (beta, gamma) = (rat(1, 2 * b), rat(g - 1, 2 * g));
        prop_assume!(is_valid([radians(&beta), radians(&gamma), PI / 2.0]).valid);
        let tile = TileSpec::new(beta.clone(), gamma.clone(), rat(1, 2)).unwrap();
        let target = [radians(&(&beta * int(2))), radians(&gamma), radians(&gamma)];
        prop_assume!(is_valid(target).valid);
        let cfg = SearchConfig { n_max: 2, ..SearchConfig::default() };
        let (out, _) = search_tiling(target, &tile, &cfg).unwrap();
        let SearchOutcome::Found(t) = out else {
            return Err(TestCaseError::fail(format!("no tiling for {beta} pi, {gamma} pi")));
        };
        prop_assert_eq!(t.tiles.len(), 2);
        prop_assert!(verify_tiling(&t, &tile, 1e-9).valid);
        let back = TilingJson::from_tiling(&t).to_tiling();
        prop_assert!(verify_tiling(&back, &tile, 1e-7).valid);
    }
}

#[test]
fn verifier_rejects_a_damaged_tiling() {
    let tile = TileSpec::new(rat(1, 4), rat(1, 3), rat(1, 2)).unwrap();
    let target = [PI / 4.0, PI / 2.0, PI / 2.0];
    let (out, _) = search_tiling(target, &tile, &SearchConfig { n_max: 3, ..SearchConfig::default() }).unwrap();
    let SearchOutcome::Found(t) = out else { panic!("expected a tiling") };
    assert_eq!(t.tiles.len(), 3);
    assert!(verify_tiling(&t, &tile, 1e-9).valid);

    let mut missing = t.clone();
    missing.tiles.pop();
    assert!(!verify_tiling(&missing, &tile, 1e-9).valid);

    let mut doubled = t.clone();
    doubled.tiles.push(t.tiles[0]);
    assert!(!verify_tiling(&doubled, &tile, 1e-9).valid);
}

#[test]
fn search_gives_up_on_impossible_targets() {
    let tile = TileSpec::new(rat(2, 9), rat(1, 3), rat(1, 2)).unwrap();
    let target = [PI / 3.0, PI / 3.0, 7.0 * PI / 9.0];
    // eight tiles by area, but no tiling exists
    let cfg = SearchConfig { n_max: 8, ..SearchConfig::default() };
    let (out, stats) = search_tiling(target, &tile, &cfg).unwrap();
    assert!(matches!(out, SearchOutcome::Exhausted));
    assert!(stats.nodes > 0);

    let tiny = SearchConfig { n_max: 8, node_budget: 1, ..SearchConfig::default() };
    assert!(matches!(search_tiling(target, &tile, &tiny).unwrap().0, SearchOutcome::Aborted));
}

#[test]
fn screen_rejects_unusable_triangles() {
    let tile = TileSpec::new(rat(1, 4), rat(1, 3), rat(1, 2)).unwrap();
    assert!(screen_triangle(&tile, &[rat(1, 3), rat(1, 2), rat(1, 2)]).is_err());
    assert!(screen_triangle(&tile, &[rat(1, 4), rat(1, 3), rat(1, 2)]).is_ok());
}

#[test]
fn svg_output_is_well_formed() {
    let tile = TileSpec::new(rat(1, 3), rat(1, 3), rat(1, 2)).unwrap();
    let target = [PI / 2.0, 2.0 * PI / 3.0, 2.0 * PI / 3.0];
    let (out, _) = search_tiling(target, &tile, &SearchConfig { n_max: 5, ..SearchConfig::default() }).unwrap();
    let SearchOutcome::Found(t) = out else { panic!("expected a tiling") };
    let svg = render_svg(&t, &tile, "five tiles");
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert!(svg.matches("<polygon").count() + svg.matches("<path").count() >= 5);
}

#[test]
fn invalid_tiles_are_rejected() {
    assert!(TileSpec::new(rat(1, 2), rat(1, 2), rat(1, 2)).is_ok());
    assert!(TileSpec::new(rat(1, 4), rat(1, 4), rat(1, 4)).is_err());
}
