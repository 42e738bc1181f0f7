use std::collections::BTreeMap;
use std::f64::consts::PI;

use reptile_lab::exactmath::{int, rat};
use reptile_lab::gram::{dihedral_angles, dihedral_angles_by_projection, EuclideanSimplex};
use reptile_lab::hill::*;

fn sorted_angles(s: &EuclideanSimplex, f: fn(&EuclideanSimplex) -> reptile_lab::Result<Vec<Vec<f64>>>) -> Vec<f64> {
    let a = f(s).unwrap();
    let mut out = vec![];
    for j in 1..a.len() {
        for i in 0..j {
            out.push(a[i][j]);
        }
    }
    out.sort_by(|x, y| x.partial_cmp(y).unwrap());
    out
}

#[test]
fn h0_in_three_dimensions_has_orthoscheme_angles() {
    let h = hill_simplex(3, 0).unwrap();
    // the orthoscheme of a cube: a path of facets with angles pi/4, pi/3, pi/4
    let want = [PI / 4.0, PI / 4.0, PI / 3.0, PI / 2.0, PI / 2.0, PI / 2.0];
    for f in [dihedral_angles, dihedral_angles_by_projection] {
        let got = sorted_angles(&h, f);
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).abs() < 1e-12, "{got:?}");
        }
    }
}

#[test]
fn volumes_double_from_h0_to_h2() {
    for d in 2..=4 {
        let v: Vec<_> = (0..3).map(|i| hill_simplex(d, i).unwrap().volume()).collect();
        assert_eq!(v[1], &v[0] * int(2));
        assert_eq!(v[2], &v[1] * int(2));
        let fact: i64 = (1..=d as i64).product();
        assert_eq!(v[0], rat(1, fact << d));
    }
}

#[test]
fn a_lattice_tile_is_a_copy_of_h1() {
    for d in 2..=4 {
        let h1 = hill_simplex(d, 1).unwrap();
        for t in tiles_in_cube(&vec![0; d]) {
            assert!(congruent(&t.simplex(), &h1), "{t:?}");
        }
        assert!(!congruent(&hill_simplex(d, 0).unwrap(), &h1));
    }
}

#[test]
fn h1_tilings_in_low_dimensions() {
    for d in [2, 3] {
        for m in 1..=3 {
            let r = check_h1_tiling(d, m).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.tile_count, (m as usize).pow(d as u32));
        }
    }
}

#[test]
fn h1_tilings_in_four_dimensions() {
    for m in [2, 3] {
        let r = check_h1_tiling(4, m).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}

#[test]
fn h2_pairings() {
    for (d, m) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (4, 2), (4, 3)] {
        let r = check_h2_pairing(d, m).unwrap();
        assert!(r.passed(), "d={d} m={m}: {r:?}");
        assert_eq!(r.pair_count, Some((m as usize).pow(d as u32)));
        // every restricted component holds an even number of tiles
        assert!(r.component_profile.keys().all(|k| k % 2 == 0), "{r:?}");
    }
}

#[test]
fn components_around_one_cube_are_four_cycles() {
    for d in 2..=4 {
        let tiles = tiles_in_cube(&vec![0; d]);
        let g = compatibility_graph(&tiles);
        assert!(g.all_four_cycles);
        let per_cube: usize = (1..=d).product::<usize>() << (d - 1);
        assert_eq!(g.profile, BTreeMap::from([(4, per_cube / 4)]));
    }
}

#[test]
fn compatible_means_union_is_h2() {
    // tiles of a 2x2x2 block of cubes, so neighbours across cube faces are included
    let h2 = hill_simplex(3, 2).unwrap();
    let mut tiles = vec![];
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                tiles.extend(tiles_in_cube(&[a, b, c]));
            }
        }
    }
    for i in 0..tiles.len() {
        for j in i + 1..tiles.len() {
            let u = union_simplex(&tiles[i], &tiles[j]).filter(|s| congruent(s, &h2));
            assert_eq!(u.is_some(), tiles[i].is_compatible(&tiles[j]), "{:?} {:?}", tiles[i], tiles[j]);
        }
    }
}

#[test]
fn distinct_tiles_never_overlap() {
    let mut tiles = tiles_in_cube(&[0, 0, 0]);
    tiles.extend(tiles_in_cube(&[1, 0, 0]));
    for i in 0..tiles.len() {
        for j in i + 1..tiles.len() {
            assert!(interiors_disjoint(&tiles[i], &tiles[j]));
        }
        assert!(!interiors_disjoint(&tiles[i], &tiles[i]));
    }
}

#[test]
fn numeric_congruence_agrees() {
    let h1 = hill_simplex(3, 1).unwrap();
    for t in tiles_in_cube(&[2, -1, 0]) {
        assert!(congruent_f64(&t.simplex().vertices_f64(), &h1.vertices_f64(), 1e-12));
    }
    let h0 = hill_simplex(3, 0).unwrap();
    assert!(!congruent_f64(&h0.vertices_f64(), &h1.vertices_f64(), 1e-12));
}

#[test]
fn exports() {
    let tiles = generate_h1_tiling(3, 2).unwrap();
    let json: serde_json::Value = serde_json::from_str(&tiling_to_json(&tiles).unwrap()).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 8);
    assert!(json[0]["center"][0].as_str().unwrap().contains('/'));
    let off = tiling_to_off(&tiles).unwrap();
    let mut lines = off.lines();
    assert_eq!(lines.next(), Some("OFF"));
    let counts: Vec<usize> = lines.next().unwrap().split(' ').map(|x| x.parse().unwrap()).collect();
    assert_eq!(counts[1], 32);
    assert!(tiling_to_off(&generate_h1_tiling(4, 1).unwrap()).is_err());
    assert!(tiling_to_off(&generate_h1_tiling(2, 2).unwrap()).unwrap().starts_with("OFF"));
}

#[test]
fn bad_arguments() {
    assert!(generate_h1_tiling(3, 0).is_err());
    assert!(pair_h2_tiling(1, 2).is_err());
}
