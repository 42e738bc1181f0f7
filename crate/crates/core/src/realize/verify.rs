use serde::Serialize;

use super::geom::{dist, signed_triangle_area, V3};
use super::{SphTiling, TileSpec};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TilingDiagnostic {
    NoTiles,
    NotCongruent {
        tile: usize,
        max_error: f64,
    },
    OutsideTarget {
        tile: usize,
        vertex: usize,
        depth: f64,
    },
    AreaMismatch {
        tiles: f64,
        target: f64,
    },
    Overlap {
        a: usize,
        b: usize,
        area: f64,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub valid: bool,
    pub violation: Option<TilingDiagnostic>,
}

fn sorted3(mut v: [f64; 3]) -> [f64; 3] {
    v.sort_by(|a, b| a.total_cmp(b));
    v
}

/// Area of the intersection of two convex spherical polygons, by clipping `a` against the
/// half-spaces of the counter-clockwise polygon `b`.
pub(crate) fn overlap_area(a: &[V3], b: &[V3]) -> f64 {
    let mut poly: Vec<V3> = a.to_vec();
    let m = b.len();
    for i in 0..m {
        let n = b[i].cross(&b[(i + 1) % m]);
        let nn = n.norm();
        if nn < 1e-15 {
            continue;
        }
        let n = n / nn;
        let k = poly.len();
        if k == 0 {
            return 0.0;
        }
        let mut out = Vec::with_capacity(k + 1);
        for j in 0..k {
            let p = poly[j];
            let q = poly[(j + 1) % k];
            let fp = n.dot(&p);
            let fq = n.dot(&q);
            if fp >= 0.0 {
                out.push(p);
            }
            if (fp >= 0.0) != (fq >= 0.0) {
                let s = fp / (fp - fq);
                out.push((p + (q - p) * s).normalize());
            }
        }
        poly = out;
    }
    if poly.len() < 3 {
        return 0.0;
    }
    (1..poly.len() - 1)
        .map(|i| signed_triangle_area(&poly[0], &poly[i], &poly[i + 1]))
        .sum::<f64>()
        .max(0.0)
}

/// Checks congruence of every tile with the base tile, containment in the (convex) target,
/// area conservation and pairwise interior disjointness. Reports the first violation.
pub fn verify_tiling(t: &SphTiling, tile: &TileSpec, eps: f64) -> Verdict {
    let fail = |d| Verdict {
        valid: false,
        violation: Some(d),
    };
    if t.tiles.is_empty() {
        return fail(TilingDiagnostic::NoTiles);
    }
    let want = sorted3(tile.edges);
    for (i, tr) in t.tiles.iter().enumerate() {
        let got = sorted3([
            dist(&tr[1], &tr[2]),
            dist(&tr[2], &tr[0]),
            dist(&tr[0], &tr[1]),
        ]);
        let err = (0..3).map(|k| (got[k] - want[k]).abs()).fold(0.0, f64::max);
        if err > eps {
            return fail(TilingDiagnostic::NotCongruent {
                tile: i,
                max_error: err,
            });
        }
    }
    let m = t.target.len();
    for (i, tr) in t.tiles.iter().enumerate() {
        for (k, x) in tr.iter().enumerate() {
            for e in 0..m {
                let n = t.target[e].cross(&t.target[(e + 1) % m]);
                if n.norm() < 1e-15 {
                    continue;
                }
                let depth = n.normalize().dot(x);
                if depth < -eps {
                    return fail(TilingDiagnostic::OutsideTarget {
                        tile: i,
                        vertex: k,
                        depth,
                    });
                }
            }
        }
    }
    let areas: Vec<f64> = t
        .tiles
        .iter()
        .map(|tr| signed_triangle_area(&tr[0], &tr[1], &tr[2]).abs())
        .collect();
    let total: f64 = areas.iter().sum();
    let target = t.target_area();
    if (total - target).abs() > t.tiles.len() as f64 * eps {
        return fail(TilingDiagnostic::AreaMismatch {
            tiles: total,
            target,
        });
    }
    let ccw: Vec<Vec<V3>> = t
        .tiles
        .iter()
        .map(|tr| {
            if signed_triangle_area(&tr[0], &tr[1], &tr[2]) >= 0.0 {
                tr.to_vec()
            } else {
                vec![tr[0], tr[2], tr[1]]
            }
        })
        .collect();
    for a in 0..ccw.len() {
        for b in a + 1..ccw.len() {
            let area = overlap_area(&ccw[a], &ccw[b]);
            if area > eps.max(1e-12) * 10.0 {
                return fail(TilingDiagnostic::Overlap { a, b, area });
            }
        }
    }
    Verdict {
        valid: true,
        violation: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::realize::geom::place_triangle;
    use crate::realize::lune_polygon;
    use std::f64::consts::PI;

    #[test]
    fn single_tile_is_valid() {
        let tile = TileSpec::new(rat(1, 4), rat(1, 3), rat(1, 2)).unwrap();
        let tr = place_triangle(tile.angles, tile.edges);
        let t = SphTiling {
            target: tr.to_vec(),
            tiles: vec![tr],
        };
        assert!(verify_tiling(&t, &tile, 1e-9).valid);
    }

    #[test]
    fn lune_by_two_right_triangles() {
        let phi = PI / 4.0;
        let tile = TileSpec::new(rat(1, 4), rat(1, 2), rat(1, 2)).unwrap();
        let lune = lune_polygon(phi);
        let (n, m1, s, m2) = (lune[0], lune[1], lune[2], lune[3]);
        let t = SphTiling {
            target: lune,
            tiles: vec![[n, m1, m2], [s, m2, m1]],
        };
        let v = verify_tiling(&t, &tile, 1e-9);
        assert!(v.valid, "{v:?}");
    }

    #[test]
    fn overlapping_copies_detected() {
        let tile = TileSpec::new(rat(1, 4), rat(1, 3), rat(1, 2)).unwrap();
        let tr = place_triangle(tile.angles, tile.edges);
        let t = SphTiling {
            target: tr.to_vec(),
            tiles: vec![tr, tr],
        };
        let v = verify_tiling(&t, &tile, 1e-9);
        assert!(matches!(
            v.violation,
            Some(TilingDiagnostic::AreaMismatch { .. })
        ));
        assert!(overlap_area(&tr, &tr) > 0.1);
    }
}
