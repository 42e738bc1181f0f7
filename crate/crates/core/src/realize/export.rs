use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt::Write;

use super::geom::{interior_angle, Chart, V3};
use super::{SphTiling, TileSpec};

const GRID: f64 = 1e-7;
const ARC_SEGMENTS: usize = 64;

/// Indexed form of a tiling: shared vertices are merged on a `1e-7` grid.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TilingJson {
    pub vertices: Vec<[f64; 3]>,
    pub target: Vec<usize>,
    pub tiles: Vec<[usize; 3]>,
}

impl TilingJson {
    pub fn from_tiling(t: &SphTiling) -> TilingJson {
        let mut index: HashMap<[i64; 3], usize> = HashMap::new();
        let mut vertices = Vec::new();
        let mut id = |v: &V3| {
            let k = [v.x, v.y, v.z].map(|c| (c / GRID).round() as i64);
            *index.entry(k).or_insert_with(|| {
                vertices.push([v.x, v.y, v.z]);
                vertices.len() - 1
            })
        };
        let target = t.target.iter().map(&mut id).collect();
        let tiles = t
            .tiles
            .iter()
            .map(|tr| [id(&tr[0]), id(&tr[1]), id(&tr[2])])
            .collect();
        TilingJson {
            vertices,
            target,
            tiles,
        }
    }

    pub fn to_tiling(&self) -> SphTiling {
        let v = |i: usize| {
            V3::new(
                self.vertices[i][0],
                self.vertices[i][1],
                self.vertices[i][2],
            )
        };
        SphTiling {
            target: self.target.iter().map(|&i| v(i)).collect(),
            tiles: self
                .tiles
                .iter()
                .map(|t| [v(t[0]), v(t[1]), v(t[2])])
                .collect(),
        }
    }
}

/// Whether the tile's corners, read counter-clockwise, carry the base tile's angles in the
/// same cyclic order (a rotation rather than a reflection of the base tile).
fn is_direct(tr: &[V3; 3], tile: &TileSpec) -> bool {
    let a: Vec<f64> = (0..3)
        .map(|i| interior_angle(&tr[(i + 2) % 3], &tr[i], &tr[(i + 1) % 3]))
        .collect();
    let idx: Vec<usize> = a
        .iter()
        .map(|x| {
            (0..3)
                .min_by(|&i, &j| {
                    (tile.angles[i] - x)
                        .abs()
                        .total_cmp(&(tile.angles[j] - x).abs())
                })
                .unwrap()
        })
        .collect();
    (0..3).any(|r| (0..3).all(|i| idx[(i + r) % 3] == i))
}

fn arc(a: &V3, b: &V3) -> Vec<V3> {
    (0..=ARC_SEGMENTS)
        .map(|k| {
            let s = k as f64 / ARC_SEGMENTS as f64;
            (a * (1.0 - s) + b * s).normalize()
        })
        .collect()
}

/// Stereographic projection of the tiling, centred on the target, as an SVG document.
pub fn render_svg(t: &SphTiling, tile: &TileSpec, title: &str) -> String {
    let chart = Chart::for_convex(&t.target);
    let c = chart.center;
    let helper = if c.x.abs() < 0.9 { V3::x() } else { V3::y() };
    let e1 = (helper - c * c.dot(&helper)).normalize();
    let e2 = c.cross(&e1);
    let proj = |x: &V3| {
        let d = 1.0 + x.dot(&c);
        [x.dot(&e1) / d, -x.dot(&e2) / d]
    };
    let outline = |poly: &[V3]| -> Vec<[f64; 2]> {
        let n = poly.len();
        (0..n)
            .flat_map(|i| arc(&poly[i], &poly[(i + 1) % n]))
            .map(|x| proj(&x))
            .collect()
    };
    let target = outline(&t.target);
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for p in &target {
        x0 = x0.min(p[0]);
        y0 = y0.min(p[1]);
        x1 = x1.max(p[0]);
        y1 = y1.max(p[1]);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let scale = 560.0 / span;
    let tx = |p: &[f64; 2]| ((p[0] - x0) * scale + 20.0, (p[1] - y0) * scale + 20.0);
    let path = |pts: &[[f64; 2]]| {
        let mut s = String::new();
        for (i, p) in pts.iter().enumerate() {
            let (x, y) = tx(p);
            let _ = write!(s, "{}{:.3},{:.3} ", if i == 0 { "M" } else { "L" }, x, y);
        }
        s.push('Z');
        s
    };
    let w = (x1 - x0) * scale + 40.0;
    let h = (y1 - y0) * scale + 40.0;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.3} {h:.3}">"#
    );
    let _ = writeln!(svg, "<title>{}</title>", escape(title));
    for tr in &t.tiles {
        let fill = if is_direct(tr, tile) {
            "#cfe3f7"
        } else {
            "#f7dfc8"
        };
        let _ = writeln!(
            svg,
            r##"<path d="{}" fill="{fill}" stroke="#333" stroke-width="1"/>"##,
            path(&outline(tr))
        );
    }
    let _ = writeln!(
        svg,
        r##"<path d="{}" fill="none" stroke="#000" stroke-width="2.5"/>"##,
        path(&target)
    );
    svg.push_str("</svg>\n");
    svg
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rat;
    use crate::realize::geom::place_triangle;

    #[test]
    fn json_round_trip_merges_vertices() {
        let tile = TileSpec::new(rat(1, 4), rat(1, 3), rat(1, 2)).unwrap();
        let tr = place_triangle(tile.angles, tile.edges);
        let t = SphTiling {
            target: tr.to_vec(),
            tiles: vec![tr],
        };
        let j = TilingJson::from_tiling(&t);
        assert_eq!(j.vertices.len(), 3);
        assert_eq!(j.tiles, vec![[0, 1, 2]]);
        assert_eq!(j.to_tiling(), t);
        let svg = render_svg(&t, &tile, "single tile");
        assert!(svg.starts_with("<svg"));
        assert!(is_direct(&tr, &tile));
        let m = tr.map(|v| V3::new(v.x, -v.y, v.z));
        assert!(!is_direct(&[m[0], m[2], m[1]], &tile));
    }
}
