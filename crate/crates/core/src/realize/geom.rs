//! Unit-vector geometry on the sphere and the gnomonic chart used by the search.

use nalgebra::Vector3;
use std::f64::consts::PI;

pub type V3 = Vector3<f64>;

/// Great-circle distance.
pub fn dist(a: &V3, b: &V3) -> f64 {
    a.cross(b).norm().atan2(a.dot(b))
}

/// Unit tangent at `v` pointing along the great circle towards `w`.
pub fn tangent(v: &V3, w: &V3) -> V3 {
    let t = w - v * v.dot(w);
    t.normalize()
}

/// Point at distance `len` from `v` in tangent direction `t`.
pub fn walk(v: &V3, t: &V3, len: f64) -> V3 {
    (v * len.cos() + t * len.sin()).normalize()
}

/// Tangent `t` at `v` rotated counter-clockwise (seen from outside) by `phi`.
pub fn rotate(v: &V3, t: &V3, phi: f64) -> V3 {
    (t * phi.cos() + v.cross(t) * phi.sin()).normalize()
}

/// Counter-clockwise angle in `[0, 2pi)` at `v` from the direction of `w` to the direction of `u`.
/// For a counter-clockwise boundary `u -> v -> w` this is the interior angle at `v`.
pub fn interior_angle(u: &V3, v: &V3, w: &V3) -> f64 {
    let tw = tangent(v, w);
    let tu = tangent(v, u);
    let s = v.cross(&tw).dot(&tu);
    let c = tw.dot(&tu);
    let a = s.atan2(c);
    if a < 0.0 {
        a + 2.0 * PI
    } else {
        a
    }
}

/// Signed area of the spherical triangle `abc`, positive for counter-clockwise order.
pub fn signed_triangle_area(a: &V3, b: &V3, c: &V3) -> f64 {
    let num = a.dot(&b.cross(c));
    let den = 1.0 + a.dot(b) + b.dot(c) + c.dot(a);
    2.0 * num.atan2(den)
}

/// Area of a counter-clockwise simple spherical polygon from its interior angles.
pub fn polygon_area(poly: &[V3]) -> f64 {
    let n = poly.len();
    let s: f64 = (0..n)
        .map(|i| interior_angle(&poly[(i + n - 1) % n], &poly[i], &poly[(i + 1) % n]))
        .sum();
    s - (n as f64 - 2.0) * PI
}

/// Places a triangle with the given angles counter-clockwise: vertex 0 at the north pole,
/// vertex 1 in the `xz`-plane.
pub fn place_triangle(angles: [f64; 3], edges: [f64; 3]) -> [V3; 3] {
    let p0 = V3::new(0.0, 0.0, 1.0);
    let p1 = V3::new(edges[2].sin(), 0.0, edges[2].cos());
    let t = rotate(&p0, &tangent(&p0, &p1), angles[0]);
    let p2 = walk(&p0, &t, edges[1]);
    [p0, p1, p2]
}

/// Gnomonic chart onto the plane tangent at `center`; great circles map to lines and
/// counter-clockwise orientation is preserved on the hemisphere around `center`.
#[derive(Clone, Copy, Debug)]
pub struct Chart {
    pub center: V3,
    e1: V3,
    e2: V3,
}

impl Chart {
    pub fn new(center: V3) -> Chart {
        let c = center.normalize();
        let helper = if c.x.abs() < 0.9 { V3::x() } else { V3::y() };
        let e1 = (helper - c * c.dot(&helper)).normalize();
        let e2 = c.cross(&e1);
        Chart { center: c, e1, e2 }
    }

    /// Chart centred so that every point of the convex polygon `poly` lies in the open
    /// hemisphere around the centre: the sum of the inward edge normals.
    pub fn for_convex(poly: &[V3]) -> Chart {
        let n = poly.len();
        let mut c = V3::zeros();
        for i in 0..n {
            c += poly[i].cross(&poly[(i + 1) % n]).normalize();
        }
        Chart::new(c)
    }

    pub fn height(&self, x: &V3) -> f64 {
        self.center.dot(x)
    }

    pub fn project(&self, x: &V3) -> [f64; 2] {
        let h = self.center.dot(x);
        [self.e1.dot(x) / h, self.e2.dot(x) / h]
    }
}

pub fn cross2(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Signed distance of `p` from the directed line `a -> b`, positive on the left.
pub fn side2(a: [f64; 2], b: [f64; 2], p: [f64; 2]) -> f64 {
    let l = ((b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2)).sqrt();
    cross2(a, b, p) / l
}

/// Whether segment `a -> b` passes through the interior of the counter-clockwise triangle
/// `tri` by more than `tol`.
pub fn segment_intrudes(a: [f64; 2], b: [f64; 2], tri: &[[f64; 2]; 3], tol: f64) -> bool {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for i in 0..3 {
        let p = tri[i];
        let q = tri[(i + 1) % 3];
        let fa = side2(p, q, a);
        let fb = side2(p, q, b);
        // keep the parameter range where f >= 0
        if fa < 0.0 && fb < 0.0 {
            return false;
        }
        if fa < 0.0 {
            lo = lo.max(fa / (fa - fb));
        } else if fb < 0.0 {
            hi = hi.min(fa / (fa - fb));
        }
        if lo >= hi {
            return false;
        }
    }
    let s = 0.5 * (lo + hi);
    let m = [a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])];
    (0..3).all(|i| side2(tri[i], tri[(i + 1) % 3], m) > tol)
}

/// Even-odd point-in-polygon test in the plane.
pub fn point_in_polygon(p: [f64; 2], poly: &[[f64; 2]]) -> bool {
    let n = poly.len();
    let mut inside = false;
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        if (a[1] > p[1]) != (b[1] > p[1]) {
            let x = a[0] + (p[1] - a[1]) / (b[1] - a[1]) * (b[0] - a[0]);
            if p[0] < x {
                inside = !inside;
            }
        }
    }
    inside
}

/// Distance from `p` to segment `a b` on the sphere, and whether the closest point lies
/// strictly between the endpoints.
pub fn point_segment(p: &V3, a: &V3, b: &V3) -> (f64, bool) {
    let n = a.cross(b);
    let nn = n.norm();
    if nn < 1e-15 {
        return (dist(p, a), false);
    }
    let n = n / nn;
    let off = n.dot(p).abs().asin();
    // projection of p onto the great circle, then betweenness via the two sub-arcs
    let q = (p - n * n.dot(p)).normalize();
    let between = (dist(a, &q) + dist(&q, b) - dist(a, b)).abs() < 1e-12;
    (off, between)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octant_placement() {
        let h = PI / 2.0;
        let t = place_triangle([h; 3], [h; 3]);
        assert!((dist(&t[0], &t[1]) - h).abs() < 1e-12);
        assert!((dist(&t[1], &t[2]) - h).abs() < 1e-12);
        assert!((signed_triangle_area(&t[0], &t[1], &t[2]) - h).abs() < 1e-12);
        assert!((polygon_area(&t) - h).abs() < 1e-12);
    }

    #[test]
    fn interior_angles_of_placed_triangle() {
        let angles = [PI / 4.0, PI / 3.0, PI / 2.0];
        let edges = crate::spherical::edge_lengths(angles).unwrap();
        let t = place_triangle(angles, edges);
        for i in 0..3 {
            let a = interior_angle(&t[(i + 2) % 3], &t[i], &t[(i + 1) % 3]);
            assert!((a - angles[i]).abs() < 1e-12, "{i}: {a}");
        }
    }

    #[test]
    fn intrusion() {
        let tri = [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]];
        assert!(segment_intrudes([-1.0, 0.2], [2.0, 0.2], &tri, 1e-9));
        assert!(!segment_intrudes([0.0, 0.0], [1.0, 0.0], &tri, 1e-9));
        assert!(!segment_intrudes([-0.5, 0.0], [2.0, 0.0], &tri, 1e-9));
        assert!(!segment_intrudes([1.0, 0.0], [2.0, 1.0], &tri, 1e-9));
        assert!(segment_intrudes([0.1, 0.1], [0.2, 0.2], &tri, 1e-9));
    }
}
