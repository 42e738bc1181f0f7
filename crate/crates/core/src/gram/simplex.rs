use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmath::{bareiss_det, to_f64, Rational};

/// A full-dimensional simplex in `R^d` with exact rational vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EuclideanSimplex {
    vertices: Vec<Vec<Rational>>,
}

impl Serialize for EuclideanSimplex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Vec<String>> = self
            .vertices
            .iter()
            .map(|p| p.iter().map(|x| x.to_string()).collect())
            .collect();
        v.serialize(s)
    }
}

fn factorial(n: usize) -> Rational {
    Rational::from_integer((1..=n as u64).product::<u64>().into())
}

impl EuclideanSimplex {
    /// `d + 1` affinely independent points of `R^d`.
    pub fn new(vertices: Vec<Vec<Rational>>) -> Result<EuclideanSimplex> {
        let d = vertices.len().saturating_sub(1);
        if d == 0 || vertices.iter().any(|v| v.len() != d) {
            return Err(Error::Domain(format!(
                "a simplex needs d+1 points in R^d, got {} points",
                vertices.len()
            )));
        }
        let s = EuclideanSimplex { vertices };
        if s.signed_volume_times_factorial().is_zero() {
            return Err(Error::DegenerateSimplex);
        }
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn vertices_f64(&self) -> Vec<Vec<f64>> {
        self.vertices
            .iter()
            .map(|p| p.iter().map(to_f64).collect())
            .collect()
    }

    /// Edge vectors `v_i - v_0`, one per row.
    fn edge_rows(&self) -> Vec<Rational> {
        let d = self.dim();
        let mut out = Vec::with_capacity(d * d);
        for v in &self.vertices[1..] {
            for k in 0..d {
                out.push(&v[k] - &self.vertices[0][k]);
            }
        }
        out
    }

    fn signed_volume_times_factorial(&self) -> Rational {
        bareiss_det(self.dim(), &self.edge_rows())
    }

    /// Exact volume `|det(v_i - v_0)| / d!`.
    pub fn volume(&self) -> Rational {
        self.signed_volume_times_factorial().abs() / factorial(self.dim())
    }

    /// Squared lengths of all edges, indexed by unordered vertex pairs in colex order.
    pub fn squared_lengths(&self) -> Vec<Rational> {
        let n = self.vertices.len();
        let mut out = vec![];
        for j in 1..n {
            for i in 0..j {
                out.push(squared_distance(&self.vertices[i], &self.vertices[j]));
            }
        }
        out
    }

    /// The simplex with every coordinate multiplied by `k`.
    pub fn scaled(&self, k: &Rational) -> EuclideanSimplex {
        EuclideanSimplex {
            vertices: self
                .vertices
                .iter()
                .map(|p| p.iter().map(|x| x * k).collect())
                .collect(),
        }
    }
}

pub(crate) fn squared_distance(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let t = x - y;
            &t * &t
        })
        .fold(Rational::zero(), |s, x| s + x)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Dihedral angles `beta_ij` between facets `F_i` and `F_j`, where `F_i` is the facet opposite
/// vertex `i`. The diagonal is set to `pi`.
///
/// Outward normals are the negated gradients of the barycentric coordinates, and
/// `beta_ij = pi - angle(n_i, n_j)`.
pub fn dihedral_angles(s: &EuclideanSimplex) -> Result<Vec<Vec<f64>>> {
    let d = s.dim();
    let rows: Vec<f64> = s.edge_rows().iter().map(to_f64).collect();
    let e = DMatrix::from_row_slice(d, d, &rows);
    // e * grad(lambda_i) = unit vector i, so the gradients are the columns of e^-1
    let inv = e.try_inverse().ok_or(Error::DegenerateSimplex)?;
    let mut normals: Vec<Vec<f64>> = vec![vec![0.0; d]; d + 1];
    for i in 1..=d {
        for k in 0..d {
            normals[i][k] = -inv[(k, i - 1)];
            normals[0][k] += inv[(k, i - 1)];
        }
    }
    for n in &mut normals {
        let len = dot(n, n).sqrt();
        n.iter_mut().for_each(|x| *x /= len);
    }
    let mut out = vec![vec![PI; d + 1]; d + 1];
    for i in 0..=d {
        for j in 0..=d {
            if i != j {
                let c = dot(&normals[i], &normals[j]).clamp(-1.0, 1.0);
                out[i][j] = PI - c.acos();
            }
        }
    }
    Ok(out)
}

/// The same angles computed without normals: project the two vertices off the shared ridge
/// onto the orthogonal complement of the ridge and measure the angle between them.
pub fn dihedral_angles_by_projection(s: &EuclideanSimplex) -> Result<Vec<Vec<f64>>> {
    let pts = s.vertices_f64();
    let d = s.dim();
    let mut out = vec![vec![PI; d + 1]; d + 1];
    for i in 0..=d {
        for j in 0..i {
            let ridge: Vec<usize> = (0..=d).filter(|&k| k != i && k != j).collect();
            let base = &pts[ridge[0]];
            let sub = |p: &[f64]| -> Vec<f64> { p.iter().zip(base).map(|(x, y)| x - y).collect() };
            // orthonormal basis of the ridge directions
            let mut basis: Vec<Vec<f64>> = vec![];
            for &k in &ridge[1..] {
                let mut v = sub(&pts[k]);
                for b in &basis {
                    let c = dot(&v, b);
                    v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
                }
                let len = dot(&v, &v).sqrt();
                if len < 1e-300 {
                    return Err(Error::DegenerateSimplex);
                }
                v.iter_mut().for_each(|x| *x /= len);
                basis.push(v);
            }
            let project = |p: &[f64]| -> Vec<f64> {
                let mut v = sub(p);
                for b in &basis {
                    let c = dot(&v, b);
                    v.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
                }
                v
            };
            let (a, b) = (project(&pts[i]), project(&pts[j]));
            let c = (dot(&a, &b) / (dot(&a, &a) * dot(&b, &b)).sqrt()).clamp(-1.0, 1.0);
            out[i][j] = c.acos();
            out[j][i] = out[i][j];
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    fn simplex(pts: &[&[(i64, i64)]]) -> EuclideanSimplex {
        EuclideanSimplex::new(
            pts.iter()
                .map(|p| p.iter().map(|&(a, b)| rat(a, b)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn triangle_angles_sum_to_pi() {
        let s = simplex(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)], &[(0, 1), (1, 1)]]);
        let a = dihedral_angles(&s).unwrap();
        assert!((a[0][1] + a[0][2] + a[1][2] - PI).abs() < 1e-12);
        // the angle at vertex 0 lies between the facets opposite 1 and 2
        assert!((a[1][2] - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_is_rejected() {
        let r = EuclideanSimplex::new(vec![
            vec![int(0), int(0)],
            vec![int(1), int(1)],
            vec![int(2), int(2)],
        ]);
        assert_eq!(r, Err(Error::DegenerateSimplex));
        assert!(EuclideanSimplex::new(vec![vec![int(0)], vec![int(1)], vec![int(2)]]).is_err());
    }

    #[test]
    fn volume_of_unit_corner() {
        let s = simplex(&[
            &[(0, 1), (0, 1), (0, 1)],
            &[(1, 1), (0, 1), (0, 1)],
            &[(0, 1), (1, 1), (0, 1)],
            &[(0, 1), (0, 1), (1, 1)],
        ]);
        assert_eq!(s.volume(), rat(1, 6));
        assert_eq!(s.scaled(&int(2)).volume(), rat(8, 6));
    }
}
