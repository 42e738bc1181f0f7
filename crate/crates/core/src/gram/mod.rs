//! Gram matrices of dihedral-angle cosines and the singularity test for simplices.
//!
//! A genuine `d`-simplex has a `(d+1) x (d+1)` Gram matrix `a_ij = cos beta_ij` (with
//! `a_ii = -1`) that is negative semidefinite of rank `d` with a strictly positive kernel
//! vector. Most exclusions only need the determinant to be nonzero.

mod simplex;

pub use simplex::{dihedral_angles, dihedral_angles_by_projection, EuclideanSimplex};

use std::collections::BTreeSet;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::Serialize;

use crate::angles::AngleAssignment;
use crate::coxeter::{CoxeterDiagram, Label};
use crate::error::{Error, Result};
use crate::exactmath::{
    count_real_roots, int, isolate_roots, Exact, ExactMatrix, Poly, QuadExt, Rational, RootInterval,
};

/// Entries of a Gram matrix, exact or binary64 (row-major).
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", content = "entries", rename_all = "lowercase")]
pub enum GramEntries {
    Exact(ExactMatrix),
    Numeric(Vec<f64>),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GramMatrix {
    pub n: usize,
    pub entries: GramEntries,
    /// Set when exact entries had to be evaluated in binary64.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

impl GramMatrix {
    /// Checks symmetry and the `-1` diagonal.
    pub fn from_exact(m: ExactMatrix) -> Result<GramMatrix> {
        let n = m.n;
        for i in 0..n {
            if m.get(i, i).as_rational() != Some(int(-1)) {
                return Err(Error::Domain(format!("diagonal entry {i} is not -1")));
            }
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::Domain(format!(
                        "entries ({i},{j}) and ({j},{i}) differ"
                    )));
                }
            }
        }
        Ok(GramMatrix {
            n,
            entries: GramEntries::Exact(m),
            warning: None,
        })
    }

    pub fn from_f64(n: usize, entries: Vec<f64>) -> Result<GramMatrix> {
        if entries.len() != n * n {
            return Err(Error::Domain(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        for i in 0..n {
            for j in 0..i {
                if (entries[i * n + j] - entries[j * n + i]).abs() > 1e-12 {
                    return Err(Error::Domain(format!(
                        "entries ({i},{j}) and ({j},{i}) differ"
                    )));
                }
            }
        }
        Ok(GramMatrix {
            n,
            entries: GramEntries::Numeric(entries),
            warning: None,
        })
    }

    /// `cos` of a full angle matrix (diagonal entries are ignored and set to `-1`).
    pub fn from_angles(angles: &[Vec<f64>]) -> Result<GramMatrix> {
        let n = angles.len();
        let mut v = vec![0.0; n * n];
        for i in 0..n {
            if angles[i].len() != n {
                return Err(Error::Domain("angle matrix is not square".into()));
            }
            for j in 0..n {
                v[i * n + j] = if i == j { -1.0 } else { angles[i][j].cos() };
            }
        }
        GramMatrix::from_f64(n, v)
    }

    /// `Q`, `Q(sqrt m)`, `Q[t]` or `f64`.
    pub fn ring(&self) -> String {
        match &self.entries {
            GramEntries::Exact(m) => m.entries[0].ring_name(),
            GramEntries::Numeric(_) => "f64".to_string(),
        }
    }

    pub fn exact(&self) -> Option<&ExactMatrix> {
        match &self.entries {
            GramEntries::Exact(m) => Some(m),
            GramEntries::Numeric(_) => None,
        }
    }

    /// Numeric entries; polynomial entries are evaluated at `t`, and `None` is returned when
    /// they are present but `t` is not given.
    pub fn to_f64(&self, t: Option<f64>) -> Option<Vec<f64>> {
        match &self.entries {
            GramEntries::Numeric(v) => Some(v.clone()),
            GramEntries::Exact(m) => m
                .entries
                .iter()
                .map(|e| match e {
                    Exact::Poly(p) => t.map(|t| p.eval_f64(t)),
                    _ => e.to_f64(),
                })
                .collect(),
        }
    }
}

fn lift_quad(e: Exact, m: i64) -> Exact {
    match e {
        Exact::Rational(q) => Exact::Quad(QuadExt::from_rational(q, m)),
        other => other,
    }
}

fn lift_poly(e: Exact) -> Exact {
    match e {
        Exact::Rational(q) => Exact::Poly(Poly::constant_poly(q)),
        other => other,
    }
}

/// Gram matrix of a diagram in its vertex order.
///
/// Entries use the narrowest exact ring holding every cosine. When labels need different
/// rings, or some label has no exact cosine, the entries are evaluated numerically under
/// `assignment` and a warning is attached.
pub fn gram_from_diagram(
    d: &CoxeterDiagram,
    assignment: Option<&AngleAssignment>,
) -> Result<GramMatrix> {
    let n = d.n();
    let mut exact: Vec<Option<Exact>> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            exact.push(if i == j {
                Some(Exact::Rational(int(-1)))
            } else {
                match d.label(i, j) {
                    Label::Angle(f) => f.exact_cos(d.relations()).ok(),
                    Label::Free(_) => None,
                }
            });
        }
    }
    let mut problem = None;
    if exact.iter().all(|e| e.is_some()) {
        let entries: Vec<Exact> = exact.iter().flatten().cloned().collect();
        let quads: BTreeSet<i64> = entries
            .iter()
            .filter_map(|e| match e {
                Exact::Quad(q) => Some(q.m),
                _ => None,
            })
            .collect();
        let has_poly = entries.iter().any(|e| matches!(e, Exact::Poly(_)));
        let unified = match (quads.len(), has_poly) {
            (0, false) => Some(entries),
            (0, true) => Some(entries.into_iter().map(lift_poly).collect()),
            (1, false) => {
                let m = *quads.iter().next().expect("one field");
                Some(entries.into_iter().map(|e| lift_quad(e, m)).collect())
            }
            _ => None,
        };
        match unified {
            Some(v) => return GramMatrix::from_exact(ExactMatrix::new(n, v)?),
            None => {
                problem = Some(format!(
                    "cosines need incompatible rings (sqrt {quads:?}, polynomial: {has_poly})"
                ))
            }
        }
    }
    let problem = problem.unwrap_or_else(|| "some labels have no exact cosine".to_string());
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            v[i * n + j] = if i == j {
                -1.0
            } else {
                match (&exact[i * n + j], d.label(i, j)) {
                    (Some(e), _) if e.to_f64().is_some() && !matches!(e, Exact::Poly(_)) => {
                        e.to_f64().expect("checked")
                    }
                    (_, Label::Angle(f)) => {
                        let a = assignment.ok_or_else(|| {
                            Error::MissingSymbol(format!("{f} ({problem}; no assignment given)"))
                        })?;
                        d.relations().normalize(f).eval(a)?.cos()
                    }
                    (_, Label::Free(s)) => return Err(Error::MissingSymbol(s.clone())),
                }
            };
        }
    }
    let mut g = GramMatrix::from_f64(n, v)?;
    g.warning = Some(format!("{problem}; evaluated in binary64"));
    Ok(g)
}

/// Outcome of the singularity and semidefiniteness test.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FiedlerReport {
    pub n: usize,
    pub ring: String,
    /// Exact determinant for exact matrices.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinant: Option<Exact>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinant_f64: Option<f64>,
    pub is_singular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenvalues: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub negative_semidefinite: Option<bool>,
    /// Unit kernel vector, signed so that its components sum to a nonnegative value.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_positive: Option<bool>,
    /// False when the matrix cannot belong to a simplex.
    pub simplex_possible: bool,
    pub verdict: String,
}

struct Spectrum {
    eigenvalues: Vec<f64>,
    rank: usize,
    nsd: bool,
    kernel: Vec<f64>,
    kernel_positive: bool,
    det: f64,
}

fn spectrum(n: usize, v: &[f64], tol: f64) -> Spectrum {
    let m = DMatrix::from_row_slice(n, n, v);
    let mut eigenvalues: Vec<f64> = SymmetricEigen::new(m.clone()).eigenvalues.iter().copied().collect();
    eigenvalues.sort_by(f64::total_cmp);
    let rank = eigenvalues.iter().filter(|x| x.abs() > tol).count();
    let nsd = eigenvalues.iter().all(|&x| x <= tol);
    // The kernel comes from the SVD: the symmetric eigenvectors can be inaccurate for
    // nearly flat simplices, where several eigenvalues crowd near zero.
    let svd = m.svd(false, true);
    let v_t = svd.v_t.expect("requested");
    let k = (0..n)
        .min_by(|&a, &b| svd.singular_values[a].total_cmp(&svd.singular_values[b]))
        .expect("nonempty");
    let mut kernel: Vec<f64> = v_t.row(k).iter().copied().collect();
    if kernel.iter().sum::<f64>() < 0.0 {
        kernel.iter_mut().for_each(|x| *x = -*x);
    }
    let kernel_positive = kernel.iter().all(|&x| x > tol);
    Spectrum {
        det: eigenvalues.iter().product(),
        eigenvalues,
        rank,
        nsd,
        kernel,
        kernel_positive,
    }
}

/// Singularity, rank, semidefiniteness and kernel sign of a Gram matrix.
///
/// Exact matrices get an exact determinant; numeric quantities come from a symmetric
/// eigendecomposition, with eigenvalues of absolute value at most `tol` counted as zero.
/// Matrices over `Q[t]` only get the determinant polynomial; see [`parametric_fiedler`].
pub fn fiedler_check(m: &GramMatrix, tol: f64) -> Result<FiedlerReport> {
    let n = m.n;
    let ring = m.ring();
    let determinant = match m.exact() {
        Some(e) => Some(e.det()?),
        None => None,
    };
    if let Some(Exact::Poly(p)) = &determinant {
        let singular = p.is_zero();
        return Ok(FiedlerReport {
            n,
            ring,
            determinant: determinant.clone(),
            determinant_f64: None,
            is_singular: singular,
            rank: None,
            eigenvalues: None,
            negative_semidefinite: None,
            kernel: None,
            kernel_positive: None,
            simplex_possible: true,
            verdict: if singular {
                "determinant vanishes identically".into()
            } else {
                format!("determinant {p} depends on t; check its roots")
            },
        });
    }
    let values = m.to_f64(None).expect("non-polynomial entries are numeric");
    let s = spectrum(n, &values, tol);
    let (is_singular, determinant_f64) = match &determinant {
        Some(d) => (d.is_zero(), d.to_f64()),
        None => (s.rank < n, Some(s.det)),
    };
    let simplex_possible = is_singular && s.rank == n - 1 && s.nsd && s.kernel_positive;
    let verdict = if !is_singular {
        match &determinant {
            Some(d) => format!("cannot be a simplex: det = {d}"),
            None => format!("cannot be a simplex: det ~ {:.6}", s.det),
        }
    } else if s.rank != n - 1 {
        format!("cannot be a simplex: rank {} instead of {}", s.rank, n - 1)
    } else if !s.nsd {
        "cannot be a simplex: not negative semidefinite".into()
    } else if !s.kernel_positive {
        "cannot be a simplex: kernel has a nonpositive component".into()
    } else {
        "consistent with a simplex".into()
    };
    Ok(FiedlerReport {
        n,
        ring,
        determinant,
        determinant_f64,
        is_singular,
        rank: Some(s.rank),
        eigenvalues: Some(s.eigenvalues),
        negative_semidefinite: Some(s.nsd),
        kernel: Some(s.kernel),
        kernel_positive: Some(s.kernel_positive),
        simplex_possible,
        verdict,
    })
}

/// Determinant of a Gram matrix over `Q[t]` and its roots in an open interval.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParametricReport {
    pub determinant: Poly,
    #[serde(with = "crate::exactmath::rational_serde")]
    pub lo: Rational,
    #[serde(with = "crate::exactmath::rational_serde")]
    pub hi: Rational,
    pub roots_in_interval: usize,
    /// True when no parameter value in the interval makes the matrix singular.
    pub excluded: bool,
}

impl ParametricReport {
    /// Isolating intervals for every real root of the determinant.
    pub fn real_roots(&self, precision: &Rational) -> Result<Vec<RootInterval>> {
        isolate_roots(&self.determinant, precision)
    }
}

/// Counts the parameter values in `(lo, hi)` at which the matrix is singular.
pub fn parametric_fiedler(
    m: &GramMatrix,
    lo: &Rational,
    hi: &Rational,
) -> Result<ParametricReport> {
    let det = match m.exact().map(|e| e.det()).transpose()? {
        Some(Exact::Poly(p)) => p,
        Some(Exact::Rational(q)) => Poly::constant_poly(q),
        _ => {
            return Err(Error::RingMismatch(format!(
                "parametric check needs a matrix over Q[t], got {}",
                m.ring()
            )))
        }
    };
    if det.is_zero() {
        return Ok(ParametricReport {
            determinant: det,
            lo: lo.clone(),
            hi: hi.clone(),
            roots_in_interval: usize::MAX,
            excluded: false,
        });
    }
    let count = count_real_roots(&det, Some(lo), Some(hi))?;
    Ok(ParametricReport {
        determinant: det,
        lo: lo.clone(),
        hi: hi.clone(),
        roots_in_interval: count,
        excluded: count == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angles::RelationSet;
    use crate::exactmath::rat;

    fn right_angled(n: usize) -> CoxeterDiagram {
        let labels = vec!["1/2 pi".parse::<Label>().unwrap(); n * (n - 1) / 2];
        CoxeterDiagram::with_default_names(labels, RelationSet::empty()).unwrap()
    }

    #[test]
    fn right_angles_give_minus_identity() {
        let g = gram_from_diagram(&right_angled(4), None).unwrap();
        assert_eq!(g.ring(), "Q");
        let v = g.to_f64(None).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(v[i * 4 + j], if i == j { -1.0 } else { 0.0 });
            }
        }
        let r = fiedler_check(&g, 1e-9).unwrap();
        assert!(!r.is_singular);
        assert!(!r.simplex_possible);
    }

    #[test]
    fn regular_simplex_gram() {
        // a_ij = cos(arccos(-1/4)) ... for the regular 4-simplex cos(beta) = 1/4
        let n = 5;
        let v: Vec<f64> = (0..n * n)
            .map(|k| if k % (n + 1) == 0 { -1.0 } else { 0.25 })
            .collect();
        let r = fiedler_check(&GramMatrix::from_f64(n, v).unwrap(), 1e-9).unwrap();
        assert!(r.is_singular);
        assert_eq!(r.rank, Some(4));
        assert_eq!(r.negative_semidefinite, Some(true));
        let k = r.kernel.unwrap();
        for x in &k {
            assert!((x - 1.0 / (5f64).sqrt()).abs() < 1e-12);
        }
        assert!(r.simplex_possible);
    }

    #[test]
    fn mixed_fields_fall_back() {
        let mut labels = vec!["1/2 pi".parse::<Label>().unwrap(); 6];
        labels[0] = "1/4 pi".parse().unwrap();
        labels[5] = "1/5 pi".parse().unwrap();
        let d = CoxeterDiagram::with_default_names(labels, RelationSet::empty()).unwrap();
        let g = gram_from_diagram(&d, None).unwrap();
        assert_eq!(g.ring(), "f64");
        assert!(g.warning.is_some());
        let v = g.to_f64(None).unwrap();
        assert!((v[1] - (std::f64::consts::PI / 4.0).cos()).abs() < 1e-15);
    }

    #[test]
    fn free_labels_cannot_be_evaluated() {
        let mut labels = vec!["1/2 pi".parse::<Label>().unwrap(); 6];
        labels[2] = Label::free("delta");
        let d = CoxeterDiagram::with_default_names(labels, RelationSet::empty()).unwrap();
        assert!(matches!(
            gram_from_diagram(&d, None),
            Err(Error::MissingSymbol(_))
        ));
    }

    #[test]
    fn linear_parameter() {
        // [[-1, t], [t, -1]] has determinant 1 - t^2
        let t = Exact::Poly(Poly::t());
        let m1 = Exact::Poly(Poly::constant_poly(int(-1)));
        let g = GramMatrix::from_exact(
            ExactMatrix::new(2, vec![m1.clone(), t.clone(), t, m1]).unwrap(),
        )
        .unwrap();
        let r = parametric_fiedler(&g, &int(0), &int(2)).unwrap();
        assert_eq!(r.roots_in_interval, 1);
        let r = parametric_fiedler(&g, &int(0), &int(1)).unwrap();
        assert!(r.excluded);
        let roots = r.real_roots(&rat(1, 1000)).unwrap();
        assert_eq!(roots.len(), 2);
    }
}
