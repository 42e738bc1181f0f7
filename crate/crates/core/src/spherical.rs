//! Spherical triangles on the unit sphere: validity, area, edge lengths and lunes.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::angles::{AngleAssignment, AngleForm, RelationSet};
use crate::error::{Error, Result};
use crate::exactmath::{int, Rational};

/// Slack for strict numeric comparisons of angle sums.
pub const VALIDITY_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InvalidReason {
    AngleOutOfRange,
    SumNotAbovePi,
    TriangleInequality,
    /// Exact-form variant: a defining inequality holds with equality.
    Degenerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validity {
    pub valid: bool,
    pub reason: Option<InvalidReason>,
}

impl Validity {
    fn ok() -> Validity {
        Validity {
            valid: true,
            reason: None,
        }
    }

    fn fail(r: InvalidReason) -> Validity {
        Validity {
            valid: false,
            reason: Some(r),
        }
    }
}

fn sorted(a: [f64; 3]) -> [f64; 3] {
    let mut s = a;
    s.sort_by(|x, y| x.total_cmp(y));
    s
}

/// Whether three angles (radians) bound a spherical triangle.
pub fn is_valid(angles: [f64; 3]) -> Validity {
    if angles
        .iter()
        .any(|&x| !(x > VALIDITY_TOL && x < PI - VALIDITY_TOL))
    {
        return Validity::fail(InvalidReason::AngleOutOfRange);
    }
    if angles.iter().sum::<f64>() <= PI + VALIDITY_TOL {
        return Validity::fail(InvalidReason::SumNotAbovePi);
    }
    let s = sorted(angles);
    if s[1] + s[2] >= PI + s[0] - VALIDITY_TOL {
        return Validity::fail(InvalidReason::TriangleInequality);
    }
    Validity::ok()
}

/// Validity of a triangle given by exact angle forms. The ordering of the angles is taken
/// from the sample assignment; boundary cases are decided exactly under `r`.
pub fn is_valid_forms(
    forms: &[AngleForm; 3],
    r: &RelationSet,
    sample: &AngleAssignment,
) -> Result<Validity> {
    let g: Vec<AngleForm> = forms.iter().map(|f| f.normalize(r)).collect();
    let zero = Rational::from_integer(0.into());
    let pi = AngleForm::pi();
    for f in &g {
        if f.is_zero() || f.pi_multiple().is_some_and(|q| q <= zero || q >= int(1)) || f == &pi {
            return Ok(Validity::fail(InvalidReason::AngleOutOfRange));
        }
    }
    let excess = g[0].add(&g[1]).add(&g[2]).sub(&pi).normalize(r);
    if excess.is_zero() {
        return Ok(Validity::fail(InvalidReason::Degenerate));
    }
    let vals: Vec<f64> = g.iter().map(|f| f.eval(sample)).collect::<Result<_>>()?;
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|&i, &j| vals[i].total_cmp(&vals[j]));
    let gap = g[idx[1]]
        .add(&g[idx[2]])
        .sub(&pi)
        .sub(&g[idx[0]])
        .normalize(r);
    if gap.is_zero() {
        return Ok(Validity::fail(InvalidReason::Degenerate));
    }
    Ok(is_valid([vals[0], vals[1], vals[2]]))
}

/// Spherical area (excess) of a valid angle triple.
pub fn area(angles: [f64; 3]) -> Result<f64> {
    let v = is_valid(angles);
    if !v.valid {
        return Err(Error::InvalidTriangle(format!(
            "{angles:?}: {:?}",
            v.reason
        )));
    }
    Ok(angles.iter().sum::<f64>() - PI)
}

/// Edge lengths `(a, b, c)`, edge `i` opposite angle `i`, from the law of cosines for angles.
pub fn edge_lengths(angles: [f64; 3]) -> Result<[f64; 3]> {
    let v = is_valid(angles);
    if !v.valid {
        return Err(Error::InvalidTriangle(format!(
            "{angles:?}: {:?}",
            v.reason
        )));
    }
    Ok(std::array::from_fn(|i| {
        let x = angles[i];
        let y = angles[(i + 1) % 3];
        let z = angles[(i + 2) % 3];
        let c = (x.cos() + y.cos() * z.cos()) / (y.sin() * z.sin());
        c.clamp(-1.0, 1.0).acos()
    }))
}

/// Angles recovered from edge lengths by the law of cosines for sides.
pub fn angles_from_edges(edges: [f64; 3]) -> [f64; 3] {
    std::array::from_fn(|i| {
        let x = edges[i];
        let y = edges[(i + 1) % 3];
        let z = edges[(i + 2) % 3];
        let c = (x.cos() - y.cos() * z.cos()) / (y.sin() * z.sin());
        c.clamp(-1.0, 1.0).acos()
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SphTriangle {
    pub angles: [f64; 3],
    pub edges: [f64; 3],
}

impl SphTriangle {
    pub fn new(angles: [f64; 3]) -> Result<SphTriangle> {
        let edges = edge_lengths(angles)?;
        Ok(SphTriangle { angles, edges })
    }

    pub fn area(&self) -> f64 {
        self.angles.iter().sum::<f64>() - PI
    }
}

/// Two-gon between great half-circles meeting at angle `phi`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Lune {
    pub phi: f64,
}

impl Lune {
    pub fn new(phi: f64) -> Result<Lune> {
        if !(phi > 0.0 && phi < PI) {
            return Err(Error::Domain(format!("lune angle {phi} outside (0, pi)")));
        }
        Ok(Lune { phi })
    }

    pub fn area(&self) -> f64 {
        2.0 * self.phi
    }
}

fn combos_rec(
    n: usize,
    bound: u32,
    prefix: &mut Vec<u32>,
    accept: &mut dyn FnMut(&[u32]) -> Option<std::cmp::Ordering>,
    out: &mut Vec<Vec<u32>>,
) {
    // accept reports how the partial sum compares with pi; over-shooting prunes the branch
    match accept(prefix) {
        Some(std::cmp::Ordering::Greater) => return,
        Some(std::cmp::Ordering::Equal) if prefix.len() == n => {
            out.push(prefix.clone());
            return;
        }
        _ => {}
    }
    if prefix.len() == n {
        return;
    }
    for m in 0..=bound {
        prefix.push(m);
        combos_rec(n, bound, prefix, accept, out);
        prefix.pop();
    }
}

/// Nonnegative coefficient vectors `m` with `sum m_i * angles_i = pi` within 1e-9,
/// each coefficient at most `bound`.
pub fn straight_angle_combinations(angles: &[f64], bound: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut accept = |m: &[u32]| {
        let s: f64 = m.iter().zip(angles).map(|(&k, &a)| k as f64 * a).sum();
        Some(if s > PI + 1e-9 {
            std::cmp::Ordering::Greater
        } else if (s - PI).abs() <= 1e-9 {
            std::cmp::Ordering::Equal
        } else {
            std::cmp::Ordering::Less
        })
    };
    combos_rec(angles.len(), bound, &mut Vec::new(), &mut accept, &mut out);
    out
}

/// Exact variant: `sum m_i * forms_i` normalizes to `pi` under `r`. The sample assignment
/// (satisfying `r`) is only used to prune partial sums that already exceed pi.
pub fn straight_angle_combinations_exact(
    forms: &[AngleForm],
    r: &RelationSet,
    sample: &AngleAssignment,
    bound: u32,
) -> Result<Vec<Vec<u32>>> {
    let vals: Vec<f64> = forms
        .iter()
        .map(|f| f.normalize(r).eval(sample))
        .collect::<Result<_>>()?;
    if vals.iter().any(|&v| v <= 0.0) {
        return Err(Error::Domain("angles must be positive".into()));
    }
    let pi = AngleForm::pi();
    let mut out = Vec::new();
    let mut accept = |m: &[u32]| {
        let s: f64 = m.iter().zip(&vals).map(|(&k, &a)| k as f64 * a).sum();
        if s > PI + 1e-6 {
            return Some(std::cmp::Ordering::Greater);
        }
        if m.len() < forms.len() {
            return Some(std::cmp::Ordering::Less);
        }
        let f = m.iter().zip(forms).fold(AngleForm::zero(), |acc, (&k, f)| {
            acc.add(&f.scale_int(k as i64))
        });
        Some(if f.normalize(r) == pi {
            std::cmp::Ordering::Equal
        } else {
            std::cmp::Ordering::Less
        })
    };
    combos_rec(forms.len(), bound, &mut Vec::new(), &mut accept, &mut out);
    Ok(out)
}

/// All `a` in the open interval `(lo, hi)` (multiples of pi) such that
/// `m*a + sum n_i * fixed_i = 1` for some integer `m >= 1` and `n_i >= 0`.
/// Each `fixed_i` is a positive multiple of pi.
pub fn solve_straight_angle_parameter(
    fixed: &[Rational],
    lo: &Rational,
    hi: &Rational,
) -> Vec<Rational> {
    let zero = int(0);
    assert!(lo > &zero && lo < hi);
    let one = int(1);
    let mut remainders = Vec::new();
    collect_remainders(fixed, one.clone(), &mut remainders);
    let mut found: Vec<Rational> = Vec::new();
    for r in remainders {
        if r <= zero {
            continue;
        }
        let mut m = 1i64;
        loop {
            let a = &r / int(m);
            if &a <= lo {
                break;
            }
            if &a < hi && !found.contains(&a) {
                found.push(a);
            }
            m += 1;
        }
    }
    found.sort();
    found
}

fn collect_remainders(fixed: &[Rational], r: Rational, out: &mut Vec<Rational>) {
    let Some((f, rest)) = fixed.split_first() else {
        out.push(r);
        return;
    };
    let mut cur = r;
    while cur >= int(0) {
        collect_remainders(rest, cur.clone(), out);
        cur -= f;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::angles::Sym;
    use crate::exactmath::rat;

    #[test]
    fn areas() {
        assert!((area([PI / 2.0; 3]).unwrap() - PI / 2.0).abs() < 1e-15);
        assert!((area([PI / 3.0, PI / 3.0, PI / 2.0]).unwrap() - PI / 6.0).abs() < 1e-15);
        assert!((area([2.0 * PI / 9.0, PI / 3.0, PI / 2.0]).unwrap() - PI / 18.0).abs() < 1e-15);
        assert!(area([0.1, 0.2, 0.3]).is_err());
    }

    #[test]
    fn validity_reasons() {
        assert!(is_valid([PI / 2.0; 3]).valid);
        let v = is_valid([PI / 2.0, 0.8 * PI, 0.8 * PI]);
        assert_eq!(v.reason, Some(InvalidReason::TriangleInequality));
        assert_eq!(
            is_valid([PI, 0.5, 0.5]).reason,
            Some(InvalidReason::AngleOutOfRange)
        );
        assert_eq!(
            is_valid([0.5, 0.5, 0.5]).reason,
            Some(InvalidReason::SumNotAbovePi)
        );
    }

    #[test]
    fn exact_degenerate_triangle() {
        let r = RelationSet::new(vec![(Sym::Alpha, "pi-2*beta".parse().unwrap())]).unwrap();
        let forms = ["beta", "alpha+beta", "2*beta"].map(|s| s.parse::<AngleForm>().unwrap());
        for t in [0.05, 0.2, 0.35, 0.49] {
            let beta = f64::acos(t);
            let sample = AngleAssignment::new(PI - 2.0 * beta, beta, PI / 2.0);
            let v = is_valid_forms(&forms, &r, &sample).unwrap();
            assert_eq!(v.reason, Some(InvalidReason::Degenerate));
        }
    }

    #[test]
    fn octant_edges() {
        let e = edge_lengths([PI / 2.0; 3]).unwrap();
        for x in e {
            assert!((x - PI / 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn straight_angles() {
        assert_eq!(straight_angle_combinations(&[PI / 2.0], 10), vec![vec![2]]);
        let mut s = straight_angle_combinations(&[PI / 3.0, PI / 2.0], 10);
        s.sort();
        assert_eq!(s, vec![vec![0, 2], vec![3, 0]]);
    }

    #[test]
    fn straight_angles_exact() {
        let r = RelationSet::numeric((1, 4), (1, 3), (1, 2));
        let forms = [AngleForm::alpha(), AngleForm::gamma()];
        let a = AngleAssignment::new(PI / 4.0, PI / 3.0, PI / 2.0);
        let mut s = straight_angle_combinations_exact(&forms, &r, &a, 8).unwrap();
        s.sort();
        assert_eq!(s, vec![vec![0, 2], vec![2, 1], vec![4, 0]]);
    }

    #[test]
    fn parameter_solve() {
        let got = solve_straight_angle_parameter(&[rat(1, 3), rat(1, 2)], &rat(1, 6), &rat(1, 3));
        assert_eq!(got, vec![rat(1, 5), rat(2, 9), rat(1, 4)]);
    }
}
