use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{int, rat, to_f64, Poly, Rational};
use crate::error::{Error, Result};

/// Sturm chain of the square-free part of `p`.
pub fn sturm_sequence(p: &Poly) -> Result<Vec<Poly>> {
    let p0 = p.square_free()?;
    let mut seq = vec![p0.clone()];
    let mut prev = p0.clone();
    let mut cur = p0.derivative();
    while !cur.is_zero() {
        seq.push(cur.clone());
        let (_, r) = prev.div_rem(&cur)?;
        prev = cur;
        cur = r.neg();
    }
    Ok(seq)
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut v = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

#[derive(Clone, Debug)]
enum Point<'a> {
    NegInf,
    At(&'a Rational),
    PosInf,
}

fn variations_at(seq: &[Poly], x: Point<'_>) -> usize {
    variations(seq.iter().map(|p| match x {
        Point::NegInf => p.sign_at_infinity(false),
        Point::PosInf => p.sign_at_infinity(true),
        Point::At(q) => p.sign_at(q),
    }))
}

/// Distinct real roots of `p` in the open interval `(lo, hi)`; `None` bounds mean infinity.
pub fn count_real_roots(p: &Poly, lo: Option<&Rational>, hi: Option<&Rational>) -> Result<usize> {
    if let (Some(a), Some(b)) = (lo, hi) {
        if a >= b {
            return Err(Error::Domain(format!("empty interval ({a}, {b})")));
        }
    }
    let seq = sturm_sequence(p)?;
    Ok(count_with(&seq, lo, hi))
}

fn count_with(seq: &[Poly], lo: Option<&Rational>, hi: Option<&Rational>) -> usize {
    // with a square-free chain, V(a) - V(b) counts the roots in (a, b]
    let va = variations_at(seq, lo.map_or(Point::NegInf, Point::At));
    let vb = variations_at(seq, hi.map_or(Point::PosInf, Point::At));
    let hi_root = hi.is_some_and(|b| seq[0].eval(b).is_zero());
    va - vb - usize::from(hi_root)
}

/// Isolating interval for one real root. `lo == hi` marks an exactly located rational root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootInterval {
    #[serde(with = "super::rational_serde")]
    pub lo: Rational,
    #[serde(with = "super::rational_serde")]
    pub hi: Rational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn midpoint_f64(&self) -> f64 {
        to_f64(&self.midpoint())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Disjoint isolating intervals of width at most `precision`, one per distinct real root,
/// sorted ascending.
pub fn isolate_roots(p: &Poly, precision: &Rational) -> Result<Vec<RootInterval>> {
    if !precision.is_positive() {
        return Err(Error::Domain("precision must be positive".into()));
    }
    let seq = sturm_sequence(p)?;
    let b = seq[0].root_bound();
    let mut out = Vec::new();
    bisect(&seq, -b.clone(), b, precision, &mut out);
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(out)
}

fn bisect(
    seq: &[Poly],
    lo: Rational,
    hi: Rational,
    precision: &Rational,
    out: &mut Vec<RootInterval>,
) {
    let n = count_with(seq, Some(&lo), Some(&hi));
    if n == 0 {
        return;
    }
    if n == 1 && &(&hi - &lo) <= precision {
        out.push(RootInterval { lo, hi });
        return;
    }
    let mid = (&lo + &hi) * rat(1, 2);
    if seq[0].eval(&mid).is_zero() {
        out.push(RootInterval {
            lo: mid.clone(),
            hi: mid.clone(),
        });
    }
    bisect(seq, lo, mid.clone(), precision, out);
    bisect(seq, mid, hi, precision, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_counts() {
        let p = Poly::from_ints(&[-1, 2]);
        assert_eq!(
            count_real_roots(&p, Some(&int(0)), Some(&rat(1, 2))).unwrap(),
            0
        );
        assert_eq!(
            count_real_roots(&p, Some(&int(0)), Some(&rat(3, 5))).unwrap(),
            1
        );
        assert_eq!(
            count_real_roots(&p, Some(&rat(1, 2)), Some(&int(1))).unwrap(),
            0
        );
    }

    #[test]
    fn zero_polynomial_is_error() {
        assert_eq!(
            count_real_roots(&Poly::zero(), None, None),
            Err(Error::ZeroPolynomial)
        );
        assert!(isolate_roots(&Poly::zero(), &rat(1, 100)).is_err());
    }

    #[test]
    fn double_root_at_zero() {
        let roots = isolate_roots(&Poly::from_ints(&[0, 0, 1]), &rat(1, 1000)).unwrap();
        assert_eq!(roots.len(), 1);
        assert!(roots[0].lo <= int(0) && int(0) <= roots[0].hi);
    }

    #[test]
    fn irrational_roots_are_bracketed() {
        // t^2 - 2
        let p = Poly::from_ints(&[-2, 0, 1]);
        let roots = isolate_roots(&p, &rat(1, 1_000_000)).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[1].midpoint_f64() - 2f64.sqrt()).abs() < 1e-6);
        assert!((roots[0].midpoint_f64() + 2f64.sqrt()).abs() < 1e-6);
    }
}
