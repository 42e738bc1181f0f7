use num_traits::{One, Zero};
use serde::Serialize;

use super::{Exact, Poly, QuadExt, Rational};
use crate::error::{Error, Result};

/// Integral-domain operations needed by fraction-free elimination.
pub trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn r_add(&self, o: &Self) -> Self;
    fn r_sub(&self, o: &Self) -> Self;
    fn r_mul(&self, o: &Self) -> Self;
    fn r_neg(&self) -> Self;
    /// Quotient of an exact division; callers guarantee divisibility.
    fn r_div_exact(&self, o: &Self) -> Self;
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn r_add(&self, o: &Self) -> Self {
        self + o
    }
    fn r_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn r_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn r_neg(&self) -> Self {
        -self
    }
    fn r_div_exact(&self, o: &Self) -> Self {
        self / o
    }
}

impl Ring for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero()
    }
    fn one_like(&self) -> Self {
        Poly::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn r_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn r_sub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn r_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn r_neg(&self) -> Self {
        self.neg()
    }
    fn r_div_exact(&self, o: &Self) -> Self {
        self.div_exact(o).expect("Bareiss division is exact")
    }
}

// field tags are checked once by ExactMatrix before elimination starts
impl Ring for QuadExt {
    fn zero_like(&self) -> Self {
        QuadExt::from_rational(Rational::zero(), self.m)
    }
    fn one_like(&self) -> Self {
        QuadExt::from_rational(Rational::one(), self.m)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn r_add(&self, o: &Self) -> Self {
        self.add(o).expect("same field")
    }
    fn r_sub(&self, o: &Self) -> Self {
        self.sub(o).expect("same field")
    }
    fn r_mul(&self, o: &Self) -> Self {
        self.mul(o).expect("same field")
    }
    fn r_neg(&self) -> Self {
        self.neg()
    }
    fn r_div_exact(&self, o: &Self) -> Self {
        self.div(o).expect("nonzero pivot")
    }
}

/// Determinant of a square row-major matrix by Bareiss fraction-free elimination.
pub fn bareiss_det<R: Ring>(n: usize, entries: &[R]) -> R {
    assert_eq!(entries.len(), n * n, "matrix must be square");
    if n == 0 {
        panic!("empty matrix has no ring element to return");
    }
    let mut a: Vec<R> = entries.to_vec();
    let one = a[0].one_like();
    let mut prev = one.clone();
    let mut sign_neg = false;
    for k in 0..n.saturating_sub(1) {
        if a[k * n + k].is_zero_elem() {
            let Some(p) = (k + 1..n).find(|&r| !a[r * n + k].is_zero_elem()) else {
                return a[0].zero_like();
            };
            for c in 0..n {
                a.swap(k * n + c, p * n + c);
            }
            sign_neg = !sign_neg;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let num = pivot
                    .r_mul(&a[i * n + j])
                    .r_sub(&a[i * n + k].r_mul(&a[k * n + j]));
                a[i * n + j] = num.r_div_exact(&prev);
            }
            a[i * n + k] = a[0].zero_like();
        }
        prev = pivot;
    }
    let d = a[n * n - 1].clone();
    if sign_neg {
        d.r_neg()
    } else {
        d
    }
}

/// Square matrix whose entries all live in one exact ring.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExactMatrix {
    pub n: usize,
    pub entries: Vec<Exact>,
}

impl ExactMatrix {
    pub fn new(n: usize, entries: Vec<Exact>) -> Result<ExactMatrix> {
        if entries.len() != n * n || n == 0 {
            return Err(Error::Domain(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                entries.len()
            )));
        }
        let m = ExactMatrix { n, entries };
        m.ring_tag()?;
        Ok(m)
    }

    pub fn from_rationals(n: usize, entries: Vec<Rational>) -> Result<ExactMatrix> {
        ExactMatrix::new(n, entries.into_iter().map(Exact::Rational).collect())
    }

    pub fn get(&self, i: usize, j: usize) -> &Exact {
        &self.entries[i * self.n + j]
    }

    /// Common ring of all entries, as the name of the first entry's ring.
    pub fn ring_tag(&self) -> Result<String> {
        let first = self.entries[0].ring_name();
        for e in &self.entries[1..] {
            let r = e.ring_name();
            if r != first {
                return Err(Error::RingMismatch(format!("{first} and {r}")));
            }
        }
        Ok(first)
    }

    pub fn det(&self) -> Result<Exact> {
        self.ring_tag()?;
        let n = self.n;
        Ok(match &self.entries[0] {
            Exact::Rational(_) => {
                let v: Vec<Rational> = self
                    .entries
                    .iter()
                    .map(|e| match e {
                        Exact::Rational(q) => q.clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                Exact::Rational(bareiss_det(n, &v))
            }
            Exact::Poly(_) => {
                let v: Vec<Poly> = self
                    .entries
                    .iter()
                    .map(|e| match e {
                        Exact::Poly(p) => p.clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                Exact::Poly(bareiss_det(n, &v))
            }
            Exact::Quad(_) => {
                let v: Vec<QuadExt> = self
                    .entries
                    .iter()
                    .map(|e| match e {
                        Exact::Quad(q) => q.clone(),
                        _ => unreachable!(),
                    })
                    .collect();
                Exact::Quad(bareiss_det(n, &v))
            }
        })
    }

    pub fn to_f64(&self) -> Option<Vec<f64>> {
        self.entries.iter().map(|e| e.to_f64()).collect()
    }
}
