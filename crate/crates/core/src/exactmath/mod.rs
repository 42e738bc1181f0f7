//! Exact arithmetic over the rationals, `Q[t]` and real quadratic fields.

mod matrix;
mod poly;
mod quad;
mod sturm;

pub use matrix::{bareiss_det, ExactMatrix, Ring};
pub use poly::Poly;
pub use quad::QuadExt;
pub use sturm::{count_real_roots, isolate_roots, sturm_sequence, RootInterval};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use std::fmt;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // ratio too large for direct conversion; scale through strings of digits
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// Closest rational with denominator at most `max_den` (continued fractions).
pub fn rational_approx(x: f64, max_den: i64) -> Rational {
    if !x.is_finite() {
        return Rational::zero();
    }
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    let mut r = x;
    loop {
        let a = r.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let p2 = ai * p1 + p0;
        let q2 = ai * q1 + q0;
        if q2 > max_den as i128 {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = r - a;
        if frac.abs() < 1e-15 {
            break;
        }
        r = 1.0 / frac;
    }
    if q1 == 0 {
        return Rational::from_integer(BigInt::from(x.round() as i64));
    }
    Rational::new(BigInt::from(p1), BigInt::from(q1))
}

/// Tagged exact value living in one of the supported rings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "ring", content = "value")]
pub enum Exact {
    Rational(#[serde(serialize_with = "rational_serde::serialize")] Rational),
    Quad(QuadExt),
    Poly(Poly),
}

impl Exact {
    pub fn ring_name(&self) -> String {
        match self {
            Exact::Rational(_) => "Q".to_string(),
            Exact::Quad(q) => format!("Q(sqrt {})", q.m),
            Exact::Poly(_) => "Q[t]".to_string(),
        }
    }

    /// Numeric value. Polynomials have no value without a point and yield `None`.
    pub fn to_f64(&self) -> Option<f64> {
        match self {
            Exact::Rational(q) => Some(to_f64(q)),
            Exact::Quad(q) => Some(q.to_f64()),
            Exact::Poly(p) => p.constant().map(|c| to_f64(&c)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Exact::Rational(q) => q.is_zero(),
            Exact::Quad(q) => q.is_zero(),
            Exact::Poly(p) => p.is_zero(),
        }
    }

    /// Rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Exact::Rational(q) => Some(q.clone()),
            Exact::Quad(q) if q.b.is_zero() => Some(q.a.clone()),
            Exact::Poly(p) => p.constant(),
            _ => None,
        }
    }

    pub fn neg(&self) -> Exact {
        match self {
            Exact::Rational(q) => Exact::Rational(-q),
            Exact::Quad(q) => Exact::Quad(q.neg()),
            Exact::Poly(p) => Exact::Poly(p.neg()),
        }
    }

    /// Sign of a numeric element; `None` for a non-constant polynomial.
    pub fn signum(&self) -> Option<i32> {
        match self {
            Exact::Rational(q) => Some(sign_of(q)),
            Exact::Quad(q) => Some(q.signum()),
            Exact::Poly(p) => p.constant().map(|c| sign_of(&c)),
        }
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exact::Rational(q) => write!(f, "{q}"),
            Exact::Quad(q) => write!(f, "{q}"),
            Exact::Poly(p) => write!(f, "{p}"),
        }
    }
}

pub fn sign_of(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// Square-free part of a positive integer together with the extracted square root.
/// Returns `(s, r)` with `n = r^2 * s` and `s` square-free.
pub fn square_free_decompose(n: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut r = 1u64;
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        r *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
        p += 1;
    }
    s *= n;
    (s, r)
}

pub(crate) fn check_square_free(m: i64) -> Result<()> {
    if m < 2 {
        return Err(Error::Domain(format!(
            "quadratic field parameter {m} must be at least 2"
        )));
    }
    let (s, _) = square_free_decompose(m as u64);
    if s != m as u64 {
        return Err(Error::Domain(format!("{m} is not square-free")));
    }
    Ok(())
}

pub fn is_one(q: &Rational) -> bool {
    q.is_one()
}

pub(crate) mod rational_serde {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        s.trim()
            .parse::<Rational>()
            .map_err(serde::de::Error::custom)
    }
}

pub(crate) mod rational_vec_serde {
    use super::Rational;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| {
                s.trim()
                    .parse::<Rational>()
                    .map_err(serde::de::Error::custom)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn approx_recovers_small_fractions() {
        assert_eq!(rational_approx(0.75, 100), rat(3, 4));
        assert_eq!(rational_approx(-2.0 / 9.0, 100), rat(-2, 9));
        assert_eq!(rational_approx(1.0 / 3.0 + 1e-12, 100), rat(1, 3));
    }

    #[test]
    fn square_free_parts() {
        assert_eq!(square_free_decompose(12), (3, 2));
        assert_eq!(square_free_decompose(50), (2, 5));
        assert_eq!(square_free_decompose(7), (7, 1));
        assert!(check_square_free(5).is_ok());
        assert!(check_square_free(8).is_err());
    }
}
