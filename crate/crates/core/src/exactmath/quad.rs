use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::{int, sign_of, to_f64, Rational};
use crate::error::{Error, Result};

/// Element `a + b*sqrt(m)` of the real quadratic field `Q(sqrt m)`, `m` square-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadExt {
    #[serde(with = "super::rational_serde")]
    pub a: Rational,
    #[serde(with = "super::rational_serde")]
    pub b: Rational,
    pub m: i64,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational, m: i64) -> Result<QuadExt> {
        super::check_square_free(m)?;
        Ok(QuadExt { a, b, m })
    }

    pub fn from_rational(a: Rational, m: i64) -> QuadExt {
        QuadExt {
            a,
            b: Rational::zero(),
            m,
        }
    }

    /// `sqrt(m)` itself.
    pub fn sqrt(m: i64) -> Result<QuadExt> {
        QuadExt::new(Rational::zero(), int(1), m)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn check(&self, o: &QuadExt) -> Result<()> {
        if self.m != o.m {
            return Err(Error::FieldMismatch(self.m, o.m));
        }
        Ok(())
    }

    pub fn add(&self, o: &QuadExt) -> Result<QuadExt> {
        self.check(o)?;
        Ok(QuadExt {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
            m: self.m,
        })
    }

    pub fn sub(&self, o: &QuadExt) -> Result<QuadExt> {
        self.check(o)?;
        Ok(QuadExt {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
            m: self.m,
        })
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt {
            a: -&self.a,
            b: -&self.b,
            m: self.m,
        }
    }

    pub fn mul(&self, o: &QuadExt) -> Result<QuadExt> {
        self.check(o)?;
        let m = int(self.m);
        Ok(QuadExt {
            a: &self.a * &o.a + &self.b * &o.b * m,
            b: &self.a * &o.b + &self.b * &o.a,
            m: self.m,
        })
    }

    pub fn scale(&self, c: &Rational) -> QuadExt {
        QuadExt {
            a: &self.a * c,
            b: &self.b * c,
            m: self.m,
        }
    }

    pub fn conjugate(&self) -> QuadExt {
        QuadExt {
            a: self.a.clone(),
            b: -&self.b,
            m: self.m,
        }
    }

    /// Field norm `a^2 - m b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * int(self.m)
    }

    pub fn inverse(&self) -> Result<QuadExt> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // the norm of a nonzero element is nonzero because m is not a square
        let n = self.norm();
        Ok(self.conjugate().scale(&n.recip()))
    }

    pub fn div(&self, o: &QuadExt) -> Result<QuadExt> {
        self.check(o)?;
        self.mul(&o.inverse()?)
    }

    /// Exact sign of the real number `a + b sqrt(m)`.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        // opposite signs: compare a^2 with m b^2
        let a2 = &self.a * &self.a;
        let mb2 = &self.b * &self.b * int(self.m);
        if a2 > mb2 {
            sa
        } else {
            sb
        }
    }

    /// Binary64 value computed as `f64(a) + f64(b) * sqrt(f64(m))`: each of the three
    /// conversions and the final multiply-add round to nearest, so the absolute error is a
    /// few ulps of `|a| + |b| sqrt(m)`.
    pub fn to_f64(&self) -> f64 {
        to_f64(&self.a) + to_f64(&self.b) * (self.m as f64).sqrt()
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*sqrt({})", self.b, self.m),
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                write!(f, "{} {} {}*sqrt({})", self.a, sign, self.b.abs(), self.m)
            }
        }
    }
}
