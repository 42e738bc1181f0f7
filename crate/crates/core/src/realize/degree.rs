use num_integer::Roots;
use serde::Serialize;

use crate::error::{Error, Result};

/// Degree of `k^(1/d)` over the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub k: u64,
    pub d: u32,
    pub degree: u32,
    /// `k = r^(d/degree)`; the minimal polynomial is `x^degree - r`.
    pub radicand: u64,
    /// Lower bound on the number of distinct edge lengths forced by the degree.
    pub min_distinct_lengths: u32,
}

/// Exact integer `g`-th root of `k`, if any.
pub fn integer_root(k: u64, g: u32) -> Option<u64> {
    let r = k.nth_root(g);
    (r.checked_pow(g) == Some(k)).then_some(r)
}

fn prime_divisors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Degree of the minimal polynomial of `k^(1/d)`.
///
/// With `g` the largest divisor of `d` such that `k = r^g`, the minimal polynomial is
/// `x^(d/g) - r`: for positive `r` a binomial `x^n - r` is irreducible iff `r` is not a
/// `p`-th power for any prime `p | n`, and maximality of `g` rules that out.
pub fn algebraic_degree(k: u64, d: u32) -> Result<DegreeReport> {
    if k < 2 || d < 2 {
        return Err(Error::Domain(format!(
            "need k >= 2 and d >= 2, got k={k}, d={d}"
        )));
    }
    let (g, r) = (1..=d)
        .rev()
        .filter(|g| d % g == 0)
        .find_map(|g| integer_root(k, g).map(|r| (g, r)))
        .expect("g = 1 always works");
    let n = d / g;
    for p in prime_divisors(n) {
        if integer_root(r, p).is_some() {
            return Err(Error::Domain(format!("x^{n} - {r} is reducible")));
        }
    }
    Ok(DegreeReport {
        k,
        d,
        degree: n,
        radicand: r,
        min_distinct_lengths: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(algebraic_degree(16, 4).unwrap().degree, 1);
        assert_eq!(algebraic_degree(4, 4).unwrap().degree, 2);
        assert_eq!(algebraic_degree(4, 4).unwrap().radicand, 2);
        assert_eq!(algebraic_degree(8, 4).unwrap().degree, 4);
        assert_eq!(algebraic_degree(64, 6).unwrap().degree, 1);
        assert_eq!(algebraic_degree(8, 6).unwrap().degree, 2);
        assert!(algebraic_degree(1, 4).is_err());
        assert!(algebraic_degree(5, 1).is_err());
    }
}
