use proptest::prelude::*;

use reptile_lab::exactmath::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn matrix(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(small_rat(), n * n)
}

/// Leibniz expansion, used as an independent oracle for the elimination.
fn leibniz(n: usize, a: &[Rational]) -> Rational {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = vec![];
        for p in perms(n - 1) {
            for pos in 0..n {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let mut total = int(0);
    for p in perms(n) {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let mut term = if inversions % 2 == 0 { int(1) } else { int(-1) };
        for (i, &j) in p.iter().enumerate() {
            term *= &a[i * n + j];
        }
        total += term;
    }
    total
}

fn matmul(n: usize, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![int(0); n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[i * n + j] += &a[i * n + k] * &b[k * n + j];
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn elimination_matches_leibniz(n in 1usize..=4, seed in matrix(4)) {
        let a = &seed[..n * n];
        prop_assert_eq!(bareiss_det(n, a), leibniz(n, a));
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(3), b in matrix(3)) {
        let ab = matmul(3, &a, &b);
        prop_assert_eq!(bareiss_det(3, &ab), bareiss_det(3, &a) * bareiss_det(3, &b));
    }

    #[test]
    fn exact_matrix_det_agrees(a in matrix(3)) {
        let m = ExactMatrix::from_rationals(3, a.clone()).unwrap();
        prop_assert_eq!(m.det().unwrap().as_rational(), Some(bareiss_det(3, &a)));
    }

    #[test]
    fn division_with_remainder(
        a in proptest::collection::vec(small_rat(), 1..7),
        d in proptest::collection::vec(small_rat(), 1..4),
    ) {
        let (a, d) = (Poly::new(a), Poly::new(d));
        prop_assume!(!d.is_zero());
        let (q, r) = a.div_rem(&d).unwrap();
        prop_assert_eq!(q.mul(&d).add(&r), a);
        prop_assert!(r.is_zero() || r.degree() < d.degree());
    }

    #[test]
    fn sturm_counts_known_roots(
        roots in proptest::collection::btree_set((-12i64..=12, 1i64..=4), 1..6),
        lo in -4i64..=0,
        width in 1i64..=6,
    ) {
        let roots: std::collections::BTreeSet<Rational> = roots.into_iter().map(|(n, d)| rat(n, d)).collect();
        let p = roots.iter().fold(Poly::one(), |acc, r| acc.mul(&Poly::new(vec![-r.clone(), int(1)])));
        // repeated factors must not be double counted
        let p2 = p.mul(&Poly::new(vec![-roots.iter().next().unwrap().clone(), int(1)]));
        let (a, b) = (int(lo), int(lo + width));
        let inside = roots.iter().filter(|r| **r > a && **r < b).count();
        prop_assert_eq!(count_real_roots(&p, Some(&a), Some(&b)).unwrap(), inside);
        prop_assert_eq!(count_real_roots(&p2, Some(&a), Some(&b)).unwrap(), inside);
        prop_assert_eq!(count_real_roots(&p, None, None).unwrap(), roots.len());

        let eps = rat(1, 1000);
        let iv = isolate_roots(&p2, &eps).unwrap();
        prop_assert_eq!(iv.len(), roots.len());
        for (r, i) in roots.iter().zip(&iv) {
            prop_assert!(i.lo <= *r && *r <= i.hi && i.width() <= eps);
        }
    }

    #[test]
    fn quadratic_field_inverse_and_norm(
        a in small_rat(), b in small_rat(), c in small_rat(), d in small_rat(),
        m in prop::sample::select(vec![2i64, 3, 5, 6, 7]),
    ) {
        let x = QuadExt::new(a, b, m).unwrap();
        let y = QuadExt::new(c, d, m).unwrap();
        prop_assume!(!x.is_zero());
        let one = QuadExt::from_rational(int(1), m);
        prop_assert_eq!(x.mul(&x.inverse().unwrap()).unwrap(), one);
        prop_assert_eq!(x.mul(&y).unwrap().norm(), x.norm() * y.norm());
        let v = x.to_f64();
        prop_assert!(v.abs() < 1e-12 || v.signum() as i32 == x.signum());
    }
}

#[test]
fn fields_do_not_mix() {
    let a = QuadExt::sqrt(2).unwrap();
    let b = QuadExt::sqrt(3).unwrap();
    assert!(a.add(&b).is_err());
    assert!(QuadExt::new(int(0), int(1), 4).is_err());
}

#[test]
fn zero_polynomial_has_no_sturm_sequence() {
    assert!(count_real_roots(&Poly::zero(), None, None).is_err());
    assert!(count_real_roots(&Poly::t(), Some(&int(1)), Some(&int(0))).is_err());
}

#[test]
fn irrational_roots_are_bracketed() {
    // 4t^2 - 3 has roots +- sqrt(3)/2
    let p = Poly::from_ints(&[-3, 0, 4]);
    let iv = isolate_roots(&p, &rat(1, 1 << 20)).unwrap();
    let want = 3f64.sqrt() / 2.0;
    assert_eq!(iv.len(), 2);
    assert!((iv[1].midpoint_f64() - want).abs() < 1e-6);
    assert!((iv[0].midpoint_f64() + want).abs() < 1e-6);
}
