use proptest::prelude::*;
use racah_core::scalar::{factorial, int, pochhammer, GaussianRational, RatFun, UniPoly};
use racah_core::{Rational, Scalar};

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..60, 1i64..25).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(re, im)| GaussianRational::new(re, im))
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (prop::collection::vec(rational(), 1..4), prop::collection::vec(rational(), 1..3)).prop_filter_map(
        "zero denominator",
        |(n, d)| RatFun::new(UniPoly::from_coeffs(n), UniPoly::from_coeffs(d)),
    )
}

fn field_laws<F: Scalar + PartialEq + core::fmt::Debug>(a: &F, b: &F, c: &F) {
    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
    assert_eq!(a.sub(a), F::zero());
    if !a.is_zero() {
        assert_eq!(a.mul(&a.inv().unwrap()), F::one());
    }
}

proptest! {
    #[test]
    fn rational_field(a in rational(), b in rational(), c in rational()) {
        field_laws(&a, &b, &c);
    }

    #[test]
    fn gaussian_field(a in gaussian(), b in gaussian(), c in gaussian()) {
        field_laws(&a, &b, &c);
    }

    #[test]
    fn pochhammer_splits(a in rational(), m in 0u32..6, k in 0u32..6) {
        let joined = pochhammer(&a, m + k);
        let split = pochhammer(&a, m) * pochhammer(&(&a + int(m as i64)), k);
        prop_assert_eq!(joined, split);
    }

    #[test]
    fn pochhammer_is_factorial_ratio(x in 1u32..15, n in 0u32..15) {
        prop_assume!(n < x);
        // (x - n)_n = (x - 1)! / (x - n - 1)!
        let lhs = pochhammer(&int((x - n) as i64), n);
        prop_assert_eq!(lhs, factorial(x - 1) / factorial(x - n - 1));
    }

    #[test]
    fn ratfun_eval_homomorphism(f in ratfun(), g in ratfun(), t in rational()) {
        let (Some(fv), Some(gv)) = (f.eval(&t), g.eval(&t)) else { return Ok(()); };
        if let Some(v) = Scalar::add(&f, &g).eval(&t) { prop_assert_eq!(v, &fv + &gv); }
        if let Some(v) = Scalar::sub(&f, &g).eval(&t) { prop_assert_eq!(v, &fv - &gv); }
        if let Some(v) = Scalar::mul(&f, &g).eval(&t) { prop_assert_eq!(v, &fv * &gv); }
        if let Some(q) = Scalar::div(&f, &g) {
            if let Some(v) = q.eval(&t) {
                prop_assert_eq!(v, fv / gv);
            }
        }
    }
}
