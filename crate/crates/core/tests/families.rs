use proptest::prelude::*;
use racah_core::algebra::Env;
use racah_core::hyper::jacobi_p;
use racah_core::limits::{jacobi, krawtchouk};
use racah_core::racah::partial_sum;
use racah_core::scalar::{factorial, int, pochhammer, rat};
use racah_core::Rational;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..13).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    // the expanded polynomial against the product of classical Jacobi polynomials
    #[test]
    fn jacobi_expansion_matches_product(
        z in prop::collection::vec(rational(), 2),
        gamma in prop::collection::vec(0i64..6, 3),
        n in prop::collection::vec(0u32..4, 2),
    ) {
        let gamma: Vec<Rational> = gamma.into_iter().map(|g| rat(2 * g + 1, 2)).collect();
        let zs = [z[0].clone(), &z[0] + &z[1], int(1)];
        prop_assume!(zs[0] != int(0) && zs[1] != int(0));
        let mut expected = if (n[0] + n[1]) % 2 == 0 { int(1) } else { int(-1) };
        let mut gs = int(0);
        for k in 1..=2usize {
            gs += &gamma[k - 1];
            let nk = n[k - 1];
            let alpha = int(2 * partial_sum(&n, k - 1)) + &gs + int(k as i64 - 1);
            let arg = int(1) - &zs[k - 1] * int(2) / &zs[k];
            expected *= factorial(nk) * zs[k].pow(nk as i32) / pochhammer(&(&gamma[k] + int(1)), nk)
                * jacobi_p(nk, &arg, &alpha, &gamma[k]);
        }
        prop_assert_eq!(jacobi::jacobi_poly(&n, &gamma).eval(&z), expected);
    }

    #[test]
    fn meixner_at_origin(c in prop::collection::vec(1i64..9, 2), s in rational(), n in prop::collection::vec(0u32..4, 2)) {
        let c: Vec<Rational> = c.into_iter().map(|v| rat(v, 11)).collect();
        prop_assume!(c.iter().sum::<Rational>() != int(1));
        let s = s + rat(1, 97);
        let val = krawtchouk::meixner_poly(&n, &[int(0), int(0)], &c, &s);
        prop_assert_eq!(val.unwrap(), int(1));
    }
}

#[test]
fn krawtchouk_orthogonality() {
    let kp = krawtchouk::KrawParams::new(vec![rat(1, 4), rat(1, 3)], int(3)).unwrap();
    let mut idx = Vec::new();
    for a in 0..=3u32 {
        for b in 0..=3 - a {
            idx.push([a, b]);
        }
    }
    for n in &idx {
        for m in &idx {
            let mut s = int(0);
            for x in idx.iter().map(|v| [v[0] as i64, v[1] as i64]) {
                let xr: Vec<Rational> = x.iter().map(|&v| int(v)).collect();
                let w = krawtchouk::weight(&x, &kp).unwrap();
                s += w * krawtchouk::kraw_poly(n, &xr, &kp.prob, &kp.n).unwrap()
                    * krawtchouk::kraw_poly(m, &xr, &kp.prob, &kp.n).unwrap();
            }
            assert_eq!(s == int(0), n != m, "{:?} {:?}", n, m);
        }
    }
}

#[test]
fn meixner_spectral() {
    let c = [rat(1, 5), rat(2, 7)];
    let s = rat(7, 3);
    let kp = krawtchouk::KrawParams::from_meixner(&c, &s).unwrap();
    let slots = kp.slots();
    for j in 1..=2 {
        let op = krawtchouk::lx(2, j);
        for n in [[1u32, 0], [0, 1], [1, 1], [2, 0], [0, 2]] {
            for x in [[0i64, 0], [2, 1], [5, 3]] {
                let xr: Vec<Rational> = x.iter().map(|&v| int(v)).collect();
                let env = Env::new(&xr[..], &slots[..]);
                let lhs = op.apply(&env, |pt| krawtchouk::meixner_poly(&n, pt, &c, &s)).unwrap();
                let rhs = krawtchouk::mu(j, &n) * krawtchouk::meixner_poly(&n, &xr, &c, &s).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
