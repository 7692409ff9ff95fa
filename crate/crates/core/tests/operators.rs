use proptest::prelude::*;
use racah_core::algebra::{is_zero_operator, DiffOperator, Env, Expr, MultiPoly};
use racah_core::dual::{b_map, ln};
use racah_core::racah::RacahSystem;
use racah_core::scalar::int;
use racah_core::Rational;

fn small_op() -> impl Strategy<Value = DiffOperator> {
    prop::collection::vec(((-1i32..=1, -1i32..=1), (-3i64..4, -3i64..4, -3i64..4)), 1..4).prop_map(|ts| {
        DiffOperator::from_terms(
            2,
            ts.into_iter().map(|((a, b), (c0, c1, c2))| {
                (vec![a, b], Expr::int(c0) + Expr::int(c1) * Expr::var(0) + Expr::int(c2) * Expr::var(1) * Expr::var(0))
            }),
        )
    })
}

fn test_fn(pt: &[Rational]) -> Rational {
    &pt[0] * &pt[0] * &pt[1] - &pt[1] * int(3) + int(2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compose_then_apply(l in small_op(), m in small_op(), x0 in -5i64..5, x1 in -5i64..5) {
        let x = [int(x0), int(x1)];
        let env = Env::new(&x[..], &[]);
        let lhs = l.compose(&m).apply(&env, |p| Ok(test_fn(p))).unwrap();
        let rhs = l
            .apply(&env, |y| {
                let inner = Env::new(y, &[]);
                m.apply(&inner, |p| Ok(test_fn(p)))
            })
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn partial_derivative_rules(a in prop::collection::vec(-4i64..5, 3), b in prop::collection::vec(-4i64..5, 3)) {
        let poly = |c: &[i64]| {
            let z0 = MultiPoly::var(2, 0);
            let z1 = MultiPoly::var(2, 1);
            MultiPoly::constant(2, int(c[0]))
                .add(&z0.mul(&z1).scale(&int(c[1])))
                .add(&z0.pow(3).scale(&int(c[2])))
        };
        let (f, g) = (poly(&a), poly(&b));
        for i in 0..2 {
            prop_assert_eq!(f.add(&g).partial(i), f.partial(i).add(&g.partial(i)));
            prop_assert_eq!(f.mul(&g).partial(i), f.partial(i).mul(&g).add(&f.mul(&g.partial(i))));
        }
    }
}

#[test]
fn involution_respects_shift_rule() {
    let sys = RacahSystem::new(2);
    let g = Expr::var(0) * Expr::var(1) + Expr::param(1) * Expr::var(0);
    for i in 1..=2 {
        for j in 0..2 {
            let mut nu = vec![0; 2];
            nu[j] = 1;
            let e = DiffOperator::shift(nu.clone());
            let lhs = sys.involution(&e, i).compose(&sys.involution(&DiffOperator::multiplication(2, g.clone()), i));
            let rhs = sys
                .involution(&DiffOperator::multiplication(2, g.shift_vars(&nu)), i)
                .compose(&sys.involution(&e, i));
            assert!(is_zero_operator(&lhs.sub(&rhs), 10, 1).unwrap());
        }
    }
}

#[test]
fn operators_are_involution_invariant() {
    for p in 1..=3 {
        let sys = RacahSystem::new(p);
        for j in 1..=p {
            let op = sys.lx(j);
            for i in 1..=p {
                let diff = sys.involution(&op, i).sub(&op);
                assert!(is_zero_operator(&diff, 8, 3).unwrap(), "p={} j={} i={}", p, j, i);
            }
            assert!(is_zero_operator(&sys.flip_n(&op).sub(&op), 8, 4).unwrap(), "p={} j={}", p, j);
        }
    }
}

#[test]
fn b_map_is_multiplicative() {
    let sys = RacahSystem::new(2);
    let (a, b) = (sys.lx(1), sys.lx(2));
    let diff = b_map(&a.compose(&b)).sub(&b_map(&a).compose(&b_map(&b)));
    assert!(is_zero_operator(&diff, 6, 5).unwrap());
}

#[test]
fn dual_operator_three_term_for_p1() {
    let sys = RacahSystem::new(1);
    let mut support = ln(&sys, 1).support();
    support.sort();
    assert_eq!(support, vec![vec![-1], vec![0], vec![1]]);
}
