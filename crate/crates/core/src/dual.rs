//! Duality between the `x` and `n` sides of the Racah system: the
//! involutive change of variables, the homomorphism carrying difference
//! operators in `x` to difference operators in `n`, and the resulting
//! operators diagonalized in the degree variable.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{DiffOperator, Expr, Leaf};
use crate::error::{Error, Result};
use crate::hyper::cleared_series;
use crate::racah::{n_slot, partial_sum, RacahSystem};
use crate::scalar::{int, Rational};

/// A point of `(x, n, beta)` together with `N`, which the duality fixes.
#[derive(Clone, Debug, PartialEq)]
pub struct DualPoint {
    pub x: Vec<Rational>,
    pub n: Vec<Rational>,
    pub beta: Vec<Rational>,
    pub big_n: Rational,
}

/// Map the dual parameters to the originals: `beta_0` is fixed and
/// `beta_i = beta~_0 - beta~_{p+2-i} - 2N + 1`. Involutive.
pub fn dual_beta(beta: &[Rational], big_n: &Rational) -> Vec<Rational> {
    let q = beta.len() - 1;
    let mut out = vec![beta[0].clone()];
    for i in 1..=q {
        out.push(&beta[0] - &beta[q + 1 - i] - big_n * int(2) + int(1));
    }
    out
}

/// The duality map. It is its own inverse.
pub fn dual_map(t: &DualPoint) -> Result<DualPoint> {
    let p = t.x.len();
    if t.n.len() != p || t.beta.len() != p + 2 {
        return Err(Error::InvalidParams("dual map needs |x| = |n| = p and p + 2 parameters".into()));
    }
    let (xt, nt, bt, big_n) = (&t.x, &t.n, &t.beta, &t.big_n);
    let nsum = |j: usize| nt[..j].iter().fold(int(0), |a, b| a + b);
    let x = (1..=p)
        .map(|i| nsum(p + 1 - i) + &bt[p + 2 - i] - &bt[0] + big_n - int(1))
        .collect();
    let mut n = vec![&xt[p - 1] + &bt[p] + big_n];
    for i in 2..=p {
        n.push(&xt[p - i] - &xt[p + 1 - i] + &bt[p + 1 - i] - &bt[p + 2 - i]);
    }
    Ok(DualPoint { x, n, beta: dual_beta(bt, big_n), big_n: big_n.clone() })
}

/// Given integer indices `n` and `n~` and dual parameters, return the
/// points `x` and `x~` and parameters `beta` that make `(x~, n~, beta~)`
/// and `(x, n, beta)` dual to each other.
pub fn dual_pair(
    n: &[u32],
    n_dual: &[u32],
    beta_dual: &[Rational],
    big_n: &Rational,
) -> (Vec<Rational>, Vec<Rational>, Vec<Rational>) {
    let p = n.len();
    let beta = dual_beta(beta_dual, big_n);
    // N_1^i = x~_{p+1-i} + beta~_{p+1-i} + N
    let mut x_dual = vec![int(0); p];
    for i in 1..=p {
        x_dual[p - i] = int(partial_sum(n, i)) - &beta_dual[p + 1 - i] - big_n;
    }
    let nd: Vec<Rational> = n_dual.iter().map(|&v| int(v as i64)).collect();
    let image = dual_map(&DualPoint { x: x_dual.clone(), n: nd, beta: beta_dual.to_vec(), big_n: big_n.clone() })
        .expect("shapes match");
    (image.x, x_dual, beta)
}

/// Image of an `x`-side expression of dimension `p` on the `n` side.
pub fn b_map_expr(p: usize, e: &Expr) -> Expr {
    let ns = n_slot(p);
    let img = move |l: Leaf| match l {
        Leaf::Var(k0) => {
            let k = k0 + 1;
            let s = crate::algebra::sum((0..=p - k).map(Expr::var));
            Some(s + Expr::param(p + 2 - k) - Expr::param(0) + Expr::param(ns) - Expr::one())
        }
        Leaf::Param(k) if (1..=p + 1).contains(&k) => {
            Some(Expr::param(0) - Expr::param(p + 2 - k) - Expr::int(2) * Expr::param(ns) + Expr::one())
        }
        _ => None,
    };
    e.subst(&img)
}

/// Image of a shift `E_x^nu`: `E_{x_k}` goes to `E_{n_{p+1-k}} E_{n_{p+2-k}}^{-1}`.
pub fn b_map_shift(nu: &[i32]) -> Vec<i32> {
    let p = nu.len();
    let mut out = vec![0; p];
    for (k0, &s) in nu.iter().enumerate() {
        out[p - 1 - k0] += s;
        if k0 >= 1 {
            out[p - k0] -= s;
        }
    }
    out
}

/// Image of an `x`-side operator of arity `p`.
pub fn b_map(op: &DiffOperator) -> DiffOperator {
    let p = op.arity();
    op.remap(p, |nu, c| (b_map_shift(nu), b_map_expr(p, c)))
}

/// `L^n_j`, the image of `L^x_j`.
pub fn ln(sys: &RacahSystem, j: usize) -> DiffOperator {
    b_map(&sys.lx(j))
}

/// Eigenvalue of `L^n_j`: `-(x_{p+1-j} - N)(x_{p+1-j} + beta_{p+1-j} + N)`.
pub fn kappa(j: usize, x: &[Rational], beta: &[Rational], big_n: &Rational) -> Rational {
    let p = x.len();
    let i = p + 1 - j;
    let xi = &x[i - 1];
    -((xi - big_n) * (xi + &beta[i] + big_n))
}

/// The `k`-th factor of the product formula evaluated two ways: as
/// written, and after the double Whipple transformation used for the
/// duality (one form for the end factors, another for interior ones).
pub fn r_factor_forms(
    k: usize,
    n: &[u32],
    x: &[Rational],
    beta: &[Rational],
    big_n: &Rational,
) -> (Rational, Rational) {
    let p = n.len();
    let nk = n[k - 1];
    let m1 = int(partial_sum(n, k - 1));
    let m = int(partial_sum(n, k));
    let xk = &x[k - 1];
    let xk1 = if k < p { &x[k] } else { big_n };
    let (b0, bk, bk1) = (&beta[0], &beta[k], &beta[k + 1]);
    let one = int(1);
    let standard = cleared_series(
        nk,
        &[
            int(nk as i64) + &m1 * int(2) + bk1 - b0 - &one,
            &m1 - xk,
            &m1 + bk + xk,
        ],
        &[&m1 * int(2) + bk - b0, &m1 + bk1 + xk1, &m1 - xk1],
        &one,
    );
    let rewritten = if k == 1 || k == p {
        cleared_series(
            nk,
            &[
                -xk1 - xk - bk,
                xk1 - xk + bk1 - bk,
                &one - &m1 * int(2) - int(nk as i64) - bk + b0,
            ],
            &[&one - &m - xk - bk, bk1 - bk, -&m - bk + b0 + &one - xk],
            &one,
        )
    } else {
        cleared_series(
            nk,
            &[xk1 - xk + bk1 - bk, &m1 - b0 - xk, &one - &m + xk1],
            &[&one - &m - xk - bk, &m1 + xk1 + bk1 - b0, xk1 - xk - int(nk as i64) + &one],
            &one,
        )
    };
    (standard, rewritten)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Env, Sampler};
    use crate::racah::{racah_hat, RacahParams};
    use crate::scalar::rat;

    #[test]
    fn involutive() {
        let mut s = Sampler::new(1);
        for p in 1..=4 {
            let t = DualPoint { x: s.rationals(p), n: s.rationals(p), beta: s.rationals(p + 2), big_n: s.rational() };
            assert_eq!(dual_map(&dual_map(&t).unwrap()).unwrap(), t);
        }
    }

    #[test]
    fn shift_image() {
        assert_eq!(b_map_shift(&[1, 0, 0]), vec![0, 0, 1]);
        assert_eq!(b_map_shift(&[0, 1, 0]), vec![0, 1, -1]);
        assert_eq!(b_map_shift(&[0, 0, -1]), vec![-1, 1, 0]);
    }

    #[test]
    fn hat_duality_p2() {
        let mut s = Sampler::new(3);
        let bt = s.rationals(4);
        let big_n = rat(17, 3);
        for n in [[0u32, 0], [1, 0], [0, 2], [1, 1]] {
            for nd in [[0u32, 1], [2, 0], [1, 1]] {
                let (x, xd, beta) = dual_pair(&n, &nd, &bt, &big_n);
                let a = racah_hat(&n, &x, &beta, &big_n).unwrap();
                let b = racah_hat(&nd, &xd, &bt, &big_n).unwrap();
                assert_eq!(a, b, "{:?} {:?}", n, nd);
            }
        }
    }

    #[test]
    fn n_side_spectral_p2() {
        let sys = RacahSystem::new(2);
        let mut s = Sampler::new(8);
        let params = RacahParams::generic(2, &mut s, None);
        let slots = params.slots();
        let x = s.rationals(2);
        for j in 1..=2 {
            let op = ln(&sys, j);
            for n in [[0u32, 0], [1, 0], [0, 1], [2, 1]] {
                let nv: Vec<Rational> = n.iter().map(|&v| int(v as i64)).collect();
                let env = Env::new(&nv[..], &slots[..]);
                let lhs = op
                    .apply_guarded(
                        &env,
                        |pt| pt.iter().all(|v| v >= &int(0)),
                        |pt| {
                            let m: Vec<u32> = pt.iter().map(|v| v.to_integer().try_into().unwrap()).collect();
                            racah_hat(&m, &x, &params.beta, &params.n)
                        },
                    )
                    .unwrap();
                let rhs = kappa(j, &x, &params.beta, &params.n) * racah_hat(&n, &x, &params.beta, &params.n).unwrap();
                assert_eq!(lhs, rhs, "j={} n={:?}", j, n);
            }
        }
    }

    #[test]
    fn factor_forms_agree() {
        let mut s = Sampler::new(6);
        for p in 1..=3 {
            let x = s.rationals(p);
            let beta = s.rationals(p + 2);
            let big_n = s.rational();
            let n: Vec<u32> = (0..p as u32).map(|i| i % 3 + 1).collect();
            for k in 1..=p {
                let (a, b) = r_factor_forms(k, &n, &x, &beta, &big_n);
                assert_eq!(a, b, "p={} k={}", p, k);
            }
        }
    }
}
