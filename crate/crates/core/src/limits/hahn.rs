//! Multivariable Hahn polynomials as the `beta_0 -> oo` limit of the Racah
//! system, with `beta_k = beta_0 + gamma_1^k + k` and `y_k = x_k - x_{k-1}`.
//!
//! Parameter slots reuse the Racah layout: slot 0 is the limit variable
//! `beta_0` (its value is ignored), slot `k` in `1..=p+1` holds `gamma_k`,
//! and slot `p+2` holds `N`.

use alloc::vec::Vec;

use crate::algebra::{sum, DiffOperator, Expr, Leaf};
use crate::dual::ln;
use crate::error::{Error, Result};
use crate::hyper::hahn_h;
use crate::racah::{n_slot, partial_sum, racah_hat, RacahSystem};
use crate::scalar::{int, limit_coeff_at_infinity, pochhammer, RatFun, Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct HahnParams {
    /// `gamma_1..gamma_{p+1}`.
    pub gamma: Vec<Rational>,
    pub n: Rational,
}

impl HahnParams {
    pub fn new(gamma: Vec<Rational>, n: Rational) -> Result<Self> {
        if gamma.len() < 2 {
            return Err(Error::InvalidParams("need gamma_1..gamma_{p+1} with p >= 1".into()));
        }
        Ok(HahnParams { gamma, n })
    }

    pub fn p(&self) -> usize {
        self.gamma.len() - 1
    }

    /// Slot values: a placeholder for `beta_0`, then `gamma`, then `N`.
    pub fn slots(&self) -> Vec<Rational> {
        let mut v = vec_with(int(0), &self.gamma);
        v.push(self.n.clone());
        v
    }

    /// `gamma_1 + ... + gamma_k`.
    pub fn gamma_sum(&self, k: usize) -> Rational {
        self.gamma[..k].iter().fold(int(0), |a, b| a + b)
    }

    /// `y_{p+1} = N - |y|`.
    pub fn last_coordinate(&self, y: &[Rational]) -> Rational {
        y.iter().fold(self.n.clone(), |a, b| a - b)
    }
}

fn vec_with(first: Rational, rest: &[Rational]) -> Vec<Rational> {
    let mut v = alloc::vec![first];
    v.extend_from_slice(rest);
    v
}

/// `H_p(n; y; gamma; N)`.
pub fn hahn_poly<F: Scalar>(n: &[u32], y: &[F], gamma: &[F], big_n: &F) -> Result<F> {
    let p = n.len();
    let tot: u32 = n.iter().sum();
    let mut den = pochhammer(&big_n.neg(), tot);
    for k in 1..=p {
        den = den.mul(&pochhammer(&gamma[k].add_int(1), n[k - 1]));
    }
    let mut ys = F::zero();
    let mut gs = F::zero();
    let mut acc = if tot % 2 == 0 { F::one() } else { F::one().neg() };
    for k in 1..=p {
        ys = ys.add(&y[k - 1]);
        gs = gs.add(&gamma[k - 1]);
        let ys_next = if k < p { ys.add(&y[k]) } else { big_n.clone() };
        let m1 = F::from_int(partial_sum(n, k - 1));
        let a = m1.add(&m1).add(&gs).add_int(k as i64 - 1);
        acc = acc.mul(&hahn_h(n[k - 1], &ys.sub(&m1), &a, &gamma[k], &ys_next.sub(&m1)));
    }
    acc.div(&den).ok_or(Error::ZeroNormalization)
}

/// Racah data `(x, beta)` for given `y`, `gamma` and `beta_0`.
pub fn racah_data<F: Scalar>(y: &[F], gamma: &[F], beta0: &F) -> (Vec<F>, Vec<F>) {
    let mut x = Vec::with_capacity(y.len());
    let mut acc = F::zero();
    for v in y {
        acc = acc.add(v);
        x.push(acc.clone());
    }
    let mut beta = alloc::vec![beta0.clone()];
    let mut g = F::zero();
    for (k, gk) in gamma.iter().enumerate() {
        g = g.add(gk);
        beta.push(beta0.add(&g).add_int(k as i64 + 1));
    }
    (x, beta)
}

/// Limit of the normalized Racah polynomial as `beta_0 -> oo`, computed by
/// carrying `beta_0` as an indeterminate. The limit is taken at order 0, so
/// no power of `beta_0` has to be divided out.
pub fn racah_hat_limit(n: &[u32], y: &[Rational], params: &HahnParams) -> Result<Rational> {
    let lift = |v: &[Rational]| v.iter().cloned().map(RatFun::constant).collect::<Vec<_>>();
    let (x, beta) = racah_data(&lift(y), &lift(&params.gamma), &RatFun::t());
    let f = racah_hat(n, &x, &beta, &RatFun::constant(params.n.clone()))?;
    limit_coeff_at_infinity(&f, 0)
}

/// Substitute `beta_k -> beta_0 + gamma_1^k + k` in the parameter slots.
pub fn gamma_substitute(p: usize, e: &Expr) -> Expr {
    let f = move |l: Leaf| match l {
        Leaf::Param(k) if (1..=p + 1).contains(&k) => {
            Some(Expr::param(0) + sum((1..=k).map(Expr::param)) + Expr::int(k as i64))
        }
        _ => None,
    };
    e.subst(&f)
}

/// Operator in `y` diagonalized by `H_p`:
/// `sum over l != m <= j+1 of (y_l + gamma_l + 1) y_m (E_{y_l} E_{y_m}^{-1} - 1)`
/// where index `p+1` carries `y_{p+1} = N - |y|` and no shift.
pub fn y_operator(p: usize, j: usize) -> DiffOperator {
    assert!((1..=p).contains(&j));
    let y = |l: usize| {
        if l <= p {
            Expr::var(l - 1)
        } else {
            Expr::param(n_slot(p)) - sum((0..p).map(Expr::var))
        }
    };
    let mut op = DiffOperator::zero(p);
    for l in 1..=j + 1 {
        for m in 1..=j + 1 {
            if l == m {
                continue;
            }
            let c = (y(l) + Expr::param(l) + Expr::one()) * y(m);
            let mut nu = alloc::vec![0; p];
            if l <= p {
                nu[l - 1] += 1;
            }
            if m <= p {
                nu[m - 1] -= 1;
            }
            op.add_term(nu, c.clone());
            op.add_term(alloc::vec![0; p], -c);
        }
    }
    op
}

/// `lim (1/beta_0) L^n_j` after the parameter change, as an operator whose
/// coefficients are exact limits.
pub fn n_operator(sys: &RacahSystem, j: usize) -> DiffOperator {
    let p = sys.p();
    ln(sys, j).map_coeffs(|c| Expr::limit(gamma_substitute(p, c), 0, 1))
}

/// `-N_1^j (N_1^j + j + gamma_1 + ... + gamma_{j+1})`.
pub fn mu(j: usize, n: &[u32], gamma: &[Rational]) -> Rational {
    let s = int(partial_sum(n, j));
    let g = gamma[..=j].iter().fold(int(0), |a, b| a + b);
    -(&s * (&s + int(j as i64) + g))
}

/// `N - y_1 - ... - y_{p+1-j}`.
pub fn kappa(j: usize, y: &[Rational], big_n: &Rational) -> Rational {
    let p = y.len();
    y[..p + 1 - j].iter().fold(big_n.clone(), |a, b| a - b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Env;
    use crate::scalar::rat;

    fn params() -> HahnParams {
        HahnParams::new(alloc::vec![int(1), int(2), int(3)], int(4)).unwrap()
    }

    #[test]
    fn constant_polynomial() {
        let hp = params();
        assert_eq!(hahn_poly(&[0, 0], &[int(1), int(2)], &hp.gamma, &hp.n).unwrap(), int(1));
    }

    #[test]
    fn limit_of_racah() {
        let hp = HahnParams::new(alloc::vec![rat(1, 3), rat(-2, 7), rat(5, 4)], rat(9, 2)).unwrap();
        let y = [rat(2, 5), rat(-3, 7)];
        for n in [[1u32, 0], [0, 1], [2, 1]] {
            let lim = racah_hat_limit(&n, &y, &hp).unwrap();
            assert_eq!(lim, hahn_poly(&n, &y, &hp.gamma, &hp.n).unwrap(), "{:?}", n);
        }
    }

    #[test]
    fn term_count() {
        // p(p+1) nonidentity terms for j = p
        for p in 1..=3 {
            let op = y_operator(p, p);
            assert_eq!(op.support().iter().filter(|s| s.iter().any(|&v| v != 0)).count(), p * (p + 1));
        }
    }

    #[test]
    fn spectral_both_sides() {
        let hp = params();
        let slots = hp.slots();
        let sys = RacahSystem::new(2);
        for j in 1..=2 {
            let yop = y_operator(2, j);
            let nop = n_operator(&sys, j);
            for n in [[0u32, 0], [1, 0], [0, 1], [1, 1], [2, 0]] {
                for y in [[0i64, 0], [1, 2], [2, 1], [0, 4]] {
                    let yr: Vec<Rational> = y.iter().map(|&v| int(v)).collect();
                    let h = |m: &[u32], pt: &[Rational]| hahn_poly(m, pt, &hp.gamma, &hp.n);
                    let env = Env::new(&yr[..], &slots[..]);
                    let lhs = yop.apply(&env, |pt| h(&n, pt)).unwrap();
                    assert_eq!(lhs, mu(j, &n, &hp.gamma) * h(&n, &yr).unwrap());
                    let nr: Vec<Rational> = n.iter().map(|&v| int(v as i64)).collect();
                    let env = Env::new(&nr[..], &slots[..]);
                    let lhs = nop
                        .apply_guarded(
                            &env,
                            |pt| pt.iter().all(|v| v >= &int(0)),
                            |pt| {
                                let m: Vec<u32> = pt.iter().map(|v| v.to_integer().try_into().unwrap()).collect();
                                h(&m, &yr)
                            },
                        )
                        .unwrap();
                    assert_eq!(lhs, kappa(j, &yr, &hp.n) * h(&n, &yr).unwrap(), "j={} n={:?} y={:?}", j, n, y);
                }
            }
        }
    }
}
