//! Multivariable Krawtchouk polynomials, their duality and commuting
//! operators, and the Meixner polynomials obtained by a parameter change.
//!
//! Parameter slots: slot `k-1` holds `p_k` for `k = 1..=p`, slot `p` holds
//! `N`.

use alloc::vec::Vec;

use crate::algebra::{sum, DiffOperator, Expr, Leaf};
use crate::error::{Error, Result};
use crate::hyper::krawtchouk_k;
use crate::racah::partial_sum;
use crate::scalar::{int, pochhammer, Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct KrawParams {
    /// `p_1..p_p`.
    pub prob: Vec<Rational>,
    pub n: Rational,
}

impl KrawParams {
    pub fn new(prob: Vec<Rational>, n: Rational) -> Result<Self> {
        if prob.is_empty() {
            return Err(Error::InvalidParams("need at least one probability".into()));
        }
        Ok(KrawParams { prob, n })
    }

    pub fn p(&self) -> usize {
        self.prob.len()
    }

    pub fn slots(&self) -> Vec<Rational> {
        let mut v = self.prob.clone();
        v.push(self.n.clone());
        v
    }

    /// Meixner parameters: `p_k = c_k / (|c| - 1)` and `N = -s`.
    pub fn from_meixner(c: &[Rational], s: &Rational) -> Result<Self> {
        let tot = c.iter().fold(int(0), |a, b| a + b) - int(1);
        let inv = Scalar::inv(&tot).ok_or_else(|| Error::PoleInDenominator("|c| = 1".into()))?;
        Self::new(c.iter().map(|ck| ck * &inv).collect(), -s.clone())
    }
}

fn prob_prefix<F: Scalar>(prob: &[F], k: usize) -> F {
    prob[..k].iter().fold(F::zero(), |a, b| a.add(b))
}

/// `K_p(n; x; p; N)`.
pub fn kraw_poly<F: Scalar>(n: &[u32], x: &[F], prob: &[F], big_n: &F) -> Result<F> {
    let p = n.len();
    let tot: u32 = n.iter().sum();
    let mut acc = F::one();
    let mut xs = F::zero();
    for j in 1..=p {
        let scale = F::one()
            .sub(&prob_prefix(prob, j - 1))
            .inv()
            .ok_or_else(|| Error::PoleInDenominator("1 - P_1^{j-1} = 0".into()))?;
        let arg = big_n.add_int(partial_sum(n, j) - tot as i64).sub(&xs);
        acc = acc.mul(&krawtchouk_k(n[j - 1], &x[j - 1], &prob[j - 1].mul(&scale), &arg)?);
        xs = xs.add(&x[j - 1]);
    }
    acc.div(&pochhammer(&big_n.neg(), tot)).ok_or(Error::ZeroNormalization)
}

/// Meixner polynomial `M(n; x; c; s)`.
pub fn meixner_poly(n: &[u32], x: &[Rational], c: &[Rational], s: &Rational) -> Result<Rational> {
    let kp = KrawParams::from_meixner(c, s)?;
    kraw_poly(n, x, &kp.prob, &kp.n)
}

/// The single operator `sum_{i != j} q_i x_j D_i N_j + sum_i [q_i (x_i - M) D_i
/// + (1 - q_i) x_i N_i]` on the listed coordinates, with `D` forward and `N`
/// backward differences.
fn base_operator(arity: usize, coords: &[usize], q: &[Expr], m: &Expr) -> DiffOperator {
    let d = |i: usize| DiffOperator::delta(arity, i);
    let b = |i: usize| DiffOperator::nabla(arity, i);
    let mut op = DiffOperator::zero(arity);
    for (a, &ci) in coords.iter().enumerate() {
        for &cj in coords.iter() {
            if ci == cj {
                continue;
            }
            op = op.add(&d(ci).compose(&b(cj)).scale_left(&(&q[a] * &Expr::var(cj))));
        }
        let xi = Expr::var(ci);
        op = op.add(&d(ci).scale_left(&(&q[a] * &(&xi - m))));
        op = op.add(&b(ci).scale_left(&((Expr::one() - &q[a]) * &xi)));
    }
    op
}

/// `L^x_j`: the base operator on `x_j..x_p` with `p_i / (1 - P_1^{j-1})` and
/// `N - X_1^{j-1}`.
pub fn lx(p: usize, j: usize) -> DiffOperator {
    assert!((1..=p).contains(&j));
    let pre = Expr::one() - sum((0..j - 1).map(Expr::param));
    let q: Vec<Expr> = (j..=p).map(|i| Expr::param(i - 1) / &pre).collect();
    let m = Expr::param(p) - sum((0..j - 1).map(Expr::var));
    let coords: Vec<usize> = (j - 1..p).collect();
    base_operator(p, &coords, &q, &m)
}

/// Image of `p_k` under duality, as an expression in the parameter slots.
fn b_prob(p: usize, k: usize) -> Expr {
    let pp = |m: usize| sum((0..m).map(Expr::param));
    let tot = Expr::one() - pp(p);
    Expr::param(p - k) * tot / ((Expr::one() - pp(p + 1 - k)) * (Expr::one() - pp(p - k)))
}

/// `L^n_j`, the dual image of `L^x_j`.
pub fn ln(p: usize, j: usize) -> DiffOperator {
    let img: Vec<Expr> = (1..=p).map(|k| b_prob(p, k)).collect();
    let f = move |l: Leaf| match l {
        Leaf::Var(k0) => Some(Expr::var(p - 1 - k0)),
        Leaf::Param(s) if s < p => Some(img[s].clone()),
        _ => None,
    };
    lx(p, j).remap(p, |nu, c| {
        let mut s = nu.clone();
        s.reverse();
        (s, c.subst(&f))
    })
}

/// Eigenvalue of `L^x_j`: `n_j + ... + n_p`.
pub fn mu(j: usize, n: &[u32]) -> Rational {
    int(n[j - 1..].iter().map(|&v| v as i64).sum())
}

/// Eigenvalue of `L^n_j`: `x_1 + ... + x_{p+1-j}`.
pub fn kappa(j: usize, x: &[Rational]) -> Rational {
    let p = x.len();
    x[..p + 1 - j].iter().fold(int(0), |a, b| a + b)
}

/// Dual probabilities `p_k = p~_{p+1-k}(1 - |p~|) / ((1 - P~_1^{p+1-k})(1 - P~_1^{p-k}))`.
pub fn dual_prob(prob: &[Rational]) -> Result<Vec<Rational>> {
    let p = prob.len();
    let tot = int(1) - prob_prefix(prob, p);
    (1..=p)
        .map(|k| {
            let den = (int(1) - prob_prefix(prob, p + 1 - k)) * (int(1) - prob_prefix(prob, p - k));
            let inv = Scalar::inv(&den).ok_or_else(|| Error::PoleInDenominator("dual probabilities".into()))?;
            Ok(&prob[p - k] * &tot * inv)
        })
        .collect()
}

/// A Krawtchouk triple `(x, n, p)`; `N` is fixed by the duality.
#[derive(Clone, Debug, PartialEq)]
pub struct KrawTriple {
    pub x: Vec<Rational>,
    pub n: Vec<Rational>,
    pub prob: Vec<Rational>,
}

/// The Krawtchouk duality: reverse and swap `x` and `n`, and map the
/// probabilities. It is its own inverse.
pub fn kraw_dual(t: &KrawTriple) -> Result<KrawTriple> {
    let mut x = t.n.clone();
    x.reverse();
    let mut n = t.x.clone();
    n.reverse();
    Ok(KrawTriple { x, n, prob: dual_prob(&t.prob)? })
}

/// Multinomial weight `prod (p_k / (1 - |p|))^{x_k} / (x_k! (N - |x|)!)`.
pub fn weight(x: &[i64], params: &KrawParams) -> Result<Rational> {
    let big_n = crate::scalar::to_i64(&params.n)
        .filter(|v| *v >= 0)
        .ok_or_else(|| Error::InvalidParams("weight needs a nonnegative integer N".into()))?;
    let tot: i64 = x.iter().sum();
    if x.iter().any(|&v| v < 0) || tot > big_n {
        return Err(Error::InvalidPoint("point outside the simplex".into()));
    }
    let rest = int(1) - prob_prefix(&params.prob, params.p());
    let rinv = Scalar::inv(&rest).ok_or_else(|| Error::PoleInDenominator("|p| = 1".into()))?;
    let mut w = int(1) / crate::scalar::factorial((big_n - tot) as u32);
    for (k, &xk) in x.iter().enumerate() {
        let r = &params.prob[k] * &rinv;
        w = w * Scalar::pow(&r, xk as u32) / crate::scalar::factorial(xk as u32);
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Env, Sampler};
    use crate::scalar::rat;
    use alloc::vec;

    fn kp() -> KrawParams {
        KrawParams::new(vec![rat(1, 4), rat(1, 3)], int(4)).unwrap()
    }

    #[test]
    fn spectral_x_and_n() {
        let kp = kp();
        let slots = kp.slots();
        for j in 1..=2 {
            let opx = lx(2, j);
            let opn = ln(2, j);
            for n in [[0u32, 0], [1, 0], [0, 1], [1, 1], [2, 0], [0, 2]] {
                for x in [[0i64, 0], [1, 2], [3, 1], [0, 4]] {
                    let xr: Vec<Rational> = x.iter().map(|&v| int(v)).collect();
                    let nr: Vec<Rational> = n.iter().map(|&v| int(v as i64)).collect();
                    let k = |m: &[u32], pt: &[Rational]| kraw_poly(m, pt, &kp.prob, &kp.n);
                    let env = Env::new(&xr[..], &slots[..]);
                    let lhs = opx.apply(&env, |pt| k(&n, pt)).unwrap();
                    assert_eq!(lhs, mu(j, &n) * k(&n, &xr).unwrap());
                    let env = Env::new(&nr[..], &slots[..]);
                    let lhs = opn
                        .apply_guarded(
                            &env,
                            |pt| pt.iter().all(|v| v >= &int(0)),
                            |pt| {
                                let m: Vec<u32> = pt.iter().map(|v| v.to_integer().try_into().unwrap()).collect();
                                k(&m, &xr)
                            },
                        )
                        .unwrap();
                    assert_eq!(lhs, kappa(j, &xr) * k(&n, &xr).unwrap(), "j={} n={:?} x={:?}", j, n, x);
                }
            }
        }
    }

    #[test]
    fn duality() {
        let mut s = Sampler::new(2);
        for p in 2..=3 {
            let pt: Vec<Rational> = (0..p).map(|_| s.positive_rational(20) / int(4 * p as i64 + 20)).collect();
            let t = KrawTriple { x: s.rationals(p), n: s.rationals(p), prob: pt.clone() };
            assert_eq!(kraw_dual(&kraw_dual(&t).unwrap()).unwrap(), t);
            let big_n = rat(23, 3);
            let pd = dual_prob(&pt).unwrap();
            for n in [vec![1u32, 0, 2], vec![0, 1, 1]] {
                let n = &n[..p];
                let nd: Vec<u32> = n.iter().rev().map(|v| v + 1).collect();
                let x: Vec<Rational> = nd.iter().rev().map(|&v| int(v as i64)).collect();
                let xd: Vec<Rational> = n.iter().rev().map(|&v| int(v as i64)).collect();
                let a = kraw_poly(n, &x, &pd, &big_n).unwrap();
                let b = kraw_poly(&nd, &xd, &pt, &big_n).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn meixner_zero_degree() {
        let c = [rat(1, 5), rat(1, 7)];
        assert_eq!(meixner_poly(&[0, 0], &[int(2), int(1)], &c, &rat(3, 2)).unwrap(), int(1));
        assert!(meixner_poly(&[1, 0], &[int(0), int(0)], &[rat(1, 2), rat(1, 2)], &int(1)).is_err());
    }
}
