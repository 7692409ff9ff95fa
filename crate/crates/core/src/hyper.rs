//! Terminating hypergeometric series and the one-variable families built
//! from them.
//!
//! Every family is evaluated in "cleared" form: the series is multiplied by
//! the Pochhammer symbols of its lower parameters, which the standard
//! normalizations already carry. The cleared sum
//!
//! `sum_k (-n)_k prod(a_i)_k z^k / k! * prod_i (b_i + k)_{n-k}`
//!
//! is a polynomial in every argument, so it has no poles even at lattice
//! points where an individual lower parameter is a nonpositive integer.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::scalar::{factorial, Rational, Scalar};

/// `pFq(-n, upper; lower; z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TerminatingHyp<F> {
    pub n: u32,
    pub upper: Vec<F>,
    pub lower: Vec<F>,
    pub z: F,
}

impl<F: Scalar> TerminatingHyp<F> {
    pub fn new(n: u32, upper: Vec<F>, lower: Vec<F>, z: F) -> Self {
        TerminatingHyp { n, upper, lower, z }
    }

    /// Plain series value. Fails when a lower parameter produces a zero
    /// denominator before the series has terminated.
    pub fn eval(&self) -> Result<F> {
        let mut sum = F::one();
        let mut term = F::one();
        for k in 0..self.n {
            let kk = F::from_int(k as i64);
            let mut num = F::from_int(k as i64 - self.n as i64).mul(&self.z);
            for a in &self.upper {
                num = num.mul(&a.add(&kk));
            }
            if num.is_zero() {
                break;
            }
            let mut den = F::from_int(k as i64 + 1);
            for b in &self.lower {
                den = den.mul(&b.add(&kk));
            }
            term = term
                .mul(&num)
                .div(&den)
                .ok_or_else(|| Error::PoleInDenominator(alloc::format!("lower parameter at k={}", k)))?;
            sum = sum.add(&term);
        }
        Ok(sum)
    }

    /// `prod_i (b_i)_n` times the series; never has poles.
    pub fn eval_cleared(&self) -> F {
        cleared_series(self.n, &self.upper, &self.lower, &self.z)
    }
}

/// `pFq(-n, upper; lower; z)`, see [`TerminatingHyp::eval`].
pub fn hyp_terminating<F: Scalar>(n: u32, upper: &[F], lower: &[F], z: &F) -> Result<F> {
    TerminatingHyp::new(n, upper.to_vec(), lower.to_vec(), z.clone()).eval()
}

/// `prod_i (lower_i)_n * pFq(-n, upper; lower; z)` as a pole-free sum.
pub fn cleared_series<F: Scalar>(n: u32, upper: &[F], lower: &[F], z: &F) -> F {
    let n_us = n as usize;
    // tail[k] = prod_i (b_i + k)_{n-k}
    let mut tail = vec![F::one(); n_us + 1];
    for k in (0..n_us).rev() {
        let kk = F::from_int(k as i64);
        let mut f = tail[k + 1].clone();
        for b in lower {
            f = f.mul(&b.add(&kk));
        }
        tail[k] = f;
    }
    let mut head = F::one();
    let mut sum = tail[0].clone();
    for k in 0..n_us {
        let kk = F::from_int(k as i64);
        let mut num = F::from_int(k as i64 - n as i64).mul(z);
        for a in upper {
            num = num.mul(&a.add(&kk));
        }
        if num.is_zero() {
            break;
        }
        let inv = F::from_rational(&Rational::new(1.into(), (k as i64 + 1).into()));
        head = head.mul(&num).mul(&inv);
        sum = sum.add(&head.mul(&tail[k + 1]));
    }
    sum
}

/// One-variable Racah polynomial
/// `(a+1)_n (b+d+1)_n (c+1)_n 4F3(-n, n+a+b+1, -x, x+c+d+1; a+1, b+d+1, c+1; 1)`.
pub fn racah_r<F: Scalar>(n: u32, a: &F, b: &F, c: &F, d: &F, x: &F) -> F {
    let one = F::one();
    let upper = [a.add(b).add(&one).add_int(n as i64), x.neg(), x.add(c).add(d).add(&one)];
    let lower = [a.add(&one), b.add(d).add(&one), c.add(&one)];
    cleared_series(n, &upper, &lower, &one)
}

/// One-variable Wilson polynomial
/// `(a+b)_n (a+c)_n (a+d)_n 4F3(-n, n+a+b+c+d-1, a+iy, a-iy; a+b, a+c, a+d; 1)`.
/// `iy` is passed as `iy`, so any field containing it works.
pub fn wilson_w<F: Scalar>(n: u32, iy: &F, a: &F, b: &F, c: &F, d: &F) -> F {
    let s = a.add(b).add(c).add(d).add_int(n as i64 - 1);
    let upper = [s, a.add(iy), a.sub(iy)];
    let lower = [a.add(b), a.add(c), a.add(d)];
    cleared_series(n, &upper, &lower, &F::one())
}

/// One-variable Hahn polynomial
/// `(a+1)_n (-N)_n 3F2(-n, n+a+b+1, -x; a+1, -N; 1)`.
pub fn hahn_h<F: Scalar>(n: u32, x: &F, a: &F, b: &F, big_n: &F) -> F {
    let upper = [a.add(b).add_int(n as i64 + 1), x.neg()];
    let lower = [a.add_int(1), big_n.neg()];
    cleared_series(n, &upper, &lower, &F::one())
}

/// One-variable Krawtchouk polynomial `(-N)_n 2F1(-n, -x; -N; 1/p)`.
pub fn krawtchouk_k<F: Scalar>(n: u32, x: &F, prob: &F, big_n: &F) -> Result<F> {
    let z = prob
        .inv()
        .ok_or_else(|| Error::PoleInDenominator("probability is zero".into()))?;
    Ok(cleared_series(n, &[x.neg()], &[big_n.neg()], &z))
}

/// One-variable Meixner polynomial `(s)_n 2F1(-n, -x; s; 1 - 1/c)`.
pub fn meixner_m<F: Scalar>(n: u32, x: &F, s: &F, c: &F) -> Result<F> {
    let ic = c
        .inv()
        .ok_or_else(|| Error::PoleInDenominator("c is zero".into()))?;
    let z = F::one().sub(&ic);
    Ok(cleared_series(n, &[x.neg()], &[s.clone()], &z))
}

/// Classical Jacobi polynomial
/// `(alpha+1)_n / n! 2F1(-n, n+alpha+beta+1; alpha+1; (1-x)/2)`.
pub fn jacobi_p<F: Scalar>(n: u32, x: &F, alpha: &F, beta: &F) -> F {
    let half = F::from_rational(&Rational::new(1.into(), 2.into()));
    let z = F::one().sub(x).mul(&half);
    let upper = [alpha.add(beta).add_int(n as i64 + 1)];
    let lower = [alpha.add_int(1)];
    let inv = F::from_rational(&factorial(n).recip());
    cleared_series(n, &upper, &lower, &z).mul(&inv)
}

/// Parameters of a one-variable family, for [`one_var_family`].
#[derive(Clone, Debug, PartialEq)]
pub enum OneVarFamily {
    Racah { alpha: Rational, beta: Rational, gamma: Rational, delta: Rational },
    Wilson { a: Rational, b: Rational, c: Rational, d: Rational },
    Hahn { a: Rational, b: Rational, n_max: Rational },
    Jacobi { alpha: Rational, beta: Rational },
    Krawtchouk { prob: Rational, n_max: Rational },
    Meixner { s: Rational, c: Rational },
}

/// Evaluate a one-variable family at degree `n` and point `x`. For Wilson
/// the point is `y` and the result must be real.
pub fn one_var_family(kind: &OneVarFamily, n: u32, x: &Rational) -> Result<Rational> {
    use crate::scalar::GaussianRational as G;
    Ok(match kind {
        OneVarFamily::Racah { alpha, beta, gamma, delta } => racah_r(n, alpha, beta, gamma, delta, x),
        OneVarFamily::Wilson { a, b, c, d } => {
            let iy = G::new(Rational::from_integer(0.into()), x.clone());
            let g = |r: &Rational| G::real(r.clone());
            let v = wilson_w(n, &iy, &g(a), &g(b), &g(c), &g(d));
            v.to_rational().ok_or(Error::NonRealResult)?
        }
        OneVarFamily::Hahn { a, b, n_max } => hahn_h(n, x, a, b, n_max),
        OneVarFamily::Jacobi { alpha, beta } => jacobi_p(n, x, alpha, beta),
        OneVarFamily::Krawtchouk { prob, n_max } => krawtchouk_k(n, x, prob, n_max)?,
        OneVarFamily::Meixner { s, c } => meixner_m(n, x, s, c)?,
    })
}

/// The three sides of the Whipple transformation for a balanced terminating
/// 4F3, each in cleared form:
///
/// * `lhs = (u)_n (v)_n (w)_n 4F3(-n, x, y, z; u, v, w)`
/// * `first = (1-v+z-n)_n (1-w+z-n)_n (u)_n 4F3(-n, u-x, u-y, z; 1-v+z-n, 1-w+z-n, u)`
/// * `second = (1-x-n)_n (1-v+y-n)_n (1-v+z-n)_n 4F3(-n, w-x, u-x, 1-v-n; 1-x-n, 1-v+y-n, 1-v+z-n)`
#[derive(Clone, Debug, PartialEq)]
pub struct WhippleSides {
    pub lhs: Rational,
    pub first: Rational,
    pub second: Rational,
}

impl WhippleSides {
    pub fn all_equal(&self) -> bool {
        self.lhs == self.first && self.lhs == self.second
    }
}

/// Evaluate the Whipple sides. Requires `u + v + w = x + y + z - n + 1`.
///
/// Cleared forms are polynomial in the parameters, so there are no poles.
pub fn whipple_check(
    n: u32,
    [x, y, z]: [&Rational; 3],
    [u, v, w]: [&Rational; 3],
) -> Result<WhippleSides> {
    let one = Rational::from_integer(1.into());
    let nn = Rational::from_integer((n as i64).into());
    if u + v + w != x + y + z - &nn + &one {
        return Err(Error::NotBalanced);
    }
    let lhs = cleared_series(n, &[x.clone(), y.clone(), z.clone()], &[u.clone(), v.clone(), w.clone()], &one);
    let first = cleared_series(
        n,
        &[u - x, u - y, z.clone()],
        &[&one - v + z - &nn, &one - w + z - &nn, u.clone()],
        &one,
    );
    let second = cleared_series(
        n,
        &[w - x, u - x, &one - v - &nn],
        &[&one - x - &nn, &one - v + y - &nn, &one - v + z - &nn],
        &one,
    );
    Ok(WhippleSides { lhs, first, second })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, pochhammer, rat};

    // direct sum with explicit Pochhammers as an independent oracle
    fn naive(n: u32, up: &[Rational], lo: &[Rational], z: &Rational) -> Rational {
        let mut s = int(0);
        for k in 0..=n {
            let mut t = pochhammer(&int(-(n as i64)), k) * z.pow(k as i32) / factorial(k);
            for a in up {
                t *= pochhammer(a, k);
            }
            for b in lo {
                t /= pochhammer(b, k);
            }
            s += t;
        }
        s
    }

    #[test]
    fn cleared_matches_naive() {
        let up = [rat(3, 7), rat(-5, 2)];
        let lo = [rat(11, 3), rat(2, 9)];
        let z = rat(-4, 5);
        for n in 0..6 {
            let pre: Rational = lo.iter().map(|b| pochhammer(b, n)).product();
            assert_eq!(cleared_series(n, &up, &lo, &z), pre * naive(n, &up, &lo, &z));
            assert_eq!(hyp_terminating(n, &up, &lo, &z).unwrap(), naive(n, &up, &lo, &z));
        }
    }

    #[test]
    fn pole_reported() {
        // lower parameter -1 with n = 3 hits zero at k = 1
        let r = hyp_terminating(3, &[rat(1, 2)], &[int(-1)], &int(1));
        assert!(matches!(r, Err(Error::PoleInDenominator(_))));
        // but the cleared form is finite
        let _ = cleared_series(3, &[rat(1, 2)], &[int(-1)], &int(1));
        // upper -1 truncates before the lower pole at k = 2
        assert!(hyp_terminating(4, &[int(-1)], &[int(-2)], &int(1)).is_ok());
    }

    #[test]
    fn racah_degree_one() {
        // r_1 = (a+1)(b+d+1)(c+1) + (a+b+2) x (x+c+d+1)
        let (a, b, c, d, x) = (rat(1, 3), rat(2, 5), rat(-7, 4), rat(5, 2), rat(3, 11));
        let one = int(1);
        let expect = (&a + &one) * (&b + &d + &one) * (&c + &one)
            + (&a + &b + int(2)) * &x * (&x + &c + &d + &one);
        assert_eq!(racah_r(1, &a, &b, &c, &d, &x), expect);
    }

    #[test]
    fn jacobi_known_values() {
        // P_1(x; a, b) = (a+1) + (a+b+2)(x-1)/2
        let (a, b, x) = (rat(1, 2), rat(3, 4), rat(2, 7));
        let expect = (&a + int(1)) + (&a + &b + int(2)) * (&x - int(1)) / int(2);
        assert_eq!(jacobi_p(1, &x, &a, &b), expect);
        // Legendre P_2(x) = (3x^2 - 1)/2
        assert_eq!(jacobi_p(2, &x, &int(0), &int(0)), (int(3) * &x * &x - int(1)) / int(2));
    }

    #[test]
    fn wilson_is_racah() {
        let (a, b, c, d) = (rat(1, 2), rat(3, 5), rat(7, 3), rat(-2, 9));
        let y = rat(5, 4);
        let w = one_var_family(&OneVarFamily::Wilson { a: a.clone(), b: b.clone(), c: c.clone(), d: d.clone() }, 3, &y);
        assert!(w.is_ok());
        // real y gives a real value; compare with the Racah form over Gaussian rationals
        use crate::scalar::GaussianRational as G;
        let g = |r: &Rational| G::real(r.clone());
        let x = G::new(-&a, -&y);
        let r = racah_r(3, &g(&(&a + &b - int(1))), &g(&(&c + &d - int(1))), &g(&(&a + &d - int(1))), &g(&(&a - &d)), &x);
        assert_eq!(r, G::real(w.unwrap()));
    }

    #[test]
    fn whipple_balanced() {
        let n = 3;
        let (x, y, z, u, v) = (rat(1, 3), rat(-2, 7), rat(5, 4), rat(9, 5), rat(-1, 6));
        let w = &x + &y + &z - int(n as i64) + int(1) - &u - &v;
        let s = whipple_check(n, [&x, &y, &z], [&u, &v, &w]).unwrap();
        assert!(s.all_equal(), "{:?}", s);
        assert_eq!(whipple_check(n, [&x, &y, &z], [&u, &v, &(w + int(1))]), Err(Error::NotBalanced));
    }
}
