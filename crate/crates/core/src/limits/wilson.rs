//! Multivariable Wilson polynomials, obtained from the Racah polynomials by
//! a complex change of variables. Evaluation runs over Gaussian rationals.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::racah::racah_poly;
use crate::scalar::{int, GaussianRational, Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct WilsonParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    /// `eps_2..eps_p`.
    pub eps: Vec<Rational>,
}

impl WilsonParams {
    pub fn p(&self) -> usize {
        self.eps.len() + 1
    }

    /// `E_2^k = eps_2 + ... + eps_k`, with `E_2^1 = 0`.
    pub fn eps_sum(&self, k: usize) -> Rational {
        self.eps[..k - 1].iter().fold(int(0), |a, b| a + b)
    }

    /// Racah parameters `beta_0..beta_{p+1}` and `N`.
    pub fn racah_params(&self) -> (Vec<Rational>, Rational) {
        let p = self.p();
        let two = int(2);
        let mut beta = alloc::vec![&self.a - &self.b];
        for k in 1..=p {
            beta.push(self.eps_sum(k) * &two + &self.a * &two);
        }
        beta.push(self.eps_sum(p) * &two + &self.a * &two + &self.c + &self.d);
        let big_n = -self.eps_sum(p) - &self.a - &self.d;
        (beta, big_n)
    }

    /// `x_k = -E_2^k - a - i y_k`, with `iy` given directly.
    pub fn racah_point(&self, iy: &[GaussianRational]) -> Vec<GaussianRational> {
        iy.iter()
            .enumerate()
            .map(|(k, v)| Scalar::sub(&GaussianRational::real(-self.eps_sum(k + 1) - &self.a), v))
            .collect()
    }

    /// Inverse of [`Self::racah_point`]: `i y_k = -E_2^k - a - x_k`.
    pub fn imaginary_coords(&self, x: &[GaussianRational]) -> Vec<GaussianRational> {
        x.iter()
            .enumerate()
            .map(|(k, v)| Scalar::sub(&GaussianRational::real(-self.eps_sum(k + 1) - &self.a), v))
            .collect()
    }
}

fn lift(v: &[Rational]) -> Vec<GaussianRational> {
    v.iter().cloned().map(GaussianRational::real).collect()
}

/// `W_p(n; y)` at complex `i y`.
pub fn wilson_complex(n: &[u32], iy: &[GaussianRational], wp: &WilsonParams) -> GaussianRational {
    let (beta, big_n) = wp.racah_params();
    racah_poly(n, &wp.racah_point(iy), &lift(&beta), &GaussianRational::real(big_n))
}

/// `W_p(n; y)` at real rational `y`. The value is always real; a nonzero
/// imaginary part is reported as an error.
pub fn wilson_poly(n: &[u32], y: &[Rational], wp: &WilsonParams) -> Result<Rational> {
    if y.len() != wp.p() || n.len() != wp.p() {
        return Err(Error::InvalidParams("dimension mismatch".into()));
    }
    let iy: Vec<GaussianRational> = y.iter().map(|v| GaussianRational::new(int(0), v.clone())).collect();
    let w = wilson_complex(n, &iy, wp);
    if w.im != int(0) {
        return Err(Error::NonRealResult);
    }
    Ok(w.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Env, Sampler};
    use crate::hyper::wilson_w;
    use crate::racah::{mu, RacahSystem};

    fn sample(s: &mut Sampler, p: usize) -> WilsonParams {
        WilsonParams { a: s.rational(), b: s.rational(), c: s.rational(), d: s.rational(), eps: s.rationals(p - 1) }
    }

    #[test]
    fn one_variable_bridge() {
        let mut s = Sampler::new(4);
        for _ in 0..10 {
            let wp = sample(&mut s, 1);
            let y = s.rational();
            let iy = GaussianRational::new(int(0), y.clone());
            let g = |r: &Rational| GaussianRational::real(r.clone());
            for n in 0..=4 {
                let w = wilson_w(n, &iy, &g(&wp.a), &g(&wp.b), &g(&wp.c), &g(&wp.d));
                assert_eq!(w.im, int(0));
                assert_eq!(wilson_poly(&[n], &[y.clone()], &wp).unwrap(), w.re);
            }
        }
    }

    #[test]
    fn real_valued_p2() {
        let mut s = Sampler::new(5);
        for _ in 0..10 {
            let wp = sample(&mut s, 2);
            let y = s.rationals(2);
            assert!(wilson_poly(&[1, 2], &y, &wp).is_ok());
        }
    }

    #[test]
    fn spectral_in_y() {
        let mut s = Sampler::new(6);
        let wp = sample(&mut s, 2);
        let (beta, big_n) = wp.racah_params();
        let mut slots = lift(&beta);
        slots.push(GaussianRational::real(big_n));
        let iy: Vec<GaussianRational> = s.rationals(2).into_iter().map(|v| GaussianRational::new(int(0), v)).collect();
        let x = wp.racah_point(&iy);
        let sys = RacahSystem::new(2);
        for j in 1..=2 {
            let op = sys.lx(j);
            for n in [[1u32, 0], [0, 1], [1, 1]] {
                let env = Env::new(&x[..], &slots[..]);
                let lhs = op.apply(&env, |pt| Ok(wilson_complex(&n, &wp.imaginary_coords(pt), &wp))).unwrap();
                let rhs = Scalar::mul(&mu(j, &n, &lift(&beta)), &wilson_complex(&n, &iy, &wp));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
