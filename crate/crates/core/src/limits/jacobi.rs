//! Multivariable Jacobi polynomials on the simplex, the `N -> oo` limit of
//! the Hahn family with `y = N z`.
//!
//! The `n`-side operators use the Hahn slot layout; both slot 0 (`beta_0`)
//! and slot `p+2` (`N`) are limit variables whose values are ignored.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{DiffOperator, Expr, MultiPoly, PartialDiffOperator};
use crate::error::Result;
use crate::hyper::{hahn_h, hyp_terminating};
use crate::racah::{n_slot, partial_sum, RacahSystem};
use crate::scalar::{factorial, int, limit_coeff_at_infinity, pochhammer, RatFun, Rational, Scalar};

use super::hahn;

/// `Z_1^k` as a polynomial; `Z_1^{p+1} = 1`.
fn z_partial(p: usize, k: usize) -> MultiPoly {
    if k > p {
        return MultiPoly::constant(p, int(1));
    }
    (0..k).fold(MultiPoly::zero(p), |a, i| a.add(&MultiPoly::var(p, i)))
}

/// `J_p(n; z; gamma)` as an exact polynomial in `z`.
pub fn jacobi_poly(n: &[u32], gamma: &[Rational]) -> MultiPoly {
    let p = n.len();
    let mut acc = MultiPoly::constant(p, int(1));
    let mut gs = int(0);
    for k in 1..=p {
        gs += &gamma[k - 1];
        let nk = n[k - 1];
        let m1 = int(partial_sum(n, k - 1));
        let alpha = &m1 * int(2) + &gs + int(k as i64 - 1);
        let beta = &gamma[k];
        // n! (Z^{k+1})^n P_n(1 - 2 Z^k / Z^{k+1}) expanded term by term
        let zk = z_partial(p, k);
        let zk1 = z_partial(p, k + 1);
        let top = &alpha + beta + int(nk as i64 + 1);
        let mut factor = MultiPoly::zero(p);
        for i in 0..=nk {
            let c = pochhammer(&int(-(nk as i64)), i) * pochhammer(&top, i) * pochhammer(&(&alpha + int(i as i64 + 1)), nk - i)
                / factorial(i);
            factor = factor.add(&zk.pow(i).mul(&zk1.pow(nk - i)).scale(&c));
        }
        let norm = pochhammer(&(beta + int(1)), nk);
        acc = acc.mul(&factor.scale(&(int(1) / norm)));
    }
    let tot: u32 = n.iter().sum();
    if tot % 2 == 1 {
        acc = acc.scale(&int(-1));
    }
    acc
}

/// The second-order operator in `z` diagonalized by `J_p`.
pub fn z_operator(p: usize, j: usize, gamma: &[Rational]) -> PartialDiffOperator {
    assert!((1..=p).contains(&j));
    let top = (j + 1).min(p);
    let zj1 = z_partial(p, j + 1);
    let gsum = gamma[..=j].iter().fold(int(0), |a, b| a + b) + int(j as i64 + 1);
    let z = |i: usize| MultiPoly::var(p, i - 1);
    let mut op = PartialDiffOperator::zero(p);
    let unit = |a: &[usize]| {
        let mut e = vec![0u32; p];
        for &i in a {
            e[i - 1] += 1;
        }
        e
    };
    for l in 1..=top {
        for m in l + 1..=top {
            op.add_term(unit(&[l, m]), z(l).mul(&z(m)).scale(&int(-2)));
        }
    }
    for m in 1..=top {
        op.add_term(unit(&[m, m]), z(m).mul(&zj1.sub(&z(m))));
        let first = zj1.scale(&(&gamma[m - 1] + int(1))).sub(&z(m).scale(&gsum));
        op.add_term(unit(&[m]), first);
    }
    op
}

/// `lim (1/N)` of the Hahn `n`-side operator, with both limits exact.
pub fn n_operator(sys: &RacahSystem, j: usize) -> DiffOperator {
    let ns = n_slot(sys.p());
    hahn::n_operator(sys, j).map_coeffs(|c| Expr::limit(c.clone(), ns, 1))
}

/// Same as the Hahn eigenvalue.
pub fn mu(j: usize, n: &[u32], gamma: &[Rational]) -> Rational {
    hahn::mu(j, n, gamma)
}

/// `1 - z_1 - ... - z_{p+1-j}`.
pub fn kappa(j: usize, z: &[Rational]) -> Rational {
    let p = z.len();
    z[..p + 1 - j].iter().fold(int(1), |a, b| a - b)
}

/// The `k`-th Hahn factor under `y = N z`, divided by `N^{n_k}` and sent to
/// the limit, next to the closed form it should approach.
pub fn factor_limit(k: usize, n: &[u32], z: &[Rational], gamma: &[Rational]) -> Result<(Rational, Rational)> {
    let p = n.len();
    let nk = n[k - 1];
    let m1 = int(partial_sum(n, k - 1));
    let gs = gamma[..k].iter().fold(int(0), |a, b| a + b);
    let zk: Rational = z[..k].iter().fold(int(0), |a, b| a + b);
    let zk1: Rational = if k < p { &zk + &z[k] } else { int(1) };
    let t = RatFun::t();
    let c = |r: &Rational| RatFun::constant(r.clone());
    let m1f = c(&m1);
    let a = c(&(&m1 * int(2) + &gs + int(k as i64 - 1)));
    let h = hahn_h(nk, &Scalar::sub(&t.mul(&c(&zk)), &m1f), &a, &c(&gamma[k]), &Scalar::sub(&t.mul(&c(&zk1)), &m1f));
    let mut scale = RatFun::constant(int(1));
    for _ in 0..nk {
        scale = Scalar::mul(&scale, &t);
    }
    let lim = limit_coeff_at_infinity(&Scalar::div(&h, &scale).expect("t^n is nonzero"), 0)?;
    let lower = &m1 * int(2) + &gs + int(k as i64);
    let upper = int(nk as i64) + &m1 * int(2) + &gs + &gamma[k] + int(k as i64);
    let series = hyp_terminating(nk, &[upper], &[lower.clone()], &(&zk / &zk1))?;
    let mut closed = pochhammer(&lower, nk) * series;
    for _ in 0..nk {
        closed *= -&zk1;
    }
    Ok((lim, closed))
}

/// Tensor grid of rational points used to check polynomial identities.
pub fn sample_grid(p: usize, per_axis: &[Rational]) -> Vec<Vec<Rational>> {
    let mut out = vec![Vec::new()];
    for _ in 0..p {
        out = out
            .into_iter()
            .flat_map(|v: Vec<Rational>| {
                per_axis.iter().map(move |a| {
                    let mut w = v.clone();
                    w.push(a.clone());
                    w
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Env;
    use crate::scalar::rat;

    #[test]
    fn legendre_like_case() {
        let g = [int(0), int(0), int(0)];
        assert_eq!(jacobi_poly(&[0, 0], &g), MultiPoly::constant(2, int(1)));
    }

    #[test]
    fn z_side_eigen() {
        let gamma = [rat(1, 2), rat(-1, 3), rat(2, 5)];
        for j in 1..=2 {
            let op = z_operator(2, j, &gamma);
            for n in [[1u32, 0], [0, 1], [2, 1], [1, 2]] {
                let jp = jacobi_poly(&n, &gamma);
                assert_eq!(op.apply(&jp), jp.scale(&mu(j, &n, &gamma)), "j={} n={:?}", j, n);
            }
        }
    }

    #[test]
    fn n_side_eigen() {
        let gamma = [rat(1, 2), rat(-1, 3), rat(2, 5)];
        let sys = RacahSystem::new(2);
        let mut slots = vec![int(0)];
        slots.extend_from_slice(&gamma);
        slots.push(int(0));
        let z = [rat(1, 7), rat(2, 9)];
        for j in 1..=2 {
            let op = n_operator(&sys, j);
            for n in [[0u32, 0], [1, 0], [0, 2], [1, 1]] {
                let nv: Vec<Rational> = n.iter().map(|&v| int(v as i64)).collect();
                let env = Env::new(&nv[..], &slots[..]);
                let lhs = op
                    .apply_guarded(
                        &env,
                        |pt| pt.iter().all(|v| v >= &int(0)),
                        |pt| {
                            let m: Vec<u32> = pt.iter().map(|v| v.to_integer().try_into().unwrap()).collect();
                            Ok(jacobi_poly(&m, &gamma).eval(&z))
                        },
                    )
                    .unwrap();
                assert_eq!(lhs, kappa(j, &z) * jacobi_poly(&n, &gamma).eval(&z), "j={} n={:?}", j, n);
            }
        }
    }

    #[test]
    fn factor_limits() {
        let gamma = [rat(1, 2), rat(-1, 3), rat(2, 5)];
        let z = [rat(1, 7), rat(2, 9)];
        for n in [[1u32, 0], [2, 1], [0, 3]] {
            for k in 1..=2 {
                let (a, b) = factor_limit(k, &n, &z, &gamma).unwrap();
                assert_eq!(a, b);
            }
        }
    }
}
