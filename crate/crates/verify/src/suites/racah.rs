//! Checks on the Racah operator itself: its two written forms, its action
//! on polynomials in `lambda`, symmetry in the weighted inner product, and
//! the determinant behind the triangularity argument.

use racah_core::algebra::{interpolate_tensor, zero_witness, Env, Expr, Shift};
use racah_core::racah::{
    binomial_det, binomial_det_expected, cube, in_lattice, inner_product, lambda_point, lattice, racah_poly, simplex,
    triangular_eigenvalue, weight, Form, RacahParams,
};
use racah_core::scalar::{int, to_i64};
use racah_core::{Rational, Scalar};
use rayon::prelude::*;

use super::{apply_coeffs, coeffs_at, ints, sampler, system, tensor_grid, zero_witness_map};
use crate::check::{equal, fmt_list, fmt_vec, record, witness, Outcome};
use crate::config::SuiteConfig;
use crate::report::CheckRecord;

fn monomial(m: &[u32], lam: &[Rational]) -> Rational {
    m.iter().zip(lam).fold(int(1), |a, (&e, l)| a * Scalar::pow(l, e))
}

fn integer_point(pt: &[Rational]) -> Option<Vec<i64>> {
    pt.iter().map(to_i64).collect()
}

pub fn form_equivalence(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let trials = cfg.trials_or(cfg.by_tier(20, 100, 300));
    let mut cases = Vec::new();
    for p in cfg.dims(&cfg.by_tier(vec![1, 2], vec![1, 2, 3], vec![1, 2, 3, 4])) {
        for j in 1..=p {
            cases.push((p, j));
        }
    }
    let seed = cfg.suite_seed();
    cases
        .par_iter()
        .map(|&(p, j)| {
            let sys = system(cfg, p);
            let diff = sys.lx_form(j, Form::Triangle).sub(&sys.lx_form(j, Form::Shift));
            let s = seed ^ ((p as u64) << 8 | j as u64);
            let out = zero_witness(&diff, trials, s).map(|w| w.as_ref().map(zero_witness_map));
            record(
                format!("forms-agree/p{}/j{}", p, j),
                "difference and shift forms of the operator agree",
                &format!("p={} j={} trials={} seed={}", p, j, trials, s),
                out,
            )
        })
        .collect()
}

pub fn triangularity(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let dmax = cfg.degree_or(cfg.by_tier(2, 4, 5));
    let mut out = Vec::new();
    for p in cfg.dims(&cfg.by_tier(vec![1, 2], vec![1, 2, 3], vec![1, 2, 3])) {
        let sys = system(cfg, p);
        let op = sys.lp(Form::Triangle);
        let params = RacahParams::generic(p, &mut sampler(cfg, p as u64), None);
        let slots = params.slots();
        let beta = &params.beta;
        for d in 0..=dmax {
            // d + 2 integer nodes per axis give distinct lambda values
            let axis: Vec<Rational> = (0..=d as i64 + 1).map(int).collect();
            let grid = tensor_grid(&vec![axis.clone(); p]);
            let lam_nodes: Vec<Vec<Rational>> = (0..p)
                .map(|i| axis.iter().map(|a| a * (a + &beta[i + 1])).collect())
                .collect();
            let coeffs: racah_core::Result<Vec<_>> = grid.par_iter().map(|x| coeffs_at(&op, x, &slots)).collect();
            let ev = triangular_eigenvalue(d, beta);
            for m in simplex(p, d).into_iter().filter(|m| m.iter().sum::<u32>() == d) {
                let outcome = (|| -> Outcome {
                    let coeffs = coeffs.as_ref().map_err(Clone::clone)?;
                    let mut vals = Vec::with_capacity(grid.len());
                    for (x, cs) in grid.iter().zip(coeffs) {
                        let f = |pt: &[Rational]| Ok(monomial(&m, &lambda_point(pt, beta)));
                        let lhs = apply_coeffs(cs, x, |_| true, f)?;
                        vals.push(lhs - &ev * monomial(&m, &lambda_point(x, beta)));
                    }
                    let r = interpolate_tensor(&lam_nodes, &vals);
                    Ok(match r.total_degree() {
                        Some(deg) if deg + 1 > d => Some(witness([
                            ("residual_degree", deg.to_string()),
                            ("bound", format!("{}", d as i64 - 1)),
                        ])),
                        _ => None,
                    })
                })();
                out.push(record(
                    format!("lambda-degree/p{}/m{}", p, fmt_list(&m)),
                    "operator lowers lambda-degree after removing the eigenvalue",
                    &format!("p={} m={:?} beta={}", p, m, fmt_vec(beta)),
                    outcome,
                ));
            }
        }
    }
    out
}

pub fn self_adjointness(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let draws = cfg.trials_or(cfg.by_tier(1, 5, 10));
    let sizes: Vec<i64> = cfg.by_tier(vec![2], vec![2, 3, 4], vec![2, 3, 4, 5]);
    let mut cases = Vec::new();
    for p in cfg.dims(&[2]) {
        for &n in &sizes {
            for k in 0..draws {
                cases.push((p, n, k));
            }
        }
    }
    cases
        .par_iter()
        .flat_map_iter(|&(p, big_n, k)| {
            let sys = system(cfg, p);
            let mut s = sampler(cfg, (p as u64) << 32 | (big_n as u64) << 16 | k as u64);
            let params = RacahParams::generic(p, &mut s, Some(big_n));
            let slots = params.slots();
            let inputs = format!("p={} N={} slots={}", p, big_n, fmt_vec(&slots));
            let tag = format!("p{}/N{}/draw{}", p, big_n, k);
            let points = lattice(p, big_n);
            let symmetric = (|| -> Outcome {
                let op = sys.lp(Form::Shift);
                let mons = simplex(p, big_n as u32);
                let dom = |pt: &[Rational]| integer_point(pt).is_some_and(|v| in_lattice(&v, big_n));
                let mut table: Vec<(Vec<Rational>, Vec<Rational>)> = Vec::new();
                for x in &points {
                    let xr = ints(x);
                    let cs = coeffs_at(&op, &xr, &slots)?;
                    let lam = lambda_point(&xr, &params.beta);
                    let plain: Vec<Rational> = mons.iter().map(|m| monomial(m, &lam)).collect();
                    let applied = mons
                        .iter()
                        .map(|m| apply_coeffs(&cs, &xr, dom, |pt| Ok(monomial(m, &lambda_point(pt, &params.beta)))))
                        .collect::<racah_core::Result<Vec<_>>>()?;
                    table.push((plain, applied));
                }
                let w: Vec<Rational> = points.iter().map(|x| weight(x, &params)).collect::<racah_core::Result<_>>()?;
                for a in 0..mons.len() {
                    for b in a + 1..mons.len() {
                        let mut l = int(0);
                        let mut r = int(0);
                        for (t, wt) in table.iter().zip(&w) {
                            l += &t.1[a] * &t.0[b] * wt;
                            r += &t.0[a] * &t.1[b] * wt;
                        }
                        if l != r {
                            return Ok(Some(witness([
                                ("f", fmt_list(&mons[a])),
                                ("g", fmt_list(&mons[b])),
                                ("lhs", l.to_string()),
                                ("rhs", r.to_string()),
                            ])));
                        }
                    }
                }
                Ok(None)
            })();
            let table: Vec<(Shift, Expr)> =
                cube(p).into_iter().map(|nu| (nu.clone(), sys.coeff_c(&nu))).collect();
            let c_at = |nu: &[i32], x: &[i64]| -> racah_core::Result<Rational> {
                let e = &table.iter().find(|(m, _)| m.as_slice() == nu).expect("cube shift").1;
                e.eval(&Env::new(&ints(x), &slots))
            };
            let mut exchange: Outcome = Ok(None);
            let mut vanishing: Outcome = Ok(None);
            'scan: for x in &points {
                for (nu, _) in &table {
                    let y: Vec<i64> = x.iter().zip(nu).map(|(a, &b)| a + b as i64).collect();
                    let at = |w: crate::report::Witness| {
                        let mut w = w;
                        w.insert("x".into(), fmt_list(x));
                        w.insert("nu".into(), fmt_list(nu));
                        w
                    };
                    if in_lattice(&y, big_n) {
                        if exchange.as_ref().is_ok_and(|o| o.is_none()) && nu.iter().any(|&v| v != 0) {
                            let back: Vec<i32> = nu.iter().map(|v| -v).collect();
                            exchange = (|| {
                                let l = weight(x, &params)? * c_at(nu, x)?;
                                let r = weight(&y, &params)? * c_at(&back, &y)?;
                                Ok(equal(&l, &r).map(at))
                            })();
                        }
                    } else if vanishing.as_ref().is_ok_and(|o| o.is_none()) {
                        vanishing = c_at(nu, x).map(|c| (!Scalar::is_zero(&c)).then(|| at(witness([("value", c.to_string())]))));
                    }
                    let done = |o: &Outcome| !matches!(o, Ok(None));
                    if done(&exchange) && done(&vanishing) {
                        break 'scan;
                    }
                }
            }
            vec![
                record(format!("symmetric/{}", tag), "operator is symmetric for the lattice weight", &inputs, symmetric),
                record(format!("weight-exchange/{}", tag), "weighted coefficients are exchanged by the shift", &inputs, exchange),
                record(format!("boundary/{}", tag), "coefficients leaving the lattice vanish", &inputs, vanishing),
            ]
        })
        .collect()
}

pub fn orthogonality(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let nmax = cfg.degree_or(cfg.by_tier(2, 3, 4)) as i64;
    let mut cases = Vec::new();
    for p in cfg.dims(&cfg.by_tier(vec![2], vec![2], vec![2, 3])) {
        for n in 1..=nmax {
            cases.push((p, n));
        }
    }
    cases
        .par_iter()
        .map(|&(p, big_n)| {
            let params = RacahParams::generic(p, &mut sampler(cfg, (p as u64) << 16 | big_n as u64), Some(big_n));
            let inputs = format!("p={} N={} slots={}", p, big_n, fmt_vec(&params.slots()));
            let outcome = gram(&params).map(|g| check_diagonal(&g, p, big_n));
            record(
                format!("gram-diagonal/p{}/N{}", p, big_n),
                "polynomials are orthogonal with nonzero norms",
                &inputs,
                outcome,
            )
        })
        .collect()
}

/// Gram matrix of `R_p(n; .)` over `|n| <= N`, indexed like [`simplex`].
pub fn gram(params: &RacahParams) -> racah_core::Result<Vec<Vec<Rational>>> {
    let p = params.p();
    let big_n = params.n_integer().unwrap_or(0);
    let idx = simplex(p, big_n as u32);
    let r = |n: &[u32], x: &[i64]| Ok(racah_poly(n, &ints(x), &params.beta, &params.n));
    idx.iter()
        .map(|a| idx.iter().map(|b| inner_product(params, |x| r(a, x), |x| r(b, x))).collect())
        .collect()
}

fn check_diagonal(g: &[Vec<Rational>], p: usize, big_n: i64) -> Option<crate::report::Witness> {
    let idx = simplex(p, big_n as u32);
    for (i, row) in g.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let bad = if i == j { Scalar::is_zero(v) } else { !Scalar::is_zero(v) };
            if bad {
                return Some(witness([("n", fmt_list(&idx[i])), ("m", fmt_list(&idx[j])), ("value", v.to_string())]));
            }
        }
    }
    None
}

pub fn determinant(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let bound = |desk: u32| cfg.max_degree.unwrap_or(cfg.by_tier(desk.min(2), desk, desk + 1));
    let mut cases = Vec::new();
    for p in cfg.dims(&[1, 2, 3]) {
        let top = match p {
            1 => bound(4),
            2 => bound(3),
            _ => bound(2),
        };
        for m in 1..=top {
            cases.push((p, m));
        }
    }
    cases
        .par_iter()
        .map(|&(p, m)| {
            let got = binomial_det(p, m);
            let want = binomial_det_expected(p, m);
            record(
                format!("binomial-det/p{}/M{}", p, m),
                "binomial determinant is a power of two",
                &format!("p={} M={}", p, m),
                Ok(equal(&got, &want)),
            )
        })
        .collect()
}
