//! Eigenvalue equations on both sides and mutual commutativity.

use racah_core::algebra::{zero_witness, DiffOperator};
use racah_core::dual::{kappa, ln};
use racah_core::racah::{lattice, mu, racah_hat, racah_poly, simplex, RacahParams, RacahSystem};
use racah_core::Rational;
use rayon::prelude::*;

use super::{
    apply_coeffs, as_degrees, coeffs_at, distinct_rationals, index_domain, ints, sampler, system, tensor_grid, uints,
    zero_witness_map,
};
use crate::check::{all_of, equal_q, fmt_list, fmt_vec, record, Outcome};
use crate::config::SuiteConfig;
use crate::report::{CheckRecord, Witness};

fn degree_bound(cfg: &SuiteConfig, p: usize) -> u32 {
    let (s, d, x) = if p <= 2 { (1, 3, 4) } else { (1, 2, 3) };
    cfg.degree_or(cfg.by_tier(s, d, x))
}

/// Generic `N`, and `N` equal to the degree bound.
fn n_modes(dmax: u32) -> [(Option<i64>, String); 2] {
    [(None, "Ngeneric".into()), (Some(dmax as i64), format!("N{}", dmax))]
}

fn at_point(o: Outcome, x: &[Rational]) -> Outcome {
    o.map(|w| {
        w.map(|mut w: Witness| {
            w.insert("point".into(), fmt_vec(x));
            w
        })
    })
}

pub fn spectral_x(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for p in cfg.dims(&cfg.by_tier(vec![2], vec![2, 3], vec![2, 3])) {
        let sys = system(cfg, p);
        let dmax = degree_bound(cfg, p);
        let idx = simplex(p, dmax);
        for (mode, (big_n, tag)) in n_modes(dmax).into_iter().enumerate() {
            let mut s = sampler(cfg, (p as u64) << 8 | mode as u64);
            let params = RacahParams::generic(p, &mut s, big_n);
            let slots = params.slots();
            let axes: Vec<Vec<Rational>> = (0..p).map(|_| distinct_rationals(&mut s, dmax as usize + 2, 50)).collect();
            let grid = tensor_grid(&axes);
            for j in 1..=p {
                let op = sys.lx(j);
                let per_point: Vec<Vec<Outcome>> = grid
                    .par_iter()
                    .map(|x| match coeffs_at(&op, x, &slots) {
                        Err(e) => idx.iter().map(|_| Err(e.clone())).collect(),
                        Ok(cs) => idx
                            .iter()
                            .map(|n| {
                                let r = |pt: &[Rational]| Ok(racah_poly(n, pt, &params.beta, &params.n));
                                let lhs = apply_coeffs(&cs, x, |_| true, r);
                                let rhs = mu(j, n, &params.beta) * racah_poly(n, x, &params.beta, &params.n);
                                at_point(lhs.map(|l| equal_q(&l, &rhs)), x)
                            })
                            .collect(),
                    })
                    .collect();
                for (k, n) in idx.iter().enumerate() {
                    let outcome = all_of(per_point.iter().map(|v| v[k].clone()));
                    out.push(record(
                        format!("x-eigen/p{}/{}/j{}/n{}", p, tag, j, fmt_list(n)),
                        "x-side operator has the polynomial as eigenfunction",
                        &format!("p={} j={} n={:?} slots={} grid={}", p, j, n, fmt_vec(&slots), grid.len()),
                        outcome,
                    ));
                }
            }
        }
    }
    out
}

pub fn spectral_n(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let draws = cfg.trials_or(cfg.by_tier(2, 4, 8));
    let mut out = Vec::new();
    for p in cfg.dims(&cfg.by_tier(vec![2], vec![2, 3], vec![2, 3])) {
        let sys = system(cfg, p);
        let dmax = degree_bound(cfg, p);
        let idx = simplex(p, dmax);
        for (mode, (big_n, tag)) in n_modes(dmax).into_iter().enumerate() {
            let mut s = sampler(cfg, (p as u64) << 8 | mode as u64);
            let params = RacahParams::generic(p, &mut s, big_n);
            let slots = params.slots();
            // with integer N the truncated recurrence only holds on the lattice
            let points: Vec<Vec<Rational>> = match big_n {
                Some(m) => lattice(p, m).iter().map(|x| ints(x)).collect(),
                None => (0..draws).map(|_| distinct_rationals(&mut s, p, 50)).collect(),
            };
            let domain = index_domain(big_n);
            let cases: Vec<(usize, &Vec<u32>)> = (1..=p).flat_map(|j| idx.iter().map(move |n| (j, n))).collect();
            let ops: Vec<DiffOperator> = (1..=p).map(|j| ln(&sys, j)).collect();
            let recs: Vec<CheckRecord> = cases
                .par_iter()
                .map(|&(j, n)| {
                    let nr = uints(n);
                    let outcome = coeffs_at(&ops[j - 1], &nr, &slots).and_then(|cs| {
                        all_of(points.iter().map(|x| {
                            let r = |pt: &[Rational]| racah_hat(&as_degrees(pt), x, &params.beta, &params.n);
                            let lhs = apply_coeffs(&cs, &nr, &domain, r)?;
                            let rhs = kappa(j, x, &params.beta, &params.n) * racah_hat(n, x, &params.beta, &params.n)?;
                            at_point(Ok(equal_q(&lhs, &rhs)), x)
                        }))
                    });
                    record(
                        format!("n-eigen/p{}/{}/j{}/n{}", p, tag, j, fmt_list(n)),
                        "n-side operator has the normalized polynomial as eigenfunction",
                        &format!("p={} j={} n={:?} slots={} points={}", p, j, n, fmt_vec(&slots), points.len()),
                        outcome,
                    )
                })
                .collect();
            out.extend(recs);
        }
    }
    out
}

pub fn commutativity(cfg: &SuiteConfig, n_side: bool) -> Vec<CheckRecord> {
    let trials = cfg.trials_or(cfg.by_tier(10, 100, 300));
    let side = if n_side { "n" } else { "x" };
    let mut cases = Vec::new();
    for p in cfg.dims(&cfg.by_tier(vec![2], vec![2, 3], vec![2, 3, 4])) {
        for i in 1..=p {
            for j in i + 1..=p {
                cases.push((p, i, j));
            }
        }
    }
    let seed = cfg.suite_seed();
    cases
        .par_iter()
        .map(|&(p, i, j)| {
            let sys: RacahSystem = system(cfg, p);
            let op = |k| if n_side { ln(&sys, k) } else { sys.lx(k) };
            let (a, b) = rayon::join(|| op(i), || op(j));
            let s = seed ^ ((p as u64) << 16 | (i as u64) << 8 | j as u64);
            let outcome = zero_witness(&a.commutator(&b), trials, s).map(|w| w.as_ref().map(zero_witness_map));
            record(
                format!("commute-{}/p{}/{}-{}", side, p, i, j),
                if n_side { "n-side operators commute" } else { "x-side operators commute" },
                &format!("side={} p={} i={} j={} trials={} seed={}", side, p, i, j, trials, s),
                outcome,
            )
        })
        .collect()
}
