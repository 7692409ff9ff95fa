//! Duality of the normalized Racah polynomials and the Whipple identity
//! behind it.

use racah_core::dual::{dual_map, dual_pair, r_factor_forms, DualPoint};
use racah_core::hyper::whipple_check;
use racah_core::racah::{racah_hat, simplex, RacahParams};
use racah_core::scalar::int;
use racah_core::Rational;
use rayon::prelude::*;

use super::sampler;
use crate::check::{all_of, equal, equal_q, fmt_list, fmt_vec, record, witness, Outcome};
use crate::config::SuiteConfig;
use crate::report::CheckRecord;

pub fn duality_racah(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let draws = cfg.trials_or(cfg.by_tier(2, 10, 20));
    let dmax = cfg.degree_or(cfg.by_tier(1, 3, 4));
    let mut cases = Vec::new();
    let dims = cfg.dims(&cfg.by_tier(vec![2], vec![2, 3], vec![2, 3, 4]));
    for &p in &dims {
        for k in 0..draws {
            for n in simplex(p, dmax) {
                cases.push((p, k, n));
            }
        }
    }
    let mut out: Vec<CheckRecord> = cases
        .par_iter()
        .map(|(p, k, n)| {
            let (p, k) = (*p, *k);
            let dual = RacahParams::generic(p, &mut sampler(cfg, (p as u64) << 16 | k as u64), None);
            let outcome = all_of(simplex(p, dmax).into_iter().map(|nd| -> Outcome {
                let (x, xd, beta) = dual_pair(n, &nd, &dual.beta, &dual.n);
                let lhs = racah_hat(n, &x, &beta, &dual.n)?;
                let rhs = racah_hat(&nd, &xd, &dual.beta, &dual.n)?;
                Ok(equal_q(&lhs, &rhs).map(|mut w| {
                    w.insert("n_dual".into(), fmt_list(&nd));
                    w
                }))
            }));
            record(
                format!("racah-duality/p{}/draw{}/n{}", p, k, fmt_list(n)),
                "normalized polynomial is invariant under the duality",
                &format!("p={} n={:?} dual_slots={}", p, n, fmt_vec(&dual.slots())),
                outcome,
            )
        })
        .collect();
    for &p in &dims {
        let mut s = sampler(cfg, 0xd0a1 + p as u64);
        let points: Vec<DualPoint> = (0..draws * 5)
            .map(|_| DualPoint { x: s.rationals(p), n: s.rationals(p), beta: s.rationals(p + 2), big_n: s.rational() })
            .collect();
        let outcome = all_of(points.iter().map(|t| -> Outcome {
            let back = dual_map(&dual_map(t)?)?;
            Ok((&back != t).then(|| witness([("x", fmt_vec(&t.x)), ("n", fmt_vec(&t.n))])))
        }));
        out.push(record(
            format!("dual-map-involution/p{}", p),
            "duality map is an involution",
            &format!("p={} points={}", p, points.len()),
            outcome,
        ));
    }
    out
}

pub fn whipple(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let count = cfg.trials_or(cfg.by_tier(10, 50, 200));
    let mut s = sampler(cfg, 1);
    let mut out = Vec::new();
    for k in 0..count {
        let n = s.int_in(0, 6) as u32;
        let [x, y, z, u, v] = [(); 5].map(|_| s.rational_bounded(100));
        let w = &x + &y + &z - int(n as i64) + int(1) - &u - &v;
        let outcome = whipple_check(n, [&x, &y, &z], [&u, &v, &w]).map(|sides| {
            (!sides.all_equal()).then(|| {
                witness([
                    ("lhs", sides.lhs.to_string()),
                    ("first", sides.first.to_string()),
                    ("second", sides.second.to_string()),
                ])
            })
        });
        out.push(record(
            format!("whipple/{}", k),
            "balanced terminating series agrees with both transformed sides",
            &format!("n={} upper={} lower={}", n, fmt_vec(&[x, y, z]), fmt_vec(&[u, v, w])),
            outcome,
        ));
    }
    let mut s = sampler(cfg, 2);
    for k in 0..count {
        let p = s.int_in(1, 3) as usize;
        let idx = s.int_in(1, p as i64) as usize;
        let n: Vec<u32> = (0..p).map(|_| s.int_in(0, 3) as u32).collect();
        let x = s.rationals(p);
        let beta = s.rationals(p + 2);
        let big_n: Rational = s.rational();
        let (a, b) = r_factor_forms(idx, &n, &x, &beta, &big_n);
        out.push(record(
            format!("factor-rewrite/{}", k),
            "product factor equals its double-Whipple rewrite",
            &format!("k={} n={:?} x={} beta={} N={}", idx, n, fmt_vec(&x), fmt_vec(&beta), big_n),
            Ok(equal(&a, &b)),
        ));
    }
    out
}
