//! The verification suites. Each returns its check records in a fixed
//! order; failures (including library errors) are records, never aborts.

mod duality;
mod golden;
mod limits;
mod racah;
mod spectral;

pub use racah::gram;

use std::time::Instant;

use racah_core::algebra::{shifted, DiffOperator, Env, Sampler, Shift, ZeroWitness};
use racah_core::racah::RacahSystem;
use racah_core::scalar::{is_nonneg_integer, to_i64};
use racah_core::{Rational, Scalar};
use rayon::prelude::*;

use crate::check::{fmt_vec, witness};
use crate::config::{workers, Fault, SuiteConfig, Tier, SUITES};
use crate::error::Result;
use crate::report::{SuiteReport, Witness};

/// Run one suite on the current worker pool.
pub fn run_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let start = Instant::now();
    let checks = match cfg.suite.as_str() {
        "triangularity" => racah::triangularity(cfg),
        "form-equivalence" => racah::form_equivalence(cfg),
        "self-adjointness" => racah::self_adjointness(cfg),
        "orthogonality" => racah::orthogonality(cfg),
        "determinant" => racah::determinant(cfg),
        "spectral-x" => spectral::spectral_x(cfg),
        "spectral-n" => spectral::spectral_n(cfg),
        "commutativity-x" => spectral::commutativity(cfg, false),
        "commutativity-n" => spectral::commutativity(cfg, true),
        "duality-racah" => duality::duality_racah(cfg),
        "whipple" => duality::whipple(cfg),
        "appendix-golden" => golden::appendix_golden(cfg),
        "hahn" => limits::hahn(cfg),
        "jacobi" => limits::jacobi(cfg),
        "krawtchouk-meixner" => limits::krawtchouk_meixner(cfg),
        "wilson" => limits::wilson(cfg),
        other => unreachable!("validated suite name {}", other),
    };
    Ok(SuiteReport::new(cfg, checks, start.elapsed()))
}

/// Run every suite at one tier. Suites run concurrently; reports come back
/// in the fixed suite order.
pub fn run_all(seed: u64, tier: Tier, fault: Option<Fault>) -> Result<Vec<SuiteReport>> {
    with_pool(|| {
        SUITES
            .par_iter()
            .map(|name| {
                let mut cfg = SuiteConfig::new(name, seed, tier);
                cfg.fault = fault;
                run_suite(&cfg)
            })
            .collect()
    })
}

/// Run `f` on a pool sized by [`workers`].
pub fn with_pool<T: Send>(f: impl FnOnce() -> Result<T> + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers()?).build()?;
    pool.install(f)
}

pub(crate) fn system(cfg: &SuiteConfig, p: usize) -> RacahSystem {
    RacahSystem::new(p).with_mutation(Fault::mutation(cfg.fault))
}

/// Sampler for one part of a suite, derived from the suite seed.
pub(crate) fn sampler(cfg: &SuiteConfig, part: u64) -> Sampler {
    Sampler::new(cfg.suite_seed().wrapping_add(part.wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

pub(crate) fn zero_witness_map(w: &ZeroWitness) -> Witness {
    witness([
        ("vars", fmt_vec(&w.vars)),
        ("params", fmt_vec(&w.params)),
        ("shift", format!("{:?}", w.shift)),
        ("value", w.value.to_string()),
    ])
}

/// Coefficient values of `op` at a point, in shift order.
pub(crate) fn coeffs_at(op: &DiffOperator, vars: &[Rational], params: &[Rational]) -> racah_core::Result<Vec<(Shift, Rational)>> {
    op.coeff_values(&Env::new(vars, params))
}

/// `sum_nu c_nu f(x + nu)` from precomputed coefficients, refusing to read
/// `f` outside `domain` where the coefficient is nonzero.
pub(crate) fn apply_coeffs<F: Scalar>(
    coeffs: &[(Shift, F)],
    x: &[F],
    domain: impl Fn(&[F]) -> bool,
    mut f: impl FnMut(&[F]) -> racah_core::Result<F>,
) -> racah_core::Result<F> {
    let mut acc = F::zero();
    for (nu, c) in coeffs {
        if c.is_zero() {
            continue;
        }
        let pt = shifted(x, nu);
        if !domain(&pt) {
            return Err(racah_core::Error::BoundaryLeak(nu.clone()));
        }
        acc = acc.add(&c.mul(&f(&pt)?));
    }
    Ok(acc)
}

/// Tensor grid over per-axis node lists.
pub(crate) fn tensor_grid(nodes: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let mut out = vec![Vec::new()];
    for axis in nodes {
        out = out
            .into_iter()
            .flat_map(|v: Vec<Rational>| {
                axis.iter().map(move |a| {
                    let mut w = v.clone();
                    w.push(a.clone());
                    w
                })
            })
            .collect();
    }
    out
}

/// `count` distinct random rationals.
pub(crate) fn distinct_rationals(s: &mut Sampler, count: usize, bound: i64) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    while out.len() < count {
        let r = s.rational_bounded(bound);
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

pub(crate) fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&a| racah_core::scalar::int(a)).collect()
}

pub(crate) fn uints(v: &[u32]) -> Vec<Rational> {
    v.iter().map(|&a| racah_core::scalar::int(a as i64)).collect()
}

/// Integer coordinates of a rational point that is known to be integral.
pub(crate) fn as_degrees(pt: &[Rational]) -> Vec<u32> {
    pt.iter().map(|v| v.to_integer().try_into().expect("nonnegative small index")).collect()
}

/// Nonnegative integer points, optionally with `|n| <= cap`.
pub(crate) fn index_domain(cap: Option<i64>) -> impl Fn(&[Rational]) -> bool {
    move |pt: &[Rational]| {
        let ok = pt.iter().all(is_nonneg_integer);
        ok && cap.map_or(true, |c| pt.iter().filter_map(to_i64).sum::<i64>() <= c)
    }
}
