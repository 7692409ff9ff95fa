//! Generated two-variable operators against hand-transcribed tables.

use racah_core::algebra::{sum, zero_witness, DiffOperator, Env, Expr};
use racah_core::dual::{kappa, ln};
use racah_core::hyper::racah_r;
use racah_core::limits::{jacobi, krawtchouk};
use racah_core::racah::{mu, racah_hat, RacahSystem};
use racah_core::scalar::{int, pochhammer};
use racah_core::Rational;
use rayon::prelude::*;

use super::{sampler, system, uints, zero_witness_map};
use crate::appendix::{self, Table};
use crate::check::{all_of, equal_q, fmt_vec, record, witness, Outcome};
use crate::config::{Fault, SuiteConfig};
use crate::report::CheckRecord;

/// Nonzero-shift part of `gen` minus the table, which must vanish.
/// Tables holding a zero-shift entry are compared in full.
fn table_gap(gen: &DiffOperator, table: &Table) -> DiffOperator {
    let arity = gen.arity();
    let full = table.keys().any(|nu| nu.iter().all(|&v| v == 0));
    let moving = DiffOperator::from_terms(
        arity,
        gen.terms().filter(|(nu, _)| full || nu.iter().any(|&v| v != 0)).map(|(nu, c)| (nu.clone(), c.clone())),
    );
    moving.sub(&DiffOperator::from_terms(arity, table.iter().map(|(nu, c)| (nu.clone(), c.clone()))))
}

fn whole(op: &DiffOperator) -> Table {
    op.terms().map(|(nu, c)| (nu.clone(), c.clone())).collect()
}

struct Case {
    id: &'static str,
    anchor: &'static str,
    build: Box<dyn Fn(&RacahSystem) -> (DiffOperator, Table) + Sync + Send>,
}

fn case(
    id: &'static str,
    anchor: &'static str,
    build: impl Fn(&RacahSystem) -> (DiffOperator, Table) + Sync + Send + 'static,
) -> Case {
    Case { id, anchor, build: Box::new(build) }
}

pub fn appendix_golden(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let trials = cfg.trials_or(cfg.by_tier(5, 20, 100));
    let perturb = cfg.fault == Some(Fault::AppendixD);
    let sys = system(cfg, 2);
    let cases = vec![
        case("racah-x2", "top x-side coefficients", |s| (s.lx(2), appendix::racah_c2())),
        case("racah-x1", "first x-side coefficients", |s| (s.lx(1), appendix::racah_c1())),
        case("racah-n2", "top n-side coefficients", move |s| (ln(s, 2), appendix::racah_d2(perturb))),
        case("racah-n1", "first n-side coefficients", |s| (ln(s, 1), appendix::racah_d1())),
        case("jacobi-n2", "top Jacobi n-side coefficients", |s| (jacobi::n_operator(s, 2), appendix::jacobi_d2())),
        case("jacobi-n1", "first Jacobi n-side coefficients", |s| (jacobi::n_operator(s, 1), appendix::jacobi_d1())),
        case("krawtchouk-x1", "Krawtchouk first x-side operator", |_| {
            (krawtchouk::lx(2, 1), whole(&appendix::krawtchouk_ops()[0]))
        }),
        case("krawtchouk-x2", "Krawtchouk top x-side operator", |_| {
            (krawtchouk::lx(2, 2), whole(&appendix::krawtchouk_ops()[1]))
        }),
        case("krawtchouk-n1", "Krawtchouk first n-side operator", |_| {
            (krawtchouk::ln(2, 1), whole(&appendix::krawtchouk_ops()[2]))
        }),
        case("krawtchouk-n2", "Krawtchouk top n-side operator", |_| {
            (krawtchouk::ln(2, 2), whole(&appendix::krawtchouk_ops()[3]))
        }),
    ];
    let seed = cfg.suite_seed();
    let mut out: Vec<CheckRecord> = cases
        .par_iter()
        .enumerate()
        .map(|(k, c)| {
            let (gen, table) = (c.build)(&sys);
            let s = seed ^ (k as u64 + 1);
            let outcome = zero_witness(&table_gap(&gen, &table), trials, s).map(|w| w.as_ref().map(zero_witness_map));
            record(
                format!("table/{}", c.id),
                c.anchor,
                &format!("{} trials={} seed={} fault={:?}", c.id, trials, s, cfg.fault.map(Fault::name)),
                outcome,
            )
        })
        .collect();
    out.push(annihilates_constants(cfg, &sys, trials));
    out.push(eigenvalues(cfg, trials));
    out.push(product_formula(cfg, trials));
    out.push(jacobi_z(cfg, trials));
    out
}

/// Coefficients of the x-side operators sum to zero.
fn annihilates_constants(cfg: &SuiteConfig, sys: &RacahSystem, trials: usize) -> CheckRecord {
    let arity = 2;
    let sums: Vec<Expr> = (1..=2).map(|j| sum(sys.lx(j).terms().map(|(_, c)| c.clone()))).collect();
    let op = DiffOperator::from_terms(arity, sums.into_iter().enumerate().map(|(j, e)| (vec![j as i32, 0], e)));
    let s = cfg.suite_seed() ^ 0xc0;
    record(
        "constants/racah-x",
        "x-side operators kill constants",
        &format!("trials={} seed={}", trials, s),
        zero_witness(&op, trials, s).map(|w| w.as_ref().map(zero_witness_map)),
    )
}

fn eigenvalues(cfg: &SuiteConfig, trials: usize) -> CheckRecord {
    let [mu1, mu2, kappa1, kappa2] = appendix::racah_eigenvalues();
    let mut s = sampler(cfg, 3);
    let outcome = all_of((0..trials).map(|_| -> Outcome {
        let n = [s.int_in(0, 40) as u32, s.int_in(0, 40) as u32];
        let x = s.rationals(2);
        let slots = s.rationals(5);
        let (beta, big_n) = (&slots[..4], &slots[4]);
        let nr = uints(&n);
        let env_n = Env::new(&nr[..], &slots[..]);
        let env_x = Env::new(&x[..], &slots[..]);
        let pairs = [
            (mu1.eval(&env_n)?, mu(1, &n, beta), "mu1"),
            (mu2.eval(&env_n)?, mu(2, &n, beta), "mu2"),
            (kappa1.eval(&env_x)?, kappa(1, &x, beta, big_n), "kappa1"),
            (kappa2.eval(&env_x)?, kappa(2, &x, beta, big_n), "kappa2"),
        ];
        for (a, b, name) in pairs {
            if let Some(mut w) = equal_q(&a, &b) {
                w.insert("eigenvalue".into(), name.into());
                w.insert("slots".into(), fmt_vec(&slots));
                return Ok(Some(w));
            }
        }
        Ok(None)
    }));
    record("eigenvalues/racah", "tabulated eigenvalues", &format!("trials={}", trials), outcome)
}

/// The two-variable normalized polynomial written out factor by factor.
fn product_formula(cfg: &SuiteConfig, trials: usize) -> CheckRecord {
    let mut s = sampler(cfg, 4);
    let outcome = all_of((0..trials).map(|_| -> Outcome {
        let n = [s.int_in(0, 3) as u32, s.int_in(0, 3) as u32];
        let x = s.rationals(2);
        let b = s.rationals(4);
        let big_n = s.rational();
        let one = int(1);
        let f1 = racah_r(n[0], &(&b[1] - &b[0] - &one), &(&b[2] - &b[1] - &one), &(-&x[1] - &one), &(&b[1] + &x[1]), &x[0]);
        let n1 = int(n[0] as i64);
        let f2 = racah_r(
            n[1],
            &(&n1 * int(2) + &b[2] - &b[0] - &one),
            &(&b[3] - &b[2] - &one),
            &(&n1 - &big_n - &one),
            &(&n1 + &b[2] + &big_n),
            &(&x[1] - &n1),
        );
        let tot = n[0] + n[1];
        let den: Rational = pochhammer(&-big_n.clone(), tot)
            * pochhammer(&(-&big_n - &b[0]), tot)
            * pochhammer(&(&b[2] - &b[1]), n[0])
            * pochhammer(&(&b[3] - &b[2]), n[1]);
        if den == int(0) {
            return Ok(None);
        }
        let want = f1 * f2 / den;
        let got = racah_hat(&n, &x, &b, &big_n)?;
        Ok(equal_q(&got, &want).map(|mut w| {
            w.insert("n".into(), format!("{:?}", n));
            w.insert("x".into(), fmt_vec(&x));
            w
        }))
    }));
    record("product/racah-hat", "two-variable normalized polynomial", &format!("trials={}", trials), outcome)
}

fn jacobi_z(cfg: &SuiteConfig, trials: usize) -> CheckRecord {
    let mut s = sampler(cfg, 5);
    let outcome = all_of((0..trials).map(|_| -> Outcome {
        let gamma = s.rationals(3);
        let (l1, l2) = appendix::jacobi_z(&gamma);
        for (j, table) in [(1, l1), (2, l2)] {
            if !jacobi::z_operator(2, j, &gamma).sub(&table).is_zero() {
                return Ok(Some(witness([("j", j.to_string()), ("gamma", fmt_vec(&gamma))])));
            }
        }
        Ok(None)
    }));
    record("table/jacobi-z", "Jacobi operators in z", &format!("trials={}", trials), outcome)
}
