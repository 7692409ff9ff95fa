//! The limiting families: Hahn, Jacobi, Krawtchouk with Meixner, Wilson.

use racah_core::algebra::{DiffOperator, Env, MultiPoly, PartialDiffOperator};
use racah_core::limits::hahn::{self, HahnParams};
use racah_core::limits::jacobi;
use racah_core::limits::krawtchouk::{self, KrawParams, KrawTriple};
use racah_core::limits::wilson::{wilson_complex, wilson_poly, WilsonParams};
use racah_core::dual::ln as racah_ln;
use racah_core::hyper::wilson_w;
use racah_core::racah::{mu as racah_mu, racah_hat, simplex};
use racah_core::scalar::{int, rat, GaussianRational};
use racah_core::{Error, Rational, Scalar};
use rayon::prelude::*;

use super::{apply_coeffs, as_degrees, coeffs_at, index_domain, ints, sampler, system, uints};
use crate::check::{all_of, equal, equal_q, fmt_list, fmt_vec, holds, record, witness, Outcome};
use crate::config::SuiteConfig;
use crate::report::{CheckRecord, Witness};

fn tagged(o: Outcome, key: &str, val: String) -> Outcome {
    o.map(|w| {
        w.map(|mut w: Witness| {
            w.insert(key.into(), val);
            w
        })
    })
}

/// Integer points with `y >= 0` and `|y| <= N`.
fn simplex_points(p: usize, big_n: u32) -> Vec<Vec<Rational>> {
    simplex(p, big_n).iter().map(|v| uints(v)).collect()
}

/// Check `op f_n = ev(n, x) f_n(x)` for every index and point. The operator
/// acts on the points when `on_points`, else on the indices.
#[allow(clippy::too_many_arguments)]
fn eigen_records(
    prefix: &str,
    anchor: &str,
    ops: &[DiffOperator],
    slots: &[Rational],
    indices: &[Vec<u32>],
    points: &[Vec<Rational>],
    on_points: bool,
    domain: &(dyn Fn(&[Rational]) -> bool + Sync),
    f: &(dyn Fn(&[u32], &[Rational]) -> racah_core::Result<Rational> + Sync),
    ev: &(dyn Fn(usize, &[u32], &[Rational]) -> Rational + Sync),
) -> Vec<CheckRecord> {
    let cases: Vec<(usize, &Vec<u32>)> = (1..=ops.len()).flat_map(|j| indices.iter().map(move |n| (j, n))).collect();
    cases
        .par_iter()
        .map(|&(j, n)| {
            let op = &ops[j - 1];
            let outcome = all_of(points.iter().map(|x| -> Outcome {
                let lhs = if on_points {
                    let cs = coeffs_at(op, x, slots)?;
                    apply_coeffs(&cs, x, domain, |pt| f(n, pt))?
                } else {
                    let nr = uints(n);
                    let cs = coeffs_at(op, &nr, slots)?;
                    apply_coeffs(&cs, &nr, domain, |pt| f(&as_degrees(pt), x))?
                };
                let rhs = ev(j, n, x) * f(n, x)?;
                tagged(Ok(equal_q(&lhs, &rhs)), "point", fmt_vec(x))
            }));
            record(
                format!("{}/j{}/n{}", prefix, j, fmt_list(n)),
                anchor,
                &format!("{} j={} n={:?} slots={} points={}", prefix, j, n, fmt_vec(slots), points.len()),
                outcome,
            )
        })
        .collect()
}

pub fn hahn(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let dmax = cfg.degree_or(cfg.by_tier(1, 2, 3));
    let mut out = Vec::new();
    for p in cfg.dims(&cfg.by_tier(vec![2], vec![2], vec![2, 3])) {
        let sys = system(cfg, p);
        let gamma: Vec<Rational> = (1..=p as i64 + 1).map(int).collect();
        let big_n = 4u32;
        let hp = HahnParams::new(gamma.clone(), int(big_n as i64)).expect("p >= 1");
        let slots = hp.slots();
        let idx = simplex(p, dmax);
        let pts = simplex_points(p, big_n);
        let h = |n: &[u32], y: &[Rational]| hahn::hahn_poly(n, y, &hp.gamma, &hp.n);
        let y_ops: Vec<DiffOperator> = (1..=p).map(|j| hahn::y_operator(p, j)).collect();
        let n_ops: Vec<DiffOperator> = (1..=p).map(|j| hahn::n_operator(&sys, j)).collect();
        let ydom = index_domain(Some(big_n as i64));
        out.extend(eigen_records(
            &format!("hahn-y/p{}", p),
            "Hahn operator in y",
            &y_ops,
            &slots,
            &idx,
            &pts,
            true,
            &ydom,
            &h,
            &|j, n, _| hahn::mu(j, n, &hp.gamma),
        ));
        out.extend(eigen_records(
            &format!("hahn-n/p{}", p),
            "Hahn operator in n",
            &n_ops,
            &slots,
            &idx,
            &pts,
            false,
            &ydom,
            &h,
            &|j, _, y| hahn::kappa(j, y, &hp.n),
        ));
        out.push(record(
            format!("hahn-origin/p{}", p),
            "Hahn polynomial of degree zero is one",
            &format!("p={}", p),
            h(&vec![0; p], &pts[pts.len() / 2]).map(|v| equal_q(&v, &int(1))),
        ));

        let trials = cfg.trials_or(cfg.by_tier(2, 10, 20));
        let mut s = sampler(cfg, 0x4a + p as u64);
        let limit = all_of((0..trials).map(|_| -> Outcome {
            let g = s.rationals(p + 1);
            let params = HahnParams::new(g.clone(), s.rational())?;
            let y = s.rationals(p);
            all_of(idx.iter().map(|n| -> Outcome {
                let a = hahn::racah_hat_limit(n, &y, &params)?;
                let b = hahn::hahn_poly(n, &y, &params.gamma, &params.n)?;
                tagged(Ok(equal_q(&a, &b)), "n", fmt_list(n))
            }))
        }));
        out.push(record(
            format!("racah-to-hahn/p{}", p),
            "normalized Racah polynomial tends to the Hahn polynomial",
            &format!("p={} trials={}", p, trials),
            limit,
        ));
    }
    let counts = all_of((1..=3usize).map(|p| -> Outcome {
        let moving = hahn::y_operator(p, p).support().iter().filter(|nu| nu.iter().any(|&v| v != 0)).count();
        Ok(equal(&moving, &(p * (p + 1))).map(|mut w| {
            w.insert("p".into(), p.to_string());
            w
        }))
    }));
    out.push(record("hahn-term-count", "top Hahn operator has p(p+1) shift terms", "p=1..3", counts));
    out
}

fn swap_poly(f: &MultiPoly) -> MultiPoly {
    f.terms().fold(MultiPoly::zero(2), |acc, (e, c)| acc.add(&MultiPoly::monomial(vec![e[1], e[0]], c.clone())))
}

fn swap_operator(op: &PartialDiffOperator) -> PartialDiffOperator {
    let mut out = PartialDiffOperator::zero(2);
    for (a, c) in op.terms() {
        out.add_term(vec![a[1], a[0]], swap_poly(c));
    }
    out
}

pub fn jacobi(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let dmax = cfg.degree_or(cfg.by_tier(1, 3, 4));
    let trials = cfg.trials_or(cfg.by_tier(2, 5, 10));
    let mut out = Vec::new();
    for p in cfg.dims(&cfg.by_tier(vec![2], vec![2], vec![2, 3])) {
        let sys = system(cfg, p);
        let mut s = sampler(cfg, p as u64);
        let gamma: Vec<Rational> = (0..=p).map(|_| s.rational_bounded(30)).collect();
        let idx = simplex(p, dmax);
        let cases: Vec<(usize, &Vec<u32>)> = (1..=p).flat_map(|j| idx.iter().map(move |n| (j, n))).collect();
        let z_side: Vec<CheckRecord> = cases
            .par_iter()
            .map(|&(j, n)| {
                let jp = jacobi::jacobi_poly(n, &gamma);
                let lhs = jacobi::z_operator(p, j, &gamma).apply(&jp);
                let ok = lhs == jp.scale(&jacobi::mu(j, n, &gamma));
                record(
                    format!("jacobi-z/p{}/j{}/n{}", p, j, fmt_list(n)),
                    "Jacobi differential operator in z",
                    &format!("p={} j={} n={:?} gamma={}", p, j, n, fmt_vec(&gamma)),
                    Ok(holds(ok, "exact polynomial identity")),
                )
            })
            .collect();
        out.extend(z_side);

        let mut slots = vec![int(0)];
        slots.extend_from_slice(&gamma);
        slots.push(int(0));
        let zs: Vec<Vec<Rational>> = (0..trials).map(|_| s.rationals(p)).collect();
        let n_ops: Vec<DiffOperator> = (1..=p).map(|j| jacobi::n_operator(&sys, j)).collect();
        let ndom = index_domain(None);
        out.extend(eigen_records(
            &format!("jacobi-n/p{}", p),
            "Jacobi difference operator in n",
            &n_ops,
            &slots,
            &idx,
            &zs,
            false,
            &ndom,
            &|n, z| Ok(jacobi::jacobi_poly(n, &gamma).eval(z)),
            &|j, _, z| jacobi::kappa(j, z),
        ));
        out.push(record(
            format!("jacobi-origin/p{}", p),
            "Jacobi polynomial of degree zero is one",
            &format!("p={}", p),
            Ok(holds(jacobi::jacobi_poly(&vec![0; p], &gamma) == MultiPoly::constant(p, int(1)), "constant term")),
        ));
    }

    let mut s = sampler(cfg, 0xf1);
    let p = 3;
    let gamma: Vec<Rational> = (0..=p).map(|_| s.rational_bounded(30)).collect();
    for n in simplex(p, dmax.min(3)) {
        let z = s.rationals(p);
        let outcome = all_of((1..=p).map(|k| -> Outcome {
            let (lim, closed) = jacobi::factor_limit(k, &n, &z, &gamma)?;
            tagged(Ok(equal_q(&lim, &closed)), "k", k.to_string())
        }));
        out.push(record(
            format!("hahn-to-jacobi-factor/n{}", fmt_list(&n)),
            "scaled Hahn factor tends to the Jacobi factor",
            &format!("n={:?} z={} gamma={}", n, fmt_vec(&z), fmt_vec(&gamma)),
            outcome,
        ));
    }

    let perm = all_of((0..trials).map(|_| -> Outcome {
        let g = s.rationals(3);
        let swapped = [g[1].clone(), g[0].clone(), g[2].clone()];
        let a = jacobi::z_operator(2, 2, &g);
        let b = swap_operator(&jacobi::z_operator(2, 2, &swapped));
        Ok(holds(a.sub(&b).is_zero(), "top operator is symmetric in (z_1, gamma_1) <-> (z_2, gamma_2)")
            .map(|mut w| {
                w.insert("gamma".into(), fmt_vec(&g));
                w
            }))
    }));
    out.push(record("jacobi-permutation", "top Jacobi operator is permutation covariant", "p=2", perm));
    out
}

pub fn krawtchouk_meixner(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let dmax = cfg.degree_or(cfg.by_tier(1, 2, 3));
    let trials = cfg.trials_or(cfg.by_tier(10, 50, 200));
    let mut out = Vec::new();
    let p = 2;
    let big_n = 4u32;
    let kp = KrawParams::new(vec![rat(1, 4), rat(1, 3)], int(big_n as i64)).expect("nonempty");
    let slots = kp.slots();
    let idx = simplex(p, dmax);
    let pts = simplex_points(p, big_n);
    let k = |n: &[u32], x: &[Rational]| krawtchouk::kraw_poly(n, x, &kp.prob, &kp.n);
    let x_ops: Vec<DiffOperator> = (1..=p).map(|j| krawtchouk::lx(p, j)).collect();
    let n_ops: Vec<DiffOperator> = (1..=p).map(|j| krawtchouk::ln(p, j)).collect();
    let dom = index_domain(Some(big_n as i64));
    out.extend(eigen_records(
        "krawtchouk-x",
        "Krawtchouk operator in x",
        &x_ops,
        &slots,
        &idx,
        &pts,
        true,
        &dom,
        &k,
        &|j, n, _| krawtchouk::mu(j, n),
    ));
    out.extend(eigen_records(
        "krawtchouk-n",
        "Krawtchouk operator in n",
        &n_ops,
        &slots,
        &idx,
        &pts,
        false,
        &dom,
        &k,
        &|j, _, x| krawtchouk::kappa(j, x),
    ));

    let gram_n = 3u32;
    let kp3 = KrawParams::new(kp.prob.clone(), int(gram_n as i64)).expect("nonempty");
    let cells = simplex(p, gram_n);
    let orth = all_of(cells.iter().flat_map(|a| cells.iter().map(move |b| (a, b))).map(|(a, b)| -> Outcome {
        let mut acc = int(0);
        for x in &cells {
            let xi: Vec<i64> = x.iter().map(|&v| v as i64).collect();
            let xr = ints(&xi);
            acc += krawtchouk::weight(&xi, &kp3)?
                * krawtchouk::kraw_poly(a, &xr, &kp3.prob, &kp3.n)?
                * krawtchouk::kraw_poly(b, &xr, &kp3.prob, &kp3.n)?;
        }
        let bad = (a == b) == Scalar::is_zero(&acc);
        Ok(bad.then(|| witness([("n", fmt_list(a)), ("m", fmt_list(b)), ("value", acc.to_string())])))
    }));
    out.push(record("krawtchouk-orthogonality", "Krawtchouk polynomials are orthogonal", "p=2 N=3", orth));

    let mut s = sampler(cfg, 1);
    for dp in cfg.by_tier(vec![2], vec![2, 3], vec![2, 3, 4]) {
        let pt: Vec<Rational> = (0..dp).map(|_| s.positive_rational(20) / int(4 * dp as i64 + 20)).collect();
        let big_n = s.rational();
        let dual_max = cfg.degree_or(cfg.by_tier(1, 3, 3));
        let outcome = krawtchouk::dual_prob(&pt).and_then(|pd| {
            let nds = simplex(dp, dual_max);
            all_of(nds.iter().flat_map(|n| nds.iter().map(move |nd| (n, nd))).map(|(n, nd)| -> Outcome {
                let x: Vec<Rational> = nd.iter().rev().map(|&v| int(v as i64)).collect();
                let xd: Vec<Rational> = n.iter().rev().map(|&v| int(v as i64)).collect();
                let a = krawtchouk::kraw_poly(n, &x, &pd, &big_n)?;
                let b = krawtchouk::kraw_poly(nd, &xd, &pt, &big_n)?;
                tagged(Ok(equal_q(&a, &b)), "indices", format!("{:?} {:?}", n, nd))
            }))
        });
        out.push(record(
            format!("krawtchouk-duality/p{}", dp),
            "Krawtchouk polynomials are self-dual",
            &format!("p={} prob={} N={}", dp, fmt_vec(&pt), big_n),
            outcome,
        ));
    }
    let inv = all_of((0..trials).map(|_| -> Outcome {
        let q = s.int_in(1, 4) as usize;
        let prob: Vec<Rational> = (0..q).map(|_| s.positive_rational(20) / int(4 * q as i64 + 20)).collect();
        let t = KrawTriple { x: s.rationals(q), n: s.rationals(q), prob };
        let back = krawtchouk::kraw_dual(&krawtchouk::kraw_dual(&t)?)?;
        Ok((back != t).then(|| witness([("prob", fmt_vec(&t.prob))])))
    }));
    out.push(record("krawtchouk-dual-involution", "Krawtchouk duality is an involution", &format!("trials={}", trials), inv));

    let c = [rat(1, 5), rat(2, 7)];
    let sm = rat(7, 3);
    let mp = KrawParams::from_meixner(&c, &sm).expect("|c| != 1");
    let mslots = mp.slots();
    let m = |n: &[u32], x: &[Rational]| krawtchouk::meixner_poly(n, x, &c, &sm);
    let mpts: Vec<Vec<Rational>> = simplex(p, 3).iter().map(|v| uints(v)).collect();
    out.extend(eigen_records(
        "meixner-x",
        "Meixner operator in x",
        &x_ops,
        &mslots,
        &idx,
        &mpts,
        true,
        &|_: &[Rational]| true,
        &m,
        &|j, n, _| krawtchouk::mu(j, n),
    ));
    let mdom = index_domain(None);
    out.extend(eigen_records(
        "meixner-n",
        "Meixner operator in n",
        &n_ops,
        &mslots,
        &idx,
        &mpts,
        false,
        &mdom,
        &m,
        &|j, _, x| krawtchouk::kappa(j, x),
    ));
    out.push(record(
        "meixner-origin",
        "Meixner polynomials equal one at the origin",
        "c=[1/5,2/7] s=7/3",
        all_of(idx.iter().map(|n| -> Outcome {
            tagged(m(n, &[int(0), int(0)]).map(|v| equal_q(&v, &int(1))), "n", fmt_list(n))
        })),
    ));
    let pole = krawtchouk::meixner_poly(&[1, 0], &[int(0), int(0)], &[rat(1, 2), rat(1, 2)], &int(1));
    out.push(record(
        "meixner-pole",
        "Meixner parameters with |c| = 1 are rejected",
        "c=[1/2,1/2]",
        Ok(holds(matches!(pole, Err(Error::PoleInDenominator(_))), "expected a pole in the parameter map")),
    ));
    out
}

fn wilson_params(s: &mut racah_core::algebra::Sampler, p: usize) -> WilsonParams {
    WilsonParams { a: s.rational(), b: s.rational(), c: s.rational(), d: s.rational(), eps: s.rationals(p - 1) }
}

fn imag(v: &[Rational]) -> Vec<GaussianRational> {
    v.iter().map(|y| GaussianRational::new(int(0), y.clone())).collect()
}

fn lift(v: &[Rational]) -> Vec<GaussianRational> {
    v.iter().cloned().map(GaussianRational::real).collect()
}

pub fn wilson(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let trials = cfg.trials_or(cfg.by_tier(5, 10, 30));
    let real_trials = cfg.trials_or(cfg.by_tier(10, 50, 200));
    let mut out = Vec::new();
    let mut s = sampler(cfg, 1);

    let bridge = all_of((0..trials).map(|_| -> Outcome {
        let wp = wilson_params(&mut s, 1);
        let y = s.rational();
        let iy = GaussianRational::new(int(0), y.clone());
        let g = |r: &Rational| GaussianRational::real(r.clone());
        all_of((0..=4u32).map(|n| -> Outcome {
            let w = wilson_w(n, &iy, &g(&wp.a), &g(&wp.b), &g(&wp.c), &g(&wp.d));
            let got = wilson_poly(&[n], &[y.clone()], &wp)?;
            Ok(if w.im != int(0) {
                Some(witness([("failed", "one-variable oracle is not real")]))
            } else {
                tagged(Ok(equal_q(&got, &w.re)), "n", n.to_string())?
            })
        }))
    }));
    out.push(record("wilson-one-variable", "one-variable case is the classical Wilson polynomial", "p=1 n<=4", bridge));

    let real = all_of((0..real_trials).map(|_| -> Outcome {
        let wp = wilson_params(&mut s, 2);
        let y = s.rationals(2);
        let n = [s.int_in(0, 3) as u32, s.int_in(0, 3) as u32];
        let w = wilson_complex(&n, &imag(&y), &wp);
        Ok((w.im != int(0)).then(|| witness([("n", format!("{:?}", n)), ("y", fmt_vec(&y)), ("imag", w.im.to_string())])))
    }));
    out.push(record("wilson-real", "Wilson polynomials are real on real y", &format!("p=2 trials={}", real_trials), real));

    let sys = system(cfg, 2);
    let idx = simplex(2, cfg.degree_or(2));
    let x_ops: Vec<DiffOperator> = (1..=2).map(|j| sys.lx(j)).collect();
    let n_ops: Vec<DiffOperator> = (1..=2).map(|j| racah_ln(&sys, j)).collect();
    let spectral = all_of((0..trials).map(|_| -> Outcome {
        let wp = wilson_params(&mut s, 2);
        let (beta, big_n) = wp.racah_params();
        let mut slots = lift(&beta);
        slots.push(GaussianRational::real(big_n.clone()));
        let gb = lift(&beta);
        let gn = GaussianRational::real(big_n.clone());
        let iy = imag(&s.rationals(2));
        let x = wp.racah_point(&iy);
        for n in &idx {
            let w = |m: &[u32], pt: &[GaussianRational]| wilson_complex(m, &wp.imaginary_coords(pt), &wp);
            for (j, op) in x_ops.iter().enumerate() {
                let lhs = op.apply(&Env::new(&x[..], &slots[..]), |pt| Ok(w(n, pt)))?;
                let rhs = Scalar::mul(&racah_mu(j + 1, n, &gb), &w(n, &x));
                if lhs != rhs {
                    return Ok(Some(witness([("side", "y".into()), ("j", (j + 1).to_string()), ("n", fmt_list(n))])));
                }
            }
            let nr: Vec<GaussianRational> = n.iter().map(|&v| GaussianRational::real(int(v as i64))).collect();
            for (j, op) in n_ops.iter().enumerate() {
                let lhs = op.apply_guarded(
                    &Env::new(&nr[..], &slots[..]),
                    |pt| pt.iter().all(|v| v.to_rational().is_some_and(|r| r.is_integer() && r >= int(0))),
                    |pt| {
                        let m: Vec<u32> = pt.iter().map(|v| v.re.to_integer().try_into().expect("small index")).collect();
                        racah_hat(&m, &x, &gb, &gn)
                    },
                )?;
                let kap = kappa_complex(j + 1, &x, &gb, &gn);
                let rhs = Scalar::mul(&kap, &racah_hat(n, &x, &gb, &gn)?);
                if lhs != rhs {
                    return Ok(Some(witness([("side", "n".into()), ("j", (j + 1).to_string()), ("n", fmt_list(n))])));
                }
            }
        }
        Ok(None)
    }));
    out.push(record(
        "wilson-spectral",
        "difference equations hold in the imaginary coordinates",
        &format!("p=2 trials={}", trials),
        spectral,
    ));
    let mut s0 = sampler(cfg, 2);
    let wp = wilson_params(&mut s0, 2);
    let y = s0.rationals(2);
    out.push(record(
        "wilson-origin",
        "Wilson polynomial of degree zero is one",
        "p=2",
        wilson_poly(&[0, 0], &y, &wp).map(|v| equal_q(&v, &int(1))),
    ));
    out
}

/// `kappa_j` over the Gaussian rationals.
fn kappa_complex(j: usize, x: &[GaussianRational], beta: &[GaussianRational], big_n: &GaussianRational) -> GaussianRational {
    let p = x.len();
    let i = p + 1 - j;
    let xi = &x[i - 1];
    Scalar::neg(&Scalar::mul(&Scalar::sub(xi, big_n), &Scalar::add(&Scalar::add(xi, &beta[i]), big_n)))
}
