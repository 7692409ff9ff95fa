//! Hand-transcribed two-variable tables, used as independent oracles for
//! the generated operators.
//!
//! Racah tables use the Racah slot layout (`beta_0..beta_3`, then `N` in
//! slot 4). Jacobi tables use the Hahn layout (slot 0 unused, `gamma_1..3`
//! in slots 1..3). Krawtchouk tables use `p_1, p_2, N` in slots 0..2.

use std::collections::BTreeMap;

use racah_core::algebra::{DiffOperator, Expr, Leaf, MultiPoly, PartialDiffOperator};
use racah_core::scalar::int;
use racah_core::Rational;

pub type Table = BTreeMap<Vec<i32>, Expr>;

fn c(i: i64) -> Expr {
    Expr::int(i)
}

fn v(i: usize) -> Expr {
    Expr::var(i)
}

fn b(k: usize) -> Expr {
    Expr::param(k)
}

/// `x_i -> -x_i - beta_i` on an expression (1-based `i`).
fn inv(i: usize, e: &Expr) -> Expr {
    let img = -v(i - 1) - b(i);
    e.subst(&|l| match l {
        Leaf::Var(k) if k == i - 1 => Some(img.clone()),
        _ => None,
    })
}

/// `C^(2)_nu` for the top operator in `x`.
pub fn racah_c2() -> Table {
    let (x1, x2, n) = (v(0), v(1), b(4));
    let lam2 = &x2 * (&x2 + b(2));
    let lam3 = &n * (&n + b(3));
    let lam1 = &x1 * (&x1 + b(1));
    let d1 = |a: i64| c(2) * &x1 + b(1) + c(a);
    let d2 = |a: i64| c(2) * &x2 + b(2) + c(a);
    let c11 = (&x1 + b(1))
        * (&x1 + b(1) - b(0))
        * (&x2 + &x1 + b(2))
        * (&x2 + &x1 + b(2) + c(1))
        * (&n - &x2)
        * (&n + &x2 + b(3))
        / (d1(0) * d1(1) * d2(0) * d2(1));
    let c10 = (&x1 + b(1))
        * (&x1 + b(1) - b(0))
        * (&x2 - &x1)
        * (&x2 + &x1 + b(2))
        * (c(2) * &lam2 + c(2) * &lam3 + (b(2) + c(1)) * (b(3) - c(1)))
        / (d1(0) * d1(1) * d2(1) * d2(-1));
    let c01 = (c(2) * &lam1 + (b(0) + c(1)) * (b(1) - c(1)))
        * (&x2 + &x1 + b(2))
        * (&x2 - &x1 + b(2) - b(1))
        * (&n - &x2)
        * (&n + &x2 + b(3))
        / (d1(1) * d1(-1) * d2(0) * d2(1));
    let mut t = Table::new();
    t.insert(vec![-1, 1], inv(1, &c11));
    t.insert(vec![1, -1], inv(2, &c11));
    t.insert(vec![-1, -1], inv(1, &inv(2, &c11)));
    t.insert(vec![1, 1], c11);
    t.insert(vec![-1, 0], inv(1, &c10));
    t.insert(vec![1, 0], c10);
    t.insert(vec![0, -1], inv(2, &c01));
    t.insert(vec![0, 1], c01);
    t
}

/// `C^(1)_{+-1}` for the first operator in `x`.
pub fn racah_c1() -> Table {
    let (x1, x2) = (v(0), v(1));
    let c1 = (&x1 + b(1) - b(0)) * (&x1 + b(1)) * (&x2 + &x1 + b(2)) * (&x2 - &x1)
        / ((c(2) * &x1 + b(1)) * (c(2) * &x1 + b(1) + c(1)));
    let mut t = Table::new();
    t.insert(vec![-1, 0], inv(1, &c1));
    t.insert(vec![1, 0], c1);
    t
}

/// `mu_1, mu_2` in `n` (vars) and `kappa_1, kappa_2` in `x` (vars).
pub fn racah_eigenvalues() -> [Expr; 4] {
    let (a, bb) = (v(0), v(1));
    let mu2 = -((&a + &bb) * (&a + &bb - c(1) + b(3) - b(0)));
    let mu1 = -(&a * (&a - c(1) + b(2) - b(0)));
    let n = b(4);
    let kappa2 = -(&a * (&a + b(1))) + &n * (&n + b(1));
    let kappa1 = -(&bb * (&bb + b(2))) + &n * (&n + b(2));
    [mu1, mu2, kappa1, kappa2]
}

/// `D^(2)_nu` for the top operator in `n`. With `perturb`, one constant in
/// `D_(1,0)` is off by one.
pub fn racah_d2(perturb: bool) -> Table {
    let (n1, n2, n) = (v(0), v(1), b(4));
    let s = &n1 + &n2;
    let p = |a: i64| c(2) * &s + b(3) - b(0) + c(a);
    let q = |a: i64| c(2) * &n1 + b(2) - b(0) + c(a);
    let r3 = |a: i64| c(2) * &n1 + &n2 + b(3) - b(0) + c(a);
    let r2 = |a: i64| c(2) * &n1 + &n2 + b(2) - b(0) + c(a);
    let up = (&s - &n) * (&s - &n - b(0));
    let down = (&s + b(3) - b(0) + &n - c(1)) * (&s + b(3) + &n - c(1));
    let mu2 = -(&s * (&s - c(1) + b(3) - b(0)));
    let mu1 = -(&n1 * (&n1 - c(1) + b(2) - b(0)));
    let t0 = c(-2) * &mu2 + (b(0) + c(1)) * (b(0) - b(3)) - c(2) * &n * (&n + b(3));
    let t2 = c(-2) * &mu1 + (b(0) - b(1)) * (b(0) - b(2) + c(2));
    let m2 = -&n2 + b(2) - b(3);
    let f1 = -&n1 - b(2) + b(0) + c(if perturb { 2 } else { 1 });
    let g1 = &n1 + b(2) - b(1);
    let h1 = &n1 * (-&n1 + b(0) - b(1) + c(1));
    let mut t = Table::new();
    t.insert(vec![1, 0], &up * r3(-1) * r3(0) / (p(-1) * p(0)) * f1 * &g1 / (q(-1) * q(0)));
    t.insert(vec![0, 1], &up * &m2 * r3(-1) * &t2 / (p(-1) * p(0) * q(0) * q(-2)));
    t.insert(vec![-1, 2], &up * &m2 * (&m2 - c(1)) * &h1 / (p(-1) * p(0) * q(-1) * q(-2)));
    t.insert(
        vec![1, -1],
        &t0 * r3(-1) * &n2 * (&n1 + b(2) - b(0) - c(1)) * &g1 / (p(0) * p(-2) * q(-1) * q(0)),
    );
    t.insert(vec![-1, 1], &t0 * &m2 * r2(-1) * &h1 / (p(0) * p(-2) * q(-1) * q(-2)));
    t.insert(vec![0, -1], -(&down * r2(-1) * &n2 * &t2 / (p(-1) * p(-2) * q(0) * q(-2))));
    t.insert(
        vec![1, -2],
        &down * &n2 * (&n2 - c(1)) * (-&n1 - b(2) + b(0) + c(1)) * &g1 / (p(-1) * p(-2) * q(-1) * q(0)),
    );
    t.insert(vec![-1, 0], &down * r2(-1) * r2(-2) * &h1 / (p(-1) * p(-2) * q(-1) * q(-2)));
    t
}

/// `D^(1)_{(0,+-1)}` for the first operator in `n`.
pub fn racah_d1() -> Table {
    let (n1, n2, n) = (v(0), v(1), b(4));
    let s = &n1 + &n2;
    let p = |a: i64| c(2) * &s + b(3) - b(0) + c(a);
    let mut t = Table::new();
    t.insert(
        vec![0, 1],
        (&s - &n - b(0)) * (&s - &n) * (c(2) * &n1 + &n2 + b(3) - b(0) - c(1)) * (-&n2 + b(2) - b(3))
            / (p(-1) * p(0)),
    );
    t.insert(
        vec![0, -1],
        -((&s + b(3) + &n - c(1)) * (&s + b(3) - b(0) + &n - c(1)) * &n2 * (c(2) * &n1 + &n2 + b(2) - b(0) - c(1))
            / (p(-1) * p(-2))),
    );
    t
}

/// `D^(2)_nu` for the top Jacobi operator in `n`.
pub fn jacobi_d2() -> Table {
    let (n1, n2) = (v(0), v(1));
    let g = b(1) + b(2) + b(3);
    let h = b(1) + b(2);
    let pj = |a: i64| c(2) * &n1 + c(2) * &n2 + &g + c(a);
    let qj = |a: i64| c(2) * &n1 + &h + c(a);
    let r = |a: i64| c(2) * &n1 + &n2 + &g + c(a);
    let s = |a: i64| c(2) * &n1 + &n2 + &h + c(a);
    let u = c(2) * &n1 * (&n1 + c(1) + &h) + (b(1) + c(1)) * &h;
    let up = (&n1 + &h + c(1)) * (&n1 + b(2) + c(1));
    let low = &n1 * (&n1 + b(1));
    let g3 = |a: i64| &n2 + b(3) + c(a);
    let mut t = Table::new();
    t.insert(vec![1, 0], -(r(2) * r(3) / (pj(2) * pj(3)) * &up / (qj(1) * qj(2))));
    t.insert(vec![0, 1], -(g3(1) * r(2) / (pj(2) * pj(3)) * &u / (qj(2) * qj(0))));
    t.insert(vec![-1, 2], -(g3(1) * g3(2) / (pj(2) * pj(3)) * &low / (qj(1) * qj(0))));
    t.insert(vec![1, -1], -(c(2) * r(2) * &n2 / (pj(3) * pj(1)) * &up / (qj(1) * qj(2))));
    t.insert(vec![-1, 1], -(c(2) * g3(1) * s(1) / (pj(3) * pj(1)) * &low / (qj(1) * qj(0))));
    t.insert(vec![0, -1], -(s(1) * &n2 / (pj(2) * pj(1)) * &u / (qj(2) * qj(0))));
    t.insert(vec![1, -2], -(&n2 * (&n2 - c(1)) / (pj(2) * pj(1)) * &up / (qj(1) * qj(2))));
    t.insert(vec![-1, 0], -(s(1) * s(0) / (pj(2) * pj(1)) * &low / (qj(1) * qj(0))));
    t
}

/// `D^(1)_{(0,+-1)}` for the first Jacobi operator in `n`.
pub fn jacobi_d1() -> Table {
    let (n1, n2) = (v(0), v(1));
    let g = b(1) + b(2) + b(3);
    let h = b(1) + b(2);
    let pj = |a: i64| c(2) * &n1 + c(2) * &n2 + &g + c(a);
    let mut t = Table::new();
    t.insert(vec![0, 1], -((c(2) * &n1 + &n2 + &g + c(2)) * (&n2 + b(3) + c(1)) / (pj(2) * pj(3))));
    t.insert(vec![0, -1], -(&n2 * (c(2) * &n1 + &n2 + &h + c(1)) / (pj(2) * pj(1))));
    t
}

/// The two Jacobi differential operators in `z` for numeric `gamma_1..3`:
/// `(L^z_1, L^z_2)`.
pub fn jacobi_z(gamma: &[Rational]) -> (PartialDiffOperator, PartialDiffOperator) {
    let z1 = MultiPoly::var(2, 0);
    let z2 = MultiPoly::var(2, 1);
    let one = MultiPoly::constant(2, int(1));
    let k = |r: Rational| MultiPoly::constant(2, r);
    let g1 = &gamma[0] + int(1);
    let g2 = &gamma[1] + int(1);
    let g = &gamma[0] + &gamma[1] + &gamma[2] + int(3);
    let z1z2 = z1.mul(&z2);
    let mut l2 = PartialDiffOperator::zero(2);
    l2.add_term(vec![1, 1], z1z2.scale(&int(-2)));
    l2.add_term(vec![2, 0], z1.mul(&one.sub(&z1)));
    l2.add_term(vec![0, 2], z2.mul(&one.sub(&z2)));
    l2.add_term(vec![1, 0], k(g1.clone()).sub(&z1.scale(&g)));
    l2.add_term(vec![0, 1], k(g2.clone()).sub(&z2.scale(&g)));
    let mut l1 = PartialDiffOperator::zero(2);
    l1.add_term(vec![1, 1], z1z2.scale(&int(-2)));
    l1.add_term(vec![2, 0], z1z2.clone());
    l1.add_term(vec![0, 2], z1z2);
    l1.add_term(vec![1, 0], z2.scale(&g1).sub(&z1.scale(&g2)));
    l1.add_term(vec![0, 1], z1.scale(&g2).sub(&z2.scale(&g1)));
    (l1, l2)
}

/// The two-variable Krawtchouk operators `(L^x_1, L^x_2, L^n_1, L^n_2)`.
pub fn krawtchouk_ops() -> [DiffOperator; 4] {
    let (p1, p2, n) = (b(0), b(1), b(2));
    let d = |i: usize| DiffOperator::delta(2, i);
    let nb = |i: usize| DiffOperator::nabla(2, i);
    let sc = |op: DiffOperator, e: Expr| op.scale_left(&e);
    let one = c(1);
    let q = &p2 / (&one - &p1);
    let rest = (&one - &p1 - &p2) / (&one - &p1);
    let r = &p1 * &rest;
    let (y1, y2) = (v(0), v(1));
    let lx1 = sc(d(0).compose(&nb(1)), &p1 * &y2)
        .add(&sc(nb(0).compose(&d(1)), &p2 * &y1))
        .add(&sc(d(0), &p1 * (&y1 - &n)))
        .add(&sc(nb(0), (&one - &p1) * &y1))
        .add(&sc(d(1), &p2 * (&y2 - &n)))
        .add(&sc(nb(1), (&one - &p2) * &y2));
    let lx2 = sc(d(1), &q * (&y1 + &y2 - &n)).add(&sc(nb(1), &rest * &y2));
    let ln1 = sc(d(1).compose(&nb(0)), &q * &y1)
        .add(&sc(nb(1).compose(&d(0)), &r * &y2))
        .add(&sc(d(1), &q * (&y2 - &n)))
        .add(&sc(nb(1), &rest * &y2))
        .add(&sc(d(0), &r * (&y1 - &n)))
        .add(&sc(nb(0), (&one - &p1 + &p1 * &p2 / (&one - &p1)) * &y1));
    let ln2 = sc(d(0), &p1 * (&y1 + &y2 - &n)).add(&sc(nb(0), (&one - &p1) * &y1));
    [lx1, lx2, ln1, ln2]
}
