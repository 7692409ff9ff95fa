//! The multivariable Racah system: the operator in difference and shift
//! form, the commuting family in `x`, the polynomials, weight and inner
//! product on the lattice, and the binomial determinant identity.
//!
//! Parameter slots follow one layout everywhere: slot `k` holds `beta_k` for
//! `k = 0..=p+1` and slot `p+2` holds `N`. Variable `i` (0-based) is
//! `x_{i+1}`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{product, DiffOperator, Expr, Leaf, Sampler, Shift, Signature};
use crate::error::{Error, Result};
use crate::hyper::racah_r;
use crate::scalar::{binomial, factorial, int, pochhammer, rat, to_i64, Rational, Scalar};

/// Slot of `N` for dimension `p`.
pub fn n_slot(p: usize) -> usize {
    p + 2
}

/// Numeric Racah parameters `beta_0..beta_{p+1}` and `N`.
#[derive(Clone, Debug, PartialEq)]
pub struct RacahParams {
    pub beta: Vec<Rational>,
    pub n: Rational,
}

impl RacahParams {
    pub fn new(beta: Vec<Rational>, n: Rational) -> Result<Self> {
        if beta.len() < 3 {
            return Err(Error::InvalidParams("need beta_0..beta_{p+1} with p >= 1".into()));
        }
        Ok(RacahParams { beta, n })
    }

    pub fn p(&self) -> usize {
        self.beta.len() - 2
    }

    /// Values for the parameter slots.
    pub fn slots(&self) -> Vec<Rational> {
        let mut v = self.beta.clone();
        v.push(self.n.clone());
        v
    }

    pub fn from_slots(p: usize, slots: &[Rational]) -> Result<Self> {
        if slots.len() != p + 3 {
            return Err(Error::InvalidParams("expected p + 3 parameter values".into()));
        }
        Self::new(slots[..p + 2].to_vec(), slots[p + 2].clone())
    }

    /// `N` as a nonnegative integer, if it is one.
    pub fn n_integer(&self) -> Option<i64> {
        to_i64(&self.n).filter(|&v| v >= 0)
    }

    /// Random parameters away from integer and half-integer resonances.
    /// With `n = Some(m)` the parameter `N` is the integer `m`.
    pub fn generic(p: usize, s: &mut Sampler, n: Option<i64>) -> Self {
        loop {
            let beta = s.rationals(p + 2);
            let big_n = match n {
                Some(m) => int(m),
                None => s.rational(),
            };
            let cand = RacahParams { beta, n: big_n };
            if cand.is_generic() {
                return cand;
            }
        }
    }

    /// No `beta_k`, pairwise sum or difference, or shift by `N` of either,
    /// is an integer or half-integer.
    pub fn is_generic(&self) -> bool {
        let bad = |r: &Rational| r.denom() <= &BigInt::from(2);
        let integer_n = self.n.is_integer();
        let mut vals: Vec<Rational> = Vec::new();
        for (i, a) in self.beta.iter().enumerate() {
            vals.push(a.clone());
            for b in &self.beta[..i] {
                vals.push(a - b);
                vals.push(a + b);
            }
        }
        if !integer_n {
            let extra: Vec<Rational> = vals
                .iter()
                .flat_map(|v| [v + &self.n, v - &self.n, v + &self.n * int(2), v - &self.n * int(2)])
                .collect();
            vals.extend(extra);
            vals.push(self.n.clone());
            vals.push(&self.n * int(2));
        }
        !vals.iter().any(bad)
    }
}

/// Names for display: `x1..xp`, `b0..b{p+1}`, `N`.
pub fn signature(p: usize) -> Signature {
    use alloc::format;
    let vars = (1..=p).map(|i| format!("x{}", i)).collect();
    let mut params: Vec<_> = (0..p + 2).map(|k| format!("b{}", k)).collect();
    params.push("N".into());
    Signature::new(vars, params)
}

/// Fault-injection switches: each adds one to a single constant in one
/// coefficient formula. For exercising the verification harness only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// Constant term of `B^{0,0}`.
    B00,
    /// Second factor of `B^{0,1}`.
    B01,
    /// First factor of `B^{1,0}`.
    B10,
    /// Second factor of `B^{1,1}`.
    B11,
    /// Second factor of `b^0`.
    LowerB0,
    /// First factor of `b^1`.
    LowerB1,
    /// First factor of the difference-form coefficient `A`.
    A,
}

impl Mutation {
    pub const ALL: [Mutation; 7] = [
        Mutation::B00,
        Mutation::B01,
        Mutation::B10,
        Mutation::B11,
        Mutation::LowerB0,
        Mutation::LowerB1,
        Mutation::A,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::B00 => "B00",
            Mutation::B01 => "B01",
            Mutation::B10 => "B10",
            Mutation::B11 => "B11",
            Mutation::LowerB0 => "b0",
            Mutation::LowerB1 => "b1",
            Mutation::A => "A",
        }
    }
}

/// `L_q` in variables `x_1..x_q`, embedded in an algebra of arity `arity`
/// whose leading `q` coordinates are those variables. `x[0] = 0` and
/// `x[q+1]` plays the role of `N`.
struct Frame {
    q: usize,
    arity: usize,
    x: Vec<Expr>,
    beta: Vec<Expr>,
    mutation: Option<Mutation>,
}

fn bump(m: Option<Mutation>, which: Mutation) -> Expr {
    Expr::int(if m == Some(which) { 1 } else { 0 })
}

impl Frame {
    fn lam(&self, i: usize) -> Expr {
        if i == 0 {
            return Expr::zero();
        }
        &self.x[i] * &(&self.x[i] + &self.beta[i])
    }

    /// `I_i`, `1 <= i <= q`.
    fn inv(&self, i: usize, e: &Expr) -> Expr {
        let img = -&self.x[i] - &self.beta[i];
        e.subst(&|l| match l {
            Leaf::Var(v) if v == i - 1 => Some(img.clone()),
            _ => None,
        })
    }

    fn big_b_base(&self, i: usize, j: i32, k: i32) -> Expr {
        let m = self.mutation;
        let (xi, xj) = (&self.x[i], &self.x[i + 1]);
        let (bi, bj) = (&self.beta[i], &self.beta[i + 1]);
        let s = xj + xi + bj;
        match (j, k) {
            (0, 0) => {
                let c = (bi + Expr::one()) * (bj - Expr::one()) / Expr::int(2);
                self.lam(i) + self.lam(i + 1) + c + bump(m, Mutation::B00)
            }
            (0, 1) => &s * &(xj - xi + bj - bi + bump(m, Mutation::B01)),
            (1, 0) => (xj - xi + bump(m, Mutation::B10)) * &s,
            (1, 1) => &s * &(&s + Expr::one() + bump(m, Mutation::B11)),
            _ => unreachable!(),
        }
    }

    fn big_b(&self, i: usize, j: i32, k: i32) -> Expr {
        let mut e = self.big_b_base(i, j.abs(), k.abs());
        if k < 0 {
            e = self.inv(i + 1, &e);
        }
        if j < 0 {
            e = self.inv(i, &e);
        }
        e
    }

    fn small_b(&self, i: usize, j: i32) -> Expr {
        let m = self.mutation;
        let t = Expr::int(2) * &self.x[i] + &self.beta[i];
        match j {
            0 => (&t + Expr::one()) * (&t - Expr::one() + bump(m, Mutation::LowerB0)),
            1 => (&t + Expr::one() + bump(m, Mutation::LowerB1)) * &t,
            -1 => self.inv(i, &self.small_b(i, 1)),
            _ => unreachable!(),
        }
    }

    fn tables(&self) -> (Vec<[[Expr; 3]; 3]>, Vec<[Expr; 3]>) {
        let q = self.q;
        let mut bb = Vec::with_capacity(q + 1);
        for i in 0..=q {
            let row = |j: i32| {
                [-1, 0, 1].map(|k| {
                    let ok_j = i > 0 || j == 0;
                    let ok_k = i < q || k == 0;
                    if ok_j && ok_k {
                        self.big_b(i, j, k)
                    } else {
                        Expr::zero()
                    }
                })
            };
            bb.push([row(-1), row(0), row(1)]);
        }
        let mut sb = vec![[Expr::zero(), Expr::zero(), Expr::zero()]];
        for i in 1..=q {
            sb.push([-1, 0, 1].map(|j| self.small_b(i, j)));
        }
        (bb, sb)
    }

    fn coeff_c_with(&self, nu: &[i32], bb: &[[[Expr; 3]; 3]], sb: &[[Expr; 3]]) -> Expr {
        let q = self.q;
        let full = |k: usize| if k == 0 || k == q + 1 { 0 } else { nu[k - 1] };
        let l1: usize = nu.iter().map(|v| v.unsigned_abs() as usize).sum();
        let two = Expr::int(1i64 << (q - l1));
        let num = product((0..=q).map(|k| bb[k][(full(k) + 1) as usize][(full(k + 1) + 1) as usize].clone()));
        let den = product((1..=q).map(|k| sb[k][(nu[k - 1] + 1) as usize].clone()));
        two * num / den
    }

    fn constant_k(&self) -> Expr {
        let q = self.q;
        self.lam(q + 1) + (&self.beta[0] + Expr::one()) * (&self.beta[q + 1] - Expr::one()) / Expr::int(2)
    }

    fn embed(&self, nu: &[i32]) -> Shift {
        let mut s = vec![0; self.arity];
        s[..self.q].copy_from_slice(nu);
        s
    }

    fn shift_form(&self) -> DiffOperator {
        let (bb, sb) = self.tables();
        let mut op = DiffOperator::zero(self.arity);
        for nu in cube(self.q) {
            op.add_term(self.embed(&nu), self.coeff_c_with(&nu, &bb, &sb));
        }
        op.add_term(vec![0; self.arity], -self.constant_k());
        op
    }

    /// `A_nu` for `nu` in `{0,1}^q`, nonzero.
    fn coeff_a_pos(&self, nu: &[i32]) -> Expr {
        let q = self.q;
        let idx: Vec<usize> = (1..=q).filter(|&i| nu[i - 1] != 0).collect();
        let (x, b) = (&self.x, &self.beta);
        let i1 = idx[0];
        let is = *idx.last().expect("nonzero");
        let mut num = (&x[i1] + &b[i1] - &b[0] + bump(self.mutation, Mutation::A)) * (&x[i1] + &b[i1]);
        for w in idx.windows(2) {
            let s = &x[w[1]] + &x[w[0]] + &b[w[1]];
            num = num * &s * (&s + Expr::one());
        }
        let den = product(idx.iter().map(|&i| {
            let t = Expr::int(2) * &x[i] + &b[i];
            &t * &(&t + Expr::one())
        }));
        let n = &x[q + 1];
        num * (&x[is] + &b[q + 1] + n) * (n - &x[is]) / den
    }

    fn coeff_a(&self, nu: &[i32]) -> Expr {
        let abs: Vec<i32> = nu.iter().map(|v| v.abs()).collect();
        let mut e = self.coeff_a_pos(&abs);
        for i in 1..=self.q {
            if nu[i - 1] < 0 {
                e = self.inv(i, &e);
            }
        }
        e
    }

    fn difference_form(&self) -> DiffOperator {
        let mut op = DiffOperator::zero(self.arity);
        for nu in cube(self.q) {
            if nu.iter().all(|&v| v == 0) {
                continue;
            }
            let neg = nu.iter().filter(|&&v| v < 0).count();
            let sign = if neg % 2 == 0 { 1 } else { -1 };
            let mut d = DiffOperator::identity(self.arity);
            for i in 0..self.q {
                match nu[i] {
                    1 => d = d.compose(&DiffOperator::delta(self.arity, i)),
                    -1 => d = d.compose(&DiffOperator::nabla(self.arity, i)),
                    _ => {}
                }
            }
            let a = Expr::int(sign) * self.coeff_a(&nu);
            op = op.add(&d.scale_left(&a));
        }
        op
    }
}

/// All of `{-1,0,1}^q` in lexicographic order.
pub fn cube(q: usize) -> Vec<Shift> {
    let mut out = vec![Vec::new()];
    for _ in 0..q {
        out = out
            .into_iter()
            .flat_map(|v| {
                [-1, 0, 1].map(move |s| {
                    let mut w = v.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    out
}

/// Which written form of the operator to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    /// Sum of `A_nu` times products of forward and backward differences.
    Triangle,
    /// Sum of `C_nu E^nu` minus a constant.
    Shift,
}

/// Symbolic builder for the operators of dimension `p`.
#[derive(Clone, Copy, Debug)]
pub struct RacahSystem {
    p: usize,
    mutation: Option<Mutation>,
}

impl RacahSystem {
    pub fn new(p: usize) -> Self {
        assert!(p >= 1, "dimension must be positive");
        RacahSystem { p, mutation: None }
    }

    pub fn with_mutation(mut self, m: Option<Mutation>) -> Self {
        self.mutation = m;
        self
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn mutation(&self) -> Option<Mutation> {
        self.mutation
    }

    fn frame(&self, j: usize) -> Frame {
        let p = self.p;
        assert!((1..=p).contains(&j));
        let mut x = vec![Expr::zero()];
        x.extend((0..j).map(Expr::var));
        x.push(if j < p { Expr::var(j) } else { Expr::param(n_slot(p)) });
        let beta = (0..=j + 1).map(Expr::param).collect();
        Frame { q: j, arity: p, x, beta, mutation: self.mutation }
    }

    /// The full operator `L_p` in the requested form.
    pub fn lp(&self, form: Form) -> DiffOperator {
        self.lx_form(self.p, form)
    }

    /// `L^x_j`: the operator of dimension `j` acting on `x_1..x_j`, with
    /// parameters `beta_0..beta_{j+1}` and `x_{j+1}` (or `N` when `j = p`)
    /// in the place of `N`.
    pub fn lx(&self, j: usize) -> DiffOperator {
        self.lx_form(j, Form::Shift)
    }

    pub fn lx_form(&self, j: usize, form: Form) -> DiffOperator {
        let f = self.frame(j);
        match form {
            Form::Shift => f.shift_form(),
            Form::Triangle => f.difference_form(),
        }
    }

    /// Shift-form coefficient `C_nu` of `L_p`, `nu` in `{-1,0,1}^p`.
    pub fn coeff_c(&self, nu: &[i32]) -> Expr {
        let f = self.frame(self.p);
        let (bb, sb) = f.tables();
        f.coeff_c_with(nu, &bb, &sb)
    }

    /// Difference-form coefficient `A_nu` of `L_p`, `nu` nonzero.
    pub fn coeff_a(&self, nu: &[i32]) -> Expr {
        self.frame(self.p).coeff_a(nu)
    }

    /// `B_i^{j,k}` of `L_p`.
    pub fn coeff_big_b(&self, i: usize, j: i32, k: i32) -> Expr {
        self.frame(self.p).big_b(i, j, k)
    }

    /// `b_i^j` of `L_p`, `1 <= i <= p`.
    pub fn coeff_small_b(&self, i: usize, j: i32) -> Expr {
        self.frame(self.p).small_b(i, j)
    }

    /// `lambda_i = x_i (x_i + beta_i)`, `1 <= i <= p`.
    pub fn lambda(&self, i: usize) -> Expr {
        self.frame(self.p).lam(i)
    }

    /// Apply the involution `I_i` (1-based) to an operator of this system.
    pub fn involution(&self, op: &DiffOperator, i: usize) -> DiffOperator {
        op.involution(i - 1, &Expr::param(i))
    }

    /// Replace `N` by `-N - beta_{p+1}`.
    pub fn flip_n(&self, op: &DiffOperator) -> DiffOperator {
        let p = self.p;
        let img = -Expr::param(n_slot(p)) - Expr::param(p + 1);
        op.subst(&|l| match l {
            Leaf::Param(s) if s == n_slot(p) => Some(img.clone()),
            _ => None,
        })
    }
}

/// `N_1^j = n_1 + ... + n_j`.
pub fn partial_sum(n: &[u32], j: usize) -> i64 {
    n[..j].iter().map(|&v| v as i64).sum()
}

/// Product formula for the Racah polynomial `R_p(n; x; beta; N)`.
pub fn racah_poly<F: Scalar>(n: &[u32], x: &[F], beta: &[F], big_n: &F) -> F {
    let p = n.len();
    debug_assert_eq!(x.len(), p);
    debug_assert_eq!(beta.len(), p + 2);
    let mut acc = F::one();
    for k in 1..=p {
        let nk1 = F::from_int(partial_sum(n, k - 1));
        let xk = &x[k - 1];
        let xk1 = if k < p { &x[k] } else { big_n };
        let two_nk1 = nk1.add(&nk1);
        let a = two_nk1.add(&beta[k]).sub(&beta[0]).add_int(-1);
        let b = beta[k + 1].sub(&beta[k]).add_int(-1);
        let c = nk1.sub(xk1).add_int(-1);
        let d = nk1.add(&beta[k]).add(xk1);
        let arg = xk.sub(&nk1);
        acc = acc.mul(&racah_r(n[k - 1], &a, &b, &c, &d, &arg));
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// Normalizer of [`racah_hat`]:
/// `(-N)_{|n|} (-N-beta_0)_{|n|} prod_k (beta_{k+1}-beta_k)_{n_k}`.
pub fn racah_hat_norm<F: Scalar>(n: &[u32], beta: &[F], big_n: &F) -> F {
    let tot: u32 = n.iter().sum();
    let mut d = pochhammer(&big_n.neg(), tot).mul(&pochhammer(&big_n.neg().sub(&beta[0]), tot));
    for k in 1..=n.len() {
        d = d.mul(&pochhammer(&beta[k + 1].sub(&beta[k]), n[k - 1]));
    }
    d
}

/// Normalized polynomial `R_p / racah_hat_norm`, symmetric under duality.
pub fn racah_hat<F: Scalar>(n: &[u32], x: &[F], beta: &[F], big_n: &F) -> Result<F> {
    let d = racah_hat_norm(n, beta, big_n);
    racah_poly(n, x, beta, big_n).div(&d).ok_or(Error::ZeroNormalization)
}

/// Eigenvalue of `L^x_j` on `R_p(n; .)`:
/// `-N_1^j (N_1^j - 1 + beta_{j+1} - beta_0)`.
pub fn mu<F: Scalar>(j: usize, n: &[u32], beta: &[F]) -> F {
    let s = F::from_int(partial_sum(n, j));
    s.mul(&s.add_int(-1).add(&beta[j + 1]).sub(&beta[0])).neg()
}

/// Leading eigenvalue of `L_p` on degree-`d` polynomials in `lambda`:
/// `-d (d - 1 + beta_{p+1} - beta_0)`.
pub fn triangular_eigenvalue(d: u32, beta: &[Rational]) -> Rational {
    let p1 = beta.len() - 1;
    let d = int(d as i64);
    -(&d * (&d - int(1) + &beta[p1] - &beta[0]))
}

/// Lattice `0 <= x_1 <= ... <= x_p <= N`.
pub fn lattice(p: usize, big_n: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..p {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let lo = v.last().copied().unwrap_or(0);
                (lo..=big_n).map(move |t| {
                    let mut w = v.clone();
                    w.push(t);
                    w
                })
            })
            .collect();
    }
    out
}

/// Whether an integer point lies in the lattice.
pub fn in_lattice(x: &[i64], big_n: i64) -> bool {
    let mut prev = 0;
    for &v in x {
        if v < prev {
            return false;
        }
        prev = v;
    }
    prev <= big_n
}

/// Orthogonality weight at a lattice point, with the Gamma functions
/// replaced by Pochhammer symbols (this drops an `x`-independent factor).
pub fn weight(x: &[i64], params: &RacahParams) -> Result<Rational> {
    let p = params.p();
    let big_n = params
        .n_integer()
        .ok_or_else(|| Error::InvalidParams("weight needs a nonnegative integer N".into()))?;
    if x.len() != p || !in_lattice(x, big_n) {
        return Err(Error::InvalidPoint("point outside the lattice".into()));
    }
    let b = &params.beta;
    let xs: Vec<i64> = core::iter::once(0).chain(x.iter().copied()).chain(core::iter::once(big_n)).collect();
    let mut w = int(1);
    for k in 0..=p {
        let d = (xs[k + 1] - xs[k]) as u32;
        let s = (xs[k + 1] + xs[k]) as u32;
        let num = pochhammer(&(&b[k + 1] - &b[k]), d) * pochhammer(&b[k + 1], s);
        let den = factorial(d) * pochhammer(&(&b[k] + int(1)), s);
        if Scalar::is_zero(&den) {
            return Err(Error::PoleInDenominator("weight denominator".into()));
        }
        w *= num / den;
    }
    for k in 1..=p {
        w *= &b[k] + int(2 * xs[k]);
    }
    Ok(w)
}

/// `sum over the lattice of f g rho`.
pub fn inner_product(
    params: &RacahParams,
    f: impl Fn(&[i64]) -> Result<Rational>,
    g: impl Fn(&[i64]) -> Result<Rational>,
) -> Result<Rational> {
    let big_n = params
        .n_integer()
        .ok_or_else(|| Error::InvalidParams("inner product needs a nonnegative integer N".into()))?;
    let mut acc = int(0);
    for x in lattice(params.p(), big_n) {
        acc += f(&x)? * g(&x)? * weight(&x, params)?;
    }
    Ok(acc)
}

/// Multi-indices `m` in `N_0^p` with `|m| <= d`, graded then lexicographic.
pub fn simplex(p: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for tot in 0..=d {
        let mut layer = vec![Vec::new()];
        for i in 0..p {
            layer = layer
                .into_iter()
                .flat_map(|v: Vec<u32>| {
                    let used: u32 = v.iter().sum();
                    let range: Vec<u32> = if i + 1 == p { vec![tot - used] } else { (0..=tot - used).collect() };
                    range.into_iter().map(move |t| {
                        let mut w = v.clone();
                        w.push(t);
                        w
                    })
                })
                .collect();
        }
        layer.sort_unstable_by(|a, b| b.cmp(a));
        out.extend(layer);
    }
    out
}

/// Determinant of `[prod_i C(2 m_i, nu_i)]` over `nu, m` with
/// `|nu|, |m| <= M`, by fraction-free elimination.
pub fn binomial_det(p: usize, big_m: u32) -> BigInt {
    let idx = simplex(p, big_m);
    let n = idx.len();
    let mut a: Vec<Vec<BigInt>> = idx
        .iter()
        .map(|nu| {
            idx.iter()
                .map(|m| {
                    nu.iter()
                        .zip(m)
                        .map(|(&v, &mm)| binomial(2 * mm as u64, v as u64))
                        .product()
                })
                .collect()
        })
        .collect();
    bareiss(&mut a, n)
}

fn bareiss(a: &mut [Vec<BigInt>], n: usize) -> BigInt {
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `2^{p C(M+p, p+1)}`.
pub fn binomial_det_expected(p: usize, big_m: u32) -> BigInt {
    let e = binomial(big_m as u64 + p as u64, p as u64 + 1);
    let e: u32 = e.try_into().expect("exponent fits");
    BigInt::from(2).pow(p as u32 * e)
}

/// `lambda(x)` for numeric `x`.
pub fn lambda_point(x: &[Rational], beta: &[Rational]) -> Vec<Rational> {
    x.iter().enumerate().map(|(i, xi)| xi * (xi + &beta[i + 1])).collect()
}

/// Half, for convenience in tests and callers.
pub fn half() -> Rational {
    rat(1, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_zero_operator, Env};

    #[test]
    fn cube_and_simplex() {
        assert_eq!(cube(2).len(), 9);
        assert_eq!(simplex(2, 2).len(), 6);
        assert_eq!(simplex(3, 2).len(), 10);
    }

    #[test]
    fn lattice_counts() {
        // C(N+p, p)
        assert_eq!(lattice(2, 3).len(), 10);
        assert_eq!(lattice(3, 2).len(), 10);
        assert!(in_lattice(&[0, 2, 2], 2));
        assert!(!in_lattice(&[1, 0], 2));
    }

    #[test]
    fn weight_hand_value() {
        // p=1, N=1, x=(0), beta=(0,1,3)
        let params = RacahParams::new(vec![int(0), int(1), int(3)], int(1)).unwrap();
        assert_eq!(weight(&[0], &params).unwrap(), int(3));
    }

    #[test]
    fn det_small() {
        assert_eq!(binomial_det(1, 2), BigInt::from(8));
        assert_eq!(binomial_det_expected(1, 2), BigInt::from(8));
        assert_eq!(binomial_det(2, 2), binomial_det_expected(2, 2));
    }

    #[test]
    fn p1_forms_agree() {
        let sys = RacahSystem::new(1);
        let d = sys.lp(Form::Triangle).sub(&sys.lp(Form::Shift));
        assert!(is_zero_operator(&d, 8, 11).unwrap());
        assert_eq!(sys.lp(Form::Shift).len(), 3);
    }

    #[test]
    fn p1_spectral() {
        let sys = RacahSystem::new(1);
        let op = sys.lx(1);
        let beta = vec![rat(1, 3), rat(2, 7), rat(-5, 11)];
        let big_n = rat(13, 5);
        let mut slots = beta.clone();
        slots.push(big_n.clone());
        for n in 0..4u32 {
            let x = [rat(7, 9)];
            let env = Env::new(&x[..], &slots[..]);
            let lhs = op
                .apply(&env, |pt| Ok(racah_poly(&[n], pt, &beta, &big_n)))
                .unwrap();
            let rhs = mu(1, &[n], &beta) * racah_poly(&[n], &x, &beta, &big_n);
            assert_eq!(lhs, rhs, "n = {}", n);
        }
    }

    #[test]
    fn generic_sampling() {
        let mut s = Sampler::new(5);
        let p = RacahParams::generic(2, &mut s, Some(3));
        assert!(p.is_generic());
        assert_eq!(p.n_integer(), Some(3));
    }
}

#[cfg(test)]
mod higher {
    use super::*;
    use crate::algebra::{is_zero_operator, Env};

    #[test]
    fn p2_p3_forms_and_spectra() {
        for p in 2..=3usize {
            let sys = RacahSystem::new(p);
            let d = sys.lp(Form::Triangle).sub(&sys.lp(Form::Shift));
            assert!(is_zero_operator(&d, 6, 3).unwrap(), "forms p={}", p);
            let mut s = Sampler::new(9);
            let params = RacahParams::generic(p, &mut s, None);
            let slots = params.slots();
            let x = s.rationals(p);
            for j in 1..=p {
                let op = sys.lx(j);
                for n in simplex(p, 2) {
                    let env = Env::new(&x[..], &slots[..]);
                    let lhs = op.apply(&env, |pt| Ok(racah_poly(&n, pt, &params.beta, &params.n))).unwrap();
                    let rhs = mu(j, &n, &params.beta) * racah_poly(&n, &x, &params.beta, &params.n);
                    assert_eq!(lhs, rhs, "p={} j={} n={:?}", p, j, n);
                }
            }
        }
    }

    #[test]
    fn p2_orthogonal() {
        let mut s = Sampler::new(4);
        let params = RacahParams::generic(2, &mut s, Some(2));
        let idx = simplex(2, 2);
        for a in &idx {
            for b in &idx {
                let f = |x: &[i64]| {
                    let xr: Vec<Rational> = x.iter().map(|&v| int(v)).collect();
                    Ok(racah_poly(a, &xr, &params.beta, &params.n))
                };
                let g = |x: &[i64]| {
                    let xr: Vec<Rational> = x.iter().map(|&v| int(v)).collect();
                    Ok(racah_poly(b, &xr, &params.beta, &params.n))
                };
                let ip = inner_product(&params, f, g).unwrap();
                assert_eq!(Scalar::is_zero(&ip), a != b, "{:?} {:?}", a, b);
            }
        }
    }
}
