use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops;

use crate::error::{Error, Result};
use crate::scalar::{
    limit_coeff_at_infinity, GaussianRational, RatFun, RatFun2, Rational, Scalar, UniRatFun,
};

/// Symbolic rational function of numbered variables and parameters.
///
/// Trees are shared and immutable. Construction folds constants and the
/// trivial identities with 0 and 1, nothing more; equality of values is
/// decided by evaluation, see [`crate::algebra::is_zero_operator`].
#[derive(Clone)]
pub struct Expr(Arc<Node>);

#[derive(Debug)]
pub enum Node {
    Const(Rational),
    Var(usize),
    Param(usize),
    Add(Expr, Expr),
    Mul(Expr, Expr),
    Div(Expr, Expr),
    Neg(Expr),
    /// `lim body / t^order` as parameter slot `param` (bound here) goes to
    /// infinity.
    Limit { body: Expr, param: usize, order: i32 },
}

/// A leaf that substitution can replace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Leaf {
    Var(usize),
    Param(usize),
}

/// Values for variables and parameter slots.
#[derive(Clone, Copy, Debug)]
pub struct Env<'a, F> {
    pub vars: &'a [F],
    pub params: &'a [F],
}

impl<'a, F> Env<'a, F> {
    pub fn new(vars: &'a [F], params: &'a [F]) -> Self {
        Env { vars, params }
    }
}

/// Display names for variables and parameters.
#[derive(Clone, Debug, Default)]
pub struct Signature {
    pub vars: Vec<String>,
    pub params: Vec<String>,
}

impl Signature {
    pub fn new(vars: Vec<String>, params: Vec<String>) -> Self {
        Signature { vars, params }
    }
}

/// Scalars that know how to evaluate [`Node::Limit`]. The limit parameter
/// becomes the indeterminate of a rational function field over `Self`.
pub trait LimitEval: Scalar {
    fn eval_limit(body: &Expr, env: &Env<'_, Self>, param: usize, order: i32) -> Result<Self> {
        let _ = (body, env, param, order);
        Err(Error::Unsupported("limits over this scalar type"))
    }
}

fn limit_via<K: Scalar>(body: &Expr, env: &Env<'_, K>, param: usize, order: i32) -> Result<K>
where
    UniRatFun<K>: LimitEval,
{
    let lift = |v: &[K]| v.iter().cloned().map(UniRatFun::constant).collect::<Vec<_>>();
    let vars = lift(env.vars);
    let mut params = lift(env.params);
    if params.len() <= param {
        params.resize(param + 1, UniRatFun::zero());
    }
    params[param] = UniRatFun::t();
    let f = body.eval(&Env::new(&vars, &params))?;
    limit_coeff_at_infinity(&f, order)
}

impl LimitEval for Rational {
    fn eval_limit(body: &Expr, env: &Env<'_, Self>, param: usize, order: i32) -> Result<Self> {
        limit_via(body, env, param, order)
    }
}

impl LimitEval for RatFun {
    fn eval_limit(body: &Expr, env: &Env<'_, Self>, param: usize, order: i32) -> Result<Self> {
        limit_via(body, env, param, order)
    }
}

impl LimitEval for RatFun2 {}
impl LimitEval for GaussianRational {}

impl Expr {
    fn node(n: Node) -> Self {
        Expr(Arc::new(n))
    }

    pub fn constant(r: Rational) -> Self {
        Self::node(Node::Const(r))
    }

    pub fn int(i: i64) -> Self {
        Self::constant(crate::scalar::int(i))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn var(i: usize) -> Self {
        Self::node(Node::Var(i))
    }

    pub fn param(i: usize) -> Self {
        Self::node(Node::Param(i))
    }

    /// Limit node; see [`Node::Limit`].
    pub fn limit(body: Expr, param: usize, order: i32) -> Self {
        if let Node::Const(_) = body.kind() {
            if order == 0 {
                return body;
            }
        }
        Self::node(Node::Limit { body, param, order })
    }

    pub fn kind(&self) -> &Node {
        &self.0
    }

    pub fn as_const(&self) -> Option<&Rational> {
        match self.kind() {
            Node::Const(r) => Some(r),
            _ => None,
        }
    }

    /// Structurally the constant zero.
    pub fn is_const_zero(&self) -> bool {
        self.as_const().is_some_and(|r| Scalar::is_zero(r))
    }

    fn is_const(&self, i: i64) -> bool {
        self.as_const().is_some_and(|r| *r == crate::scalar::int(i))
    }

    pub fn ptr_eq(&self, o: &Expr) -> bool {
        Arc::ptr_eq(&self.0, &o.0)
    }

    fn key(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    fn shared(&self) -> bool {
        Arc::strong_count(&self.0) > 1
    }

    pub fn pow(&self, e: u32) -> Expr {
        let mut acc = Expr::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Product of `self + k` for `k` in `0..n`.
    pub fn rising(&self, n: u32) -> Expr {
        let mut acc = Expr::one();
        for k in 0..n {
            acc = &acc * &(self + &Expr::int(k as i64));
        }
        acc
    }

    /// Evaluate over any field that supports the limits present.
    pub fn eval<F: LimitEval>(&self, env: &Env<'_, F>) -> Result<F> {
        let mut memo = BTreeMap::new();
        self.eval_memo(env, &mut memo)
    }

    fn eval_memo<F: LimitEval>(&self, env: &Env<'_, F>, memo: &mut BTreeMap<usize, F>) -> Result<F> {
        let shared = self.shared();
        if shared {
            if let Some(v) = memo.get(&self.key()) {
                return Ok(v.clone());
            }
        }
        let v = match self.kind() {
            Node::Const(r) => F::from_rational(r),
            Node::Var(i) => env.vars.get(*i).cloned().ok_or(Error::Unbound(*i))?,
            Node::Param(i) => env.params.get(*i).cloned().ok_or(Error::Unbound(*i))?,
            Node::Add(a, b) => a.eval_memo(env, memo)?.add(&b.eval_memo(env, memo)?),
            Node::Mul(a, b) => {
                let x = a.eval_memo(env, memo)?;
                if x.is_zero() {
                    // still evaluate the other side so poles are reported
                    b.eval_memo(env, memo)?;
                    x
                } else {
                    x.mul(&b.eval_memo(env, memo)?)
                }
            }
            Node::Div(a, b) => {
                let x = a.eval_memo(env, memo)?;
                let y = b.eval_memo(env, memo)?;
                x.div(&y).ok_or(Error::PoleAtPoint)?
            }
            Node::Neg(a) => a.eval_memo(env, memo)?.neg(),
            Node::Limit { body, param, order } => F::eval_limit(body, env, *param, *order)?,
        };
        if shared {
            memo.insert(self.key(), v.clone());
        }
        Ok(v)
    }

    /// Simultaneously replace leaves. Parameters bound by a limit are left
    /// alone inside its body.
    pub fn subst(&self, f: &dyn Fn(Leaf) -> Option<Expr>) -> Expr {
        let mut memo = BTreeMap::new();
        self.subst_memo(f, &mut memo)
    }

    fn subst_memo(&self, f: &dyn Fn(Leaf) -> Option<Expr>, memo: &mut BTreeMap<usize, Expr>) -> Expr {
        let shared = self.shared();
        if shared {
            if let Some(v) = memo.get(&self.key()) {
                return v.clone();
            }
        }
        let out = match self.kind() {
            Node::Const(_) => self.clone(),
            Node::Var(i) => f(Leaf::Var(*i)).unwrap_or_else(|| self.clone()),
            Node::Param(i) => f(Leaf::Param(*i)).unwrap_or_else(|| self.clone()),
            Node::Add(a, b) => a.subst_memo(f, memo) + b.subst_memo(f, memo),
            Node::Mul(a, b) => a.subst_memo(f, memo) * b.subst_memo(f, memo),
            Node::Div(a, b) => a.subst_memo(f, memo) / b.subst_memo(f, memo),
            Node::Neg(a) => -a.subst_memo(f, memo),
            Node::Limit { body, param, order } => {
                let bound = *param;
                let g = move |l: Leaf| match l {
                    Leaf::Param(i) if i == bound => None,
                    _ => f(l),
                };
                Expr::limit(body.subst(&g), bound, *order)
            }
        };
        if shared {
            memo.insert(self.key(), out.clone());
        }
        out
    }

    /// Replace each variable `x_i` by `x_i + nu_i`.
    pub fn shift_vars(&self, nu: &[i32]) -> Expr {
        if nu.iter().all(|&v| v == 0) {
            return self.clone();
        }
        self.subst(&|l| match l {
            Leaf::Var(i) if nu.get(i).is_some_and(|&v| v != 0) => {
                Some(Expr::var(i) + Expr::int(nu[i] as i64))
            }
            _ => None,
        })
    }

    /// Largest variable index used, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.fold_leaves(&mut |l, acc: Option<usize>| match l {
            Leaf::Var(i) => Some(acc.map_or(i, |a| a.max(i))),
            _ => acc,
        }, None)
    }

    /// Largest parameter slot used, bound or free.
    pub fn max_param(&self) -> Option<usize> {
        self.fold_leaves(&mut |l, acc: Option<usize>| match l {
            Leaf::Param(i) => Some(acc.map_or(i, |a| a.max(i))),
            _ => acc,
        }, None)
    }

    fn fold_leaves<T>(&self, f: &mut dyn FnMut(Leaf, T) -> T, init: T) -> T {
        match self.kind() {
            Node::Const(_) => init,
            Node::Var(i) => f(Leaf::Var(*i), init),
            Node::Param(i) => f(Leaf::Param(*i), init),
            Node::Add(a, b) | Node::Mul(a, b) | Node::Div(a, b) => {
                let t = a.fold_leaves(f, init);
                b.fold_leaves(f, t)
            }
            Node::Neg(a) => a.fold_leaves(f, init),
            Node::Limit { body, param, .. } => {
                let t = f(Leaf::Param(*param), init);
                body.fold_leaves(f, t)
            }
        }
    }

    /// Parenthesized infix text using the names in `sig`.
    pub fn display_with<'a>(&'a self, sig: &'a Signature) -> impl fmt::Display + 'a {
        Named { e: self, sig: Some(sig) }
    }
}

struct Named<'a> {
    e: &'a Expr,
    sig: Option<&'a Signature>,
}

impl Named<'_> {
    fn write(&self, e: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |names: Option<&Vec<String>>, i: usize, dflt: &str, f: &mut fmt::Formatter<'_>| match names
            .and_then(|n| n.get(i))
        {
            Some(s) => write!(f, "{}", s),
            None => write!(f, "{}{}", dflt, i),
        };
        match e.kind() {
            Node::Const(r) => {
                if r.is_integer() && !num_traits::Signed::is_negative(r) {
                    write!(f, "{}", r)
                } else {
                    write!(f, "({})", r)
                }
            }
            Node::Var(i) => name(self.sig.map(|s| &s.vars), *i, "x", f),
            Node::Param(i) => name(self.sig.map(|s| &s.params), *i, "p", f),
            Node::Add(a, b) => self.bin(a, " + ", b, f),
            Node::Mul(a, b) => self.bin(a, " * ", b, f),
            Node::Div(a, b) => self.bin(a, " / ", b, f),
            Node::Neg(a) => {
                write!(f, "(-")?;
                self.write(a, f)?;
                write!(f, ")")
            }
            Node::Limit { body, param, order } => {
                write!(f, "lim[")?;
                name(self.sig.map(|s| &s.params), *param, "p", f)?;
                write!(f, "->inf, order {}](", order)?;
                self.write(body, f)?;
                write!(f, ")")
            }
        }
    }

    fn bin(&self, a: &Expr, op: &str, b: &Expr, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        self.write(a, f)?;
        write!(f, "{}", op)?;
        self.write(b, f)?;
        write!(f, ")")
    }
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(self.e, f)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Named { e: self, sig: None }.fmt(f)
    }
}

impl fmt::Debug for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn add(a: &Expr, b: &Expr) -> Expr {
    if let (Some(x), Some(y)) = (a.as_const(), b.as_const()) {
        return Expr::constant(x + y);
    }
    if a.is_const_zero() {
        return b.clone();
    }
    if b.is_const_zero() {
        return a.clone();
    }
    Expr::node(Node::Add(a.clone(), b.clone()))
}

fn mul(a: &Expr, b: &Expr) -> Expr {
    if let (Some(x), Some(y)) = (a.as_const(), b.as_const()) {
        return Expr::constant(x * y);
    }
    if a.is_const_zero() || b.is_const_zero() {
        return Expr::zero();
    }
    if a.is_const(1) {
        return b.clone();
    }
    if b.is_const(1) {
        return a.clone();
    }
    if a.is_const(-1) {
        return neg(b);
    }
    if b.is_const(-1) {
        return neg(a);
    }
    Expr::node(Node::Mul(a.clone(), b.clone()))
}

fn div(a: &Expr, b: &Expr) -> Expr {
    if let (Some(x), Some(y)) = (a.as_const(), b.as_const()) {
        if !Scalar::is_zero(y) {
            return Expr::constant(x / y);
        }
    }
    if b.is_const(1) {
        return a.clone();
    }
    if a.is_const_zero() && !b.is_const_zero() {
        return Expr::zero();
    }
    Expr::node(Node::Div(a.clone(), b.clone()))
}

fn neg(a: &Expr) -> Expr {
    match a.kind() {
        Node::Const(x) => Expr::constant(-x),
        Node::Neg(inner) => inner.clone(),
        _ => Expr::node(Node::Neg(a.clone())),
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl ops::$tr<&Expr> for &Expr {
            type Output = Expr;
            fn $m(self, o: &Expr) -> Expr {
                $f(self, o)
            }
        }
        impl ops::$tr<Expr> for Expr {
            type Output = Expr;
            fn $m(self, o: Expr) -> Expr {
                $f(&self, &o)
            }
        }
        impl ops::$tr<&Expr> for Expr {
            type Output = Expr;
            fn $m(self, o: &Expr) -> Expr {
                $f(&self, o)
            }
        }
        impl ops::$tr<Expr> for &Expr {
            type Output = Expr;
            fn $m(self, o: Expr) -> Expr {
                $f(self, &o)
            }
        }
    };
}

binop!(Add, add, add);
binop!(Mul, mul, mul);
binop!(Div, div, div);
binop!(Sub, sub, |a: &Expr, b: &Expr| add(a, &neg(b)));

impl ops::Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        neg(&self)
    }
}

impl ops::Neg for &Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        neg(self)
    }
}

impl From<i64> for Expr {
    fn from(i: i64) -> Expr {
        Expr::int(i)
    }
}

impl From<Rational> for Expr {
    fn from(r: Rational) -> Expr {
        Expr::constant(r)
    }
}

/// Sum of an iterator of expressions.
pub fn sum<I: IntoIterator<Item = Expr>>(it: I) -> Expr {
    it.into_iter().fold(Expr::zero(), |a, b| a + b)
}

/// Product of an iterator of expressions.
pub fn product<I: IntoIterator<Item = Expr>>(it: I) -> Expr {
    it.into_iter().fold(Expr::one(), |a, b| a * b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn folding() {
        let x = Expr::var(0);
        assert!((&x * &Expr::zero()).is_const_zero());
        assert!((Expr::int(2) + Expr::int(3)).as_const() == Some(&int(5)));
        assert!((&x * &Expr::one()).ptr_eq(&x));
        assert!((-(-x.clone())).ptr_eq(&x));
    }

    #[test]
    fn eval_and_pole() {
        let x = Expr::var(0);
        let b = Expr::param(0);
        let e = (&x + &b) / (&x - Expr::int(2));
        let v = e.eval(&Env::new(&[rat(1, 2)], &[int(3)])).unwrap();
        assert_eq!(v, rat(7, 2) / rat(-3, 2));
        assert_eq!(e.eval(&Env::new(&[int(2)], &[int(3)])), Err(Error::PoleAtPoint));
    }

    #[test]
    fn limit_node() {
        // (b^2 x + 1)/(b + 3) ~ x b as b -> inf
        let x = Expr::var(0);
        let b = Expr::param(0);
        let body = (&b * &b * &x + Expr::one()) / (&b + Expr::int(3));
        let e = Expr::limit(body.clone(), 0, 1);
        assert_eq!(e.eval(&Env::new(&[rat(5, 3)], &[int(0)])).unwrap(), rat(5, 3));
        let e0 = Expr::limit(body, 0, 0);
        assert!(matches!(
            e0.eval(&Env::new(&[int(1)], &[int(0)])),
            Err(Error::DegreeOverflow { .. })
        ));
    }

    #[test]
    fn nested_limit() {
        // lim_N lim_b (b N^2 + b + N)/(b N) / N = 1
        let b = Expr::param(0);
        let n = Expr::param(1);
        let body = (&b * &n * &n + &b + &n) / (&b * &n);
        let inner = Expr::limit(body, 0, 0);
        let outer = Expr::limit(inner, 1, 1);
        assert_eq!(outer.eval(&Env::<Rational>::new(&[], &[int(0), int(0)])).unwrap(), int(1));
    }

    #[test]
    fn subst_respects_binding() {
        let b = Expr::param(0);
        let e = Expr::limit(&b * &Expr::param(1), 0, 1);
        let s = e.subst(&|l| match l {
            Leaf::Param(_) => Some(Expr::int(7)),
            _ => None,
        });
        assert_eq!(s.eval(&Env::<Rational>::new(&[], &[int(0), int(0)])).unwrap(), int(7));
    }

    #[test]
    fn shift_and_display() {
        let e = Expr::var(0) * Expr::param(1);
        let s = e.shift_vars(&[2]);
        let sig = Signature::new(vec!["x1".into()], vec!["b0".into(), "b1".into()]);
        assert_eq!(s.display_with(&sig).to_string(), "((x1 + 2) * b1)");
        assert_eq!((Expr::var(0) - Expr::int(1)).to_string(), "(x0 + (-1))");
    }
}
