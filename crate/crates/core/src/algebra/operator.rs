use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::expr::{Env, Expr, Leaf, LimitEval};
use super::sample::Sampler;
use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

/// Multi-index of a shift `E^nu = E_1^{nu_1} ... E_p^{nu_p}`.
pub type Shift = Vec<i32>;

/// Difference operator `sum_nu c_nu(x) E^nu` with symbolic coefficients.
///
/// Coefficients multiply from the left, so composition follows
/// `E^nu c(x) = c(x + nu) E^nu`. Structurally zero coefficients are never
/// stored.
#[derive(Clone, Debug)]
pub struct DiffOperator {
    arity: usize,
    terms: BTreeMap<Shift, Expr>,
}

impl DiffOperator {
    pub fn zero(arity: usize) -> Self {
        DiffOperator { arity, terms: BTreeMap::new() }
    }

    pub fn identity(arity: usize) -> Self {
        Self::multiplication(arity, Expr::one())
    }

    /// Multiplication by a function.
    pub fn multiplication(arity: usize, c: Expr) -> Self {
        let mut op = Self::zero(arity);
        op.add_term(vec![0; arity], c);
        op
    }

    /// The pure shift `E^nu`.
    pub fn shift(nu: Shift) -> Self {
        let mut op = Self::zero(nu.len());
        op.add_term(nu, Expr::one());
        op
    }

    /// `E_i - 1`.
    pub fn delta(arity: usize, i: usize) -> Self {
        let mut nu = vec![0; arity];
        nu[i] = 1;
        Self::shift(nu).sub(&Self::identity(arity))
    }

    /// `1 - E_i^{-1}`.
    pub fn nabla(arity: usize, i: usize) -> Self {
        let mut nu = vec![0; arity];
        nu[i] = -1;
        Self::identity(arity).sub(&Self::shift(nu))
    }

    pub fn from_terms<I: IntoIterator<Item = (Shift, Expr)>>(arity: usize, it: I) -> Self {
        let mut op = Self::zero(arity);
        for (nu, c) in it {
            op.add_term(nu, c);
        }
        op
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Add `c E^nu`, merging with an existing term.
    pub fn add_term(&mut self, nu: Shift, c: Expr) {
        assert_eq!(nu.len(), self.arity, "shift length must match arity");
        if c.is_const_zero() {
            return;
        }
        let merged = match self.terms.remove(&nu) {
            Some(old) => old + c,
            None => c,
        };
        if !merged.is_const_zero() {
            self.terms.insert(nu, merged);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Shift, &Expr)> {
        self.terms.iter()
    }

    pub fn coeff(&self, nu: &[i32]) -> Option<&Expr> {
        self.terms.get(nu)
    }

    /// Shifts with a stored coefficient.
    pub fn support(&self) -> Vec<Shift> {
        self.terms.keys().cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.arity, o.arity);
        let mut r = self.clone();
        for (nu, c) in &o.terms {
            r.add_term(nu.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// `f * self`.
    pub fn scale_left(&self, f: &Expr) -> Self {
        self.map_coeffs(|c| f * c)
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Expr) -> Expr) -> Self {
        Self::from_terms(self.arity, self.terms.iter().map(|(nu, c)| (nu.clone(), f(c))))
    }

    /// `self o other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut r = Self::zero(self.arity);
        for (nu, l) in &self.terms {
            for (mu, m) in &other.terms {
                let s: Shift = nu.iter().zip(mu).map(|(a, b)| a + b).collect();
                r.add_term(s, l * &m.shift_vars(nu));
            }
        }
        r
    }

    /// `[self, other] = self o other - other o self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    /// Substitute leaves in every coefficient.
    pub fn subst(&self, f: &dyn Fn(Leaf) -> Option<Expr>) -> Self {
        self.map_coeffs(|c| c.subst(f))
    }

    /// Involution `x_i -> -x_i - b`, which also flips `E_i -> E_i^{-1}`.
    pub fn involution(&self, i: usize, b: &Expr) -> Self {
        let img = -Expr::var(i) - b;
        let f = move |l: Leaf| match l {
            Leaf::Var(j) if j == i => Some(img.clone()),
            _ => None,
        };
        Self::from_terms(
            self.arity,
            self.terms.iter().map(|(nu, c)| {
                let mut s = nu.clone();
                s[i] = -s[i];
                (s, c.subst(&f))
            }),
        )
    }

    /// Rebuild with new shifts and coefficients, possibly of a new arity.
    pub fn remap(&self, arity: usize, mut f: impl FnMut(&Shift, &Expr) -> (Shift, Expr)) -> Self {
        Self::from_terms(arity, self.terms.iter().map(|(nu, c)| f(nu, c)))
    }

    /// Evaluate the coefficients at one point.
    pub fn coeff_values<F: LimitEval>(&self, env: &Env<'_, F>) -> Result<Vec<(Shift, F)>> {
        self.terms
            .iter()
            .map(|(nu, c)| Ok((nu.clone(), c.eval(env)?)))
            .collect()
    }

    /// `(self f)(x) = sum_nu c_nu(x) f(x + nu)` at the point in `env`.
    pub fn apply<F: LimitEval>(
        &self,
        env: &Env<'_, F>,
        mut f: impl FnMut(&[F]) -> Result<F>,
    ) -> Result<F> {
        self.apply_guarded(env, |_| true, |p| f(p))
    }

    /// Like [`apply`](Self::apply) but fails with `BoundaryLeak` when a
    /// nonzero coefficient would read `f` outside `domain`.
    pub fn apply_guarded<F: LimitEval>(
        &self,
        env: &Env<'_, F>,
        domain: impl Fn(&[F]) -> bool,
        mut f: impl FnMut(&[F]) -> Result<F>,
    ) -> Result<F> {
        let mut acc = F::zero();
        for (nu, c) in &self.terms {
            let cv = c.eval(env)?;
            if cv.is_zero() {
                continue;
            }
            let pt = shifted(env.vars, nu);
            if !domain(&pt) {
                return Err(Error::BoundaryLeak(nu.clone()));
            }
            acc = acc.add(&cv.mul(&f(&pt)?));
        }
        Ok(acc)
    }

    fn max_slots(&self) -> (usize, usize) {
        let mut v = self.arity;
        let mut p = 0;
        for c in self.terms.values() {
            if let Some(m) = c.max_var() {
                v = v.max(m + 1);
            }
            if let Some(m) = c.max_param() {
                p = p.max(m + 1);
            }
        }
        (v, p)
    }
}

/// `vars + nu` on the leading coordinates.
pub fn shifted<F: Scalar>(vars: &[F], nu: &[i32]) -> Vec<F> {
    let mut pt = vars.to_vec();
    for (x, &s) in pt.iter_mut().zip(nu) {
        if s != 0 {
            *x = x.add_int(s as i64);
        }
    }
    pt
}

/// A point where an operator coefficient does not vanish.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroWitness {
    pub vars: Vec<Rational>,
    pub params: Vec<Rational>,
    pub shift: Shift,
    pub value: Rational,
}

/// Probabilistic zero test: evaluate every coefficient at `trials` seeded
/// random rational points (variables and parameters alike), skipping points
/// where some coefficient has a pole. Returns a nonzero witness if found.
///
/// A nonzero rational function of bounded degree vanishes at a random point
/// with probability at most degree / sample range, so a false "zero" after
/// `trials` independent draws has probability at most that ratio to the
/// power `trials`.
pub fn zero_witness(op: &DiffOperator, trials: usize, seed: u64) -> Result<Option<ZeroWitness>> {
    let (nv, np) = op.max_slots();
    let mut s = Sampler::new(seed);
    let mut ok = 0;
    let mut attempts = 0;
    while ok < trials {
        if attempts >= 10 * trials.max(1) {
            return Err(Error::AllPointsPoles(attempts));
        }
        attempts += 1;
        let vars = s.rationals(nv);
        let params = s.rationals(np);
        let env = Env::new(&vars, &params);
        match op.coeff_values(&env) {
            Ok(vals) => {
                if let Some((nu, v)) = vals.into_iter().find(|(_, v)| !Scalar::is_zero(v)) {
                    return Ok(Some(ZeroWitness { vars, params, shift: nu, value: v }));
                }
                ok += 1;
            }
            Err(Error::PoleAtPoint) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// See [`zero_witness`].
pub fn is_zero_operator(op: &DiffOperator, trials: usize, seed: u64) -> Result<bool> {
    zero_witness(op, trials, seed).map(|w| w.is_none())
}

/// Zero test for a single coefficient expression.
pub fn is_zero_expr(e: &Expr, arity: usize, trials: usize, seed: u64) -> Result<bool> {
    is_zero_operator(&DiffOperator::multiplication(arity, e.clone()), trials, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn shift_commutation() {
        // E_1 o x_1 = (x_1 + 1) E_1
        let e1 = DiffOperator::shift(vec![1, 0]);
        let x1 = DiffOperator::multiplication(2, Expr::var(0));
        let lhs = e1.compose(&x1);
        let rhs = DiffOperator::from_terms(2, [(vec![1, 0], Expr::var(0) + Expr::one())]);
        assert!(is_zero_operator(&lhs.sub(&rhs), 5, 1).unwrap());
        assert!(!is_zero_operator(&lhs.sub(&x1.compose(&e1)), 5, 1).unwrap());
    }

    #[test]
    fn delta_nabla() {
        // Delta o Nabla = E - 2 + E^{-1}
        let d = DiffOperator::delta(1, 0).compose(&DiffOperator::nabla(1, 0));
        assert_eq!(d.coeff(&[1]).unwrap().as_const(), Some(&int(1)));
        assert_eq!(d.coeff(&[0]).unwrap().as_const(), Some(&int(-2)));
        assert_eq!(d.coeff(&[-1]).unwrap().as_const(), Some(&int(1)));
    }

    #[test]
    fn apply_and_leak() {
        let op = DiffOperator::from_terms(1, [(vec![1], Expr::var(0)), (vec![-1], Expr::var(0))]);
        let zero = [int(0)];
        let env = Env::new(&zero[..], &[][..]);
        // at x = 0 both coefficients vanish
        let f = |p: &[Rational]| Ok(p[0].clone() * int(3));
        assert_eq!(op.apply(&env, f).unwrap(), int(0));
        let pt = [int(2)];
        let env1 = Env::new(&pt[..], &[][..]);
        let r = op.apply_guarded(&env1, |p| p[0] <= int(2), f);
        assert_eq!(r, Err(Error::BoundaryLeak(vec![1])));
        let half = [rat(1, 2)];
        let val = op.apply(&Env::new(&half[..], &[][..]), f).unwrap();
        assert_eq!(val, rat(1, 2) * (rat(9, 2) + rat(-3, 2)));
    }

    #[test]
    fn involution_twice_is_identity() {
        let b = Expr::param(0);
        let op = DiffOperator::from_terms(1, [(vec![1], Expr::var(0) * Expr::var(0) + &b)]);
        let twice = op.involution(0, &b).involution(0, &b);
        assert!(is_zero_operator(&twice.sub(&op), 5, 3).unwrap());
    }

    #[test]
    fn poles_everywhere() {
        let op = DiffOperator::multiplication(1, Expr::one() / Expr::zero());
        assert!(matches!(is_zero_operator(&op, 3, 0), Err(Error::AllPointsPoles(_))));
    }
}
