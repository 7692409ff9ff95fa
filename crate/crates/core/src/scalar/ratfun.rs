use super::{Rational, Scalar, UniPoly};

/// Reduced quotient of univariate polynomials with a monic denominator.
///
/// Canonical form makes equality structural, so zero testing is exact.
#[derive(Clone, PartialEq, Debug)]
pub struct UniRatFun<K> {
    num: UniPoly<K>,
    den: UniPoly<K>,
}

impl<K: Scalar> UniRatFun<K> {
    /// `num/den` in lowest terms. `None` when `den` is zero.
    pub fn new(num: UniPoly<K>, den: UniPoly<K>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::from_poly(UniPoly::zero()));
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let l = den.leading().expect("nonzero").inv().expect("nonzero");
        Some(UniRatFun { num: num.scale(&l), den: den.scale(&l) })
    }

    pub fn from_poly(p: UniPoly<K>) -> Self {
        UniRatFun { num: p, den: UniPoly::constant(K::one()) }
    }

    pub fn constant(c: K) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    /// The indeterminate.
    pub fn t() -> Self {
        Self::from_poly(UniPoly::t())
    }

    pub fn num(&self) -> &UniPoly<K> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<K> {
        &self.den
    }

    /// The value when the function is a constant.
    pub fn as_constant(&self) -> Option<K> {
        if self.den.degree() != Some(0) {
            return None;
        }
        match self.num.degree() {
            None => Some(K::zero()),
            Some(0) => Some(self.num.coeffs()[0].clone()),
            _ => None,
        }
    }

    /// Evaluate at `t = x`; `None` at a pole.
    pub fn eval(&self, x: &K) -> Option<K> {
        self.num.eval(x).div(&self.den.eval(x))
    }
}

impl<K: Scalar> Scalar for UniRatFun<K> {
    fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }
    fn one() -> Self {
        Self::constant(K::one())
    }
    fn from_rational(r: &Rational) -> Self {
        Self::constant(K::from_rational(r))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone()).expect("nonzero den");
        }
        let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Self::new(n, self.den.mul(&o.den)).expect("nonzero den")
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero den")
    }
    fn neg(&self) -> Self {
        UniRatFun { num: self.num.neg(), den: self.den.clone() }
    }
    fn inv(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
    fn to_rational(&self) -> Option<Rational> {
        self.as_constant()?.to_rational()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, limit_coeff_at_infinity, RatFun, RatFun2};
    use crate::error::Error;

    #[test]
    fn canonical_zero() {
        let t = RatFun::t();
        let a = t.add_int(1).inv().unwrap();
        let b = t.mul(&t).sub(&RatFun::one()).inv().unwrap().mul(&t.sub(&RatFun::one()));
        assert!(a.sub(&b).is_zero());
    }

    #[test]
    fn limits() {
        let t = RatFun::t();
        // (3t^2 + 1) / (t + 2)
        let f = t.mul(&t).mul(&RatFun::from_int(3)).add_int(1).div(&t.add_int(2)).unwrap();
        assert_eq!(limit_coeff_at_infinity(&f, 1).unwrap(), int(3));
        assert_eq!(limit_coeff_at_infinity(&f, 2).unwrap(), int(0));
        assert_eq!(
            limit_coeff_at_infinity(&f, 0),
            Err(Error::DegreeOverflow { order: 0, found: 1 })
        );
    }

    #[test]
    fn nested_field() {
        let s = RatFun2::constant(RatFun::t());
        let t = RatFun2::t();
        // (s t + 1)/(t - s) has leading coefficient s at infinity
        let f = s.mul(&t).add_int(1).div(&t.sub(&s)).unwrap();
        assert_eq!(limit_coeff_at_infinity(&f, 0).unwrap(), RatFun::t());
    }
}
