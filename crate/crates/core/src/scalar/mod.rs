//! Exact scalar fields: rationals, Gaussian rationals and univariate
//! rational functions over any of them.

mod gaussian;
mod poly;
mod ratfun;

use alloc::string::{String, ToString};
use core::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use gaussian::GaussianRational;
pub use poly::UniPoly;
pub use ratfun::UniRatFun;

use crate::error::{Error, Result};

/// Arbitrary precision rational numbers.
pub type Rational = num_rational::BigRational;

/// Rational functions in one indeterminate over the rationals.
pub type RatFun = UniRatFun<Rational>;

/// Rational functions in one indeterminate over `Q(s)`.
pub type RatFun2 = UniRatFun<UniRatFun<Rational>>;

/// A commutative field with exact arithmetic.
///
/// Method names shadow the `core::ops` traits on purpose; generic code calls
/// them by name and concrete code uses operators.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` at zero.
    fn inv(&self) -> Option<Self>;
    /// The value as a rational, when it is one.
    fn to_rational(&self) -> Option<Rational>;

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul(&r))
    }

    fn from_int(i: i64) -> Self {
        Self::from_rational(&int(i))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_int(&self, i: i64) -> Self {
        self.add(&Self::from_int(i))
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Integer as a rational.
pub fn int(i: i64) -> Rational {
    Rational::from_integer(BigInt::from(i))
}

/// `p/q` as a rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical text form: `p` or `p/q` with `q > 0`.
pub fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parse `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidPoint(s.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// `r` as an `i64`, if it is an integer in range.
pub fn to_i64(r: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

/// Whether `r` is a nonnegative integer.
pub fn is_nonneg_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

/// Rising factorial `(a)_n = a(a+1)...(a+n-1)`.
pub fn pochhammer<F: Scalar>(a: &F, n: u32) -> F {
    let mut acc = F::one();
    let mut t = a.clone();
    let one = F::one();
    for _ in 0..n {
        acc = acc.mul(&t);
        t = t.add(&one);
    }
    acc
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `lim f(t)/t^order` as `t` goes to infinity. Fails when `f` grows faster
/// than `t^order`.
pub fn limit_coeff_at_infinity<K: Scalar>(f: &UniRatFun<K>, order: i32) -> Result<K> {
    if f.is_zero() {
        return Ok(K::zero());
    }
    let deg = f.num().degree().unwrap_or(0) as i32 - f.den().degree().unwrap_or(0) as i32;
    if deg > order {
        return Err(Error::DegreeOverflow { order, found: deg });
    }
    if deg < order {
        return Ok(K::zero());
    }
    let lead = f.num().leading().cloned().unwrap_or_else(K::zero);
    let dlead = f.den().leading().cloned().unwrap_or_else(K::one);
    lead.div(&dlead).ok_or(Error::PoleAtPoint)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_small() {
        assert_eq!(pochhammer(&int(3), 4), int(3 * 4 * 5 * 6));
        assert_eq!(pochhammer(&int(-2), 3), int(0));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(pochhammer(&int(7), 0), int(1));
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "-3", "7/4", "-12/5"] {
            assert_eq!(fmt_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(4, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }
}
