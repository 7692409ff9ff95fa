use alloc::vec::Vec;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::Rational;

/// Largest numerator and denominator magnitude drawn by [`Sampler::rational`].
pub const SAMPLE_BOUND: i64 = 10_000;

/// Seeded source of random exact test points (ChaCha8 stream).
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// `±a/b` with `a, b` uniform in `1..=10^4`.
    pub fn rational(&mut self) -> Rational {
        self.rational_bounded(SAMPLE_BOUND)
    }

    /// `±a/b` with `a, b` uniform in `1..=bound`.
    pub fn rational_bounded(&mut self, bound: i64) -> Rational {
        let a = self.rng.gen_range(1..=bound);
        let b = self.rng.gen_range(1..=bound);
        let s = if self.rng.gen::<bool>() { 1 } else { -1 };
        Rational::new(BigInt::from(s * a), BigInt::from(b))
    }

    /// `a/b` with `a` uniform in `1..=bound` and `b` in `1..=bound`.
    pub fn positive_rational(&mut self, bound: i64) -> Rational {
        let a = self.rng.gen_range(1..=bound);
        let b = self.rng.gen_range(1..=bound);
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    pub fn rationals(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.rational()).collect()
    }

    /// Uniform integer in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.gen()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic() {
        let a = Sampler::new(42).rationals(5);
        let b = Sampler::new(42).rationals(5);
        assert_eq!(a, b);
        assert_ne!(a, Sampler::new(43).rationals(5));
    }
}
