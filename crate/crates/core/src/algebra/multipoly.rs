use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::scalar::{int, Rational};

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_monomial(vec![0; nvars], c);
        p
    }

    /// The coordinate function `z_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_monomial(e, int(1));
        p
    }

    pub fn monomial(exps: Vec<u32>, c: Rational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_monomial(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_monomial(&mut self, exps: Vec<u32>, c: Rational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Largest total degree, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_monomial(e.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            r.add_monomial(e.clone(), c * k);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&int(-1)))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_monomial(e, c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::constant(self.nvars, int(1));
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    /// `d/dz_i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut r = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut e2 = e.clone();
                e2[i] -= 1;
                r.add_monomial(e2, c * int(e[i] as i64));
            }
        }
        r
    }

    pub fn eval(&self, pt: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in pt.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc += t;
        }
        acc
    }
}

/// Linear partial differential operator `sum_a c_a(z) d^a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialDiffOperator {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, MultiPoly>,
}

impl PartialDiffOperator {
    pub fn zero(nvars: usize) -> Self {
        PartialDiffOperator { nvars, terms: BTreeMap::new() }
    }

    /// Add `c d^a`.
    pub fn add_term(&mut self, a: Vec<u32>, c: MultiPoly) {
        let e = self.terms.entry(a.clone()).or_insert_with(|| MultiPoly::zero(self.nvars));
        *e = e.add(&c);
        if e.is_zero() {
            self.terms.remove(&a);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &[u32]) -> Option<&MultiPoly> {
        self.terms.get(a)
    }

    pub fn apply(&self, f: &MultiPoly) -> MultiPoly {
        let mut r = MultiPoly::zero(self.nvars);
        for (a, c) in &self.terms {
            let mut g = f.clone();
            for (i, &k) in a.iter().enumerate() {
                for _ in 0..k {
                    g = g.partial(i);
                }
            }
            r = r.add(&c.mul(&g));
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (a, c) in &o.terms {
            r.add_term(a.clone(), c.scale(&int(-1)));
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Polynomial through values on a tensor grid. `nodes[i]` are the distinct
/// nodes along axis `i`; `values` is indexed row-major with the last axis
/// fastest. Uses tensor Newton divided differences.
pub fn interpolate_tensor(nodes: &[Vec<Rational>], values: &[Rational]) -> MultiPoly {
    let dims: Vec<usize> = nodes.iter().map(|n| n.len()).collect();
    let total: usize = dims.iter().product();
    assert_eq!(values.len(), total, "grid size mismatch");
    let nv = dims.len();
    let mut c = values.to_vec();
    let mut strides = vec![1usize; nv];
    for i in (0..nv.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * dims[i + 1];
    }
    for axis in 0..nv {
        let m = dims[axis];
        let st = strides[axis];
        let t = &nodes[axis];
        for base in 0..total {
            if (base / st) % m != 0 {
                continue;
            }
            for j in 1..m {
                for i in (j..m).rev() {
                    let num = &c[base + i * st] - &c[base + (i - 1) * st];
                    c[base + i * st] = num / (&t[i] - &t[i - j]);
                }
            }
        }
    }
    // Newton basis polynomials per axis, ascending coefficients
    let basis: Vec<Vec<Vec<Rational>>> = nodes
        .iter()
        .map(|t| {
            let mut out = vec![vec![int(1)]];
            for k in 1..t.len() {
                let prev = &out[k - 1];
                let mut next = vec![Rational::zero(); prev.len() + 1];
                for (d, a) in prev.iter().enumerate() {
                    next[d + 1] += a;
                    next[d] -= a * &t[k - 1];
                }
                out.push(next);
            }
            out
        })
        .collect();
    let mut poly = MultiPoly::zero(nv);
    for (flat, coef) in c.iter().enumerate() {
        if coef.is_zero() {
            continue;
        }
        let idx: Vec<usize> = (0..nv).map(|i| (flat / strides[i]) % dims[i]).collect();
        let mut acc: Vec<(Vec<u32>, Rational)> = vec![(Vec::new(), coef.clone())];
        for (i, &k) in idx.iter().enumerate() {
            let b = &basis[i][k];
            let mut next = Vec::new();
            for (e, v) in &acc {
                for (d, a) in b.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let mut e2 = e.clone();
                    e2.push(d as u32);
                    next.push((e2, v * a));
                }
            }
            acc = next;
        }
        for (e, v) in acc {
            poly.add_monomial(e, v);
        }
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn product_rule() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let f = x.mul(&x).mul(&y).add(&y.scale(&rat(3, 2)));
        assert_eq!(f.total_degree(), Some(3));
        let fx = f.partial(0);
        assert_eq!(fx, x.mul(&y).scale(&int(2)));
        assert_eq!(f.eval(&[int(2), int(3)]), int(12) + rat(9, 2));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let f = x.mul(&y).sub(&y.pow(2).scale(&rat(2, 3))).add(&MultiPoly::constant(2, int(5)));
        let nodes = vec![vec![int(0), rat(1, 2), int(3)], vec![int(-1), int(2), int(4), rat(7, 3)]];
        let mut vals = Vec::new();
        for a in &nodes[0] {
            for b in &nodes[1] {
                vals.push(f.eval(&[a.clone(), b.clone()]));
            }
        }
        assert_eq!(interpolate_tensor(&nodes, &vals), f);
    }

    #[test]
    fn pde_apply() {
        // (z d/dz) z^3 = 3 z^3
        let mut op = PartialDiffOperator::zero(1);
        op.add_term(vec![1], MultiPoly::var(1, 0));
        let z3 = MultiPoly::var(1, 0).pow(3);
        assert_eq!(op.apply(&z3), z3.scale(&int(3)));
    }
}
