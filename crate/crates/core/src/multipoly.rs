//! Sparse multivariate polynomials with a fixed, declared arity.
//!
//! Terms map an exponent vector (length = arity) to a non-zero coefficient.
//! These house the Selberg-type integrands and two-sided node identities
//! before evaluation; the variable count is known up front, so exponent
//! vectors are fixed-length rather than ragged.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::Coeff;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly<T> {
    arity: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Coeff> MPoly<T> {
    pub fn zero(arity: usize) -> Self {
        MPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: T) -> Self {
        let mut p = MPoly::zero(arity);
        if !c.is_zero() {
            p.terms.insert(vec![0; arity], c);
        }
        p
    }

    /// The variable `x_i`.
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(i < arity, "variable index out of range");
        let mut exp = vec![0; arity];
        exp[i] = 1;
        let mut p = MPoly::zero(arity);
        p.terms.insert(exp, T::one());
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &T)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum())
            .max()
            .unwrap_or(0)
    }

    fn insert_term(&mut self, exp: Vec<u32>, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let mut cur = o.get().clone();
                cur = cur + c;
                if cur.is_zero() {
                    o.remove();
                } else {
                    o.insert(cur);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MPoly {
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut out = MPoly::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_term(exp, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = MPoly::zero(self.arity);
        for (e, c) in &self.terms {
            out.insert_term(e.clone(), s.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = MPoly::constant(self.arity, T::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation by term summation.
    pub fn eval(&self, point: &[T]) -> Result<T> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: point.len(),
            });
        }
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    term = term * x.clone();
                }
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Quotient of an exact division, by repeated leading-term elimination in
    /// lexicographic order. Panics when the division is not exact; callers
    /// (fraction-free elimination) guarantee exactness.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        assert_eq!(self.arity, divisor.arity, "arity mismatch");
        let (dexp, dc) = divisor
            .terms
            .iter()
            .next_back()
            .expect("exact_div by zero polynomial");
        let mut rem = self.clone();
        let mut quot = MPoly::zero(self.arity);
        while let Some((rexp, rc)) = rem.terms.iter().next_back() {
            let qexp: Vec<u32> = rexp
                .iter()
                .zip(dexp)
                .map(|(r, d)| {
                    r.checked_sub(*d)
                        .expect("exact_div: leading term not divisible")
                })
                .collect();
            let qc = rc.clone() / dc.clone();
            let mut t = MPoly::zero(self.arity);
            t.insert_term(qexp, qc);
            rem = rem.sub(&t.mul(divisor));
            quot = quot.add(&t);
        }
        quot
    }
}

impl MPoly<Rational> {
    /// Linear factor `x_i - c`.
    pub fn var_minus_const(arity: usize, i: usize, c: &Rational) -> Self {
        MPoly::var(arity, i).sub(&MPoly::constant(arity, c.clone()))
    }

    /// Linear factor `x_i - x_j`.
    pub fn var_minus_var(arity: usize, i: usize, j: usize) -> Self {
        MPoly::var(arity, i).sub(&MPoly::var(arity, j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn eval_examples() {
        // x1*x2 - x2 at (2, 3) = 3
        let p = MPoly::var(2, 0)
            .mul(&MPoly::var(2, 1))
            .sub(&MPoly::var(2, 1));
        assert_eq!(p.eval(&[rat_int(2), rat_int(3)]).unwrap(), rat_int(3));
        assert!(p.eval(&[rat_int(1)]).is_err());
        assert_eq!(
            MPoly::<Rational>::zero(3)
                .eval(&[rat_int(1), rat(1, 2), rat_int(-4)])
                .unwrap(),
            rat_int(0)
        );
    }

    #[test]
    fn no_zero_coefficients_stored() {
        let p = MPoly::<Rational>::var(2, 0).sub(&MPoly::var(2, 0));
        assert!(p.is_zero());
        let q = MPoly::constant(2, rat_int(0));
        assert_eq!(q.num_terms(), 0);
    }

    #[test]
    fn exact_div_round_trip() {
        let a = MPoly::var_minus_const(2, 0, &rat(1, 2))
            .mul(&MPoly::var(2, 1))
            .add(&MPoly::constant(2, rat_int(3)));
        let b = MPoly::var_minus_var(2, 0, 1).pow(2);
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&b), a);
        assert_eq!(prod.exact_div(&a), b);
    }

    #[test]
    fn squared_difference_expansion() {
        // (x0 - x1)^2 = x0^2 - 2 x0 x1 + x1^2
        let p = MPoly::var_minus_var(2, 0, 1).pow(2);
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.total_degree(), 2);
        assert_eq!(p.eval(&[rat_int(3), rat_int(1)]).unwrap(), rat_int(4));
    }
}
