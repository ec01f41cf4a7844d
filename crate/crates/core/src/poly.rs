//! Dense univariate polynomials over an exact coefficient ring.
//!
//! Coefficients are stored in ascending degree with no trailing zeros, so the
//! zero polynomial is the empty list, degree queries are O(1) and equality is
//! structural. The type is generic over the scalar; the crate works with
//! [`UniPoly`](crate::UniPoly) = `Poly<Rational>`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Coefficient scalar: a field with by-value arithmetic. Implemented for the
/// exact rational scalar and for `f64`; deliberately not blanket-implemented
/// so the candidate set stays closed.
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
}

impl Coeff for Rational {}
impl Coeff for f64 {}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Poly<T> {
    /// Build from ascending-degree coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: T) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial `c x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Poly { coeffs: vec![] };
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Exact `k`-th derivative.
    pub fn derivative(&self, k: usize) -> Self {
        let mut cur = self.clone();
        for _ in 0..k {
            if cur.coeffs.len() <= 1 {
                return Poly { coeffs: vec![] };
            }
            let mut next = Vec::with_capacity(cur.coeffs.len() - 1);
            let mut factor = T::zero();
            for c in cur.coeffs.iter().skip(1) {
                factor = factor + T::one();
                next.push(factor.clone() * c.clone());
            }
            cur = Poly::new(next);
        }
        cur
    }

    pub fn scale(&self, s: &T) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .map(|c| s.clone() * c.clone())
                .collect(),
        )
    }

    /// Substitute another polynomial for the variable.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Poly { coeffs: vec![] };
        for c in self.coeffs.iter().rev() {
            acc = &acc * inner;
            acc = &acc + &Poly::constant(c.clone());
        }
        acc
    }

    /// Quotient of an exact division; panics if the division leaves a
    /// remainder, which indicates a broken caller invariant.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        assert!(!divisor.coeffs.is_empty(), "exact_div by zero polynomial");
        if self.coeffs.is_empty() {
            return Poly { coeffs: vec![] };
        }
        let dl = divisor.coeffs.len() - 1;
        let dlead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        assert!(rem.len() > dl, "exact_div: dividend degree below divisor degree");
        let mut quot = vec![T::zero(); rem.len() - dl];
        for qi in (0..quot.len()).rev() {
            let lead = rem[qi + dl].clone();
            if lead.is_zero() {
                continue;
            }
            let q = lead / dlead.clone();
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[qi + j] = rem[qi + j].clone() - q.clone() * dc.clone();
            }
            quot[qi] = q;
        }
        assert!(rem.iter().all(|c| c.is_zero()), "exact_div: non-zero remainder");
        Poly::new(quot)
    }
}

impl<T: Coeff> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Coeff> One for Poly<T> {
    fn one() -> Self {
        Poly::constant(T::one())
    }
}

impl<T: Coeff> Add for Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: Poly<T>) -> Poly<T> {
        &self + &rhs
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            out[i] = out[i].clone() + c.clone();
        }
        Poly::new(out)
    }
}

impl<T: Coeff> Sub for Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: Poly<T>) -> Poly<T> {
        &self - &rhs
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        self + &(-rhs.clone())
    }
}

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<T: Coeff> Mul for Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: Poly<T>) -> Poly<T> {
        &self * &rhs
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly { coeffs: vec![] };
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl fmt::Debug for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Poly<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Evaluate a univariate polynomial at a point given as a one-element slice.
/// Mainly a uniform entry point shared with the multivariate evaluator.
pub fn poly_eval(p: &Poly<Rational>, point: &[Rational]) -> Result<Rational> {
    if point.len() != 1 {
        return Err(Error::ArityMismatch {
            expected: 1,
            got: point.len(),
        });
    }
    Ok(p.eval(&point[0]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn upoly(coeffs: &[(i64, i64)]) -> Poly<Rational> {
        Poly::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = Poly::new(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Poly::<Rational>::new(vec![rat_int(0)]).degree(), None);
    }

    #[test]
    fn derivative_power_rule() {
        // d/dx (x^2/2 - 1/4) = x
        let p = upoly(&[(-1, 4), (0, 1), (1, 2)]);
        assert_eq!(p.derivative(1), Poly::x());
        // k = 0 is the identity
        assert_eq!(p.derivative(0), p);
        // second derivative of x^3/4 - 3x/8 is 3x/2, checked against central
        // second differences of exact evaluations (exact for a cubic)
        let q = upoly(&[(0, 1), (-3, 8), (0, 1), (1, 4)]);
        let d2 = q.derivative(2);
        assert_eq!(d2, upoly(&[(0, 1), (3, 2)]));
        let h = rat(1, 5);
        for x0 in [rat_int(0), rat(1, 3), rat_int(-2)] {
            let fd = (q.eval(&(&x0 + &h)) - rat_int(2) * q.eval(&x0) + q.eval(&(&x0 - &h)))
                / (&h * &h);
            assert_eq!(fd, d2.eval(&x0));
        }
    }

    #[test]
    fn eval_cases() {
        let p = upoly(&[(-1, 4), (0, 1), (1, 2)]);
        assert_eq!(p.eval(&rat(1, 3)), rat(-7, 36));
        assert_eq!(Poly::<Rational>::zero().eval(&rat(9, 7)), rat_int(0));
        assert_eq!(poly_eval(&p, &[rat(1, 3)]).unwrap(), rat(-7, 36));
        assert!(poly_eval(&p, &[rat_int(1), rat_int(2)]).is_err());
    }

    #[test]
    fn mul_and_exact_div_round_trip() {
        let a = upoly(&[(1, 2), (0, 1), (3, 1)]);
        let b = upoly(&[(-1, 1), (2, 3)]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&b), a);
        assert_eq!(prod.exact_div(&a), b);
    }

    #[test]
    fn float_coefficients_also_work() {
        let p = Poly::new(vec![1.0f64, 0.0, 0.5]);
        assert_eq!(p.eval(&2.0), 3.0);
        assert_eq!(p.derivative(1).coeffs(), &[0.0, 1.0]);
    }

    #[test]
    fn compose_shifts() {
        // p(x+1) for p = x^2
        let p = Poly::monomial(rat_int(1), 2);
        let shifted = p.compose(&upoly(&[(1, 1), (1, 1)]));
        assert_eq!(shifted, upoly(&[(1, 1), (2, 1), (1, 1)]));
    }
}
