//! Brute-force multiple-integral oracle: any polynomial in `s_1, ..., s_n`
//! integrated against the product measure `dmu(s_1) ... dmu(s_n)` is the
//! moment contraction of its monomials. Expanding the integrand as a sparse
//! multivariate polynomial keeps the whole evaluation in the rationals.

use num_traits::One;

use crate::error::{Error, Result};
use crate::measures::{MeasureSpec, NodeSet};
use crate::multipoly::MPoly;
use crate::rational::{factorial_rat, Rational};

/// Hard cap on the number of integration variables; the term count of the
/// expanded integrand grows too fast beyond this.
pub const SELBERG_VAR_CAP: usize = 4;

/// Exact value of
///
/// ```text
/// (1/n!) * integral over R^n of
///     prod_i prod_j (s_j - t_i)^{m_i}
///   * prod_{i<j} (s_i - s_j)^2
///   * [ prod_j (s_j - x)  if an extra point is given ]
///   dmu(s_1) ... dmu(s_n)
/// ```
///
/// computed by expanding the integrand and mapping each monomial
/// `prod_j s_j^{a_j}` to `prod_j mu_{a_j}`. The squared-difference product
/// runs over unordered pairs `i < j`.
pub fn selberg_integral(
    spec: &MeasureSpec,
    n: usize,
    nodes: &NodeSet,
    extra_x: Option<&Rational>,
) -> Result<Rational> {
    if n == 0 {
        return Ok(Rational::one());
    }
    if n > SELBERG_VAR_CAP {
        return Err(Error::InvalidArgument(format!(
            "integrand expansion is capped at {SELBERG_VAR_CAP} variables, got {n}"
        )));
    }
    let mut integrand = MPoly::constant(n, Rational::one());
    for (t, m) in nodes.entries() {
        for j in 0..n {
            integrand = integrand.mul(&MPoly::var_minus_const(n, j, t).pow(*m));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            integrand = integrand.mul(&MPoly::var_minus_var(n, i, j).pow(2));
        }
    }
    if let Some(x) = extra_x {
        for j in 0..n {
            integrand = integrand.mul(&MPoly::var_minus_const(n, j, x));
        }
    }
    let max_order = integrand
        .terms()
        .flat_map(|(e, _)| e.iter().copied())
        .max()
        .unwrap_or(0) as usize;
    let mu = spec.moments_upto(max_order)?;
    let mut acc = Rational::from_integer(0.into());
    for (exp, c) in integrand.terms() {
        let mut term = c.clone();
        for &e in exp {
            term *= &mu[e as usize];
        }
        acc += term;
    }
    Ok(acc / factorial_rat(n))
}
