//! Polynomial families attached to a moment sequence: the orthogonal
//! polynomials themselves, the shifted-moment polynomials `q_n` and `r_{m,n}`
//! in their one- and several-node variants, Jensen polynomials of a Laplace
//! transform, and the classical Hermite / Laguerre / Gegenbauer families with
//! their rational closed forms for `q_n`.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::measures::{hankel_det_lower, MeasureSpec, NodeSet};
use crate::poly::Poly;
use crate::rational::{
    binomial, factorial_rat, neg_one_pow, pow_u, rat, rat_int, rising, Rational,
};

type UniPoly = Poly<Rational>;

/// Degree-`n` orthogonal polynomial, normalized so the leading coefficient is
/// `det M_{n-1}` (with `det M_{-1} = 1`, so `p_0 = 1`). Built as the bordered
/// moment determinant: moment rows `mu_i .. mu_{i+n}` topped off by the
/// symbolic row `1, x, ..., x^n`, expanded along that row.
pub fn orth_poly(spec: &MeasureSpec, n: usize) -> Result<UniPoly> {
    if n == 0 {
        return Ok(UniPoly::one());
    }
    let mu = spec.moments_upto(2 * n - 1)?;
    // minor_j = det of the moment block with column j removed
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let minor = SquareMatrix::from_fn(n, |r, c| {
            let col = if c < j { c } else { c + 1 };
            mu[r + col].clone()
        });
        coeffs.push(neg_one_pow(n + j) * minor.det());
    }
    // the x^n minor is det M_{n-1}; it vanishes exactly for degenerate specs
    if coeffs[n].is_zero() {
        return Err(Error::DegenerateMeasure { order: n - 1 });
    }
    Ok(UniPoly::new(coeffs))
}

/// Monic rescaling of [`orth_poly`].
pub fn orth_poly_monic(spec: &MeasureSpec, n: usize) -> Result<UniPoly> {
    let p = orth_poly(spec, n)?;
    let lead = p.leading_coeff().cloned().unwrap();
    Ok(p.scale(&(Rational::one() / lead)))
}

/// Squared L2 norm of [`orth_poly`]: `det M_{n-1} * det M_n`. The orthonormal
/// polynomial is `orth_poly / sqrt(norm_squared)`, which leaves the rationals,
/// so only the square is exposed.
pub fn orth_poly_norm_squared(spec: &MeasureSpec, n: usize) -> Result<Rational> {
    Ok(hankel_det_lower(spec, n)? * crate::measures::hankel_det(spec, n)?)
}

/// `q_n(x) = sum_k mu_k C(n,k) (-x)^{n-k}`, the n-th shifted moment
/// `integral of (t-x)^n dmu(t)`.
pub fn q_poly(spec: &MeasureSpec, n: usize) -> Result<UniPoly> {
    let mu = spec.moments_upto(n)?;
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (k, m) in mu.iter().enumerate() {
        // mu_k C(n,k) (-x)^{n-k} contributes to degree n-k
        coeffs[n - k] = m * binomial(n, k) * neg_one_pow(n - k);
    }
    Ok(UniPoly::new(coeffs))
}

/// `r_{m,n}(x) = sum_k mu_{n+k} C(m,k) (-x)^{m-k}`, the n-th moment of
/// `(t-x)^m dmu(t)`; degree `m` in `x`.
pub fn r_poly(spec: &MeasureSpec, m: usize, n: usize) -> Result<UniPoly> {
    let mu = spec.moments_upto(n + m)?;
    let mut coeffs = vec![Rational::zero(); m + 1];
    for k in 0..=m {
        coeffs[m - k] = &mu[n + k] * binomial(m, k) * neg_one_pow(m - k);
    }
    Ok(UniPoly::new(coeffs))
}

/// Several-node extension `q_n(t_1,...,t_m; x) = integral of
/// (t-x)^n (t-t_1)^{m_1} ... (t-t_r)^{m_r} dmu(t)` as a polynomial in `x`,
/// computed as `q_n` of the correspondingly modified measure.
pub fn q_nodes(spec: &MeasureSpec, nodes: &NodeSet, n: usize) -> Result<UniPoly> {
    if nodes.is_empty() {
        return q_poly(spec, n);
    }
    q_poly(&MeasureSpec::modified(spec.clone(), nodes.clone()), n)
}

/// `r_n(t_1,...,t_m) = integral of t^n (t-t_1)^{m_1} ... (t-t_r)^{m_r} dmu`,
/// the n-th moment of the modified measure.
pub fn r_value(spec: &MeasureSpec, nodes: &NodeSet, n: usize) -> Result<Rational> {
    if nodes.is_empty() {
        return spec.moment(n);
    }
    MeasureSpec::modified(spec.clone(), nodes.clone()).moment(n)
}

/// Maclaurin coefficients `gamma_k` of an entire function, the data the
/// Jensen polynomials are built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JensenSeq {
    gammas: Vec<Rational>,
}

impl JensenSeq {
    pub fn new(gammas: Vec<Rational>) -> Result<Self> {
        if gammas.is_empty() {
            return Err(Error::InvalidArgument(
                "Jensen sequence needs at least one coefficient".into(),
            ));
        }
        Ok(JensenSeq { gammas })
    }

    /// The Laplace-transform convention: `gamma_k = (-1)^k mu_k`.
    pub fn from_measure(spec: &MeasureSpec, upto: usize) -> Result<Self> {
        let mu = spec.moments_upto(upto)?;
        Ok(JensenSeq {
            gammas: mu
                .into_iter()
                .enumerate()
                .map(|(k, m)| neg_one_pow(k) * m)
                .collect(),
        })
    }

    pub fn gammas(&self) -> &[Rational] {
        &self.gammas
    }

    pub fn gamma(&self, k: usize) -> Result<&Rational> {
        self.gammas.get(k).ok_or(Error::InsufficientGammas {
            required: k,
            available: self.gammas.len() - 1,
        })
    }
}

/// Generalized Jensen polynomial `g_{n,k}(x) = sum_j C(n,j) gamma_{k+j} x^j`;
/// `k = 0` gives the plain Jensen polynomial `g_n`.
pub fn jensen(gs: &JensenSeq, n: usize, k: usize) -> Result<UniPoly> {
    gs.gamma(n + k)?;
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        coeffs.push(binomial(n, j) * gs.gamma(k + j)?.clone());
    }
    Ok(UniPoly::new(coeffs))
}

/// Both sides of the reversal identities tying Jensen polynomials of the
/// Laplace transform of `dmu` to the shifted-moment polynomials:
/// `g_n(x) = (-x)^n q_n(1/x)` and `g_{n,k}(x) = (-1)^{n+k} x^n r_{n,k}(1/x)`,
/// with the `1/x` cleared by coefficient reversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JensenBridge {
    pub g_n: UniPoly,
    pub q_side: UniPoly,
    pub g_nk: UniPoly,
    pub r_side: UniPoly,
}

impl JensenBridge {
    pub fn holds(&self) -> bool {
        self.g_n == self.q_side && self.g_nk == self.r_side
    }
}

pub fn jensen_qr_bridge(spec: &MeasureSpec, n: usize, k: usize) -> Result<JensenBridge> {
    let gs = JensenSeq::from_measure(spec, n + k)?;
    let g_n = jensen(&gs, n, 0)?;
    let q = q_poly(spec, n)?;
    // coefficient of x^j in (-x)^n q_n(1/x) is (-1)^n q_{n-j}
    let q_side = UniPoly::new((0..=n).map(|j| neg_one_pow(n) * q.coeff(n - j)).collect());
    let g_nk = jensen(&gs, n, k)?;
    let r = r_poly(spec, n, k)?;
    // coefficient of x^j in (-1)^{n+k} x^n r_{n,k}(1/x) is (-1)^{n+k} r_{n-j}
    let r_side = UniPoly::new(
        (0..=n)
            .map(|j| neg_one_pow(n + k) * r.coeff(n - j))
            .collect(),
    );
    Ok(JensenBridge {
        g_n,
        q_side,
        g_nk,
        r_side,
    })
}

/// A classical family together with its parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassicalFamily {
    Hermite,
    Laguerre { alpha: Rational },
    Gegenbauer { lambda: Rational },
}

impl ClassicalFamily {
    pub fn from_measure(spec: &MeasureSpec) -> Result<Self> {
        match spec {
            MeasureSpec::Hermite => Ok(ClassicalFamily::Hermite),
            MeasureSpec::Laguerre { alpha } => Ok(ClassicalFamily::Laguerre {
                alpha: alpha.clone(),
            }),
            MeasureSpec::Gegenbauer { lambda } => Ok(ClassicalFamily::Gegenbauer {
                lambda: lambda.clone(),
            }),
            other => Err(Error::UnsupportedParameter(format!(
                "`{other}` is not a classical family"
            ))),
        }
    }

    pub fn measure(&self) -> MeasureSpec {
        match self {
            ClassicalFamily::Hermite => MeasureSpec::Hermite,
            ClassicalFamily::Laguerre { alpha } => MeasureSpec::Laguerre {
                alpha: alpha.clone(),
            },
            ClassicalFamily::Gegenbauer { lambda } => MeasureSpec::Gegenbauer {
                lambda: lambda.clone(),
            },
        }
    }

    /// Leading coefficient of the classically normalized polynomial of
    /// degree n: `2^n` for Hermite, `(-1)^n/n!` for Laguerre,
    /// `(lambda)_n 2^n / n!` for Gegenbauer.
    pub fn leading_coeff(&self, n: usize) -> Rational {
        match self {
            ClassicalFamily::Hermite => pow_u(&rat_int(2), n),
            ClassicalFamily::Laguerre { .. } => neg_one_pow(n) / factorial_rat(n),
            ClassicalFamily::Gegenbauer { lambda } => {
                rising(lambda, n) * pow_u(&rat_int(2), n) / factorial_rat(n)
            }
        }
    }
}

fn is_nonpositive_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_positive()
}

/// Generalized Laguerre polynomial by its terminating sum,
/// `L_n^{(beta)}(x) = sum_j (-1)^j (beta+j+1)_{n-j} / ((n-j)! j!) x^j`,
/// well-defined for every rational `beta`.
fn laguerre_sum(beta: &Rational, n: usize) -> UniPoly {
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let num = rising(&(beta + rat_int(j as i64 + 1)), n - j);
        let den = factorial_rat(n - j) * factorial_rat(j);
        coeffs.push(neg_one_pow(j) * num / den);
    }
    UniPoly::new(coeffs)
}

/// Gegenbauer polynomial through its terminating hypergeometric form,
/// `C_n^{lambda}(x) = gamma_n x^n 2F1(-n/2, (1-n)/2; 1-n-lambda; 1/x^2)`
/// with `gamma_n = (lambda)_n 2^n / n!`. Fails when a Pochhammer factor
/// vanishes where it must not.
fn gegenbauer_sum(lambda: &Rational, n: usize) -> Result<UniPoly> {
    let gamma = rising(lambda, n) * pow_u(&rat_int(2), n) / factorial_rat(n);
    if n >= 1 && gamma.is_zero() {
        return Err(Error::UnsupportedParameter(format!(
            "Gegenbauer closed form degenerates: ({lambda})_{n} = 0"
        )));
    }
    let a = rat(-(n as i64), 2);
    let b = rat(1 - n as i64, 2);
    let c = rat_int(1 - n as i64) - lambda;
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in 0..=n / 2 {
        let den = rising(&c, k);
        if den.is_zero() {
            return Err(Error::UnsupportedParameter(format!(
                "Gegenbauer closed form degenerates: ({c})_{k} = 0"
            )));
        }
        let term = rising(&a, k) * rising(&b, k) / (den * factorial_rat(k));
        coeffs[n - 2 * k] = &gamma * term;
    }
    Ok(UniPoly::new(coeffs))
}

/// The classically normalized polynomial of the family: `H_n` (leading
/// `2^n`), `L_n^alpha` (leading `(-1)^n/n!`), or `C_n^lambda` (leading
/// `(lambda)_n 2^n/n!`).
pub fn classical_poly(family: &ClassicalFamily, n: usize) -> Result<UniPoly> {
    match family {
        ClassicalFamily::Hermite => {
            // H_n(x) = sum_k (-1)^k n!/(k!(n-2k)!) (2x)^{n-2k}
            let mut coeffs = vec![Rational::zero(); n + 1];
            for k in 0..=n / 2 {
                let c = neg_one_pow(k) * factorial_rat(n) * pow_u(&rat_int(2), n - 2 * k)
                    / (factorial_rat(k) * factorial_rat(n - 2 * k));
                coeffs[n - 2 * k] = c;
            }
            Ok(UniPoly::new(coeffs))
        }
        ClassicalFamily::Laguerre { alpha } => Ok(laguerre_sum(alpha, n)),
        ClassicalFamily::Gegenbauer { lambda } => {
            if is_nonpositive_integer(lambda) {
                return Err(Error::UnsupportedParameter(format!(
                    "Gegenbauer closed form requires lambda not in {{0, -1, -2, ...}}, got {lambda}"
                )));
            }
            gegenbauer_sum(lambda, n)
        }
    }
}

/// Closed form of `q_n` for a classical family, entirely in the rationals:
///
/// * Hermite: coefficient `c_k` of `H_n` maps to `c_k (-1)^{(n+k)/2} / 2^n`
///   (the parity of `H_n` keeps every surviving exponent index congruent to
///   `n`, so no complex arithmetic is needed);
/// * Laguerre: `(-1)^n n! L_n^{(-n-alpha-1)}(-x)`;
/// * Gegenbauer: `n!/(2^n (lambda+1)_n) C_n^{(-n-lambda)}(x)`.
pub fn classical_q_closed(family: &ClassicalFamily, n: usize) -> Result<UniPoly> {
    match family {
        ClassicalFamily::Hermite => {
            let h = classical_poly(family, n)?;
            let scale = pow_u(&rat_int(2), n);
            let mut coeffs = vec![Rational::zero(); n + 1];
            for (k, c) in h.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                // n + k is even whenever c_k is non-zero
                debug_assert!((n + k) % 2 == 0);
                coeffs[k] = c * neg_one_pow((n + k) / 2) / &scale;
            }
            Ok(UniPoly::new(coeffs))
        }
        ClassicalFamily::Laguerre { alpha } => {
            let beta = -rat_int(n as i64) - alpha - Rational::one();
            let l = laguerre_sum(&beta, n);
            // substitute -x and scale by (-1)^n n!
            let scale = neg_one_pow(n) * factorial_rat(n);
            let coeffs = l
                .coeffs()
                .iter()
                .enumerate()
                .map(|(j, c)| &scale * c * neg_one_pow(j))
                .collect();
            Ok(UniPoly::new(coeffs))
        }
        ClassicalFamily::Gegenbauer { lambda } => {
            if is_nonpositive_integer(lambda) {
                return Err(Error::UnsupportedParameter(format!(
                    "Gegenbauer closed form requires lambda not in {{0, -1, -2, ...}}, got {lambda}"
                )));
            }
            let param = -rat_int(n as i64) - lambda;
            let c = gegenbauer_sum(&param, n)?;
            let scale =
                factorial_rat(n) / (pow_u(&rat_int(2), n) * rising(&(lambda + Rational::one()), n));
            Ok(c.scale(&scale))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::hankel_det;
    use crate::rational::rat;

    fn hermite() -> MeasureSpec {
        MeasureSpec::Hermite
    }

    fn upoly(coeffs: &[(i64, i64)]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    /// Bordered-determinant oracle: the same determinant computed over
    /// polynomial entries instead of by cofactor expansion along the last row.
    fn orth_poly_oracle(spec: &MeasureSpec, n: usize) -> UniPoly {
        if n == 0 {
            return UniPoly::one();
        }
        let mu = spec.moments_upto(2 * n - 1).unwrap();
        let m = SquareMatrix::from_fn(n + 1, |i, j| {
            if i < n {
                UniPoly::constant(mu[i + j].clone())
            } else {
                UniPoly::monomial(Rational::one(), j)
            }
        });
        m.det()
    }

    #[test]
    fn orth_poly_small_cases() {
        assert_eq!(orth_poly(&hermite(), 0).unwrap(), UniPoly::one());
        assert_eq!(orth_poly(&hermite(), 1).unwrap(), UniPoly::x());
        assert_eq!(
            orth_poly(&hermite(), 2).unwrap(),
            upoly(&[(-1, 4), (0, 1), (1, 2)])
        );
        assert_eq!(
            orth_poly(&hermite(), 3).unwrap(),
            upoly(&[(0, 1), (-3, 8), (0, 1), (1, 4)])
        );
    }

    #[test]
    fn orth_poly_matches_polynomial_entry_oracle() {
        let specs = [
            hermite(),
            MeasureSpec::laguerre(rat_int(0)).unwrap(),
            MeasureSpec::laguerre(rat(3, 2)).unwrap(),
            MeasureSpec::gegenbauer(rat(1, 2)).unwrap(),
        ];
        for spec in &specs {
            for n in 0..=4 {
                assert_eq!(orth_poly(spec, n).unwrap(), orth_poly_oracle(spec, n));
            }
        }
    }

    #[test]
    fn orth_poly_leading_coeff_and_norm() {
        for n in 1..=5 {
            let p = orth_poly(&hermite(), n).unwrap();
            assert_eq!(p.degree(), Some(n));
            assert_eq!(
                p.leading_coeff().unwrap(),
                &hankel_det_lower(&hermite(), n).unwrap()
            );
        }
        // norm_squared = det M_{n-1} det M_n
        assert_eq!(
            orth_poly_norm_squared(&hermite(), 2).unwrap(),
            hankel_det(&hermite(), 1).unwrap() * hankel_det(&hermite(), 2).unwrap()
        );
        assert_eq!(
            orth_poly_monic(&hermite(), 3)
                .unwrap()
                .leading_coeff()
                .unwrap(),
            &Rational::one()
        );
    }

    #[test]
    fn orthogonality_against_monomials() {
        // contraction of p_n with t^j through the moments: zero for j < n,
        // det M_n at j = n
        let specs = [
            hermite(),
            MeasureSpec::laguerre(rat_int(0)).unwrap(),
            MeasureSpec::gegenbauer(rat(3, 2)).unwrap(),
        ];
        for spec in &specs {
            for n in 0..=4usize {
                let p = orth_poly(spec, n).unwrap();
                let mu = spec.moments_upto(2 * n).unwrap();
                for j in 0..=n {
                    let mut integral = Rational::zero();
                    for (i, c) in p.coeffs().iter().enumerate() {
                        integral += c * &mu[i + j];
                    }
                    if j < n {
                        assert!(integral.is_zero(), "{spec}: <p_{n}, t^{j}> != 0");
                    } else {
                        assert_eq!(integral, hankel_det(spec, n).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn degenerate_measure_rejected() {
        let e =
            MeasureSpec::explicit(vec![rat_int(1), rat_int(1), rat_int(1), rat_int(1)]).unwrap();
        // M_1 = [[1,1],[1,1]] is singular
        match orth_poly(&e, 2) {
            Err(Error::DegenerateMeasure { order: 1 }) => {}
            other => panic!("expected degeneracy error, got {other:?}"),
        }
    }

    #[test]
    fn q_poly_examples() {
        assert_eq!(q_poly(&hermite(), 1).unwrap(), upoly(&[(0, 1), (-1, 1)]));
        assert_eq!(
            q_poly(&hermite(), 2).unwrap(),
            upoly(&[(1, 2), (0, 1), (1, 1)])
        );
        assert_eq!(q_poly(&hermite(), 0).unwrap(), UniPoly::constant(rat_int(1)));
        // binomial expansion oracle at a sample point
        let x = rat(2, 3);
        for n in 0..=6 {
            let q = q_poly(&hermite(), n).unwrap();
            let mut expect = Rational::zero();
            for k in 0..=n {
                expect +=
                    hermite().moment(k).unwrap() * binomial(n, k) * pow_u(&-x.clone(), n - k);
            }
            assert_eq!(q.eval(&x), expect);
        }
    }

    #[test]
    fn r_poly_examples() {
        assert_eq!(r_poly(&hermite(), 1, 0).unwrap(), upoly(&[(0, 1), (-1, 1)]));
        assert_eq!(
            r_poly(&hermite(), 2, 0).unwrap(),
            upoly(&[(1, 2), (0, 1), (1, 1)])
        );
        // mu_4 - 2 mu_3 x + mu_2 x^2
        assert_eq!(
            r_poly(&hermite(), 2, 2).unwrap(),
            upoly(&[(3, 4), (0, 1), (1, 2)])
        );
    }

    #[test]
    fn q_nodes_examples() {
        let q = q_nodes(&hermite(), &NodeSet::simple(&[rat_int(0)]), 1).unwrap();
        assert_eq!(q, UniPoly::constant(rat(1, 2)));
        let q = q_nodes(&hermite(), &NodeSet::simple(&[rat_int(1)]), 1).unwrap();
        assert_eq!(q, upoly(&[(1, 2), (1, 1)]));
        assert_eq!(
            q_nodes(&hermite(), &NodeSet::empty(), 3).unwrap(),
            q_poly(&hermite(), 3).unwrap()
        );
    }

    #[test]
    fn q_nodes_recurrence() {
        // q_n(t_1,...,t_m; x) = q_{n+1}(t_1,...,t_{m-1}; x)
        //                       + (x - t_m) q_n(t_1,...,t_{m-1}; x)
        let nodes = [rat_int(0), rat(1, 2), rat_int(-1), rat_int(2)];
        for m in 1..=4usize {
            for n in 0..=(6 - m) {
                let full = NodeSet::simple(&nodes[..m]);
                let head = NodeSet::simple(&nodes[..m - 1]);
                let t_m = &nodes[m - 1];
                let lhs = q_nodes(&hermite(), &full, n).unwrap();
                let a = q_nodes(&hermite(), &head, n + 1).unwrap();
                let b = q_nodes(&hermite(), &head, n).unwrap();
                let shift = upoly(&[(0, 1), (1, 1)]) - UniPoly::constant(t_m.clone());
                let rhs = &a + &(&shift * &b);
                assert_eq!(lhs, rhs, "m = {m}, n = {n}");
            }
        }
    }

    #[test]
    fn q_nodes_collapse_to_shifted_q() {
        // with all nodes equal to x the several-node q collapses to q_{n+m}:
        // checked by evaluation at seven rational points
        let points: Vec<Rational> =
            [-3, -2, -1, 0, 1, 2, 3].iter().map(|&v| rat(v, 2)).collect();
        for m in 1..=3u32 {
            for n in 0..=(6 - m as usize) {
                for x in &points {
                    let nodes = NodeSet::new(vec![(x.clone(), m)]).unwrap();
                    let collapsed = q_nodes(&hermite(), &nodes, n).unwrap().eval(x);
                    let direct = q_poly(&hermite(), n + m as usize).unwrap().eval(x);
                    assert_eq!(collapsed, direct, "m = {m}, n = {n}, x = {x}");
                }
            }
        }
    }

    #[test]
    fn r_value_examples() {
        let nodes = NodeSet::simple(&[rat_int(0), rat_int(1), rat_int(2)]);
        assert_eq!(r_value(&hermite(), &nodes, 0).unwrap(), rat(-3, 2));
        let double_zero = NodeSet::new(vec![(rat_int(0), 2)]).unwrap();
        assert_eq!(r_value(&hermite(), &double_zero, 0).unwrap(), rat(1, 2));
        assert_eq!(r_value(&hermite(), &NodeSet::empty(), 4).unwrap(), rat(3, 4));
    }

    #[test]
    fn r_value_sigma_expansion() {
        // r_n = sum_k (-1)^k sigma_k(nodes repeated by multiplicity) mu_{n+m-k}
        let nodes = NodeSet::new(vec![(rat(1, 2), 2), (rat_int(-1), 1)]).unwrap();
        let reps = nodes.repeated();
        let m = reps.len();
        for n in 0..=4 {
            let mut expect = Rational::zero();
            for k in 0..=m {
                expect += neg_one_pow(k)
                    * crate::matrix::elem_sym(k, &reps).unwrap()
                    * hermite().moment(n + m - k).unwrap();
            }
            assert_eq!(r_value(&hermite(), &nodes, n).unwrap(), expect);
        }
    }

    #[test]
    fn jensen_polynomials() {
        let gs = JensenSeq::from_measure(&hermite(), 6).unwrap();
        // gamma = (1, 0, 1/2, 0, 3/4, ...): g_2 = 1 + x^2/2
        assert_eq!(jensen(&gs, 2, 0).unwrap(), upoly(&[(1, 1), (0, 1), (1, 2)]));
        // g_{1,1} = C(1,0) gamma_1 + C(1,1) gamma_2 x = x/2
        assert_eq!(jensen(&gs, 1, 1).unwrap(), upoly(&[(0, 1), (1, 2)]));
        // n = 0 is the constant gamma_k
        assert_eq!(jensen(&gs, 0, 4).unwrap(), UniPoly::constant(rat(3, 4)));
        assert!(matches!(
            jensen(&gs, 4, 3),
            Err(Error::InsufficientGammas { .. })
        ));
    }

    #[test]
    fn jensen_derivative_relation() {
        // g_n^{(j)} = n!/(n-j)! g_{n-j,j}
        let l = MeasureSpec::laguerre(rat(3, 2)).unwrap();
        let gs = JensenSeq::from_measure(&l, 8).unwrap();
        for n in 0..=5usize {
            let g_n = jensen(&gs, n, 0).unwrap();
            for j in 0..=n {
                let lhs = g_n.derivative(j);
                let scale = factorial_rat(n) / factorial_rat(n - j);
                let rhs = jensen(&gs, n - j, j).unwrap().scale(&scale);
                assert_eq!(lhs, rhs, "n = {n}, j = {j}");
            }
        }
    }

    #[test]
    fn jensen_bridge() {
        for (spec, n, k) in [
            (hermite(), 2, 0),
            (hermite(), 0, 0),
            (MeasureSpec::laguerre(rat_int(0)).unwrap(), 1, 1),
        ] {
            let b = jensen_qr_bridge(&spec, n, k).unwrap();
            assert!(b.holds(), "{spec}, n = {n}, k = {k}");
        }
        // witness: g_2 for Hermite equals the reversed, sign-adjusted q_2
        let b = jensen_qr_bridge(&hermite(), 2, 0).unwrap();
        assert_eq!(b.g_n, upoly(&[(1, 1), (0, 1), (1, 2)]));
    }

    #[test]
    fn jensen_bridge_sweep() {
        for spec in [hermite(), MeasureSpec::laguerre(rat_int(0)).unwrap()] {
            for n in 0..=6 {
                for k in 0..=3 {
                    assert!(
                        jensen_qr_bridge(&spec, n, k).unwrap().holds(),
                        "{spec}, n = {n}, k = {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn classical_polys() {
        let h = ClassicalFamily::Hermite;
        assert_eq!(
            classical_poly(&h, 2).unwrap(),
            upoly(&[(-2, 1), (0, 1), (4, 1)])
        );
        let l0 = ClassicalFamily::Laguerre { alpha: rat_int(0) };
        assert_eq!(classical_poly(&l0, 1).unwrap(), upoly(&[(1, 1), (-1, 1)]));
        let leg = ClassicalFamily::Gegenbauer { lambda: rat(1, 2) };
        // Legendre P_2 = (3x^2 - 1)/2
        assert_eq!(
            classical_poly(&leg, 2).unwrap(),
            upoly(&[(-1, 2), (0, 1), (3, 2)])
        );
        let bad = ClassicalFamily::Gegenbauer { lambda: rat_int(0) };
        assert!(classical_poly(&bad, 2).is_err());
    }

    #[test]
    fn classical_poly_matches_orth_poly_up_to_leading() {
        // p_n = det M_{n-1} * (classical / leading coefficient)
        let fams = [
            ClassicalFamily::Hermite,
            ClassicalFamily::Laguerre { alpha: rat(3, 2) },
            ClassicalFamily::Gegenbauer { lambda: rat(3, 2) },
        ];
        for fam in &fams {
            let spec = fam.measure();
            for n in 0..=5 {
                let c = classical_poly(fam, n).unwrap();
                let monic = c.scale(&(Rational::one() / fam.leading_coeff(n)));
                let p = monic.scale(&hankel_det_lower(&spec, n).unwrap());
                assert_eq!(p, orth_poly(&spec, n).unwrap(), "{spec}, n = {n}");
            }
        }
    }

    #[test]
    fn gegenbauer_explicit_sum_oracle() {
        // C_n^l(x) = sum_k (-1)^k (l)_{n-k} / (k! (n-2k)!) (2x)^{n-2k}
        for lambda in [rat(1, 2), rat(3, 2), rat(5, 2), rat_int(1)] {
            let fam = ClassicalFamily::Gegenbauer {
                lambda: lambda.clone(),
            };
            for n in 0..=6usize {
                let mut coeffs = vec![Rational::zero(); n + 1];
                for k in 0..=n / 2 {
                    coeffs[n - 2 * k] = neg_one_pow(k) * rising(&lambda, n - k)
                        * pow_u(&rat_int(2), n - 2 * k)
                        / (factorial_rat(k) * factorial_rat(n - 2 * k));
                }
                assert_eq!(
                    classical_poly(&fam, n).unwrap(),
                    UniPoly::new(coeffs),
                    "lambda = {lambda}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn classical_q_closed_examples() {
        assert_eq!(
            classical_q_closed(&ClassicalFamily::Hermite, 2).unwrap(),
            upoly(&[(1, 2), (0, 1), (1, 1)])
        );
        assert_eq!(
            classical_q_closed(&ClassicalFamily::Hermite, 1).unwrap(),
            upoly(&[(0, 1), (-1, 1)])
        );
        assert_eq!(
            classical_q_closed(&ClassicalFamily::Laguerre { alpha: rat_int(0) }, 1).unwrap(),
            upoly(&[(1, 1), (-1, 1)])
        );
    }

    #[test]
    fn classical_q_closed_matches_q_poly() {
        let fams = [
            ClassicalFamily::Hermite,
            ClassicalFamily::Laguerre { alpha: rat_int(0) },
            ClassicalFamily::Laguerre { alpha: rat(3, 2) },
            ClassicalFamily::Gegenbauer { lambda: rat(1, 2) },
            ClassicalFamily::Gegenbauer { lambda: rat(3, 2) },
        ];
        for fam in &fams {
            let spec = fam.measure();
            for n in 0..=6 {
                assert_eq!(
                    classical_q_closed(fam, n).unwrap(),
                    q_poly(&spec, n).unwrap(),
                    "{spec}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn q_parity_for_even_measures() {
        // Hermite and Gegenbauer measures are even, so q_n(-x) = (-1)^n q_n(x)
        for spec in [hermite(), MeasureSpec::gegenbauer(rat(3, 2)).unwrap()] {
            for n in 0..=8usize {
                let q = q_poly(&spec, n).unwrap();
                for (k, c) in q.coeffs().iter().enumerate() {
                    if (n + k) % 2 == 1 {
                        assert!(c.is_zero(), "{spec}: q_{n} has coefficient at x^{k}");
                    }
                }
            }
        }
    }
}
