//! Convergence experiment: scaled Jensen polynomial values of the Laplace
//! transform of a measure on `[0, inf)` approach the transform itself. All
//! values are computed exactly; decimals appear only in the rendered table.

use num_traits::{One, Signed, Zero};

use crate::dets::wronskian;
use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::measures::{hankel_det, MeasureSpec};
use crate::opoly::{jensen, JensenSeq};
use crate::rational::{factorial_rat, pow_u, to_f64, Rational};

/// One row of the convergence table: the scaled Jensen value `g_m(x/m)`, the
/// target transform value when a closed form is registered, and the
/// Wronskian form of the same quantity for small `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct JensenRow {
    pub m: usize,
    pub value_exact: Rational,
    pub value: f64,
    pub abs_error_exact: Option<Rational>,
    pub abs_error: Option<f64>,
    pub wronskian_cross: Option<Rational>,
}

/// Sign evidence for the derivative determinants of the Laplace transform,
/// through their even-order Jensen approximants.
#[derive(Debug, Clone, PartialEq)]
pub struct DetSignRow {
    pub order: usize,
    pub approximant_m: usize,
    pub value: Rational,
    pub non_negative: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct JensenConvergence {
    pub x: Rational,
    /// `(1+x)^{-alpha-1}` when exactly representable (integer alpha).
    pub target_exact: Option<Rational>,
    pub target: Option<f64>,
    pub rows: Vec<JensenRow>,
    pub det_signs: Vec<DetSignRow>,
}

fn laplace_target(spec: &MeasureSpec, x: &Rational) -> (Option<Rational>, Option<f64>) {
    match spec {
        MeasureSpec::Laguerre { alpha } => {
            let base = Rational::one() + x;
            if alpha.is_integer() {
                // (1+x)^{-(alpha+1)} stays rational
                let e = alpha.to_integer() + num_bigint::BigInt::from(1);
                let e_usize = usize::try_from(&e).unwrap_or(0);
                let t = Rational::one() / pow_u(&base, e_usize);
                let tf = to_f64(&t);
                (Some(t), Some(tf))
            } else {
                let a = to_f64(alpha);
                let t = to_f64(&base).powf(-a - 1.0);
                (None, Some(t))
            }
        }
        _ => (None, None),
    }
}

/// Build the convergence table for a measure supported on `[0, inf)`
/// (a Laguerre family or an explicit Stieltjes moment list) at `x >= 0`.
pub fn jensen_convergence(
    spec: &MeasureSpec,
    x: &Rational,
    m_max: usize,
) -> Result<JensenConvergence> {
    match spec {
        MeasureSpec::Laguerre { .. } | MeasureSpec::Explicit { .. } => {}
        other => {
            return Err(Error::UnsupportedParameter(format!(
                "convergence experiment needs a measure on [0, inf), got {other}"
            )))
        }
    }
    if x.is_negative() {
        return Err(Error::InvalidArgument(
            "convergence experiment needs x >= 0".into(),
        ));
    }
    if m_max == 0 {
        return Err(Error::InvalidArgument("m_max must be positive".into()));
    }
    let gs = JensenSeq::from_measure(spec, m_max)?;
    let (target_exact, target) = laplace_target(spec, x);
    let mut rows = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        let y = x / Rational::from_integer(m.into());
        let value_exact = jensen(&gs, m, 0)?.eval(&y);
        let abs_error_exact = target_exact.as_ref().map(|t| {
            let d = &value_exact - t;
            if d.is_negative() {
                -d
            } else {
                d
            }
        });
        let value = to_f64(&value_exact);
        let abs_error = match (&abs_error_exact, target) {
            (Some(e), _) => Some(to_f64(e)),
            (None, Some(t)) => Some((value - t).abs()),
            _ => None,
        };
        // Wronskian form g_m(y) = y^m W(p_1..p_m; 1/y) / (prod k! det M_k),
        // cross-checked exactly for small m away from y = 0
        let wronskian_cross = if m <= 4 && !y.is_zero() {
            let mut denom = Rational::one();
            for k in 1..m {
                denom *= factorial_rat(k) * hankel_det(spec, k)?;
            }
            let w = wronskian(spec, 1, m, &(Rational::one() / &y))?;
            Some(pow_u(&y, m) * w / denom)
        } else {
            None
        };
        rows.push(JensenRow {
            m,
            value_exact,
            value,
            abs_error_exact,
            abs_error,
            wronskian_cross,
        });
    }
    // derivative-determinant sign table at the largest even approximant order
    let approximant_m = if m_max % 2 == 0 { m_max } else { m_max - 1 };
    let mut det_signs = Vec::new();
    if approximant_m >= 2 {
        let upto = approximant_m + 4;
        let gs_det = JensenSeq::from_measure(spec, upto)?;
        for n in 1..=3usize {
            let y = x / Rational::from_integer(approximant_m.into());
            let det = SquareMatrix::from_fn(n, |i, j| {
                jensen(&gs_det, approximant_m, i + j).unwrap().eval(&y)
            })
            .det();
            det_signs.push(DetSignRow {
                order: n,
                approximant_m,
                non_negative: det >= Rational::zero(),
                value: det,
            });
        }
    }
    Ok(JensenConvergence {
        x: x.clone(),
        target_exact,
        target,
        rows,
        det_signs,
    })
}
