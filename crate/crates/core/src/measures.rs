//! Moment sequences of classical and user-defined measures.
//!
//! A [`MeasureSpec`] provides exact moments `mu_k`, the Hankel matrices
//! `M_n = [mu_{i+j}]`, and polynomially modified measures
//! `(t-t_1)^{m_1} ... (t-t_r)^{m_r} dmu` whose moments are finite rational
//! combinations of the base moments. Everything stays in the rationals; the
//! classical families are normalized so that `mu_0 = 1`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;
use crate::poly::Poly;
use crate::rational::{factorial_rat, parse_rational, pow_u, rat, rat_int, rising, Rational};

/// Nodes `t_1, ..., t_r` with multiplicities `m_1, ..., m_r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeSet {
    entries: Vec<(Rational, u32)>,
}

impl NodeSet {
    /// Build from `(node, multiplicity)` pairs; multiplicities must be >= 1.
    pub fn new(entries: Vec<(Rational, u32)>) -> Result<Self> {
        if entries.iter().any(|(_, m)| *m == 0) {
            return Err(Error::InvalidArgument(
                "node multiplicities must be at least 1".into(),
            ));
        }
        Ok(NodeSet { entries })
    }

    pub fn empty() -> Self {
        NodeSet { entries: vec![] }
    }

    /// All multiplicities one.
    pub fn simple(nodes: &[Rational]) -> Self {
        NodeSet {
            entries: nodes.iter().map(|t| (t.clone(), 1)).collect(),
        }
    }

    pub fn entries(&self) -> &[(Rational, u32)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.entries.iter().map(|(_, m)| *m as usize).sum()
    }

    pub fn nodes(&self) -> Vec<Rational> {
        self.entries.iter().map(|(t, _)| t.clone()).collect()
    }

    /// Nodes repeated by multiplicity.
    pub fn repeated(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.total_multiplicity());
        for (t, m) in &self.entries {
            for _ in 0..*m {
                out.push(t.clone());
            }
        }
        out
    }

    pub fn pairwise_distinct(&self) -> bool {
        for i in 0..self.entries.len() {
            for j in i + 1..self.entries.len() {
                if self.entries[i].0 == self.entries[j].0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn require_distinct(&self) -> Result<()> {
        if self.pairwise_distinct() {
            Ok(())
        } else {
            Err(Error::DuplicateNodes)
        }
    }

    /// The node polynomial `prod_i (t - t_i)^{m_i}` in the variable `t`.
    pub fn node_polynomial(&self) -> Poly<Rational> {
        let mut acc = Poly::one();
        for (t, m) in &self.entries {
            let factor = Poly::new(vec![-t.clone(), Rational::one()]);
            for _ in 0..*m {
                acc = &acc * &factor;
            }
        }
        acc
    }

    /// Split off the last entry; used where the final node plays the role of
    /// an evaluation point.
    pub fn split_last(&self) -> Option<(NodeSet, &Rational, u32)> {
        let (last, rest) = self.entries.split_last()?;
        Some((
            NodeSet {
                entries: rest.to_vec(),
            },
            &last.0,
            last.1,
        ))
    }
}

/// A moment-sequence provider.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MeasureSpec {
    /// `exp(-x^2)/sqrt(pi)` on the real line.
    Hermite,
    /// `x^alpha exp(-x)/Gamma(alpha+1)` on `[0, inf)`, `alpha > -1`.
    Laguerre { alpha: Rational },
    /// `c_lambda (1-x^2)^{lambda-1/2}` on `[-1, 1]`, `lambda > -1/2`.
    Gegenbauer { lambda: Rational },
    /// A finite list of moments `mu_0, mu_1, ...`.
    Explicit { moments: Vec<Rational> },
    /// `(t-t_1)^{m_1} ... (t-t_r)^{m_r} d(base)`.
    Modified {
        base: Box<MeasureSpec>,
        nodes: NodeSet,
    },
}

impl MeasureSpec {
    pub fn hermite() -> Self {
        MeasureSpec::Hermite
    }

    pub fn laguerre(alpha: Rational) -> Result<Self> {
        if alpha <= rat_int(-1) {
            return Err(Error::UnsupportedParameter(format!(
                "Laguerre requires alpha > -1, got {alpha}"
            )));
        }
        Ok(MeasureSpec::Laguerre { alpha })
    }

    pub fn gegenbauer(lambda: Rational) -> Result<Self> {
        if lambda <= rat(-1, 2) {
            return Err(Error::UnsupportedParameter(format!(
                "Gegenbauer requires lambda > -1/2, got {lambda}"
            )));
        }
        Ok(MeasureSpec::Gegenbauer { lambda })
    }

    pub fn explicit(moments: Vec<Rational>) -> Result<Self> {
        if moments.is_empty() {
            return Err(Error::InvalidArgument(
                "explicit measure needs at least one moment".into(),
            ));
        }
        Ok(MeasureSpec::Explicit { moments })
    }

    pub fn modified(base: MeasureSpec, nodes: NodeSet) -> Self {
        MeasureSpec::Modified {
            base: Box::new(base),
            nodes,
        }
    }

    /// Highest moment order available, or `None` when unlimited.
    pub fn available_order(&self) -> Option<usize> {
        match self {
            MeasureSpec::Explicit { moments } => Some(moments.len() - 1),
            MeasureSpec::Modified { base, nodes } => base
                .available_order()
                .map(|o| o.saturating_sub(nodes.total_multiplicity())),
            _ => None,
        }
    }

    /// Moments `mu_0 ... mu_order` in one batch. Hankel builders and the
    /// polynomial constructors read moments heavily, so the batch is computed
    /// once per call: the modified-measure expansion multiplies the node
    /// polynomial out a single time.
    pub fn moments_upto(&self, order: usize) -> Result<Vec<Rational>> {
        match self {
            MeasureSpec::Hermite => Ok((0..=order)
                .map(|k| {
                    if k % 2 == 1 {
                        Rational::zero()
                    } else {
                        // (2j)! / (2^{2j} j!) with j = k/2
                        let j = k / 2;
                        factorial_rat(k) / (pow_u(&rat_int(4), j) * factorial_rat(j))
                    }
                })
                .collect()),
            MeasureSpec::Laguerre { alpha } => {
                let a1 = alpha + Rational::one();
                Ok((0..=order).map(|k| rising(&a1, k)).collect())
            }
            MeasureSpec::Gegenbauer { lambda } => {
                let l1 = lambda + Rational::one();
                let half = rat(1, 2);
                Ok((0..=order)
                    .map(|k| {
                        if k % 2 == 1 {
                            Rational::zero()
                        } else {
                            rising(&half, k / 2) / rising(&l1, k / 2)
                        }
                    })
                    .collect())
            }
            MeasureSpec::Explicit { moments } => {
                if order >= moments.len() {
                    return Err(Error::InsufficientMoments {
                        required: order,
                        available: moments.len() - 1,
                    });
                }
                Ok(moments[..=order].to_vec())
            }
            MeasureSpec::Modified { base, nodes } => {
                let node_poly = nodes.node_polynomial();
                let m = nodes.total_multiplicity();
                let base_moments = base.moments_upto(order + m)?;
                Ok((0..=order)
                    .map(|k| {
                        let mut acc = Rational::zero();
                        for (j, c) in node_poly.coeffs().iter().enumerate() {
                            acc += c * &base_moments[k + j];
                        }
                        acc
                    })
                    .collect())
            }
        }
    }

    /// Exact `mu_k`.
    pub fn moment(&self, k: usize) -> Result<Rational> {
        Ok(self.moments_upto(k)?.pop().unwrap())
    }
}

/// The `(n+1) x (n+1)` Hankel moment matrix `M_n = [mu_{i+j}]`.
pub fn hankel_matrix(spec: &MeasureSpec, n: usize) -> Result<SquareMatrix<Rational>> {
    let mu = spec.moments_upto(2 * n)?;
    Ok(SquareMatrix::from_fn(n + 1, |i, j| mu[i + j].clone()))
}

/// `det M_n`.
pub fn hankel_det(spec: &MeasureSpec, n: usize) -> Result<Rational> {
    Ok(hankel_matrix(spec, n)?.det())
}

/// `det M_{n-1}`, with the empty-matrix convention `det M_{-1} = 1`.
pub fn hankel_det_lower(spec: &MeasureSpec, n: usize) -> Result<Rational> {
    if n == 0 {
        Ok(Rational::one())
    } else {
        hankel_det(spec, n - 1)
    }
}

/// Outcome of a positive-definiteness scan of the leading Hankel minors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureValidation {
    /// `det M_k` for `k = 0..=order`.
    pub dets: Vec<Rational>,
    /// Index of the first non-positive determinant, if any.
    pub first_non_positive: Option<usize>,
}

impl MeasureValidation {
    pub fn is_positive_definite(&self) -> bool {
        self.first_non_positive.is_none()
    }
}

/// Report `det M_k` for `k = 0..=order` and flag the first non-positive one.
/// A signed (modified) measure may legitimately fail; that is reported, not
/// an error.
pub fn validate_measure(spec: &MeasureSpec, order: usize) -> Result<MeasureValidation> {
    let mut dets = Vec::with_capacity(order + 1);
    let mut first_non_positive = None;
    for k in 0..=order {
        let d = hankel_det(spec, k)?;
        if first_non_positive.is_none() && d <= Rational::zero() {
            first_non_positive = Some(k);
        }
        dets.push(d);
    }
    Ok(MeasureValidation {
        dets,
        first_non_positive,
    })
}

/// Product formula for `det M_n` of a classical family.
pub fn closed_form_hankel_det(spec: &MeasureSpec, n: usize) -> Result<Rational> {
    match spec {
        MeasureSpec::Hermite => {
            // prod_{k=1}^n k!/2^k
            let mut acc = Rational::one();
            for k in 1..=n {
                acc *= factorial_rat(k) / pow_u(&rat_int(2), k);
            }
            Ok(acc)
        }
        MeasureSpec::Laguerre { alpha } => {
            // prod_{k=1}^n k! (alpha+1)_k
            let a1 = alpha + Rational::one();
            let mut acc = Rational::one();
            for k in 1..=n {
                acc *= factorial_rat(k) * rising(&a1, k);
            }
            Ok(acc)
        }
        MeasureSpec::Gegenbauer { lambda } => {
            // lambda^n/(lambda+1)_n prod_{k=1}^n (2 lambda)_k k! / ((lambda)_k^2 2^{2k})
            let l1 = lambda + Rational::one();
            let two_l = rat_int(2) * lambda;
            let mut acc = pow_u(lambda, n) / rising(&l1, n);
            for k in 1..=n {
                let num = rising(&two_l, k) * factorial_rat(k);
                let den = pow_u(&rising(lambda, k), 2) * pow_u(&rat_int(4), k);
                acc *= num / den;
            }
            Ok(acc)
        }
        _ => Err(Error::UnsupportedParameter(
            "closed-form Hankel determinant exists only for classical families".into(),
        )),
    }
}

impl fmt::Display for MeasureSpec {
    /// Render in the CLI grammar so that parse/format round-trips.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeasureSpec::Hermite => write!(f, "hermite"),
            MeasureSpec::Laguerre { alpha } => write!(f, "laguerre:alpha={alpha}"),
            MeasureSpec::Gegenbauer { lambda } => write!(f, "gegenbauer:lambda={lambda}"),
            MeasureSpec::Explicit { moments } => {
                write!(f, "moments:")?;
                for (i, m) in moments.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{m}")?;
                }
                Ok(())
            }
            MeasureSpec::Modified { base, nodes } => {
                write!(f, "modified({base};")?;
                for (i, (t, m)) in nodes.entries().iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{t}^{m}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Parse the measure grammar:
/// `hermite` | `laguerre:alpha=<r>` | `gegenbauer:lambda=<r>` |
/// `moments:<r0>,<r1>,...` | `modified(<spec>;<node>^<mult>,...)`.
pub fn parse_measure(s: &str) -> Result<MeasureSpec> {
    let s = s.trim();
    if s == "hermite" {
        return Ok(MeasureSpec::Hermite);
    }
    if let Some(rest) = s.strip_prefix("laguerre:alpha=") {
        return MeasureSpec::laguerre(parse_rational(rest)?);
    }
    if let Some(rest) = s.strip_prefix("gegenbauer:lambda=") {
        return MeasureSpec::gegenbauer(parse_rational(rest)?);
    }
    if let Some(rest) = s.strip_prefix("moments:") {
        let moments = rest
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        return MeasureSpec::explicit(moments);
    }
    if let Some(rest) = s.strip_prefix("modified(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unclosed modified(...) in `{s}`")))?;
        // the base spec may itself contain a modified(...), so split on the
        // last `;` at paren depth zero
        let mut depth = 0usize;
        let mut split = None;
        for (i, c) in inner.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth = depth.saturating_sub(1),
                ';' if depth == 0 => split = Some(i),
                _ => {}
            }
        }
        let split =
            split.ok_or_else(|| Error::Parse(format!("modified(...) needs `;nodes` in `{s}`")))?;
        let base = parse_measure(&inner[..split])?;
        let mut entries = Vec::new();
        for part in inner[split + 1..].split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (node, mult) = match part.split_once('^') {
                Some((n, m)) => (
                    parse_rational(n)?,
                    m.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("invalid multiplicity `{m}`")))?,
                ),
                None => (parse_rational(part)?, 1),
            };
            entries.push((node, mult));
        }
        if entries.is_empty() {
            return Err(Error::Parse(format!("modified(...) needs nodes in `{s}`")));
        }
        return Ok(MeasureSpec::modified(base, NodeSet::new(entries)?));
    }
    Err(Error::Parse(format!("unrecognized measure `{s}`")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn hermite() -> MeasureSpec {
        MeasureSpec::hermite()
    }

    #[test]
    fn hermite_moments() {
        let h = hermite();
        assert_eq!(h.moment(0).unwrap(), rat_int(1));
        assert_eq!(h.moment(2).unwrap(), rat(1, 2));
        assert_eq!(h.moment(4).unwrap(), rat(3, 4));
        assert_eq!(h.moment(6).unwrap(), rat(15, 8));
        for k in (1..=21).step_by(2) {
            assert_eq!(h.moment(k).unwrap(), rat_int(0));
        }
    }

    #[test]
    fn laguerre_moments() {
        let l = MeasureSpec::laguerre(rat_int(0)).unwrap();
        assert_eq!(l.moment(3).unwrap(), rat_int(6));
        let l32 = MeasureSpec::laguerre(rat(3, 2)).unwrap();
        // (5/2)_2 = (5/2)(7/2)
        assert_eq!(l32.moment(2).unwrap(), rat(35, 4));
        assert!(MeasureSpec::laguerre(rat_int(-1)).is_err());
        assert!(MeasureSpec::laguerre(rat(-3, 2)).is_err());
    }

    #[test]
    fn gegenbauer_moments() {
        let g = MeasureSpec::gegenbauer(rat(1, 2)).unwrap();
        // lambda = 1/2 is the uniform measure on [-1,1] scaled to mu_0 = 1:
        // mu_2 = integral of x^2 * (1/2) over [-1,1] = 1/3
        assert_eq!(g.moment(2).unwrap(), rat(1, 3));
        assert_eq!(g.moment(4).unwrap(), rat(1, 5));
        for k in (1..=21).step_by(2) {
            assert_eq!(g.moment(k).unwrap(), rat_int(0));
        }
        assert!(MeasureSpec::gegenbauer(rat(-1, 2)).is_err());
    }

    #[test]
    fn explicit_moment_bounds() {
        let e = MeasureSpec::explicit(vec![rat_int(1), rat_int(0), rat(1, 2)]).unwrap();
        assert_eq!(e.moment(2).unwrap(), rat(1, 2));
        match e.moment(3) {
            Err(Error::InsufficientMoments {
                required: 3,
                available: 2,
            }) => {}
            other => panic!("expected insufficient moments, got {other:?}"),
        }
        assert!(MeasureSpec::explicit(vec![]).is_err());
    }

    #[test]
    fn modified_moments_by_expansion() {
        // nodes 0, 1, 2: mu'_0 = mu_3 - 3 mu_2 + 2 mu_1 = -3/2 for Hermite
        let nodes = NodeSet::simple(&[rat_int(0), rat_int(1), rat_int(2)]);
        let m = MeasureSpec::modified(hermite(), nodes);
        assert_eq!(m.moment(0).unwrap(), rat(-3, 2));
        // expansion oracle: sigma-form sum_j (-1)^j sigma_j mu_{k+3-j}
        let base = hermite();
        let reps = [rat_int(0), rat_int(1), rat_int(2)];
        for k in 0..=4 {
            let mut expect = Rational::zero();
            for j in 0..=3 {
                let sigma = crate::matrix::elem_sym(j, &reps).unwrap();
                expect += crate::rational::neg_one_pow(j) * sigma * base.moment(k + 3 - j).unwrap();
            }
            assert_eq!(m.moment(k).unwrap(), expect, "k = {k}");
        }
    }

    #[test]
    fn modified_nesting() {
        let inner = MeasureSpec::modified(hermite(), NodeSet::simple(&[rat_int(1)]));
        let outer = MeasureSpec::modified(inner, NodeSet::simple(&[rat_int(-1)]));
        // (t-1)(t+1) dmu = (t^2-1) dmu: mu'_0 = mu_2 - mu_0 = -1/2
        assert_eq!(outer.moment(0).unwrap(), rat(-1, 2));
        let direct = MeasureSpec::modified(
            hermite(),
            NodeSet::simple(&[rat_int(1), rat_int(-1)]),
        );
        for k in 0..=5 {
            assert_eq!(outer.moment(k).unwrap(), direct.moment(k).unwrap());
        }
    }

    #[test]
    fn hankel_matrices() {
        let m = hankel_matrix(&hermite(), 1).unwrap();
        assert_eq!(m.get(0, 0), &rat_int(1));
        assert_eq!(m.get(0, 1), &rat_int(0));
        assert_eq!(m.get(1, 1), &rat(1, 2));
        let e = MeasureSpec::explicit(vec![rat_int(1)]).unwrap();
        assert_eq!(hankel_matrix(&e, 0).unwrap().order(), 1);
        assert_eq!(hankel_det(&e, 0).unwrap(), rat_int(1));
        let l = MeasureSpec::laguerre(rat_int(0)).unwrap();
        let lm = hankel_matrix(&l, 1).unwrap();
        assert_eq!(lm.row(0), &[rat_int(1), rat_int(1)]);
        assert_eq!(lm.row(1), &[rat_int(1), rat_int(2)]);
    }

    #[test]
    fn hankel_det_values() {
        assert_eq!(hankel_det(&hermite(), 2).unwrap(), rat(1, 4));
        let l = MeasureSpec::laguerre(rat_int(0)).unwrap();
        assert_eq!(hankel_det(&l, 1).unwrap(), rat_int(1));
    }

    #[test]
    fn closed_forms_match_hankel_dets() {
        let mut specs = vec![hermite()];
        for a in [rat(-1, 2), rat_int(0), rat(3, 2)] {
            specs.push(MeasureSpec::laguerre(a).unwrap());
        }
        for l in [rat(1, 2), rat_int(1), rat(5, 2)] {
            specs.push(MeasureSpec::gegenbauer(l).unwrap());
        }
        for spec in &specs {
            for n in 0..=5 {
                assert_eq!(
                    closed_form_hankel_det(spec, n).unwrap(),
                    hankel_det(spec, n).unwrap(),
                    "{spec} at n = {n}"
                );
            }
        }
        assert_eq!(closed_form_hankel_det(&hermite(), 0).unwrap(), rat_int(1));
        assert_eq!(closed_form_hankel_det(&hermite(), 2).unwrap(), rat(1, 4));
        let l0 = MeasureSpec::laguerre(rat_int(0)).unwrap();
        assert_eq!(closed_form_hankel_det(&l0, 2).unwrap(), rat_int(4));
        let e = MeasureSpec::explicit(vec![rat_int(1)]).unwrap();
        assert!(closed_form_hankel_det(&e, 0).is_err());
    }

    #[test]
    fn validation_reports() {
        let v = validate_measure(&hermite(), 3).unwrap();
        assert!(v.is_positive_definite());
        assert_eq!(v.dets.len(), 4);

        let rank_deficient =
            MeasureSpec::explicit(vec![rat_int(1), rat_int(0), rat_int(0)]).unwrap();
        let v = validate_measure(&rank_deficient, 1).unwrap();
        assert_eq!(v.first_non_positive, Some(1));

        // a modified measure is signed; the report flags it without error
        let signed = MeasureSpec::modified(hermite(), NodeSet::simple(&[rat_int(0)]));
        let v = validate_measure(&signed, 1).unwrap();
        assert!(!v.is_positive_definite());
        // det [[mu'_0, mu'_1], [mu'_1, mu'_2]] = det [[0, 1/2], [1/2, 0]]
        assert_eq!(v.dets[1], rat(-1, 4));
    }

    #[test]
    fn validate_classical_to_order_six() {
        let specs = [
            hermite(),
            MeasureSpec::laguerre(rat(3, 2)).unwrap(),
            MeasureSpec::gegenbauer(rat(3, 2)).unwrap(),
        ];
        for spec in &specs {
            assert!(validate_measure(spec, 6).unwrap().is_positive_definite());
        }
    }

    #[test]
    fn grammar_round_trip() {
        let cases = [
            "hermite",
            "laguerre:alpha=3/2",
            "gegenbauer:lambda=1/2",
            "moments:1,0,1/2,0,3/4",
            "modified(hermite;0^1,1^2)",
            "modified(modified(hermite;1^1);-1^1)",
        ];
        for s in cases {
            let spec = parse_measure(s).unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!(parse_measure("lebesgue").is_err());
        assert!(parse_measure("modified(hermite)").is_err());
        assert!(parse_measure("laguerre:alpha=-2").is_err());
    }
}
