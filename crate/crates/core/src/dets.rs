//! Determinants built from consecutive orthogonal polynomials: Slater
//! determinants and their symmetrized and confluent (derivative-row)
//! generalizations, Wronskians, Hankel determinants of the shifted-moment
//! polynomials, gapped determinants with arbitrary derivative orders, and the
//! signed factorial-and-Hankel structure constants relating them.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::{vandermonde, SquareMatrix};
use crate::measures::{hankel_det_lower, MeasureSpec, NodeSet};
use crate::opoly::{orth_poly, q_nodes, r_value};
use crate::poly::Poly;
use crate::rational::{factorial_rat, neg_one_pow, pow_u, Rational};

type UniPoly = Poly<Rational>;

/// Derivative orders per node group. Row `(i, d)` of the generalized Slater
/// matrix holds the `d`-th derivatives of the consecutive polynomials at node
/// `t_i`; the standard plan uses orders `0 .. m_i - 1` for a node of
/// multiplicity `m_i`, gapped plans replace the last order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowPlan {
    groups: Vec<Vec<u32>>,
}

impl RowPlan {
    pub fn new(groups: Vec<Vec<u32>>) -> Self {
        RowPlan { groups }
    }

    /// Orders `0 .. m_i - 1` per node, matching the node multiplicities.
    pub fn standard(nodes: &NodeSet) -> Self {
        RowPlan {
            groups: nodes
                .entries()
                .iter()
                .map(|(_, m)| (0..*m).collect())
                .collect(),
        }
    }

    /// Single-node plan `0, ..., m-1, k` with the last order replaced.
    pub fn gapped(m: u32, k: u32) -> Self {
        let mut orders: Vec<u32> = (0..m).collect();
        orders.push(k);
        RowPlan {
            groups: vec![orders],
        }
    }

    pub fn groups(&self) -> &[Vec<u32>] {
        &self.groups
    }

    pub fn total_rows(&self) -> usize {
        self.groups.iter().map(|g| g.len()).sum()
    }
}

/// Consecutive orthogonal polynomials `p_start, ..., p_{start+count-1}`.
fn poly_run(spec: &MeasureSpec, start: usize, count: usize) -> Result<Vec<UniPoly>> {
    (start..start + count).map(|d| orth_poly(spec, d)).collect()
}

/// Slater determinant `det [ p_{n+j-1}(t_i) ]` over `m` distinct nodes,
/// columns running through degrees `n .. n+m-1`.
pub fn slater(spec: &MeasureSpec, n: usize, nodes: &[Rational]) -> Result<Rational> {
    if nodes.is_empty() {
        return Err(Error::InvalidArgument(
            "Slater determinant needs at least one node".into(),
        ));
    }
    let m = nodes.len();
    let polys = poly_run(spec, n, m)?;
    let mat = SquareMatrix::from_fn(m, |i, j| polys[j].eval(&nodes[i]));
    Ok(mat.det())
}

/// Generalized Slater determinant with derivative rows: row `(t_i, d)` holds
/// `p_n^{(d)}(t_i), ..., p_{n+M-1}^{(d)}(t_i)` where `M` is the total row
/// count of the plan. Nodes must be pairwise distinct; confluence is carried
/// by the derivative orders, not by repeated nodes.
pub fn slater_general(
    spec: &MeasureSpec,
    n: usize,
    nodes: &NodeSet,
    plan: &RowPlan,
) -> Result<Rational> {
    nodes.require_distinct()?;
    if plan.groups().len() != nodes.len() {
        return Err(Error::MalformedPlan(format!(
            "plan has {} groups for {} nodes",
            plan.groups().len(),
            nodes.len()
        )));
    }
    let order = plan.total_rows();
    if order == 0 {
        return Err(Error::MalformedPlan("plan has no rows".into()));
    }
    let polys = poly_run(spec, n, order)?;
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(order);
    for ((t, _), orders) in nodes.entries().iter().zip(plan.groups()) {
        for &d in orders {
            rows.push(
                polys
                    .iter()
                    .map(|p| p.derivative(d as usize).eval(t))
                    .collect(),
            );
        }
    }
    Ok(SquareMatrix::from_rows(rows)?.det())
}

/// Symmetrized Slater determinant: the continuous extension of
/// `slater / vandermonde` to coincident nodes. A node of multiplicity `m_i`
/// contributes divided-difference rows `p^{(d)} / d!`, and the value is
/// divided by the remaining cross factors `prod_{i<j} (t_j - t_i)^{m_i m_j}`.
/// With all multiplicities one this is exactly `slater / vandermonde`; a
/// single node of multiplicity `m` gives the Wronskian divided by
/// `prod_{k=1}^{m-1} k!`.
pub fn symmetrized(spec: &MeasureSpec, n: usize, nodes: &NodeSet) -> Result<Rational> {
    nodes.require_distinct()?;
    if nodes.is_empty() {
        return Err(Error::InvalidArgument(
            "symmetrized determinant needs at least one node".into(),
        ));
    }
    let plan = RowPlan::standard(nodes);
    let order = plan.total_rows();
    let polys = poly_run(spec, n, order)?;
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(order);
    for ((t, _), orders) in nodes.entries().iter().zip(plan.groups()) {
        for &d in orders {
            let scale = factorial_rat(d as usize);
            rows.push(
                polys
                    .iter()
                    .map(|p| p.derivative(d as usize).eval(t) / &scale)
                    .collect(),
            );
        }
    }
    let det = SquareMatrix::from_rows(rows)?.det();
    Ok(det / cross_factors(nodes))
}

/// `prod_{i<j} (t_j - t_i)^{m_i m_j}` over the node set.
pub fn cross_factors(nodes: &NodeSet) -> Rational {
    let e = nodes.entries();
    let mut acc = Rational::one();
    for j in 1..e.len() {
        for i in 0..j {
            let diff = &e[j].0 - &e[i].0;
            acc *= pow_u(&diff, (e[i].1 * e[j].1) as usize);
        }
    }
    acc
}

/// Wronskian `det [ p_{n+j}^{(i)}(x) ]_{i,j=0}^{m-1}` of `m` consecutive
/// orthogonal polynomials at one point (plain derivative rows, no factorial
/// scaling).
pub fn wronskian(spec: &MeasureSpec, n: usize, m: usize, x: &Rational) -> Result<Rational> {
    if m == 0 {
        return Err(Error::InvalidArgument("Wronskian needs m >= 1".into()));
    }
    let polys = poly_run(spec, n, m)?;
    let mat = SquareMatrix::from_fn(m, |i, j| polys[j].derivative(i).eval(x));
    Ok(mat.det())
}

/// Hankel determinant of the several-node `q` polynomials. The last node
/// plays the role of the evaluation point: with nodes
/// `(t_1, m_1), ..., (t_r, m_r)` the entries are
/// `q_{i+j+m_r}(t_1^{m_1}, ..., t_{r-1}^{m_{r-1}}; t_r)` for
/// `i, j = 0 .. n-1`.
pub fn hankel_q_det(spec: &MeasureSpec, n: usize, nodes: &NodeSet) -> Result<Rational> {
    let (prefix, x, m_last) = nodes.split_last().ok_or_else(|| {
        Error::InvalidArgument("the q-form Hankel determinant needs at least one node".into())
    })?;
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut entries = Vec::with_capacity(2 * n - 1);
    for k in 0..=2 * (n - 1) {
        entries.push(q_nodes(spec, &prefix, k + m_last as usize)?.eval(x));
    }
    Ok(SquareMatrix::from_fn(n, |i, j| entries[i + j].clone()).det())
}

/// Hankel determinant of the several-node `r` values:
/// `det [ r_{i+j}(t_1^{m_1}, ..., t_r^{m_r}) ]_{i,j=0}^{n-1}`, the order-
/// `n-1` moment determinant of the modified measure. Symmetric in the nodes.
pub fn hankel_r_det(spec: &MeasureSpec, n: usize, nodes: &NodeSet) -> Result<Rational> {
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut entries = Vec::with_capacity(2 * n - 1);
    for k in 0..=2 * (n - 1) {
        entries.push(r_value(spec, nodes, k)?);
    }
    Ok(SquareMatrix::from_fn(n, |i, j| entries[i + j].clone()).det())
}

/// Which structure constant to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    /// `B_{n,m} = (-1)^{nm} prod_{k=1}^{m-1} det M_{k+n-1}` — ties the
    /// symmetrized Slater determinant over `m` simple nodes to the q/r
    /// Hankel determinants.
    Bnm,
    /// `C_{n,m} = (-1)^{nm} prod_{k=1}^{m-1} k! det M_{k+n-1}` — the
    /// Wronskian (all nodes collapsed) version of `Bnm`.
    Cnm,
    /// `B_n^{(m_1..m_r)} = (-1)^{n(m+1)} prod_i prod_{j=1}^{m_i - 1} j!
    /// prod_{k=1}^{m} det M_{k+n-1}` with `m = sum m_i` — for the
    /// determinant with an extra simple evaluation node.
    BMulti,
    /// `C_n^{(m_1..m_r)} = (-1)^{nm} prod_i prod_{j=1}^{m_i - 1} j!
    /// prod_{k=1}^{m-1} det M_{k+n-1}` — for the symmetrized confluent
    /// determinant.
    CMulti,
}

/// A structure constant: the signed product of factorials and Hankel
/// determinants carrying one side of a determinant identity onto the other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstant {
    pub kind: StructureKind,
    pub value: Rational,
}

/// The inner factorial product runs to `m_i - 1`, not `m_i`: collapsing a
/// group of `m_i` simple nodes against its Vandermonde factor produces
/// `prod_{j=1}^{m_i - 1} j!`, and the one-group case must reduce to `Cnm`.
fn group_factorials(mults: &[u32]) -> Rational {
    let mut acc = Rational::one();
    for &m in mults {
        for j in 1..m as usize {
            acc *= factorial_rat(j);
        }
    }
    acc
}

/// Product `prod_{k=1}^{count} det M_{k+n-1}`; errors on a degenerate spec
/// (a vanishing factor would silently zero the constant).
fn hankel_product(spec: &MeasureSpec, n: usize, count: usize) -> Result<Rational> {
    let mut acc = Rational::one();
    for k in 1..=count {
        let d = hankel_det_lower(spec, k + n)?;
        if d.is_zero() {
            return Err(Error::DegenerateMeasure { order: k + n - 1 });
        }
        acc *= d;
    }
    Ok(acc)
}

/// Build a structure constant. `Bnm`/`Cnm` read the single entry of `mults`
/// as the scalar `m`; the multi kinds read it as `(m_1, ..., m_r)`.
pub fn structure_constant(
    kind: StructureKind,
    spec: &MeasureSpec,
    n: usize,
    mults: &[u32],
) -> Result<StructureConstant> {
    let value = match kind {
        StructureKind::Bnm | StructureKind::Cnm => {
            if mults.len() != 1 {
                return Err(Error::InvalidArgument(
                    "scalar structure constants take a single multiplicity m".into(),
                ));
            }
            let m = mults[0] as usize;
            let mut v = neg_one_pow(n * m) * hankel_product(spec, n, m.saturating_sub(1))?;
            if kind == StructureKind::Cnm {
                for k in 1..m {
                    v *= factorial_rat(k);
                }
            }
            v
        }
        StructureKind::BMulti => {
            let m: usize = mults.iter().map(|&v| v as usize).sum();
            neg_one_pow(n * (m + 1)) * group_factorials(mults) * hankel_product(spec, n, m)?
        }
        StructureKind::CMulti => {
            let m: usize = mults.iter().map(|&v| v as usize).sum();
            neg_one_pow(n * m)
                * group_factorials(mults)
                * hankel_product(spec, n, m.saturating_sub(1))?
        }
    };
    Ok(StructureConstant { kind, value })
}

/// `F`-determinant `det [ q_{l_i + j - 1}(t_1,...,t_m; x) ]_{i,j=1}^n` for an
/// index list `l_1, ..., l_n`; a gapped list is expressed by omitting the
/// gapped index.
pub fn f_det(
    spec: &MeasureSpec,
    indices: &[usize],
    nodes: &NodeSet,
    x: &Rational,
) -> Result<Rational> {
    if indices.is_empty() {
        return Err(Error::InvalidArgument(
            "F-determinant needs at least one index".into(),
        ));
    }
    let n = indices.len();
    let max_idx = indices.iter().max().unwrap() + n - 1;
    let mut q_at_x = Vec::with_capacity(max_idx + 1);
    for k in 0..=max_idx {
        q_at_x.push(q_nodes(spec, nodes, k)?.eval(x));
    }
    Ok(SquareMatrix::from_fn(n, |i, j| q_at_x[indices[i] + j].clone()).det())
}

/// Value of the several-variable orthogonal polynomial attached to a weakly
/// increasing index vector `alpha` with `alpha_m = n`: the determinant of
/// rows `p_{alpha_i + i - 1}` (strictly increasing degrees) over the node
/// columns, divided by the Vandermonde of the nodes. `alpha = (n, ..., n)`
/// reduces to the symmetrized Slater determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PAlphaValue {
    pub value: Rational,
    /// The elementary symmetric coordinates `u_i = sigma_{m-i+1}(t_1..t_m)`.
    pub u: Vec<Rational>,
}

pub fn p_alpha(spec: &MeasureSpec, alpha: &[usize], nodes: &[Rational]) -> Result<PAlphaValue> {
    let m = alpha.len();
    if m == 0 || m != nodes.len() {
        return Err(Error::InvalidArgument(
            "alpha and nodes must have equal positive length".into(),
        ));
    }
    if alpha.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidArgument(
            "alpha must be weakly increasing".into(),
        ));
    }
    let v = vandermonde(nodes);
    if v.is_zero() {
        return Err(Error::DuplicateNodes);
    }
    // degrees alpha_i + i - 1 are strictly increasing
    let degrees: Vec<usize> = alpha.iter().enumerate().map(|(i, &a)| a + i).collect();
    let polys: Vec<UniPoly> = degrees
        .iter()
        .map(|&d| orth_poly(spec, d))
        .collect::<Result<_>>()?;
    let det = SquareMatrix::from_fn(m, |i, j| polys[i].eval(&nodes[j])).det();
    let mut u = Vec::with_capacity(m);
    for i in 1..=m {
        u.push(crate::matrix::elem_sym(m - i + 1, nodes)?);
    }
    Ok(PAlphaValue { value: det / v, u })
}
