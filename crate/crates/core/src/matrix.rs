//! Square matrices over exact entries and fraction-free determinants.
//!
//! Rational matrices clear denominators row by row and run Bareiss
//! elimination over the integers; polynomial matrices use cofactor expansion
//! up to order 6 and Bareiss over the polynomial ring (with exact division)
//! above that. Cofactor expansion for small orders avoids polynomial
//! divisions, Bareiss keeps intermediate entries in the ring for large ones.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::multipoly::MPoly;
use crate::poly::Poly;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix<E> {
    order: usize,
    entries: Vec<E>,
}

impl<E: Clone> SquareMatrix<E> {
    /// Build from rows; every row must have length equal to the row count.
    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidArgument("matrix order must be positive".into()));
        }
        if rows.iter().any(|r| r.len() != order) {
            return Err(Error::InvalidArgument("matrix is not square".into()));
        }
        Ok(SquareMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                entries.push(f(i, j));
            }
        }
        SquareMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.order + j]
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }
}

impl<E: DetEntry> SquareMatrix<E> {
    /// Exact determinant, dispatched on the entry type.
    pub fn det(&self) -> E {
        E::det(self)
    }
}

/// Ring operations the determinant routines need, expressed over references
/// so that arity-carrying types (multivariate polynomials) can participate.
pub trait RingOps: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn is_zero_el(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// Division that is exact by the caller's contract.
    fn exact_div_ref(&self, other: &Self) -> Self;
}

impl RingOps for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn is_zero_el(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self.clone()
    }
    fn exact_div_ref(&self, other: &Self) -> Self {
        self / other
    }
}

impl RingOps for Poly<Rational> {
    fn zero_like(&self) -> Self {
        Poly::new(vec![])
    }
    fn is_zero_el(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self.clone()
    }
    fn exact_div_ref(&self, other: &Self) -> Self {
        self.exact_div(other)
    }
}

impl RingOps for MPoly<Rational> {
    fn zero_like(&self) -> Self {
        MPoly::zero(self.arity())
    }
    fn is_zero_el(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn exact_div_ref(&self, other: &Self) -> Self {
        self.exact_div(other)
    }
}

/// Entry types that know how to compute their own exact determinant.
pub trait DetEntry: RingOps {
    fn det(m: &SquareMatrix<Self>) -> Self;
}

impl DetEntry for Rational {
    fn det(m: &SquareMatrix<Rational>) -> Rational {
        det_rational(m)
    }
}

const COFACTOR_MAX_ORDER: usize = 6;

impl DetEntry for Poly<Rational> {
    fn det(m: &SquareMatrix<Self>) -> Self {
        if m.order() <= COFACTOR_MAX_ORDER {
            det_cofactor(m)
        } else {
            det_bareiss(m)
        }
    }
}

impl DetEntry for MPoly<Rational> {
    fn det(m: &SquareMatrix<Self>) -> Self {
        if m.order() <= COFACTOR_MAX_ORDER {
            det_cofactor(m)
        } else {
            det_bareiss(m)
        }
    }
}

/// Clear denominators row by row, then run integer Bareiss elimination.
fn det_rational(m: &SquareMatrix<Rational>) -> Rational {
    let n = m.order();
    let mut scale = BigInt::one();
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut lcm = BigInt::one();
        for e in m.row(i) {
            lcm = lcm.lcm(e.denom());
        }
        rows.push(
            m.row(i)
                .iter()
                .map(|e| e.numer() * (&lcm / e.denom()))
                .collect(),
        );
        scale *= lcm;
    }
    Rational::new(det_bareiss_int(rows), scale)
}

fn det_bareiss_int(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Cofactor expansion along the first row.
pub fn det_cofactor<E: RingOps>(m: &SquareMatrix<E>) -> E {
    fn minor_det<E: RingOps>(order: usize, idx: &[usize], m: &SquareMatrix<E>, row: usize) -> E {
        if order == 1 {
            return m.get(row, idx[0]).clone();
        }
        let mut acc: Option<E> = None;
        for (pos, &col) in idx.iter().enumerate() {
            let e = m.get(row, col);
            if e.is_zero_el() && acc.is_some() {
                continue;
            }
            let rest: Vec<usize> = idx
                .iter()
                .copied()
                .filter(|&c| c != col)
                .collect();
            let sub = minor_det(order - 1, &rest, m, row + 1);
            let term = e.mul_ref(&sub);
            let term = if pos % 2 == 0 { term } else { term.neg_ref() };
            acc = Some(match acc {
                None => term,
                Some(a) => a.add_ref(&term),
            });
        }
        acc.expect("cofactor expansion of empty row")
    }
    let idx: Vec<usize> = (0..m.order()).collect();
    minor_det(m.order(), &idx, m, 0)
}

/// Fraction-free Bareiss elimination over an integral domain with exact
/// division of products.
pub fn det_bareiss<E: RingOps>(m: &SquareMatrix<E>) -> E {
    let n = m.order();
    let mut a: Vec<Vec<E>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    if n == 1 {
        return a[0][0].clone();
    }
    let mut sign = false;
    let mut prev: Option<E> = None;
    for k in 0..n - 1 {
        if a[k][k].is_zero_el() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero_el()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = !sign;
                }
                None => return a[0][0].zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[k][k]
                    .mul_ref(&a[i][j])
                    .sub_ref(&a[i][k].mul_ref(&a[k][j]));
                a[i][j] = match &prev {
                    None => t,
                    Some(p) => t.exact_div_ref(p),
                };
            }
            a[i][k] = a[i][k].zero_like();
        }
        prev = Some(a[k][k].clone());
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        d.neg_ref()
    } else {
        d
    }
}

/// k-th elementary symmetric function of the given values; `sigma_0 = 1`.
pub fn elem_sym(k: usize, values: &[Rational]) -> Result<Rational> {
    if k > values.len() {
        return Err(Error::SymmetricIndexOutOfRange {
            k,
            len: values.len(),
        });
    }
    // e_j built by the one-pass recurrence over (1 + v t) products
    let mut e = vec![Rational::zero(); k + 1];
    e[0] = Rational::one();
    for v in values {
        for j in (1..=k).rev() {
            let add = v * &e[j - 1];
            e[j] = &e[j] + &add;
        }
    }
    Ok(e[k].clone())
}

/// Vandermonde product `prod_{i<j} (t_j - t_i)`; 1 for fewer than two nodes,
/// 0 exactly when two nodes coincide.
pub fn vandermonde(nodes: &[Rational]) -> Rational {
    let mut acc = Rational::one();
    for j in 1..nodes.len() {
        for i in 0..j {
            acc *= &nodes[j] - &nodes[i];
        }
    }
    acc
}
