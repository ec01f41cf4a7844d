//! Exact-arithmetic engine for determinant identities of orthogonal
//! polynomials: Slater, symmetrized Slater and Wronskian determinants, Hankel
//! determinants of shifted-moment polynomials, Selberg-type integrals, Jensen
//! polynomials and the classical Hermite/Laguerre/Gegenbauer closed forms.
//!
//! All arithmetic is over arbitrary-precision rationals; identities are
//! checked exactly, with zero tolerance. The polynomial and determinant
//! substrate is generic over its scalar; the concrete aliases below fix the
//! rational instantiation the rest of the crate works with.

pub mod dets;
pub mod error;
pub mod matrix;
pub mod measures;
pub mod multipoly;
pub mod opoly;
pub mod poly;
pub mod rational;
pub mod verify;

pub use error::{Error, Result};
pub use rational::{format_rational, parse_rational, Rational};

/// Dense univariate polynomial over the exact rational scalar.
pub type UniPoly = poly::Poly<Rational>;

/// Sparse multivariate polynomial over the exact rational scalar.
pub type MultiPoly = multipoly::MPoly<Rational>;

/// Square matrix with exact rational entries.
pub type QMatrix = matrix::SquareMatrix<Rational>;

pub use measures::{MeasureSpec, NodeSet};
