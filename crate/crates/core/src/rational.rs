//! The exact scalar of the crate and small combinatorial helpers.
//!
//! Every quantity in the library is a ratio of arbitrary-precision integers,
//! kept in lowest terms with a positive denominator. The canonical text form
//! is `p/q`, or just `p` when the denominator is one; [`parse_rational`] and
//! [`format_rational`] round-trip that form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar: arbitrary-precision numerator and denominator,
/// always reduced, denominator always positive.
pub type Rational = num_rational::BigRational;

/// Rational from an integer pair, reduced on construction. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parse `p/q` or `p` with optional sign, rejecting a zero denominator.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid integer `{t}` in rational `{s}`")))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let denom = parse_int(q)?;
            if denom.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(parse_int(p)?, denom))
        }
    }
}

/// Render in the canonical `p/q` (or `p`) form.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// `n!` as a rational.
pub fn factorial_rat(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

/// Binomial coefficient `C(n, k)` as a rational; zero for `k > n`.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Rational::new(num, den)
}

/// Rising factorial (Pochhammer symbol) `(a)_k = a (a+1) ... (a+k-1)`.
pub fn rising(a: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= a + rat_int(i as i64);
    }
    acc
}

/// `r^k` for a non-negative integer exponent.
pub fn pow_u(r: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut base = r.clone();
    let mut e = k;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

/// `(-1)^k` as a rational.
pub fn neg_one_pow(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Decimal rendering of a rational, used only for the convergence tables.
pub fn to_f64(r: &Rational) -> f64 {
    let digits = 30u32;
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = r.numer() * &scale / r.denom();
    let (sign, mag) = (scaled.is_negative(), scaled.magnitude().clone());
    let mut v = 0.0f64;
    for d in mag.to_radix_be(10) {
        v = v * 10.0 + d as f64;
    }
    v /= 10f64.powi(digits as i32);
    if sign {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "5", "-3", "1/2", "-7/36", "22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert_eq!(parse_rational("-4/-6").unwrap(), rat(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/2").is_err());
    }

    #[test]
    fn combinatorial_helpers() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(binomial(4, 2), rat_int(6));
        assert_eq!(binomial(3, 5), rat_int(0));
        assert_eq!(rising(&rat(1, 2), 2), rat(3, 4)); // (1/2)(3/2)
        assert_eq!(rising(&rat_int(3), 0), rat_int(1));
        assert_eq!(pow_u(&rat(1, 2), 3), rat(1, 8));
        assert_eq!(neg_one_pow(3), rat_int(-1));
    }

    #[test]
    fn decimal_rendering() {
        assert!((to_f64(&rat(2, 3)) - 0.6666666666).abs() < 1e-9);
        assert!((to_f64(&rat(-1, 4)) + 0.25).abs() < 1e-12);
    }
}
