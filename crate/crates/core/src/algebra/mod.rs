//! Exact scalar, polynomial, rational-function, and sign-symbol arithmetic.
//!
//! Everything here is exact: integers are arbitrary precision and rational
//! functions are kept in a canonical reduced form so that equality of values
//! is equality of representations.

mod poly;
mod ratfun;
pub mod zexpr;

pub use poly::IntPoly;
pub use ratfun::RatFun;
pub use zexpr::ZExpr;

use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Exact rational scalar. Numerator and denominator are arbitrary-precision
/// integers; the value is always stored reduced with positive denominator.
pub type Rational = BigRational;

/// Greatest integer `<= x`.
pub fn rat_floor(x: &Rational) -> BigInt {
    x.floor().to_integer()
}

/// `true` iff `x` is an integer.
pub fn rat_is_integer(x: &Rational) -> bool {
    x.is_integer()
}

/// Parse a rational from `"p/q"` or `"p"` text.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_s.parse().map_err(|_| Error::OutOfRange {
        what: "rational numerator",
    })?;
    let den: BigInt = den_s.parse().map_err(|_| Error::OutOfRange {
        what: "rational denominator",
    })?;
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}
