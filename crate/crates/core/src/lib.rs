//! Exact computation of signatures of invariant Hermitian forms on type-A
//! Hecke-algebra Specht modules, and of signature characters of lowest-weight
//! modules over the type-A rational Cherednik algebra.
//!
//! The crate is organised around five subsystems:
//!
//! - [`algebra`]: exact scalars, integer polynomials, rational functions in
//!   `t`, and the sign-symbol ring `Z[a_2, a_3, ...]` with `a_i^2 = 1`.
//! - [`tableaux`]: partitions, standard Young tableaux, content vectors and
//!   permutation statistics.
//! - [`hecke`]: the signature `s(S^lambda(q^2))` for `|q| = 1`, both as an
//!   element of the sign-symbol ring and evaluated at exact rational
//!   parameters, with a floating-point seminormal-form oracle.
//! - [`cherednik`]: the signature character `ch_s(M_c(lambda))` as a truncated
//!   series and as an exact rational function `p(t)/(1-t)^n`, the asymptotic
//!   signature `p(1)`, and the bridge to the Hecke signature.
//! - [`limit`]: the `c -> -infinity` limit of the signature character, the
//!   sign-representation closed forms, and the stable limit `f(a, t)` with its
//!   coefficient polynomials.
//!
//! All kernel arithmetic is exact (`BigInt` / `BigRational`); floating point
//! appears only in the two numerical oracles that cross-check the exact path.

pub mod algebra;
pub mod cherednik;
pub mod hecke;
pub mod limit;
pub mod tableaux;

use num_rational::BigRational;
use std::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A rational function was constructed with a zero denominator.
    ZeroDenominator,
    /// A Taylor expansion was requested around `t = 0` but the denominator
    /// vanishes there.
    ZeroConstantTerm,
    /// A series coefficient came out non-integral.
    NonIntegerSeries { index: usize },
    /// The parameter hits an excluded point: `c * m` is an integer.
    DegenerateParameter { c: BigRational, m: u64 },
    /// `c = 0` is not a valid Cherednik parameter.
    ZeroParameter,
    /// `c > 0`: compute with the conjugate shape at `-c` instead.
    PositiveParameter { c: BigRational },
    /// A sign-symbol evaluation was missing an assignment.
    MissingSign { index: u32 },
    /// Mismatched lengths between a permutation and a content vector.
    LengthMismatch { expected: usize, got: usize },
    /// An argument fell outside its documented range.
    OutOfRange { what: &'static str },
    /// A numerical oracle could not certify a sign at the requested precision.
    InsufficientPrecision { log2_abs: f64, required_log2: f64 },
    /// Two internal computation routes disagreed.
    InternalConsistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "zero denominator"),
            Error::ZeroConstantTerm => {
                write!(f, "denominator vanishes at t = 0; no Taylor expansion")
            }
            Error::NonIntegerSeries { index } => {
                write!(f, "series coefficient at t^{index} is not an integer")
            }
            Error::DegenerateParameter { c, m } => {
                write!(
                    f,
                    "degenerate parameter c = {c} (excluded point r/m, m={m})"
                )
            }
            Error::ZeroParameter => write!(f, "parameter c must be nonzero"),
            Error::PositiveParameter { c } => write!(
                f,
                "parameter c = {c} is positive; use the conjugate shape with c' = -c"
            ),
            Error::MissingSign { index } => {
                write!(f, "no sign assigned to symbol a{index}")
            }
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected}, got {got}")
            }
            Error::OutOfRange { what } => write!(f, "argument out of range: {what}"),
            Error::InsufficientPrecision {
                log2_abs,
                required_log2,
            } => write!(
                f,
                "insufficient precision / near-degenerate: |norm| ~ 2^{log2_abs:.1}, \
                 margin requires 2^{required_log2:.1}"
            ),
            Error::InternalConsistency(msg) => {
                write!(f, "internal consistency failure: {msg}")
            }
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
