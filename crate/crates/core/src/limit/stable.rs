//! The stable limit `f(a, t)` of the single-column limit character and its
//! coefficient polynomials `P_r`.
//!
//! ```text
//! f(a, t) = prod_{j>=1} (1+t^j)/(1-t^j)
//!           * ( 1 + sum_{i>=1} (-1)^i ([i+1]^a - [i]^a) ),   [i] = (1-t^i)/(1-t),
//! ```
//!
//! where the coefficient of `t^r` is a polynomial `P_r(a)` with rational
//! coefficients; specializing `a = n` recovers the coefficient of `t^r` in
//! the single-column limit character whenever `n >= r + 1`. The alternating
//! sum truncates exactly: `[i+1]^a - [i]^a` has `t`-adic valuation `i`.

use crate::algebra::Rational;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Polynomial in the symbolic rank variable `a` with exact rational
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicPoly {
    coeffs: Vec<Rational>,
}

impl SymbolicPoly {
    pub fn zero() -> SymbolicPoly {
        SymbolicPoly { coeffs: Vec::new() }
    }

    pub fn one() -> SymbolicPoly {
        SymbolicPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> SymbolicPoly {
        SymbolicPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> SymbolicPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        SymbolicPoly { coeffs }
    }

    /// Coefficients, index = power of `a`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, a: &Rational) -> Rational {
        let mut value = Rational::zero();
        for c in self.coeffs.iter().rev() {
            value = value * a + c;
        }
        value
    }

    /// Falling-factorial binomial `binom(a, k) = a(a-1)...(a-k+1)/k!` as a
    /// polynomial in `a`.
    pub fn binomial(k: usize) -> SymbolicPoly {
        let mut p = SymbolicPoly::one();
        for i in 0..k {
            let shift = SymbolicPoly::from_coeffs(vec![
                Rational::from(BigInt::from(-(i as i64))),
                Rational::one(),
            ]);
            p = &p * &shift;
        }
        let kfact: BigInt = (1..=k as u64).map(BigInt::from).product();
        p.scale(&Rational::new(BigInt::one(), kfact))
    }

    /// Rising-factorial binomial `binom(a+k-1, k) = a(a+1)...(a+k-1)/k!`.
    pub fn rising_binomial(k: usize) -> SymbolicPoly {
        let mut p = SymbolicPoly::one();
        for i in 0..k {
            let shift = SymbolicPoly::from_coeffs(vec![
                Rational::from(BigInt::from(i as i64)),
                Rational::one(),
            ]);
            p = &p * &shift;
        }
        let kfact: BigInt = (1..=k as u64).map(BigInt::from).product();
        p.scale(&Rational::new(BigInt::one(), kfact))
    }

    pub fn scale(&self, s: &Rational) -> SymbolicPoly {
        SymbolicPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }
}

impl Add for &SymbolicPoly {
    type Output = SymbolicPoly;
    fn add(self, rhs: &SymbolicPoly) -> SymbolicPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &Vec<Rational>, i: usize| v.get(i).cloned().unwrap_or_else(Rational::zero);
        SymbolicPoly::from_coeffs(
            (0..n)
                .map(|i| get(&self.coeffs, i) + get(&rhs.coeffs, i))
                .collect(),
        )
    }
}

impl Sub for &SymbolicPoly {
    type Output = SymbolicPoly;
    fn sub(self, rhs: &SymbolicPoly) -> SymbolicPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &Vec<Rational>, i: usize| v.get(i).cloned().unwrap_or_else(Rational::zero);
        SymbolicPoly::from_coeffs(
            (0..n)
                .map(|i| get(&self.coeffs, i) - get(&rhs.coeffs, i))
                .collect(),
        )
    }
}

impl Mul for &SymbolicPoly {
    type Output = SymbolicPoly;
    fn mul(self, rhs: &SymbolicPoly) -> SymbolicPoly {
        if self.is_zero() || rhs.is_zero() {
            return SymbolicPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        SymbolicPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for SymbolicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        write!(f, "a")?;
                    } else {
                        write!(f, "a^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

// ---- integer series helpers (truncated, index = power of t) ----

fn series_mul(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Truncated series of `prod_{j=1}^{len-1} (1+t^j)/(1-t^j)`.
fn prefactor_series(len: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); len];
    c[0] = BigInt::one();
    for j in 1..len {
        // multiply by (1 + t^j)
        for i in (j..len).rev() {
            let lower = c[i - j].clone();
            c[i] += lower;
        }
        // divide by (1 - t^j)
        for i in j..len {
            let lower = c[i - j].clone();
            c[i] += lower;
        }
    }
    c
}

/// `[i]^a` truncated: `[i] = 1 + t + ... + t^{i-1}`.
fn bracket_pow(i: usize, a: u32, len: usize) -> Vec<BigInt> {
    let mut base = vec![BigInt::zero(); len];
    for k in 0..i.min(len) {
        base[k] = BigInt::one();
    }
    let mut out = vec![BigInt::zero(); len];
    out[0] = BigInt::one();
    for _ in 0..a {
        out = series_mul(&out, &base, len);
    }
    out
}

/// First `n_terms` coefficients of the stable limit `f(a, t)` at integer
/// rank `a >= 0` (exact; the values are integers, returned as rationals to
/// match the symbolic route).
pub fn stable_series(a: u32, n_terms: usize) -> Vec<Rational> {
    if n_terms == 0 {
        return Vec::new();
    }
    let len = n_terms;
    // 1 + sum_{i=1}^{len-1} (-1)^i ([i+1]^a - [i]^a); terms with i >= len
    // have valuation >= len and cannot contribute
    let mut sum = vec![BigInt::zero(); len];
    sum[0] = BigInt::one();
    for i in 1..len {
        let hi = bracket_pow(i + 1, a, len);
        let lo = bracket_pow(i, a, len);
        for k in 0..len {
            let diff = &hi[k] - &lo[k];
            if i % 2 == 0 {
                sum[k] += diff;
            } else {
                sum[k] -= diff;
            }
        }
    }
    let pref = prefactor_series(len);
    series_mul(&pref, &sum, len)
        .into_iter()
        .map(Rational::from)
        .collect()
}

// ---- symbolic series: coefficients are polynomials in the rank ----

fn sym_series_mul(a: &[SymbolicPoly], b: &[SymbolicPoly], len: usize) -> Vec<SymbolicPoly> {
    let mut out = vec![SymbolicPoly::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

/// `[i]^a = (1 - t^i)^a (1 - t)^{-a}` with symbolic exponent, truncated.
fn sym_bracket_pow(i: usize, len: usize) -> Vec<SymbolicPoly> {
    // (1 - t^i)^a = sum_k binom(a, k) (-1)^k t^{ik}
    let mut p1 = vec![SymbolicPoly::zero(); len];
    let mut k = 0usize;
    while i * k < len {
        let mut b = SymbolicPoly::binomial(k);
        if k % 2 == 1 {
            b = b.scale(&-Rational::one());
        }
        p1[i * k] = b;
        k += 1;
    }
    // (1 - t)^{-a} = sum_k binom(a+k-1, k) t^k
    let p2: Vec<SymbolicPoly> = (0..len).map(SymbolicPoly::rising_binomial).collect();
    sym_series_mul(&p1, &p2, len)
}

/// The coefficient polynomial `P_r`: the coefficient of `t^r` in `f(a, t)`
/// as an exact polynomial in the symbolic rank `a`.
pub fn stable_poly(r: usize) -> SymbolicPoly {
    let len = r + 1;
    let mut sum = vec![SymbolicPoly::zero(); len];
    sum[0] = SymbolicPoly::one();
    for i in 1..len {
        let hi = sym_bracket_pow(i + 1, len);
        let lo = sym_bracket_pow(i, len);
        for k in 0..len {
            let diff = &hi[k] - &lo[k];
            sum[k] = if i % 2 == 0 {
                &sum[k] + &diff
            } else {
                &sum[k] - &diff
            };
        }
    }
    let pref: Vec<SymbolicPoly> = prefactor_series(len)
        .into_iter()
        .map(|c| SymbolicPoly::constant(Rational::from(c)))
        .collect();
    let product = sym_series_mul(&pref, &sum, len);
    product
        .into_iter()
        .nth(r)
        .expect("requested coefficient within truncation")
}

/// The `s = +1` analogue telescopes to the full Hilbert series: check that
/// `1 + sum_{i=1}^{n_terms} ([i+1]^a - [i]^a)` agrees with `(1-t)^{-a}`
/// through `n_terms` coefficients.
pub fn hilbert_check(a: u32, n_terms: usize) -> Result<bool> {
    if a == 0 {
        return Err(Error::OutOfRange {
            what: "hilbert check needs a >= 1",
        });
    }
    let len = n_terms + 1;
    let mut sum = vec![BigInt::zero(); len];
    sum[0] = BigInt::one();
    for i in 1..=n_terms {
        let hi = bracket_pow(i + 1, a, len);
        let lo = bracket_pow(i, a, len);
        for k in 0..len {
            sum[k] += &hi[k] - &lo[k];
        }
    }
    // binomial series of (1-t)^{-a}
    let mut expected = vec![BigInt::zero(); len];
    let mut binom = BigInt::one();
    for (k, e) in expected.iter_mut().enumerate() {
        if k > 0 {
            binom = &binom * BigInt::from(a as usize + k - 1) / BigInt::from(k);
        }
        *e = binom.clone();
    }
    Ok(sum == expected)
}
