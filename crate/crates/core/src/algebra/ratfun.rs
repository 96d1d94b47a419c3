//! Rational functions in `t` with exact integer coefficients.

use super::poly::IntPoly;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Reduced rational function `numerator / denominator`.
///
/// Invariants: the denominator is nonzero with positive leading coefficient,
/// the polynomial gcd of numerator and denominator is trivial, and the
/// integer contents of numerator and denominator are coprime.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: IntPoly,
    den: IntPoly,
}

impl RatFun {
    /// Reduce `num / den` to canonical form. Errors on a zero denominator.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<RatFun> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFun {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) && g.leading().is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar(&c);
            den = den.div_scalar(&c);
        }
        if den.leading().is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(RatFun { num, den })
    }

    pub fn zero() -> RatFun {
        RatFun {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> RatFun {
        RatFun {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    pub fn from_poly(p: IntPoly) -> RatFun {
        RatFun {
            num: p,
            den: IntPoly::one(),
        }
    }

    /// `p(t) / (1 - t)^n`, reduced.
    pub fn over_one_minus_t_pow(num: IntPoly, n: usize) -> RatFun {
        RatFun::new(num, IntPoly::one_minus_t_pow(1).pow(n)).expect("nonzero denominator")
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<RatFun> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: usize) -> RatFun {
        let mut r = RatFun::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    /// First `n_terms` Taylor coefficients at `t = 0`, exact.
    ///
    /// Errors if the denominator vanishes at `t = 0` or if a coefficient is
    /// not an integer (cannot happen when the denominator's constant term is
    /// a unit, which holds for every value produced by this crate).
    pub fn series_expand(&self, n_terms: usize) -> Result<Vec<BigInt>> {
        let d0 = self.den.coeff(0);
        if d0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut out = Vec::with_capacity(n_terms);
        let mut acc: Vec<BigRational> = Vec::with_capacity(n_terms);
        for k in 0..n_terms {
            let mut s = BigRational::from(self.num.coeff(k));
            for j in 1..=k {
                let dj = self.den.coeff(j);
                if dj.is_zero() {
                    continue;
                }
                s -= BigRational::from(dj) * &acc[k - j];
            }
            let ck = s / BigRational::from(d0.clone());
            if !ck.is_integer() {
                return Err(Error::NonIntegerSeries { index: k });
            }
            out.push(ck.to_integer());
            acc.push(ck);
        }
        Ok(out)
    }

    /// Value of `self * (1-t)^n` at `t = 1`, provided that product is a
    /// polynomial (i.e. the reduced denominator divides `(1-t)^n`).
    pub fn asymptotic_at_one(&self, n: usize) -> Result<BigInt> {
        let k = self.den.multiplicity_at_one();
        let unit = self.den.div_exact(&IntPoly::one_minus_t_pow(1).pow(k));
        if unit.degree() != Some(0) {
            return Err(Error::InternalConsistency(format!(
                "denominator {} does not divide (1-t)^{}",
                self.den, n
            )));
        }
        if k > n {
            return Err(Error::InternalConsistency(format!(
                "pole of order {} at t=1 exceeds (1-t)^{}",
                k, n
            )));
        }
        if k < n {
            // self * (1-t)^n still vanishes at t = 1
            return Ok(BigInt::zero());
        }
        let (q, r) = self.num.eval_at_one().div_rem(&unit.leading());
        if !r.is_zero() {
            return Err(Error::InternalConsistency(
                "non-integral asymptotic value".into(),
            ));
        }
        Ok(q)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFun::new(num, den).expect("nonzero denominator")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RatFun::new(num, den).expect("nonzero denominator")
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one_poly() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl IntPoly {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.leading().is_one()
    }
}
