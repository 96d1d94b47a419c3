//! Dense integer polynomials in a single variable `t`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Polynomial in `t` with arbitrary-precision integer coefficients,
/// stored densely with index = power of `t`.
///
/// Invariant: the highest-index coefficient is nonzero, except for the zero
/// polynomial which is the empty list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// Build from a coefficient list (index = power), trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Add `c * t^k` in place.
    pub fn add_monomial(&mut self, c: &BigInt, k: usize) {
        if c.is_zero() {
            return;
        }
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, BigInt::zero());
        }
        self.coeffs[k] += c;
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// gcd of the absolute values of the coefficients (zero for the zero
    /// polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Exact division by a scalar; panics if not exact.
    pub fn div_scalar(&self, s: &BigInt) -> IntPoly {
        assert!(!s.is_zero());
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(s);
                    assert!(r.is_zero(), "non-exact scalar division");
                    q
                })
                .collect(),
        }
    }

    /// Exact polynomial division; panics if the division is not exact.
    pub fn div_exact(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let dd = d.degree().unwrap();
        let nd = self.degree().unwrap();
        assert!(nd >= dd, "non-exact polynomial division");
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (dd..=nd).rev() {
            let c = std::mem::replace(&mut rem[k], BigInt::zero());
            if c.is_zero() {
                continue;
            }
            let (q, r) = c.div_rem(&lc);
            assert!(r.is_zero(), "non-exact polynomial division");
            for (i, dc) in d.coeffs.iter().enumerate().take(dd) {
                rem[k - dd + i] -= &q * dc;
            }
            quot[k - dd] = q;
        }
        assert!(
            rem.iter().all(Zero::is_zero),
            "non-exact polynomial division"
        );
        IntPoly::from_coeffs(quot)
    }

    /// Pseudo-remainder of `self` by `d`: the remainder of
    /// `lc(d)^(deg self - deg d + 1) * self` divided by `d`, which stays in
    /// integer coefficients.
    fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo_rem by zero");
        let nd = match self.degree() {
            Some(n) if n >= dd => n,
            _ => return self.clone(),
        };
        let lc = d.leading();
        let mut rem = self.coeffs.clone();
        for k in (dd..=nd).rev() {
            let c = std::mem::replace(&mut rem[k], BigInt::zero());
            for r in rem.iter_mut().take(k) {
                *r *= &lc;
            }
            for (i, dc) in d.coeffs.iter().enumerate().take(dd) {
                rem[k - dd + i] -= &c * dc;
            }
        }
        IntPoly::from_coeffs(rem)
    }

    /// Polynomial gcd via the primitive pseudo-remainder sequence. The result
    /// is primitive with positive leading coefficient (content is not
    /// tracked; callers that care about integer content handle it separately).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut result = IntPoly::one();
        for _ in 0..e {
            result = &result * self;
        }
        result
    }

    /// `(1 - t^k)`.
    pub fn one_minus_t_pow(k: usize) -> IntPoly {
        let mut p = IntPoly::one();
        p.add_monomial(&BigInt::from(-1), k);
        p
    }

    /// `(1 + t^k)`.
    pub fn one_plus_t_pow(k: usize) -> IntPoly {
        let mut p = IntPoly::one();
        p.add_monomial(&BigInt::one(), k);
        p
    }

    /// Multiplicity of the root `t = 1`.
    pub fn multiplicity_at_one(&self) -> usize {
        if self.is_zero() {
            return 0;
        }
        let one_minus_t = IntPoly::one_minus_t_pow(1);
        let mut p = self.clone();
        let mut m = 0;
        while p.eval_at_one().is_zero() {
            p = p.div_exact(&one_minus_t);
            m += 1;
        }
        m
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPoly {
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
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
