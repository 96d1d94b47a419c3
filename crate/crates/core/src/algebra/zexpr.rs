//! The sign-symbol ring: integer combinations of squarefree monomials in
//! symbols `a_2, a_3, ...` subject to `a_i^2 = 1` (with `a_0 = a_1 = 1`).
//!
//! Each symbol tracks the sign of a balanced q-number, so a product of
//! symbols multiplies by XOR of index sets. Elements of this ring are the
//! `z`-refined signatures `s_z(S^lambda)`: specializing every `a_i` to `+1`
//! gives the dimension, specializing to the actual bracket signs gives the
//! signature.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Monomial in the sign-symbol ring, encoded as a bitmask: bit `i` set means
/// the symbol `a_i` is present. Bits 0 and 1 are never set.
pub type SymbolMask = u64;

/// Element of `Z[a_2, a_3, ...] / (a_i^2 = 1)`.
///
/// Invariant: no stored zero coefficients; masks never contain bits 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ZExpr {
    terms: BTreeMap<SymbolMask, BigInt>,
}

/// Bitmask for a single symbol index, normalizing `a_0 = a_1 = 1`.
pub fn symbol_bit(index: u32) -> SymbolMask {
    assert!(index < 64, "symbol index out of range");
    if index < 2 {
        0
    } else {
        1 << index
    }
}

impl ZExpr {
    pub fn zero() -> ZExpr {
        ZExpr::default()
    }

    pub fn one() -> ZExpr {
        ZExpr::monomial(0)
    }

    /// The monomial with coefficient 1 and the given index-set mask.
    pub fn monomial(mask: SymbolMask) -> ZExpr {
        debug_assert_eq!(mask & 0b11, 0);
        let mut terms = BTreeMap::new();
        terms.insert(mask, BigInt::one());
        ZExpr { terms }
    }

    /// Monomial `prod a_i` over the given indices (0 and 1 drop out, repeated
    /// indices cancel in pairs).
    pub fn monomial_from_indices<I: IntoIterator<Item = u32>>(indices: I) -> ZExpr {
        let mut mask = 0;
        for i in indices {
            mask ^= symbol_bit(i);
        }
        ZExpr::monomial(mask)
    }

    pub fn from_terms<I: IntoIterator<Item = (SymbolMask, BigInt)>>(iter: I) -> ZExpr {
        let mut e = ZExpr::zero();
        for (mask, c) in iter {
            e.add_term(mask, &c);
        }
        e
    }

    pub fn add_term(&mut self, mask: SymbolMask, c: &BigInt) {
        debug_assert_eq!(mask & 0b11, 0);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mask).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order (ascending mask).
    pub fn terms(&self) -> impl Iterator<Item = (SymbolMask, &BigInt)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Indices of all symbols that occur.
    pub fn support(&self) -> Vec<u32> {
        let mut all: SymbolMask = 0;
        for &m in self.terms.keys() {
            all |= m;
        }
        (2..64).filter(|&i| all & (1 << i) != 0).collect()
    }

    /// Specialization at `z = 1`: the sum of coefficients (the dimension when
    /// applied to a signature element).
    pub fn sum_of_coeffs(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitute `a_i -> signs[i]`. Every occurring index must be assigned.
    pub fn eval(&self, signs: &BTreeMap<u32, i8>) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (&mask, c) in &self.terms {
            let mut sign = 1i8;
            for i in 2..64 {
                if mask & (1u64 << i) != 0 {
                    let s = signs.get(&i).ok_or(Error::MissingSign { index: i })?;
                    debug_assert!(*s == 1 || *s == -1);
                    sign *= s;
                }
            }
            if sign > 0 {
                total += c;
            } else {
                total -= c;
            }
        }
        Ok(total)
    }

    /// Multiply by a single monomial (a unit of the ring).
    pub fn mul_monomial(&self, mask: SymbolMask) -> ZExpr {
        debug_assert_eq!(mask & 0b11, 0);
        ZExpr {
            terms: self
                .terms
                .iter()
                .map(|(&m, c)| (m ^ mask, c.clone()))
                .collect(),
        }
    }

    /// Indices of the given mask, lowest first.
    pub fn mask_indices(mask: SymbolMask) -> Vec<u32> {
        (2..64).filter(|&i| mask & (1u64 << i) != 0).collect()
    }
}

impl Add for &ZExpr {
    type Output = ZExpr;
    fn add(self, rhs: &ZExpr) -> ZExpr {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, c);
        }
        out
    }
}

impl Sub for &ZExpr {
    type Output = ZExpr;
    fn sub(self, rhs: &ZExpr) -> ZExpr {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(m, &-c);
        }
        out
    }
}

impl Mul for &ZExpr {
    type Output = ZExpr;
    fn mul(self, rhs: &ZExpr) -> ZExpr {
        let mut out = ZExpr::zero();
        for (&m1, c1) in &self.terms {
            for (&m2, c2) in &rhs.terms {
                out.add_term(m1 ^ m2, &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &ZExpr {
    type Output = ZExpr;
    fn neg(self) -> ZExpr {
        ZExpr {
            terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }
}

impl fmt::Display for ZExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&mask, c) in &self.terms {
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
            let indices = ZExpr::mask_indices(mask);
            if indices.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                let names: Vec<String> = indices.iter().map(|i| format!("a{i}")).collect();
                write!(f, "{}", names.join("*"))?;
            }
        }
        Ok(())
    }
}
