//! Machine-readable output types.
//!
//! JSON is the stable contract surface: shapes as integer arrays, rationals
//! as `"p/q"` strings, polynomials as coefficient arrays (index = power),
//! rational functions as `{numerator, denominator}` where the denominator is
//! either a coefficient array or the canonical string `"(1-t)^n"`, and
//! sign-symbol expressions as arrays of `{indices, coeff}` terms. Every
//! output type parses back to the value it was formatted from.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};
use sigchar_core::algebra::{IntPoly, RatFun, ZExpr};
use sigchar_core::Error;

/// One term of a sign-symbol expression.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZTerm {
    pub indices: Vec<u32>,
    pub coeff: i64,
}

pub fn zexpr_to_terms(e: &ZExpr) -> Result<Vec<ZTerm>, Error> {
    e.terms()
        .map(|(mask, c)| {
            Ok(ZTerm {
                indices: ZExpr::mask_indices(mask),
                coeff: c.to_i64().ok_or(Error::OutOfRange {
                    what: "coefficient exceeds i64",
                })?,
            })
        })
        .collect()
}

#[cfg_attr(not(test), allow(dead_code))] // parse side of the round-trip contract
pub fn zexpr_from_terms(terms: &[ZTerm]) -> ZExpr {
    let mut e = ZExpr::zero();
    for t in terms {
        let mut mask = 0u64;
        for &i in &t.indices {
            mask ^= sigchar_core::algebra::zexpr::symbol_bit(i);
        }
        e.add_term(mask, &BigInt::from(t.coeff));
    }
    e
}

/// Rational function with the denominator in array or canonical-power form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFunJson {
    pub numerator: Vec<i64>,
    pub denominator: DenomJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DenomJson {
    Canonical(String),
    Coeffs(Vec<i64>),
}

fn poly_to_i64(p: &IntPoly) -> Result<Vec<i64>, Error> {
    p.coeffs()
        .iter()
        .map(|c| {
            c.to_i64().ok_or(Error::OutOfRange {
                what: "coefficient exceeds i64",
            })
        })
        .collect()
}

/// Express `r` with the denominator written as `(1-t)^k` when it is (up to
/// the canonical sign) a power of `1 - t`; the numerator sign is adjusted so
/// the displayed denominator has constant term `+1`.
pub fn ratfun_to_json(r: &RatFun) -> Result<RatFunJson, Error> {
    let den = r.denominator();
    let k = den.multiplicity_at_one();
    let unit = den.div_exact(&IntPoly::one_minus_t_pow(1).pow(k));
    if k >= 1 && unit.degree() == Some(0) && unit.leading().abs().is_one() {
        let num = if unit.leading().is_negative() {
            -r.numerator()
        } else {
            r.numerator().clone()
        };
        return Ok(RatFunJson {
            numerator: poly_to_i64(&num)?,
            denominator: DenomJson::Canonical(format!("(1-t)^{k}")),
        });
    }
    // orient general denominators by a positive constant term for display;
    // parsing re-canonicalizes, so the round-trip is unaffected
    if den.coeff(0).is_negative() {
        return Ok(RatFunJson {
            numerator: poly_to_i64(&-r.numerator())?,
            denominator: DenomJson::Coeffs(poly_to_i64(&-den)?),
        });
    }
    Ok(RatFunJson {
        numerator: poly_to_i64(r.numerator())?,
        denominator: DenomJson::Coeffs(poly_to_i64(den)?),
    })
}

#[cfg_attr(not(test), allow(dead_code))] // parse side of the round-trip contract
pub fn ratfun_from_json(j: &RatFunJson) -> Result<RatFun, Error> {
    let num = IntPoly::from_i64(&j.numerator);
    let den = match &j.denominator {
        DenomJson::Coeffs(c) => IntPoly::from_i64(c),
        DenomJson::Canonical(s) => {
            let k: usize = s
                .strip_prefix("(1-t)^")
                .and_then(|e| e.parse().ok())
                .ok_or(Error::OutOfRange {
                    what: "unparseable canonical denominator",
                })?;
            IntPoly::one_minus_t_pow(1).pow(k)
        }
    };
    RatFun::new(num, den)
}

/// Human-readable rational function, preferring the `(1-t)^k` form.
pub fn ratfun_to_text(r: &RatFun) -> String {
    match ratfun_to_json(r) {
        Ok(RatFunJson {
            denominator: DenomJson::Canonical(c),
            ..
        }) => {
            let k = c.strip_prefix("(1-t)^").unwrap().parse::<usize>().unwrap();
            let unit = r
                .denominator()
                .div_exact(&IntPoly::one_minus_t_pow(1).pow(k));
            let num = if unit.leading().is_negative() {
                -r.numerator()
            } else {
                r.numerator().clone()
            };
            format!("({num}) / {c}")
        }
        _ => {
            if r.denominator().coeff(0).is_negative() {
                format!("({}) / ({})", -r.numerator(), -r.denominator())
            } else {
                format!("({}) / ({})", r.numerator(), r.denominator())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn ratfun_round_trip() {
        let r = RatFun::over_one_minus_t_pow(IntPoly::from_i64(&[3, -2, -2, -2]), 4);
        let j = ratfun_to_json(&r).unwrap();
        assert_eq!(j.numerator, vec![3, -2, -2, -2]);
        assert_eq!(j.denominator, DenomJson::Canonical("(1-t)^4".into()));
        assert_eq!(ratfun_from_json(&j).unwrap(), r);

        let r = RatFun::new(IntPoly::one(), IntPoly::one_plus_t_pow(2)).unwrap();
        let j = ratfun_to_json(&r).unwrap();
        assert_eq!(j.numerator, vec![1]);
        assert_eq!(j.denominator, DenomJson::Coeffs(vec![1, 0, 1]));
        assert_eq!(ratfun_from_json(&j).unwrap(), r);
    }

    #[test]
    fn general_denominators_display_with_positive_constant() {
        // 2 / ((1+t^3)(1-t)/(1+t)) canonicalizes with negative constant; the
        // JSON form flips the orientation and still parses back equal
        let den = IntPoly::from_i64(&[-1, 2, -2, 1]);
        let r = RatFun::new(IntPoly::from_i64(&[-2]), den).unwrap();
        let j = ratfun_to_json(&r).unwrap();
        assert_eq!(j.numerator, vec![2]);
        assert_eq!(j.denominator, DenomJson::Coeffs(vec![1, -2, 2, -1]));
        assert_eq!(ratfun_from_json(&j).unwrap(), r);
    }

    #[test]
    fn odd_power_sign_is_absorbed() {
        // 1/(1-t)^3 reduces with denominator (t-1)^3; the JSON form restores
        // positive orientation
        let r = RatFun::over_one_minus_t_pow(IntPoly::one(), 3);
        let j = ratfun_to_json(&r).unwrap();
        assert_eq!(j.numerator, vec![1]);
        assert_eq!(j.denominator, DenomJson::Canonical("(1-t)^3".into()));
        assert_eq!(ratfun_from_json(&j).unwrap(), r);
    }

    #[test]
    fn zexpr_round_trip() {
        let mut e = ZExpr::zero();
        e.add_term(0, &BigInt::from(2));
        e.add_term(
            sigchar_core::algebra::zexpr::symbol_bit(2)
                | sigchar_core::algebra::zexpr::symbol_bit(4),
            &BigInt::from(1),
        );
        let terms = zexpr_to_terms(&e).unwrap();
        assert_eq!(zexpr_from_terms(&terms), e);
    }
}
