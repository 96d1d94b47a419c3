//! Signatures of Specht modules over the type-A Hecke algebra at `|q| = 1`.
//!
//! The Hecke parameter is `Q = e^{2 pi i c}` for exact rational `c`; the
//! balanced q-numbers that drive every sign live at the square root
//! `q = e^{i pi c}`, where `[[m]]_q = sin(pi c m) / sin(pi c)` is real with
//! sign `(-1)^{floor(cm) + floor(c)}`.
//!
//! The signature of `S^lambda(q^2)` is computed symbolically as an element of
//! the sign-symbol ring: a sum over standard tableaux of monomials
//! `prod a_{|delta|+1} a_{|delta|-1}` over the tableau's negative content
//! pairs. Two conventions are exposed: the raw product, and the normalized
//! form in which the row-filled tableau's term is rescaled to `+1` (the form
//! in which small examples are usually displayed).

mod seminormal;

pub use seminormal::{action_relations_check, seminormal_oracle};

use crate::algebra::zexpr::{symbol_bit, SymbolMask};
use crate::algebra::{rat_floor, rat_is_integer, Rational, ZExpr};
use crate::tableaux::{Partition, StandardTableau};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use std::collections::BTreeMap;

/// Which normalization of the invariant Hermitian form a signature uses.
///
/// The form is unique only up to real scaling, so the signature is fixed only
/// once the norm of a reference vector is pinned. `Raw` evaluates the
/// tableau-product formula literally; `Normalized` rescales so the row-filled
/// tableau has norm `+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignatureVariant {
    Raw,
    Normalized,
}

impl std::str::FromStr for SignatureVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raw" => Ok(SignatureVariant::Raw),
            "normalized" => Ok(SignatureVariant::Normalized),
            _ => Err(Error::OutOfRange {
                what: "variant must be raw|normalized",
            }),
        }
    }
}

/// Exact rational Hecke parameter `c` (so `Q = e^{2 pi i c}`), validated to
/// be nondegenerate for modules of weight up to `n`: `c*m` is not an integer
/// for any `1 <= m <= n`.
#[derive(Debug, Clone, PartialEq)]
pub struct HeckeParam {
    c: Rational,
    n: usize,
}

impl HeckeParam {
    pub fn new(c: Rational, n: usize) -> Result<HeckeParam> {
        for m in 1..=n.max(1) {
            let cm = &c * Rational::from(BigInt::from(m));
            if rat_is_integer(&cm) {
                return Err(Error::DegenerateParameter { c, m: m as u64 });
            }
        }
        Ok(HeckeParam { c, n })
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Sign of the balanced q-number `[[m]]` at `q = e^{i pi c}`:
    /// `(-1)^{floor(cm) + floor(c)}`. Errors when `cm` is an integer (the
    /// bracket vanishes).
    pub fn sign_bracket(&self, m: i64) -> Result<i8> {
        let cm = &self.c * Rational::from(BigInt::from(m));
        if rat_is_integer(&cm) {
            return Err(Error::DegenerateParameter {
                c: self.c.clone(),
                m: m.unsigned_abs(),
            });
        }
        let e = rat_floor(&cm) + rat_floor(&self.c);
        Ok(if e.is_even() { 1 } else { -1 })
    }

    /// Sign assignments for every index in `support`.
    fn sign_map(&self, support: &[u32]) -> Result<BTreeMap<u32, i8>> {
        support
            .iter()
            .map(|&i| Ok((i, self.sign_bracket(i as i64)?)))
            .collect()
    }
}

/// Sign-symbol monomial of one tableau: `prod a_{|delta|+1} a_{|delta|-1}`
/// over its negative content pairs, with `a_0 = a_1 = 1`.
pub fn tableau_monomial(t: &StandardTableau) -> SymbolMask {
    let mut mask: SymbolMask = 0;
    for (_, _, delta) in t.negative_pairs() {
        let a = delta.unsigned_abs() as u32;
        mask ^= symbol_bit(a + 1);
        mask ^= symbol_bit(a - 1);
    }
    mask
}

/// `s_z(S^lambda)` in the raw convention: the sum of [`tableau_monomial`]
/// over all standard tableaux of the shape.
pub fn signature_z_raw(shape: &Partition) -> ZExpr {
    let mut e = ZExpr::zero();
    for t in shape.standard_tableaux() {
        e.add_term(tableau_monomial(&t), &BigInt::from(1));
    }
    e
}

/// `s_z(S^lambda)` normalized so the row-filled tableau contributes `+1`:
/// the raw form multiplied by the (self-inverse) monomial of `t^lambda`.
pub fn signature_z_normalized(shape: &Partition) -> ZExpr {
    let tabs = shape.standard_tableaux();
    let t_lambda_mask = tableau_monomial(&tabs[0]);
    let mut e = ZExpr::zero();
    for t in &tabs {
        e.add_term(tableau_monomial(t) ^ t_lambda_mask, &BigInt::from(1));
    }
    e
}

/// Signature of `S^lambda(Q)` at the exact parameter, in either convention.
pub fn signature_at(
    shape: &Partition,
    param: &HeckeParam,
    variant: SignatureVariant,
) -> Result<BigInt> {
    let z = match variant {
        SignatureVariant::Raw => signature_z_raw(shape),
        SignatureVariant::Normalized => signature_z_normalized(shape),
    };
    let signs = param.sign_map(&z.support())?;
    z.eval(&signs)
}

/// Closed form for the hook shape `(n-l, 1^l)` in the raw convention:
/// the sum over `2 <= j_1 < ... < j_l <= n` of `prod a_{j_i - 1} a_{j_i}`.
pub fn closed_form_hook(n: usize, l: usize) -> Result<ZExpr> {
    if n == 0 || l + 1 > n {
        return Err(Error::OutOfRange {
            what: "hook column length l must satisfy 0 <= l <= n-1",
        });
    }
    let mut e = ZExpr::zero();
    let choices: Vec<u32> = (2..=n as u32).collect();
    for subset in combinations(&choices, l) {
        let mut mask: SymbolMask = 0;
        for &j in &subset {
            mask ^= symbol_bit(j - 1);
            mask ^= symbol_bit(j);
        }
        e.add_term(mask, &BigInt::from(1));
    }
    Ok(e)
}

/// Closed form for the two-row shape `(n-m, m)` in the raw convention:
/// the sum over `1 <= j_1 < ... < j_m <= n` with `j_i >= 2i` of
/// `prod a_{j_i - (2i-1)} a_{j_i - 2(i-1)}`.
pub fn closed_form_tworow(n: usize, m: usize) -> Result<ZExpr> {
    if 2 * m > n {
        return Err(Error::OutOfRange {
            what: "second row length m must satisfy 0 <= m <= n/2",
        });
    }
    let mut e = ZExpr::zero();
    let choices: Vec<u32> = (1..=n as u32).collect();
    for subset in combinations(&choices, m) {
        if subset
            .iter()
            .enumerate()
            .any(|(i, &j)| (j as usize) < 2 * (i + 1))
        {
            continue;
        }
        let mut mask: SymbolMask = 0;
        for (i, &j) in subset.iter().enumerate() {
            let i = i as u32 + 1;
            mask ^= symbol_bit(j - (2 * i - 1));
            mask ^= symbol_bit(j - 2 * (i - 1));
        }
        e.add_term(mask, &BigInt::from(1));
    }
    Ok(e)
}

/// All `k`-element subsets of `items`, in lexicographic order.
fn combinations(items: &[u32], k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(k);
    fn rec(items: &[u32], k: usize, start: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        let need = k - acc.len();
        for i in start..=items.len().saturating_sub(need) {
            acc.push(items[i]);
            rec(items, k, i + 1, acc, out);
            acc.pop();
        }
    }
    if k <= items.len() {
        rec(items, k, 0, &mut acc, &mut out);
    }
    out
}

/// Number of content pairs at difference exactly one whose lower-content
/// cell is forced below (contributes a `delta = -1` pair in every tableau).
/// Depends only on the shape.
pub fn delta_one_pair_count(shape: &Partition) -> usize {
    let tabs = shape.standard_tableaux();
    tabs[0]
        .negative_pairs()
        .iter()
        .filter(|&&(_, _, d)| d == -1)
        .count()
}

/// Number of unordered cell pairs with equal content. Depends only on the
/// shape.
pub fn equal_content_pair_count(shape: &Partition) -> usize {
    let contents = shape.cell_contents();
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for c in contents {
        *counts.entry(c).or_insert(0) += 1;
    }
    counts.values().map(|&m| m * (m - 1) / 2).sum()
}

/// The tableau-independent sign relating the asymptotic Cherednik signature
/// to the raw Hecke signature at the same rational `c < 0`: `a_s = G * s_raw`
/// with
///
/// ```text
/// G = prod_{d < 0 in the content multiset} (-1)^{floor(|c| |d|)}
///     * (-1)^{floor(|c|) * (P0 + P1)},
/// ```
///
/// where `P0` counts equal-content cell pairs and `P1` counts forced
/// content pairs at difference one.
pub fn bridge_global_sign(shape: &Partition, c: &Rational) -> i8 {
    let abs_c = c.abs();
    let mut exp = BigInt::from(0);
    for d in shape.cell_contents() {
        if d < 0 {
            exp += rat_floor(&(&abs_c * Rational::from(BigInt::from(-d))));
        }
    }
    let p0 = equal_content_pair_count(shape);
    let p1 = delta_one_pair_count(shape);
    exp += rat_floor(&abs_c) * BigInt::from(p0 + p1);
    if exp.is_even() {
        1
    } else {
        -1
    }
}
