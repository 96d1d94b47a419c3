//! Exact-arithmetic norm oracle for the signature character.
//!
//! Independent of the floor-statistic path: for each basis element the
//! oracle multiplies out the literal norm-change factors
//!
//! ```text
//! N(T; mu)        = prod_i [ prod_{j=1}^{g_i} (d_i + j kappa) ]
//!                          [ prod_{l<i} prod_{j=1}^{g_i - g_l} ((d_i - d_l + j kappa)^2 - 1) ]
//! N(T; mu; sigma) = prod_{inversions (s,t)} ((c_s - c_t)^2 - 1),  c_i = d_i + kappa g_i
//! ```
//!
//! as one exact rational number and compares its sign with `(-1)^{f(v)}`.

use super::{basis_enumerate, basis_sign, RcaParam};
use crate::algebra::Rational;
use crate::tableaux::Partition;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

fn rational(x: i64) -> Rational {
    Rational::from(BigInt::from(x))
}

/// Verify, for every basis element of weight `<= max_wt`, that the sign of
/// the exact norm product equals the floor-statistic sign `(-1)^{f(v)}`.
pub fn norm_oracle(shape: &Partition, param: &RcaParam, max_wt: i64) -> Result<bool> {
    param.ensure_shape(shape)?;
    let kappa = param.kappa();
    let tabs = shape.standard_tableaux();
    let contents: Vec<Vec<i64>> = tabs.iter().map(|t| t.content_vector()).collect();
    for v in basis_enumerate(shape, param, max_wt)? {
        let d = &contents[v.tableau];
        let n = d.len();
        let g = &v.mu;
        let mut product = Rational::one();
        for i in 0..n {
            for j in 1..=g[i] {
                let factor = rational(d[i]) + kappa * rational(j);
                if factor.is_zero() {
                    return Err(Error::DegenerateParameter {
                        c: param.c().clone(),
                        m: j as u64,
                    });
                }
                product *= factor;
            }
            for l in 0..i {
                for j in 1..=(g[i] - g[l]) {
                    let base = rational(d[i] - d[l]) + kappa * rational(j);
                    let factor = &base * &base - Rational::one();
                    if factor.is_zero() {
                        return Err(Error::DegenerateParameter {
                            c: param.c().clone(),
                            m: j as u64,
                        });
                    }
                    product *= factor;
                }
            }
        }
        let weights: Vec<Rational> = (0..n)
            .map(|i| rational(d[i]) + kappa * rational(g[i]))
            .collect();
        for (s, t) in v.sigma.inversions() {
            let diff = &weights[s - 1] - &weights[t - 1];
            let factor = &diff * &diff - Rational::one();
            if factor.is_zero() {
                return Err(Error::DegenerateParameter {
                    c: param.c().clone(),
                    m: 0,
                });
            }
            product *= factor;
        }
        let oracle_sign: i8 = if product.is_positive() { 1 } else { -1 };
        if oracle_sign != basis_sign(&v, shape, param)? {
            return Ok(false);
        }
    }
    Ok(true)
}
