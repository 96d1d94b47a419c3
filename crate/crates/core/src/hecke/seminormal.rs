//! Floating-point seminormal-form oracle for Hecke signatures.
//!
//! Independent of the sign-symbol path: norms are propagated numerically
//! along adjacent-transposition edges of the standard-tableau graph using the
//! norm-ratio recursion
//! `<f_t, f_t> = ([[rho-1]] [[rho+1]] / [[rho]]^2)^{+-1} <f_s, f_s>`,
//! with brackets evaluated as real sines. Norm magnitudes are tracked in log
//! space so long products neither underflow nor overflow; signs come from the
//! sine evaluations themselves.

use super::HeckeParam;
use crate::algebra::Rational;
use crate::tableaux::{Partition, StandardTableau};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use std::collections::HashMap;
use std::f64::consts::PI;

/// Nonzero real number stored as sign plus natural log of the magnitude.
#[derive(Debug, Clone, Copy)]
struct LogNum {
    sign: i8,
    ln_abs: f64,
}

impl LogNum {
    fn one() -> LogNum {
        LogNum {
            sign: 1,
            ln_abs: 0.0,
        }
    }

    fn mul(self, other: LogNum) -> LogNum {
        LogNum {
            sign: self.sign * other.sign,
            ln_abs: self.ln_abs + other.ln_abs,
        }
    }

    fn div(self, other: LogNum) -> LogNum {
        LogNum {
            sign: self.sign * other.sign,
            ln_abs: self.ln_abs - other.ln_abs,
        }
    }
}

/// `sin(pi c m)` with the argument reduced modulo 2 in exact rational
/// arithmetic before conversion, so large `m` loses no accuracy.
fn sin_pi_reduced(c: &Rational, m: i64) -> f64 {
    let x = c * Rational::from(BigInt::from(m));
    let two = Rational::from(BigInt::from(2));
    let r = &x - &(&(&x / &two).floor() * &two); // x mod 2 in [0, 2)
    let rf = r.to_f64().expect("reduced argument fits in f64");
    (PI * rf).sin()
}

/// Balanced q-number `[[m]]` at `q = e^{i pi c}` as a [`LogNum`], with the
/// formal conventions `[[0]] = [[1]] = 1` used by the tableau products.
fn bracket(c: &Rational, m: i64) -> LogNum {
    if m == 0 || m == 1 {
        return LogNum::one();
    }
    let num = sin_pi_reduced(c, m);
    let den = sin_pi_reduced(c, 1);
    let v = num / den;
    LogNum {
        sign: if v > 0.0 { 1 } else { -1 },
        ln_abs: v.abs().ln(),
    }
}

/// Norm-ratio `[[rho-1]] [[rho+1]] / [[rho]]^2` for an adjacent swap of
/// axial distance `rho >= 2`.
fn edge_ratio(c: &Rational, rho: i64) -> LogNum {
    let b = bracket(c, rho);
    bracket(c, rho - 1).mul(bracket(c, rho + 1)).div(b.mul(b))
}

/// Raw-variant signature of `S^lambda` computed by propagating numeric norms
/// over the tableau graph.
///
/// The row-filled tableau is assigned the literal value of its sign-product
/// formula (raw convention), every other tableau gets its norm by walking
/// adjacent-transposition edges, and the result is the number of positive
/// minus the number of negative norms. Propagation along distinct paths to
/// the same tableau is cross-checked. Every norm magnitude must clear a
/// `2^(-precision/2)` margin from zero; the margin is enforced in log space,
/// so large `precision` values remain meaningful.
pub fn seminormal_oracle(
    shape: &Partition,
    param: &HeckeParam,
    precision_bits: u32,
) -> Result<i64> {
    let c = param.c();
    let tabs = shape.standard_tableaux();
    let index: HashMap<Vec<u32>, usize> = tabs
        .iter()
        .enumerate()
        .map(|(i, t)| (t.row_reading(), i))
        .collect();

    // raw-convention starting norm for t^lambda
    let mut start = LogNum::one();
    for (_, _, delta) in tabs[0].negative_pairs() {
        let a = delta.abs();
        start = start.mul(bracket(c, a + 1)).mul(bracket(c, a - 1));
    }

    let ln_margin = -(precision_bits as f64) / 2.0 * std::f64::consts::LN_2;
    // agreement tolerance for alternate propagation paths, in ln units
    let path_tol = 1e-6;

    let mut norms: Vec<Option<LogNum>> = vec![None; tabs.len()];
    norms[0] = Some(start);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(cur) = queue.pop_front() {
        let t = &tabs[cur];
        let d = t.content_vector();
        let norm_cur = norms[cur].unwrap();
        for i in 1..t.n() as u32 {
            let Some(next) = t.swap_adjacent(i) else {
                continue;
            };
            let j = index[&next.row_reading()];
            let rho = (d[i as usize - 1] - d[i as usize]).abs();
            let ratio = edge_ratio(c, rho);
            // moving from the dominance-larger tableau multiplies by the
            // ratio; moving up divides
            let descending = d[i as usize - 1] > d[i as usize];
            let norm_next = if descending {
                norm_cur.mul(ratio)
            } else {
                norm_cur.div(ratio)
            };
            match norms[j] {
                None => {
                    norms[j] = Some(norm_next);
                    queue.push_back(j);
                }
                Some(prev) => {
                    if prev.sign != norm_next.sign
                        || (prev.ln_abs - norm_next.ln_abs).abs() > path_tol
                    {
                        return Err(Error::InternalConsistency(format!(
                            "path-dependent norm at tableau {next}"
                        )));
                    }
                }
            }
        }
    }

    let mut signature = 0i64;
    for norm in norms.iter().map(|n| n.expect("tableau graph is connected")) {
        if norm.ln_abs < ln_margin {
            return Err(Error::InsufficientPrecision {
                log2_abs: norm.ln_abs / std::f64::consts::LN_2,
                required_log2: -(precision_bits as f64) / 2.0,
            });
        }
        signature += norm.sign as i64;
    }
    Ok(signature)
}

/// Complex q-number `[m]_Q = (Q^m - 1)/(Q - 1)` at `Q = e^{2 pi i c}`.
fn qnum(c: &Rational, m: i64) -> Complex64 {
    (qpow(c, m) - 1.0) / (qpow(c, 1) - 1.0)
}

/// `Q^m = e^{2 pi i c m}` with exact rational argument reduction.
fn qpow(c: &Rational, m: i64) -> Complex64 {
    let x = c * Rational::from(BigInt::from(m));
    let r = (&x - &x.floor())
        .to_f64()
        .expect("reduced argument fits in f64");
    Complex64::from_polar(1.0, 2.0 * PI * r)
}

/// Build the matrix of `T_k` on the seminormal basis of `S^lambda`.
/// Row `x`, column `y` holds the coefficient of `f_y` in `f_x T_k`.
fn generator_matrix(
    tabs: &[StandardTableau],
    index: &HashMap<Vec<u32>, usize>,
    c: &Rational,
    k: u32,
) -> Vec<Vec<Complex64>> {
    let dim = tabs.len();
    let q = qpow(c, 1);
    let mut mat = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for (x, t) in tabs.iter().enumerate() {
        let d = t.content_vector();
        let rho = d[k as usize] - d[k as usize - 1]; // axial distance
        match t.swap_adjacent(k) {
            None => {
                // same row: eigenvalue Q; same column: eigenvalue -1
                mat[x][x] = if rho == 1 {
                    q
                } else {
                    Complex64::new(-1.0, 0.0)
                };
            }
            Some(next) => {
                let y = index[&next.row_reading()];
                let qr = qnum(c, rho);
                mat[x][x] = qpow(c, rho) / qr;
                if rho < 0 {
                    // dominance-larger side carries off-diagonal 1
                    mat[x][y] = Complex64::new(1.0, 0.0);
                } else {
                    mat[x][y] = q * qnum(c, rho + 1) * qnum(c, rho - 1) / (qr * qr);
                }
            }
        }
    }
    mat
}

fn mat_mul(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let n = a.len();
    let mut out = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik.norm_sqr() == 0.0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

fn max_abs_diff(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> f64 {
    let mut m = 0.0f64;
    for (ra, rb) in a.iter().zip(b) {
        for (x, y) in ra.iter().zip(rb) {
            m = m.max((x - y).norm());
        }
    }
    m
}

/// Check the defining relations of the Hecke algebra on the seminormal
/// matrices of `S^lambda`: the quadratic `(T_k + 1)(T_k - Q) = 0`, the braid
/// relations, and commutation of distant generators, all to tolerance
/// `2^(-precision/2)`.
///
/// The arithmetic is `f64`, so requested precisions beyond ~80 bits are not
/// meaningful; `false` signals a construction bug, not a property of the
/// parameter.
pub fn action_relations_check(shape: &Partition, param: &HeckeParam, precision_bits: u32) -> bool {
    let c = param.c();
    let tol = (2.0f64).powf(-(precision_bits as f64) / 2.0);
    let tabs = shape.standard_tableaux();
    let index: HashMap<Vec<u32>, usize> = tabs
        .iter()
        .enumerate()
        .map(|(i, t)| (t.row_reading(), i))
        .collect();
    let n = shape.n();
    if n < 2 {
        return true;
    }
    let dim = tabs.len();
    let q = qpow(c, 1);
    let mats: Vec<_> = (1..n as u32)
        .map(|k| generator_matrix(&tabs, &index, c, k))
        .collect();

    let zero = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
    for m in &mats {
        // (T + 1)(T - Q) = T^2 + (1 - Q) T - Q
        let mut t2 = mat_mul(m, m);
        for i in 0..dim {
            for j in 0..dim {
                t2[i][j] += (Complex64::new(1.0, 0.0) - q) * m[i][j];
            }
            t2[i][i] -= q;
        }
        if max_abs_diff(&t2, &zero) > tol {
            return false;
        }
    }
    for w in mats.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        let aba = mat_mul(&mat_mul(a, b), a);
        let bab = mat_mul(&mat_mul(b, a), b);
        if max_abs_diff(&aba, &bab) > tol {
            return false;
        }
    }
    for i in 0..mats.len() {
        for j in (i + 2)..mats.len() {
            let ab = mat_mul(&mats[i], &mats[j]);
            let ba = mat_mul(&mats[j], &mats[i]);
            if max_abs_diff(&ab, &ba) > tol {
                return false;
            }
        }
    }
    true
}
