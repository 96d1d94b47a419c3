//! Exact closed form of the signature character.
//!
//! The infinite basis sum is reorganized in the difference variables
//! `D_0 = g_1, D_j = g_{j+1} - g_j`. Every clipped minimum in the sign
//! exponent `f(v)` depends on `mu` only through window sums of consecutive
//! `D`'s, and stabilizes once the window sum exceeds its floor threshold.
//! Choosing a per-variable bound `B_j` two above every threshold whose
//! window contains `j`, the sum splits into finitely many terms: variables
//! are either "small" (`0 <= D_j < B_j`, enumerated) or "large"
//! (`D_j >= B_j`, where the sign is constant in `D_j` and the weight sums to
//! a geometric tail `t^{(n-j) B_j} / (1 - t^{n-j})`).
//!
//! For each assignment of small values and large markers, the inner sum over
//! restricted permutations `sum_{sigma in R} prod_{inversions} eps_{st}`
//! depends only on (a) which `D_j` vanish and (b) a per-pair sign
//! `eps_{st} in {+1,-1}`; it is looked up in tables precomputed by a
//! Walsh-Hadamard transform over inversion masks.

use super::{pair_index, RcaParam, TableauData};
use crate::algebra::{IntPoly, RatFun};
use crate::tableaux::{Partition, Permutation};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::collections::HashMap;

/// Largest `n` for which the Walsh-Hadamard sigma-sum tables are built
/// (`2^(n-1) * 2^(n(n-1)/2)` integers). Beyond this the permutation sum is
/// evaluated directly per assignment.
const WHT_TABLE_MAX_N: usize = 6;

struct PairTopology {
    /// `(s, t)` per triangular pair index
    pairs: Vec<(usize, usize)>,
}

struct SigmaSums {
    /// `tables[zp][eps_mask]` = sum over restricted permutations, when built
    tables: Option<Vec<Vec<i32>>>,
    /// fallback data: (inversion mask, adjacent-descent mask) per permutation
    perm_masks: Vec<(u32, u32)>,
}

impl SigmaSums {
    fn new(n: usize) -> SigmaSums {
        let npairs = n * (n - 1) / 2;
        let perm_masks: Vec<(u32, u32)> = Permutation::all(n)
            .iter()
            .map(|sigma| {
                let im = sigma.images();
                let mut inv = 0u32;
                for t in 1..n {
                    for s in 0..t {
                        if im[s] > im[t] {
                            inv |= 1 << pair_index(s, t);
                        }
                    }
                }
                let mut adj = 0u32;
                for k in 0..n - 1 {
                    if im[k] > im[k + 1] {
                        adj |= 1 << k;
                    }
                }
                (inv, adj)
            })
            .collect();
        let tables = (n <= WHT_TABLE_MAX_N).then(|| {
            let mut tables = Vec::with_capacity(1 << (n - 1));
            for zp in 0u32..1 << (n - 1) {
                let mut a = vec![0i32; 1 << npairs];
                for &(inv, adj) in &perm_masks {
                    if adj & zp == 0 {
                        a[inv as usize] += 1;
                    }
                }
                walsh_hadamard(&mut a);
                tables.push(a);
            }
            tables
        });
        SigmaSums { tables, perm_masks }
    }

    /// `sum_{sigma in R(zp)} prod_{(s,t) in inv(sigma)} eps_{st}` where the
    /// bits of `eps` mark the pairs with `eps_{st} = -1`.
    #[inline]
    fn lookup(&self, zp: u32, eps: u32) -> i64 {
        match &self.tables {
            Some(tables) => tables[zp as usize][eps as usize] as i64,
            None => {
                let mut s = 0i64;
                for &(inv, adj) in &self.perm_masks {
                    if adj & zp == 0 {
                        s += if (inv & eps).count_ones().is_multiple_of(2) {
                            1
                        } else {
                            -1
                        };
                    }
                }
                s
            }
        }
    }
}

/// In-place transform: `a[nu] <- sum_m a[m] * (-1)^{popcount(m & nu)}`.
fn walsh_hadamard(a: &mut [i32]) {
    let n = a.len();
    let mut h = 1;
    while h < n {
        let mut i = 0;
        while i < n {
            for j in i..i + h {
                let x = a[j];
                let y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
            i += 2 * h;
        }
        h *= 2;
    }
}

/// Per-variable stabilization bounds: `B[j]` is two above every threshold
/// whose window contains `j` (and at least 2).
fn variable_bounds(n: usize, tds: &[TableauData]) -> Vec<i64> {
    let mut bounds = vec![0i64; n];
    for td in tds {
        for j in 0..n {
            let mut m = 0i64;
            for i in j..n {
                m = m.max(td.a_thr[i]);
            }
            for t in 1..n {
                for s in 0..t {
                    // pair window {s+1..t} contains j
                    if s < j && j <= t {
                        let p = pair_index(s, t);
                        m = m.max(td.b1[p]).max(td.b2[p]);
                    }
                }
            }
            bounds[j] = bounds[j].max(m + 2);
        }
    }
    bounds
}

struct Accumulator {
    /// numerator coefficients per set of large variables
    by_large: HashMap<u32, Vec<i64>>,
    max_exp: usize,
}

impl Accumulator {
    fn add(&mut self, large_mask: u32, exp: usize, value: i64) {
        if value == 0 {
            return;
        }
        let v = self
            .by_large
            .entry(large_mask)
            .or_insert_with(|| vec![0i64; self.max_exp + 1]);
        v[exp] += value;
    }

    fn merge(&mut self, other: Accumulator) {
        for (mask, vec) in other.by_large {
            match self.by_large.get_mut(&mask) {
                Some(acc) => {
                    for (a, b) in acc.iter_mut().zip(vec) {
                        *a += b;
                    }
                }
                None => {
                    self.by_large.insert(mask, vec);
                }
            }
        }
    }
}

struct Job<'a> {
    n: usize,
    tds: &'a [TableauData],
    bounds: &'a [i64],
    sums: &'a SigmaSums,
    pair_topology: &'a PairTopology,
}

/// Position-independent enumeration state: weight exponent so far, tail
/// variables chosen so far, and zero-pattern bits.
#[derive(Clone, Copy, Default)]
struct EnumState {
    exp: usize,
    large_mask: u32,
    zp: u32,
}

impl Job<'_> {
    /// Enumerate variables `j..n` given the `g` prefix; variable values equal
    /// to their bound mark geometric tails.
    fn enumerate(
        &self,
        j: usize,
        g: &mut Vec<i64>,
        state: EnumState,
        acc: &mut Accumulator,
        first_range: Option<&[i64]>,
    ) {
        if j == self.n {
            self.leaf(g, state, acc);
            return;
        }
        let bj = self.bounds[j];
        let candidates: Vec<i64> = match (j, first_range) {
            (0, Some(r)) => r.to_vec(),
            _ => (0..=bj).collect(),
        };
        for v in candidates {
            let is_large = v == bj;
            let gj = if j == 0 { v } else { g[j - 1] + v };
            g.push(gj);
            let next = EnumState {
                exp: state.exp + (self.n - j) * v as usize,
                large_mask: if is_large {
                    state.large_mask | (1 << j)
                } else {
                    state.large_mask
                },
                zp: if j >= 1 && v == 0 {
                    state.zp | (1 << (j - 1))
                } else {
                    state.zp
                },
            };
            self.enumerate(j + 1, g, next, acc, None);
            g.pop();
        }
    }

    fn leaf(&self, g: &[i64], state: EnumState, acc: &mut Accumulator) {
        let mut total = 0i64;
        for td in self.tds {
            let mut parity = 0i64;
            for i in 0..self.n {
                parity += super::clip_min(g[i], td.a_thr[i]);
            }
            let mut eps = 0u32;
            for (p, &(s, t)) in self.pair_topology.pairs.iter().enumerate() {
                let delta = g[t] - g[s];
                let b1 = td.b1[p];
                let b2 = td.b2[p];
                parity += super::clip_min(delta, b1) + super::clip_min(delta, b2);
                if delta >= 1 && ((delta <= b1) != (delta <= b2)) {
                    eps |= 1 << p;
                }
            }
            let s = self.sums.lookup(state.zp, eps);
            total += if parity % 2 == 0 { s } else { -s };
        }
        acc.add(state.large_mask, state.exp, total);
    }
}

/// Exact signature character as a reduced rational function, equal to
/// `sum_v t^{|mu|} (-1)^{f(v)}` and guaranteed to reduce to a polynomial
/// over `(1-t)^n`.
pub fn character_closed(shape: &Partition, param: &RcaParam) -> Result<RatFun> {
    character_closed_jobs(shape, param, 1)
}

/// [`character_closed`] with the top-level enumeration split across
/// `jobs` threads (exact integer merges keep the result deterministic).
pub fn character_closed_jobs(shape: &Partition, param: &RcaParam, jobs: usize) -> Result<RatFun> {
    param.ensure_shape(shape)?;
    let n = shape.n();
    let tds: Vec<TableauData> = shape
        .standard_tableaux()
        .iter()
        .map(|t| TableauData::new(t, param))
        .collect();
    let bounds = variable_bounds(n, &tds);
    let sums = SigmaSums::new(n);
    let pairs: Vec<(usize, usize)> = {
        let mut v = Vec::with_capacity(n * (n - 1) / 2);
        for t in 1..n {
            for s in 0..t {
                v.push((s, t));
            }
        }
        // triangular order must match pair_index
        v.sort_by_key(|&(s, t)| pair_index(s, t));
        v
    };
    let pair_topology = PairTopology { pairs };
    let max_exp: usize = bounds
        .iter()
        .enumerate()
        .map(|(j, &b)| (n - j) * b as usize)
        .sum();

    let job = Job {
        n,
        tds: &tds,
        bounds: &bounds,
        sums: &sums,
        pair_topology: &pair_topology,
    };

    let first_values: Vec<i64> = (0..=bounds[0]).collect();
    let jobs = jobs.max(1).min(first_values.len());
    let acc = if jobs == 1 {
        let mut acc = Accumulator {
            by_large: HashMap::new(),
            max_exp,
        };
        job.enumerate(
            0,
            &mut Vec::with_capacity(n),
            EnumState::default(),
            &mut acc,
            Some(&first_values),
        );
        acc
    } else {
        let chunks: Vec<Vec<i64>> = (0..jobs)
            .map(|tid| {
                first_values
                    .iter()
                    .copied()
                    .skip(tid)
                    .step_by(jobs)
                    .collect()
            })
            .collect();
        let mut results: Vec<Accumulator> = std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|chunk| {
                    let job = &job;
                    scope.spawn(move || {
                        let mut acc = Accumulator {
                            by_large: HashMap::new(),
                            max_exp,
                        };
                        job.enumerate(
                            0,
                            &mut Vec::with_capacity(job.n),
                            EnumState::default(),
                            &mut acc,
                            Some(chunk),
                        );
                        acc
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let mut acc = results.pop().unwrap();
        for other in results {
            acc.merge(other);
        }
        acc
    };

    // Assemble over the common denominator prod_j (1 - t^{n-j}).
    let den_all = (0..n).fold(IntPoly::one(), |p, j| &p * &IntPoly::one_minus_t_pow(n - j));
    let mut num_total = IntPoly::zero();
    for (mask, coeffs) in &acc.by_large {
        let mut part = IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect());
        if part.is_zero() {
            continue;
        }
        for j in 0..n {
            if mask & (1 << j) == 0 {
                part = &part * &IntPoly::one_minus_t_pow(n - j);
            }
        }
        num_total = &num_total + &part;
    }
    let result = RatFun::new(num_total, den_all)?;

    // The reduced denominator must be a power of (1 - t) of order <= n
    // (canonicalization may flip the overall sign to keep the leading
    // coefficient positive, so the cofactor is +-1).
    let k = result.denominator().multiplicity_at_one();
    let unit = result
        .denominator()
        .div_exact(&IntPoly::one_minus_t_pow(1).pow(k));
    if k > n || unit.degree() != Some(0) || !unit.leading().abs().is_one() {
        return Err(Error::InternalConsistency(format!(
            "signature character denominator {} does not divide (1-t)^{}",
            result.denominator(),
            n
        )));
    }
    Ok(result)
}
