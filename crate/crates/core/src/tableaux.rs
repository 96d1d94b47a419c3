//! Partitions, standard Young tableaux, content vectors, and permutation
//! statistics.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use std::fmt;

/// Partition: a nonincreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Partition> {
        if parts.contains(&0) {
            return Err(Error::OutOfRange {
                what: "partition parts must be positive",
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::OutOfRange {
                what: "partition parts must be nonincreasing",
            });
        }
        Ok(Partition { parts })
    }

    /// Parse the text format: comma-separated parts, e.g. `"2,2,1"`.
    pub fn parse(s: &str) -> Result<Partition> {
        let parts: std::result::Result<Vec<usize>, _> =
            s.split(',').map(|p| p.trim().parse::<usize>()).collect();
        match parts {
            Ok(parts) if !parts.is_empty() => Partition::new(parts),
            _ => Err(Error::OutOfRange {
                what: "unparseable partition",
            }),
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Weight `n`: the sum of the parts.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Transposed diagram.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition { parts: vec![] };
        }
        let cols = self.parts[0];
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Cell contents (col - row, 0-indexed) in row-reading order.
    pub fn cell_contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.n());
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                out.push(c as i64 - r as i64);
            }
        }
        out
    }

    /// Max content minus min content over the diagram.
    pub fn content_spread(&self) -> i64 {
        let contents = self.cell_contents();
        let max = contents.iter().max().copied().unwrap_or(0);
        let min = contents.iter().min().copied().unwrap_or(0);
        max - min
    }

    /// Number of standard tableaux by the hook length formula.
    pub fn syt_count_hook(&self) -> BigInt {
        let n = self.n();
        let conj = self.conjugate();
        let mut count = BigInt::one();
        // n! first, then exact division by each hook length
        for k in 2..=n {
            count *= BigInt::from(k);
        }
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                let hook = (len - c) + (conj.parts[c] - r) - 1;
                count /= BigInt::from(hook);
            }
        }
        count
    }

    /// All standard tableaux of this shape, sorted by row-reading word; the
    /// row-filled tableau `t^lambda` comes first.
    pub fn standard_tableaux(&self) -> Vec<StandardTableau> {
        let n = self.n();
        let rows = self.rows();
        let mut fill: Vec<Vec<u32>> = self.parts.iter().map(|&p| vec![0u32; p]).collect();
        let mut next_in_row = vec![0usize; rows];
        let mut out = Vec::new();

        fn place(
            shape: &Partition,
            label: u32,
            n: usize,
            fill: &mut Vec<Vec<u32>>,
            next_in_row: &mut Vec<usize>,
            out: &mut Vec<StandardTableau>,
        ) {
            if label as usize > n {
                out.push(StandardTableau::from_rows(shape.clone(), fill.clone()));
                return;
            }
            for r in 0..shape.rows() {
                let c = next_in_row[r];
                if c >= shape.parts()[r] {
                    continue;
                }
                // column condition: cell above must already be filled
                if r > 0 && next_in_row[r - 1] <= c {
                    continue;
                }
                fill[r][c] = label;
                next_in_row[r] += 1;
                place(shape, label + 1, n, fill, next_in_row, out);
                next_in_row[r] -= 1;
            }
        }

        place(self, 1, n, &mut fill, &mut next_in_row, &mut out);
        out.sort_by_key(StandardTableau::row_reading);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Standard Young tableau: a bijective filling of a partition shape that
/// increases along rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
    /// position of each label: `pos[k-1] = (row, col)`, 0-indexed
    pos: Vec<(usize, usize)>,
}

impl StandardTableau {
    pub fn from_rows(shape: Partition, rows: Vec<Vec<u32>>) -> StandardTableau {
        let n = shape.n();
        let mut pos = vec![(0usize, 0usize); n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &label) in row.iter().enumerate() {
                pos[(label - 1) as usize] = (r, c);
            }
        }
        StandardTableau { shape, rows, pos }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    /// 0-indexed (row, col) of the cell holding `label`.
    pub fn position(&self, label: u32) -> (usize, usize) {
        self.pos[(label - 1) as usize]
    }

    /// Concatenation of the rows, used as a deterministic sort key.
    pub fn row_reading(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Content vector `d_i = col(i) - row(i)` for `i = 1..n`.
    pub fn content_vector(&self) -> Vec<i64> {
        self.pos.iter().map(|&(r, c)| c as i64 - r as i64).collect()
    }

    /// All pairs `1 <= l < i <= n` with `delta = d_i - d_l < 0`, returned as
    /// `(l, i, delta)` with 1-based labels.
    pub fn negative_pairs(&self) -> Vec<(usize, usize, i64)> {
        let d = self.content_vector();
        let n = d.len();
        let mut out = Vec::new();
        for l in 0..n {
            for i in (l + 1)..n {
                let delta = d[i] - d[l];
                if delta < 0 {
                    out.push((l + 1, i + 1, delta));
                }
            }
        }
        out
    }

    /// Swap labels `i` and `i+1`; `None` if the result is not standard
    /// (the labels share a row or a column).
    pub fn swap_adjacent(&self, i: u32) -> Option<StandardTableau> {
        let (r1, c1) = self.position(i);
        let (r2, c2) = self.position(i + 1);
        if r1 == r2 || c1 == c2 {
            return None;
        }
        let mut rows = self.rows.clone();
        rows[r1][c1] = i + 1;
        rows[r2][c2] = i;
        Some(StandardTableau::from_rows(self.shape.clone(), rows))
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "({})", rows.join(";"))
    }
}

/// Permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x as usize > n || seen[(x - 1) as usize] {
                return Err(Error::OutOfRange {
                    what: "not a permutation",
                });
            }
            seen[(x - 1) as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n as u32).collect(),
        }
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `sigma(i)` with 1-based `i`.
    pub fn image(&self, i: usize) -> u32 {
        self.images[i - 1]
    }

    /// Descent set: 1-based positions `i` with `sigma(i) > sigma(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.images.len())
            .filter(|&i| self.images[i - 1] > self.images[i])
            .collect()
    }

    /// All inversions `(s, t)`, `s < t`, `sigma(s) > sigma(t)`, 1-based.
    pub fn inversions(&self) -> Vec<(usize, usize)> {
        let n = self.images.len();
        let mut out = Vec::new();
        for s in 0..n {
            for t in (s + 1)..n {
                if self.images[s] > self.images[t] {
                    out.push((s + 1, t + 1));
                }
            }
        }
        out
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<u32> = (1..=n as u32).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1))
                .rev()
                .find(|&i| current[i] < current[i + 1])
            else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
            current.swap(i, j);
            current[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Descent set, inversion list, and count of special inversions `(s, t)` with
/// `d_t - d_s` in `{0, -1}`.
pub struct PermStats {
    pub descents: Vec<usize>,
    pub inversions: Vec<(usize, usize)>,
    pub special_inversions: usize,
}

/// Statistics of `sigma` against a content vector.
pub fn perm_stats(sigma: &Permutation, d: &[i64]) -> Result<PermStats> {
    if sigma.len() != d.len() {
        return Err(Error::LengthMismatch {
            expected: sigma.len(),
            got: d.len(),
        });
    }
    let inversions = sigma.inversions();
    let special_inversions = inversions
        .iter()
        .filter(|&&(s, t)| {
            let diff = d[t - 1] - d[s - 1];
            diff == 0 || diff == -1
        })
        .count();
    Ok(PermStats {
        descents: sigma.descents(),
        inversions,
        special_inversions,
    })
}

/// All partitions of exactly weight `n`, largest-part-first order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    fn rec(remaining: usize, max_part: usize, acc: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(acc.clone()).unwrap());
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            acc.push(p);
            rec(remaining - p, p, acc, out);
            acc.pop();
        }
    }
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// All partitions with weight between 1 and `max_n`.
pub fn partitions_up_to(max_n: usize) -> Vec<Partition> {
    (1..=max_n).flat_map(partitions_of).collect()
}
