//! One-dimensional periodicity over integer sequences: smallest periods,
//! runs, the `rho` statistic and distinct squares.
//!
//! Positions in the public API are 1-based and inclusive.

pub mod lce;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::naming::{rename_pairs, rename_symbols};
use lce::{lyndon_array, suffix_ranks, LceIndex};

/// A maximal periodic fragment `S[start..=end]` with smallest period `period`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Run1D {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

impl Run1D {
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of start positions of primitively rooted squares of length
    /// `2 * period` inside the run.
    pub fn exponent_slack(&self) -> usize {
        self.len() + 1 - 2 * self.period
    }
}

/// A distinct square: its total length and the leftmost start (1-based)
/// among the witnesses found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Square {
    pub len: usize,
    pub start: usize,
}

/// KMP border table: `border[t]` is the longest proper border of `s[..t]`.
pub fn border_table<T: Eq>(s: &[T]) -> Vec<usize> {
    let n = s.len();
    let mut border = vec![0usize; n + 1];
    let mut k = 0usize;
    for t in 1..n {
        while k > 0 && s[t] != s[k] {
            k = border[k];
        }
        if s[t] == s[k] {
            k += 1;
        }
        border[t + 1] = k;
    }
    border
}

/// Smallest period of every prefix: `out[t - 1] = per(s[..t])`.
pub fn prefix_periods<T: Eq>(s: &[T]) -> Vec<usize> {
    let border = border_table(s);
    (1..=s.len()).map(|t| t - border[t]).collect()
}

/// Smallest period of a non-empty sequence, in `O(|s|)`.
pub fn smallest_period<T: Eq>(s: &[T]) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::EmptySequence);
    }
    let border = border_table(s);
    Ok(s.len() - border[s.len()])
}

/// All runs of `s`, sorted by `(start, end, period)`.
///
/// Every run has a Lyndon root that is the longest Lyndon word starting at
/// its position, for one of the two alphabet orders; each such candidate is
/// extended in both directions with LCE queries.
pub fn runs1d(s: &[u32]) -> Vec<Run1D> {
    let n = s.len();
    if n < 2 {
        return Vec::new();
    }
    let forward = LceIndex::new(s);
    let reversed: Vec<u32> = s.iter().rev().copied().collect();
    let backward = LceIndex::new(&reversed);
    let max = *s.iter().max().unwrap();
    let inverted: Vec<u32> = s.iter().map(|&c| max - c).collect();

    let mut out: Vec<Run1D> = Vec::new();
    for ranks in [forward.ranks().to_vec(), suffix_ranks(&inverted)] {
        let lyn = lyndon_array(&ranks);
        for i in 0..n {
            let p = lyn[i];
            if i + p >= n {
                continue;
            }
            let right = forward.lce(i, i + p);
            let left = if i == 0 { 0 } else { backward.lce(n - i, n - i - p) };
            if left + right < p {
                continue;
            }
            out.push(Run1D {
                start: i - left + 1,
                end: i + p + right,
                period: p,
            });
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// The unique run containing `s[a..=b]` (1-based) with the same smallest period.
pub fn extend_to_run<T: Eq>(s: &[T], a: usize, b: usize) -> Result<Run1D> {
    if a == 0 || a > b || b > s.len() {
        return Err(Error::OutOfBounds {
            what: format!("fragment [{a}, {b}]"),
            rows: 1,
            cols: s.len(),
        });
    }
    let frag = &s[a - 1..b];
    let p = smallest_period(frag)?;
    if 2 * p > frag.len() {
        return Err(Error::NotPeriodic { start: a, end: b });
    }
    // 0-based inclusive bounds
    let (mut lo, mut hi) = (a - 1, b - 1);
    while lo > 0 && s[lo - 1] == s[lo - 1 + p] {
        lo -= 1;
    }
    while hi + 1 < s.len() && s[hi + 1] == s[hi + 1 - p] {
        hi += 1;
    }
    Ok(Run1D {
        start: lo + 1,
        end: hi + 1,
        period: p,
    })
}

/// `rho(S)`: sum over runs of `|R| - 2 per(R) + 1`.
pub fn rho(s: &[u32]) -> usize {
    runs1d(s).iter().map(Run1D::exponent_slack).sum()
}

pub fn rho_of_runs(runs: &[Run1D]) -> usize {
    runs.iter().map(Run1D::exponent_slack).sum()
}

/// For each position (0-based index), the number of primitively rooted
/// squares starting there.
pub fn primitive_square_counts(s: &[u32]) -> Vec<usize> {
    let mut counts = vec![0usize; s.len()];
    for r in runs1d(s) {
        for x in r.start..=r.end + 1 - 2 * r.period {
            counts[x - 1] += 1;
        }
    }
    counts
}

/// Doubling name tables: `names[l][x]` identifies `s[x..x + 2^l]`.
pub(crate) struct NameTable {
    names: Vec<Vec<u32>>,
}

impl NameTable {
    pub(crate) fn new(s: &[u32]) -> Self {
        let (base, _) = rename_symbols(s);
        let n = s.len();
        let mut names = vec![base];
        let mut span = 1;
        while span * 2 <= n {
            let prev = names.last().unwrap();
            let pairs: Vec<(u32, u32)> = (0..=n - 2 * span).map(|x| (prev[x], prev[x + span])).collect();
            let (ids, _) = rename_pairs(&pairs, n + 1);
            names.push(ids);
            span *= 2;
        }
        NameTable { names }
    }

    /// Identifier of `s[x..x + len]` (0-based), comparable between
    /// fragments of equal length.
    pub(crate) fn id(&self, x: usize, len: usize) -> (u32, u32) {
        let lg = (usize::BITS - 1 - len.leading_zeros()) as usize;
        let t = &self.names[lg];
        (t[x], t[x + len - (1 << lg)])
    }
}

/// All distinct squares of `s`, one entry per distinct content, sorted by
/// `(len, start)` with the leftmost witness.
pub fn distinct_squares(s: &[u32]) -> Vec<Square> {
    let runs = runs1d(s);
    if runs.is_empty() {
        return Vec::new();
    }
    distinct_squares_from_runs(s, &runs)
}

pub(crate) fn distinct_squares_from_runs(s: &[u32], runs: &[Run1D]) -> Vec<Square> {
    let names = NameTable::new(s);
    // (len, id, start), 0-based starts
    let mut cands: Vec<(usize, (u32, u32), usize)> = Vec::new();
    for r in runs {
        let (st, en, p) = (r.start - 1, r.end, r.period);
        let mut half = p;
        while 2 * half <= en - st {
            let last = (st + p - 1).min(en - 2 * half);
            for x in st..=last {
                cands.push((2 * half, names.id(x, 2 * half), x));
            }
            half += p;
        }
    }
    cands.sort_unstable();
    cands.dedup_by(|b, a| a.0 == b.0 && a.1 == b.1);
    let mut out: Vec<Square> = cands
        .into_iter()
        .map(|(len, _, x)| Square { len, start: x + 1 })
        .collect();
    out.sort_unstable();
    out
}
