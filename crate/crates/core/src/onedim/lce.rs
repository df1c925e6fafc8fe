//! Suffix array, LCP array and constant-time longest-common-extension queries
//! over integer sequences.

use crate::naming::{rename_pairs, rename_symbols};

/// Suffix ranks by prefix doubling with radix-sorted renaming, `O(n log n)`.
/// A suffix that is a proper prefix of another sorts first.
pub fn suffix_ranks(s: &[u32]) -> Vec<u32> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let (first, count) = rename_symbols(s);
    let mut rank: Vec<u32> = first.into_iter().map(|r| r + 1).collect();
    if count == n {
        return rank.into_iter().map(|r| r - 1).collect();
    }
    let mut k = 1;
    loop {
        let pairs: Vec<(u32, u32)> = (0..n)
            .map(|i| (rank[i], if i + k < n { rank[i + k] } else { 0 }))
            .collect();
        let (ids, count) = rename_pairs(&pairs, n + 2);
        rank = ids.into_iter().map(|r| r + 1).collect();
        if count == n {
            break;
        }
        k *= 2;
    }
    rank.into_iter().map(|r| r - 1).collect()
}

pub fn suffix_array_from_ranks(rank: &[u32]) -> Vec<usize> {
    let mut sa = vec![0usize; rank.len()];
    for (i, &r) in rank.iter().enumerate() {
        sa[r as usize] = i;
    }
    sa
}

/// Kasai's algorithm: `lcp[r]` is the LCP of suffixes `sa[r-1]` and `sa[r]`
/// (`lcp[0] = 0`).
pub fn lcp_array(s: &[u32], sa: &[usize], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1];
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Sparse table for range-minimum queries.
#[derive(Clone, Debug)]
pub struct SparseMin {
    levels: Vec<Vec<u32>>,
}

impl SparseMin {
    pub fn new(values: &[u32]) -> Self {
        let mut levels = vec![values.to_vec()];
        let mut span = 1;
        while span * 2 <= values.len() {
            let prev = levels.last().unwrap();
            let next: Vec<u32> = (0..=values.len() - span * 2)
                .map(|i| prev[i].min(prev[i + span]))
                .collect();
            levels.push(next);
            span *= 2;
        }
        SparseMin { levels }
    }

    /// Minimum over the inclusive range `[lo, hi]`.
    pub fn min(&self, lo: usize, hi: usize) -> u32 {
        debug_assert!(lo <= hi);
        let lg = usize::BITS - 1 - (hi - lo + 1).leading_zeros();
        let t = &self.levels[lg as usize];
        t[lo].min(t[hi + 1 - (1 << lg)])
    }
}

/// Longest common extension of two suffixes in `O(1)` after `O(n log n)`
/// preprocessing.
#[derive(Clone, Debug)]
pub struct LceIndex {
    rank: Vec<u32>,
    lcp: SparseMin,
}

impl LceIndex {
    pub fn new(s: &[u32]) -> Self {
        let rank = suffix_ranks(s);
        let sa = suffix_array_from_ranks(&rank);
        let lcp = lcp_array(s, &sa, &rank);
        LceIndex {
            lcp: SparseMin::new(&lcp),
            rank,
        }
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    /// Length of the longest common prefix of suffixes `i` and `j` (0-based).
    pub fn lce(&self, i: usize, j: usize) -> usize {
        let n = self.rank.len();
        if i >= n || j >= n {
            return 0;
        }
        if i == j {
            return n - i;
        }
        let (a, b) = {
            let (ri, rj) = (self.rank[i] as usize, self.rank[j] as usize);
            if ri < rj {
                (ri, rj)
            } else {
                (rj, ri)
            }
        };
        self.lcp.min(a + 1, b) as usize
    }
}

/// Lyndon array: `out[i]` is the length of the longest Lyndon word starting
/// at `i`, computed as the distance to the next lexicographically smaller
/// suffix.
pub fn lyndon_array(rank: &[u32]) -> Vec<usize> {
    let n = rank.len();
    let mut out = vec![0usize; n];
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    for i in (0..n).rev() {
        while let Some(&top) = stack.last() {
            if rank[top] > rank[i] {
                stack.pop();
            } else {
                break;
            }
        }
        out[i] = stack.last().map_or(n, |&t| t) - i;
        stack.push(i);
    }
    out
}
