//! Two-dimensional periodicity and enumeration of 2D-runs.
//!
//! The enumerator anchors every 2D-run of height in `[2^k, 2^(k+1))` at the
//! top-left or bottom-left corner of a run of some meta-string `H^k_i`,
//! whose symbols are the height-`2^k` column strips starting at row `i`.
//! For each anchored width only a constant number of vertical periods can
//! occur; each is grown to a maximal rectangle and then checked exactly.

use serde::Serialize;

use crate::dbf::{floor_log2, Dbf2D};
use crate::error::{Error, Result};
use crate::grid::{Grid, Rect};
use crate::onedim::{prefix_periods, runs1d, smallest_period};
use crate::par::{self, Exec};

pub use crate::oracle::brute_runs2d;

/// A maximal doubly periodic rectangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Run2D {
    pub rect: Rect,
    /// Smallest horizontal period (columns).
    pub hper: usize,
    /// Smallest vertical period (rows).
    pub vper: usize,
}

/// Dimensions of the primitive root and the exponents tiling the array.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrimitiveRoot {
    pub rows: usize,
    pub cols: usize,
    /// Vertical exponent: `rows * alpha = height`.
    pub alpha: usize,
    /// Horizontal exponent: `cols * beta = width`.
    pub beta: usize,
}

/// Row `i` of the height-`2^k` window, as column-strip identifiers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetaString {
    pub row: usize,
    pub level: usize,
    pub symbols: Vec<u32>,
}

fn check_rect(d: &Dbf2D, r: &Rect) -> Result<()> {
    if r.i1 >= 1 && r.j1 >= 1 && r.i1 <= r.i2 && r.j1 <= r.j2 && r.i2 <= d.rows() && r.j2 <= d.cols() {
        Ok(())
    } else {
        Err(Error::OutOfBounds {
            what: format!("rect {r}"),
            rows: d.rows(),
            cols: d.cols(),
        })
    }
}

fn column_ids(d: &Dbf2D, r: &Rect) -> Vec<(u32, u32)> {
    (r.j1..=r.j2).map(|j| d.col_seg(r.i1, r.i2, j)).collect()
}

fn row_ids(d: &Dbf2D, r: &Rect) -> Vec<(u32, u32)> {
    (r.i1..=r.i2).map(|i| d.row_seg(i, r.j1, r.j2)).collect()
}

/// Smallest horizontal period of the subarray `r`.
pub fn hper(d: &Dbf2D, r: &Rect) -> Result<usize> {
    check_rect(d, r)?;
    smallest_period(&column_ids(d, r))
}

/// Smallest vertical period of the subarray `r`.
pub fn vper(d: &Dbf2D, r: &Rect) -> Result<usize> {
    check_rect(d, r)?;
    smallest_period(&row_ids(d, r))
}

/// Primitive root of the subarray `r`. The smallest period of a sequence
/// that divides its length is either its smallest period or the length
/// itself, independently in each direction.
pub fn primitive_root(d: &Dbf2D, r: &Rect) -> Result<PrimitiveRoot> {
    let (h, w) = (r.height(), r.width());
    let q = vper(d, r)?;
    let p = hper(d, r)?;
    let rows = if h % q == 0 { q } else { h };
    let cols = if w % p == 0 { p } else { w };
    Ok(PrimitiveRoot {
        rows,
        cols,
        alpha: h / rows,
        beta: w / cols,
    })
}

/// Meta-string `H^k_i`. Identifiers are shared across all `i` for a fixed `k`.
pub fn meta_string(d: &Dbf2D, i: usize, k: usize) -> Result<MetaString> {
    let height = 1usize.checked_shl(k as u32).unwrap_or(usize::MAX);
    if height > d.rows() {
        return Err(Error::OutOfBounds {
            what: format!("level {k}"),
            rows: d.rows(),
            cols: d.cols(),
        });
    }
    if i == 0 || i > d.rows() - height + 1 {
        return Err(Error::OutOfBounds {
            what: format!("meta-string row {i} at level {k}"),
            rows: d.rows(),
            cols: d.cols(),
        });
    }
    Ok(MetaString {
        row: i,
        level: k,
        symbols: (1..=d.cols()).map(|j| d.col_block(k, i, j)).collect(),
    })
}

/// Distinct smallest periods `p > 2^(k-1)` of prefixes `B'` of `rows` with
/// `|B'| >= 2^k` and `p <= |B'| / 2`. There are at most two of them when
/// `|rows| < 2^(k+1)`.
pub fn long_prefix_periods<T: Eq>(rows: &[T], k: usize) -> Vec<usize> {
    let min_len = 1usize << k;
    let half = min_len / 2;
    let per = prefix_periods(rows);
    let mut out: Vec<usize> = (min_len..=rows.len())
        .map(|len| (len, per[len - 1]))
        .filter(|&(len, p)| p > half && 2 * p <= len)
        .map(|(_, p)| p)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Candidate vertical periods from a row-identifier sequence ordered away
/// from the anchor: the period of the first `2^k` rows when it is at most
/// `2^(k-1)`, plus the long prefix periods.
fn candidates_from_rows<T: Eq>(rows: &[T], k: usize) -> Vec<usize> {
    let min_len = 1usize << k;
    let mut out = long_prefix_periods(rows, k);
    if rows.len() >= min_len {
        let slice_per = prefix_periods(&rows[..min_len])[min_len - 1];
        if 2 * slice_per <= min_len {
            out.push(slice_per);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Candidate smallest vertical periods for a 2D-run with top-left corner
/// `(i, j)`, width `w` and height in `[2^k, 2^(k+1))`.
pub fn vperiod_candidates(d: &Dbf2D, i: usize, j: usize, w: usize, k: usize) -> Result<Vec<usize>> {
    let h = 1usize << k;
    let slice = Rect::at(i, j, h, w.max(1));
    if w == 0 || i == 0 || j == 0 || i + h - 1 > d.rows() || j + w - 1 > d.cols() {
        return Err(Error::OutOfBounds {
            what: format!("slice {slice}"),
            rows: d.rows(),
            cols: d.cols(),
        });
    }
    Ok(top_candidates(d, i, j, w, k))
}

fn top_candidates(d: &Dbf2D, i: usize, j: usize, w: usize, k: usize) -> Vec<usize> {
    let last = (i + (2 << k) - 2).min(d.rows());
    let rows: Vec<(u32, u32)> = (i..=last).map(|t| d.row_seg(t, j, j + w - 1)).collect();
    candidates_from_rows(&rows, k)
}

fn bottom_candidates(d: &Dbf2D, bottom: usize, j: usize, w: usize, k: usize) -> Vec<usize> {
    let first = (bottom + 2).saturating_sub(2 << k).max(1);
    let rows: Vec<(u32, u32)> = (first..=bottom).rev().map(|t| d.row_seg(t, j, j + w - 1)).collect();
    candidates_from_rows(&rows, k)
}

/// Exact check of a rectangle: `Some((hper, vper))` iff it is a 2D-run.
/// Periods cost `O(height + width)`; each one-line extension is tested in
/// `O(1)` (it keeps both periods iff the new line repeats the line one
/// period inside).
pub fn check_run(d: &Dbf2D, r: &Rect) -> Option<(usize, usize)> {
    let p = smallest_period(&column_ids(d, r)).ok()?;
    if 2 * p > r.width() {
        return None;
    }
    let q = smallest_period(&row_ids(d, r)).ok()?;
    if 2 * q > r.height() {
        return None;
    }
    let row = |i: usize| d.row_seg(i, r.j1, r.j2);
    let col = |j: usize| d.col_seg(r.i1, r.i2, j);
    if r.i1 > 1 && row(r.i1 - 1) == row(r.i1 - 1 + q) {
        return None;
    }
    if r.i2 < d.rows() && row(r.i2 + 1) == row(r.i2 + 1 - q) {
        return None;
    }
    if r.j1 > 1 && col(r.j1 - 1) == col(r.j1 - 1 + p) {
        return None;
    }
    if r.j2 < d.cols() && col(r.j2 + 1) == col(r.j2 + 1 - p) {
        return None;
    }
    Some((p, q))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Anchor {
    Top,
    Bottom,
}

/// Grows the rows of width `w` at column `j` from the anchor row away from
/// it while vertical period `q` holds. Returns the far row, or `None` when
/// the height falls outside `[max(2^k, 2q), 2^(k+1))`.
fn grow(d: &Dbf2D, anchor: Anchor, row0: usize, j: usize, w: usize, q: usize, k: usize) -> Option<usize> {
    let lo = 1usize << k;
    let hi = 2usize << k;
    let row = |t: usize| d.row_seg(t, j, j + w - 1);
    let mut height = q;
    match anchor {
        Anchor::Top => {
            while height < hi && row0 + height <= d.rows() && row(row0 + height) == row(row0 + height - q) {
                height += 1;
            }
        }
        Anchor::Bottom => {
            while height < hi && height < row0 && row(row0 - height) == row(row0 - height + q) {
                height += 1;
            }
        }
    }
    if height < lo.max(2 * q) || height >= hi {
        return None;
    }
    Some(match anchor {
        Anchor::Top => row0 + height - 1,
        Anchor::Bottom => row0 + 1 - height,
    })
}

/// Candidate rectangles generated from meta-string `H^k_i`, before the exact
/// check.
fn candidates_for(d: &Dbf2D, k: usize, i: usize) -> Vec<(Rect, usize, usize)> {
    let h = 1usize << k;
    let meta: Vec<u32> = (1..=d.cols()).map(|j| d.col_block(k, i, j)).collect();
    let bottom = i + h - 1;
    let mut out = Vec::new();
    for u in runs1d(&meta) {
        let p = u.period;
        for w in 2 * p..=u.len() {
            let j = u.start;
            for q in top_candidates(d, i, j, w, k) {
                if let Some(i2) = grow(d, Anchor::Top, i, j, w, q, k) {
                    out.push((Rect::new(i, i2, j, j + w - 1), p, q));
                }
            }
            for q in bottom_candidates(d, bottom, j, w, k) {
                if let Some(i1) = grow(d, Anchor::Bottom, bottom, j, w, q, k) {
                    out.push((Rect::new(i1, bottom, j, j + w - 1), p, q));
                }
            }
        }
    }
    out
}

fn tasks(d: &Dbf2D) -> Vec<(usize, usize)> {
    let mut t = Vec::new();
    for k in 1..=d.max_row_level() {
        for i in 1..=d.rows() + 1 - (1 << k) {
            t.push((k, i));
        }
    }
    t
}

/// All rectangles reaching the exact check, sorted and deduplicated.
pub fn run_candidates(d: &Dbf2D) -> Vec<Rect> {
    let mut rects: Vec<Rect> = tasks(d)
        .into_iter()
        .flat_map(|(k, i)| candidates_for(d, k, i))
        .map(|(r, _, _)| r)
        .collect();
    rects.sort_unstable_by_key(Rect::listing_key);
    rects.dedup();
    rects
}

/// All 2D-runs, sorted by `(i1, j1, i2, j2)`.
pub fn enumerate_runs2d(d: &Dbf2D) -> Vec<Run2D> {
    enumerate_runs2d_with(d, Exec::Sequential)
}

/// [`enumerate_runs2d`] with the `(k, i)` tasks distributed per `exec`.
pub fn enumerate_runs2d_with(d: &Dbf2D, exec: Exec) -> Vec<Run2D> {
    let mut runs = par::flat_map(exec, tasks(d), |(k, i)| {
        candidates_for(d, k, i)
            .into_iter()
            .filter_map(|(rect, p, q)| match check_run(d, &rect) {
                Some((hp, vp)) if hp == p && vp == q => Some(Run2D { rect, hper: p, vper: q }),
                _ => None,
            })
            .collect::<Vec<_>>()
    });
    runs.sort_unstable_by_key(|r| r.rect.listing_key());
    runs.dedup();
    runs
}

/// Convenience: builds the identifier tables and enumerates.
pub fn runs2d_of(grid: &Grid) -> Vec<Run2D> {
    enumerate_runs2d(&Dbf2D::build(grid))
}

/// Upper end of the Theorem-style count bound used for monitoring:
/// `8 m n ceil(log2 m) ceil(log2 n)`.
pub fn monitoring_bound(m: usize, n: usize) -> usize {
    let lg = |x: usize| if x <= 1 { 1 } else { floor_log2(x - 1) + 1 };
    8 * m * n * lg(m) * lg(n)
}
