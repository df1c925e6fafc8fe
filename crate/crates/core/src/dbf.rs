//! Dictionary of basic factors in two dimensions.
//!
//! Every `2^k x 2^l` block of the grid gets a dense identifier; blocks of
//! equal dimensions are equal iff their identifiers are. Arbitrary subarrays
//! are identified by the four corner-anchored blocks covering them. Level
//! `(k, 0)` doubles as the column-strip table for height-`2^k` segments.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{Grid, Rect};
use crate::naming::{rename_pairs, rename_symbols};

#[inline]
pub(crate) fn floor_log2(x: usize) -> usize {
    debug_assert!(x > 0);
    (usize::BITS - 1 - x.leading_zeros()) as usize
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Level {
    /// Number of valid top-left rows, `m - 2^k + 1`.
    rows: usize,
    cols: usize,
    ids: Vec<u32>,
    distinct: usize,
}

impl Level {
    #[inline]
    fn at(&self, i: usize, j: usize) -> u32 {
        self.ids[(i - 1) * self.cols + (j - 1)]
    }
}

/// Identifier of an arbitrary subarray: the four corner blocks plus its
/// dimensions. Equal for two subarrays iff they are equal cell-wise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RectId {
    pub height: usize,
    pub width: usize,
    pub ids: [u32; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dbf2D {
    rows: usize,
    cols: usize,
    log_rows: usize,
    log_cols: usize,
    levels: Vec<Level>,
}

impl Dbf2D {
    /// Builds every level by doubling, first horizontally on level row 0,
    /// then vertically, renaming each level with a radix sort.
    pub fn build(grid: &Grid) -> Self {
        let (m, n) = (grid.rows(), grid.cols());
        let log_rows = floor_log2(m);
        let log_cols = floor_log2(n);
        let bound = m * n + 1;
        let mut levels: Vec<Option<Level>> = vec![None; (log_rows + 1) * (log_cols + 1)];
        let slot = |k: usize, l: usize| k * (log_cols + 1) + l;

        let (base, distinct) = rename_symbols(grid.cells());
        levels[slot(0, 0)] = Some(Level {
            rows: m,
            cols: n,
            ids: base,
            distinct,
        });
        for l in 1..=log_cols {
            let prev = levels[slot(0, l - 1)].as_ref().unwrap();
            let half = 1 << (l - 1);
            let cols = n - (1 << l) + 1;
            let mut pairs = Vec::with_capacity(m * cols);
            for i in 1..=m {
                for j in 1..=cols {
                    pairs.push((prev.at(i, j), prev.at(i, j + half)));
                }
            }
            let (ids, distinct) = rename_pairs(&pairs, bound);
            levels[slot(0, l)] = Some(Level { rows: m, cols, ids, distinct });
        }
        for k in 1..=log_rows {
            let half = 1 << (k - 1);
            let rows = m - (1 << k) + 1;
            for l in 0..=log_cols {
                let prev = levels[slot(k - 1, l)].as_ref().unwrap();
                let cols = prev.cols;
                let mut pairs = Vec::with_capacity(rows * cols);
                for i in 1..=rows {
                    for j in 1..=cols {
                        pairs.push((prev.at(i, j), prev.at(i + half, j)));
                    }
                }
                let (ids, distinct) = rename_pairs(&pairs, bound);
                levels[slot(k, l)] = Some(Level { rows, cols, ids, distinct });
            }
        }
        Dbf2D {
            rows: m,
            cols: n,
            log_rows,
            log_cols,
            levels: levels.into_iter().map(Option::unwrap).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Largest `k` with `2^k <= rows`.
    pub fn max_row_level(&self) -> usize {
        self.log_rows
    }

    pub fn max_col_level(&self) -> usize {
        self.log_cols
    }

    #[inline]
    fn level(&self, k: usize, l: usize) -> &Level {
        &self.levels[k * (self.log_cols + 1) + l]
    }

    /// Identifier of the `2^k x 2^l` block with top-left `(i, j)`.
    pub fn block(&self, k: usize, l: usize, i: usize, j: usize) -> Option<u32> {
        if k > self.log_rows || l > self.log_cols {
            return None;
        }
        let lv = self.level(k, l);
        if (1..=lv.rows).contains(&i) && (1..=lv.cols).contains(&j) {
            Some(lv.at(i, j))
        } else {
            None
        }
    }

    /// Number of distinct identifiers at level `(k, l)`.
    pub fn distinct_at(&self, k: usize, l: usize) -> usize {
        self.level(k, l).distinct
    }

    /// Number of block positions at level `(k, l)`.
    pub fn positions_at(&self, k: usize, l: usize) -> usize {
        let lv = self.level(k, l);
        lv.rows * lv.cols
    }

    pub fn level_ids(&self, k: usize, l: usize) -> &[u32] {
        &self.level(k, l).ids
    }

    /// Identifier of the height-`2^k` column strip starting at `(i, j)`.
    #[inline]
    pub(crate) fn col_block(&self, k: usize, i: usize, j: usize) -> u32 {
        self.level(k, 0).at(i, j)
    }

    /// Unchecked [`Dbf2D::rect_id`].
    #[inline]
    pub(crate) fn rect_id_of(&self, r: &Rect) -> RectId {
        let (h, w) = (r.height(), r.width());
        let (k, l) = (floor_log2(h), floor_log2(w));
        let lv = self.level(k, l);
        let (i_lo, j_lo) = (r.i2 + 1 - (1 << k), r.j2 + 1 - (1 << l));
        RectId {
            height: h,
            width: w,
            ids: [
                lv.at(r.i1, r.j1),
                lv.at(r.i1, j_lo),
                lv.at(i_lo, r.j1),
                lv.at(i_lo, j_lo),
            ],
        }
    }

    /// Identifier of an arbitrary rectangle from four corner blocks.
    pub fn rect_id(&self, r: &Rect) -> Result<RectId> {
        self.check(r)?;
        Ok(self.rect_id_of(r))
    }

    /// Constant-time equality of two equally sized subarrays.
    pub fn eq_rect(&self, a: &Rect, b: &Rect) -> Result<bool> {
        if (a.height(), a.width()) != (b.height(), b.width()) {
            return Err(Error::DimensionMismatch(format!(
                "{a} is {}x{}, {b} is {}x{}",
                a.height(),
                a.width(),
                b.height(),
                b.width()
            )));
        }
        Ok(self.rect_id(a)? == self.rect_id(b)?)
    }

    /// Unchecked column-segment identifier for rows `i1..=i2` of column `j`.
    #[inline]
    pub(crate) fn col_seg(&self, i1: usize, i2: usize, j: usize) -> (u32, u32) {
        let k = floor_log2(i2 - i1 + 1);
        let lv = self.level(k, 0);
        (lv.at(i1, j), lv.at(i2 + 1 - (1 << k), j))
    }

    /// Unchecked row-segment identifier for columns `j1..=j2` of row `i`.
    #[inline]
    pub(crate) fn row_seg(&self, i: usize, j1: usize, j2: usize) -> (u32, u32) {
        let l = floor_log2(j2 - j1 + 1);
        let lv = self.level(0, l);
        (lv.at(i, j1), lv.at(i, j2 + 1 - (1 << l)))
    }

    /// Two overlapping power-of-two column-strip identifiers covering rows
    /// `i1..=i2` of column `j`; equal pairs mean equal segments when the
    /// heights agree.
    pub fn vstrip_id(&self, i1: usize, i2: usize, j: usize) -> Result<(u32, u32)> {
        if i1 == 0 || i1 > i2 || i2 > self.rows || j == 0 || j > self.cols {
            return Err(Error::OutOfBounds {
                what: format!("column strip rows {i1}..{i2} at column {j}"),
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.col_seg(i1, i2, j))
    }

    fn check(&self, r: &Rect) -> Result<()> {
        if r.i1 >= 1 && r.j1 >= 1 && r.i1 <= r.i2 && r.j1 <= r.j2 && r.i2 <= self.rows && r.j2 <= self.cols {
            Ok(())
        } else {
            Err(Error::OutOfBounds {
                what: format!("rect {r}"),
                rows: self.rows,
                cols: self.cols,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{binary_grid, fig3, random_grid, GenParams, GeneratorKind};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn all_rects(m: usize, n: usize) -> Vec<Rect> {
        let mut out = Vec::new();
        for i1 in 1..=m {
            for i2 in i1..=m {
                for j1 in 1..=n {
                    for j2 in j1..=n {
                        out.push(Rect::new(i1, i2, j1, j2));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn unary_levels_are_constant() {
        let g = Grid::filled(4, 4, b'a').unwrap();
        let d = Dbf2D::build(&g);
        for k in 0..=2 {
            for l in 0..=2 {
                assert_eq!(d.distinct_at(k, l), 1);
            }
        }
    }

    #[test]
    fn fig3_cells_have_two_ids() {
        let d = Dbf2D::build(&fig3());
        assert_eq!(d.distinct_at(0, 0), 2);
    }

    #[test]
    fn single_top_level_block() {
        let g = Grid::from_rows(&["ab", "ba"]).unwrap();
        let d = Dbf2D::build(&g);
        assert_eq!(d.positions_at(1, 1), 1);
        assert_eq!(d.distinct_at(1, 1), 1);
        assert!(d.block(1, 1, 1, 1).is_some());
        assert!(d.block(1, 1, 2, 1).is_none());
    }

    #[test]
    fn rect_id_examples() {
        let u = Dbf2D::build(&Grid::filled(4, 4, b'a').unwrap());
        assert_eq!(
            u.rect_id(&Rect::new(1, 3, 1, 3)).unwrap(),
            u.rect_id(&Rect::new(2, 4, 2, 4)).unwrap()
        );
        let f = Dbf2D::build(&fig3());
        let bb = Rect::new(1, 2, 1, 2);
        assert!(f.eq_rect(&bb, &Rect::new(7, 8, 7, 8)).unwrap());
        assert!(!f.eq_rect(&bb, &Rect::new(4, 5, 4, 5)).unwrap());
        assert!(f.rect_id(&Rect::new(1, 9, 1, 1)).is_err());
        assert!(f.eq_rect(&bb, &Rect::new(1, 3, 1, 2)).is_err());
    }

    #[test]
    fn eq_rect_reflexive_and_unary() {
        let u = Dbf2D::build(&Grid::filled(5, 3, b'z').unwrap());
        for r in all_rects(5, 3) {
            assert!(u.eq_rect(&r, &r).unwrap());
            let shifted = Rect::at(1, 1, r.height(), r.width());
            assert!(u.eq_rect(&r, &shifted).unwrap());
        }
    }

    #[test]
    fn eq_rect_exhaustive_small_binary() {
        for (m, n) in [(2usize, 3usize), (3, 3), (3, 2), (1, 5)] {
            for bits in 0u64..1 << (m * n) {
                let g = binary_grid(m, n, bits);
                let d = Dbf2D::build(&g);
                let rects = all_rects(m, n);
                for a in &rects {
                    for b in &rects {
                        if (a.height(), a.width()) != (b.height(), b.width()) {
                            continue;
                        }
                        assert_eq!(d.eq_rect(a, b).unwrap(), g.subarray(a) == g.subarray(b));
                    }
                }
            }
        }
    }

    #[test]
    fn eq_rect_sampled_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for seed in 0..20 {
            let g = random_grid(8, 8, 2, seed);
            let d = Dbf2D::build(&g);
            for _ in 0..500 {
                let h = rng.gen_range(1..=8);
                let w = rng.gen_range(1..=8);
                let a = Rect::at(rng.gen_range(1..=9 - h), rng.gen_range(1..=9 - w), h, w);
                let b = Rect::at(rng.gen_range(1..=9 - h), rng.gen_range(1..=9 - w), h, w);
                assert_eq!(d.eq_rect(&a, &b).unwrap(), g.subarray(&a) == g.subarray(&b));
            }
        }
    }

    #[test]
    fn vstrip_examples() {
        let u = Dbf2D::build(&Grid::filled(6, 6, b'a').unwrap());
        assert_eq!(u.vstrip_id(1, 3, 1).unwrap(), u.vstrip_id(4, 6, 5).unwrap());
        let ladder = crate::grid::generate(GeneratorKind::RowLadder, &GenParams::dims(6, 6)).unwrap();
        let d = Dbf2D::build(&ladder);
        assert_eq!(d.vstrip_id(2, 5, 1).unwrap(), d.vstrip_id(2, 5, 6).unwrap());
        assert_ne!(d.vstrip_id(1, 3, 1).unwrap(), d.vstrip_id(2, 4, 1).unwrap());
        assert!(d.vstrip_id(3, 2, 1).is_err());
        assert!(d.vstrip_id(1, 7, 1).is_err());
    }

    #[test]
    fn rebuild_is_deterministic_and_bounded() {
        let g = random_grid(9, 13, 3, 5);
        let a = Dbf2D::build(&g);
        assert_eq!(a, Dbf2D::build(&g));
        for k in 0..=a.max_row_level() {
            for l in 0..=a.max_col_level() {
                assert!(a.distinct_at(k, l) <= a.positions_at(k, l));
                let max = *a.level_ids(k, l).iter().max().unwrap() as usize;
                assert!(max <= 9 * 13);
            }
        }
    }
}
