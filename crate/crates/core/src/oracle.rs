//! Brute-force reference implementations.
//!
//! Everything here works cell by cell on the [`Grid`] and implements the
//! definitions literally; nothing uses the identifier tables or the 1D run
//! machinery, so agreement with the efficient paths is meaningful. Intended
//! for grids up to roughly 12x12.

use std::collections::BTreeSet;

use crate::grid::{Grid, Rect, Shape};
use crate::quartics::QuarticOcc;
use crate::runs2d::Run2D;

/// A content-identified subarray: `(height, width, cells row-major)`.
pub type Content = (usize, usize, Vec<u8>);

fn cols_equal(g: &Grid, r: &Rect, a: usize, b: usize) -> bool {
    (r.i1..=r.i2).all(|i| g.cell(i, a) == g.cell(i, b))
}

fn rows_equal(g: &Grid, r: &Rect, a: usize, b: usize) -> bool {
    (r.j1..=r.j2).all(|j| g.cell(a, j) == g.cell(b, j))
}

/// Smallest horizontal period by trying every shift.
pub fn naive_hper(g: &Grid, r: &Rect) -> usize {
    (1..=r.width())
        .find(|&p| (r.j1..=r.j2 - p).all(|j| cols_equal(g, r, j, j + p)))
        .unwrap()
}

/// Smallest vertical period by trying every shift.
pub fn naive_vper(g: &Grid, r: &Rect) -> usize {
    (1..=r.height())
        .find(|&q| (r.i1..=r.i2 - q).all(|i| rows_equal(g, r, i, i + q)))
        .unwrap()
}

fn extensions(g: &Grid, r: &Rect) -> Vec<Rect> {
    let mut out = Vec::with_capacity(4);
    if r.i1 > 1 {
        out.push(Rect::new(r.i1 - 1, r.i2, r.j1, r.j2));
    }
    if r.i2 < g.rows() {
        out.push(Rect::new(r.i1, r.i2 + 1, r.j1, r.j2));
    }
    if r.j1 > 1 {
        out.push(Rect::new(r.i1, r.i2, r.j1 - 1, r.j2));
    }
    if r.j2 < g.cols() {
        out.push(Rect::new(r.i1, r.i2, r.j1, r.j2 + 1));
    }
    out
}

/// `Some((hper, vper))` iff `r` is a 2D-run: both periods at most half the
/// side and every one-line extension changes one of them.
pub fn naive_run_periods(g: &Grid, r: &Rect) -> Option<(usize, usize)> {
    let p = naive_hper(g, r);
    if 2 * p > r.width() {
        return None;
    }
    let q = naive_vper(g, r);
    if 2 * q > r.height() {
        return None;
    }
    let maximal = extensions(g, r)
        .iter()
        .all(|e| naive_hper(g, e) != p || naive_vper(g, e) != q);
    maximal.then_some((p, q))
}

/// Every subarray tested against the 2D-run definition.
pub fn brute_runs2d(g: &Grid) -> Vec<Run2D> {
    let (m, n) = (g.rows(), g.cols());
    let mut out = Vec::new();
    for i1 in 1..=m {
        for i2 in i1 + 1..=m {
            for j1 in 1..=n {
                for j2 in j1 + 1..=n {
                    let rect = Rect::new(i1, i2, j1, j2);
                    if let Some((hper, vper)) = naive_run_periods(g, &rect) {
                        out.push(Run2D { rect, hper, vper });
                    }
                }
            }
        }
    }
    out.sort_unstable_by_key(|r| r.rect.listing_key());
    out
}

fn tiles(g: &Grid, r: &Rect, rows: usize, cols: usize) -> bool {
    (r.i1..=r.i2).all(|i| {
        (r.j1..=r.j2).all(|j| {
            g.cell(i, j) == g.cell(r.i1 + (i - r.i1) % rows, r.j1 + (j - r.j1) % cols)
        })
    })
}

/// Primitive root dimensions `(rows, cols)` found by trying every divisor
/// tiling and keeping the smallest.
pub fn brute_primitive_root(g: &Grid, r: &Rect) -> (usize, usize) {
    let (h, w) = (r.height(), r.width());
    let mut best = (h, w);
    for rows in (1..=h).filter(|d| h % d == 0) {
        for cols in (1..=w).filter(|d| w % d == 0) {
            if rows * cols < best.0 * best.1 && tiles(g, r, rows, cols) {
                best = (rows, cols);
            }
        }
    }
    best
}

pub fn brute_is_primitive(g: &Grid, r: &Rect) -> bool {
    brute_primitive_root(g, r) == (r.height(), r.width())
}

fn quadrants_equal(g: &Grid, i: usize, j: usize, rows: usize, cols: usize) -> bool {
    (0..rows).all(|di| {
        (0..cols).all(|dj| {
            let c = g.cell(i + di, j + dj);
            c == g.cell(i + di, j + dj + cols)
                && c == g.cell(i + di + rows, j + dj)
                && c == g.cell(i + di + rows, j + dj + cols)
        })
    })
}

/// All positioned occurrences of `W^{2,2}` with primitive `W`.
pub fn brute_prq_occurrences(g: &Grid) -> Vec<QuarticOcc> {
    let (m, n) = (g.rows(), g.cols());
    let mut out = Vec::new();
    for rows in 1..=m / 2 {
        for cols in 1..=n / 2 {
            for i in 1..=m + 1 - 2 * rows {
                for j in 1..=n + 1 - 2 * cols {
                    if quadrants_equal(g, i, j, rows, cols)
                        && brute_is_primitive(g, &Rect::at(i, j, rows, cols))
                    {
                        out.push(QuarticOcc {
                            i,
                            j,
                            root_rows: rows,
                            root_cols: cols,
                        });
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// All positioned quartics `W^{2,2}`, primitive or not; `root_*` are the
/// dimensions of `W`.
pub fn brute_quartic_occurrences(g: &Grid) -> Vec<QuarticOcc> {
    let (m, n) = (g.rows(), g.cols());
    let mut out = Vec::new();
    for rows in 1..=m / 2 {
        for cols in 1..=n / 2 {
            for i in 1..=m + 1 - 2 * rows {
                for j in 1..=n + 1 - 2 * cols {
                    if quadrants_equal(g, i, j, rows, cols) {
                        out.push(QuarticOcc {
                            i,
                            j,
                            root_rows: rows,
                            root_cols: cols,
                        });
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Contents of all subarrays whose four quadrants are equal.
pub fn brute_distinct_quartics(g: &Grid) -> BTreeSet<Content> {
    brute_quartic_occurrences(g)
        .into_iter()
        .map(|o| {
            let r = Rect::at(o.i, o.j, 2 * o.root_rows, 2 * o.root_cols);
            (r.height(), r.width(), g.subarray(&r))
        })
        .collect()
}

/// Contents of all subarrays made of two equal side-by-side halves.
pub fn brute_distinct_tandems(g: &Grid) -> BTreeSet<Content> {
    let (m, n) = (g.rows(), g.cols());
    let mut out = BTreeSet::new();
    for h in 1..=m {
        for half in 1..=n / 2 {
            for i in 1..=m + 1 - h {
                for j in 1..=n + 1 - 2 * half {
                    let equal = (i..i + h)
                        .all(|r| (j..j + half).all(|c| g.cell(r, c) == g.cell(r, c + half)));
                    if equal {
                        out.insert((h, 2 * half, g.subarray(&Rect::at(i, j, h, 2 * half))));
                    }
                }
            }
        }
    }
    out
}

/// Nearest smaller values by direct scan, 1-based with sentinels `0` and
/// `m + 1`.
pub fn brute_nsv(whites: &[i64]) -> (Vec<usize>, Vec<usize>) {
    let m = whites.len();
    let up = (0..m)
        .map(|i| (0..i).rev().find(|&j| whites[j] < whites[i]).map_or(0, |j| j + 1))
        .collect();
    let down = (0..m)
        .map(|i| (i + 1..m).find(|&j| whites[j] < whites[i]).map_or(m + 1, |j| j + 1))
        .collect();
    (up, down)
}

/// Maximal white rectangles by enumerating every row interval: `O(m^2)`
/// shapes, then a dominance filter.
pub fn brute_max_white_rectangles(whites: &[i64]) -> Vec<Shape> {
    let m = whites.len();
    let mut best_width = vec![0i64; m + 1];
    for top in 0..m {
        let mut min = i64::MAX;
        for bottom in top..m {
            min = min.min(whites[bottom]);
            let h = bottom - top + 1;
            best_width[h] = best_width[h].max(min);
        }
    }
    let shapes: Vec<Shape> = (1..=m)
        .filter(|&h| best_width[h] > 0)
        .map(|h| Shape::new(h, best_width[h] as usize))
        .collect();
    let mut out: Vec<Shape> = shapes
        .iter()
        .filter(|s| !shapes.iter().any(|t| s.dominated_by(t)))
        .copied()
        .collect();
    out.sort_unstable();
    out
}

/// Rasterized union of each family of rectangles.
pub fn naive_union(families: &[Vec<Rect>]) -> Vec<Vec<(usize, usize)>> {
    families
        .iter()
        .map(|rects| {
            let mut pts = BTreeSet::new();
            for r in rects {
                for i in r.i1..=r.i2 {
                    for j in r.j1..=r.j2 {
                        pts.insert((i, j));
                    }
                }
            }
            pts.into_iter().collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_root_examples() {
        let g = Grid::from_rows(&["ab", "ab"]).unwrap();
        assert_eq!(brute_primitive_root(&g, &g.full_rect()), (1, 2));
        let g = Grid::filled(2, 2, b'a').unwrap();
        assert_eq!(brute_primitive_root(&g, &g.full_rect()), (1, 1));
        let g = Grid::from_rows(&["ab", "ba"]).unwrap();
        assert_eq!(brute_primitive_root(&g, &g.full_rect()), (2, 2));
    }

    #[test]
    fn nsv_example() {
        let (up, down) = brute_nsv(&[3, 7, 6, 7, 8, 6, 2]);
        assert_eq!(up[3], 3);
        assert_eq!(down[3], 6);
    }

    #[test]
    fn unary_runs() {
        let g = Grid::filled(4, 4, b'a').unwrap();
        let runs = brute_runs2d(&g);
        assert_eq!(runs.len(), 1);
        assert_eq!(runs[0].rect, g.full_rect());
        assert_eq!((runs[0].hper, runs[0].vper), (1, 1));
    }
}
