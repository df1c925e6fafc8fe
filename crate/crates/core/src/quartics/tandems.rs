//! Distinct tandems `W^{1,2}`: for each height `h`, columns of height `h`
//! become symbols of the rows of `B_h`, and tandems are the squares of those
//! rows.

use serde::Serialize;

use crate::dbf::{Dbf2D, RectId};
use crate::grid::Rect;
use crate::naming::rename_pairs;
use crate::onedim::distinct_squares;
use crate::par::{self, Exec};

/// A tandem up to content, with one occurrence at `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tandem {
    pub content: RectId,
    pub height: usize,
    pub width: usize,
    pub i: usize,
    pub j: usize,
}

impl Tandem {
    pub fn rect(&self) -> Rect {
        Rect::at(self.i, self.j, self.height, self.width)
    }
}

pub fn distinct_tandems(d: &Dbf2D) -> Vec<Tandem> {
    distinct_tandems_with(d, Exec::Sequential)
}

/// Sorted by `(height, width, content)`.
pub fn distinct_tandems_with(d: &Dbf2D, exec: Exec) -> Vec<Tandem> {
    if d.cols() < 2 {
        return Vec::new();
    }
    let heights: Vec<usize> = (1..=d.rows()).collect();
    par::flat_map(exec, heights, |h| tandems_of_height(d, h))
}

fn tandems_of_height(d: &Dbf2D, h: usize) -> Vec<Tandem> {
    let (m, n) = (d.rows(), d.cols());
    let top_rows = m + 1 - h;
    let pairs: Vec<(u32, u32)> = (1..=top_rows)
        .flat_map(|i| (1..=n).map(move |j| d.col_seg(i, i + h - 1, j)))
        .collect();
    let (ids, _) = rename_pairs(&pairs, m * n + 1);
    let mut found: Vec<Tandem> = Vec::new();
    for (row, b) in ids.chunks(n).enumerate() {
        let i = row + 1;
        for sq in distinct_squares(b) {
            let rect = Rect::at(i, sq.start, h, sq.len);
            found.push(Tandem {
                content: d.rect_id_of(&rect),
                height: h,
                width: sq.len,
                i,
                j: sq.start,
            });
        }
    }
    // leftmost-topmost witness per content
    found.sort_unstable_by_key(|t| (t.width, t.content, t.i, t.j));
    found.dedup_by_key(|t| (t.width, t.content));
    found
}

/// Closed form for the row-ladder grid of size `n x n`.
pub fn rowladder_tandems(n: usize) -> usize {
    n * (n + 1) / 2 * (n / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{fig3, generate, random_grid, GenParams, GeneratorKind, Grid};
    use crate::oracle::{brute_distinct_tandems, Content};
    use std::collections::BTreeSet;

    fn contents(g: &Grid) -> (usize, BTreeSet<Content>) {
        let d = Dbf2D::build(g);
        let ts = distinct_tandems(&d);
        let set: BTreeSet<Content> = ts
            .iter()
            .map(|t| (t.height, t.width, g.subarray(&t.rect())))
            .collect();
        (ts.len(), set)
    }

    #[test]
    fn unary_4x4() {
        let (n, set) = contents(&Grid::filled(4, 4, b'a').unwrap());
        assert_eq!(n, 8);
        assert_eq!(set.len(), 8);
    }

    #[test]
    fn rowladder_closed_form() {
        for n in [4usize, 8] {
            let g = generate(GeneratorKind::RowLadder, &GenParams::dims(n, n)).unwrap();
            let (count, set) = contents(&g);
            assert_eq!(count, rowladder_tandems(n));
            assert_eq!(set, brute_distinct_tandems(&g));
        }
        assert_eq!(rowladder_tandems(4), 20);
        assert_eq!(rowladder_tandems(16), 1088);
    }

    #[test]
    fn fig3_matches_oracle() {
        let g = fig3();
        let (n, set) = contents(&g);
        assert_eq!(n, set.len());
        assert_eq!(set, brute_distinct_tandems(&g));
    }

    #[test]
    fn matches_oracle_on_random_grids() {
        for seed in 0..300 {
            let (m, n) = (1 + seed as usize % 9, 1 + (seed as usize / 9) % 9);
            let g = random_grid(m, n, 2 + seed as usize % 2, seed);
            let (count, set) = contents(&g);
            assert_eq!(count, set.len());
            assert_eq!(set, brute_distinct_tandems(&g), "{g:?}");
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let d = Dbf2D::build(&random_grid(20, 20, 2, 4));
        assert_eq!(distinct_tandems_with(&d, Exec::Parallel), distinct_tandems(&d));
    }
}
