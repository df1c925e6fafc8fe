//! Distinct quartics `W^{2a,2b}` from the maximal powers of each primitive
//! root `W`.

use serde::Serialize;

use super::components::{build_components, keep_maximal, max_powers_in, PowerScratch, QuarticGroup};
use crate::dbf::{Dbf2D, RectId};
use crate::grid::{Rect, Shape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    PrimitivelyRooted,
    Thin,
    Thick,
}

/// A quartic up to content: `W^{row_exp, col_exp}` for a primitive `W` of
/// `root_rows x root_cols` cells, with one occurrence at `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DistinctQuartic {
    pub content: RectId,
    pub root_rows: usize,
    pub root_cols: usize,
    /// `2 alpha`, the vertical exponent.
    pub row_exp: usize,
    /// `2 beta`, the horizontal exponent.
    pub col_exp: usize,
    pub class: Classification,
    pub i: usize,
    pub j: usize,
}

impl DistinctQuartic {
    pub fn rect(&self) -> Rect {
        Rect::at(self.i, self.j, self.row_exp * self.root_rows, self.col_exp * self.root_cols)
    }

    /// Listing order: root dimensions, exponents, content.
    pub fn sort_key(&self) -> (usize, usize, usize, usize, RectId) {
        (self.root_rows, self.root_cols, self.row_exp, self.col_exp, self.content)
    }
}

pub fn classify_quartic(q: &DistinctQuartic) -> Classification {
    classify_exponents(q.row_exp / 2, q.col_exp / 2)
}

pub(crate) fn classify_exponents(alpha: usize, beta: usize) -> Classification {
    match (alpha == 1, beta == 1) {
        (true, true) => Classification::PrimitivelyRooted,
        (true, false) | (false, true) => Classification::Thin,
        (false, false) => Classification::Thick,
    }
}

/// Globally maximal powers of one root with a witness each, by increasing
/// vertical exponent.
pub(crate) fn maximal_powers(group: &QuarticGroup, scratch: &mut PowerScratch) -> Vec<(Shape, (usize, usize))> {
    let all: Vec<(Shape, (usize, usize))> = group
        .components
        .iter()
        .flat_map(|h| max_powers_in(h, scratch))
        .collect();
    keep_maximal(all)
}

/// Every `W^{2a,2b}` dominated by one of the maximal powers: for the p-th
/// power `(a_p, b_p)` in increasing `a_p`, all `a_{p-1} < 2a <= a_p` and
/// `2 <= 2b <= b_p`.
fn expand(d: &Dbf2D, group: &QuarticGroup, powers: &[(Shape, (usize, usize))], out: &mut Vec<DistinctQuartic>) {
    let (r, c) = (group.root_rows, group.root_cols);
    let mut prev = 0;
    for &(shape, (i, j)) in powers {
        let first_even = (prev / 2 + 1) * 2;
        for row_exp in (first_even..=shape.h).step_by(2) {
            for col_exp in (2..=shape.w).step_by(2) {
                let rect = Rect::at(i, j, row_exp * r, col_exp * c);
                out.push(DistinctQuartic {
                    content: d.rect_id_of(&rect),
                    root_rows: r,
                    root_cols: c,
                    row_exp,
                    col_exp,
                    class: classify_exponents(row_exp / 2, col_exp / 2),
                    i,
                    j,
                });
            }
        }
        prev = shape.h;
    }
}

/// Distinct quartics from the grouped primitively rooted quartics, in
/// listing order.
pub fn distinct_quartics_from_groups(d: &Dbf2D, groups: &[QuarticGroup]) -> Vec<DistinctQuartic> {
    let mut scratch = PowerScratch::new(d.rows(), d.cols());
    let mut out = Vec::new();
    for group in groups {
        let powers = maximal_powers(group, &mut scratch);
        expand(d, group, &powers, &mut out);
    }
    out.sort_unstable_by_key(|q| q.content);
    assert!(
        out.windows(2).all(|w| w[0].content != w[1].content),
        "one content reported twice"
    );
    out.sort_unstable_by_key(DistinctQuartic::sort_key);
    out
}

/// Full pipeline: runs, primitively rooted occurrences, components, powers.
pub fn distinct_quartics(d: &Dbf2D, runs: &[crate::runs2d::Run2D]) -> Vec<DistinctQuartic> {
    let occs = super::prq_occurrences(d, runs);
    distinct_quartics_from_groups(d, &build_components(d, &occs))
}
