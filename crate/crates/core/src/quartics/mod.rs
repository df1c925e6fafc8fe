//! Quartics `W^{2,2}` and tandems `W^{1,2}`.
//!
//! Primitively rooted quartic occurrences come straight from the 2D-runs:
//! a run with periods `(p, q)` contains one `2q x 2p` quartic at every
//! top-left corner that fits, and a rectangle union per `(p, q)` removes the
//! overlap between runs. Distinct quartics then follow from the occurrence
//! graphs of each primitive root.

mod components;
mod distinct;
mod staircase;
mod sweep;
mod tandems;

use serde::Serialize;

pub use components::{build_components, max_powers, ComponentGrid, QuarticGroup};
pub use distinct::{classify_quartic, distinct_quartics, distinct_quartics_from_groups, Classification, DistinctQuartic};
pub use staircase::{max_white_rectangles, nsv_tables, MwrVariant, Staircase};
pub use sweep::{union_report, union_report_with, RectFamily};
pub use tandems::{distinct_tandems, distinct_tandems_with, rowladder_tandems, Tandem};

use crate::dbf::Dbf2D;
use crate::grid::Rect;
use crate::par::Exec;
use crate::runs2d::Run2D;

/// An occurrence of `W^{2,2}` with top-left corner `(i, j)` and primitive
/// `W` of size `root_rows x root_cols`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QuarticOcc {
    pub i: usize,
    pub j: usize,
    pub root_rows: usize,
    pub root_cols: usize,
}

impl QuarticOcc {
    pub fn rect(&self) -> Rect {
        Rect::at(self.i, self.j, 2 * self.root_rows, 2 * self.root_cols)
    }
}

/// One family per `(hper, vper)`, holding the rectangles of quartic corners
/// `[i1, i2 - 2q + 1] x [j1, j2 - 2p + 1]`. Sorted by `(p, q)`.
pub fn prq_families(runs: &[Run2D]) -> Vec<RectFamily> {
    let mut keyed: Vec<(usize, usize, Rect)> = runs
        .iter()
        .map(|r| {
            let (p, q, b) = (r.hper, r.vper, r.rect);
            (p, q, Rect::new(b.i1, b.i2 + 1 - 2 * q, b.j1, b.j2 + 1 - 2 * p))
        })
        .collect();
    keyed.sort_unstable_by_key(|&(p, q, r)| (p, q, r.listing_key()));
    let mut out: Vec<RectFamily> = Vec::new();
    for (p, q, rect) in keyed {
        match out.last_mut() {
            Some(f) if (f.p, f.q) == (p, q) => f.rects.push(rect),
            _ => out.push(RectFamily { p, q, rects: vec![rect] }),
        }
    }
    out
}

/// Turns per-family union points back into occurrences, sorted.
pub fn prq_from_union(families: &[RectFamily], points: &[Vec<(usize, usize)>]) -> Vec<QuarticOcc> {
    let mut out: Vec<QuarticOcc> = families
        .iter()
        .zip(points)
        .flat_map(|(f, pts)| {
            pts.iter().map(move |&(i, j)| QuarticOcc {
                i,
                j,
                root_rows: f.q,
                root_cols: f.p,
            })
        })
        .collect();
    out.sort_unstable();
    out
}

/// All occurrences of primitively rooted quartics, given every 2D-run.
pub fn prq_occurrences(d: &Dbf2D, runs: &[Run2D]) -> Vec<QuarticOcc> {
    prq_occurrences_with(d, runs, Exec::Sequential)
}

pub fn prq_occurrences_with(d: &Dbf2D, runs: &[Run2D], exec: Exec) -> Vec<QuarticOcc> {
    let families = prq_families(runs);
    let points = union_report_with(&families, d.rows(), d.cols(), exec).expect("run rectangles lie inside the grid");
    prq_from_union(&families, &points)
}
