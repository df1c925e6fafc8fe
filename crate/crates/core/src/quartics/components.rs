//! Occurrence graphs `G_W` of primitively rooted quartics and the maximal
//! powers of `W` each connected component generates.

use std::cmp::Reverse;
use std::collections::VecDeque;

use serde::Serialize;

use super::staircase::{max_white_rectangles_with_witness, MwrVariant, Staircase};
use super::QuarticOcc;
use crate::dbf::{Dbf2D, RectId};
use crate::grid::{Rect, Shape};

/// One connected component of `G_W`: quartic corners linked by steps of
/// `root_rows` rows or `root_cols` columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentGrid {
    pub root_rows: usize,
    pub root_cols: usize,
    /// Top-left corners of the `W^{2,2}` occurrences, sorted.
    pub vertices: Vec<(usize, usize)>,
}

/// All occurrences of one distinct primitively rooted quartic `W^{2,2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuarticGroup {
    pub quartic: RectId,
    pub root_rows: usize,
    pub root_cols: usize,
    pub components: Vec<ComponentGrid>,
}

impl QuarticGroup {
    pub fn occurrences(&self) -> usize {
        self.components.iter().map(|c| c.vertices.len()).sum()
    }
}

/// Root dims plus quartic content.
type GroupKey = (usize, usize, RectId);

/// Groups occurrences by content and splits each group into connected
/// components with a shared marker board. Groups are sorted by
/// `(root_rows, root_cols, quartic)`, components by first vertex.
pub fn build_components(d: &Dbf2D, occs: &[QuarticOcc]) -> Vec<QuarticGroup> {
    let (m, n) = (d.rows(), d.cols());
    let mut keyed: Vec<(GroupKey, (usize, usize))> = occs
        .iter()
        .map(|o| {
            let r = Rect::at(o.i, o.j, 2 * o.root_rows, 2 * o.root_cols);
            ((o.root_rows, o.root_cols, d.rect_id_of(&r)), (o.i, o.j))
        })
        .collect();
    keyed.sort_unstable();

    // board[(i-1)*n + (j-1)] = 1 + index of the vertex within its group
    let mut board = vec![0u32; m * n];
    let mut groups = Vec::new();
    let mut start = 0;
    while start < keyed.len() {
        let key = keyed[start].0;
        let mut end = start;
        while end < keyed.len() && keyed[end].0 == key {
            end += 1;
        }
        let verts: Vec<(usize, usize)> = keyed[start..end].iter().map(|e| e.1).collect();
        let (r, c, quartic) = key;
        groups.push(QuarticGroup {
            quartic,
            root_rows: r,
            root_cols: c,
            components: split(&verts, r, c, n, &mut board),
        });
        start = end;
    }
    groups
}

fn split(verts: &[(usize, usize)], r: usize, c: usize, n: usize, board: &mut [u32]) -> Vec<ComponentGrid> {
    let cell = |i: usize, j: usize| (i - 1) * n + (j - 1);
    for (t, &(i, j)) in verts.iter().enumerate() {
        board[cell(i, j)] = t as u32 + 1;
    }
    let mut seen = vec![false; verts.len()];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..verts.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            let (i, j) = verts[v];
            comp.push((i, j));
            let mut visit = |i2: usize, j2: usize| {
                let mark = board[cell(i2, j2)];
                if mark != 0 && !seen[mark as usize - 1] {
                    seen[mark as usize - 1] = true;
                    queue.push_back(mark as usize - 1);
                }
            };
            if i > r {
                visit(i - r, j);
            }
            if (i + r - 1) * n < board.len() {
                visit(i + r, j);
            }
            if j > c {
                visit(i, j - c);
            }
            if j + c <= n {
                visit(i, j + c);
            }
        }
        comp.sort_unstable();
        let (i0, j0) = comp[0];
        assert!(
            comp.iter().all(|&(i, j)| i % r == i0 % r && j % c == j0 % c),
            "component vertices are not congruent"
        );
        out.push(ComponentGrid {
            root_rows: r,
            root_cols: c,
            vertices: comp,
        });
    }
    for &(i, j) in verts {
        board[cell(i, j)] = 0;
    }
    out
}

/// Right-run board `R` over the block lattice, reused across components and
/// left zeroed after every use.
pub(crate) struct PowerScratch {
    stride: usize,
    right: Vec<u32>,
}

impl PowerScratch {
    pub(crate) fn new(m: usize, n: usize) -> Self {
        PowerScratch {
            stride: n + 2,
            right: vec![0; (m + 2) * (n + 2)],
        }
    }
}

/// Maximal exponent pairs `(alpha, beta)` of powers `W^{alpha,beta}`
/// generated by the component, each with the grid position of one
/// occurrence, sorted by `alpha`.
pub(crate) fn max_powers_in(h: &ComponentGrid, scratch: &mut PowerScratch) -> Vec<(Shape, (usize, usize))> {
    let (r, c) = (h.root_rows, h.root_cols);
    let (i0, j0) = h.vertices[0];
    let (off_i, off_j) = ((i0 - 1) % r + 1, (j0 - 1) % c + 1);

    // S: four lattice cells per vertex, by non-increasing column
    let mut cells: Vec<(Reverse<usize>, usize)> = Vec::with_capacity(4 * h.vertices.len());
    for &(i, j) in &h.vertices {
        let (a, b) = ((i - off_i) / r, (j - off_j) / c);
        for (da, db) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            cells.push((Reverse(b + db), a + da));
        }
    }
    cells.sort_unstable();
    cells.dedup();

    let stride = scratch.stride;
    let right = &mut scratch.right;
    for &(Reverse(b), a) in &cells {
        right[a * stride + b] = right[a * stride + b + 1] + 1;
    }

    let mut found: Vec<(Shape, (usize, usize))> = Vec::new();
    let mut s = 0;
    while s < cells.len() {
        let (Reverse(b), a_top) = cells[s];
        let mut e = s + 1;
        while e < cells.len() && cells[e] == (Reverse(b), a_top + (e - s)) {
            e += 1;
        }
        let whites: Vec<usize> = (a_top..a_top + (e - s)).map(|a| right[a * stride + b] as usize).collect();
        for (shape, top) in max_white_rectangles_with_witness(&Staircase::from_widths(whites), MwrVariant::Nsv) {
            let a = a_top + top - 1;
            found.push((shape, (off_i + a * r, off_j + b * c)));
        }
        s = e;
    }

    for &(Reverse(b), a) in &cells {
        right[a * stride + b] = 0;
    }
    keep_maximal(found)
}

/// Dominance filter: sorted by decreasing height, keep strictly growing
/// widths. Output sorted by increasing height.
pub(crate) fn keep_maximal<T>(mut shapes: Vec<(Shape, T)>) -> Vec<(Shape, T)> {
    shapes.sort_unstable_by_key(|(s, _)| (Reverse(s.h), Reverse(s.w)));
    let mut best = 0;
    let mut out: Vec<(Shape, T)> = shapes
        .into_iter()
        .filter(|(s, _)| {
            let keep = s.w > best;
            best = best.max(s.w);
            keep
        })
        .collect();
    out.reverse();
    out
}

/// Maximal powers `(alpha, beta)` generated by one component.
pub fn max_powers(h: &ComponentGrid) -> Vec<Shape> {
    let (m, n) = h
        .vertices
        .iter()
        .fold((0, 0), |(m, n), &(i, j)| (m.max(i + 2 * h.root_rows), n.max(j + 2 * h.root_cols)));
    let mut scratch = PowerScratch::new(m, n);
    max_powers_in(h, &mut scratch).into_iter().map(|(s, _)| s).collect()
}
