//! Left-to-right sweep reporting the lattice points of a union of rectangles,
//! independently for several families.
//!
//! The broom holds `(row, count)` pairs over half-open row intervals: a
//! rectangle covering rows `i1..=i2` contributes `+1` at `i1` and `-1` at
//! `i2 + 1`. Rows between two consecutive broom entries are covered iff the
//! prefix sum is positive there. Between event columns the broom does not
//! change, so the covered intervals are reused column by column.

use crate::error::{Error, Result};
use crate::grid::Rect;
use crate::par::{self, Exec};

/// Rectangles of one family, keyed by the periods `(p, q)` of the runs that
/// produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectFamily {
    pub p: usize,
    pub q: usize,
    pub rects: Vec<Rect>,
}

/// Points `(row, col)` of each family's union, sorted row-major.
pub fn union_report(families: &[RectFamily], m: usize, n: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    union_report_with(families, m, n, Exec::Sequential)
}

pub fn union_report_with(
    families: &[RectFamily],
    m: usize,
    n: usize,
    exec: Exec,
) -> Result<Vec<Vec<(usize, usize)>>> {
    for f in families {
        for r in &f.rects {
            if r.i1 == 0 || r.j1 == 0 || r.i1 > r.i2 || r.j1 > r.j2 || r.i2 > m || r.j2 > n {
                return Err(Error::OutOfBounds {
                    what: format!("rect {r} of family ({}, {})", f.p, f.q),
                    rows: m,
                    cols: n,
                });
            }
        }
    }
    let tasks: Vec<&RectFamily> = families.iter().collect();
    Ok(par::map(exec, tasks, |f| sweep(&f.rects, m)))
}

fn sweep(rects: &[Rect], m: usize) -> Vec<(usize, usize)> {
    // (column, row, delta)
    let mut events: Vec<(usize, usize, i64)> = Vec::with_capacity(4 * rects.len());
    for r in rects {
        events.push((r.j1, r.i1, 1));
        events.push((r.j1, r.i2 + 1, -1));
        events.push((r.j2 + 1, r.i1, -1));
        events.push((r.j2 + 1, r.i2 + 1, 1));
    }
    events.sort_unstable();

    let mut broom: Vec<(usize, i64)> = Vec::new();
    let mut merged: Vec<(usize, i64)> = Vec::new();
    let mut intervals: Vec<(usize, usize)> = Vec::new();
    let mut col_major: Vec<(usize, usize)> = Vec::new();
    let mut e = 0;
    while e < events.len() {
        let x = events[e].0;
        let mut batch_end = e;
        while batch_end < events.len() && events[batch_end].0 == x {
            batch_end += 1;
        }
        merge(&broom, &events[e..batch_end], &mut merged);
        std::mem::swap(&mut broom, &mut merged);

        intervals.clear();
        let mut s = 0i64;
        for w in 0..broom.len() {
            s += broom[w].1;
            if s > 0 {
                let hi = broom.get(w + 1).map_or(m + 1, |&(y, _)| y);
                intervals.push((broom[w].0, hi));
            }
        }
        let next_x = events.get(batch_end).map_or(x, |ev| ev.0);
        for col in x..next_x {
            for &(lo, hi) in &intervals {
                col_major.extend((lo..hi).map(|row| (col, row)));
            }
        }
        e = batch_end;
    }
    debug_assert!(broom.is_empty());
    row_major(col_major, m)
}

/// Merges the broom with a row-sorted batch, summing equal rows and dropping
/// zero counts.
fn merge(broom: &[(usize, i64)], batch: &[(usize, usize, i64)], out: &mut Vec<(usize, i64)>) {
    out.clear();
    let push = |y: usize, c: i64, out: &mut Vec<(usize, i64)>| match out.last_mut() {
        Some(last) if last.0 == y => last.1 += c,
        _ => out.push((y, c)),
    };
    let (mut a, mut b) = (0, 0);
    while a < broom.len() || b < batch.len() {
        let take_broom = b == batch.len() || (a < broom.len() && broom[a].0 <= batch[b].1);
        if take_broom {
            push(broom[a].0, broom[a].1, out);
            a += 1;
        } else {
            push(batch[b].1, batch[b].2, out);
            b += 1;
        }
    }
    out.retain(|&(_, c)| c != 0);
}

/// Stable counting sort of column-major points by row.
fn row_major(points: Vec<(usize, usize)>, m: usize) -> Vec<(usize, usize)> {
    let mut start = vec![0usize; m + 2];
    for &(_, row) in &points {
        start[row + 1] += 1;
    }
    for r in 1..start.len() {
        start[r] += start[r - 1];
    }
    let mut out = vec![(0, 0); points.len()];
    for (col, row) in points {
        out[start[row]] = (row, col);
        start[row] += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::naive_union;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn family(rects: Vec<Rect>) -> RectFamily {
        RectFamily { p: 1, q: 1, rects }
    }

    #[test]
    fn examples() {
        let out = union_report(&[family(vec![Rect::new(1, 1, 1, 1)])], 3, 3).unwrap();
        assert_eq!(out, vec![vec![(1, 1)]]);

        let fam = family(vec![Rect::new(1, 2, 1, 2), Rect::new(2, 3, 2, 3)]);
        let out = union_report(std::slice::from_ref(&fam), 3, 3).unwrap();
        assert_eq!(out[0].len(), 7);
        assert_eq!(out, naive_union(&[fam.rects]));

        let a = family(vec![Rect::new(1, 1, 1, 3)]);
        let b = family(vec![Rect::new(3, 3, 2, 2), Rect::new(2, 3, 1, 1)]);
        let both = union_report(&[a.clone(), b.clone()], 3, 3).unwrap();
        assert_eq!(both[0], union_report(&[a], 3, 3).unwrap()[0]);
        assert_eq!(both[1], union_report(&[b], 3, 3).unwrap()[0]);
    }

    #[test]
    fn degenerate_and_touching_rects() {
        let fam = family(vec![
            Rect::new(2, 2, 2, 2),
            Rect::new(3, 3, 2, 2),
            Rect::new(1, 4, 4, 4),
            Rect::new(2, 2, 5, 5),
            Rect::new(4, 4, 1, 5),
        ]);
        let out = union_report(std::slice::from_ref(&fam), 4, 5).unwrap();
        assert_eq!(out, naive_union(&[fam.rects]));
    }

    #[test]
    fn rejects_out_of_bounds() {
        assert!(union_report(&[family(vec![Rect::new(1, 4, 1, 1)])], 3, 3).is_err());
        assert!(union_report(&[family(vec![Rect::new(0, 1, 1, 1)])], 3, 3).is_err());
        assert!(union_report(&[], 3, 3).unwrap().is_empty());
    }

    #[test]
    fn matches_naive_union() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..2000 {
            let (m, n) = (rng.gen_range(1..=10), rng.gen_range(1..=10));
            let fams: Vec<RectFamily> = (0..rng.gen_range(1..=3))
                .map(|_| {
                    family(
                        (0..rng.gen_range(0..=6))
                            .map(|_| {
                                let (a, b) = (rng.gen_range(1..=m), rng.gen_range(1..=m));
                                let (c, d) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
                                Rect::new(a.min(b), a.max(b), c.min(d), c.max(d))
                            })
                            .collect(),
                    )
                })
                .collect();
            let rects: Vec<Vec<Rect>> = fams.iter().map(|f| f.rects.clone()).collect();
            let expect = naive_union(&rects);
            assert_eq!(union_report(&fams, m, n).unwrap(), expect);
            assert_eq!(union_report_with(&fams, m, n, Exec::Parallel).unwrap(), expect);
        }
    }
}
