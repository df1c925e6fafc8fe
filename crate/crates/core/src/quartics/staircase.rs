//! Max White Rectangles on a staircase, in linear time in the number of rows.

use crate::error::{Error, Result};
use crate::grid::Shape;

/// Row widths of a staircase; every row has at least one white cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    whites: Vec<usize>,
}

impl Staircase {
    pub fn new(whites: &[i64]) -> Result<Self> {
        if let Some((i, &w)) = whites.iter().enumerate().find(|(_, &w)| w < 1) {
            return Err(Error::InvalidStaircase { row: i + 1, whites: w });
        }
        Ok(Staircase {
            whites: whites.iter().map(|&w| w as usize).collect(),
        })
    }

    pub(crate) fn from_widths(whites: Vec<usize>) -> Self {
        debug_assert!(whites.iter().all(|&w| w >= 1));
        Staircase { whites }
    }

    pub fn rows(&self) -> usize {
        self.whites.len()
    }

    pub fn whites(&self) -> &[usize] {
        &self.whites
    }
}

/// Which first phase fills the `MaxWidth` table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MwrVariant {
    /// Nearest-smaller-value tables.
    Nsv,
    /// Single backward pass with a stack.
    Stack,
}

/// `(NSVUp, NSVDown)`, 1-based row numbers with sentinels `0` and `m + 1`;
/// entry `i - 1` belongs to row `i`.
pub fn nsv_tables(st: &Staircase) -> (Vec<usize>, Vec<usize>) {
    let w = &st.whites;
    let m = w.len();
    let mut up = vec![0usize; m];
    let mut down = vec![m + 1; m];
    let mut stack: Vec<usize> = Vec::new();
    for i in 0..m {
        while let Some(&t) = stack.last() {
            if w[t] < w[i] {
                break;
            }
            stack.pop();
        }
        up[i] = stack.last().map_or(0, |&t| t + 1);
        stack.push(i);
    }
    stack.clear();
    for i in (0..m).rev() {
        while let Some(&t) = stack.last() {
            if w[t] < w[i] {
                break;
            }
            stack.pop();
        }
        down[i] = stack.last().map_or(m + 1, |&t| t + 1);
        stack.push(i);
    }
    (up, down)
}

/// `MaxWidth[h]` with a witness top row (1-based), for `h` in `1..=m`;
/// index 0 unused. Width 0 means no candidate.
type MaxWidth = Vec<(usize, usize)>;

fn bump(mw: &mut MaxWidth, h: usize, width: usize, top: usize) {
    if width > mw[h].0 {
        mw[h] = (width, top);
    }
}

fn candidates_nsv(st: &Staircase) -> MaxWidth {
    let m = st.rows();
    let (up, down) = nsv_tables(st);
    let mut mw = vec![(0, 0); m + 1];
    for i in 0..m {
        let h = down[i] - up[i] - 1;
        bump(&mut mw, h, st.whites[i], up[i] + 1);
    }
    mw
}

fn candidates_stack(st: &Staircase) -> MaxWidth {
    let m = st.rows();
    let whites = |i: usize| if i == 0 || i == m + 1 { 0 } else { st.whites[i - 1] };
    let mut mw = vec![(0, 0); m + 1];
    let mut stack = vec![m + 1];
    for i in (0..=m).rev() {
        let wi = whites(i);
        while wi < whites(*stack.last().unwrap()) {
            let k = stack.pop().unwrap();
            // rows i+1 .. below-1 all have at least whites(k) cells
            let below = *stack.last().unwrap();
            bump(&mut mw, below - i - 1, whites(k), i + 1);
        }
        if whites(*stack.last().unwrap()) == wi {
            stack.pop();
        }
        stack.push(i);
    }
    mw
}

/// Keeps the candidates not dominated by a taller one, by decreasing height.
fn report(mw: &MaxWidth) -> Vec<(Shape, usize)> {
    let mut out = Vec::new();
    let mut best = 0;
    for h in (1..mw.len()).rev() {
        if mw[h].0 > best {
            best = mw[h].0;
            out.push((Shape::new(h, best), mw[h].1));
        }
    }
    out.reverse();
    out
}

/// Maximal shapes with the top row of one witness, sorted by height.
pub(crate) fn max_white_rectangles_with_witness(st: &Staircase, variant: MwrVariant) -> Vec<(Shape, usize)> {
    let mw = match variant {
        MwrVariant::Nsv => candidates_nsv(st),
        MwrVariant::Stack => candidates_stack(st),
    };
    report(&mw)
}

/// Shapes of all maximal white rectangles, sorted by increasing height
/// (hence decreasing width).
pub fn max_white_rectangles(st: &Staircase, variant: MwrVariant) -> Vec<Shape> {
    max_white_rectangles_with_witness(st, variant)
        .into_iter()
        .map(|(s, _)| s)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_max_white_rectangles, brute_nsv};
    use proptest::prelude::*;

    fn st(w: &[i64]) -> Staircase {
        Staircase::new(w).unwrap()
    }

    fn shapes(v: &[(usize, usize)]) -> Vec<Shape> {
        v.iter().map(|&s| s.into()).collect()
    }

    #[test]
    fn nsv_examples() {
        let (up, down) = nsv_tables(&st(&[3, 7, 6, 7, 8, 6, 2]));
        assert_eq!((up[3], down[3]), (3, 6));
        assert_eq!(nsv_tables(&st(&[5])), (vec![0], vec![2]));
        assert_eq!(nsv_tables(&st(&[1, 2, 3])), (vec![0, 1, 2], vec![4, 4, 4]));
    }

    #[test]
    fn worked_example() {
        let s = st(&[3, 7, 6, 7, 8, 6, 2]);
        let expect = shapes(&[(1, 8), (2, 7), (5, 6), (6, 3), (7, 2)]);
        assert_eq!(max_white_rectangles(&s, MwrVariant::Nsv), expect);
        assert_eq!(max_white_rectangles(&s, MwrVariant::Stack), expect);
    }

    #[test]
    fn small_examples() {
        for v in [MwrVariant::Nsv, MwrVariant::Stack] {
            assert_eq!(max_white_rectangles(&st(&[5]), v), shapes(&[(1, 5)]));
            assert_eq!(max_white_rectangles(&st(&[2, 2, 2]), v), shapes(&[(3, 2)]));
        }
    }

    #[test]
    fn rejects_empty_rows() {
        assert_eq!(
            Staircase::new(&[2, 0, 1]),
            Err(Error::InvalidStaircase { row: 2, whites: 0 })
        );
        assert!(Staircase::new(&[-1]).is_err());
    }

    #[test]
    fn witnesses_fit() {
        let s = st(&[3, 7, 6, 7, 8, 6, 2]);
        for v in [MwrVariant::Nsv, MwrVariant::Stack] {
            for (shape, top) in max_white_rectangles_with_witness(&s, v) {
                let rows = &s.whites()[top - 1..top - 1 + shape.h];
                assert!(rows.iter().all(|&w| w >= shape.w), "{shape:?} at {top}");
            }
        }
    }

    #[test]
    fn exhaustive_small_staircases() {
        // all staircases with m <= 6 rows and widths in 1..=4
        for m in 1..=6u32 {
            for code in 0..4usize.pow(m) {
                let w: Vec<i64> = (0..m).map(|t| (code / 4usize.pow(t) % 4) as i64 + 1).collect();
                let s = st(&w);
                let expect = brute_max_white_rectangles(&w);
                assert_eq!(max_white_rectangles(&s, MwrVariant::Nsv), expect, "{w:?}");
                assert_eq!(max_white_rectangles(&s, MwrVariant::Stack), expect, "{w:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn variants_match_oracle(w in prop::collection::vec(1i64..=20, 1..=12)) {
            let s = st(&w);
            let expect = brute_max_white_rectangles(&w);
            prop_assert_eq!(max_white_rectangles(&s, MwrVariant::Nsv), expect.clone());
            prop_assert_eq!(max_white_rectangles(&s, MwrVariant::Stack), expect.clone());
            // antichain, each shape fits
            for a in &expect {
                prop_assert!(expect.iter().all(|b| !a.dominated_by(b)));
            }
        }

        #[test]
        fn nsv_matches_scan(w in prop::collection::vec(1i64..=6, 1..=30)) {
            let (up, down) = nsv_tables(&st(&w));
            prop_assert_eq!((up, down), brute_nsv(&w));
        }
    }
}
