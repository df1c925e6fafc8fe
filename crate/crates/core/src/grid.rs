//! Grids, rectangles and shapes, the grid text format, and fixture generators.
//!
//! All coordinates in the public API are 1-based `(row, column)` pairs.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};

/// Symbols used by the generators, in order. Every one of them is a graphic
/// ASCII character, so generated grids always serialize.
pub const ALPHABET: &[u8; 94] = b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";

/// An immutable `rows x cols` array of byte symbols stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Grid {
    rows: usize,
    cols: usize,
    cells: Vec<u8>,
}

impl Grid {
    pub fn new(rows: usize, cols: usize, cells: Vec<u8>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!(
                "grid must be at least 1x1, got {rows}x{cols}"
            )));
        }
        if cells.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} grid needs {} cells, got {}",
                rows * cols,
                cells.len()
            )));
        }
        Ok(Grid { rows, cols, cells })
    }

    /// Builds a grid from equal-length rows.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut cells = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {} has {} symbols, expected {cols}",
                    i + 1,
                    row.len()
                )));
            }
            cells.extend_from_slice(row);
        }
        Grid::new(rows.len(), cols, cells)
    }

    pub fn filled(rows: usize, cols: usize, symbol: u8) -> Result<Self> {
        Grid::new(rows, cols, vec![symbol; rows * cols])
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Cell `(i, j)`, 1-based. Panics outside the grid.
    #[inline]
    pub fn cell(&self, i: usize, j: usize) -> u8 {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "cell ({i}, {j}) outside {}x{} grid",
            self.rows,
            self.cols
        );
        self.cells[(i - 1) * self.cols + (j - 1)]
    }

    pub fn get(&self, i: usize, j: usize) -> Option<u8> {
        if (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j) {
            Some(self.cells[(i - 1) * self.cols + (j - 1)])
        } else {
            None
        }
    }

    /// Row `i` (1-based) as a slice.
    pub fn row(&self, i: usize) -> &[u8] {
        &self.cells[(i - 1) * self.cols..i * self.cols]
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn full_rect(&self) -> Rect {
        Rect::new(1, self.rows, 1, self.cols)
    }

    pub fn contains(&self, r: &Rect) -> bool {
        r.i1 >= 1 && r.j1 >= 1 && r.i2 <= self.rows && r.j2 <= self.cols
    }

    /// Copies the cells of `r` out row by row.
    pub fn subarray(&self, r: &Rect) -> Vec<u8> {
        let mut out = Vec::with_capacity(r.area());
        for i in r.i1..=r.i2 {
            out.extend_from_slice(&self.row(i)[r.j1 - 1..r.j2]);
        }
        out
    }

    /// Serializes into the grid text format.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.rows * (self.cols + 1) + 16);
        s.push_str(&format!("{} {}\n", self.rows, self.cols));
        for i in 1..=self.rows {
            s.extend(self.row(i).iter().map(|&b| b as char));
            s.push('\n');
        }
        s
    }
}

impl fmt::Debug for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Grid {}x{}", self.rows, self.cols)?;
        for i in 1..=self.rows {
            writeln!(f, "  {}", String::from_utf8_lossy(self.row(i)))?;
        }
        Ok(())
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_grid(s)
    }
}

fn is_grid_symbol(b: u8) -> bool {
    b.is_ascii_graphic()
}

/// Parses the grid text format: a `"<m> <n>"` header line followed by `m`
/// rows of exactly `n` graphic ASCII symbols, LF-separated. A single
/// trailing LF after the last row is accepted.
pub fn parse_grid(text: &str) -> Result<Grid> {
    let parse_err = |line: usize, message: String| Error::Parse { line, message };
    if text.is_empty() {
        return Err(parse_err(1, "empty input".into()));
    }
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = body.split('\n');
    let header = lines.next().unwrap_or("");
    let mut dims = header.split(' ');
    let (m, n) = match (dims.next(), dims.next(), dims.next()) {
        (Some(a), Some(b), None) => {
            let m = a
                .parse::<usize>()
                .map_err(|_| parse_err(1, format!("bad row count `{a}`")))?;
            let n = b
                .parse::<usize>()
                .map_err(|_| parse_err(1, format!("bad column count `{b}`")))?;
            (m, n)
        }
        _ => {
            return Err(parse_err(
                1,
                format!("expected header \"<rows> <cols>\", got `{header}`"),
            ))
        }
    };
    if m == 0 || n == 0 {
        return Err(parse_err(1, format!("dimensions must be positive, got {m}x{n}")));
    }

    let mut cells = Vec::with_capacity(m * n);
    let mut seen = 0;
    for (idx, line) in lines.enumerate() {
        let lineno = idx + 2;
        if seen == m {
            return Err(parse_err(lineno, format!("extra line after {m} rows")));
        }
        let bytes = line.as_bytes();
        if let Some(pos) = bytes.iter().position(|&b| !is_grid_symbol(b)) {
            return Err(parse_err(
                lineno,
                format!("non-printable symbol 0x{:02x} at column {}", bytes[pos], pos + 1),
            ));
        }
        if bytes.len() != n {
            return Err(parse_err(
                lineno,
                format!("expected {n} symbols, found {}", bytes.len()),
            ));
        }
        cells.extend_from_slice(bytes);
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(
            seen + 2,
            format!("expected {m} rows, found {seen}"),
        ));
    }
    Grid::new(m, n, cells)
}

/// Inclusive rectangle `[i1, i2] x [j1, j2]` of rows by columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Rect {
    pub i1: usize,
    pub i2: usize,
    pub j1: usize,
    pub j2: usize,
}

impl Rect {
    pub fn new(i1: usize, i2: usize, j1: usize, j2: usize) -> Self {
        debug_assert!(i1 <= i2 && j1 <= j2, "degenerate rect");
        Rect { i1, i2, j1, j2 }
    }

    /// Rect with top-left corner `(i, j)` and the given dimensions.
    pub fn at(i: usize, j: usize, height: usize, width: usize) -> Self {
        Rect::new(i, i + height - 1, j, j + width - 1)
    }

    #[inline]
    pub fn height(&self) -> usize {
        self.i2 - self.i1 + 1
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.j2 - self.j1 + 1
    }

    pub fn area(&self) -> usize {
        self.height() * self.width()
    }

    pub fn contains_rect(&self, other: &Rect) -> bool {
        self.i1 <= other.i1 && other.i2 <= self.i2 && self.j1 <= other.j1 && other.j2 <= self.j2
    }

    /// Sort key used for deterministic listings: `(i1, j1, i2, j2)`.
    pub fn listing_key(&self) -> (usize, usize, usize, usize) {
        (self.i1, self.j1, self.i2, self.j2)
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]x[{}..{}]", self.i1, self.i2, self.j1, self.j2)
    }
}

/// Rectangle shape `(h, w)`, partially ordered by dominance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Shape {
    pub h: usize,
    pub w: usize,
}

impl Shape {
    pub fn new(h: usize, w: usize) -> Self {
        Shape { h, w }
    }

    /// Strict dominance: componentwise `<=` and not equal.
    pub fn dominated_by(&self, other: &Shape) -> bool {
        self != other && self.h <= other.h && self.w <= other.w
    }
}

impl From<(usize, usize)> for Shape {
    fn from((h, w): (usize, usize)) -> Self {
        Shape { h, w }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Unary,
    Fig3,
    RowLadder,
    Random,
}

impl FromStr for GeneratorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unary" => Ok(GeneratorKind::Unary),
            "fig3" => Ok(GeneratorKind::Fig3),
            "rowladder" => Ok(GeneratorKind::RowLadder),
            "random" => Ok(GeneratorKind::Random),
            other => Err(Error::UnknownKind(other.to_string())),
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorKind::Unary => "unary",
            GeneratorKind::Fig3 => "fig3",
            GeneratorKind::RowLadder => "rowladder",
            GeneratorKind::Random => "random",
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GenParams {
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub sigma: Option<usize>,
    pub seed: Option<u64>,
}

impl GenParams {
    pub fn dims(m: usize, n: usize) -> Self {
        GenParams {
            m: Some(m),
            n: Some(n),
            ..Default::default()
        }
    }

    pub fn random(m: usize, n: usize, sigma: usize, seed: u64) -> Self {
        GenParams {
            m: Some(m),
            n: Some(n),
            sigma: Some(sigma),
            seed: Some(seed),
        }
    }

    fn require_dims(&self, kind: GeneratorKind) -> Result<(usize, usize)> {
        match (self.m, self.n) {
            (Some(m), Some(n)) if m >= 1 && n >= 1 => Ok((m, n)),
            (Some(_), Some(_)) => Err(Error::InvalidParams(format!(
                "{kind} needs positive dimensions"
            ))),
            _ => Err(Error::InvalidParams(format!("{kind} needs both m and n"))),
        }
    }
}

/// Generates a fixture grid. `fig3` is the fixed 8x8 two-staircase array;
/// the other kinds take `m` and `n`.
pub fn generate(kind: GeneratorKind, params: &GenParams) -> Result<Grid> {
    match kind {
        GeneratorKind::Unary => {
            let (m, n) = params.require_dims(kind)?;
            Grid::filled(m, n, ALPHABET[0])
        }
        GeneratorKind::Fig3 => {
            if params.m.is_some() || params.n.is_some() {
                return Err(Error::InvalidParams(
                    "fig3 is a fixed 8x8 grid and takes no dimensions".into(),
                ));
            }
            Ok(fig3())
        }
        GeneratorKind::RowLadder => {
            let (m, n) = params.require_dims(kind)?;
            if m > ALPHABET.len() {
                return Err(Error::AlphabetCapacity {
                    requested: m,
                    capacity: ALPHABET.len(),
                });
            }
            let cells = (0..m).flat_map(|i| std::iter::repeat_n(ALPHABET[i], n)).collect();
            Grid::new(m, n, cells)
        }
        GeneratorKind::Random => {
            let (m, n) = params.require_dims(kind)?;
            let sigma = params.sigma.unwrap_or(2);
            if sigma == 0 {
                return Err(Error::InvalidParams("sigma must be at least 1".into()));
            }
            if sigma > ALPHABET.len() {
                return Err(Error::AlphabetCapacity {
                    requested: sigma,
                    capacity: ALPHABET.len(),
                });
            }
            Ok(random_grid(m, n, sigma, params.seed.unwrap_or(0)))
        }
    }
}

/// Seeded uniform grid over the first `sigma` symbols of [`ALPHABET`].
pub fn random_grid(m: usize, n: usize, sigma: usize, seed: u64) -> Grid {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_grid_with(&mut rng, m, n, sigma)
}

pub fn random_grid_with<R: Rng>(rng: &mut R, m: usize, n: usize, sigma: usize) -> Grid {
    assert!((1..=ALPHABET.len()).contains(&sigma));
    let cells = (0..m * n).map(|_| ALPHABET[rng.gen_range(0..sigma)]).collect();
    Grid { rows: m, cols: n, cells }
}

/// The 8x8 array with `b` in a top-left staircase (widths 3, 2, 1 on rows
/// 1-3) and a bottom-right staircase (widths 1, 2, 3 on rows 6-8).
pub fn fig3() -> Grid {
    let widths_left = [3usize, 2, 1, 0, 0, 0, 0, 0];
    let widths_right = [0usize, 0, 0, 0, 0, 1, 2, 3];
    let mut cells = vec![b'a'; 64];
    for i in 0..8 {
        for j in 0..widths_left[i] {
            cells[i * 8 + j] = b'b';
        }
        for j in 8 - widths_right[i]..8 {
            cells[i * 8 + j] = b'b';
        }
    }
    Grid { rows: 8, cols: 8, cells }
}

/// All `2^(m*n)` grids of the given size over `{a, b}`, enumerated by the
/// bits of a counter (cell `k` row-major is `b` iff bit `k` is set).
pub fn binary_grid(m: usize, n: usize, bits: u64) -> Grid {
    let cells = (0..m * n)
        .map(|k| if bits >> k & 1 == 1 { b'b' } else { b'a' })
        .collect();
    Grid { rows: m, cols: n, cells }
}
