//! Repetition structure of 2D strings.

pub mod analysis;
pub mod dbf;
pub mod error;
pub mod grid;
pub mod naming;
pub mod onedim;
pub mod oracle;
pub mod par;
pub mod quartics;
pub mod runs2d;

pub use analysis::{analyze, AnalysisReport, AnalyzeOptions, Sections};
pub use dbf::{Dbf2D, RectId};
pub use error::{Error, Result};
pub use grid::{generate, parse_grid, GenParams, GeneratorKind, Grid, Rect, Shape};
pub use par::Exec;
pub use runs2d::{enumerate_runs2d, enumerate_runs2d_with, Run2D};
