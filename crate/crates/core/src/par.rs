//! Execution mode for the data-parallel loops.
//!
//! With the `parallel` feature, [`Exec::Parallel`] runs independent tasks on
//! the rayon pool; without it every mode runs sequentially. Results are
//! identical either way: callers sort or otherwise canonicalize task output.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Exec {
    #[default]
    Sequential,
    Parallel,
}

impl Exec {
    pub fn from_flag(parallel: bool) -> Self {
        if parallel {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }

    /// Whether this build can actually run tasks in parallel.
    pub fn available() -> bool {
        cfg!(feature = "parallel")
    }
}

/// Runs `f` on every task and concatenates the outputs in task order.
pub(crate) fn flat_map<I, T, F>(exec: Exec, tasks: Vec<I>, f: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> Vec<T> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => tasks.into_par_iter().flat_map_iter(f).collect(),
        _ => tasks.into_iter().flat_map(f).collect(),
    }
}

/// Maps every task in order.
pub(crate) fn map<I, T, F>(exec: Exec, tasks: Vec<I>, f: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => tasks.into_par_iter().map(f).collect(),
        _ => tasks.into_iter().map(f).collect(),
    }
}
