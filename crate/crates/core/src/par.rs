//! Execution strategy for the data-parallel sweeps (image enumeration and the
//! randomized batteries).
//!
//! With the `parallel` feature (on by default) `Execution::Parallel` runs on
//! the rayon global pool; without it every strategy falls back to the
//! sequential loop. Results are always returned in index order.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Maps `f` over `0..len`, preserving index order in the output.
    pub fn map_indexed<R, F>(self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            Execution::Sequential => (0..len).map(f).collect(),
            Execution::Parallel => parallel_map(len, f),
        }
    }
}

#[cfg(feature = "parallel")]
fn parallel_map<R, F>(len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    use rayon::prelude::*;
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn parallel_map<R, F>(len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    (0..len).map(f).collect()
}
