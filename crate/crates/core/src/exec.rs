//! Execution strategy for data-parallel loops.
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] fans work
//! out over the rayon global pool. Without it, both variants run
//! sequentially. Results always come back in input order.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether this build can actually run in parallel.
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).collect(),
            Exec::Parallel => par_map(items, f),
        }
    }

    /// The first item (in input order) for which `f` returns `Some`.
    pub fn find_first<T, R, F>(self, items: &[T], f: F) -> Option<(usize, R)>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        match self {
            Exec::Sequential => items
                .iter()
                .enumerate()
                .find_map(|(i, x)| f(x).map(|r| (i, r))),
            Exec::Parallel => par_find_first(items, f),
        }
    }
}

#[cfg(feature = "parallel")]
fn par_find_first<T, R, F>(items: &[T], f: F) -> Option<(usize, R)>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    use rayon::prelude::*;
    items
        .par_iter()
        .enumerate()
        .find_map_first(|(i, x)| f(x).map(|r| (i, r)))
}

#[cfg(not(feature = "parallel"))]
fn par_find_first<T, R, F>(items: &[T], f: F) -> Option<(usize, R)>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    items
        .iter()
        .enumerate()
        .find_map(|(i, x)| f(x).map(|r| (i, r)))
}

#[cfg(feature = "parallel")]
fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.iter().map(f).collect()
}
