//! Tiny dispatch layer between the rayon and sequential execution paths.
//!
//! The `parallel` feature (on by default) compiles the rayon path; public
//! entry points use it automatically.  Each helper also accepts an explicit
//! flag so the benchmark suite can compare both paths within one build.
//! Results are identical either way: every reduction here is a commutative
//! merge of exact-arithmetic values.

/// True when the crate was built with the rayon path available.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel")
}

/// Fold `items` into per-worker accumulators and merge those once per
/// split, which keeps the merge count proportional to the thread count
/// rather than the item count.
pub(crate) fn fold_reduce<T, R, Step, F>(
    parallel: bool,
    items: Vec<T>,
    step: Step,
    identity: F,
    merge: fn(R, R) -> R,
) -> R
where
    T: Send,
    R: Send,
    Step: Fn(R, T) -> R + Sync + Send,
    F: Fn() -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return items
            .into_par_iter()
            .fold(&identity, &step)
            .reduce(&identity, merge);
    }
    let _ = (parallel, merge);
    items.into_iter().fold(identity(), step)
}

/// Map `items` into a `Vec`, preserving input order.
pub(crate) fn map_collect<T, R, M>(parallel: bool, items: Vec<T>, map: M) -> Vec<R>
where
    T: Send,
    R: Send,
    M: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel {
        use rayon::prelude::*;
        return items.into_par_iter().map(map).collect();
    }
    let _ = parallel;
    items.into_iter().map(map).collect()
}
