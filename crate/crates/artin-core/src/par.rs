//! Data-parallel helpers. With the `parallel` feature these run on rayon's
//! pool unless switched off at runtime; without it they are plain iterators.

use std::sync::atomic::{AtomicBool, Ordering};

static ENABLED: AtomicBool = AtomicBool::new(true);

/// Batches shorter than this run sequentially even when parallelism is on.
pub const MIN_PARALLEL_LEN: usize = 8;

/// Turns parallel execution on or off at runtime (no effect without the feature).
pub fn set_parallel(on: bool) {
    ENABLED.store(on, Ordering::SeqCst);
}

pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && ENABLED.load(Ordering::SeqCst)
}

/// `(0..n).map(f).collect()`, possibly in parallel; output order is preserved.
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if n >= MIN_PARALLEL_LEN && parallel_enabled() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// `items.iter().map(f).collect()`, possibly in parallel; output order is preserved.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if items.len() >= MIN_PARALLEL_LEN && parallel_enabled() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let v = map_range(100, |k| k * k);
        assert_eq!(v[7], 49);
        assert_eq!(map(&[1, 2, 3], |x| x + 1), vec![2, 3, 4]);
        set_parallel(false);
        assert_eq!(map_range(100, |k| k * k), v);
        set_parallel(true);
    }
}
