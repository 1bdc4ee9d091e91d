//! Sequential or data-parallel evaluation of independent work items.
//!
//! Every parallel path collects results in input order, so outputs are
//! identical for any worker count. Without the `parallel` feature the
//! parallel mode runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    #[default]
    Sequential,
    /// `workers == 0` lets the thread pool pick its own size.
    Parallel { workers: usize },
}

impl Exec {
    /// `1` means sequential, anything else parallel.
    pub fn from_workers(workers: usize) -> Self {
        if workers == 1 {
            Exec::Sequential
        } else {
            Exec::Parallel { workers }
        }
    }

    /// Worker count as echoed into reports.
    pub fn workers(&self) -> usize {
        match *self {
            Exec::Sequential => 1,
            Exec::Parallel { workers } => workers,
        }
    }

    pub fn is_parallel(&self) -> bool {
        cfg!(feature = "parallel") && matches!(self, Exec::Parallel { .. })
    }

    /// Runs `op` inside a pool of the configured size.
    pub fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        #[cfg(feature = "parallel")]
        if let Exec::Parallel { workers } = *self {
            if workers > 0 {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(workers)
                    .build()
                    .expect("thread pool construction");
                return pool.install(op);
            }
        }
        op()
    }

    /// Maps every item, keeping input order.
    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Maps every index of `0..len`, keeping order.
    pub fn map_indices<R, F>(&self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return (0..len).into_par_iter().map(f).collect();
        }
        (0..len).map(f).collect()
    }
}
