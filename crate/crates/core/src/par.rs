//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) [`Exec::Parallel`] runs on the rayon
//! global pool; without it every mode runs sequentially. Results never depend
//! on the mode.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Whether work will actually fan out in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    pub fn map_range<R, F>(self, range: Range<usize>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return range.into_par_iter().map(f).collect();
        }
        range.map(f).collect()
    }

    /// Maps each item to a batch and concatenates the batches in input order.
    pub fn flat_map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T, &mut Vec<R>) + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items
                .par_chunks(1024)
                .map(|chunk| {
                    let mut out = Vec::new();
                    for t in chunk {
                        f(t, &mut out);
                    }
                    out
                })
                .flatten_iter()
                .collect();
        }
        let mut out = Vec::new();
        for t in items {
            f(t, &mut out);
        }
        out
    }
}

/// Sizes the global worker pool. Call once, before any parallel work.
pub fn configure_threads(threads: usize) -> Result<()> {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Error::Domain(format!("thread pool: {e}")))
    }
    #[cfg(not(feature = "parallel"))]
    {
        if threads > 1 {
            log::warn!("built without the `parallel` feature; ignoring --threads {threads}");
        }
        let _ = Error::Domain;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u64> = (0..5000).collect();
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(exec.map(&items, |x| x * 2)[4999], 9998);
            assert_eq!(
                exec.map_range(0..10, |i| i * i),
                (0..10).map(|i| i * i).collect::<Vec<_>>()
            );
            let fm = exec.flat_map(&items, |&x, out| {
                if x % 1000 == 0 {
                    out.push(x);
                    out.push(x + 1);
                }
            });
            assert_eq!(fm, vec![0, 1, 1000, 1001, 2000, 2001, 3000, 3001, 4000, 4001]);
        }
    }
}
