//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) [`Execution::Parallel`] fans the
//! work out over the rayon global pool. Without it, or when
//! [`Execution::Sequential`] is requested explicitly, items are mapped in
//! order on the calling thread. Results are always returned in index order,
//! so both modes produce identical output.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Map `f` over `range`, preserving order.
pub fn map_range<T, F>(exec: Execution, range: Range<usize>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => range.into_par_iter().map(f).collect(),
        _ => range.map(f).collect(),
    }
}

/// Map `f` over a slice, preserving order.
pub fn map_slice<I, T, F>(exec: Execution, items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let a = map_range(Execution::Sequential, 0..100, |i| i * i);
        let b = map_range(Execution::Parallel, 0..100, |i| i * i);
        assert_eq!(a, b);
        let items: Vec<u32> = (0..17).collect();
        assert_eq!(
            map_slice(Execution::Sequential, &items, |v| v + 1),
            map_slice(Execution::default(), &items, |v| v + 1)
        );
    }
}
