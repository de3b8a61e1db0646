//! Sequential / rayon execution switch.
//!
//! Blocks are independent work units; the engine must produce identical
//! results regardless of worker count, so the parallel path only changes
//! who computes each item, never the order they are collected in.

/// How to run a batch of independent block computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Uses the rayon pool when the `parallel` feature is enabled;
    /// otherwise falls back to sequential execution.
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// Map `f` over `items`, preserving order in the output.
pub fn map_collect<T, U, F>(exec: Exec, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match exec {
        Exec::Sequential => items.into_iter().map(f).collect(),
        Exec::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                items.into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.into_iter().map(f).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_preserved_in_both_modes() {
        let items: Vec<u32> = (0..100).collect();
        let seq = map_collect(Exec::Sequential, items.clone(), |x| x * 2);
        let par = map_collect(Exec::Parallel, items, |x| x * 2);
        assert_eq!(seq, par);
    }
}
