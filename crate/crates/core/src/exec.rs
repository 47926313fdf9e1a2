//! Sequential or data-parallel execution of independent per-item work.
//!
//! With the `parallel` feature disabled, [`Exec::Parallel`] runs on the
//! calling thread. Both strategies return results in input order.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
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

impl Exec {
    pub fn map_indices<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                (0..n).into_par_iter().map(f).collect()
            }
            _ => (0..n).map(f).collect(),
        }
    }

    pub fn map_slice<T, R, F>(self, xs: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                xs.par_iter().map(f).collect()
            }
            _ => xs.iter().map(f).collect(),
        }
    }

    /// Splits `xs` into chunks of at most `chunk` items, maps every chunk and
    /// folds the partial results pairwise with `merge`.
    pub fn map_reduce_chunks<T, R, M, G>(self, xs: &[T], chunk: usize, map: M, merge: G) -> Option<R>
    where
        T: Sync,
        R: Send,
        M: Fn(&[T]) -> R + Sync + Send,
        G: Fn(R, R) -> R + Sync + Send,
    {
        let chunk = chunk.max(1);
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                xs.par_chunks(chunk).map(map).reduce_with(merge)
            }
            _ => xs.chunks(chunk).map(map).reduce(merge),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree_on_order() {
        let seq = Exec::Sequential.map_indices(1000, |i| i * i);
        let par = Exec::Parallel.map_indices(1000, |i| i * i);
        assert_eq!(seq, par);
        let xs: Vec<u64> = (0..777).collect();
        let s = Exec::Sequential.map_reduce_chunks(&xs, 50, |c| c.iter().sum::<u64>(), |a, b| a + b);
        let p = Exec::Parallel.map_reduce_chunks(&xs, 50, |c| c.iter().sum::<u64>(), |a, b| a + b);
        assert_eq!(s, p);
        assert_eq!(s, Some(777 * 776 / 2));
        assert_eq!(
            Exec::Sequential.map_reduce_chunks(&[] as &[u64], 4, |c| c.len(), |a, b| a + b),
            None
        );
    }
}
