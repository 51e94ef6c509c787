//! Execution strategy for the exhaustive sweeps.
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] fans work out
//! over rayon's global pool. Without it, both variants run on the calling
//! thread, so results never depend on the strategy.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
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
    /// True when work will actually be spread over threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Order preserving map.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
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

    /// Order preserving filter-map.
    pub fn filter_map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().filter_map(f).collect();
        }
        items.iter().filter_map(f).collect()
    }

    /// The result for the first item (in slice order) that yields `Some`.
    pub fn find_first<T, R, F>(self, items: &[T], f: F) -> Option<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().filter_map(f).find_first(|_| true);
        }
        items.iter().find_map(f)
    }

    /// Runs two closures, concurrently when parallel.
    pub fn join<A, B, RA, RB>(self, a: A, b: B) -> (RA, RB)
    where
        A: FnOnce() -> RA + Send,
        B: FnOnce() -> RB + Send,
        RA: Send,
        RB: Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return rayon::join(a, b);
        }
        (a(), b())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let items: Vec<u32> = (0..1000).collect();
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(exec.map(&items, |x| x * 2)[999], 1998);
            let odd = exec.filter_map(&items, |&x| (x % 2 == 1).then_some(x));
            assert_eq!(odd.len(), 500);
            assert_eq!(odd[0], 1);
            assert_eq!(
                exec.find_first(&items, |&x| (x > 500).then_some(x)),
                Some(501)
            );
            assert_eq!(exec.join(|| 1, || 2), (1, 2));
        }
    }
}
