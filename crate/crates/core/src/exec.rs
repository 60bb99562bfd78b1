//! Sequential / rayon-parallel sweep helpers.
//!
//! Every sweep in the crate is a deterministic map over an indexed slice
//! followed by an order-preserving collect, so the parallel and sequential
//! paths produce identical results; `ExecMode` only changes how the work is
//! scheduled.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Seq,
    Par,
}

impl ExecMode {
    /// Parallel when the `parallel` feature is enabled, sequential otherwise.
    pub fn default_mode() -> Self {
        #[cfg(feature = "parallel")]
        {
            ExecMode::Par
        }
        #[cfg(not(feature = "parallel"))]
        {
            ExecMode::Seq
        }
    }
}

/// Order-preserving map over a slice.
pub fn map_slice<T, U, F>(mode: ExecMode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match mode {
        ExecMode::Seq => items.iter().map(f).collect(),
        ExecMode::Par => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.iter().map(f).collect()
            }
        }
    }
}

/// Order-preserving flat-map over a slice.
pub fn flat_map_slice<T, U, F>(mode: ExecMode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Vec<U> + Sync + Send,
{
    match mode {
        ExecMode::Seq => items.iter().flat_map(f).collect(),
        ExecMode::Par => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                items.par_iter().flat_map_iter(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.iter().flat_map(f).collect()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let v: Vec<u64> = (0..1000).collect();
        let s = map_slice(ExecMode::Seq, &v, |x| x * x);
        let p = map_slice(ExecMode::default_mode(), &v, |x| x * x);
        assert_eq!(s, p);
        let fs = flat_map_slice(ExecMode::Seq, &v, |x| vec![*x, x + 1]);
        let fp = flat_map_slice(ExecMode::default_mode(), &v, |x| vec![*x, x + 1]);
        assert_eq!(fs, fp);
    }
}
