//! Iteration helpers that go through rayon when the `parallel` feature is
//! enabled and fall back to plain iterators otherwise. Only adapters that
//! exist with the same name and meaning on both sides are used by callers,
//! which import [`prelude`]
//! (`map`, `filter`, `filter_map`, `all`, `any`, `count`, `sum`, `collect`).

#[cfg(feature = "parallel")]
macro_rules! iter_of {
    ($slice:expr) => {
        ($slice).par_iter()
    };
}

#[cfg(not(feature = "parallel"))]
macro_rules! iter_of {
    ($slice:expr) => {
        ($slice).iter()
    };
}

#[cfg(feature = "parallel")]
macro_rules! into_iter_of {
    ($range:expr) => {
        ($range).into_par_iter()
    };
}

#[cfg(not(feature = "parallel"))]
macro_rules! into_iter_of {
    ($range:expr) => {
        ($range).into_iter()
    };
}

/// Adapter traits the macros' results need in scope.
pub(crate) mod prelude {
    #[cfg(feature = "parallel")]
    pub(crate) use rayon::iter::{IntoParallelIterator, IntoParallelRefIterator, ParallelIterator};
}

pub(crate) use into_iter_of;
pub(crate) use iter_of;

/// Whether this build runs its inner loops on the rayon pool.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
