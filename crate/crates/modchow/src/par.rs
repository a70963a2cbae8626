//! Data-parallel choke point.
//!
//! Candidate scans (relation enumeration, certificate corpora, random pair
//! suites) funnel through [`map_vec`], which runs on rayon when the
//! `parallel` feature is enabled and sequentially otherwise. The sequential
//! path is always available as [`map_vec_seq`] so the benchmark suite can
//! compare both on the same build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub fn map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send + Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(&f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(|t| f(t)).collect()
    }
}

pub fn map_vec_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(|t| f(t)).collect()
}

/// Filter-map over candidates, parallel when enabled.
pub fn filter_map_vec<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send + Sync,
    U: Send,
    F: Fn(&T) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().filter_map(&f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().filter_map(|t| f(t)).collect()
    }
}

pub fn filter_map_vec_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(&T) -> Option<U>,
{
    items.iter().filter_map(|t| f(t)).collect()
}
