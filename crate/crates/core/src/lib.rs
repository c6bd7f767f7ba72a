//! Exact computer algebra for ordered r-Stirling partitions.

pub mod combinatorics;
pub mod error;
pub mod geometry;
pub mod groebner;
pub mod poly;
pub mod rings;

pub use error::{Error, Result};
