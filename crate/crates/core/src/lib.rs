//! Exact algebra for noncommutative Schur functions.

pub mod classic;
pub mod error;
pub mod fixtures;
pub mod ideal;
pub mod llt;
pub mod nc_schur;
pub mod partition;
pub mod poly;
pub mod positivity;
pub mod scalar;
pub mod selftest;
pub mod switchboard;
pub mod symfunc;
pub mod tableau;
pub mod word;

pub use error::{Error, Result};
