//! Exact symbolic computations for multi-parameter quantum groups.

pub mod borel;
pub mod cartan;
pub mod check;
pub mod cli;
pub mod coeff;
pub mod error;
pub mod lincomb;
pub mod repmod;
pub mod linalg;
pub mod shuffle;
pub mod twist;

pub use error::{Error, Result};
