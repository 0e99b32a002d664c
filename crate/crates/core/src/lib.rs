pub mod basechange;
pub mod conesolve;
pub mod error;
pub mod exactlin;
pub mod gallery;
pub mod infinite;
pub mod parabolic;
pub mod rootsys;

pub use error::{Error, Result};
