pub mod algebraic;
pub mod arith;
pub mod catalog;
pub mod classify;
pub mod curve;
pub mod diagram;
pub mod error;
pub mod newton;
pub mod puiseux;

pub use error::{Error, Result};
