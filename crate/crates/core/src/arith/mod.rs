//! Exact arithmetic foundations shared by every module.

pub mod cplx;
pub mod factor;
pub mod field;
pub mod linalg;
pub mod roots;
pub mod sturm;
pub mod upoly;

pub use field::{fmt_rat, parse_rat, rat, ratio, Field, Rat, QQ};
