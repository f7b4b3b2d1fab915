//! Bivariate polynomials over the rationals.

mod bipoly;
mod factor;
mod parse;
mod resultant;
pub(crate) mod ypoly;

pub use bipoly::BiPoly;
pub use factor::{factor_rational, square_free_part, FactorList, FACTOR_DEGREE_CAP};
pub use parse::parse_poly;
pub use resultant::{resultant, resultant_univariate, sylvester, Var};
