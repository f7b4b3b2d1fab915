//! Exact arithmetic with algebraic numbers.
//!
//! Every field is a simple extension `Q(θ)` presented by the minimal
//! polynomial of `θ` and a certified isolating disc. Fields created while
//! solving a polynomial over a smaller field remember that field and the
//! image of its generator, so a `RootOf` chain can be printed level by
//! level and elements can be carried up the chain.
//!
//! Zero tests, realness and ordering are exact. Discs only pick out which
//! root of a known polynomial a number is.

mod number;
mod roots;
mod tower;

pub use number::{compare_real, conjugate_pairs, AlgebraicNumber, Canon, ConjugatePairing};
pub use roots::{adjoin_root, roots_of, roots_over, Region};
pub use tower::{KPoly, Tower};


/// Lower bound for `|z|` over a disc, clamped at zero.
pub fn abs_lower_of(d: &crate::arith::cplx::Disc) -> crate::arith::Rat {
    number::abs_lower(d)
}
