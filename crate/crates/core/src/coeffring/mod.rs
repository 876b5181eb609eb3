//! Coefficient rings: Q(P) with `L = P^2`, the subring finite at `L = 1`,
//! and evaluation into the rationals.

mod parse;
pub mod poly;
mod ratfunc;

pub use parse::parse_ratfunc;
pub use poly::Poly;
pub use ratfunc::{gauss_binomial, OmegaScalar, RatFunc};
