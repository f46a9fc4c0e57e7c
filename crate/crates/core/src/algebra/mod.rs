//! Exact arithmetic kernel: rationals, polynomials, rational functions,
//! truncated power series and rational reconstruction.

pub mod linsolve;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod reconstruct;
pub mod series;

pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rational::{int, parse_rational, pow, rat, Rational};
pub use reconstruct::rational_reconstruct;
pub use series::{IntegerSeries, Series};

/// Maclaurin expansion of `f` through `z^order`.
pub fn series_of_ratfunc(f: &RatFunc, order: usize) -> crate::Result<Series> {
    f.series(order)
}
