//! Exact arithmetic: rationals, parameter polynomials and fractions,
//! univariate polynomials, rational functions and truncated series.

pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod scalar;
pub mod series;
pub mod symbol;
pub mod unipoly;

pub use parse::parse_scalar;
pub use poly::ParamPolynomial;
pub use ratfunc::RationalFunction;
pub use rational::Rational;
pub use scalar::ParamScalar;
pub use series::{series_sqrt_inverse, InverseSqrt, LogSeries, PuiseuxSeries};
pub use symbol::{Sym, Var};
pub use unipoly::UniPoly;
