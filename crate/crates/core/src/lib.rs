//! Exact poly-Bernoulli numbers and polynomials, their two- and
//! three-parameter generalizations, symmetrized variants, and numerical
//! evaluation of the associated Arakawa-Kaneko type zeta functions.

pub mod error;
pub mod exact_arith;
pub mod generalized;
pub mod oracle;
pub mod params;
pub mod poly;
pub mod polybernoulli;
pub mod polyseries;
pub mod scalar;
pub mod symmetrized;
pub mod verify;
pub mod zeta;

pub use num_bigint;
pub use num_traits;

pub use error::{Error, Result};
pub use params::Params;
pub use poly::{BiPoly, Poly};
pub use polyseries::{BiSeries, Series};
pub use scalar::{format_rat, parse_rat, rat, ratio, Field, Rat, Ring};

/// Exact univariate polynomial.
pub type Poly1 = Poly<Rat>;
/// Exact bivariate polynomial.
pub type Poly2 = BiPoly<Rat>;
/// Exact truncated series in one variable.
pub type Series1 = Series<Rat>;
/// Exact truncated series in two variables.
pub type Series2 = BiSeries<Rat>;
/// Floating-point polynomial.
pub type PolyF64 = Poly<f64>;
/// Floating-point parameter triple.
pub type ParamsF64 = Params<f64>;
