//! Exact scalars, polynomials, truncated series, interpolation, small linear
//! algebra and the combinatorial number tables used everywhere else.

pub mod interp;
pub mod linalg;
pub mod numbers;
pub mod poly;
pub mod rational;
pub mod series;

pub use interp::interpolate;
pub use linalg::solve_linear;
pub use numbers::{
    binomial, binomial_u, double_factorial, eulerian, eulerian_number, factorial, multinomial,
    stirling2,
};
pub use poly::{binomial_poly, Polynomial};
pub use rational::{rat, ratio, Rational};
pub use series::Series;
