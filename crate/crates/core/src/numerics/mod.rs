//! Shared deterministic numerical kernels: special functions, Gaussian
//! quadrature, ODE integration, tridiagonal solves, root finding, linear
//! least squares and counter-based random number generation.
//!
//! Everything here is pure and reentrant; rule objects are immutable after
//! construction and can be shared freely across threads.

mod linalg;
mod ode;
mod quadrature;
mod rng;
mod roots;
mod special;
mod tridiagonal;

pub use linalg::least_squares;
pub use ode::rk4_solve;
pub use quadrature::{QuadratureRule, RuleKind};
pub use rng::RngStream;
pub use roots::bisect_root;
pub use special::{erf, erfc, norm_cdf, norm_pdf};
pub use tridiagonal::{solve_tridiagonal, solve_tridiagonal_into, TridiagonalSystem};
