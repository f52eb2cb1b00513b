//! Perturbative pricing engines for nonlinear forward-backward stochastic
//! differential equations.
//!
//! The library treats a nonlinear FBSDE as a linear, decoupled system
//! perturbed by a nonlinear generator and (optionally) drift/volatility
//! feedback, and evaluates the correction terms order by order. Several
//! independent engines are provided and cross-validated against each other:
//!
//! * [`cva_forward`] — closed-form/quadrature orders 0–2 for a forward
//!   agreement with bilateral default risk,
//! * [`diff_rates`] — closed-form/quadrature orders 0–2 for a self-financing
//!   portfolio under differential borrowing/lending rates,
//! * [`pde_engine`] — finite-difference benchmarks: the original nonlinear
//!   PDE and the linear parabolic cascade,
//! * [`decoupled_core`] — Malliavin-weight Monte Carlo for the generic
//!   decoupled recursion, plus a regression-based backward MC oracle,
//! * [`asymptotic`] — small-volatility expansion of the forward process for
//!   models without a known transition law,
//! * [`coupled`] — the recursion for fully coupled FBSDEs and the
//!   stacked-system expansion, with a consistency check between the two.

pub mod asymptotic;
pub mod coupled;
pub mod cva_forward;
pub mod decoupled_core;
pub mod diff_rates;
mod error;
pub mod models;
pub mod numerics;
pub mod pde_engine;

pub use error::{Error, Result};
