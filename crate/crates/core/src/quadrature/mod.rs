//! Quadrature-based evaluators: Gauss–Jacobi rules, the integral
//! representations of M_{κ,μ} and M(a; b; z), the Mellin–Barnes contour
//! integral for J_ν, and the Whittaker ODE residual.

mod integral;
mod jacobi;
mod mellin;
mod ode;

pub use integral::{integral_repr_rhs, kummer_integral_repr};
pub use jacobi::{gauss_jacobi_rule, JacobiRule, MAX_ORDER};
pub use mellin::{mellin_barnes_bessel, ContourEval, ContourSpec};
pub use ode::whittaker_ode_residual;
