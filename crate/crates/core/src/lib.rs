//! Numerics for confluent hypergeometric, Whittaker and Bessel functions, and
//! verifiers for the identities that connect them.
//!
//! * [`gamma`]: Γ, ln Γ, Pochhammer symbols and the beta function.
//! * [`series`]: truncation-controlled series for J_ν, M(a; b; z), M_{κ,μ}
//!   and the summation formulas built from them.
//! * [`quadrature`]: Gauss–Jacobi rules, the integral representations of
//!   M_{κ,μ} and M(a; b; z), the Mellin–Barnes integral for J_ν and the
//!   Whittaker ODE residual.
//! * [`exact`]: exact rational checks of the terminating identities.
//! * [`suite`]: grid-driven verifiers producing [`suite::IdentityReport`]s.

#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod exact;
pub mod gamma;
pub mod quadrature;
pub mod series;
pub mod suite;
mod xprec;

pub use error::{Error, Result};
pub use exact::BigRational;
pub use num_complex::Complex64;
pub use quadrature::{ContourSpec, JacobiRule};
pub use series::{SeriesControl, SeriesEval};
pub use suite::{GridSpec, IdentityId, IdentityReport};

/// Real parameters and arguments.
pub type RealScalar = f64;

/// Rectangular complex number used for complex parameters and arguments.
pub type ComplexValue = Complex64;
