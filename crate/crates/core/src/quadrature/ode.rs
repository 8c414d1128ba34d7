use crate::error::{domain, Result};
use crate::series::{whittaker_m_derivatives, SeriesControl};
use crate::RealScalar;

/// Scaled residual of the Whittaker equation
/// y'' + (-1/4 + κ/z + (1/4 - μ²)/z²) y = 0 at y = M_{κ,μ}(z),
/// normalised by |y|/z² + |y''|.
pub fn whittaker_ode_residual(kappa: RealScalar, mu: RealScalar, z: RealScalar) -> Result<RealScalar> {
    if !(z > 0.0 && z <= 30.0) {
        return Err(domain(
            "whittaker_ode_residual",
            format!("requires z in (0, 30], got {z}"),
        ));
    }
    let d = whittaker_m_derivatives(kappa, mu, z, &SeriesControl::default())?;
    let q = -0.25 + kappa / z + (0.25 - mu * mu) / (z * z);
    let scale = d.value.abs() / (z * z) + d.second.abs();
    Ok((d.second + q * d.value).abs() / scale)
}
