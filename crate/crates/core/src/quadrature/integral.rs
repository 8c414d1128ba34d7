use super::jacobi::gauss_jacobi_rule;
use crate::error::{domain, Result};
use crate::gamma::log_gamma;
use crate::series::{regularized_bessel_series, SeriesControl};
use crate::{ComplexValue, RealScalar};
use std::f64::consts::{LN_2, PI};

/// Integral representation of the Whittaker function,
///
/// M_{κ,μ}(z) = √π Γ(2μ+1) / (2^μ Γ((μ+κ+1/2)/2) Γ((μ-κ+1/2)/2))
///              · √z ∫₀¹ ξ^{(1/2-κ)/2-1} (1-ξ)^{(1/2+κ)/2-1} e^{(ξ-1/2)z} J_μ(√(ξ(1-ξ)) z) dξ,
///
/// valid for μ ± κ + 1/2 > 0.
///
/// J_μ(w) is split as (w/2)^μ · J̃_μ(w) with J̃ entire in w². The factor
/// ξ^{μ/2}(1-ξ)^{μ/2} from (w/2)^μ joins the endpoint powers, leaving the
/// Jacobi weight ξ^{p-1}(1-ξ)^{q-1} with p = (μ-κ+1/2)/2, q = (μ+κ+1/2)/2
/// times an analytic integrand.
pub fn integral_repr_rhs(kappa: RealScalar, mu: RealScalar, z: RealScalar, order: usize) -> Result<RealScalar> {
    const OP: &str = "integral_repr_rhs";
    if !(kappa.is_finite() && mu.is_finite()) {
        return Err(domain(OP, "non-finite parameter"));
    }
    if !(mu + kappa + 0.5 > 0.0 && mu - kappa + 0.5 > 0.0) {
        return Err(domain(
            OP,
            format!("requires mu +- kappa + 1/2 > 0, got kappa = {kappa}, mu = {mu}"),
        ));
    }
    if !(z > 0.0 && z <= 30.0) {
        return Err(domain(OP, format!("requires z in (0, 30], got {z}")));
    }
    if !(8..=512).contains(&order) {
        return Err(domain(OP, format!("order must lie in 8..=512, got {order}")));
    }
    let p = 0.5 * (mu - kappa + 0.5);
    let q = 0.5 * (mu + kappa + 0.5);
    // ξ = (1+x)/2 puts ξ^{p-1} at x = -1 and (1-ξ)^{q-1} at x = +1.
    let rule = gauss_jacobi_rule(q - 1.0, p - 1.0, order)?;

    let ln_const = 0.5 * PI.ln() + log_gamma(2.0 * mu + 1.0)? - mu * LN_2 - log_gamma(p)? - log_gamma(q)?
        + 0.5 * z.ln()
        + mu * (0.5 * z).ln()
        - log_gamma(mu + 1.0)?
        + (1.0 - p - q) * LN_2;

    let ctl = SeriesControl::default();
    let integral = rule.integrate(|x| {
        let xi = 0.5 * (1.0 + x);
        let one_minus_xi = 0.5 * (1.0 - x);
        let w = (xi * one_minus_xi).sqrt() * z;
        let reg = regularized_bessel_series(mu, ComplexValue::new(w, 0.0), &ctl);
        ((xi - 0.5) * z).exp() * reg.value.re.to_f64()
    });
    Ok(ln_const.exp() * integral)
}

/// M(a; b; z) = Γ(b) / (Γ(a)Γ(b-a)) ∫₀¹ e^{zt} t^{a-1} (1-t)^{b-a-1} dt for b > a > 0.
pub fn kummer_integral_repr(a: RealScalar, b: RealScalar, z: RealScalar, order: usize) -> Result<RealScalar> {
    const OP: &str = "kummer_integral_repr";
    if !(a.is_finite() && b.is_finite() && b > a && a > 0.0) {
        return Err(domain(OP, format!("requires b > a > 0, got a = {a}, b = {b}")));
    }
    if !(z.is_finite() && z.abs() <= 30.0) {
        return Err(domain(OP, format!("requires |z| <= 30, got {z}")));
    }
    let rule = gauss_jacobi_rule(b - a - 1.0, a - 1.0, order)?;
    let ln_const = log_gamma(b)? - log_gamma(a)? - log_gamma(b - a)? + (1.0 - b) * LN_2;
    let integral = rule.integrate(|x| (0.5 * z * (1.0 + x)).exp());
    Ok(ln_const.exp() * integral)
}
