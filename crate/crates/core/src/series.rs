//! Truncation-controlled power series: Bessel J, Kummer M, Whittaker M and
//! the summation formulas built from them.
//!
//! Terms are generated by their ratio recurrences and accumulated in
//! double-double arithmetic; the result is rounded to `f64` once. A series
//! stops after [`SeriesControl::consecutive_small`] successive terms whose
//! tail estimate (twice the term magnitude) is within `rel_tol` of the
//! running sum.

use crate::error::{domain, Result};
use crate::gamma::{gamma, log_gamma};
use crate::xprec::{Cdd, Dd};
use crate::{ComplexValue, RealScalar};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeriesControl {
    pub rel_tol: f64,
    pub max_terms: usize,
    pub consecutive_small: usize,
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            rel_tol: 1e-15,
            max_terms: 500,
            consecutive_small: 3,
        }
    }
}

impl SeriesControl {
    pub fn new(rel_tol: f64, max_terms: usize, consecutive_small: usize) -> Result<Self> {
        let ctl = SeriesControl {
            rel_tol,
            max_terms,
            consecutive_small,
        };
        ctl.validate()?;
        Ok(ctl)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(domain(
                "SeriesControl",
                format!("rel_tol must lie in (0, 1), got {}", self.rel_tol),
            ));
        }
        if self.max_terms == 0 || self.consecutive_small == 0 {
            return Err(domain(
                "SeriesControl",
                "max_terms and consecutive_small must be at least 1",
            ));
        }
        Ok(())
    }

    pub fn with_rel_tol(self, rel_tol: f64) -> Self {
        SeriesControl { rel_tol, ..self }
    }
}

/// A truncated series value with its truncation diagnostics.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesEval {
    pub value: ComplexValue,
    pub terms_used: usize,
    pub tail_estimate: RealScalar,
    pub converged: bool,
}

/// Series result before the final rounding to `f64`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct DdSum {
    pub value: Cdd,
    pub terms_used: usize,
    pub tail: f64,
    pub converged: bool,
}

impl DdSum {
    fn exact(value: Cdd) -> Self {
        DdSum {
            value,
            terms_used: 1,
            tail: 0.0,
            converged: true,
        }
    }

    pub fn scaled(self, factor: ComplexValue) -> Self {
        DdSum {
            value: self.value.mul_c64(factor),
            tail: self.tail * factor.norm(),
            ..self
        }
    }

    pub fn eval(self) -> SeriesEval {
        SeriesEval {
            value: self.value.to_c64(),
            terms_used: self.terms_used,
            tail_estimate: self.tail,
            converged: self.converged,
        }
    }
}

/// Sums `first + t_1 + t_2 + ...` where `next(n, t_{n-1})` yields `t_n`, or
/// `None` once every remaining term is exactly zero. With `terminating` set
/// the smallness rule is disabled and the series runs to its last nonzero term.
fn sum_terms<F>(ctl: &SeriesControl, first: Cdd, terminating: bool, mut next: F) -> Result<DdSum>
where
    F: FnMut(usize, Cdd) -> Result<Option<Cdd>>,
{
    let mut sum = first;
    let mut term = first;
    let mut used = 1;
    let mut run = 0;
    loop {
        if used >= ctl.max_terms {
            return Ok(DdSum {
                value: sum,
                terms_used: used,
                tail: 2.0 * term.norm(),
                converged: false,
            });
        }
        match next(used, term)? {
            None => {
                return Ok(DdSum {
                    value: sum,
                    terms_used: used,
                    tail: 0.0,
                    converged: true,
                })
            }
            Some(t) => {
                term = t;
                sum = sum + t;
                used += 1;
                if !t.is_finite() || !sum.is_finite() {
                    return Ok(DdSum {
                        value: sum,
                        terms_used: used,
                        tail: f64::INFINITY,
                        converged: false,
                    });
                }
                if terminating {
                    continue;
                }
                if 2.0 * t.norm() <= ctl.rel_tol * sum.norm() {
                    run += 1;
                } else {
                    run = 0;
                }
                if run >= ctl.consecutive_small {
                    return Ok(DdSum {
                        value: sum,
                        terms_used: used,
                        tail: 2.0 * t.norm(),
                        converged: true,
                    });
                }
            }
        }
    }
}

fn finite(z: ComplexValue) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// `Some(m)` when `x` is exactly the nonpositive integer `-m`.
fn nonpositive_integer(x: Cdd) -> Option<usize> {
    let re = x.re.hi;
    if x.im.is_zero() && x.re.lo == 0.0 && re <= 0.0 && re == re.round() && re > -1e15 {
        Some((-re) as usize)
    } else {
        None
    }
}

/// Σ (-(z/2)²)ⁿ / (n! (ν+1)ₙ), the Bessel series without its prefactor.
pub(crate) fn regularized_bessel_series(nu: f64, z: ComplexValue, ctl: &SeriesControl) -> DdSum {
    let half = Cdd::from_c64(z * 0.5);
    let w = -(half * half);
    sum_terms(ctl, Cdd::ONE, false, |n, prev| {
        let n = n as f64;
        let den = Dd::sum(nu, n).mul_f64(n);
        Ok(Some((prev * w).div_dd(den)))
    })
    .expect("infallible term generator")
}

/// (z/2)^ν / Γ(ν+1), switching to log space once Γ(ν+1) could overflow.
fn bessel_prefactor(nu: f64, z: ComplexValue) -> Result<ComplexValue> {
    let integer_order = nu == nu.round();
    let half = z * 0.5;
    if nu + 1.0 > 150.0 {
        let ln = if integer_order {
            half.ln() * nu
        } else {
            ComplexValue::new(nu * half.re.ln(), 0.0)
        };
        return Ok((ln - log_gamma(nu + 1.0)?).exp());
    }
    let power = if integer_order {
        half.powi(nu as i32)
    } else {
        ComplexValue::new(half.re.powf(nu), 0.0)
    };
    Ok(power / gamma(nu + 1.0)?)
}

pub(crate) fn bessel_j_dd(nu: RealScalar, z: ComplexValue, ctl: &SeriesControl) -> Result<DdSum> {
    ctl.validate()?;
    if !nu.is_finite() || nu <= -1.0 {
        return Err(domain("bessel_j", format!("order must exceed -1, got {nu}")));
    }
    if !finite(z) {
        return Err(domain("bessel_j", "non-finite argument"));
    }
    if nu != nu.round() && (z.im != 0.0 || z.re < 0.0) {
        return Err(domain(
            "bessel_j",
            "non-integer order requires z on the closed positive real axis",
        ));
    }
    if z.re == 0.0 && z.im == 0.0 {
        return if nu == 0.0 {
            Ok(DdSum::exact(Cdd::ONE))
        } else if nu > 0.0 {
            Ok(DdSum::exact(Cdd::ZERO))
        } else {
            Err(domain("bessel_j", "negative order diverges at z = 0"))
        };
    }
    let pref = bessel_prefactor(nu, z)?;
    Ok(regularized_bessel_series(nu, z, ctl).scaled(pref))
}

/// J_ν(z) from its defining power series.
pub fn bessel_j(nu: RealScalar, z: ComplexValue, ctl: &SeriesControl) -> Result<SeriesEval> {
    bessel_j_dd(nu, z, ctl).map(DdSum::eval)
}

/// Kummer series Σ (a)ₙ zⁿ / ((b)ₙ n!) with parameters held in double-double.
fn kummer_series(a: Cdd, b: Cdd, z: ComplexValue, ctl: &SeriesControl) -> DdSum {
    let zz = Cdd::from_c64(z);
    let terminating = nonpositive_integer(a).is_some();
    sum_terms(ctl, Cdd::ONE, terminating, |n, prev| {
        let k = (n - 1) as f64;
        let up = a.add_f64(k);
        if up.is_zero() {
            return Ok(None);
        }
        let down = b.add_f64(k).scale_f64(n as f64);
        Ok(Some((prev * up * zz) / down))
    })
    .expect("infallible term generator")
}

pub(crate) fn kummer_dd(a: Cdd, b: Cdd, z: ComplexValue, ctl: &SeriesControl) -> Result<DdSum> {
    ctl.validate()?;
    if !(a.is_finite() && b.is_finite() && finite(z)) {
        return Err(domain("kummer_m", "non-finite parameter or argument"));
    }
    let a_terminates = nonpositive_integer(a);
    if let Some(pole) = nonpositive_integer(b) {
        match a_terminates {
            Some(m) if m <= pole => {}
            _ => return Err(domain("kummer_m", format!("b = {} is a nonpositive integer", b.re.hi))),
        }
    }
    if z.re < -5.0 && a_terminates.is_none() {
        // M(a; b; z) = e^z M(b - a; b; -z)
        let flipped = kummer_series(b - a, b, -z, ctl);
        return Ok(flipped.scaled(z.exp()));
    }
    Ok(kummer_series(a, b, z, ctl))
}

/// Kummer's confluent hypergeometric function M(a; b; z).
pub fn kummer_m(a: ComplexValue, b: ComplexValue, z: ComplexValue, ctl: &SeriesControl) -> Result<SeriesEval> {
    kummer_dd(Cdd::from_c64(a), Cdd::from_c64(b), z, ctl).map(DdSum::eval)
}

fn whittaker_parameters(kappa: f64, mu: f64) -> (Cdd, Cdd) {
    let a = Dd::sum(mu, -kappa).add_f64(0.5);
    let b = Dd::sum(2.0 * mu, 1.0);
    (Cdd::new(a, Dd::ZERO), Cdd::new(b, Dd::ZERO))
}

fn check_whittaker_args(kappa: f64, mu: f64, z: ComplexValue) -> Result<()> {
    if !(kappa.is_finite() && mu.is_finite() && finite(z)) {
        return Err(domain("whittaker_m", "non-finite parameter or argument"));
    }
    let b = 2.0 * mu + 1.0;
    if b <= 0.0 && b == b.round() {
        return Err(domain("whittaker_m", format!("2mu + 1 = {b} is a nonpositive integer")));
    }
    let s = mu + 0.5;
    if s != s.round() && (z.im != 0.0 || z.re < 0.0) {
        return Err(domain(
            "whittaker_m",
            "non-integer mu + 1/2 requires z on the closed positive real axis",
        ));
    }
    Ok(())
}

/// Whittaker function M_{κ,μ}(z) = e^{-z/2} z^{μ+1/2} M(μ-κ+1/2; 2μ+1; z).
pub fn whittaker_m(kappa: RealScalar, mu: RealScalar, z: ComplexValue, ctl: &SeriesControl) -> Result<SeriesEval> {
    ctl.validate()?;
    check_whittaker_args(kappa, mu, z)?;
    let s = mu + 0.5;
    if z.re == 0.0 && z.im == 0.0 {
        return if s > 0.0 {
            Ok(DdSum::exact(Cdd::ZERO).eval())
        } else if s == 0.0 {
            Ok(DdSum::exact(Cdd::ONE).eval())
        } else {
            Err(domain("whittaker_m", "z^(mu + 1/2) diverges at z = 0"))
        };
    }
    let power = if s == s.round() {
        z.powi(s as i32)
    } else {
        ComplexValue::new(z.re.powf(s), 0.0)
    };
    let (a, b) = whittaker_parameters(kappa, mu);
    let pref = (-z * 0.5).exp() * power;
    Ok(kummer_dd(a, b, z, ctl)?.scaled(pref).eval())
}

/// M_{κ,μ} and its first two derivatives on the positive real axis, each
/// obtained by differentiating the defining series term by term.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WhittakerDerivatives {
    pub value: RealScalar,
    pub first: RealScalar,
    pub second: RealScalar,
    pub terms_used: usize,
    pub converged: bool,
}

pub fn whittaker_m_derivatives(
    kappa: RealScalar,
    mu: RealScalar,
    z: RealScalar,
    ctl: &SeriesControl,
) -> Result<WhittakerDerivatives> {
    ctl.validate()?;
    check_whittaker_args(kappa, mu, ComplexValue::new(z, 0.0))?;
    if !(z > 0.0) {
        return Err(domain("whittaker_m_derivatives", "requires z > 0"));
    }
    let (a, b) = whittaker_parameters(kappa, mu);
    let (a, b) = (a.re, b.re);
    let s = mu + 0.5;

    // u_n = c_n zⁿ; A = Σ u_n, B = Σ (n+s) u_n, C = Σ (n+s)(n+s-1) u_n.
    let mut u = Dd::ONE;
    let mut sums = [Dd::ONE, Dd::new(s), Dd::new(s) * Dd::new(s - 1.0)];
    let mut run = 0;
    let mut used = 1;
    let mut converged = false;
    while used < ctl.max_terms {
        let n = used as f64;
        let up = a.add_f64(n - 1.0);
        if up.is_zero() {
            converged = true;
            break;
        }
        u = (u * up).mul_f64(z) / b.add_f64(n - 1.0).mul_f64(n);
        let ns = Dd::sum(n, s);
        let terms = [u, u * ns, u * ns * ns.add_f64(-1.0)];
        let mut small = true;
        for (acc, t) in sums.iter_mut().zip(terms) {
            *acc = *acc + t;
            small &= 2.0 * t.to_f64().abs() <= ctl.rel_tol * acc.to_f64().abs();
        }
        used += 1;
        run = if small { run + 1 } else { 0 };
        if run >= ctl.consecutive_small {
            converged = true;
            break;
        }
    }
    let [sa, sb, sc] = sums;
    let e = (-0.5 * z).exp();
    let zs2 = z.powf(s - 2.0);
    let value = e * zs2 * (sa.mul_f64(z).mul_f64(z)).to_f64();
    let first = e * zs2 * (sb.mul_f64(z) - sa.mul_f64(z).mul_f64(z).mul_f64(0.5)).to_f64();
    let second_inner = sc - sb.mul_f64(z) + sa.mul_f64(z).mul_f64(z).mul_f64(0.25);
    let second = e * zs2 * second_inner.to_f64();
    Ok(WhittakerDerivatives {
        value,
        first,
        second,
        terms_used: used,
        converged,
    })
}

/// Right-hand side of the confluent summation formula
/// M(2a; 2b; z) = Σ (a)ₙ(b)ₙ(b-a)ₙ / ((b)₂ₙ(2b)₂ₙ n!) (-z²)ⁿ M(a+n; b+2n; z).
///
/// Each inner M is evaluated at a tolerance ten times tighter than the
/// outer one.
pub fn sum_formula_rhs(a: ComplexValue, b: ComplexValue, z: ComplexValue, ctl: &SeriesControl) -> Result<SeriesEval> {
    ctl.validate()?;
    if !(finite(a) && finite(b) && finite(z)) {
        return Err(domain("sum_formula_rhs", "non-finite parameter or argument"));
    }
    let inner_ctl = ctl.with_rel_tol(ctl.rel_tol / 10.0);
    let a = Cdd::from_c64(a);
    let b = Cdd::from_c64(b);
    let b_minus_a = b - a;
    let two_b = b.scale_f64(2.0);
    let zz = Cdd::from_c64(z);
    let minus_z2 = -(zz * zz);

    let first = kummer_dd(a, b, z, &inner_ctl)?;
    let mut inner_ok = first.converged;
    let mut coef = Cdd::ONE;
    let mut out = sum_terms(ctl, first.value, false, |n, _| {
        let k = (n - 1) as f64;
        let ups = [a.add_f64(k), b.add_f64(k), b_minus_a.add_f64(k)];
        if ups.iter().any(|u| u.is_zero()) {
            return Ok(None);
        }
        let j = 2.0 * k;
        let downs = [
            b.add_f64(j),
            b.add_f64(j + 1.0),
            two_b.add_f64(j),
            two_b.add_f64(j + 1.0),
        ];
        if downs.iter().any(|d| d.is_zero()) {
            return Err(domain(
                "sum_formula_rhs",
                format!("denominator Pochhammer (b)_2n (2b)_2n vanishes at n = {n}"),
            ));
        }
        let num = ups[0] * ups[1] * ups[2] * minus_z2;
        let den = (downs[0] * downs[1] * downs[2] * downs[3]).scale_f64(n as f64);
        coef = coef * num / den;
        let inner = kummer_dd(a.add_f64(n as f64), b.add_f64(2.0 * n as f64), z, &inner_ctl)?;
        inner_ok &= inner.converged;
        Ok(Some(coef * inner.value))
    })?;
    out.converged &= inner_ok;
    Ok(out.eval())
}

/// Right-hand side of the Bessel summation formula
/// J_{2ν+1/2}(z) = Γ(ν+1)/Γ(2ν+3/2) Σ (ν+1/2)ₙ / ((2ν+3/2)ₙ n!) (z/2)^{ν+1/2+n} J_{ν+n}(z).
///
/// Each J_{ν+n} is split as (z/2)^ν/Γ(ν+1) · (z/2)ⁿ/(ν+1)ₙ · J̃_{ν+n}(z);
/// everything but the common factor is carried in double-double and every
/// J̃ is summed to double-double accuracy whatever the outer tolerance.
pub fn bessel_sum_rhs(nu: RealScalar, z: RealScalar, ctl: &SeriesControl) -> Result<SeriesEval> {
    ctl.validate()?;
    if !(nu.is_finite() && nu > -0.5) {
        return Err(domain("bessel_sum_rhs", format!("requires nu > -1/2, got {nu}")));
    }
    if !(z.is_finite() && z > 0.0) {
        return Err(domain("bessel_sum_rhs", format!("requires z > 0, got {z}")));
    }
    let zc = ComplexValue::new(z, 0.0);
    let pref = bessel_prefactor(2.0 * nu + 0.5, zc)?;
    let up0 = Dd::sum(nu, 0.5);
    let down0 = Dd::sum(2.0 * nu, 1.5);
    let nu1 = Dd::sum(nu, 1.0);
    let quarter_z2 = Dd::sum(z / 2.0, 0.0).mul_f64(z / 2.0);

    let inner_ctl = ctl.with_rel_tol((ctl.rel_tol / 10.0).min(1e-20));
    let j0 = regularized_bessel_series(nu, zc, &inner_ctl);
    let mut inner_ok = j0.converged;
    let mut coef = Dd::ONE;
    let mut out = sum_terms(ctl, j0.value, false, |n, _| {
        let k = (n - 1) as f64;
        coef = (coef * up0.add_f64(k) * quarter_z2) / (down0.add_f64(k) * nu1.add_f64(k)).mul_f64(n as f64);
        let j = regularized_bessel_series(nu + n as f64, zc, &inner_ctl);
        inner_ok &= j.converged;
        Ok(Some(j.value.scale(coef)))
    })?;
    out.converged &= inner_ok;
    Ok(out.scaled(pref).eval())
}

/// Partial sum Σ_{n=0}^{N} (z/2)ⁿ Jₙ(z) / ((2n+1) n!) of the Bessel expansion of sin(z)/z.
pub fn sin_expansion_partial(z: RealScalar, terms: usize) -> Result<RealScalar> {
    if !(z.is_finite() && z > 0.0) {
        return Err(domain("sin_expansion_partial", format!("requires z > 0, got {z}")));
    }
    if terms == 0 || terms > 200 {
        return Err(domain(
            "sin_expansion_partial",
            format!("N must lie in 1..=200, got {terms}"),
        ));
    }
    let ctl = SeriesControl::default();
    let zc = ComplexValue::new(z, 0.0);
    let mut coef = Dd::ONE;
    let mut sum = bessel_j_dd(0.0, zc, &ctl)?.value.re;
    for n in 1..=terms {
        coef = coef.mul_f64(z / 2.0) / Dd::new(n as f64);
        if coef.is_zero() {
            break;
        }
        let j = bessel_j_dd(n as f64, zc, &ctl)?.value.re;
        sum = sum + (coef * j) / Dd::new((2 * n + 1) as f64);
    }
    Ok(sum.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64) -> ComplexValue {
        ComplexValue::new(re, 0.0)
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn control_rejects_bad_settings() {
        assert!(SeriesControl::new(0.0, 10, 1).is_err());
        assert!(SeriesControl::new(1.0, 10, 1).is_err());
        assert!(SeriesControl::new(1e-10, 0, 1).is_err());
        assert!(SeriesControl::new(1e-10, 10, 0).is_err());
        assert!(SeriesControl::new(1e-10, 10, 1).is_ok());
    }

    #[test]
    fn bessel_j_at_zero() {
        let ctl = SeriesControl::default();
        assert_eq!(bessel_j(0.0, c(0.0), &ctl).unwrap().value, c(1.0));
        assert_eq!(bessel_j(2.5, c(0.0), &ctl).unwrap().value, c(0.0));
        assert!(bessel_j(-0.5, c(0.0), &ctl).is_err());
    }

    #[test]
    fn bessel_j_half_order_is_a_sine() {
        let ctl = SeriesControl::default();
        let v = bessel_j(0.5, c(PI / 2.0), &ctl).unwrap();
        assert!(v.converged);
        assert!(rel(v.value.re, 2.0 / PI) < 1e-15);
    }

    #[test]
    fn bessel_j_domain_errors() {
        let ctl = SeriesControl::default();
        assert!(bessel_j(-1.0, c(1.0), &ctl).is_err());
        assert!(bessel_j(0.5, c(-1.0), &ctl).is_err());
        assert!(bessel_j(0.5, ComplexValue::new(1.0, 1.0), &ctl).is_err());
        assert!(bessel_j(2.0, ComplexValue::new(1.0, 1.0), &ctl).is_ok());
    }

    #[test]
    fn non_convergence_is_flagged() {
        let ctl = SeriesControl::new(1e-15, 5, 3).unwrap();
        let v = bessel_j(0.0, c(10.0), &ctl).unwrap();
        assert!(!v.converged);
        assert_eq!(v.terms_used, 5);
    }

    #[test]
    fn kummer_simple_values() {
        let ctl = SeriesControl::default();
        assert_eq!(kummer_m(c(0.3), c(1.7), c(0.0), &ctl).unwrap().value, c(1.0));
        let v = kummer_m(c(1.0), c(2.0), c(1.0), &ctl).unwrap();
        assert!(rel(v.value.re, std::f64::consts::E - 1.0) < 1e-15);
    }

    #[test]
    fn kummer_terminating_uses_exactly_m_plus_one_terms() {
        let ctl = SeriesControl::default();
        let v = kummer_m(c(-4.0), c(1.5), c(0.01), &ctl).unwrap();
        assert_eq!(v.terms_used, 5);
        assert!(v.converged);
        assert_eq!(v.tail_estimate, 0.0);
        // terminating with a nonpositive-integer b of larger magnitude
        let v = kummer_m(c(-2.0), c(-3.0), c(2.0), &ctl).unwrap();
        // 1 + (-2)(2)/(-3) + (-2)(-1)(4)/((-3)(-2)·2) = 1 + 4/3 + 2/3
        assert!(rel(v.value.re, 3.0) < 1e-15);
        assert_eq!(v.terms_used, 3);
    }

    #[test]
    fn kummer_pole_in_b_is_a_domain_error() {
        let ctl = SeriesControl::default();
        assert!(kummer_m(c(0.5), c(-2.0), c(1.0), &ctl).is_err());
        assert!(kummer_m(c(-3.0), c(-2.0), c(1.0), &ctl).is_err());
    }

    #[test]
    fn whittaker_factorizes_through_kummer() {
        let ctl = SeriesControl::default();
        let w = whittaker_m(0.25, 1.0, c(1.0), &ctl).unwrap().value.re;
        let k = kummer_m(c(1.25), c(3.0), c(1.0), &ctl).unwrap().value.re;
        assert!(rel(w, (-0.5f64).exp() * k) < 1e-15);
    }

    #[test]
    fn whittaker_domain_errors() {
        let ctl = SeriesControl::default();
        assert!(whittaker_m(0.0, -1.0, c(1.0), &ctl).is_err());
        assert!(whittaker_m(0.0, 0.25, c(-1.0), &ctl).is_err());
        // μ + 1/2 integer: negative z is fine
        assert!(whittaker_m(0.0, 0.5, c(-1.0), &ctl).is_ok());
    }

    #[test]
    fn whittaker_derivatives_match_closed_form() {
        // M_{0,1/2}(z) = 2 sinh(z/2)
        let d = whittaker_m_derivatives(0.0, 0.5, 2.0, &SeriesControl::default()).unwrap();
        assert!(rel(d.value, 2.0 * 1f64.sinh()) < 1e-15);
        assert!(rel(d.first, 1f64.cosh()) < 1e-15);
        assert!(rel(d.second, 0.5 * 1f64.sinh()) < 1e-15);
    }

    #[test]
    fn sum_formula_degenerate_cases() {
        let ctl = SeriesControl::default();
        let v = sum_formula_rhs(c(0.4), c(1.3), c(0.0), &ctl).unwrap();
        assert!(rel(v.value.re, 1.0) < 1e-15);
        let v = sum_formula_rhs(c(0.7), c(0.7), c(1.5), &ctl).unwrap();
        assert_eq!(v.terms_used, 1);
        assert!(rel(v.value.re, 1.5f64.exp()) < 1e-15);
    }

    #[test]
    fn sum_formula_rejects_vanishing_denominators() {
        let ctl = SeriesControl::default();
        assert!(sum_formula_rhs(c(0.3), c(-0.5), c(1.0), &ctl).is_err());
    }

    #[test]
    fn bessel_sum_small_argument_leading_order() {
        let ctl = SeriesControl::default();
        let z = 1e-6;
        let v = bessel_sum_rhs(1.0, z, &ctl).unwrap().value.re;
        let lead = (z / 2.0).powf(2.5) / gamma(3.5).unwrap();
        assert!(rel(v, lead) < 1e-5);
    }

    #[test]
    fn bessel_sum_domain() {
        let ctl = SeriesControl::default();
        assert!(bessel_sum_rhs(-0.5, 1.0, &ctl).is_err());
        assert!(bessel_sum_rhs(0.0, 0.0, &ctl).is_err());
    }

    #[test]
    fn sin_expansion_examples() {
        assert!((sin_expansion_partial(1e-12, 7).unwrap() - 1.0).abs() < 1e-15);
        assert!((sin_expansion_partial(1.0, 20).unwrap() - 1f64.sin()).abs() < 1e-13);
        assert!(sin_expansion_partial(PI, 30).unwrap().abs() < 1e-12);
        assert!(sin_expansion_partial(1.0, 0).is_err());
        assert!(sin_expansion_partial(1.0, 201).is_err());
        assert!(sin_expansion_partial(-1.0, 5).is_err());
    }
}
