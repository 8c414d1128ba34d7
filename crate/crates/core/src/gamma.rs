//! Gamma-family functions for real arguments, plus the complex log-gamma the
//! Mellin–Barnes contour needs.

use crate::error::{domain, Result};
use crate::{ComplexValue, RealScalar};
use std::f64::consts::PI;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

// Stirling tail B_{2k} / (2k (2k-1)), k = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// `sin(pi x)` with exact argument reduction.
pub fn sin_pi(x: f64) -> f64 {
    let r = x - 2.0 * (x / 2.0).round(); // exact, r in [-1, 1]
    let r = if r > 0.5 {
        1.0 - r
    } else if r < -0.5 {
        -1.0 - r
    } else {
        r
    };
    (PI * r).sin()
}

fn lanczos_gamma(x: f64) -> f64 {
    // Valid for x >= 0.5.
    let xm1 = x - 1.0;
    let mut acc = LANCZOS_COEF[0];
    for (k, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += c / (xm1 + k as f64);
    }
    let t = xm1 + LANCZOS_G + 0.5;
    // Split the power so the intermediate does not overflow before Γ does.
    let half = t.powf((xm1 + 0.5) / 2.0);
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * acc
}

/// Γ(x) for real `x` away from the poles at the nonpositive integers.
pub fn gamma(x: RealScalar) -> Result<RealScalar> {
    if !x.is_finite() {
        return Err(domain("gamma", format!("non-finite argument {x}")));
    }
    if is_nonpositive_integer(x) {
        return Err(domain("gamma", format!("pole at x = {x}")));
    }
    if x.fract() == 0.0 && x <= 171.0 {
        // (x-1)! as a product, exact through 22!
        return Ok((2..x as u32).fold(1.0, |acc, k| acc * k as f64));
    }
    if x < 0.5 {
        Ok(PI / (sin_pi(x) * lanczos_gamma(1.0 - x)))
    } else {
        Ok(lanczos_gamma(x))
    }
}

fn stirling_ln_gamma(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut tail = 0.0;
    for c in STIRLING.iter().rev() {
        tail = tail * inv2 + c;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_2PI + tail * inv
}

/// ln Γ(x) for `x > 0`.
///
/// Near the zeros at x = 1 and x = 2 the error is absolute (about 1e-16),
/// not relative; both points themselves return exactly 0.
pub fn log_gamma(x: RealScalar) -> Result<RealScalar> {
    if !x.is_finite() || x <= 0.0 {
        return Err(domain("log_gamma", format!("requires x > 0, got {x}")));
    }
    if x == 1.0 || x == 2.0 {
        return Ok(0.0);
    }
    if x >= 10.0 {
        Ok(stirling_ln_gamma(x))
    } else {
        Ok(gamma(x)?.ln())
    }
}

/// Rising factorial (x)_n as a direct ascending product.
pub fn pochhammer(x: ComplexValue, n: usize) -> ComplexValue {
    let mut acc = ComplexValue::new(1.0, 0.0);
    for k in 0..n {
        acc *= x + k as f64;
    }
    acc
}

/// Real-argument rising factorial, same product order as [`pochhammer`].
pub fn pochhammer_real(x: RealScalar, n: usize) -> RealScalar {
    let mut acc = 1.0;
    for k in 0..n {
        acc *= x + k as f64;
    }
    acc
}

/// B(x, y) = Γ(x)Γ(y)/Γ(x+y), assembled in log space.
pub fn beta(x: RealScalar, y: RealScalar) -> Result<RealScalar> {
    if !(x > 0.0 && y > 0.0) {
        return Err(domain("beta", format!("requires x, y > 0, got ({x}, {y})")));
    }
    Ok((log_gamma(x)? + log_gamma(y)? - log_gamma(x + y)?).exp())
}

fn lanczos_ln_gamma_complex(z: ComplexValue) -> ComplexValue {
    let zm1 = z - 1.0;
    let mut acc = ComplexValue::new(LANCZOS_COEF[0], 0.0);
    for (k, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc += *c / (zm1 + k as f64);
    }
    let t = zm1 + (LANCZOS_G + 0.5);
    HALF_LN_2PI + (zm1 + 0.5) * t.ln() - t + acc.ln()
}

/// ln sin(pi z), stable for large |Im z| (the value is defined modulo 2πi).
fn ln_sin_pi(z: ComplexValue) -> ComplexValue {
    if z.im < 0.0 {
        return ln_sin_pi(z.conj()).conj();
    }
    let i = ComplexValue::i();
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
    let e2 = (2.0 * PI * i * z).exp();
    ComplexValue::new(-std::f64::consts::LN_2, PI / 2.0) - i * PI * z + (1.0 - e2).ln()
}

/// Complex ln Γ(z) modulo 2πi; only meant to be exponentiated.
pub fn ln_gamma_complex(z: ComplexValue) -> Result<ComplexValue> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(domain("ln_gamma_complex", "non-finite argument"));
    }
    if z.im == 0.0 && is_nonpositive_integer(z.re) {
        return Err(domain("ln_gamma_complex", format!("pole at z = {}", z.re)));
    }
    if z.re < 0.5 {
        Ok(PI.ln() - ln_sin_pi(z) - lanczos_ln_gamma_complex(1.0 - z))
    } else {
        Ok(lanczos_ln_gamma_complex(z))
    }
}
