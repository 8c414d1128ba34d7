//! Grid-driven verifiers that evaluate both sides of each identity and
//! collect the comparison into an [`IdentityReport`].
//!
//! Grid points are evaluated concurrently; entries are always ordered by grid
//! index so a report depends only on its inputs.

mod grid;
mod report;

pub use grid::{Axis, ExactSpec, GridSpec};
pub use report::{classify, sci17, Entry, IdentityReport, ParamValue, Summary};

use crate::error::{domain, Error, Result};
use crate::exact::{
    check_pochhammer_identity_upto, check_saalschutz, check_series_coefficients, poch_vanishes, saalschutz_admissible,
    BigRational,
};
use crate::gamma::{beta, gamma};
use crate::quadrature::{gauss_jacobi_rule, integral_repr_rhs, mellin_barnes_bessel, whittaker_ode_residual};
use crate::series::{bessel_j, bessel_sum_rhs, kummer_m, sin_expansion_partial, sum_formula_rhs, whittaker_m};
use crate::ComplexValue;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum IdentityId {
    IntegralRepr,
    SumFormula,
    BesselSum,
    SinExpansion,
    KummerBessel,
    GammaIdentities,
    MellinBarnes,
    PochhammerExact,
    Saalschutz,
    OdeResidual,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::IntegralRepr,
        IdentityId::SumFormula,
        IdentityId::BesselSum,
        IdentityId::SinExpansion,
        IdentityId::KummerBessel,
        IdentityId::GammaIdentities,
        IdentityId::MellinBarnes,
        IdentityId::PochhammerExact,
        IdentityId::Saalschutz,
        IdentityId::OdeResidual,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::IntegralRepr => "INTEGRAL_REPR",
            IdentityId::SumFormula => "SUM_FORMULA",
            IdentityId::BesselSum => "BESSEL_SUM",
            IdentityId::SinExpansion => "SIN_EXPANSION",
            IdentityId::KummerBessel => "KUMMER_BESSEL",
            IdentityId::GammaIdentities => "GAMMA_IDENTITIES",
            IdentityId::MellinBarnes => "MELLIN_BARNES",
            IdentityId::PochhammerExact => "POCHHAMMER_EXACT",
            IdentityId::Saalschutz => "SAALSCHUTZ",
            IdentityId::OdeResidual => "ODE_RESIDUAL",
        }
    }

    /// The identity being verified, written out.
    pub fn formula(self) -> &'static str {
        match self {
            IdentityId::IntegralRepr => {
                "M_{k,m}(z) = sqrt(pi) G(2m+1) / (2^m G((m+k+1/2)/2) G((m-k+1/2)/2)) sqrt(z) \
                 int_0^1 x^{(1/2-k)/2-1} (1-x)^{(1/2+k)/2-1} e^{(x-1/2)z} J_m(sqrt(x(1-x)) z) dx"
            }
            IdentityId::SumFormula => {
                "M(2a;2b;z) = sum_n (a)_n (b)_n (b-a)_n / ((b)_2n (2b)_2n n!) (-z^2)^n M(a+n;b+2n;z)"
            }
            IdentityId::BesselSum => {
                "J_{2v+1/2}(z) = G(v+1)/G(2v+3/2) sum_n (v+1/2)_n / ((2v+3/2)_n n!) (z/2)^{v+1/2+n} J_{v+n}(z)"
            }
            IdentityId::SinExpansion => "sin(z)/z = sum_n (z/2)^n J_n(z) / ((2n+1) n!)",
            IdentityId::KummerBessel => "J_v(z) = e^{-+iz} / G(v+1) (z/2)^v M(v+1/2; 2v+1; +-2iz)",
            IdentityId::GammaIdentities => {
                "B(x,y) = G(x)G(y)/G(x+y); G(2z) = 2^{2z-1} G(z) G(z+1/2) / sqrt(pi); G(x)G(1-x) = pi/sin(pi x)"
            }
            IdentityId::MellinBarnes => "J_v(z) = (1/2 pi i) int G(-t)/G(v+t+1) (z/2)^{v+2t} dt",
            IdentityId::PochhammerExact => {
                "(2a)_k/(2b)_k = k!/(b)_k sum_{n<=k/2} (a)_{k-n} (b)_n (b-a)_n / ((2b)_2n n! (k-2n)!) (-1)^n"
            }
            IdentityId::Saalschutz => "3F2(a, b, -n; c, 1+a+b-c-n; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n)",
            IdentityId::OdeResidual => "y'' + (-1/4 + k/z + (1/4 - m^2)/z^2) y = 0 at y = M_{k,m}(z)",
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, IdentityId::PochhammerExact | IdentityId::Saalschutz)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| domain("IdentityId", format!("unknown identity {s:?}")))
    }
}

fn real_part(op: &'static str, name: &str, z: ComplexValue) -> std::result::Result<f64, String> {
    if z.im != 0.0 {
        Err(format!("{op}: {name} = {z} must be real"))
    } else {
        Ok(z.re)
    }
}

fn gate(mut problems: Vec<String>) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    problems.retain(|p| seen.insert(p.clone()));
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Error::GridValidation(problems))
    }
}

/// Evaluate every point concurrently, keep grid order, surface the first error by index.
fn evaluate<P, F>(points: &[P], f: F) -> Result<Vec<Entry>>
where
    P: Sync,
    F: Fn(&P) -> Result<Vec<Entry>> + Sync + Send,
{
    let results: Vec<Result<Vec<Entry>>> = points.par_iter().map(f).collect();
    let mut entries = Vec::new();
    for r in results {
        entries.extend(r?);
    }
    Ok(entries)
}

fn reals(point: &[ComplexValue]) -> Vec<f64> {
    point.iter().map(|z| z.re).collect()
}

pub fn verify_integral_repr(grid: &GridSpec) -> Result<IdentityReport> {
    grid.validate()?;
    let points = grid.product(&["kappa", "mu", "z"])?;
    let mut problems = Vec::new();
    for p in &points {
        for (name, v) in ["kappa", "mu", "z"].iter().zip(p) {
            if let Err(e) = real_part("INTEGRAL_REPR", name, *v) {
                problems.push(e);
            }
        }
        let (k, m, z) = (p[0].re, p[1].re, p[2].re);
        if !(m - k + 0.5 > 0.0) {
            problems.push(format!(
                "kappa = {k}, mu = {m}: mu - kappa + 1/2 = {} <= 0",
                m - k + 0.5
            ));
        }
        if !(m + k + 0.5 > 0.0) {
            problems.push(format!(
                "kappa = {k}, mu = {m}: mu + kappa + 1/2 = {} <= 0",
                m + k + 0.5
            ));
        }
        if !(z > 0.0 && z <= 30.0) {
            problems.push(format!("z = {z} outside (0, 30]"));
        }
    }
    gate(problems)?;
    let entries = evaluate(&points, |p| {
        let [k, m, z] = reals(p)[..] else { unreachable!() };
        let lhs = whittaker_m(k, m, ComplexValue::new(z, 0.0), &grid.series)?.value;
        let rhs = integral_repr_rhs(k, m, z, grid.quad_order)?;
        Ok(vec![Entry::numeric(
            vec![k.into(), m.into(), z.into()],
            lhs,
            ComplexValue::new(rhs, 0.0),
            grid.tolerance,
        )])
    })?;
    Ok(IdentityReport::new(
        IdentityId::IntegralRepr,
        &["kappa", "mu", "z"],
        entries,
    ))
}

pub fn verify_sum_formula(grid: &GridSpec) -> Result<IdentityReport> {
    grid.validate()?;
    let mut points: Vec<(Vec<ComplexValue>, f64)> = grid
        .product(&["a", "b", "z"])?
        .into_iter()
        .map(|p| (p, grid.tolerance))
        .collect();
    let extra_tol = grid.extra_tolerance.unwrap_or(grid.tolerance);
    points.extend(grid.extra_points.iter().map(|p| (p.clone(), extra_tol)));

    let mut problems = Vec::new();
    for (p, _) in &points {
        if p.len() != 3 {
            problems.push(format!("point {p:?} does not have three coordinates (a, b, z)"));
            continue;
        }
        let two_b = p[1] * 2.0;
        if two_b.im == 0.0 && two_b.re <= 0.0 && two_b.re == two_b.re.round() {
            problems.push(format!("b = {}: denominator Pochhammer (2b)_2n vanishes", p[1]));
        }
        if p[2].norm() > 50.0 {
            problems.push(format!("|z| = {} exceeds 50", p[2].norm()));
        }
    }
    gate(problems)?;
    let entries = evaluate(&points, |(p, tol)| {
        let (a, b, z) = (p[0], p[1], p[2]);
        let lhs = kummer_m(a * 2.0, b * 2.0, z, &grid.series)?.value;
        let rhs = sum_formula_rhs(a, b, z, &grid.series)?.value;
        let params = p.iter().map(|v| ParamValue::from_complex(*v)).collect();
        Ok(vec![Entry::numeric(params, lhs, rhs, *tol)])
    })?;
    Ok(IdentityReport::new(IdentityId::SumFormula, &["a", "b", "z"], entries))
}

fn nu_z_points(
    grid: &GridSpec,
    op: &'static str,
    nu_min: f64,
    nu_inclusive: bool,
    z_max: f64,
) -> Result<Vec<(f64, f64)>> {
    let points = grid.product(&["nu", "z"])?;
    let mut problems = Vec::new();
    let mut out = Vec::new();
    for p in &points {
        let nu = real_part(op, "nu", p[0]);
        let z = real_part(op, "z", p[1]);
        match (nu, z) {
            (Ok(nu), Ok(z)) => {
                let nu_ok = if nu_inclusive { nu >= nu_min } else { nu > nu_min };
                if !nu_ok {
                    let rel = if nu_inclusive { ">=" } else { ">" };
                    problems.push(format!("{op}: nu = {nu} violates nu {rel} {nu_min}"));
                }
                if !(z > 0.0 && z <= z_max) {
                    problems.push(format!("{op}: z = {z} outside (0, {z_max}]"));
                }
                out.push((nu, z));
            }
            (nu, z) => problems.extend(nu.err().into_iter().chain(z.err())),
        }
    }
    gate(problems)?;
    Ok(out)
}

pub fn verify_bessel_sum(grid: &GridSpec) -> Result<IdentityReport> {
    grid.validate()?;
    let points = nu_z_points(grid, "BESSEL_SUM", -0.5, false, 20.0)?;
    let entries = evaluate(&points, |&(nu, z)| {
        let lhs = bessel_j(2.0 * nu + 0.5, ComplexValue::new(z, 0.0), &grid.series)?.value;
        let rhs = bessel_sum_rhs(nu, z, &grid.series)?.value;
        Ok(vec![Entry::numeric(
            vec![nu.into(), z.into()],
            lhs,
            rhs,
            grid.tolerance,
        )])
    })?;
    Ok(IdentityReport::new(IdentityId::BesselSum, &["nu", "z"], entries))
}

pub fn verify_sin_expansion(grid: &GridSpec) -> Result<IdentityReport> {
    grid.validate()?;
    let mut problems = Vec::new();
    if grid.terms == 0 || grid.terms > 200 {
        problems.push(format!("SIN_EXPANSION: N = {} outside 1..=200", grid.terms));
    }
    let mut zs = Vec::new();
    for v in grid.values("z")? {
        match real_part("SIN_EXPANSION", "z", v) {
            Ok(z) if z > 0.0 && z <= 20.0 => zs.push(z),
            Ok(z) => problems.push(format!("SIN_EXPANSION: z = {z} outside (0, 20]")),
            Err(e) => problems.push(e),
        }
    }
    gate(problems)?;
    let n = grid.terms;
    let entries = evaluate(&zs, |&z| {
        let lhs = z.sin() / z;
        let rhs = sin_expansion_partial(z, n)?;
        Ok(vec![Entry::numeric(
            vec![z.into(), (n as f64).into()],
            ComplexValue::new(lhs, 0.0),
            ComplexValue::new(rhs, 0.0),
            grid.tolerance,
        )])
    })?;
    Ok(IdentityReport::new(IdentityId::SinExpansion, &["z", "N"], entries))
}

/// Both signs of J_ν(z) = e^{∓iz}/Γ(ν+1) (z/2)^ν M(ν+1/2; 2ν+1; ±2iz), plus
/// an entry comparing the two right-hand sides with each other.
pub fn verify_kummer_bessel_relation(grid: &GridSpec) -> Result<IdentityReport> {
    grid.validate()?;
    let points = nu_z_points(grid, "KUMMER_BESSEL", -0.5, false, 20.0)?;
    let entries = evaluate(&points, |&(nu, z)| {
        let lhs = bessel_j(nu, ComplexValue::new(z, 0.0), &grid.series)?.value;
        let pref = (0.5 * z).powf(nu) / gamma(nu + 1.0)?;
        let side = |sign: f64| -> Result<ComplexValue> {
            let m = kummer_m(
                ComplexValue::new(nu + 0.5, 0.0),
                ComplexValue::new(2.0 * nu + 1.0, 0.0),
                ComplexValue::new(0.0, sign * 2.0 * z),
                &grid.series,
            )?
            .value;
            Ok(ComplexValue::new(0.0, -sign * z).exp() * pref * m)
        };
        let plus = side(1.0)?;
        let minus = side(-1.0)?;
        Ok(vec![
            Entry::numeric(vec![nu.into(), z.into(), "+".into()], lhs, plus, grid.tolerance),
            Entry::numeric(vec![nu.into(), z.into(), "-".into()], lhs, minus, grid.tolerance),
            Entry::numeric(
                vec![nu.into(), z.into(), "agree".into()],
                plus,
                minus,
                grid.agreement_tolerance,
            ),
        ])
    })?;
    Ok(IdentityReport::new(
        IdentityId::KummerBessel,
        &["nu", "z", "sign"],
        entries,
    ))
}

#[derive(Clone, Copy)]
enum GammaCheck {
    Beta(f64, f64),
    Duplication(f64),
    Reflection(f64),
}

/// Beta integral (closed form against a Gauss–Jacobi weight sum), Legendre
/// duplication and Euler reflection.
pub fn verify_gamma_identities(grid: &GridSpec) -> Result<IdentityReport> {
    grid.validate()?;
    let bx = grid.values("beta_x")?;
    let by = grid.values("beta_y")?;
    let mut problems = Vec::new();
    if bx.len() != by.len() {
        problems.push(format!(
            "GAMMA_IDENTITIES: beta_x has {} values but beta_y has {}",
            bx.len(),
            by.len()
        ));
    }
    let mut checks = Vec::new();
    for (x, y) in bx.iter().zip(&by) {
        if x.im != 0.0 || y.im != 0.0 || !(x.re > 0.0 && y.re > 0.0) {
            problems.push(format!("GAMMA_IDENTITIES: beta needs x, y > 0, got ({x}, {y})"));
        } else {
            checks.push(GammaCheck::Beta(x.re, y.re));
        }
    }
    for z in grid.values("duplication")? {
        if z.im != 0.0 || !(z.re > 0.0) {
            problems.push(format!("GAMMA_IDENTITIES: duplication needs z > 0, got {z}"));
        } else {
            checks.push(GammaCheck::Duplication(z.re));
        }
    }
    for x in grid.values("reflection")? {
        if x.im != 0.0 || !(x.re > 0.0 && x.re < 1.0) {
            problems.push(format!("GAMMA_IDENTITIES: reflection needs x in (0, 1), got {x}"));
        } else {
            checks.push(GammaCheck::Reflection(x.re));
        }
    }
    gate(problems)?;
    let order = grid.quad_order.clamp(1, crate::quadrature::MAX_ORDER);
    let entries = evaluate(&checks, |check| {
        let r = |x: f64| ComplexValue::new(x, 0.0);
        Ok(vec![match *check {
            GammaCheck::Beta(x, y) => {
                // t = (1+s)/2 maps t^{x-1}(1-t)^{y-1} onto the Jacobi weight.
                let rule = gauss_jacobi_rule(y - 1.0, x - 1.0, order)?;
                let quad = rule.weight_sum() / 2f64.powf(x + y - 1.0);
                Entry::numeric(
                    vec!["beta".into(), x.into(), y.into()],
                    r(beta(x, y)?),
                    r(quad),
                    grid.tolerance,
                )
            }
            GammaCheck::Duplication(z) => {
                let rhs = 2f64.powf(2.0 * z - 1.0) * gamma(z)? * gamma(z + 0.5)? / PI.sqrt();
                Entry::numeric(
                    vec!["duplication".into(), z.into(), ParamValue::Absent],
                    r(gamma(2.0 * z)?),
                    r(rhs),
                    grid.tolerance,
                )
            }
            GammaCheck::Reflection(x) => Entry::numeric(
                vec!["reflection".into(), x.into(), ParamValue::Absent],
                r(gamma(x)? * gamma(1.0 - x)?),
                r(PI / (PI * x).sin()),
                grid.tolerance,
            ),
        }])
    })?;
    Ok(IdentityReport::new(
        IdentityId::GammaIdentities,
        &["check", "x", "y"],
        entries,
    ))
}

pub fn verify_mellin_barnes(grid: &GridSpec) -> Result<IdentityReport> {
    grid.validate()?;
    grid.contour.validate()?;
    let points = nu_z_points(grid, "MELLIN_BARNES", 2.0, true, 10.0)?;
    let entries = evaluate(&points, |&(nu, z)| {
        let lhs = bessel_j(nu, ComplexValue::new(z, 0.0), &grid.series)?.value;
        let rhs = mellin_barnes_bessel(nu, z, &grid.contour)?.value;
        Ok(vec![Entry::numeric(
            vec![nu.into(), z.into()],
            lhs,
            ComplexValue::new(rhs, 0.0),
            grid.tolerance,
        )])
    })?;
    Ok(IdentityReport::new(IdentityId::MellinBarnes, &["nu", "z"], entries))
}

pub fn run_ode_residual_suite(grid: &GridSpec) -> Result<IdentityReport> {
    grid.validate()?;
    let points = grid.product(&["kappa", "mu", "z"])?;
    let mut problems = Vec::new();
    for p in &points {
        for (name, v) in ["kappa", "mu", "z"].iter().zip(p) {
            if let Err(e) = real_part("ODE_RESIDUAL", name, *v) {
                problems.push(e);
            }
        }
        let (m, z) = (p[1].re, p[2].re);
        let b = 2.0 * m + 1.0;
        if b <= 0.0 && b == b.round() {
            problems.push(format!("ODE_RESIDUAL: 2mu + 1 = {b} is a nonpositive integer"));
        }
        if !(z > 0.0 && z <= 30.0) {
            problems.push(format!("ODE_RESIDUAL: z = {z} outside (0, 30]"));
        }
    }
    gate(problems)?;
    let entries = evaluate(&points, |p| {
        let [k, m, z] = reals(p)[..] else { unreachable!() };
        let residual = whittaker_ode_residual(k, m, z)?;
        Ok(vec![Entry::numeric(
            vec![k.into(), m.into(), z.into()],
            ComplexValue::new(0.0, 0.0),
            ComplexValue::new(residual, 0.0),
            grid.tolerance,
        )])
    })?;
    Ok(IdentityReport::new(
        IdentityId::OdeResidual,
        &["kappa", "mu", "z"],
        entries,
    ))
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let mut draw = || loop {
        let v: i64 = rng.random_range(-20..=20);
        if v != 0 {
            return v;
        }
    };
    let num = draw();
    let den = draw();
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn exact_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Seeded rational (a, b) pairs with no vanishing (2b)_j, (b)_j for j ≤ k_max.
/// Returns the pairs and the number of rejected draws.
pub fn sample_rational_pairs(seed: u64, count: usize, k_max: usize) -> (Vec<(BigRational, BigRational)>, usize) {
    let mut rng = exact_rng(seed, 0);
    let two = BigRational::from_integer(BigInt::from(2));
    let mut out = Vec::with_capacity(count);
    let mut rejected = 0;
    while out.len() < count {
        let a = random_rational(&mut rng);
        let b = random_rational(&mut rng);
        if poch_vanishes(&(&two * &b), k_max.max(1)) || poch_vanishes(&b, k_max.max(1)) {
            rejected += 1;
            continue;
        }
        out.push((a, b));
    }
    (out, rejected)
}

/// Seeded admissible (a, b, c) triples for Saalschütz's sum up to n_max.
pub fn sample_saalschutz_triples(
    seed: u64,
    count: usize,
    n_max: usize,
) -> (Vec<(BigRational, BigRational, BigRational)>, usize) {
    let mut rng = exact_rng(seed, 1);
    let mut out = Vec::with_capacity(count);
    let mut rejected = 0;
    while out.len() < count {
        let a = random_rational(&mut rng);
        let b = random_rational(&mut rng);
        let c = random_rational(&mut rng);
        if !saalschutz_admissible(&a, &b, &c, n_max.max(1)) {
            rejected += 1;
            continue;
        }
        out.push((a, b, c));
    }
    (out, rejected)
}

fn check_exact_spec(spec: &ExactSpec) -> Result<()> {
    if spec.k_max > 60 || spec.n_max > 30 || spec.samples == 0 {
        return Err(domain(
            "run_exact_suite",
            format!(
                "requires k_max <= 60, n_max <= 30, samples >= 1; got {}, {}, {}",
                spec.k_max, spec.n_max, spec.samples
            ),
        ));
    }
    Ok(())
}

/// Exact Pochhammer-identity checks for explicit (a, b) pairs, every k ≤ k_max.
pub fn pochhammer_report(pairs: &[(BigRational, BigRational)], k_max: usize) -> Result<IdentityReport> {
    let entries = evaluate(pairs, |(a, b)| {
        let checks = check_pochhammer_identity_upto(a, b, k_max)?;
        Ok(checks
            .iter()
            .enumerate()
            .map(|(k, c)| {
                Entry::exact(
                    vec![ParamValue::rational(a), ParamValue::rational(b), (k as f64).into()],
                    c,
                )
            })
            .collect())
    })?;
    Ok(IdentityReport::new(
        IdentityId::PochhammerExact,
        &["a", "b", "k"],
        entries,
    ))
}

/// Exact Saalschütz checks for explicit (a, b, c) triples, every n ≤ n_max.
pub fn saalschutz_report(triples: &[(BigRational, BigRational, BigRational)], n_max: usize) -> Result<IdentityReport> {
    let entries = evaluate(triples, |(a, b, c)| {
        (0..=n_max)
            .map(|n| {
                let check = check_saalschutz(a, b, c, n)?;
                Ok(Entry::exact(
                    vec![
                        ParamValue::rational(a),
                        ParamValue::rational(b),
                        ParamValue::rational(c),
                        (n as f64).into(),
                    ],
                    &check,
                ))
            })
            .collect()
    })?;
    Ok(IdentityReport::new(
        IdentityId::Saalschutz,
        &["a", "b", "c", "n"],
        entries,
    ))
}

pub fn run_pochhammer_exact(spec: &ExactSpec) -> Result<IdentityReport> {
    check_exact_spec(spec)?;
    let (pairs, rejected) = sample_rational_pairs(spec.seed, spec.samples, spec.k_max);
    let mut report = pochhammer_report(&pairs, spec.k_max)?;
    report.rejected_draws = Some(rejected);
    Ok(report)
}

pub fn run_saalschutz(spec: &ExactSpec) -> Result<IdentityReport> {
    check_exact_spec(spec)?;
    let (triples, rejected) = sample_saalschutz_triples(spec.seed, spec.samples, spec.n_max);
    let mut report = saalschutz_report(&triples, spec.n_max)?;
    report.rejected_draws = Some(rejected);
    Ok(report)
}

/// Both exact suites: the Pochhammer identity over seeded (a, b) for every
/// k ≤ k_max, and Saalschütz's sum over seeded (a, b, c) for every n ≤ n_max.
pub fn run_exact_suite(seed: u64, k_max: usize, n_max: usize, samples: usize) -> Result<[IdentityReport; 2]> {
    let spec = ExactSpec {
        seed,
        k_max,
        n_max,
        samples,
    };
    Ok([run_pochhammer_exact(&spec)?, run_saalschutz(&spec)?])
}

/// Order-by-order z^k coefficient comparison of the confluent summation
/// formula for `pairs` seeded rational (a, b). Returns (coefficients checked, mismatches).
pub fn run_series_coefficient_check(seed: u64, pairs: usize, k_max: usize) -> Result<(usize, usize)> {
    let (pairs, _) = sample_rational_pairs(seed, pairs, k_max);
    let results: Vec<Result<Vec<bool>>> = pairs
        .par_iter()
        .map(|(a, b)| {
            Ok(check_series_coefficients(a, b, k_max)?
                .iter()
                .map(|c| c.equal)
                .collect())
        })
        .collect();
    let mut total = 0;
    let mut bad = 0;
    for r in results {
        for eq in r? {
            total += 1;
            bad += usize::from(!eq);
        }
    }
    Ok((total, bad))
}

/// Grids and sampling settings for a full run; `Default` is the acceptance configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub grids: BTreeMap<IdentityId, GridSpec>,
    pub exact: ExactSpec,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        let grids = IdentityId::ALL
            .into_iter()
            .filter_map(|id| GridSpec::default_for(id).map(|g| (id, g)))
            .collect();
        SuiteConfig {
            grids,
            exact: ExactSpec::default(),
        }
    }
}

impl SuiteConfig {
    pub fn grid(&self, id: IdentityId) -> Result<&GridSpec> {
        self.grids
            .get(&id)
            .ok_or_else(|| domain("SuiteConfig", format!("no grid configured for {id}")))
    }

    /// Apply one tolerance to every numeric verifier.
    pub fn set_tolerance(&mut self, tolerance: f64) {
        for g in self.grids.values_mut() {
            g.set_tolerance(tolerance);
        }
    }
}

pub fn run_identity(id: IdentityId, config: &SuiteConfig) -> Result<IdentityReport> {
    match id {
        IdentityId::IntegralRepr => verify_integral_repr(config.grid(id)?),
        IdentityId::SumFormula => verify_sum_formula(config.grid(id)?),
        IdentityId::BesselSum => verify_bessel_sum(config.grid(id)?),
        IdentityId::SinExpansion => verify_sin_expansion(config.grid(id)?),
        IdentityId::KummerBessel => verify_kummer_bessel_relation(config.grid(id)?),
        IdentityId::GammaIdentities => verify_gamma_identities(config.grid(id)?),
        IdentityId::MellinBarnes => verify_mellin_barnes(config.grid(id)?),
        IdentityId::PochhammerExact => run_pochhammer_exact(&config.exact),
        IdentityId::Saalschutz => run_saalschutz(&config.exact),
        IdentityId::OdeResidual => run_ode_residual_suite(config.grid(id)?),
    }
}

/// Every identity, in [`IdentityId::ALL`] order.
pub fn run_suite(config: &SuiteConfig) -> Result<Vec<IdentityReport>> {
    IdentityId::ALL.into_iter().map(|id| run_identity(id, config)).collect()
}
