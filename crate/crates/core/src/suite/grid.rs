use super::IdentityId;
use crate::error::{Error, Result};
use crate::quadrature::ContourSpec;
use crate::series::SeriesControl;
use crate::ComplexValue;
use std::f64::consts::PI;

/// Values along one grid parameter.
#[derive(Clone, Debug, PartialEq)]
pub enum Axis {
    Values(Vec<ComplexValue>),
    /// `count` evenly spaced reals from `start` to `stop` inclusive.
    Range {
        start: f64,
        stop: f64,
        count: usize,
    },
}

impl Axis {
    pub fn reals(values: &[f64]) -> Self {
        Axis::Values(values.iter().map(|&x| ComplexValue::new(x, 0.0)).collect())
    }

    pub fn values(&self) -> Vec<ComplexValue> {
        match *self {
            Axis::Values(ref v) => v.clone(),
            Axis::Range { start, stop, count } => {
                if count == 1 {
                    return vec![ComplexValue::new(start, 0.0)];
                }
                let step = (stop - start) / (count - 1) as f64;
                (0..count)
                    .map(|i| ComplexValue::new(if i + 1 == count { stop } else { start + step * i as f64 }, 0.0))
                    .collect()
            }
        }
    }

    fn check(&self, name: &str) -> Option<String> {
        match *self {
            Axis::Values(ref v) if v.is_empty() => Some(format!("axis {name} is empty")),
            Axis::Values(ref v) if v.iter().any(|z| !(z.re.is_finite() && z.im.is_finite())) => {
                Some(format!("axis {name} has a non-finite value"))
            }
            Axis::Range { count: 0, .. } => Some(format!("axis {name} has count 0")),
            Axis::Range { start, stop, .. } if !(start <= stop) => {
                Some(format!("axis {name} has start {start} > stop {stop}"))
            }
            _ => None,
        }
    }
}

/// Parameter grid and numerical settings for one verifier.
#[derive(Clone, Debug, PartialEq)]
pub struct GridSpec {
    /// Named axes; verifiers take their cartesian product in this order
    /// (the gamma verifier reads each axis as its own list).
    pub axes: Vec<(String, Axis)>,
    /// Explicit extra points, e.g. the complex (a, b, z) sub-grid.
    pub extra_points: Vec<Vec<ComplexValue>>,
    pub tolerance: f64,
    /// Tolerance for `extra_points` when different from `tolerance`.
    pub extra_tolerance: Option<f64>,
    /// Bound on |rhs₊ - rhs₋| / |rhs₊| in the Kummer–Bessel verifier.
    pub agreement_tolerance: f64,
    pub quad_order: usize,
    pub contour: ContourSpec,
    pub series: SeriesControl,
    /// Partial-sum length for the sine expansion.
    pub terms: usize,
}

impl GridSpec {
    pub fn new(tolerance: f64) -> Self {
        GridSpec {
            axes: Vec::new(),
            extra_points: Vec::new(),
            tolerance,
            extra_tolerance: None,
            agreement_tolerance: 1e-12,
            quad_order: 128,
            contour: ContourSpec::default(),
            series: SeriesControl::default(),
            terms: 60,
        }
    }

    pub fn with_axis(mut self, name: &str, axis: Axis) -> Self {
        self.set_axis(name, axis);
        self
    }

    pub fn set_axis(&mut self, name: &str, axis: Axis) {
        match self.axes.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = axis,
            None => self.axes.push((name.to_string(), axis)),
        }
    }

    /// Override every tolerance that decides pass/fail.
    pub fn set_tolerance(&mut self, tolerance: f64) {
        self.tolerance = tolerance;
        if self.extra_tolerance.is_some() {
            self.extra_tolerance = Some(tolerance);
        }
    }

    pub fn values(&self, name: &str) -> Result<Vec<ComplexValue>> {
        self.axes
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, a)| a.values())
            .ok_or_else(|| Error::GridValidation(vec![format!("missing axis {name}")]))
    }

    /// Cartesian product of the named axes, first axis varying slowest.
    pub fn product(&self, names: &[&str]) -> Result<Vec<Vec<ComplexValue>>> {
        let mut points: Vec<Vec<ComplexValue>> = vec![Vec::new()];
        for name in names {
            let vals = self.values(name)?;
            points = points
                .into_iter()
                .flat_map(|p| {
                    vals.iter().map(move |v| {
                        let mut q = p.clone();
                        q.push(*v);
                        q
                    })
                })
                .collect();
        }
        Ok(points)
    }

    pub fn validate(&self) -> Result<()> {
        let mut problems: Vec<String> = self.axes.iter().filter_map(|(n, a)| a.check(n)).collect();
        for t in [
            Some(self.tolerance),
            self.extra_tolerance,
            Some(self.agreement_tolerance),
        ]
        .into_iter()
        .flatten()
        {
            if !(t > 0.0 && t.is_finite()) {
                problems.push(format!("tolerance must be positive, got {t}"));
            }
        }
        if let Err(e) = self.series.validate() {
            problems.push(e.to_string());
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::GridValidation(problems))
        }
    }

    /// Axis names a verifier reads.
    pub fn axis_names(id: IdentityId) -> &'static [&'static str] {
        match id {
            IdentityId::IntegralRepr | IdentityId::OdeResidual => &["kappa", "mu", "z"],
            IdentityId::SumFormula => &["a", "b", "z"],
            IdentityId::BesselSum | IdentityId::KummerBessel | IdentityId::MellinBarnes => &["nu", "z"],
            IdentityId::SinExpansion => &["z"],
            IdentityId::GammaIdentities => &["beta_x", "beta_y", "duplication", "reflection"],
            IdentityId::PochhammerExact | IdentityId::Saalschutz => &[],
        }
    }

    /// The grid the acceptance run uses; `None` for the exact identities,
    /// which are driven by [`ExactSpec`].
    pub fn default_for(id: IdentityId) -> Option<GridSpec> {
        let kappa_mu_z = |tol| {
            GridSpec::new(tol)
                .with_axis("kappa", Axis::reals(&[-0.3, 0.0, 0.25, 0.49]))
                .with_axis("mu", Axis::reals(&[0.01, 0.5, 1.5, 2.25]))
                .with_axis("z", Axis::reals(&[0.1, 1.0, 5.0, 10.0, 20.0]))
        };
        let nu_z = |tol| {
            GridSpec::new(tol)
                .with_axis("nu", Axis::reals(&[0.0, 0.5, 1.5, 3.0]))
                .with_axis("z", Axis::reals(&[0.1, 1.0, 5.0, 10.0, 20.0]))
        };
        let c = ComplexValue::new;
        Some(match id {
            IdentityId::IntegralRepr => kappa_mu_z(1e-10),
            IdentityId::OdeResidual => kappa_mu_z(1e-9),
            IdentityId::SumFormula => {
                let mut g = GridSpec::new(1e-10)
                    .with_axis("a", Axis::reals(&[-0.7, 0.25, 0.5, 1.2]))
                    .with_axis("b", Axis::reals(&[0.75, 1.25, 2.5]))
                    .with_axis("z", Axis::reals(&[-6.0, 1.0, 5.0]));
                g.extra_points = vec![
                    vec![c(0.3, 0.2), c(1.1, -0.4), c(1.0, 1.0)],
                    vec![c(0.3, 0.2), c(1.1, -0.4), c(-2.0, 0.5)],
                    vec![c(-0.4, 1.0), c(0.8, 0.3), c(0.5, -1.5)],
                    vec![c(1.5, -0.5), c(2.2, 0.7), c(3.0, 2.0)],
                    vec![c(0.25, 0.0), c(1.25, 0.0), c(0.0, 4.0)],
                    vec![c(0.7, -0.3), c(1.9, 1.1), c(-6.5, 1.0)],
                    vec![c(-1.3, 0.6), c(0.6, -0.9), c(2.5, -0.5)],
                    vec![c(0.9, 0.9), c(3.1, -1.2), c(-1.0, -3.0)],
                ];
                g.extra_tolerance = Some(1e-9);
                g
            }
            IdentityId::BesselSum => nu_z(1e-10),
            IdentityId::KummerBessel => nu_z(1e-10),
            IdentityId::SinExpansion => {
                GridSpec::new(1e-9).with_axis("z", Axis::reals(&[0.5, 1.0, PI, 5.0, 10.0, 15.0]))
            }
            IdentityId::GammaIdentities => {
                let mut g = GridSpec::new(1e-11)
                    .with_axis("beta_x", Axis::reals(&[2.0, 0.5, 1.5, 0.3, 4.5, 1.0]))
                    .with_axis("beta_y", Axis::reals(&[3.0, 0.5, 0.75, 2.2, 1.25, 1.0]))
                    .with_axis("duplication", Axis::reals(&[0.25, 0.5, 1.3, 4.75, 9.5]))
                    .with_axis(
                        "reflection",
                        Axis::Range {
                            start: 0.01,
                            stop: 0.99,
                            count: 50,
                        },
                    );
                g.quad_order = 16;
                g
            }
            IdentityId::MellinBarnes => GridSpec::new(1e-5)
                .with_axis("nu", Axis::reals(&[2.0, 3.0, 5.0]))
                .with_axis("z", Axis::reals(&[0.5, 2.0, 5.0])),
            IdentityId::PochhammerExact | IdentityId::Saalschutz => return None,
        })
    }
}

/// Sampling settings for the exact-rational suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactSpec {
    pub seed: u64,
    pub k_max: usize,
    pub n_max: usize,
    pub samples: usize,
}

impl Default for ExactSpec {
    fn default() -> Self {
        ExactSpec {
            seed: 42,
            k_max: 40,
            n_max: 20,
            samples: 200,
        }
    }
}
