use super::IdentityId;
use crate::exact::{format_rational, to_f64, BigRational, ExactCheck};
use crate::ComplexValue;
use serde::{Deserialize, Serialize};

/// JSON numbers in scientific notation with 17 significant digits.
pub mod sci17 {
    use serde::de::Deserializer;
    use serde::ser::{Error, Serializer};
    use serde::{Deserialize, Serialize};
    use serde_json::value::RawValue;

    pub fn format(x: f64) -> String {
        format!("{x:.16e}")
    }

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        if !x.is_finite() {
            return s.serialize_none();
        }
        RawValue::from_string(format(*x))
            .map_err(S::Error::custom)?
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }

    pub mod complex {
        use super::*;
        use num_complex::Complex64;

        #[derive(Serialize, Deserialize)]
        struct Parts {
            #[serde(with = "super")]
            re: f64,
            #[serde(with = "super")]
            im: f64,
        }

        pub fn serialize<S: Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
            Parts { re: z.re, im: z.im }.serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
            let p = Parts::deserialize(d)?;
            Ok(Complex64::new(p.re, p.im))
        }
    }
}

/// One grid coordinate as it appears in a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Absent,
    Real(#[serde(with = "sci17")] f64),
    Complex(#[serde(with = "sci17::complex")] ComplexValue),
    Text(String),
}

impl ParamValue {
    pub fn from_complex(z: ComplexValue) -> Self {
        if z.im == 0.0 {
            ParamValue::Real(z.re)
        } else {
            ParamValue::Complex(z)
        }
    }

    pub fn rational(r: &BigRational) -> Self {
        ParamValue::Text(format_rational(r))
    }

    /// Compact text form used by the text and CSV writers.
    pub fn render(&self) -> String {
        match self {
            ParamValue::Absent => String::new(),
            ParamValue::Real(x) => sci17::format(*x),
            ParamValue::Complex(z) => {
                let sign = if z.im.is_sign_negative() { '-' } else { '+' };
                format!("{}{}{}i", sci17::format(z.re), sign, sci17::format(z.im.abs()))
            }
            ParamValue::Text(s) => s.clone(),
        }
    }
}

impl From<f64> for ParamValue {
    fn from(x: f64) -> Self {
        ParamValue::Real(x)
    }
}

impl From<&str> for ParamValue {
    fn from(s: &str) -> Self {
        ParamValue::Text(s.to_string())
    }
}

/// Error metric: relative, switching to absolute where |lhs| < tolerance.
pub fn classify(lhs: ComplexValue, rhs: ComplexValue, tolerance: f64) -> (f64, f64, bool) {
    let abs_err = (lhs - rhs).norm();
    let mag = lhs.norm();
    let rel_err = if mag < tolerance { abs_err } else { abs_err / mag };
    (abs_err, rel_err, rel_err <= tolerance)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub params: Vec<ParamValue>,
    #[serde(with = "sci17::complex")]
    pub lhs: ComplexValue,
    #[serde(with = "sci17::complex")]
    pub rhs: ComplexValue,
    #[serde(with = "sci17")]
    pub abs_err: f64,
    #[serde(with = "sci17")]
    pub rel_err: f64,
    #[serde(with = "sci17")]
    pub tolerance: f64,
    pub pass: bool,
}

impl Entry {
    pub fn numeric(params: Vec<ParamValue>, lhs: ComplexValue, rhs: ComplexValue, tolerance: f64) -> Self {
        let (abs_err, rel_err, pass) = classify(lhs, rhs, tolerance);
        Entry {
            params,
            lhs,
            rhs,
            abs_err,
            rel_err,
            tolerance,
            pass,
        }
    }

    /// Exact comparison: rel_err is 0 when both sides are equal, 1 otherwise.
    pub fn exact(params: Vec<ParamValue>, check: &ExactCheck) -> Self {
        let lhs = ComplexValue::new(to_f64(&check.lhs), 0.0);
        let rhs = ComplexValue::new(to_f64(&check.rhs), 0.0);
        Entry {
            params,
            lhs,
            rhs,
            abs_err: (lhs - rhs).norm(),
            rel_err: if check.equal { 0.0 } else { 1.0 },
            tolerance: 0.0,
            pass: check.equal,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    #[serde(with = "sci17")]
    pub max_rel_err: f64,
    pub max_rel_err_params: Vec<ParamValue>,
}

impl Summary {
    fn of(entries: &[Entry]) -> Self {
        let mut worst: Option<&Entry> = None;
        for e in entries {
            if worst.is_none_or(|w| e.rel_err > w.rel_err || (e.rel_err.is_nan() && !w.rel_err.is_nan())) {
                worst = Some(e);
            }
        }
        Summary {
            total: entries.len(),
            passed: entries.iter().filter(|e| e.pass).count(),
            max_rel_err: worst.map_or(0.0, |w| w.rel_err),
            max_rel_err_params: worst.map_or_else(Vec::new, |w| w.params.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params_schema: Vec<String>,
    pub entries: Vec<Entry>,
    pub summary: Summary,
    /// Rejected parameter draws (exact suites only).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rejected_draws: Option<usize>,
}

impl IdentityReport {
    pub fn new(id: IdentityId, params_schema: &[&str], entries: Vec<Entry>) -> Self {
        let summary = Summary::of(&entries);
        IdentityReport {
            id,
            params_schema: params_schema.iter().map(|s| s.to_string()).collect(),
            entries,
            summary,
            rejected_draws: None,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.passed == self.summary.total
    }

    /// Re-apply a tolerance to the stored errors. Exact reports are unchanged.
    pub fn rethreshold(&mut self, tolerance: f64) {
        if self.id.is_exact() {
            return;
        }
        for e in &mut self.entries {
            let mag = e.lhs.norm();
            e.rel_err = if mag < tolerance { e.abs_err } else { e.abs_err / mag };
            e.tolerance = tolerance;
            e.pass = e.rel_err <= tolerance;
        }
        self.summary = Summary::of(&self.entries);
    }
}
