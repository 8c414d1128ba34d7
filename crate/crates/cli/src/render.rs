use crate::scalar::{fmt_complex, fmt_real};
use confluent_core::suite::{sci17, IdentityReport, ParamValue};
use serde::{Deserialize, Serialize};
use std::fmt::Write;

pub const CSV_HEADER: [&str; 10] = [
    "identity",
    "param_names",
    "param_values",
    "lhs_re",
    "lhs_im",
    "rhs_re",
    "rhs_im",
    "abs_err",
    "rel_err",
    "pass",
];

/// Top-level JSON report.
#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub version: String,
    pub identities: Vec<IdentityReport>,
}

impl Document {
    pub fn new(identities: Vec<IdentityReport>) -> Self {
        Document {
            version: env!("CARGO_PKG_VERSION").to_string(),
            identities,
        }
    }
}

pub fn json(doc: &Document) -> Result<String, String> {
    serde_json::to_string_pretty(doc)
        .map(|s| s + "\n")
        .map_err(|e| e.to_string())
}

pub fn csv(reports: &[IdentityReport]) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| e.to_string();
    w.write_record(CSV_HEADER).map_err(err)?;
    for r in reports {
        let names = r.params_schema.join(";");
        for e in &r.entries {
            let values: Vec<String> = e.params.iter().map(ParamValue::render).collect();
            w.write_record([
                r.id.name().to_string(),
                names.clone(),
                values.join(";"),
                sci17::format(e.lhs.re),
                sci17::format(e.lhs.im),
                sci17::format(e.rhs.re),
                sci17::format(e.rhs.im),
                sci17::format(e.abs_err),
                sci17::format(e.rel_err),
                e.pass.to_string(),
            ])
            .map_err(err)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

fn short(p: &ParamValue) -> String {
    match p {
        ParamValue::Absent => "-".to_string(),
        ParamValue::Real(x) => fmt_real(*x),
        ParamValue::Complex(z) => fmt_complex(*z),
        ParamValue::Text(s) => s.clone(),
    }
}

fn labelled(schema: &[String], params: &[ParamValue]) -> String {
    schema
        .iter()
        .zip(params)
        .filter(|(_, p)| **p != ParamValue::Absent)
        .map(|(n, p)| format!("{n}={}", short(p)))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn summary_line(r: &IdentityReport) -> String {
    let s = &r.summary;
    let mut line = format!(
        "{:<17} {}  {}/{}  max_rel_err {:.3e}",
        r.id.name(),
        if r.all_passed() { "PASS" } else { "FAIL" },
        s.passed,
        s.total,
        s.max_rel_err,
    );
    if !s.max_rel_err_params.is_empty() {
        let _ = write!(line, " at {}", labelled(&r.params_schema, &s.max_rel_err_params));
    }
    if let Some(n) = r.rejected_draws {
        let _ = write!(line, "  rejected_draws {n}");
    }
    line
}

pub fn text(reports: &[IdentityReport], with_entries: bool) -> String {
    let mut out = String::new();
    for r in reports {
        if with_entries {
            let _ = writeln!(out, "{}: {}", r.id.name(), r.id.formula());
            for e in &r.entries {
                let _ = writeln!(
                    out,
                    "  {:<4} {}  lhs {}  rhs {}  rel_err {:.3e}",
                    if e.pass { "ok" } else { "FAIL" },
                    labelled(&r.params_schema, &e.params),
                    fmt_complex(e.lhs),
                    fmt_complex(e.rhs),
                    e.rel_err,
                );
            }
        }
        let _ = writeln!(out, "{}", summary_line(r));
    }
    out
}
