//! Library side of the `confluent` binary. [`run`] parses arguments, executes
//! one command and returns the exit code with the captured output.

pub mod args;
pub mod render;
pub mod scalar;

use args::{Cli, Command, Format, Function, Options};
use clap::Parser;
use confluent_core::gamma::{beta, gamma, log_gamma, pochhammer};
use confluent_core::quadrature::{
    gauss_jacobi_rule, integral_repr_rhs, kummer_integral_repr, mellin_barnes_bessel, whittaker_ode_residual,
};
use confluent_core::series::{bessel_j, bessel_sum_rhs, kummer_m, sin_expansion_partial, sum_formula_rhs, whittaker_m};
use confluent_core::suite::{run_identity, sci17, Axis, SuiteConfig};
use confluent_core::{ComplexValue, ContourSpec, IdentityId, SeriesControl, SeriesEval};
use render::Document;
use scalar::{fmt_complex, fmt_real, parse_complex, parse_count, parse_real};
use serde::Serialize;
use std::ffi::OsString;
use std::fmt::Write;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const DEFAULT_QUAD_ORDER: usize = 128;
pub const DEFAULT_SIN_TERMS: usize = 60;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

struct Produced {
    code: i32,
    body: String,
    note: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(hoist_flags(args.into_iter().map(Into::into).collect())) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_PASS,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let produced = match execute(&cli) {
        Ok(p) => p,
        Err(msg) => return Outcome::usage(msg),
    };
    let stdout = match cli.opts.out {
        Some(ref path) => {
            if let Err(e) = std::fs::write(path, &produced.body) {
                return Outcome::usage(format!("cannot write {}: {e}", path.display()));
            }
            String::new()
        }
        None => produced.body,
    };
    Outcome {
        code: produced.code,
        stdout,
        stderr: produced.note,
    }
}

/// Move flags, with their values, directly behind the subcommand.
fn hoist_flags(argv: Vec<OsString>) -> Vec<OsString> {
    const BARE: [&str; 4] = ["--help", "--version", "-h", "-V"];
    let mut it = argv.into_iter();
    let mut flags: Vec<OsString> = it.next().into_iter().collect();
    let mut rest = Vec::new();
    while let Some(arg) = it.next() {
        let text = arg.to_string_lossy().into_owned();
        if text == "--" {
            rest.push(arg);
            rest.extend(it.by_ref());
            break;
        }
        if BARE.contains(&text.as_str()) {
            flags.push(arg);
        } else if text.starts_with("--") {
            flags.push(arg);
            if !text.contains('=') {
                flags.extend(it.next());
            }
        } else {
            rest.push(arg);
        }
    }
    let mut rest = rest.into_iter();
    let mut out: Vec<OsString> = flags.drain(..1).collect();
    out.extend(rest.next());
    out.extend(flags);
    out.extend(rest);
    out
}

fn execute(cli: &Cli) -> Result<Produced, String> {
    let opts = &cli.opts;
    if let Some(tol) = opts.tol {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(format!("--tol must be positive, got {tol}"));
        }
    }
    match cli.command {
        Command::Eval { function, ref params } => eval(function, params, opts),
        Command::Verify { ref identity } => {
            let id: IdentityId = identity.parse().map_err(|e: confluent_core::Error| e.to_string())?;
            verify(&[id], opts, true)
        }
        Command::Suite => verify(&IdentityId::ALL, opts, false),
        Command::Rule {
            ref alpha,
            ref beta,
            order,
        } => rule(parse_real(alpha)?, parse_real(beta)?, order, opts.format),
    }
}

fn series_control(opts: &Options) -> Result<SeriesControl, String> {
    let d = SeriesControl::default();
    let ctl = SeriesControl {
        rel_tol: opts.tol.unwrap_or(d.rel_tol),
        max_terms: opts.max_terms.unwrap_or(d.max_terms),
        ..d
    };
    ctl.validate().map_err(|e| e.to_string())?;
    Ok(ctl)
}

fn contour(opts: &Options) -> ContourSpec {
    let d = ContourSpec::default();
    ContourSpec {
        real_shift: opts.contour_c.unwrap_or(d.real_shift),
        half_height: opts.contour_y.unwrap_or(d.half_height),
        step: opts.contour_h.unwrap_or(d.step),
    }
}

#[derive(Serialize)]
struct EvalOut {
    version: &'static str,
    function: Function,
    params: Vec<String>,
    #[serde(with = "sci17::complex")]
    value: ComplexValue,
    #[serde(skip_serializing_if = "Option::is_none")]
    terms_used: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tail_estimate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    converged: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    imag_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    truncation_warning: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes: Option<usize>,
}

impl EvalOut {
    fn real(function: Function, params: &[String], x: f64) -> Self {
        EvalOut {
            version: env!("CARGO_PKG_VERSION"),
            function,
            params: params.to_vec(),
            value: ComplexValue::new(x, 0.0),
            terms_used: None,
            tail_estimate: None,
            converged: None,
            imag_residual: None,
            truncation_warning: None,
            nodes: None,
        }
    }

    fn series(function: Function, params: &[String], s: SeriesEval) -> Self {
        EvalOut {
            value: s.value,
            terms_used: Some(s.terms_used),
            tail_estimate: Some(s.tail_estimate),
            converged: Some(s.converged),
            ..EvalOut::real(function, params, 0.0)
        }
    }
}

fn eval(function: Function, params: &[String], opts: &Options) -> Result<Produced, String> {
    use Function as F;
    let names = function.arg_names();
    let min = if function == F::Sinexp { 1 } else { names.len() };
    if params.len() < min || params.len() > names.len() {
        return Err(format!(
            "{} takes {} argument(s) ({}), got {}",
            clap::ValueEnum::to_possible_value(&function).map_or_else(String::new, |v| v.get_name().to_string()),
            names.len(),
            names.join(", "),
            params.len()
        ));
    }
    let c = |i: usize| parse_complex(&params[i]);
    let r = |i: usize| parse_real(&params[i]);
    let err = |e: confluent_core::Error| e.to_string();
    let order = opts.quad_order.unwrap_or(DEFAULT_QUAD_ORDER);
    let ctl = series_control(opts)?;
    let out = match function {
        F::Besselj => EvalOut::series(function, params, bessel_j(r(0)?, c(1)?, &ctl).map_err(err)?),
        F::Kummerm => EvalOut::series(function, params, kummer_m(c(0)?, c(1)?, c(2)?, &ctl).map_err(err)?),
        F::Whittakerm => EvalOut::series(function, params, whittaker_m(r(0)?, r(1)?, c(2)?, &ctl).map_err(err)?),
        F::Sumformula => EvalOut::series(
            function,
            params,
            sum_formula_rhs(c(0)?, c(1)?, c(2)?, &ctl).map_err(err)?,
        ),
        F::Besselsum => EvalOut::series(function, params, bessel_sum_rhs(r(0)?, r(1)?, &ctl).map_err(err)?),
        F::Gamma => EvalOut::real(function, params, gamma(r(0)?).map_err(err)?),
        F::Loggamma => EvalOut::real(function, params, log_gamma(r(0)?).map_err(err)?),
        F::Beta => EvalOut::real(function, params, beta(r(0)?, r(1)?).map_err(err)?),
        F::Pochhammer => EvalOut {
            value: pochhammer(c(0)?, parse_count(&params[1])?),
            ..EvalOut::real(function, params, 0.0)
        },
        F::Sinexp => {
            let terms = match params.get(1) {
                Some(t) => parse_count(t)?,
                None => DEFAULT_SIN_TERMS,
            };
            EvalOut::real(function, params, sin_expansion_partial(r(0)?, terms).map_err(err)?)
        }
        F::Integralrepr => EvalOut::real(
            function,
            params,
            integral_repr_rhs(r(0)?, r(1)?, r(2)?, order).map_err(err)?,
        ),
        F::Kummerintegral => EvalOut::real(
            function,
            params,
            kummer_integral_repr(r(0)?, r(1)?, r(2)?, order).map_err(err)?,
        ),
        F::Oderesidual => EvalOut::real(
            function,
            params,
            whittaker_ode_residual(r(0)?, r(1)?, r(2)?).map_err(err)?,
        ),
        F::Mellinbarnes => {
            let e = mellin_barnes_bessel(r(0)?, r(1)?, &contour(opts)).map_err(err)?;
            EvalOut {
                imag_residual: Some(e.imag_residual),
                truncation_warning: Some(e.truncation_warning),
                nodes: Some(e.nodes),
                ..EvalOut::real(function, params, e.value)
            }
        }
    };
    if !(out.value.re.is_finite() && out.value.im.is_finite()) {
        return Err(format!("result is not finite: {}", fmt_complex(out.value)));
    }
    let body = match opts.format {
        Format::Text => {
            let mut s = format!("value {}\n", fmt_complex(out.value));
            if let Some(n) = out.terms_used {
                let _ = writeln!(s, "terms_used {n}");
            }
            if let Some(t) = out.tail_estimate {
                let _ = writeln!(s, "tail_estimate {}", fmt_real(t));
            }
            if out.converged == Some(false) {
                let _ = writeln!(s, "converged false");
            }
            if let Some(t) = out.imag_residual {
                let _ = writeln!(s, "imag_residual {}", fmt_real(t));
            }
            if let Some(w) = out.truncation_warning {
                let _ = writeln!(s, "truncation_warning {w}");
            }
            if let Some(n) = out.nodes {
                let _ = writeln!(s, "nodes {n}");
            }
            s
        }
        Format::Json => serde_json::to_string_pretty(&out).map_err(|e| e.to_string())? + "\n",
        Format::Csv => {
            let opt = |x: Option<String>| x.unwrap_or_default();
            let mut w = csv::Writer::from_writer(Vec::new());
            let rows = [
                [
                    "function",
                    "params",
                    "value_re",
                    "value_im",
                    "terms_used",
                    "tail_estimate",
                ]
                .map(String::from),
                [
                    format!("{function:?}").to_lowercase(),
                    params.join(";"),
                    sci17::format(out.value.re),
                    sci17::format(out.value.im),
                    opt(out.terms_used.map(|n| n.to_string())),
                    opt(out.tail_estimate.map(sci17::format)),
                ],
            ];
            for row in rows {
                w.write_record(row).map_err(|e| e.to_string())?;
            }
            String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())?
        }
    };
    Ok(Produced {
        code: EXIT_PASS,
        body,
        note: String::new(),
    })
}

fn parse_axis(values: &str) -> Result<Axis, String> {
    let parts: Vec<&str> = values.split(':').collect();
    if let [start, stop, count] = parts[..] {
        return Ok(Axis::Range {
            start: parse_real(start)?,
            stop: parse_real(stop)?,
            count: parse_count(count)?,
        });
    }
    values
        .split(',')
        .map(parse_complex)
        .collect::<Result<Vec<_>, _>>()
        .map(Axis::Values)
}

/// Build the suite configuration for `ids` from the command-line options.
pub fn suite_config(ids: &[IdentityId], opts: &Options) -> Result<SuiteConfig, String> {
    let mut cfg = SuiteConfig::default();
    if let Some(seed) = opts.seed {
        cfg.exact.seed = seed;
    }
    if let Some(samples) = opts.samples {
        cfg.exact.samples = samples;
    }
    for (id, g) in cfg.grids.iter_mut() {
        if !ids.contains(id) {
            continue;
        }
        if let Some(tol) = opts.tol {
            g.set_tolerance(tol);
        }
        if let Some(n) = opts.max_terms {
            g.series.max_terms = n;
        }
        if let Some(n) = opts.quad_order {
            g.quad_order = n;
        }
        if *id == IdentityId::MellinBarnes {
            g.contour = contour(opts);
        }
    }
    for spec in &opts.grid {
        let (key, values) = spec
            .split_once('=')
            .ok_or_else(|| format!("--grid expects key=values, got {spec:?}"))?;
        let key = key.trim();
        let axis = parse_axis(values).map_err(|e| format!("--grid {key}: {e}"))?;
        let mut used = false;
        for (id, g) in cfg.grids.iter_mut() {
            if ids.contains(id) && confluent_core::GridSpec::axis_names(*id).contains(&key) {
                g.set_axis(key, axis.clone());
                used = true;
            }
        }
        if !used {
            return Err(format!("--grid {key}: no selected identity has an axis named {key:?}"));
        }
    }
    Ok(cfg)
}

fn verify(ids: &[IdentityId], opts: &Options, with_entries: bool) -> Result<Produced, String> {
    let cfg = suite_config(ids, opts)?;
    let reports = ids
        .iter()
        .map(|&id| run_identity(id, &cfg))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let failed: Vec<&str> = reports
        .iter()
        .filter(|r| !r.all_passed())
        .map(|r| r.id.name())
        .collect();
    let body = match opts.format {
        Format::Text => render::text(&reports, with_entries),
        Format::Json => render::json(&Document::new(reports))?,
        Format::Csv => render::csv(&reports)?,
    };
    let (code, note) = if failed.is_empty() {
        (EXIT_PASS, String::new())
    } else {
        (
            EXIT_FAILURE,
            format!(
                "{} of {} identities failed: {}\n",
                failed.len(),
                ids.len(),
                failed.join(", ")
            ),
        )
    };
    Ok(Produced { code, body, note })
}

#[derive(Serialize)]
struct Sci(#[serde(with = "sci17")] f64);

#[derive(Serialize)]
struct RuleOut {
    #[serde(with = "sci17")]
    alpha: f64,
    #[serde(with = "sci17")]
    beta: f64,
    order: usize,
    nodes: Vec<Sci>,
    weights: Vec<Sci>,
    #[serde(with = "sci17")]
    weight_sum: f64,
}

fn rule(alpha: f64, beta: f64, order: usize, format: Format) -> Result<Produced, String> {
    let rule = gauss_jacobi_rule(alpha, beta, order).map_err(|e| e.to_string())?;
    let sum = rule.weight_sum();
    let body = match format {
        Format::Text => {
            let mut s = format!("# alpha {} beta {} order {}\n", fmt_real(alpha), fmt_real(beta), order);
            for (x, w) in rule.nodes.iter().zip(&rule.weights) {
                let _ = writeln!(s, "{:>24} {:>24}", sci17::format(*x), sci17::format(*w));
            }
            let _ = writeln!(s, "weight_sum {}", sci17::format(sum));
            s
        }
        Format::Json => {
            let out = RuleOut {
                alpha,
                beta,
                order,
                nodes: rule.nodes.iter().map(|&x| Sci(x)).collect(),
                weights: rule.weights.iter().map(|&w| Sci(w)).collect(),
                weight_sum: sum,
            };
            serde_json::to_string_pretty(&out).map_err(|e| e.to_string())? + "\n"
        }
        Format::Csv => {
            let mut s = String::from("node,weight\n");
            for (x, w) in rule.nodes.iter().zip(&rule.weights) {
                let _ = writeln!(s, "{},{}", sci17::format(*x), sci17::format(*w));
            }
            s
        }
    };
    Ok(Produced {
        code: EXIT_PASS,
        body,
        note: String::new(),
    })
}
