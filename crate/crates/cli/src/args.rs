use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "confluent",
    version,
    about = "Evaluate and verify confluent hypergeometric identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: Options,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate a single function.
    Eval {
        function: Function,
        /// Arguments; complex values are written re+imi.
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Run one identity verifier.
    Verify { identity: String },
    /// Run every identity verifier on its default grid.
    Suite,
    /// Print a Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta.
    Rule {
        #[arg(allow_hyphen_values = true)]
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        beta: String,
        order: usize,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct Options {
    /// Pass tolerance for verify/suite, series tolerance for eval.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub tol: Option<f64>,
    /// Series term cap.
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,
    /// Gauss-Jacobi order for the integral representations.
    #[arg(long, global = true)]
    pub quad_order: Option<usize>,
    /// Real part of the Mellin-Barnes contour.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub contour_c: Option<f64>,
    /// Half-height of the truncated contour.
    #[arg(long = "contour-Y", global = true, allow_hyphen_values = true)]
    pub contour_y: Option<f64>,
    /// Trapezoid step along the contour.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub contour_h: Option<f64>,
    /// Seed for the exact-rational samplers.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Number of sampled parameter sets for the exact-rational checks.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    /// Grid override, either key=v1,v2,... or key=start:stop:count.
    #[arg(long = "grid", global = true, value_name = "KEY=VALUES", allow_hyphen_values = true)]
    pub grid: Vec<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Function {
    Besselj,
    Kummerm,
    Whittakerm,
    Gamma,
    Loggamma,
    Beta,
    Pochhammer,
    Sumformula,
    Besselsum,
    Sinexp,
    Integralrepr,
    Kummerintegral,
    Mellinbarnes,
    Oderesidual,
}

impl Function {
    pub fn arg_names(self) -> &'static [&'static str] {
        match self {
            Function::Besselj => &["nu", "z"],
            Function::Kummerm | Function::Sumformula => &["a", "b", "z"],
            Function::Whittakerm | Function::Integralrepr | Function::Oderesidual => &["kappa", "mu", "z"],
            Function::Gamma | Function::Loggamma => &["x"],
            Function::Beta => &["x", "y"],
            Function::Pochhammer => &["x", "n"],
            Function::Besselsum | Function::Mellinbarnes => &["nu", "z"],
            Function::Sinexp => &["z", "terms"],
            Function::Kummerintegral => &["a", "b", "z"],
        }
    }
}
