mod commands;
mod error;
mod input;
mod output;

use std::path::PathBuf;
use std::str::FromStr;

use clap::error::{ContextKind, ContextValue, ErrorKind};
use clap::{Args, Parser, Subcommand, ValueEnum};
use pseudoherm::sweep::Axis;
use pseudoherm::{Branch, CircleSign, Kind, Tolerances, C64};

use crate::error::CliError;
use crate::input::{parse_c64, parse_param};

#[derive(Parser, Debug)]
#[command(name = "pseudoherm", version, about = "Metric operators for 2x2 pseudo-Hermitian and anti-pseudo-Hermitian Hamiltonians")]
pub struct Cli {
    /// Absolute tolerance for equality tests
    #[arg(long, global = true)]
    pub tol_abs: Option<f64>,
    /// Relative tolerance for equality tests
    #[arg(long, global = true)]
    pub tol_rel: Option<f64>,
    /// Scale factor for the classifier's reality tests
    #[arg(long, global = true)]
    pub classify_scale: Option<f64>,
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    #[arg(long, global = true)]
    pub csv: bool,
    /// Read the Hamiltonian (or a metric record for `verify`) from a JSON file
    #[arg(long, global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Write the result here instead of standard output
    #[arg(long, short, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hermiticity kind, phase and admitted cases
    Classify(HArg),
    /// Construct the metric operator
    Metric {
        #[command(flatten)]
        h: HArg,
        #[command(flatten)]
        m: MetricFlags,
    },
    /// Residual of a given metric against a Hamiltonian
    Verify {
        #[command(flatten)]
        h: HArg,
        /// Metric as JSON; with --input the file's `eta` member is used
        #[arg(long)]
        eta: Option<String>,
        #[arg(long, value_parser = enum_arg::<Kind>)]
        kind: Option<Kind>,
    },
    /// C operator and involution constraints (Case 1 only)
    Involution {
        #[command(flatten)]
        h: HArg,
        #[command(flatten)]
        m: MetricFlags,
        /// Parity angle
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        phi_p: f64,
        /// Commuting operator B as JSON (default identity)
        #[arg(long)]
        b: Option<String>,
    },
    /// List catalog entries, or build one with its closed-form metrics
    Catalog {
        name: Option<String>,
        #[arg(long = "param", short = 'p', alias = "params", value_parser = parse_param, allow_hyphen_values = true)]
        params: Vec<(String, C64)>,
        /// Restrict the oracle to one case
        #[arg(long, value_parser = enum_arg::<pseudoherm::Case>)]
        case: Option<pseudoherm::Case>,
        #[command(flatten)]
        m: MetricFlags,
    },
    /// Evaluate a catalog entry over a parameter grid
    Sweep {
        entry: String,
        /// name=start:stop:points, repeatable; the first axis varies slowest
        #[arg(long, value_parser = enum_arg::<Axis>, allow_hyphen_values = true)]
        grid: Vec<Axis>,
        #[arg(long = "param", short = 'p', alias = "params", value_parser = parse_param, allow_hyphen_values = true)]
        params: Vec<(String, C64)>,
        /// Comma-separated subset of the observable columns
        #[arg(long, value_delimiter = ',')]
        observables: Vec<String>,
        #[command(flatten)]
        m: MetricFlags,
    },
    /// Evolve a state and track <psi(t)| eta B |psi(t)>
    Dynamics {
        #[command(flatten)]
        h: HArg,
        #[command(flatten)]
        m: MetricFlags,
        /// Metric as JSON (default: the metric built from the flags)
        #[arg(long)]
        eta: Option<String>,
        #[arg(long)]
        b: Option<String>,
        /// Two complex components
        #[arg(long, num_args = 2, value_parser = parse_c64, allow_hyphen_values = true, default_values = ["1,0", "0,0"])]
        psi0: Vec<C64>,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        t0: f64,
        #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
        t1: f64,
        #[arg(long, default_value_t = 101)]
        steps: usize,
    },
    /// Build and verify the two-mode Lee-Wick system
    LeeWick {
        #[arg(long, value_parser = parse_c64, allow_hyphen_values = true, default_value = "1,-0.5")]
        omega: C64,
        #[arg(long, value_enum, default_value_t = VariantArg::Anticommuting)]
        variant: VariantArg,
    },
}

#[derive(Args, Debug)]
pub struct HArg {
    /// Hamiltonian as [[[re,im],[re,im]],[[re,im],[re,im]]]
    #[arg(long)]
    pub h: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct MetricFlags {
    #[arg(long, value_parser = enum_arg::<Kind>)]
    pub kind: Option<Kind>,
    #[arg(long, value_enum)]
    pub q: Option<QArg>,
    /// Phase of the parity vector, re,im
    #[arg(long, value_parser = parse_c64, allow_hyphen_values = true, default_value = "0")]
    pub phi: C64,
    #[arg(long, value_parser = parse_c64, allow_hyphen_values = true, default_value = "1")]
    pub n1: C64,
    #[arg(long, value_parser = parse_c64, allow_hyphen_values = true, default_value = "1")]
    pub n2: C64,
    #[arg(long, value_parser = enum_arg::<Branch>, default_value = "plus")]
    pub branch: Branch,
    #[arg(long, value_parser = enum_arg::<CircleSign>, default_value = "plus")]
    pub circle: CircleSign,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum QArg {
    Identity,
    Parity,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum VariantArg {
    Anticommuting,
    Commuting,
}

fn enum_arg<T: FromStr<Err = pseudoherm::Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: pseudoherm::Error| e.to_string())
}

/// Names the offending flag of a clap error, without dashes or placeholder.
fn clap_field(e: &clap::Error) -> Option<String> {
    match e.get(ContextKind::InvalidArg) {
        Some(ContextValue::String(s)) => {
            let name = s.split([' ', '=']).next().unwrap_or(s);
            Some(name.trim_start_matches('-').to_string())
        }
        _ => None,
    }
}

fn clap_message(e: &clap::Error) -> String {
    let text = e.render().to_string();
    let line = text.lines().next().unwrap_or("").trim();
    line.trim_start_matches("error:").trim().to_string()
}

fn report(e: &CliError) -> i32 {
    eprintln!("{}", e.to_json());
    e.exit_code()
}

fn run(cli: Cli) -> i32 {
    let d = Tolerances::default();
    let Some(tol) = Tolerances::new(
        cli.tol_abs.unwrap_or(d.eq_abs),
        cli.tol_rel.unwrap_or(d.eq_rel),
        cli.classify_scale.unwrap_or(d.classify_scale),
    ) else {
        return report(&CliError::Usage("tolerances must be positive and finite".into()));
    };
    let outcome = match commands::dispatch(&cli, &tol) {
        Ok(o) => o,
        Err(e) => return report(&e),
    };
    let format = if cli.csv {
        Some(output::Format::Csv)
    } else if cli.json {
        Some(output::Format::Json)
    } else {
        None
    };
    let text = match outcome.body.render(format) {
        Ok(t) => t,
        Err(e) => return report(&e),
    };
    if let Err(e) = output::emit(&text, cli.output.as_deref()) {
        return report(&e);
    }
    match outcome.failure {
        Some(f) => report(&f),
        None => 0,
    }
}

fn main() {
    let code = match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                let _ = e.print();
                0
            }
            ErrorKind::ValueValidation | ErrorKind::InvalidValue => {
                let field = clap_field(&e).unwrap_or_else(|| "argument".into());
                report(&CliError::parse(field, clap_message(&e)))
            }
            _ => report(&CliError::Usage(clap_message(&e))),
        },
    };
    std::process::exit(code);
}
