//! `eulerob`: command-line front end for eulerob-core.
//!
//! Exit codes: 0 ok, 1 IO, 2 schema or bad input, 3 resource limit,
//! 4 seed instability, 5 validation, 6 a cross-check failed.

mod commands;
mod doc;
mod error;
mod selftest;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{Output, Settings};
use doc::{
    from_value, parse_assignments, parse_list, read_json, ConeDoc, ConePayload, Coord, EmptyPayload, JobDocument,
    PolyPayload, SpaceDoc, StratChiPayload, TransformPayload,
};
use error::CliError;

#[derive(Parser)]
#[command(name = "eulerob", version, about = "Local Euler obstructions, constructible functions and Behrend functions")]
struct Cli {
    /// Print the machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the generic linear choices (default 1).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Step limit for Gröbner computations.
    #[arg(long, global = true, value_name = "STEPS")]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PolyArgs {
    /// Hypersurface equation, e.g. "y*u - x*v".
    #[arg(long)]
    poly: String,
    /// Comma-separated rational coordinates.
    #[arg(long, allow_hyphen_values = true)]
    point: String,
    /// Variable order; defaults to order of first appearance.
    #[arg(long)]
    vars: Option<String>,
    /// Declared factors of the equation, separated by ';'.
    #[arg(long)]
    factors: Option<String>,
}

impl PolyArgs {
    fn payload(&self) -> PolyPayload {
        PolyPayload {
            poly: self.poly.clone(),
            point: parse_list(&self.point).into_iter().map(Coord::Text).collect(),
            vars: self.vars.as_deref().map(parse_list),
            factors: self
                .factors
                .as_deref()
                .map(|f| f.split(';').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Local Euler obstruction at a point, with cross-checks.
    Eu(PolyArgs),
    /// Segre vector of the Nash fiber over a point.
    Segre(PolyArgs),
    /// Weighted Euler characteristic of a constructible function.
    StratChi {
        #[arg(long)]
        space: PathBuf,
        /// Function values, `name=value,...`; overrides the document.
        #[arg(long, allow_hyphen_values = true)]
        values: Option<String>,
    },
    /// Euler-obstruction transform of a cycle, or its inverse.
    Transform {
        #[arg(long)]
        space: PathBuf,
        /// Cycle coefficients, `name=coefficient,...`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "function")]
        cycle: Option<String>,
        /// Function values, `name=value,...`; solved for the cycle.
        #[arg(long, allow_hyphen_values = true)]
        function: Option<String>,
    },
    /// Canonical cycle, Behrend function and weighted Euler characteristic.
    Behrend {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        cone: PathBuf,
    },
    /// Cone splitting along the fixed locus and the localized invariant.
    Kiemli {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        cone: PathBuf,
        /// Fixed strata, comma-separated; defaults to the flagged ones.
        #[arg(long)]
        fixed: Option<String>,
    },
    /// Run the built-in property suite.
    Selftest,
    /// Run a JSON job document.
    Run { job: PathBuf },
}

fn cone_payload(space: &Path, cone: &Path, fixed: Option<&str>) -> Result<ConePayload, CliError> {
    Ok(ConePayload {
        space: read_json::<SpaceDoc>(space)?,
        cone: read_json::<ConeDoc>(cone)?,
        fixed: fixed.map(parse_list),
    })
}

fn run_job(job: JobDocument, settings: Settings) -> Result<Output, CliError> {
    match job.kind.as_str() {
        "eu" => commands::eu(&from_value(job.payload, "eu payload")?, settings),
        "segre" => commands::segre(&from_value(job.payload, "segre payload")?, settings),
        "strat-chi" => {
            let p: StratChiPayload = from_value(job.payload, "strat-chi payload")?;
            commands::strat_chi(&p.space, p.function.as_ref())
        }
        "transform" => {
            let p: TransformPayload = from_value(job.payload, "transform payload")?;
            commands::transform(&p.space, p.cycle.as_ref(), p.function.as_ref())
        }
        "behrend" => commands::behrend(&from_value(job.payload, "behrend payload")?),
        "kiemli" => commands::kiemli(&from_value(job.payload, "kiemli payload")?),
        "selftest" => {
            let _: EmptyPayload = from_value(job.payload, "selftest payload")?;
            Ok(selftest::run(&settings.options()))
        }
        other => Err(CliError::Schema(format!("unknown job kind `{other}`"))),
    }
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    let settings = Settings { seed: cli.seed.unwrap_or(1), budget: cli.budget };
    match &cli.command {
        Command::Eu(a) => commands::eu(&a.payload(), settings),
        Command::Segre(a) => {
            if a.factors.is_some() {
                return Err(CliError::Schema("--factors only applies to eu".into()));
            }
            commands::segre(&a.payload(), settings)
        }
        Command::StratChi { space, values } => {
            let values = values.as_deref().map(parse_assignments).transpose()?;
            commands::strat_chi(&read_json(space)?, values.as_ref())
        }
        Command::Transform { space, cycle, function } => {
            let cycle = cycle.as_deref().map(parse_assignments).transpose()?;
            let function = function.as_deref().map(parse_assignments).transpose()?;
            commands::transform(&read_json(space)?, cycle.as_ref(), function.as_ref())
        }
        Command::Behrend { space, cone } => commands::behrend(&cone_payload(space, cone, None)?),
        Command::Kiemli { space, cone, fixed } => commands::kiemli(&cone_payload(space, cone, fixed.as_deref())?),
        Command::Selftest => Ok(selftest::run(&settings.options())),
        Command::Run { job } => {
            let job: JobDocument = read_json(job)?;
            let settings = Settings {
                seed: cli.seed.or(job.seed).unwrap_or(1),
                budget: cli.budget.or(job.budget),
            };
            run_job(job, settings)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("reports serialize"));
            } else {
                print!("{}", out.text);
            }
            match out.failure {
                None => ExitCode::SUCCESS,
                Some(why) => {
                    let e = CliError::CheckFailed(why);
                    eprintln!("eulerob: {e}");
                    ExitCode::from(e.exit_code())
                }
            }
        }
        Err(e) => {
            eprintln!("eulerob: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
