use std::io::Write;
use std::path::PathBuf;

use bentkit::analysis::dual;
use bentkit::{anf, oracle, walsh_transform, AnalysisProfile};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::build::{build, BuildSummary, Construction};
use crate::error::CliError;
use crate::format::{read_truth_table, serialize_truth_table, write_truth_table};
use crate::params::BuildParams;

/// Construct and certify cryptographic Boolean functions.
///
/// Exit status: 0 success, 1 oracle divergence or failed claim, 2 unreadable
/// input or bad arguments, 3 construction premise violated, 4 oracle size cap.
#[derive(Debug, Parser)]
#[command(name = "bentkit", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the analysis profile of a truth-table file as JSON
    Analyze { path: PathBuf },
    /// Run a construction and write its truth table
    Build {
        #[arg(value_enum)]
        name: Construction,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        /// Seed for randomly sampled inputs
        #[arg(long)]
        seed: Option<u64>,
        /// JSON object with the same keys as the flags; flags win
        #[arg(long)]
        param_file: Option<PathBuf>,
        #[command(flatten)]
        params: Box<BuildParams>,
    },
    /// Check a fast computation against its brute-force oracle
    Verify {
        #[arg(long, value_enum)]
        property: Property,
        path: PathBuf,
    },
    /// Write the dual of a bent function
    Dual {
        path: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Print the Walsh spectrum as JSON
    Wht { path: PathBuf },
    /// Print the algebraic normal form as JSON
    Anf { path: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Walsh,
    Nonlinearity,
    Resiliency,
    Bent,
}

#[derive(Serialize)]
struct Spectrum<'a> {
    n: u32,
    spectrum: &'a [i64],
}

#[derive(Serialize)]
struct Anf {
    n: u32,
    degree: u32,
    monomials: Vec<Vec<u32>>,
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).map_err(|e| CliError::Output(e.to_string()))?;
    writeln!(out, "{text}").map_err(|e| CliError::Output(e.to_string()))
}

/// Runs one command, writing reports to `out`.
pub fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { path } => {
            let f = read_truth_table(&path)?;
            json_line(out, &AnalysisProfile::of(&f))
        }
        Command::Wht { path } => {
            let f = read_truth_table(&path)?;
            let s = walsh_transform(&f);
            json_line(
                out,
                &Spectrum {
                    n: f.n(),
                    spectrum: s.values(),
                },
            )
        }
        Command::Anf { path } => {
            let f = read_truth_table(&path)?;
            let a = anf::mobius(&f);
            json_line(
                out,
                &Anf {
                    n: f.n(),
                    degree: a.degree(),
                    monomials: a.terms(),
                },
            )
        }
        Command::Dual { path, output } => {
            let f = read_truth_table(&path)?;
            let d = dual(&f)?;
            match output {
                Some(o) => write_truth_table(&o, &d)
                    .map_err(|e| CliError::Output(format!("{}: {e}", o.display()))),
                None => out
                    .write_all(serialize_truth_table(&d).as_bytes())
                    .map_err(|e| CliError::Output(e.to_string())),
            }
        }
        Command::Verify { property, path } => {
            let f = read_truth_table(&path)?;
            let report = match property {
                Property::Walsh => oracle::check_walsh(&f),
                Property::Nonlinearity => oracle::check_nonlinearity(&f),
                Property::Resiliency => oracle::check_resiliency(&f),
                Property::Bent => oracle::check_bent(&f),
            }?;
            json_line(out, &report)?;
            if report.agreed {
                Ok(())
            } else {
                Err(CliError::Divergence(format!("{} diverged from its oracle", report.subject)))
            }
        }
        Command::Build {
            name,
            output,
            seed,
            param_file,
            params,
        } => {
            let params = match param_file {
                Some(file) => params.over(BuildParams::from_file(&file).map_err(CliError::Usage)?),
                None => *params,
            };
            let built = build(name, params, seed)?;
            write_truth_table(&output, &built.function)
                .map_err(|e| CliError::Output(format!("{}: {e}", output.display())))?;
            let summary = BuildSummary {
                construction: name.name(),
                output: output.display().to_string(),
                seed,
                profile: AnalysisProfile::of(&built.function),
                claims: built.claims,
                certificate: built.certificate,
            };
            json_line(out, &summary)?;
            if summary.all_verified() {
                Ok(())
            } else {
                Err(CliError::Divergence("a claimed property failed verification".into()))
            }
        }
    }
}

/// Parses `args`, runs the command and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{}", rendered.ansi());
            }
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
