//! `dihedra`: validate involutive and cyclic A∞-structures given as JSON and
//! compute their Hochschild, cyclic and dihedral cohomology and their
//! deformation theory.

mod commands;
mod input;
mod report;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cohom::Theory;
use exactnum::{Fp, Scalar, Q};

use commands::{CmdResult, CohomologyArgs, DeformAction, DeformArgs};
use input::{Field, Input};
use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "dihedra", version, about = "Exact cohomology and deformation theory of involutive and cyclic A∞-algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check m² = 0 and the declared involutive and cyclic conditions.
    Validate {
        file: String,
        /// Truncation weight N (default: the file's, else 5).
        #[arg(long)]
        max_weight: Option<usize>,
    },
    /// Cohomology dimensions per degree with stability flags.
    Cohomology {
        file: String,
        /// hh, hh+, hh-, hc, hd+, hd-, cycder, cycder+ or cycder-.
        #[arg(long, alias = "which", default_value = "hh", value_parser = parse_theory)]
        theory: Theory,
        #[arg(long)]
        max_weight: Option<usize>,
        /// Degree window `a..b` (default: the file's, else 0..N).
        #[arg(long, value_parser = parse_degrees, allow_hyphen_values = true)]
        degrees: Option<(i64, i64)>,
        /// Restrict to the filtration piece of weights ≥ n.
        #[arg(long, allow_hyphen_values = true)]
        filtration: Option<i64>,
        /// Also compute the two summands and check additivity.
        #[arg(long)]
        decompose: bool,
    },
    /// Maurer–Cartan check, gauge action, or infinitesimal moduli.
    Deform {
        file: String,
        #[arg(value_enum)]
        action: DeformAction,
        /// Coefficient ring, e.g. `eps^3` or `a^2*b^2` (default: the file's, else eps^2).
        #[arg(long)]
        ring: Option<String>,
        /// plain, inv, cyc or cycinv (default: the file's, else the flags').
        #[arg(long)]
        flavor: Option<String>,
        #[arg(long)]
        max_weight: Option<usize>,
    },
    /// Verify the isomorphism between cyclic cochains and cyclic derivations.
    IsoCheck {
        file: String,
        #[arg(long)]
        max_weight: Option<usize>,
    },
}

fn parse_theory(s: &str) -> Result<Theory, String> {
    Theory::parse(s).ok_or_else(|| format!("unknown theory {s:?}; use hh, hh+, hh-, hc, hd+, hd-, cycder, cycder+ or cycder-"))
}

fn parse_degrees(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let a: i64 = a.trim().parse().map_err(|_| format!("bad degree {a:?}"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad degree {b:?}"))?;
    Ok((a, b))
}

fn file_of(c: &Command) -> &str {
    match c {
        Command::Validate { file, .. }
        | Command::Cohomology { file, .. }
        | Command::Deform { file, .. }
        | Command::IsoCheck { file, .. } => file,
    }
}

fn run<F: Scalar>(cmd: &Command, input: &Input) -> CmdResult<Report> {
    let file = file_of(cmd);
    match cmd {
        Command::Validate { max_weight, .. } => commands::validate::<F>(input, file, *max_weight),
        Command::Cohomology { theory, max_weight, degrees, filtration, decompose, .. } => commands::cohomology::<F>(
            input,
            file,
            &CohomologyArgs { theory: *theory, max_weight: *max_weight, degrees: *degrees, filtration: *filtration, decompose: *decompose },
        ),
        Command::Deform { action, ring, flavor, max_weight, .. } => commands::deform::<F>(
            input,
            file,
            &DeformArgs { action: *action, ring: ring.as_deref(), flavor: flavor.as_deref(), max_weight: *max_weight },
        ),
        Command::IsoCheck { max_weight, .. } => commands::iso_check::<F>(input, file, *max_weight),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let file = file_of(&cli.command);
    let result = std::fs::read_to_string(file)
        .map_err(|e| format!("cannot read {file}: {e}"))
        .and_then(|src| Input::parse(&src).map_err(|e| format!("{file}: {e}")))
        .and_then(|input| {
            let field = input.field().map_err(|e| format!("{file}: {e}"))?;
            match field {
                Field::Rationals => run::<Q>(&cli.command, &input),
                Field::Prime(3) => run::<Fp<3>>(&cli.command, &input),
                Field::Prime(5) => run::<Fp<5>>(&cli.command, &input),
                Field::Prime(7) => run::<Fp<7>>(&cli.command, &input),
                Field::Prime(11) => run::<Fp<11>>(&cli.command, &input),
                Field::Prime(13) => run::<Fp<13>>(&cli.command, &input),
                Field::Prime(p) => Err(format!("unsupported prime {p}")),
            }
        });
    match result {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
