//! Argument parsing and dispatch.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use gsf_core::{ChoquetRoute, GsfRoute};

use crate::commands::{self, MethodChoice, PlotFormat, PlotWhat, PolicyChoice, SampleName};
use crate::error::CliResult;
use crate::render::Style;

/// Generalized survival functions and Choquet-type integrals over collections of sets.
#[derive(Parser)]
#[command(name = "gsf", version)]
pub struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Significant digits of decimal renderings.
    #[arg(long, global = true, default_value_t = 6)]
    digits: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Survival function of an instance, as pieces or at one point.
    Gsf {
        instance: PathBuf,
        /// def, agg, measure, i, j, compact, compact-phi, compact-phi-lower, compact-psi, compact-psi-upper.
        #[arg(long, default_value = "def")]
        route: GsfRoute,
        /// Evaluate at this alpha only.
        #[arg(long)]
        at: Option<String>,
    },
    /// Generalized Choquet integral, by one route or all of them.
    Choquet {
        instance: PathBuf,
        /// integrate, i, ii, iii, iv; every route when absent.
        #[arg(long)]
        route: Option<ChoquetRoute>,
        /// Standard Choquet integral of the vector instead (measure on the power set).
        #[arg(long)]
        standard: bool,
    },
    /// Rank alternatives for each decision maker of a bundle.
    Rank {
        bundle: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodChoice,
    },
    /// Cheapest leftover set whose chosen items fit the budget.
    Knapsack {
        instance: PathBuf,
        #[arg(long)]
        budget: String,
    },
    /// Whether two instances have the same survival function.
    Equiv { first: PathBuf, second: PathBuf },
    /// Shapley values of a measure on the power set.
    Shapley { measure: PathBuf },
    /// Fit or verify pair values of a three-criteria capacity from Shapley targets.
    Calibrate {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "monotone")]
        policy: PolicyChoice,
        /// Tolerance of the verify mode.
        #[arg(long, default_value = "0.02")]
        tolerance: String,
    },
    /// Validate an instance or measure file and cross-check every route on it.
    Check {
        file: PathBuf,
        /// Also test the operator axioms on a grid of vectors.
        #[arg(long)]
        axioms: bool,
    },
    /// Draw the survival function, the indexed survival function or the permutation.
    Plot {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "gsf")]
        what: PlotWhat,
        #[arg(long, value_enum, default_value = "svg")]
        format: PlotFormat,
        /// Write here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a reference instance file.
    Sample {
        #[arg(value_enum)]
        name: SampleName,
    },
}

/// Output to print on success; `None` when it went to a file.
pub fn run(cli: Cli) -> CliResult<Option<String>> {
    let style = Style { digits: cli.digits };
    let report = match &cli.command {
        Command::Gsf { instance, route, at } => commands::gsf(style, instance, *route, at.as_deref())?,
        Command::Choquet { instance, route, standard } => commands::choquet(style, instance, *route, *standard)?,
        Command::Rank { bundle, method } => commands::rank(style, bundle, *method)?,
        Command::Knapsack { instance, budget } => commands::knapsack(style, instance, budget)?,
        Command::Equiv { first, second } => commands::equiv(style, first, second)?,
        Command::Shapley { measure } => commands::shapley(style, measure)?,
        Command::Calibrate { file, policy, tolerance } => commands::calibrate(style, file, *policy, tolerance)?,
        Command::Check { file, axioms } => commands::check(file, *axioms)?,
        Command::Sample { name } => commands::sample(*name)?,
        Command::Plot { instance, what, format, out } => {
            let body = commands::plot(instance, *what, *format, out.as_ref())?;
            return Ok(out.is_none().then_some(body));
        }
    };
    Ok(Some(if cli.json {
        let mut s = serde_json::to_string_pretty(&report.json).expect("plain data");
        s.push('\n');
        s
    } else {
        report.text
    }))
}
