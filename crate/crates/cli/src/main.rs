use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand};
use grp_cli::report::Report;
use grp_cli::suite::{self, ActionSpec, Options};
use grp_cli::{load_group, refs};
use grp_core::GroupSpec;

/// Finite group theory checks over Cayley tables.
#[derive(Debug, Parser)]
#[command(name = "grp", version)]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Cross-check results against brute-force enumeration.
    #[arg(long, global = true)]
    oracle: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the full theorem suite.
    Verify { group: String },
    /// Build a Sylow p-subgroup and count all of them.
    Sylow {
        group: String,
        #[arg(short)]
        p: usize,
    },
    /// Find an element of prime order p.
    Cauchy {
        group: String,
        #[arg(short)]
        p: usize,
    },
    /// Orbit partition of an action: conj, left, or cosets:GENS.
    Orbits {
        group: String,
        action: ActionSpec,
        /// Generators of the acting subgroup; the whole group by default.
        #[arg(long)]
        gens: Option<String>,
    },
    /// Quotient by the normal subgroup generated by --gens.
    Quotient {
        group: String,
        #[arg(long, default_value = "")]
        gens: String,
    },
    /// List the builtin groups.
    Catalog,
}

fn gens_or_all(text: Option<&str>, order: usize) -> Result<Vec<usize>> {
    let gens = match text {
        Some(t) => refs::parse_gens(t).map_err(anyhow::Error::msg)?,
        None => (0..order).collect(),
    };
    if let Some(&bad) = gens.iter().find(|&&x| x >= order) {
        bail!("generator {bad} is outside a group of order {order}");
    }
    Ok(gens)
}

fn run(cli: Cli) -> Result<Option<Report>> {
    let opts = Options { oracle: cli.oracle };
    let report = match cli.command {
        Command::Verify { group } => {
            let (spec, g) = load_group(&group)?;
            suite::verify(&spec.to_string(), &g, opts)?
        }
        Command::Sylow { group, p } => {
            let (spec, g) = load_group(&group)?;
            suite::sylow_report(&spec.to_string(), &g, p, opts)?
        }
        Command::Cauchy { group, p } => {
            let (spec, g) = load_group(&group)?;
            suite::cauchy_report(&spec.to_string(), &g, p, opts)?
        }
        Command::Orbits {
            group,
            action,
            gens,
        } => {
            let (spec, g) = load_group(&group)?;
            let gens = gens_or_all(gens.as_deref(), g.size())?;
            suite::orbits_report(&spec.to_string(), &g, &action, &gens)?
        }
        Command::Quotient { group, gens } => {
            let (spec, g) = load_group(&group)?;
            let gens = gens_or_all(Some(&gens), g.size())?;
            suite::quotient_report(&spec.to_string(), &g, &gens)?
        }
        Command::Catalog => {
            for spec in GroupSpec::catalog() {
                let order = spec.build()?.size();
                println!("{spec:<40} order {order}");
            }
            return Ok(None);
        }
    };
    Ok(Some(report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(report)) => {
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
