//! `framed`: sector counts, extension certificates and related tables for
//! code conformal nets.
//!
//! Exit status: 0 on success, 1 when a mathematical check fails (the stage is
//! named on stderr), 2 on unreadable or invalid input.

mod commands;
mod input;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] framed_core::Error),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use framed_core::Error as E;
        match self {
            CliError::Input(_) => 2,
            CliError::Core(E::LengthMismatch { .. })
            | CliError::Core(E::TooLong(_))
            | CliError::Core(E::Parse(_))
            | CliError::Core(E::Input(_))
            | CliError::Core(E::Capacity { .. }) => 2,
            CliError::Core(_) | CliError::Internal(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "framed", version, about = "Exact sector theory and holomorphic extensions of code conformal nets")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Code C as a JSON file, or `@name` for a built-in code.
    #[arg(long, global = true, value_name = "PATH")]
    c_code: Option<String>,

    /// Code D as a JSON file, or `@name` for a built-in code.
    #[arg(long, global = true, value_name = "PATH")]
    d_code: Option<String>,

    /// Built-in structure-code pair (see `framed catalog`).
    #[arg(long, global = true, value_name = "NAME")]
    catalog: Option<String>,

    /// Word as a 0/1 string.
    #[arg(long, global = true, value_name = "BITSTRING")]
    beta: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for the parallel parts (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Spin exponents in sixteenths, comma separated (discriminate).
    #[arg(long, global = true, value_name = "LIST")]
    spins: Option<String>,

    /// Candidate groups as cyclic orders, e.g. `4;2,2` (discriminate).
    #[arg(long, global = true, value_name = "LIST")]
    groups: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Certify the holomorphic extension with structure codes (C, D).
    Verify,
    /// All sectors of the crossed product by C.
    Sectors,
    /// Induced sectors for one tau-word.
    Beta,
    /// Chain of triply even codes from D down to the all-one code.
    Chain,
    /// Table of extending sectors.
    Delta,
    /// Fit a spin list onto candidate pointed modular data.
    Discriminate,
    /// List built-in codes and pairs.
    Catalog,
}

fn run(cli: &Cli) -> Result<commands::Outcome, CliError> {
    let codes = || input::structure_codes(cli.catalog.as_deref(), cli.c_code.as_deref(), cli.d_code.as_deref());
    let beta_arg = || {
        cli.beta
            .as_deref()
            .ok_or_else(|| CliError::Input("--beta is required".into()))
    };
    match cli.command {
        Command::Verify => commands::verify(&codes()?),
        Command::Sectors => commands::sectors(&codes()?.c_code),
        Command::Beta => {
            let s = codes()?;
            let beta = input::parse_word(beta_arg()?, s.length())?;
            commands::beta(&s.c_code, &beta)
        }
        Command::Chain => {
            let s = codes()?;
            let beta = input::parse_word(beta_arg()?, s.length())?;
            commands::chain(&s.d_code, &beta)
        }
        Command::Delta => commands::delta(&codes()?),
        Command::Discriminate => {
            let spins = input::parse_spins(
                cli.spins
                    .as_deref()
                    .ok_or_else(|| CliError::Input("--spins is required".into()))?,
            )?;
            let groups = match cli.groups.as_deref() {
                Some(g) => input::parse_groups(g)?,
                None => default_groups(spins.len())?,
            };
            commands::discriminate_groups(&spins, &groups)
        }
        Command::Catalog => commands::catalog_listing(),
    }
}

/// Every abelian group of the given order, as products of cyclic groups of
/// prime-power order.
fn default_groups(order: usize) -> Result<Vec<framed_core::pointed::AbelianGroup>, CliError> {
    fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut factors: Vec<(u32, u32)> = Vec::new();
    let mut m = order as u32;
    let mut p = 2;
    while m > 1 {
        let mut k = 0;
        while m.is_multiple_of(p) {
            m /= p;
            k += 1;
        }
        if k > 0 {
            factors.push((p, k));
        }
        p += 1;
    }
    let mut groups: Vec<Vec<u32>> = vec![vec![]];
    for (p, k) in factors {
        let mut next = Vec::new();
        for g in &groups {
            for part in partitions(k, k) {
                let mut h = g.clone();
                h.extend(part.iter().map(|&e| p.pow(e)));
                next.push(h);
            }
        }
        groups = next;
    }
    groups
        .into_iter()
        .map(|g| Ok(framed_core::pointed::AbelianGroup::new(if g.is_empty() { vec![1] } else { g })?))
        .collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("framed: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(outcome) => {
            let text = match cli.format {
                Format::Json => match serde_json::to_string_pretty(&outcome.json) {
                    Ok(s) => s + "\n",
                    Err(e) => {
                        eprintln!("framed: {e}");
                        return ExitCode::from(1);
                    }
                },
                Format::Markdown => outcome.doc.to_markdown(),
                Format::Text => outcome.doc.to_text(),
            };
            print!("{text}");
            match outcome.failure {
                Some(stage) => {
                    eprintln!("framed: failed at {stage}");
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("framed: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
