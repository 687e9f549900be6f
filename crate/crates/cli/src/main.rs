mod args;
mod commands;
mod config;
mod error;
mod table;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;
use ucn_gas::density::DensityConvention;
use ucn_gas::PhysicalConstants;

use args::{Cli, Command, Format};
use commands::Context;
use error::CliError;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let common = &cli.common;
    let constants = match &common.config {
        Some(path) => config::load(path)?,
        None => PhysicalConstants::CODATA_2018,
    };
    let ctx = Context {
        constants,
        convention: if common.paper_literal {
            DensityConvention::SingleSpin
        } else {
            DensityConvention::SpinSummed
        },
    };
    let (name, (table, params)) = match &cli.command {
        Command::Eigen { n_max } => ("eigen", commands::eigen(*n_max, &ctx)?),
        Command::Fig1(a) => ("fig1", commands::fig1(a)?),
        Command::Fig2(a) => ("fig2", commands::fig2(a)?),
        Command::Fig3(a) => ("fig3", commands::fig3(a, &ctx)?),
        Command::Report { efermi_mk, t } => ("report", commands::report(*efermi_mk, *t, &ctx)?),
    };
    let text = match common.format {
        Format::Csv => table.to_csv(),
        Format::Json => {
            let c = &ctx.constants;
            let meta = json!({
                "command": name,
                "constants": { "m_kg": c.m, "g_mps2": c.g, "hbar_Js": c.hbar, "kB_JpK": c.k_b },
                "paper_literal": common.paper_literal,
                "parameters": params,
            });
            table.to_json(meta)
        }
    };
    match &common.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Usage(format!("cannot write output: {e}"))),
    }
}
