use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ucn-gas", version, about = "Tables for an ideal gas of ultra-cold neutrons in gravity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Constants file with `key = value` lines (m_kg, g_mps2, hbar_Js, kB_JpK).
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,
    /// Write the table here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Use the single-spin 1/(6π²) density coefficient.
    #[arg(long, global = true)]
    pub paper_literal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gravitational levels: exact against asymptotic.
    Eigen {
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=1000))]
        n_max: u32,
    },
    /// Chemical potential and internal energy against temperature.
    Fig1(Fig1Args),
    /// Density profiles n(T, z)/n(0, 0).
    Fig2(Fig2Args),
    /// Bottom density against Fermi energy.
    Fig3(Fig3Args),
    /// Characteristic lengths and densities at one Fermi energy.
    Report {
        /// Fermi energy as a temperature, in mK.
        #[arg(long, default_value_t = 1.0)]
        efermi_mk: f64,
        /// Reduced temperature k_BT/ε_F.
        #[arg(long, default_value_t = 0.0)]
        t: f64,
    },
}

#[derive(Debug, Args)]
pub struct Fig1Args {
    #[arg(long, default_value_t = 0.01)]
    pub t_min: f64,
    #[arg(long, default_value_t = 2.0)]
    pub t_max: f64,
    /// Number of log-spaced temperatures.
    #[arg(long, default_value_t = 200)]
    pub t_steps: usize,
    /// Sweep η = μ/k_BT instead of t; requires --eta-max.
    #[arg(long, requires = "eta_max", allow_negative_numbers = true)]
    pub eta_min: Option<f64>,
    #[arg(long, requires = "eta_min", allow_negative_numbers = true)]
    pub eta_max: Option<f64>,
    /// Number of linearly spaced η values.
    #[arg(long, default_value_t = 200)]
    pub eta_steps: usize,
}

#[derive(Debug, Args)]
pub struct Fig2Args {
    #[arg(long, default_value_t = 0.0)]
    pub t_min: f64,
    #[arg(long, default_value_t = 2.0)]
    pub t_max: f64,
    /// Number of linearly spaced temperatures.
    #[arg(long, default_value_t = 9)]
    pub t_steps: usize,
    /// Heights per temperature on [0, 1.5·ε_F/mg].
    #[arg(long, default_value_t = 400)]
    pub z_steps: usize,
}

#[derive(Debug, Args)]
pub struct Fig3Args {
    #[arg(long, default_value_t = 1e-4)]
    pub efermi_min_k: f64,
    #[arg(long, default_value_t = 1e-2)]
    pub efermi_max_k: f64,
    /// Number of log-spaced Fermi energies.
    #[arg(long, default_value_t = 21)]
    pub efermi_steps: usize,
}
