//! One function per subcommand, each producing a [`Table`] and the
//! parameters recorded in the JSON metadata.

use serde_json::{json, Value};
use ucn_gas::constants::{convert, Unit};
use ucn_gas::density::{
    bottom_density_vs_fermi, bottom_density_zero_t, density, diluteness, profile_heights,
    reduced_density, DensityConvention,
};
use ucn_gas::eigen::{eigen_energy_asymptotic, eigen_energy_exact};
use ucn_gas::thermo::FreeGasPoint;
use ucn_gas::{GasSpec, PhysicalConstants, ThermoPoint};

use crate::args::{Fig1Args, Fig2Args, Fig3Args};
use crate::error::{at, CliError};
use crate::table::{Cell, Table};

pub struct Context {
    pub constants: PhysicalConstants,
    pub convention: DensityConvention,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_range(lo: f64, hi: f64, steps: usize, what: &str) -> Result<(), CliError> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(usage(format!("{what}: need min < max, got [{lo}, {hi}]")));
    }
    if steps < 2 {
        return Err(usage(format!("{what}: need at least 2 steps, got {steps}")));
    }
    Ok(())
}

fn linear_grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    (0..steps)
        .map(|i| if i + 1 == steps { hi } else { lo + (hi - lo) * i as f64 / (steps - 1) as f64 })
        .collect()
}

fn log_grid(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
    let ratio = (hi / lo).ln();
    (0..steps)
        .map(|i| if i + 1 == steps { hi } else { lo * (ratio * i as f64 / (steps - 1) as f64).exp() })
        .collect()
}

pub fn eigen(n_max: u32, ctx: &Context) -> Result<(Table, Value), CliError> {
    let c = &ctx.constants;
    let pev = |e: f64| convert(e, Unit::Joule, Unit::PicoElectronVolt, c).map_err(at("n_z", 0.0));
    let mut table = Table::new(&["n_z", "e_exact_peV", "e_asymptotic_peV", "rel_error"]);
    for n in 1..=n_max {
        let exact = eigen_energy_exact(n, c).map_err(at("n_z", n as f64))?;
        let asymptotic = eigen_energy_asymptotic(n, c);
        table.push(vec![
            Cell::Int(n as i64),
            Cell::Num(pev(exact)?),
            Cell::Num(pev(asymptotic)?),
            Cell::Num(((asymptotic - exact) / exact).abs()),
        ]);
    }
    Ok((table, json!({ "n_max": n_max })))
}

pub fn fig1(args: &Fig1Args) -> Result<(Table, Value), CliError> {
    if let (Some(lo), Some(hi)) = (args.eta_min, args.eta_max) {
        check_range(lo, hi, args.eta_steps, "eta")?;
        let mut table = Table::new(&[
            "eta",
            "t",
            "mu_over_ef",
            "u_over_nef",
            "mu_free_over_ef",
            "u_free_over_nef",
        ]);
        for eta in linear_grid(lo, hi, args.eta_steps) {
            let p = ThermoPoint::at_eta(eta).map_err(at("eta", eta))?;
            let free = FreeGasPoint::at_temperature(p.t).map_err(at("t", p.t))?;
            table.push(vec![
                Cell::Num(eta),
                Cell::Num(p.t),
                Cell::Num(p.mu_over_ef),
                Cell::Num(p.u_over_nef),
                Cell::Num(free.mu_over_ef),
                Cell::Num(free.u_over_nef),
            ]);
        }
        let params = json!({ "eta_min": lo, "eta_max": hi, "eta_steps": args.eta_steps });
        return Ok((table, params));
    }
    check_range(args.t_min, args.t_max, args.t_steps, "t")?;
    if args.t_min <= 0.0 {
        return Err(usage("t: log-spaced grid needs t_min > 0"));
    }
    let mut table = Table::new(&["t", "mu_over_ef", "u_over_nef", "mu_free_over_ef", "u_free_over_nef"]);
    for t in log_grid(args.t_min, args.t_max, args.t_steps) {
        let p = ThermoPoint::at_temperature(t).map_err(at("t", t))?;
        let free = FreeGasPoint::at_temperature(t).map_err(at("t", t))?;
        table.push(vec![
            Cell::Num(t),
            Cell::Num(p.mu_over_ef),
            Cell::Num(p.u_over_nef),
            Cell::Num(free.mu_over_ef),
            Cell::Num(free.u_over_nef),
        ]);
    }
    let params = json!({ "t_min": args.t_min, "t_max": args.t_max, "t_steps": args.t_steps });
    Ok((table, params))
}

pub fn fig2(args: &Fig2Args) -> Result<(Table, Value), CliError> {
    check_range(args.t_min, args.t_max, args.t_steps, "t")?;
    if args.t_min < 0.0 {
        return Err(usage("t: temperatures must be non-negative"));
    }
    if args.z_steps < 2 {
        return Err(usage(format!("z: need at least 2 steps, got {}", args.z_steps)));
    }
    let mut table = Table::new(&["t", "mgz_over_ef", "n_over_n00"]);
    for t in linear_grid(args.t_min, args.t_max, args.t_steps) {
        let p = ThermoPoint::at_temperature(t).map_err(at("t", t))?;
        for x in profile_heights(t, args.z_steps) {
            let ratio = reduced_density(&p, x).map_err(at("t", t))?;
            table.push(vec![Cell::Num(t), Cell::Num(x), Cell::Num(ratio)]);
        }
    }
    let params = json!({
        "t_min": args.t_min,
        "t_max": args.t_max,
        "t_steps": args.t_steps,
        "z_steps": args.z_steps,
    });
    Ok((table, params))
}

pub fn fig3(args: &Fig3Args, ctx: &Context) -> Result<(Table, Value), CliError> {
    check_range(args.efermi_min_k, args.efermi_max_k, args.efermi_steps, "efermi")?;
    if args.efermi_min_k <= 0.0 {
        return Err(usage("efermi: Fermi energies must be positive"));
    }
    let c = &ctx.constants;
    let grid: Vec<f64> = log_grid(args.efermi_min_k, args.efermi_max_k, args.efermi_steps)
        .into_iter()
        .map(|k| k * c.k_b)
        .collect();
    let curve = bottom_density_vs_fermi(&grid, c, ctx.convention).map_err(at("efermi_K", args.efermi_min_k))?;
    let mut table = Table::new(&["efermi_K", "n_bottom_cm3"]);
    for p in curve {
        table.push(vec![Cell::Num(p.fermi_temperature), Cell::Num(p.density_cm3)]);
    }
    let params = json!({
        "efermi_min_K": args.efermi_min_k,
        "efermi_max_K": args.efermi_max_k,
        "efermi_steps": args.efermi_steps,
    });
    Ok((table, params))
}

/// At t = 0 the thermal wavelength is taken at the Fermi temperature.
pub fn report(efermi_mk: f64, t: f64, ctx: &Context) -> Result<(Table, Value), CliError> {
    if !(efermi_mk > 0.0 && efermi_mk.is_finite()) {
        return Err(usage(format!("efermi_mk must be positive, got {efermi_mk}")));
    }
    if !(t >= 0.0 && t.is_finite()) {
        return Err(usage(format!("t must be non-negative, got {t}")));
    }
    let c = &ctx.constants;
    let fermi_temperature = efermi_mk * 1e-3;
    let gas = GasSpec::from_fermi_energy(fermi_temperature * c.k_b, 1.0, c).map_err(at("efermi_mK", efermi_mk))?;
    let bottom = if t == 0.0 {
        bottom_density_zero_t(gas.fermi_energy(), c, ctx.convention)
    } else {
        density(t, 0.0, &gas, c).map_err(at("t", t))? * ctx.convention.factor()
    };
    let wavelength_temperature = if t == 0.0 { fermi_temperature } else { t * fermi_temperature };
    let d = diluteness(bottom, wavelength_temperature, c).map_err(at("t", t))?;
    let mut table = Table::new(&[
        "efermi_K",
        "t",
        "column_height_cm",
        "bottom_density_cm3",
        "mean_separation_cm",
        "thermal_wavelength_cm",
        "wavelength_temperature_K",
        "degenerate",
    ]);
    table.push(vec![
        Cell::Num(fermi_temperature),
        Cell::Num(t),
        Cell::Num(gas.column_height(c) * 100.0),
        Cell::Num(bottom * 1e-6),
        Cell::Num(d.mean_separation * 100.0),
        Cell::Num(d.thermal_wavelength * 100.0),
        Cell::Num(wavelength_temperature),
        Cell::Bool(d.degenerate),
    ]);
    Ok((table, json!({ "efermi_mK": efermi_mk, "t": t })))
}
