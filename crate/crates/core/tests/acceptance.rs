//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ucn_gas::constants::{convert, default_constants, Unit};
use ucn_gas::density::{
    density_at, density_ratio_at_bottom, density_ratio_sommerfeld, density_zero_t, diluteness,
    DensityConvention,
};
use ucn_gas::eigen::{eigen_energy_exact, EigenState};
use ucn_gas::numeric::{integrate, Tolerance};
use ucn_gas::specfun::{airy_zero, airy_zero_asymptotic};
use ucn_gas::thermo::{
    energy_cross_term, free_gas_mu_over_ef, free_gas_u_over_nef, internal_energy, mu_over_ef,
};
use ucn_gas::{GasSpec, Result, ThermoPoint};

type Check = fn() -> Result<Outcome>;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Result<Outcome> {
    Ok(Outcome { pass, detail })
}

fn millikelvin_gas() -> Result<GasSpec> {
    let c = default_constants();
    GasSpec::from_fermi_energy(c.k_b * 1e-3, 0.1, &c)
}

fn airy_zero_asymptotics() -> Result<Outcome> {
    let start = Instant::now();
    let mut worst = (0, 0.0);
    for n in 1..=1000 {
        let exact = airy_zero(n)?.value;
        let rel = ((airy_zero_asymptotic(n) - exact) / exact).abs();
        if rel > worst.1 {
            worst = (n, rel);
        }
    }
    let elapsed = start.elapsed();
    outcome(
        worst.0 == 1 && worst.1 <= 0.01 && elapsed < Duration::from_secs(1),
        format!(
            "max rel err {:.3e} at n = {} over n <= 1000 (limit 1.0e-2 at n = 1), {:.3} s (limit 1 s)",
            worst.1,
            worst.0,
            elapsed.as_secs_f64()
        ),
    )
}

fn ground_state_energy() -> Result<Outcome> {
    let c = default_constants();
    let e1 = eigen_energy_exact(1, &c)?;
    let pev = convert(e1, Unit::Joule, Unit::PicoElectronVolt, &c)?;
    let start = Instant::now();
    let fd = common::bouncer_levels_fd(1, 10_000, 20.0)[0] * c.scales().e_g;
    let elapsed = start.elapsed();
    let rel = ((fd - e1) / e1).abs();
    outcome(
        (pev - 1.407).abs() <= 0.001 && rel <= 1e-3 && elapsed < Duration::from_secs(10),
        format!(
            "E_1 = {pev:.5} peV (1.407 +- 0.001), finite-difference oracle rel diff {rel:.2e} (limit 1e-3) in {:.3} s",
            elapsed.as_secs_f64()
        ),
    )
}

/// Least-squares a in 1 − f(t) = a·t² over t ∈ [0.01, 0.05].
fn curvature_fit(f: impl Fn(f64) -> Result<f64>) -> Result<f64> {
    let (mut num, mut den) = (0.0, 0.0);
    for i in 0..=8 {
        let t = 0.01 + 0.005 * i as f64;
        num += (1.0 - f(t)?) * t * t;
        den += t.powi(4);
    }
    Ok(num / den)
}

fn chemical_potential_curvature() -> Result<Outcome> {
    let grav = curvature_fit(mu_over_ef)?;
    let free = curvature_fit(free_gas_mu_over_ef)?;
    let target = PI * PI / 2.0;
    let rel = ((grav - target) / target).abs();
    let ratio = grav / free;
    outcome(
        rel <= 0.02 && (ratio - 6.0).abs() <= 0.1,
        format!(
            "fitted t^2 coefficient {grav:.5} vs pi^2/2 = {target:.5} (rel {rel:.2e}, limit 2e-2); \
             ratio to free gas {ratio:.4} (6.0 +- 0.1)"
        ),
    )
}

fn zero_temperature_energy() -> Result<Outcome> {
    let u = internal_energy(1e-3)?;
    let u_free = free_gas_u_over_nef(1e-3)?;
    let (d, d_free) = ((u - 5.0 / 7.0).abs(), (u_free - 0.6).abs());
    outcome(
        d <= 1e-4 && d_free <= 1e-4,
        format!("u(1e-3) = {u:.7} (5/7 +- 1e-4), free gas {u_free:.7} (3/5 +- 1e-4)"),
    )
}

fn bottom_density_expansion() -> Result<Outcome> {
    // (t, |difference|, 5t⁴), kept for the t with the largest ratio.
    let mut worst = (0.0, 0.0, 1.0);
    for i in 1..=10 {
        let t = 0.01 * i as f64;
        let diff = (density_ratio_at_bottom(t)? - density_ratio_sommerfeld(t)).abs();
        let bound = 5.0 * t.powi(4);
        if diff / bound >= worst.1 / worst.2 {
            worst = (t, diff, bound);
        }
    }
    outcome(
        worst.1 <= worst.2,
        format!(
            "worst |quadrature - (1 - 5pi^2/8 t^2)| = {:.3e} at t = {:.2} (bound 5t^4 = {:.3e})",
            worst.1, worst.0, worst.2
        ),
    )
}

fn worked_numbers() -> Result<Outcome> {
    let c = default_constants();
    let gas = millikelvin_gas()?;
    let n0 = density_zero_t(0.0, &gas, &c, DensityConvention::SpinSummed)?;
    let n0_cm = n0 * 1e-6;
    let height_cm = gas.column_height(&c) * 100.0;
    let report = diluteness(n0, gas.fermi_energy() / c.k_b, &c)?;
    let r_cm = report.mean_separation * 100.0;
    let lambda_cm = report.thermal_wavelength * 100.0;
    outcome(
        (0.85e16..=0.95e16).contains(&n0_cm)
            && (height_cm - 84.0).abs() <= 1.0
            && (r_cm - 4.8e-6).abs() <= 0.2e-6
            && (lambda_cm - 8.0e-6).abs() <= 0.2e-6,
        format!(
            "n(0,0) = {n0_cm:.3e} cm^-3 ([0.85, 0.95]e16), height {height_cm:.2} cm (84 +- 1), \
             R = {r_cm:.3e} cm ((4.8 +- 0.2)e-6), lambda = {lambda_cm:.3e} cm ((8.0 +- 0.2)e-6)"
        ),
    )
}

fn number_conservation() -> Result<Outcome> {
    let c = default_constants();
    let gas = millikelvin_gas()?;
    let weight = c.m * c.g;
    let mut worst = (0.0, 0.0);
    for t in [0.01, 0.1, 0.5, 1.0, 5.0] {
        let point = ThermoPoint::at_temperature(t)?;
        let kt = t * gas.fermi_energy();
        let z_mu = (point.eta * kt).max(0.0) / weight;
        let z_top = z_mu + 64.0 * kt / weight;
        let tol = Tolerance::relative(1e-11);
        // A failed evaluation turns into NaN, which integrate reports.
        let n = |z: f64| density_at(&point, z, &gas, &c).unwrap_or(f64::NAN);
        let lower = integrate(n, 0.0, z_mu, tol);
        let upper = integrate(n, z_mu, z_top, tol);
        let total = lower?.value + upper?.value;
        let count = total * gas.side_length().powi(2);
        let rel = (count / gas.particle_number() - 1.0).abs();
        if rel > worst.1 {
            worst = (t, rel);
        }
    }
    outcome(
        worst.1 <= 1e-7,
        format!(
            "max |L^2 int n dz / N - 1| = {:.2e} at t = {} over t in {{0.01, 0.1, 0.5, 1, 5}} (limit 1e-7)",
            worst.1, worst.0
        ),
    )
}

fn double_integral_reduction() -> Result<Outcome> {
    let mut worst = (0.0, 0.0);
    for eta in [-5.0, 0.0, 5.0, 20.0, 100.0] {
        let nested = common::nested_fermi(eta, |v| v);
        let rel = (energy_cross_term(eta)? / nested - 1.0).abs();
        if rel >= worst.1 {
            worst = (eta, rel);
        }
    }
    outcome(
        worst.1 <= 1e-7,
        format!(
            "max rel diff nested quadrature vs (4/15)F_5/2 = {:.2e} at eta = {} (limit 1e-7)",
            worst.1, worst.0
        ),
    )
}

fn orthonormality() -> Result<Outcome> {
    let c = default_constants();
    let states = (1..=10)
        .map(|n| EigenState::new(n, &c))
        .collect::<Result<Vec<_>>>()?;
    let mut worst = (0, 0, 0.0);
    for a in &states {
        for b in &states {
            let top = a.extent().max(b.extent());
            let f = |z: f64| a.wavefunction(z).unwrap_or(f64::NAN) * b.wavefunction(z).unwrap_or(f64::NAN);
            let value = integrate(f, 0.0, top, Tolerance::relative(1e-12).with_abs(1e-12))?.value;
            let want = if a.n_z == b.n_z { 1.0 } else { 0.0 };
            let dev = (value - want).abs();
            if dev >= worst.2 {
                worst = (a.n_z, b.n_z, dev);
            }
        }
    }
    outcome(
        worst.2 <= 1e-8,
        format!(
            "max |<psi_n|psi_m> - delta_nm| = {:.2e} at (n, m) = ({}, {}) for n, m <= 10 (limit 1e-8)",
            worst.2, worst.0, worst.1
        ),
    )
}

fn barometric_limit() -> Result<Outcome> {
    let mut worst = (0.0, 0.0, 0.0);
    for eta in [-10.0, -15.0, -20.0] {
        let point = ThermoPoint::at_eta(eta)?;
        let base = ucn_gas::density::reduced_density(&point, 0.0)?;
        for s in [0.5, 1.0, 2.0, 5.0, 10.0] {
            let x = s * point.t;
            let ratio = ucn_gas::density::reduced_density(&point, x)? / base;
            let dev = (ratio / (-s).exp() - 1.0).abs();
            if dev >= worst.2 {
                worst = (eta, s, dev);
            }
        }
    }
    outcome(
        worst.2 <= 1e-6,
        format!(
            "max rel dev of n(z)/n(0) from exp(-mgz/kT) = {:.2e} at eta = {}, mgz/kT = {} \
             (eta in {{-10, -15, -20}}, limit 1e-6)",
            worst.2, worst.0, worst.1
        ),
    )
}

fn classical_energy() -> Result<Outcome> {
    let t = 100.0;
    let ratio = internal_energy(t)? / t;
    let rel = (ratio / 3.5 - 1.0).abs();
    outcome(
        rel <= 5e-3,
        format!("u/t at t = 100 is {ratio:.6} (3.5 within 0.5%: rel {rel:.2e})"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, Check); 11] = [
        ("1", "Airy-zero asymptotics", airy_zero_asymptotics),
        ("2", "ground-state energy", ground_state_energy),
        ("3", "chemical-potential curvature", chemical_potential_curvature),
        ("4", "zero-temperature internal energy", zero_temperature_energy),
        ("5", "bottom-density expansion", bottom_density_expansion),
        ("6", "worked numbers at 1 mK", worked_numbers),
        ("7", "number conservation", number_conservation),
        ("8", "double-integral reduction", double_integral_reduction),
        ("9", "orthonormality", orthonormality),
        ("10a", "barometric limit", barometric_limit),
        ("10b", "classical internal energy", classical_energy),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        let (pass, detail) = match check() {
            Ok(o) => (o.pass, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        if !pass {
            failed += 1;
        }
        println!(
            "criterion {id:<3} {:<4} {name}: {detail}",
            if pass { "PASS" } else { "FAIL" }
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
