//! Local number density of the gas as a function of height.
//!
//! In the semiclassical (local density) picture each height z holds a free
//! Fermi gas with local chemical potential μ − mgz. Integrating the
//! occupation over momenta, with both spin states,
//!
//! ```text
//! n(T, z) = (2m k_BT)^{3/2} / (2π²ħ³) · F_{1/2}(η − mgz/k_BT)
//! ```
//!
//! which at T = 0 becomes (2m(ε_F − mgz))^{3/2}/(3π²ħ³) below the column
//! height ε_F/mg and zero above it.

use std::f64::consts::PI;

use crate::constants::PhysicalConstants;
use crate::error::{domain, Result};
use crate::specfun::{fermi_dirac, FermiDiracOrder, FERMI_DIRAC_ETA_MAX};
use crate::thermo::{GasSpec, ThermoPoint};

/// Coefficient of the zero-temperature density.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DensityConvention {
    /// Both spin states counted: 1/(3π²). Consistent with the Fermi energy.
    #[default]
    SpinSummed,
    /// One spin state: 1/(6π²), half the spin-summed value.
    SingleSpin,
}

impl DensityConvention {
    /// Density under this convention relative to the spin-summed one.
    pub fn factor(self) -> f64 {
        match self {
            Self::SpinSummed => 1.0,
            Self::SingleSpin => 0.5,
        }
    }

    fn denominator(self) -> f64 {
        match self {
            Self::SpinSummed => 3.0 * PI * PI,
            Self::SingleSpin => 6.0 * PI * PI,
        }
    }
}

fn check_height(z: f64) -> Result<()> {
    if z >= 0.0 {
        Ok(())
    } else {
        Err(domain("z", z, "[0, inf)"))
    }
}

/// n(T, z) in m⁻³ at reduced temperature `t`.
pub fn density(t: f64, z: f64, spec: &GasSpec, c: &PhysicalConstants) -> Result<f64> {
    density_at(&ThermoPoint::at_temperature(t)?, z, spec, c)
}

/// n(T, z) for an already solved thermodynamic point.
pub fn density_at(point: &ThermoPoint, z: f64, spec: &GasSpec, c: &PhysicalConstants) -> Result<f64> {
    check_height(z)?;
    if point.t == 0.0 {
        return density_zero_t(z, spec, c, DensityConvention::SpinSummed);
    }
    let kt = point.t * spec.fermi_energy();
    let arg = point.eta - c.m * c.g * z / kt;
    let prefactor = (2.0 * c.m * kt).powf(1.5) / (2.0 * PI * PI * c.hbar.powi(3));
    Ok(prefactor * occupied(arg)?)
}

/// F_{1/2}(η), flushed to zero far in the classical tail.
fn occupied(eta: f64) -> Result<f64> {
    if eta < -FERMI_DIRAC_ETA_MAX {
        Ok(0.0)
    } else {
        fermi_dirac(FermiDiracOrder::Half, eta)
    }
}

/// n(0, z) in m⁻³: (2m(ε_F − mgz))^{3/2}/(3π²ħ³) for mgz < ε_F, else 0.
pub fn density_zero_t(
    z: f64,
    spec: &GasSpec,
    c: &PhysicalConstants,
    convention: DensityConvention,
) -> Result<f64> {
    check_height(z)?;
    let headroom = spec.fermi_energy() - c.m * c.g * z;
    if headroom <= 0.0 {
        return Ok(0.0);
    }
    Ok((2.0 * c.m * headroom).powf(1.5) / (convention.denominator() * c.hbar.powi(3)))
}

/// n(0, 0) for Fermi energy `eps_f` (J), in m⁻³.
pub fn bottom_density_zero_t(eps_f: f64, c: &PhysicalConstants, convention: DensityConvention) -> f64 {
    (2.0 * c.m * eps_f).powf(1.5) / (convention.denominator() * c.hbar.powi(3))
}

/// n(T, 0)/n(0, 0) = (3/2)(βε_F)^{-3/2}·F_{1/2}(η).
pub fn density_ratio_at_bottom(t: f64) -> Result<f64> {
    reduced_density(&ThermoPoint::at_temperature(t)?, 0.0)
}

/// Closed-form low-temperature approximant 1 − (5π²/8)t² of
/// [`density_ratio_at_bottom`]. The exact curvature is π²/4.
pub fn density_ratio_sommerfeld(t: f64) -> f64 {
    1.0 - 5.0 * PI * PI / 8.0 * t * t
}

/// n(T, z)/n(0, 0) at reduced height `x = mgz/ε_F`. Independent of the
/// constants and of N, L.
pub fn reduced_density(point: &ThermoPoint, x: f64) -> Result<f64> {
    check_height(x)?;
    if point.t == 0.0 {
        return Ok((1.0 - x).max(0.0).powf(1.5));
    }
    let t = point.t;
    Ok(1.5 * t * t.sqrt() * occupied(point.eta - x / t)?)
}

/// Reduced heights mgz/ε_F for a profile: `steps` uniform points on
/// [0, 1.5], extended by `steps/4` further points up to 1.5 + 10t when the
/// thermal tail reaches beyond the grid (t > 0.5).
pub fn profile_heights(t: f64, steps: usize) -> Vec<f64> {
    const TOP: f64 = 1.5;
    let steps = steps.max(2);
    let mut xs: Vec<f64> = (0..steps)
        .map(|i| TOP * i as f64 / (steps - 1) as f64)
        .collect();
    if t > 0.5 {
        let extra = (steps / 4).max(1);
        let span = 10.0 * t;
        xs.extend((1..=extra).map(|i| TOP + span * i as f64 / extra as f64));
    }
    xs
}

/// Density on a height grid at one temperature.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityProfile {
    pub t: f64,
    /// Heights (m).
    pub zs: Vec<f64>,
    /// Densities (m⁻³).
    pub ns: Vec<f64>,
    /// Fermi energy (J).
    pub eps_f: f64,
}

impl DensityProfile {
    pub fn compute(t: f64, steps: usize, spec: &GasSpec, c: &PhysicalConstants) -> Result<Self> {
        let point = ThermoPoint::at_temperature(t)?;
        let height = spec.column_height(c);
        let zs: Vec<f64> = profile_heights(t, steps).into_iter().map(|x| x * height).collect();
        let ns = zs
            .iter()
            .map(|&z| density_at(&point, z, spec, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            t,
            zs,
            ns,
            eps_f: spec.fermi_energy(),
        })
    }
}

/// One point of the bottom density against the Fermi energy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FermiDensityPoint {
    /// ε_F/k_B (K).
    pub fermi_temperature: f64,
    /// n(0, 0) (cm⁻³).
    pub density_cm3: f64,
}

/// n(0, 0) over a grid of Fermi energies (J), in display units.
pub fn bottom_density_vs_fermi(
    eps_f_grid: &[f64],
    c: &PhysicalConstants,
    convention: DensityConvention,
) -> Result<Vec<FermiDensityPoint>> {
    eps_f_grid
        .iter()
        .map(|&eps_f| {
            if !(eps_f > 0.0 && eps_f.is_finite()) {
                return Err(domain("eps_F", eps_f, "(0, inf)"));
            }
            Ok(FermiDensityPoint {
                fermi_temperature: eps_f / c.k_b,
                density_cm3: bottom_density_zero_t(eps_f, c, convention) * 1e-6,
            })
        })
        .collect()
}

/// Mean separation against thermal wavelength.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DilutenessReport {
    /// n (m⁻³).
    pub density: f64,
    /// R̄ = n^{-1/3} (m).
    pub mean_separation: f64,
    /// λ̄ = h/(3mk_BT)^{1/2} (m).
    pub thermal_wavelength: f64,
    /// R̄ ≤ λ̄.
    pub degenerate: bool,
}

/// Compares the mean separation at density `n` (m⁻³) with the thermal
/// wavelength at temperature `temperature` (K).
pub fn diluteness(n: f64, temperature: f64, c: &PhysicalConstants) -> Result<DilutenessReport> {
    if !(n > 0.0 && n.is_finite()) {
        return Err(domain("n", n, "(0, inf)"));
    }
    if !(temperature > 0.0 && temperature.is_finite()) {
        return Err(domain("T", temperature, "(0, inf)"));
    }
    let mean_separation = n.cbrt().recip();
    let thermal_wavelength = c.h() / (3.0 * c.m * c.k_b * temperature).sqrt();
    Ok(DilutenessReport {
        density: n,
        mean_separation,
        thermal_wavelength,
        degenerate: mean_separation <= thermal_wavelength,
    })
}
