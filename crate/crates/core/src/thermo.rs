//! Bulk thermodynamics of the ideal neutron gas in a box of cross-section
//! L² standing on a hard floor in the field `g`.
//!
//! Quantities are reduced by the zero-temperature Fermi energy ε_F:
//! `t = k_B T/ε_F`, `η = μ/k_B T`, `βε_F = 1/t`. The number equation
//!
//! ```text
//! (βε_F)^{5/2} = (5/2)·F_{3/2}(η)
//! ```
//!
//! ties η to t. The gravitational field turns the single-particle density of
//! states into g(E) ∝ E^{3/2}, in place of the E^{1/2} of the free gas,
//! which is what separates the two sets of curves computed here.

use std::f64::consts::PI;

use crate::constants::PhysicalConstants;
use crate::error::{domain, Error, Result};
use crate::numeric::brent;
use crate::specfun::{fermi_dirac, FermiDiracOrder, FERMI_DIRAC_ETA_MAX};

/// Spin states per momentum state.
pub const SPIN_DEGENERACY: f64 = 2.0;

/// Reduced temperatures accepted by the finite-temperature solvers.
pub const T_RANGE: (f64, f64) = (1e-4, 1e3);

/// Lower end of the initial η bracket for the number equation.
const ETA_BRACKET_LOW: f64 = -50.0;

/// ε_F = (ħ²/2m)·(15π²m²g·N/(ħ²L²))^{2/5}, with both spin states filled.
pub fn fermi_energy(n: f64, l: f64, c: &PhysicalConstants) -> Result<f64> {
    positive("N", n)?;
    positive("L", l)?;
    let hbar2 = c.hbar * c.hbar;
    Ok(hbar2 / (2.0 * c.m)
        * (15.0 * PI * PI * c.m * c.m * c.g * n / (hbar2 * l * l)).powf(0.4))
}

/// Inverse of [`fermi_energy`]: the particle number that fills the box up to
/// `eps_f` at zero temperature.
pub fn particle_number(eps_f: f64, l: f64, c: &PhysicalConstants) -> Result<f64> {
    positive("eps_F", eps_f)?;
    positive("L", l)?;
    let hbar2 = c.hbar * c.hbar;
    Ok((2.0 * c.m * eps_f / hbar2).powf(2.5) * hbar2 * l * l
        / (15.0 * PI * PI * c.m * c.m * c.g))
}

fn positive(what: &'static str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(domain(what, v, "(0, inf)"))
    }
}

/// Particle number, box size and the Fermi energy they imply.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasSpec {
    n: f64,
    l: f64,
    eps_f: f64,
}

impl GasSpec {
    /// `n` may be fractional, e.g. when derived from an areal density.
    pub fn new(n: f64, l: f64, c: &PhysicalConstants) -> Result<Self> {
        Ok(Self {
            n,
            l,
            eps_f: fermi_energy(n, l, c)?,
        })
    }

    /// The gas whose Fermi energy is `eps_f` in a box of side `l`.
    pub fn from_fermi_energy(eps_f: f64, l: f64, c: &PhysicalConstants) -> Result<Self> {
        Ok(Self {
            n: particle_number(eps_f, l, c)?,
            l,
            eps_f,
        })
    }

    pub fn particle_number(&self) -> f64 {
        self.n
    }

    pub fn side_length(&self) -> f64 {
        self.l
    }

    pub fn fermi_energy(&self) -> f64 {
        self.eps_f
    }

    /// Classical turning height of a particle at the Fermi energy, ε_F/mg.
    pub fn column_height(&self, c: &PhysicalConstants) -> f64 {
        self.eps_f / (c.m * c.g)
    }
}

/// βε_F = ((5/2)·F_{3/2}(η))^{2/5}.
pub fn beta_epsf_from_eta(eta: f64) -> Result<f64> {
    Ok((2.5 * fermi_dirac(FermiDiracOrder::ThreeHalves, eta)?).powf(0.4))
}

fn check_t(t: f64) -> Result<()> {
    if (T_RANGE.0..=T_RANGE.1).contains(&t) {
        Ok(())
    } else {
        Err(domain("t", t, "[1e-4, 1e3]"))
    }
}

/// Solves `beta_epsf(η) = 1/t` for η, where `beta_epsf` is increasing.
fn invert_number_equation<F: Fn(f64) -> Result<f64>>(t: f64, beta_epsf: F) -> Result<f64> {
    check_t(t)?;
    // μ < ε_F for t > 0, so η < 1/t.
    let hi = (2.0 / t).min(FERMI_DIRAC_ETA_MAX);
    let residual = |eta: f64| beta_epsf(eta).map(|b| b * t - 1.0).unwrap_or(f64::NAN);
    let mut lo = ETA_BRACKET_LOW;
    while residual(lo) > 0.0 {
        if lo <= -FERMI_DIRAC_ETA_MAX {
            return Err(Error::NotBracketed { lo, hi });
        }
        lo = (lo + ETA_BRACKET_LOW).max(-FERMI_DIRAC_ETA_MAX);
    }
    brent(residual, lo, hi, 1e-14)
}

/// Degeneracy parameter η = μ/k_BT at reduced temperature `t`.
pub fn eta_from_t(t: f64) -> Result<f64> {
    invert_number_equation(t, beta_epsf_from_eta)
}

/// State of the gravitating gas at one temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoPoint {
    /// k_BT/ε_F.
    pub t: f64,
    /// μ/k_BT; `+∞` at t = 0.
    pub eta: f64,
    pub mu_over_ef: f64,
    /// U/(Nε_F).
    pub u_over_nef: f64,
}

impl ThermoPoint {
    pub fn zero_temperature() -> Self {
        Self {
            t: 0.0,
            eta: f64::INFINITY,
            mu_over_ef: 1.0,
            u_over_nef: 5.0 / 7.0,
        }
    }

    /// Solves the number equation at `t`; `t == 0` gives the ground state.
    pub fn at_temperature(t: f64) -> Result<Self> {
        if t == 0.0 {
            return Ok(Self::zero_temperature());
        }
        Self::from_parts(t, eta_from_t(t)?)
    }

    /// The point with degeneracy parameter `eta`; no root finding needed.
    pub fn at_eta(eta: f64) -> Result<Self> {
        Self::from_parts(1.0 / beta_epsf_from_eta(eta)?, eta)
    }

    fn from_parts(t: f64, eta: f64) -> Result<Self> {
        Ok(Self {
            t,
            eta,
            mu_over_ef: eta * t,
            u_over_nef: reduced_internal_energy(t, eta)?,
        })
    }

    pub fn beta_epsf(&self) -> f64 {
        1.0 / self.t
    }
}

/// ∫₀^∞∫₀^∞ ζ^{1/2}υ/(e^{ζ+υ-η}+1) dζ dυ, reduced by the Beta-function
/// convolution ∫₀^E ζ^{1/2}(E-ζ) dζ = (4/15)E^{5/2} to (4/15)·F_{5/2}(η).
pub fn energy_cross_term(eta: f64) -> Result<f64> {
    Ok(4.0 / 15.0 * fermi_dirac(FermiDiracOrder::FiveHalves, eta)?)
}

/// U/(Nε_F) = (15/4)(βε_F)^{-7/2}·[(2/5)F_{5/2}(η) + cross term].
fn reduced_internal_energy(t: f64, eta: f64) -> Result<f64> {
    let f52 = fermi_dirac(FermiDiracOrder::FiveHalves, eta)?;
    Ok(3.75 * t.powf(3.5) * (0.4 * f52 + energy_cross_term(eta)?))
}

/// μ/ε_F at reduced temperature `t`.
pub fn mu_over_ef(t: f64) -> Result<f64> {
    Ok(ThermoPoint::at_temperature(t)?.mu_over_ef)
}

/// The closed-form low-temperature approximant 1 − (π²/2)t².
///
/// The exact curvature of 1 − μ/ε_F at small t is π²/4 (the density of
/// states grows as E^{3/2}), see [`mu_over_ef`]; this approximant is kept
/// for comparison tables.
pub fn mu_over_ef_sommerfeld(t: f64) -> f64 {
    1.0 - PI * PI / 2.0 * t * t
}

/// U/(Nε_F) at reduced temperature `t`.
pub fn internal_energy(t: f64) -> Result<f64> {
    Ok(ThermoPoint::at_temperature(t)?.u_over_nef)
}

/// The free (field-free) Fermi gas with the same ε_F, as a baseline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreeGasPoint {
    pub t: f64,
    pub eta: f64,
    pub mu_over_ef: f64,
    pub u_over_nef: f64,
}

impl FreeGasPoint {
    /// Solves (βε_F)^{3/2} = (3/2)F_{1/2}(η); `t == 0` gives μ = ε_F,
    /// U = (3/5)Nε_F.
    pub fn at_temperature(t: f64) -> Result<Self> {
        if t == 0.0 {
            return Ok(Self {
                t,
                eta: f64::INFINITY,
                mu_over_ef: 1.0,
                u_over_nef: 0.6,
            });
        }
        let eta = invert_number_equation(t, |eta| {
            Ok((1.5 * fermi_dirac(FermiDiracOrder::Half, eta)?).powf(2.0 / 3.0))
        })?;
        let f32 = fermi_dirac(FermiDiracOrder::ThreeHalves, eta)?;
        Ok(Self {
            t,
            eta,
            mu_over_ef: eta * t,
            u_over_nef: 1.5 * t.powf(2.5) * f32,
        })
    }
}

pub fn free_gas_mu_over_ef(t: f64) -> Result<f64> {
    Ok(FreeGasPoint::at_temperature(t)?.mu_over_ef)
}

pub fn free_gas_u_over_nef(t: f64) -> Result<f64> {
    Ok(FreeGasPoint::at_temperature(t)?.u_over_nef)
}

/// 1 − (π²/12)t², the textbook low-temperature free-gas result.
pub fn free_gas_mu_over_ef_sommerfeld(t: f64) -> f64 {
    1.0 - PI * PI / 12.0 * t * t
}
