//! Bound states of one neutron above a hard floor in a uniform field, and
//! the box-plus-gravity spectrum used for counting states.
//!
//! With the floor at z = 0 the eigenfunctions are shifted Airy functions,
//! ψ_n(z) = N_n·Ai(z/l_g + a_n), and the energies are E_n = e_g·|a_n| where
//! a_n is the n-th zero of Ai.

use std::f64::consts::PI;

use crate::constants::PhysicalConstants;
use crate::error::{domain, Result};
use crate::specfun::{ai_and_derivative, airy_zero, airy_zero_asymptotic, AiryZero};

/// Margin beyond the classical turning point, in units of l_g, after which
/// |ψ|² is below 1e-14 of its peak.
const TAIL_LENGTHS: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenState {
    pub n_z: u32,
    /// E_{n_z} (J).
    pub energy: f64,
    pub zero: AiryZero,
    /// α^{1/6}/|Ai'(a_{n_z})| (m^{-1/2}).
    pub norm: f64,
    /// Gravitational length l_g = α^{-1/3} (m).
    length: f64,
    /// m·g (N).
    weight: f64,
}

impl EigenState {
    pub fn new(n_z: u32, c: &PhysicalConstants) -> Result<Self> {
        let zero = airy_zero(n_z)?;
        let scales = c.scales();
        let slope = ai_and_derivative(zero.value).1;
        Ok(Self {
            n_z,
            energy: scales.e_g * zero.value.abs(),
            zero,
            norm: scales.alpha.powf(1.0 / 6.0) / slope.abs(),
            length: scales.l_g,
            weight: c.m * c.g,
        })
    }

    /// ψ_{n_z}(z) in m^{-1/2}. Heights below the floor are rejected.
    pub fn wavefunction(&self, z: f64) -> Result<f64> {
        if z.is_nan() || z < 0.0 {
            return Err(domain("z", z, "[0, inf)"));
        }
        Ok(self.norm * ai_and_derivative(z / self.length + self.zero.value).0)
    }

    /// Height where E_{n_z} = mgz.
    pub fn turning_point(&self) -> f64 {
        self.energy / self.weight
    }

    /// Upper integration limit for overlaps: the turning point plus ten
    /// gravitational lengths.
    pub fn extent(&self) -> f64 {
        self.turning_point() + TAIL_LENGTHS * self.length
    }
}

/// E_{n_z} from the exact Airy zero, `1 <= n_z <= 1000`.
pub fn eigen_energy_exact(n_z: u32, c: &PhysicalConstants) -> Result<f64> {
    Ok(c.scales().e_g * airy_zero(n_z)?.value.abs())
}

/// E_{n_z} ≈ (mg²ħ²/2)^{1/3}·(3π/8)^{2/3}·(4n_z − 1)^{2/3}.
///
/// # Panics
///
/// If `n_z == 0`.
pub fn eigen_energy_asymptotic(n_z: u32, c: &PhysicalConstants) -> f64 {
    c.scales().e_g * airy_zero_asymptotic(n_z).abs()
}

/// Side length of the square cross-section with hard walls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxSpec {
    l: f64,
}

impl BoxSpec {
    pub fn new(l: f64) -> Result<Self> {
        if l.is_finite() && l > 0.0 {
            Ok(Self { l })
        } else {
            Err(domain("L", l, "(0, inf)"))
        }
    }

    pub fn side_length(&self) -> f64 {
        self.l
    }
}

/// Infinite square well level π²ħ²n²/(2mL²).
pub fn box_energy(n: u32, b: &BoxSpec, c: &PhysicalConstants) -> f64 {
    let n = n as f64;
    PI * PI * c.hbar * c.hbar * n * n / (2.0 * c.m * b.l * b.l)
}

/// Which vertical levels enter [`total_energy`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GravityLevels {
    /// Closed-form asymptotic levels.
    #[default]
    Asymptotic,
    /// Levels from the refined Airy zeros.
    Exact,
}

/// E_{n_x} + E_{n_y} + E_{n_z}: two box levels plus one gravity level.
pub fn total_energy(
    n_x: u32,
    n_y: u32,
    n_z: u32,
    b: &BoxSpec,
    c: &PhysicalConstants,
    levels: GravityLevels,
) -> Result<f64> {
    if n_x == 0 || n_y == 0 || n_z == 0 {
        return Err(domain("quantum number", 0.0, "[1, inf)"));
    }
    let vertical = match levels {
        GravityLevels::Asymptotic => eigen_energy_asymptotic(n_z, c),
        GravityLevels::Exact => eigen_energy_exact(n_z, c)?,
    };
    Ok(box_energy(n_x, b, c) + box_energy(n_y, b, c) + vertical)
}
