//! Physical constants, the gravitational length and energy scales, and unit
//! conversions.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};

/// Elementary charge in coulomb (exact in the 2019 SI). Only used to express
/// energies in electronvolts.
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;

/// The four constants every formula in the crate depends on, in SI units.
///
/// The defaults are the CODATA 2018 values with standard gravity. Any of
/// them can be overridden, e.g. to study how the spectrum depends on `g`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Neutron mass (kg).
    pub m: f64,
    /// Gravitational acceleration (m/s²).
    pub g: f64,
    /// Reduced Planck constant (J·s).
    pub hbar: f64,
    /// Boltzmann constant (J/K).
    pub k_b: f64,
}

impl PhysicalConstants {
    pub const CODATA_2018: Self = Self {
        m: 1.674_927_498_04e-27,
        g: 9.806_65,
        hbar: 1.054_571_817e-34,
        k_b: 1.380_649e-23,
    };

    /// Builds a constant set, rejecting non-positive or non-finite values.
    pub fn new(m: f64, g: f64, hbar: f64, k_b: f64) -> Result<Self> {
        let c = Self { m, g, hbar, k_b };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        for (what, value) in [
            ("m", self.m),
            ("g", self.g),
            ("hbar", self.hbar),
            ("k_b", self.k_b),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(domain(what, value, "(0, inf)"));
            }
        }
        Ok(())
    }

    /// Planck constant h = 2πħ.
    pub fn h(&self) -> f64 {
        2.0 * PI * self.hbar
    }

    pub fn scales(&self) -> GravityScales {
        derive_scales(self)
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::CODATA_2018
    }
}

pub fn default_constants() -> PhysicalConstants {
    PhysicalConstants::CODATA_2018
}

/// Natural scales of a particle of mass `m` above a hard floor in a uniform
/// field `g`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GravityScales {
    /// α = 2m²g/ħ² (m⁻³).
    pub alpha: f64,
    /// (mg²ħ²/2)^{1/3} (J).
    pub e_g: f64,
    /// (ħ²/2m²g)^{1/3} (m).
    pub l_g: f64,
}

pub fn derive_scales(c: &PhysicalConstants) -> GravityScales {
    let hbar2 = c.hbar * c.hbar;
    GravityScales {
        alpha: 2.0 * c.m * c.m * c.g / hbar2,
        e_g: (c.m * c.g * c.g * hbar2 / 2.0).cbrt(),
        l_g: (hbar2 / (2.0 * c.m * c.m * c.g)).cbrt(),
    }
}

/// Units accepted at the I/O boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    Joule,
    /// 10⁻¹² eV.
    PicoElectronVolt,
    /// Energy expressed as a temperature, E = k_B·T.
    Kelvin,
    Millikelvin,
    Meter,
    Centimeter,
    Micrometer,
    PerCubicMeter,
    PerCubicCentimeter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Energy,
    Length,
    NumberDensity,
}

impl Unit {
    pub const ALL: [Unit; 9] = [
        Unit::Joule,
        Unit::PicoElectronVolt,
        Unit::Kelvin,
        Unit::Millikelvin,
        Unit::Meter,
        Unit::Centimeter,
        Unit::Micrometer,
        Unit::PerCubicMeter,
        Unit::PerCubicCentimeter,
    ];

    pub fn dimension(self) -> Dimension {
        match self {
            Unit::Joule | Unit::PicoElectronVolt | Unit::Kelvin | Unit::Millikelvin => {
                Dimension::Energy
            }
            Unit::Meter | Unit::Centimeter | Unit::Micrometer => Dimension::Length,
            Unit::PerCubicMeter | Unit::PerCubicCentimeter => Dimension::NumberDensity,
        }
    }

    /// Size of one of `self` in SI units.
    fn si_factor(self, c: &PhysicalConstants) -> f64 {
        match self {
            Unit::Joule | Unit::Meter | Unit::PerCubicMeter => 1.0,
            Unit::PicoElectronVolt => ELEMENTARY_CHARGE * 1e-12,
            Unit::Kelvin => c.k_b,
            Unit::Millikelvin => c.k_b * 1e-3,
            Unit::Centimeter => 1e-2,
            Unit::Micrometer => 1e-6,
            Unit::PerCubicCentimeter => 1e6,
        }
    }
}

/// Converts `value` from one unit to another of the same dimension.
pub fn convert(value: f64, from: Unit, to: Unit, c: &PhysicalConstants) -> Result<f64> {
    if from.dimension() != to.dimension() {
        return Err(Error::DimensionMismatch { from, to });
    }
    if from == to {
        return Ok(value);
    }
    Ok(value * from.si_factor(c) / to.si_factor(c))
}
