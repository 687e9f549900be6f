//! Thermodynamics of an ideal gas of ultra-cold neutrons stored in a box
//! with a hard floor and hard side walls, in the Earth's gravitational field.
//!
//! The crate is organised bottom-up:
//!
//! * [`constants`]: physical constants, gravitational scales and the few unit
//!   conversions used at I/O boundaries.
//! * [`numeric`]: adaptive quadrature and bracketing root refinement.
//! * [`specfun`]: Airy functions, Airy zeros and complete Fermi-Dirac
//!   integrals of half-integer order.
//! * [`eigen`]: single-neutron bound states above the floor.
//! * [`thermo`]: Fermi energy, chemical potential and internal energy.
//! * [`density`]: local density profile and diluteness diagnostics.
//!
//! All internal computations are in SI units.

pub mod constants;
pub mod density;
pub mod eigen;
mod error;
pub mod numeric;
pub mod specfun;
pub mod thermo;

#[cfg(test)]
#[path = "../tests/common/mod.rs"]
mod oracles;

pub use constants::{GravityScales, PhysicalConstants, Unit};
pub use error::{Error, Result};
pub use thermo::{GasSpec, ThermoPoint};
