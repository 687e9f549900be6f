//! Special functions: Airy functions and their zeros, and complete
//! Fermi-Dirac integrals of half-integer order.

mod airy;
mod fermi;

pub use airy::{airy_ai, airy_ai_prime, airy_zero, airy_zero_asymptotic, AiryZero, AIRY_DOMAIN};
pub(crate) use airy::ai_and_derivative;
pub use fermi::{fermi_dirac, sommerfeld, FermiDiracOrder, FERMI_DIRAC_ETA_MAX};

