//! Complete Fermi-Dirac integrals F_j(η) = ∫₀^∞ ζ^j/(e^{ζ-η}+1) dζ for
//! j ∈ {1/2, 3/2, 5/2}, plus their two-term degenerate (Sommerfeld)
//! expansions.
//!
//! Note the normalisation: no 1/Γ(j+1) prefactor, so F_j(η) → Γ(j+1)e^η for
//! η → -∞ and F_j(η) → η^{j+1}/(j+1) for η → +∞.

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::numeric::{integrate, Tolerance};

/// Largest |η| accepted by [`fermi_dirac`].
pub const FERMI_DIRAC_ETA_MAX: f64 = 1e4;

/// Distance beyond max(η, 0) where the integrand tail is cut. The neglected
/// part is below e^{-64} relative to the integral.
const TAIL_SPAN: f64 = 64.0;

const QUAD_TOL: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FermiDiracOrder {
    Half,
    ThreeHalves,
    FiveHalves,
}

impl FermiDiracOrder {
    pub fn j(self) -> f64 {
        match self {
            Self::Half => 0.5,
            Self::ThreeHalves => 1.5,
            Self::FiveHalves => 2.5,
        }
    }

    /// Γ(j + 1).
    pub fn gamma_j_plus_one(self) -> f64 {
        let sqrt_pi = PI.sqrt();
        match self {
            Self::Half => 0.5 * sqrt_pi,
            Self::ThreeHalves => 0.75 * sqrt_pi,
            Self::FiveHalves => 1.875 * sqrt_pi,
        }
    }

    /// Order j - 1, where it is supported.
    pub fn lower(self) -> Option<Self> {
        match self {
            Self::Half => None,
            Self::ThreeHalves => Some(Self::Half),
            Self::FiveHalves => Some(Self::ThreeHalves),
        }
    }
}

/// 1/(e^y + 1) without overflow.
#[inline]
fn occupation(y: f64) -> f64 {
    if y > 0.0 {
        let e = (-y).exp();
        e / (1.0 + e)
    } else {
        1.0 / (1.0 + y.exp())
    }
}

/// F_j(η) by adaptive quadrature.
///
/// The substitution ζ = x² removes the ζ^{1/2} branch point at the origin.
/// The x-range is split where ζ = max(η, 0) ± 64: the occupation is 1 to
/// within e^{-64} below that window and drops from 1 to 0 inside it.
pub fn fermi_dirac(order: FermiDiracOrder, eta: f64) -> Result<f64> {
    if eta.is_nan() || eta.abs() > FERMI_DIRAC_ETA_MAX {
        return Err(domain("eta", eta, "[-1e4, 1e4]"));
    }
    let power = 2 * match order {
        FermiDiracOrder::Half => 1,
        FermiDiracOrder::ThreeHalves => 2,
        FermiDiracOrder::FiveHalves => 3,
    };
    let integrand = |x: f64| 2.0 * x.powi(power) * occupation(x * x - eta);
    let edge = eta.max(0.0);
    let x_full = (edge - TAIL_SPAN).max(0.0).sqrt();
    let x_edge = edge.sqrt();
    let x_end = (edge + TAIL_SPAN).sqrt();
    let tol = Tolerance::relative(QUAD_TOL);
    let body = integrate(integrand, 0.0, x_full, tol)?.value;
    let window = tol.with_abs(QUAD_TOL * body);
    let below = integrate(integrand, x_full, x_edge, window)?.value;
    let above = integrate(integrand, x_edge, x_end, window)?.value;
    Ok(body + below + above)
}

/// Two-term degenerate expansion of F_j(η), valid for e^{-η} ≪ 1:
///
/// * F_{1/2} ≈ (2/3)η^{3/2} + (π²/12)η^{-1/2}
/// * F_{3/2} ≈ (2/5)η^{5/2} + (π²/4)η^{1/2}
/// * F_{5/2} ≈ (2/7)η^{7/2} + (5π²/12)η^{3/2}
///
/// i.e. the first two terms of F_j(η) = η^{j+1}/(j+1) + (π²/6)·j·η^{j-1} + …
pub fn sommerfeld(order: FermiDiracOrder, eta: f64) -> Result<f64> {
    if eta.is_nan() || eta <= 0.0 || eta.is_infinite() {
        return Err(domain("eta", eta, "(0, inf)"));
    }
    let j = order.j();
    Ok(eta.powf(j + 1.0) / (j + 1.0) + PI * PI / 6.0 * j * eta.powf(j - 1.0))
}
