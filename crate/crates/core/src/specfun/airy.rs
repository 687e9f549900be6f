//! Airy function of the first kind on the real line.
//!
//! Evaluation strategy:
//!
//! * `|x| <= 2`: Maclaurin series.
//! * `-10 <= x < -2`: Taylor steps of length 1/2 marching out from the
//!   origin. The oscillatory region is neutrally stable in both directions.
//! * `2 < x <= 8`: Taylor steps marching in from the large-x asymptotic
//!   value at `x = 8`. Ai is the dominant solution in that direction.
//! * `x > 8` and `x < -10`: the standard asymptotic expansions, truncated at
//!   the smallest term. Their remainders are below 1e-13 at the switch
//!   points.
//!
//! The Taylor coefficients come from the Airy equation y'' = x·y itself.

use std::f64::consts::{FRAC_PI_4, PI};

use crate::error::{domain, Result};
use crate::numeric::{brent, expand_bracket};

const AI_0: f64 = 0.355_028_053_887_817_2;
const AI_PRIME_0: f64 = -0.258_819_403_792_806_8;

const MACLAURIN_LIMIT: f64 = 2.0;
const DECAYING_SWITCH: f64 = 8.0;
const OSCILLATORY_SWITCH: f64 = -10.0;
const MARCH_STEP: f64 = 0.5;

/// Arguments accepted by [`airy_ai`] and [`airy_ai_prime`].
pub const AIRY_DOMAIN: (f64, f64) = (-120.0, 40.0);

const MAX_ZERO_INDEX: u32 = 1000;

/// Ai(x) for `x` in [`AIRY_DOMAIN`].
pub fn airy_ai(x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok(ai_and_derivative(x).0)
}

/// Ai'(x) for `x` in [`AIRY_DOMAIN`].
pub fn airy_ai_prime(x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok(ai_and_derivative(x).1)
}

fn check_domain(x: f64) -> Result<()> {
    if (AIRY_DOMAIN.0..=AIRY_DOMAIN.1).contains(&x) {
        Ok(())
    } else {
        Err(domain("x", x, "[-120, 40]"))
    }
}

/// (Ai(x), Ai'(x)) without a domain check. The asymptotic branches stay
/// accurate well below -120 (the phase loses about `ulp(|x|^{3/2})`), which
/// the zero finder relies on for high indices.
pub(crate) fn ai_and_derivative(x: f64) -> (f64, f64) {
    if x > DECAYING_SWITCH {
        decaying(x)
    } else if x > MACLAURIN_LIMIT {
        let (y, dy) = decaying(DECAYING_SWITCH);
        march(DECAYING_SWITCH, y, dy, x)
    } else if x >= -MACLAURIN_LIMIT {
        taylor(0.0, AI_0, AI_PRIME_0, x)
    } else if x >= OSCILLATORY_SWITCH {
        march(0.0, AI_0, AI_PRIME_0, x)
    } else {
        oscillatory(-x)
    }
}

/// (Bi(x), Bi'(x)) from the Maclaurin series. Only used to check the
/// Wronskian; accurate for moderate |x|.
#[cfg(test)]
pub(crate) fn bi_and_derivative(x: f64) -> (f64, f64) {
    let s3 = 3f64.sqrt();
    taylor(0.0, s3 * AI_0, -s3 * AI_PRIME_0, x)
}

/// Advances the solution (y, y') of y'' = x·y from `x0` to `target` in
/// steps of at most [`MARCH_STEP`].
fn march(mut x0: f64, mut y: f64, mut dy: f64, target: f64) -> (f64, f64) {
    while x0 != target {
        let h = (target - x0).clamp(-MARCH_STEP, MARCH_STEP);
        (y, dy) = taylor(x0, y, dy, h);
        x0 += h;
        if (target - x0).abs() < 1e-15 * target.abs().max(1.0) {
            x0 = target;
        }
    }
    (y, dy)
}

/// Sums the Taylor series of the Airy-equation solution with y(x0) = y0,
/// y'(x0) = dy0 at x0 + h. Returns (y, y').
///
/// With c_k = a_k h^k the recurrence reads
/// c_{k+2} = (x0 h² c_k + h³ c_{k-1}) / ((k+1)(k+2)).
fn taylor(x0: f64, y0: f64, dy0: f64, h: f64) -> (f64, f64) {
    if h == 0.0 {
        return (y0, dy0);
    }
    let h2 = h * h;
    let h3 = h2 * h;
    let mut c_km1 = 0.0;
    let mut c_k = y0;
    let mut c_kp1 = dy0 * h;
    let mut y = y0 + c_kp1;
    let mut dyh = c_kp1;
    let mut scale = c_k.abs().max(c_kp1.abs());
    let mut small_run = 0;
    for k in 0..400 {
        let c_next = (x0 * h2 * c_k + h3 * c_km1) / ((k + 1) as f64 * (k + 2) as f64);
        y += c_next;
        dyh += (k + 2) as f64 * c_next;
        scale = scale.max(c_next.abs());
        if c_next.abs() <= 1e-18 * scale {
            small_run += 1;
            if small_run >= 3 {
                break;
            }
        } else {
            small_run = 0;
        }
        c_km1 = c_k;
        c_k = c_kp1;
        c_kp1 = c_next;
    }
    (y, dyh / h)
}

/// Coefficients u_k of the Airy asymptotic expansions up to the index
/// where u_k/ζ^k stops decreasing.
fn asymptotic_u(zeta: f64) -> Vec<f64> {
    let mut u = vec![1.0];
    let mut prev_term = 1.0;
    for k in 1..200 {
        let kf = k as f64;
        let next = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
        let term = next / zeta.powi(k as i32);
        if term >= prev_term || term < 1e-20 {
            break;
        }
        u.push(next);
        prev_term = term;
    }
    u
}

fn v_from_u(k: usize, u: f64) -> f64 {
    let kf = k as f64;
    -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u
}

/// Exponentially decaying expansion for large positive x.
fn decaying(x: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * x * x.sqrt();
    let u = asymptotic_u(zeta);
    let mut sum_u = 0.0;
    let mut sum_v = 0.0;
    let mut power = 1.0;
    for (k, &uk) in u.iter().enumerate() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum_u += sign * uk * power;
        sum_v += sign * v_from_u(k, uk) * power;
        power /= zeta;
    }
    let prefactor = (-zeta).exp() / (2.0 * PI.sqrt());
    let q = x.sqrt().sqrt();
    (prefactor * sum_u / q, -prefactor * q * sum_v)
}

/// Oscillatory expansion of (Ai(-z), Ai'(-z)) for large positive z.
fn oscillatory(z: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * z * z.sqrt();
    let u = asymptotic_u(zeta);
    let (mut pu, mut qu, mut pv, mut qv) = (0.0, 0.0, 0.0, 0.0);
    let mut power = 1.0;
    for (k, &uk) in u.iter().enumerate() {
        let vk = v_from_u(k, uk);
        // (-1)^{floor(k/2)}
        let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
        if k % 2 == 0 {
            pu += sign * uk * power;
            pv += sign * vk * power;
        } else {
            qu += sign * uk * power;
            qv += sign * vk * power;
        }
        power /= zeta;
    }
    let (sin, cos) = (zeta - FRAC_PI_4).sin_cos();
    let q = z.sqrt().sqrt();
    let rsp = 1.0 / PI.sqrt();
    (
        rsp / q * (cos * pu + sin * qu),
        rsp * q * (sin * pv - cos * qv),
    )
}

/// The `n`-th zero of Ai on the negative real axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryZero {
    pub n: u32,
    pub value: f64,
}

/// Leading-order asymptotic location of the `n`-th zero,
/// -(3π(4n-1)/8)^{2/3}.
///
/// # Panics
///
/// If `n == 0`.
pub fn airy_zero_asymptotic(n: u32) -> f64 {
    assert!(n >= 1, "Airy zeros are indexed from 1");
    -(3.0 * PI * (4.0 * n as f64 - 1.0) / 8.0).powf(2.0 / 3.0)
}

/// Locates the `n`-th negative zero of Ai, `1 <= n <= 1000`, starting from
/// the asymptotic estimate and refining with Brent's method.
pub fn airy_zero(n: u32) -> Result<AiryZero> {
    if !(1..=MAX_ZERO_INDEX).contains(&n) {
        return Err(domain("n", n as f64, "[1, 1000]"));
    }
    let seed = airy_zero_asymptotic(n);
    // Spacing between neighbouring zeros is about π/√|a_n|.
    let half_width = 0.4 * PI / seed.abs().sqrt();
    let ai = |x: f64| ai_and_derivative(x).0;
    let (lo, hi) = expand_bracket(ai, seed - half_width, seed + half_width, 0.1 * half_width, 5)?;
    let value = brent(ai, lo, hi, 0.0)?;
    Ok(AiryZero { n, value })
}
