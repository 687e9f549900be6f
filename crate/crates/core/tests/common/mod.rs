//! Reference computations that share no code with the library: a
//! double-exponential quadrature and a finite-difference eigenvalue solver.
#![allow(dead_code)]

use std::f64::consts::FRAC_PI_2;

/// Tanh-sinh quadrature of `f` over `[a, b]`. Halves the step until two
/// successive estimates agree to `rel`. Integrable endpoint singularities
/// are fine; `f` is never evaluated at the endpoints.
pub fn tanh_sinh<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, rel: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    let half = 0.5 * (b - a);
    // Contribution of the abscissae at ±t.
    let pair = |t: f64| -> f64 {
        let u = FRAC_PI_2 * t.sinh();
        let cosh_u = u.cosh();
        let w = FRAC_PI_2 * t.cosh() / (cosh_u * cosh_u);
        // Distance of the node from the nearer endpoint, in units of `half`.
        let gap = (-u.abs()).exp() / cosh_u;
        if gap == 0.0 || !w.is_finite() {
            return 0.0;
        }
        let (lo, hi) = (a + half * gap, b - half * gap);
        if t == 0.0 {
            w * f(0.5 * (a + b))
        } else {
            w * (f(lo) + f(hi))
        }
    };
    let t_max = 3.5;
    let mut h = 0.5;
    let mut sum = pair(0.0);
    let mut k = 1;
    while k as f64 * h <= t_max {
        sum += pair(k as f64 * h);
        k += 1;
    }
    let mut estimate = half * h * sum;
    for _ in 0..12 {
        h *= 0.5;
        let mut k = 1;
        while k as f64 * h <= t_max {
            sum += pair(k as f64 * h);
            k += 2;
        }
        let next = half * h * sum;
        let converged = (next - estimate).abs() <= rel * next.abs();
        estimate = next;
        if converged {
            break;
        }
    }
    estimate
}

/// [`tanh_sinh`] over `[a, b]` split at `breaks` and into panels no wider
/// than `width`.
pub fn panels<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, breaks: &[f64], width: f64, rel: f64) -> f64 {
    let mut edges = vec![a];
    edges.extend(breaks.iter().copied().filter(|&x| x > a && x < b));
    edges.push(b);
    let mut total = 0.0;
    for w in edges.windows(2) {
        let n = ((w[1] - w[0]) / width).ceil().max(1.0) as usize;
        let step = (w[1] - w[0]) / n as f64;
        for i in 0..n {
            let lo = w[0] + step * i as f64;
            let hi = if i + 1 == n { w[1] } else { lo + step };
            total += tanh_sinh(&f, lo, hi, rel);
        }
    }
    total
}

/// Fermi factor 1/(e^y + 1).
pub fn fermi(y: f64) -> f64 {
    if y > 0.0 {
        let e = (-y).exp();
        e / (1.0 + e)
    } else {
        1.0 / (1.0 + y.exp())
    }
}

/// ∫₀^∞ ζ^{1/2}·w(υ)/(e^{ζ+υ−η}+1) dζ dυ by nested quadrature, with the
/// υ-weight `w`.
pub fn nested_fermi<W: Fn(f64) -> f64>(eta: f64, weight: W) -> f64 {
    const SPAN: f64 = 60.0;
    let top = eta.max(0.0) + SPAN;
    let inner = |v: f64| {
        let edge = (eta - v).max(0.0);
        panels(
            |z| z.sqrt() * fermi(z + v - eta),
            0.0,
            edge + SPAN,
            &[edge],
            8.0,
            1e-13,
        )
    };
    panels(|v| weight(v) * inner(v), 0.0, top, &[eta.max(0.0)], 8.0, 1e-12)
}

/// Lowest `count` eigenvalues of −ψ'' + ξψ = εψ on [0, span] with
/// ψ(0) = ψ(span) = 0, from the three-point finite-difference matrix on
/// `points` interior nodes, located by Sturm-sequence bisection.
pub fn bouncer_levels_fd(count: usize, points: usize, span: f64) -> Vec<f64> {
    let h = span / (points + 1) as f64;
    let off2 = 1.0 / h.powi(4);
    let diag: Vec<f64> = (1..=points).map(|i| 2.0 / (h * h) + i as f64 * h).collect();
    // Number of eigenvalues below `lambda`.
    let below = |lambda: f64| -> usize {
        let mut q = 1.0;
        let mut negatives = 0;
        for (i, &d) in diag.iter().enumerate() {
            q = d - lambda - if i == 0 { 0.0 } else { off2 / q };
            if q == 0.0 {
                q = -1e-300;
            }
            if q < 0.0 {
                negatives += 1;
            }
        }
        negatives
    };
    (1..=count)
        .map(|k| {
            let (mut lo, mut hi) = (0.0, span);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if below(mid) >= k {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            0.5 * (lo + hi)
        })
        .collect()
}
