//! Double-precision layer: Hurwitz zeta, Gamma, the periodic L-function, the
//! A-series, the generalized Eisenstein series and the loop integral.
//!
//! Complex powers use the branch `-π ≤ arg w < π` throughout, so a negative real
//! base has argument `-π`.

mod eisenstein;
mod lseries;
mod loop_integral;
mod series;
mod special;

pub use eisenstein::{eisenstein_g_direct, g_via_fourier, gamma_g_via_fourier, EisensteinArgs};
pub use loop_integral::{loop_i_quadrature, loop_i_quadrature_with_radius, loop_i_residue, LoopArgs};
pub use lseries::{dirichlet_l, periodic_l};
pub use series::a_series;
pub use special::{digamma, gamma_fn, hurwitz_zeta, hurwitz_zeta_f64, rgamma};

use num_complex::Complex64;
use std::f64::consts::PI;

/// Truncation budget for a numeric series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesBudget {
    pub max_terms: usize,
    pub tail_target: f64,
}

impl Default for SeriesBudget {
    fn default() -> Self {
        SeriesBudget { max_terms: 20_000_000, tail_target: 1e-13 }
    }
}

/// A series value together with a bound on what was left out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Series {
    pub value: Complex64,
    pub achieved_tail: f64,
    pub terms: usize,
}

/// Logarithm with `-π ≤ arg w < π`.
pub fn log_branch(w: Complex64) -> Complex64 {
    if w.im == 0.0 && w.re < 0.0 {
        Complex64::new((-w.re).ln(), -PI)
    } else if w.im == 0.0 {
        Complex64::new(w.re.ln(), 0.0)
    } else {
        w.ln()
    }
}

/// `w^e` on the `-π ≤ arg w < π` branch.
pub fn cpow(w: Complex64, e: Complex64) -> Complex64 {
    if e == Complex64::new(0.0, 0.0) {
        return Complex64::new(1.0, 0.0);
    }
    if e.im == 0.0 && e.re.fract() == 0.0 && e.re.abs() < 1e6 {
        // integer powers do not depend on the branch
        return w.powi(e.re as i32);
    }
    if e.im == 0.0 && w.im == 0.0 && w.re > 0.0 {
        return Complex64::new(w.re.powf(e.re), 0.0);
    }
    (e * log_branch(w)).exp()
}

/// `e(x) = exp(2πix)`.
pub fn e2pi(x: Complex64) -> Complex64 {
    (Complex64::new(0.0, 2.0 * PI) * x).exp()
}

/// Bounds Σ_{n≥n0} n^σ q^n for 0 ≤ q < 1, past the peak of the summand.
pub(crate) fn power_geometric_tail(sigma: f64, q: f64, n0: f64) -> f64 {
    if q == 0.0 {
        return 0.0;
    }
    let term = n0.powf(sigma) * q.powf(n0);
    let rho = if sigma > 0.0 { ((n0 + 1.0) / n0).powf(sigma) * q } else { q };
    if rho >= 1.0 {
        f64::INFINITY
    } else {
        term / (1.0 - rho)
    }
}

/// Σ_{n≥1} n^σ q^n, summed until the remainder bound is negligible.
pub(crate) fn power_geometric_sum(sigma: f64, q: f64) -> f64 {
    if q == 0.0 {
        return 0.0;
    }
    if !(q < 1.0) {
        return f64::INFINITY;
    }
    let mut acc = 0.0;
    let mut n = 1.0f64;
    loop {
        acc += n.powf(sigma) * q.powf(n);
        n += 1.0;
        let peak = sigma <= 0.0 || n * (-q.ln()) > sigma + 1.0;
        if peak {
            let t = power_geometric_tail(sigma, q, n);
            if t <= 1e-3 * acc || t == 0.0 {
                return acc + t;
            }
        }
    }
}

#[cfg(test)]
mod tests;
