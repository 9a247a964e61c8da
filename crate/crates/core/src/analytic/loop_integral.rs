use num_complex::Complex64;
use std::f64::consts::PI;

use crate::bernoulli::{bernoulli_poly, factorial};
use crate::error::{Error, Result};
use crate::exact::rational::{frac, to_f64};
use crate::exact::Rational;
use num::ToPrimitive;

const NODES: usize = 1 << 12;

/// Indices of one term of the triple sum over (j, μ, v) and the shifts R₁, R₂.
#[derive(Debug, Clone)]
pub struct LoopArgs {
    pub c: i64,
    pub d: i64,
    pub k: i64,
    pub mu: i64,
    pub v: i64,
    pub j: i64,
    pub r1: Rational,
    pub r2: Rational,
}

impl LoopArgs {
    fn check(&self) -> Result<()> {
        if self.c <= 0 || self.k <= 0 {
            return Err(Error::Domain(format!("loop integral needs c, k > 0 (c = {}, k = {})", self.c, self.k)));
        }
        Ok(())
    }

    /// The two Bernoulli arguments (cμ+j−{R₁})/(ck) and (v+{(dj+ρ)/c})/k.
    fn arguments(&self) -> (Rational, Rational) {
        let q = |n: i64| Rational::from_integer(n.into());
        let (f1, f2) = (frac(&self.r1), frac(&self.r2));
        let rho = &f2 * q(self.c) - &f1 * q(self.d);
        let x = (q(self.c * self.mu + self.j) - f1) / q(self.c * self.k);
        let y = (q(self.v) + frac(&((q(self.d * self.j) + rho) / q(self.c)))) / q(self.k);
        (x, y)
    }
}

/// I(z, −N, c, d, r₁, r₂) by residues at u = 0.
pub fn loop_i_residue(z: Complex64, n: u32, args: &LoopArgs) -> Result<Complex64> {
    args.check()?;
    let (x, y) = args.arguments();
    let w = -(args.c as f64 * z + args.d as f64);
    let mut acc = Complex64::new(0.0, 0.0);
    for m in 0..=n + 2 {
        let nn = n + 2 - m;
        let bm = to_f64(&bernoulli_poly(m, &x)?);
        let bn = to_f64(&bernoulli_poly(nn, &y)?);
        let den = (factorial(m) * factorial(nn)).to_f64().unwrap_or(f64::INFINITY);
        acc += bm * bn * w.powi(m as i32 - 1) / den;
    }
    Ok(Complex64::new(0.0, 2.0 * PI) * (args.k as f64).powi(n as i32) * acc)
}

/// The same integral by the trapezoid rule on |u| = r with the default radius
/// min(1/(2k), 1/(2k|cz+d|)).
pub fn loop_i_quadrature(z: Complex64, n: u32, args: &LoopArgs) -> Result<Complex64> {
    let k = args.k as f64;
    let cz = (args.c as f64 * z + args.d as f64).norm();
    loop_i_quadrature_with_radius(z, n, args, (0.5 / k).min(0.5 / (k * cz)))
}

pub fn loop_i_quadrature_with_radius(z: Complex64, n: u32, args: &LoopArgs, radius: f64) -> Result<Complex64> {
    args.check()?;
    let k = args.k as f64;
    let czd = args.c as f64 * z + args.d as f64;
    let nearest = (2.0 * PI / k).min(2.0 * PI / (k * czd.norm()));
    if !(radius > 0.0 && radius < nearest) {
        return Err(Error::Domain(format!(
            "radius {radius} must lie in (0, {nearest}) so that u = 0 is the only enclosed pole"
        )));
    }
    let (x, y) = args.arguments();
    let (x, y) = (to_f64(&x), to_f64(&y));
    let mut acc = Complex64::new(0.0, 0.0);
    for l in 0..NODES {
        let u = Complex64::from_polar(radius, 2.0 * PI * l as f64 / NODES as f64);
        let t1 = -k * u * czd;
        let t2 = k * u;
        let ker = (x * t1).exp() / t1.exp_m1() * (y * t2).exp() / t2.exp_m1();
        acc += u.powi(-(n as i32)) * ker;
    }
    // du = iu dφ
    Ok(Complex64::new(0.0, 2.0 * PI / NODES as f64) * acc)
}

trait ExpM1 {
    fn exp_m1(self) -> Self;
}

impl ExpM1 for Complex64 {
    fn exp_m1(self) -> Self {
        if self.norm() < 1e-5 {
            self + self * self / 2.0 + self * self * self / 6.0
        } else {
            self.exp() - 1.0
        }
    }
}
