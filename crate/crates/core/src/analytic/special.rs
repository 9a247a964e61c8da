use num_complex::Complex64;
use std::f64::consts::PI;

use super::cpow;
use crate::error::{Error, Result};
use crate::exact::rational::{frac, is_integer, to_f64};
use crate::exact::Rational;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// B_{2j} / (2j)! for j = 1..=9.
const EM: [f64; 9] = [
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40_320.0,
    5.0 / 66.0 / 3_628_800.0,
    -691.0 / 2730.0 / 479_001_600.0,
    7.0 / 6.0 / 87_178_291_200.0,
    -3617.0 / 510.0 / 20_922_789_888_000.0,
    43867.0 / 798.0 / 6_402_373_705_728_000.0,
];

fn nonpositive_integer(s: Complex64) -> bool {
    s.im == 0.0 && s.re <= 0.0 && s.re.fract() == 0.0
}

fn lanczos(s: Complex64) -> Complex64 {
    // Γ(s) for Re s ≥ 1/2
    let z = s - 1.0;
    let mut a = Complex64::new(LANCZOS[0], 0.0);
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * cpow(t, z + 0.5) * (-t).exp() * a
}

/// Γ(s), with a pole error at the nonpositive integers.
pub fn gamma_fn(s: Complex64) -> Result<Complex64> {
    if nonpositive_integer(s) {
        return Err(Error::Pole(format!("Γ has a pole at s = {}", s.re)));
    }
    if s.im == 0.0 && s.re.fract() == 0.0 && s.re <= 171.0 {
        // exact factorials keep Γ(n) free of rounding
        let v: f64 = (1..s.re as u64).map(|i| i as f64).product();
        return Ok(Complex64::new(v, 0.0));
    }
    if s.re < 0.5 {
        Ok(PI / ((PI * s).sin() * lanczos(1.0 - s)))
    } else {
        Ok(lanczos(s))
    }
}

/// 1/Γ(s), which is entire.
pub fn rgamma(s: Complex64) -> Complex64 {
    if nonpositive_integer(s) {
        return Complex64::new(0.0, 0.0);
    }
    if s.re < 0.5 {
        (PI * s).sin() * lanczos(1.0 - s) / PI
    } else {
        1.0 / lanczos(s)
    }
}

/// Euler–Maclaurin remainder Σ_{n≥0} (u + σn)^{-s} for |u| large, σ = ±1, with an
/// estimate of the truncation error.
pub(crate) fn em_tail(s: Complex64, u: Complex64, sign: f64) -> (Complex64, f64) {
    let one = Complex64::new(1.0, 0.0);
    let mut v = sign * cpow(u, one - s) / (s - 1.0) + 0.5 * cpow(u, -s);
    // rising factorial (s)_{2j-1} and u^{-s-2j+1}
    let mut rising = s;
    let mut upow = cpow(u, -s - 1.0);
    let inv_u2 = 1.0 / (u * u);
    let mut last = 0.0;
    for (j, c) in EM.iter().enumerate() {
        let t = sign * c * rising * upow;
        if j + 1 == EM.len() {
            last = t.norm();
        } else {
            v += t;
        }
        let m = 2.0 * j as f64 + 1.0;
        rising *= (s + m) * (s + m + 1.0);
        upow *= inv_u2;
    }
    (v, last)
}

/// Shortest head length so that the Euler–Maclaurin tail starts far enough out.
pub(crate) fn em_start(s: Complex64) -> f64 {
    (s.norm() + 10.0).ceil()
}

/// ζ(s, θ) for real θ > 0.
pub fn hurwitz_zeta_f64(s: Complex64, theta: f64) -> Result<Complex64> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(Error::Pole("ζ(s, θ) has a pole at s = 1".into()));
    }
    if !(theta > 0.0) || !theta.is_finite() {
        return Err(Error::Domain(format!("Hurwitz parameter must be positive, got {theta}")));
    }
    // a short head keeps cancellation small for Re s < 0; lengthen it until the
    // Euler–Maclaurin remainder is negligible
    let mut best = None;
    for start in [0.5 * s.norm() + 3.0, em_start(s), 2.0 * em_start(s)] {
        let m = (start - theta).max(0.0).ceil() as usize;
        let mut head = Complex64::new(0.0, 0.0);
        for n in 0..m {
            head += cpow(Complex64::new(n as f64 + theta, 0.0), -s);
        }
        let (tail, err) = em_tail(s, Complex64::new(m as f64 + theta, 0.0), 1.0);
        let v = head + tail;
        if err <= 1e-15 * v.norm().max(1.0) {
            return Ok(v);
        }
        best = Some((v, err));
    }
    let (v, err) = best.expect("nonempty");
    if err > 1e-13 * v.norm().max(1.0) {
        return Err(Error::Accuracy { achieved: err, target: 1e-13 });
    }
    Ok(v)
}

/// ζ(s, θ) for rational θ > 0; θ outside (0, 1] is first shifted into it.
pub fn hurwitz_zeta(s: Complex64, theta: &Rational) -> Result<Complex64> {
    if theta <= &Rational::from_integer(0.into()) {
        return Err(Error::Domain(format!("Hurwitz parameter must be positive, got {theta}")));
    }
    let base = if is_integer(theta) { Rational::from_integer(1.into()) } else { frac(theta) };
    let mut v = hurwitz_zeta_f64(s, to_f64(&base))?;
    let mut t = base;
    while &t < theta {
        v -= cpow(Complex64::new(to_f64(&t), 0.0), -s);
        t += Rational::from_integer(1.into());
    }
    Ok(v)
}

/// ψ(θ) for real θ > 0.
pub fn digamma(theta: f64) -> Result<f64> {
    if !(theta > 0.0) {
        return Err(Error::Domain(format!("digamma argument must be positive, got {theta}")));
    }
    let mut x = theta;
    let mut acc = 0.0;
    while x < 20.0 {
        acc -= 1.0 / x;
        x += 1.0;
    }
    let x2 = 1.0 / (x * x);
    let mut p = x2;
    let mut corr = 0.0;
    for (j, c) in EM.iter().take(8).enumerate() {
        // B_{2j}/(2j x^{2j}) with c = B_{2j}/(2j)!
        let two_j = 2 * (j + 1);
        let fact: f64 = (1..two_j).map(|i| i as f64).product();
        corr += c * fact * p;
        p *= x2;
    }
    Ok(acc + x.ln() - 0.5 / x - corr)
}
