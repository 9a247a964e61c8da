use num_complex::Complex64;

use super::special::{digamma, hurwitz_zeta};
use super::cpow;
use crate::error::{Error, Result};
use crate::exact::rational::{floor, frac, is_integer, to_f64};
use crate::exact::Rational;
use crate::sequences::{DirichletCharacter, PeriodicSequence};

/// L(s; A_β; θ) = Σ_{n>-θ} f(βn)(n+θ)^{-s}, continued through Hurwitz zeta.
///
/// At s = 1 the value is returned when Σ_n f(n) = 0 (the series then converges);
/// otherwise s = 1 is a pole.
pub fn periodic_l(s: Complex64, a: &PeriodicSequence, beta: i64, theta: &Rational) -> Result<Complex64> {
    let k = a.period() as i64;
    let vals = a.embed();
    let lambda = if is_integer(theta) { 1 } else { 0 };
    let fl = floor(theta);
    let fl: i64 = i64::try_from(&fl).map_err(|_| Error::Domain(format!("shift {theta} out of range")))?;
    let fr = frac(theta);
    let kq = Rational::from_integer(k.into());
    let terms = (0..k).map(|j| {
        let w = vals[(beta * (j - fl + lambda)).rem_euclid(k) as usize];
        let arg = (Rational::from_integer((j + lambda).into()) + &fr) / &kq;
        (w, arg)
    });
    if s == Complex64::new(1.0, 0.0) {
        let terms: Vec<_> = terms.collect();
        let total: Complex64 = terms.iter().map(|t| t.0).sum();
        if total.norm() > 1e-12 {
            return Err(Error::Pole("L(s; A; θ) has a pole at s = 1 unless Σ f(n) = 0".into()));
        }
        // finite part of ζ(s, a) at s = 1 is -ψ(a)
        let mut v = Complex64::new(0.0, 0.0);
        for (w, arg) in terms {
            v -= w * digamma(to_f64(&arg))?;
        }
        return Ok(v / k as f64);
    }
    let mut v = Complex64::new(0.0, 0.0);
    for (w, arg) in terms {
        if w != Complex64::new(0.0, 0.0) {
            v += w * hurwitz_zeta(s, &arg)?;
        }
    }
    Ok(v * cpow(Complex64::new(k as f64, 0.0), -s))
}

/// L(r, χ) for integer r ≥ 1.
pub fn dirichlet_l(r: u32, chi: &DirichletCharacter) -> Result<Complex64> {
    if r == 0 {
        return Err(Error::Domain("dirichlet_l needs r ≥ 1".into()));
    }
    if r == 1 && chi.is_principal() {
        return Err(Error::Pole("L(s, χ₀) has a pole at s = 1".into()));
    }
    periodic_l(Complex64::new(r as f64, 0.0), chi.sequence(), 1, &Rational::from_integer(0.into()))
}
