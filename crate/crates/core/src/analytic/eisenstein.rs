use num_complex::Complex64;
use std::f64::consts::PI;

use super::series::a_series;
use super::lseries::periodic_l;
use super::special::{em_start, em_tail, gamma_fn, rgamma};
use super::{cpow, power_geometric_sum, Series, SeriesBudget};
use crate::arith::{lcm, mod_inv};
use crate::error::{Error, Result};
use crate::exact::rational::{floor, is_integer, to_f64};
use crate::exact::Rational;
use crate::sequences::PeriodicSequence;

/// The data of G(z, s; A_α, B_β; r₁, r₂) apart from z and s.
#[derive(Debug, Clone)]
pub struct EisensteinArgs {
    pub a: PeriodicSequence,
    pub b: PeriodicSequence,
    pub alpha: i64,
    pub beta: i64,
    pub r1: Rational,
    pub r2: Rational,
}

impl EisensteinArgs {
    pub fn new(a: PeriodicSequence, b: PeriodicSequence) -> Self {
        let zero = Rational::from_integer(0.into());
        EisensteinArgs { a, b, alpha: 1, beta: 1, r1: zero.clone(), r2: zero }
    }

    pub fn scaled(mut self, alpha: i64, beta: i64) -> Self {
        self.alpha = alpha;
        self.beta = beta;
        self
    }

    pub fn shifted(mut self, r1: Rational, r2: Rational) -> Self {
        self.r1 = r1;
        self.r2 = r2;
        self
    }

    fn period(&self) -> i64 {
        lcm(self.a.period() as i64, self.b.period() as i64)
    }
}

fn to_i64(x: &num::BigInt) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Domain("shift out of range".into()))
}

/// Σ_{n ∈ ℤ, n ≠ skip} (u + n)^{-s}, with the error estimate of the two tails.
fn bilateral(s: Complex64, u: Complex64, skip: Option<i64>) -> (Complex64, f64) {
    let n_max = (u.re.abs() + em_start(s)).ceil() as i64;
    let mut v = Complex64::new(0.0, 0.0);
    for n in -n_max..=n_max {
        if Some(n) != skip {
            v += cpow(u + n as f64, -s);
        }
    }
    let (r, er) = em_tail(s, u + (n_max + 1) as f64, 1.0);
    let (l, el) = em_tail(s, u - (n_max + 1) as f64, -1.0);
    (v + r + l, er + el)
}

/// G(z, s; A_α, B_β; r₁, r₂) from its defining double series, for Re s > 2.
///
/// Each row m is summed over all n (head terms plus Euler–Maclaurin tails); rows
/// are cut off once a bound on everything beyond them drops below the target.
pub fn eisenstein_g_direct(z: Complex64, s: Complex64, g: &EisensteinArgs, budget: SeriesBudget) -> Result<Series> {
    if !(z.im > 0.0) {
        return Err(Error::Domain(format!("G needs Im z > 0, got {z}")));
    }
    if !(s.re > 2.0) {
        return Err(Error::Domain(format!("the double series for G converges only for Re s > 2, got s = {s}")));
    }
    let h = g.period();
    let fa: Vec<Complex64> = (0..h).map(|m| g.a.at(g.alpha * m).embed()).collect();
    let fb: Vec<Complex64> = (0..h).map(|n| g.b.at(g.beta * n).embed()).collect();
    let amax = fa.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let bsum: f64 = fb.iter().map(|c| c.norm()).sum();
    let mut out = Series { value: Complex64::new(0.0, 0.0), achieved_tail: 0.0, terms: 0 };
    if amax == 0.0 || bsum == 0.0 {
        return Ok(out);
    }
    let hf = h as f64;
    let r1f = to_f64(&g.r1);
    let r2f = to_f64(&g.r2);
    let sigma = s.re;
    // |Σ_n (u+n)^{-s}| ≤ |(2π)^s| e^{π|Im s|/2} |1/Γ(s)| Σ_{n≥1} n^{σ-1} e^{-2πn|Im u|}
    let cs = (2.0 * PI).powf(sigma) * (PI * s.im.abs() / 2.0).exp() * rgamma(s).norm();
    let row_bound = |x: f64| {
        let q = (-2.0 * PI * x.abs() * z.im / hf).exp();
        hf.powf(-sigma) * bsum * cs * power_geometric_sum(sigma - 1.0, q)
    };
    let big_q = (-2.0 * PI * z.im / hf).exp();
    let hs = cpow(Complex64::new(hf, 0.0), -s);
    let skip_row = if is_integer(&g.r1) && is_integer(&g.r2) { Some(-to_i64(g.r1.numer())?) } else { None };
    let r2i = if is_integer(&g.r2) { Some(to_i64(g.r2.numer())?) } else { None };
    let m0 = to_i64(&floor(&-&g.r1))? + 1;

    let mut est = 0.0;
    for dir in [1i64, -1] {
        let mut m = if dir == 1 { m0 } else { m0 - 1 };
        loop {
            let x = m as f64 + r1f;
            let wa = fa[m.rem_euclid(h) as usize];
            if wa != Complex64::new(0.0, 0.0) {
                let w = x * z + r2f;
                let mut row = Complex64::new(0.0, 0.0);
                for (j, wb) in fb.iter().enumerate() {
                    if *wb == Complex64::new(0.0, 0.0) {
                        continue;
                    }
                    let skip = match (skip_row, r2i) {
                        (Some(mr), Some(r2)) if mr == m && (-r2 - j as i64).rem_euclid(h) == 0 => {
                            Some((-r2 - j as i64).div_euclid(h))
                        }
                        _ => None,
                    };
                    let (v, e) = bilateral(s, (w + j as f64) / hf, skip);
                    row += wb * v;
                    est += wb.norm() * wa.norm() * e * hs.norm();
                    out.terms += 1;
                }
                out.value += wa * hs * row;
            }
            let beyond = amax * row_bound(x) * big_q / (1.0 - big_q);
            if x != 0.0 && beyond <= budget.tail_target / 4.0 {
                out.achieved_tail += beyond;
                break;
            }
            if out.terms > budget.max_terms {
                return Err(Error::Accuracy { achieved: beyond, target: budget.tail_target });
            }
            m += dir;
        }
    }
    out.achieved_tail += est;
    if out.achieved_tail > budget.tail_target {
        return Err(Error::Accuracy { achieved: out.achieved_tail, target: budget.tail_target });
    }
    Ok(out)
}

struct FourierParts {
    /// (−2πi/k)^s k (A(…) + e(s/2) A(…))
    a_part: Complex64,
    /// λ f(−αr₁)(L + e(s/2) L); zero when λ_{r₁} = 0
    l_part: Option<Complex64>,
    tail: f64,
    terms: usize,
}

/// `weight` is the factor the caller will apply to the A-part; the inner series are
/// sized so that the weighted tail meets the budget.
fn fourier_parts(z: Complex64, s: Complex64, g: &EisensteinArgs, budget: SeriesBudget, weight: f64) -> Result<FourierParts> {
    let h = g.period();
    let a = g.a.with_period(h as u32)?;
    let b = g.b.with_period(h as u32)?;
    let binv = mod_inv(g.beta, h)
        .ok_or_else(|| Error::Domain(format!("β = {} is not invertible mod {h}", g.beta)))?;
    let bhat = b.fourier_hat()?;
    let neg = |q: &Rational| -q.clone();
    let es2 = (Complex64::new(0.0, PI) * s).exp();
    let pre = cpow(Complex64::new(0.0, -2.0 * PI / h as f64), s) * h as f64;
    let scale = (2.0 * weight * pre.norm() * es2.norm().max(1.0)).max(1.0);
    let inner = SeriesBudget { tail_target: budget.tail_target / scale, ..budget };
    let a1 = a_series(z, s, &a, g.alpha, &bhat, -binv, &g.r1, &g.r2, inner)?;
    let a2 = a_series(z, s, &a, -g.alpha, &bhat, binv, &neg(&g.r1), &neg(&g.r2), inner)?;
    let l_part = if is_integer(&g.r1) {
        let f = a.at(-g.alpha * to_i64(g.r1.numer())?).embed();
        if f == Complex64::new(0.0, 0.0) {
            None
        } else {
            let l1 = periodic_l(s, &b, g.beta, &g.r2)?;
            let l2 = periodic_l(s, &b, -g.beta, &neg(&g.r2))?;
            Some(f * (l1 + es2 * l2))
        }
    } else {
        None
    };
    Ok(FourierParts {
        a_part: pre * (a1.value + es2 * a2.value),
        l_part,
        tail: pre.norm() * (a1.achieved_tail + es2.norm() * a2.achieved_tail),
        terms: a1.terms + a2.terms,
    })
}

/// G(z, s; A_α, B_β; r₁, r₂) through its Fourier expansion; valid for all s ≠ 1.
pub fn g_via_fourier(z: Complex64, s: Complex64, g: &EisensteinArgs, budget: SeriesBudget) -> Result<Series> {
    let rg = rgamma(s);
    let p = fourier_parts(z, s, g, budget, rg.norm())?;
    Ok(Series {
        value: p.a_part * rg + p.l_part.unwrap_or_default(),
        achieved_tail: p.tail * rg.norm(),
        terms: p.terms,
    })
}

/// Γ(s)·G(z, s; A_α, B_β; r₁, r₂), finite at the poles of Γ whenever the L-part vanishes.
pub fn gamma_g_via_fourier(z: Complex64, s: Complex64, g: &EisensteinArgs, budget: SeriesBudget) -> Result<Series> {
    let p = fourier_parts(z, s, g, budget, 1.0)?;
    let l = match p.l_part {
        Some(l) => gamma_fn(s)? * l,
        None => Complex64::new(0.0, 0.0),
    };
    Ok(Series { value: p.a_part + l, achieved_tail: p.tail, terms: p.terms })
}
