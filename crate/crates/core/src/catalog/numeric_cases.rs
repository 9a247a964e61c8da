//! Evaluators of the numeric cases. Each returns `|LHS − RHS|` with a bound on the
//! series tails that went into it.

use std::f64::consts::PI;

use num::Zero;
use num_complex::Complex64;
use serde_json::Value;

use super::params::{complex, int, rational, real, seq, text, uint};
use super::{Ctx, Outcome};
use crate::analytic::{
    a_series, cpow, dirichlet_l, eisenstein_g_direct, g_via_fourier, gamma_g_via_fourier, log_branch, loop_i_quadrature,
    loop_i_residue, periodic_l, power_geometric_tail, EisensteinArgs, LoopArgs, SeriesBudget,
};
use crate::arith::euler_phi;
use crate::bernoulli::{b_star, bernoulli_poly, euler_number, factorial, p_star, periodic_b, periodic_p};
use crate::dedekind::dedekind_sum_explicit;
use crate::error::{Error, Result};
use crate::exact::rational::to_f64;
use crate::exact::{Cyclotomic, Rational};
use crate::sequences::{dirichlet_characters, make_sequence, DirichletCharacter, PeriodicSequence};

type C64 = Complex64;

const I: C64 = C64::new(0.0, 1.0);

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn done(lhs: C64, rhs: C64, tail: f64) -> Result<Outcome> {
    Ok(Outcome::numeric((lhs - rhs).norm(), tail))
}

fn unknown_form(f: &str) -> Error {
    Error::Domain(format!("unknown form `{f}`"))
}

fn char_of(k: u32, i: u32) -> Result<DirichletCharacter> {
    dirichlet_characters(k)?
        .into_iter()
        .nth(i as usize)
        .ok_or_else(|| Error::Domain(format!("no character with index {i} mod {k}")))
}

fn primitive_char(k: u32, i: u32) -> Result<DirichletCharacter> {
    let chi = char_of(k, i)?;
    if !chi.is_primitive() {
        return Err(Error::Domain(format!("this identity needs a primitive character; χ_{i} mod {k} is not")));
    }
    Ok(chi)
}

fn spec(s: &str) -> Result<PeriodicSequence> {
    make_sequence(s)
}

fn ex(c: &Cyclotomic) -> C64 {
    c.embed()
}

fn zero() -> Rational {
    Rational::zero()
}

fn fact(n: u32) -> f64 {
    to_f64(&Rational::from_integer(factorial(n)))
}

fn bf(m: u32, a: &PeriodicSequence) -> Result<C64> {
    Ok(ex(&periodic_b(m, a)?))
}

fn pf(m: u32, x: &Rational, a: &PeriodicSequence, c: i64) -> Result<C64> {
    Ok(ex(&periodic_p(m, x, a, c)?))
}

/// The same context with the tail target divided by `w`, for sums that get multiplied by `w`.
fn weighted(ctx: &Ctx, w: f64) -> Ctx {
    let mut c = *ctx;
    c.budget.tail_target /= w.max(1.0);
    c
}

/// Σ_{n≥1} term(n) for a term bounded by amp·n^σ·e^{−an}, with the bound on the remainder.
fn exp_series(amp: f64, sigma: f64, a: f64, ctx: &Ctx, term: impl Fn(f64) -> C64) -> Result<(C64, f64)> {
    let q = (-a).exp();
    let target = ctx.budget.tail_target;
    let mut acc = C64::zero();
    let mut n = 1.0f64;
    loop {
        acc += term(n);
        if n * a > sigma + 1.0 || sigma <= 0.0 {
            let tail = amp * power_geometric_tail(sigma, q, n + 1.0);
            if tail <= target {
                return Ok((acc, tail));
            }
            if n as usize >= ctx.budget.max_terms {
                return Err(Error::Accuracy { achieved: tail, target });
            }
        }
        n += 1.0;
    }
}

fn a0(z: C64, s: f64, a: &PeriodicSequence, b: &PeriodicSequence, ctx: &Ctx) -> Result<(C64, f64)> {
    let r = a_series(z, re(s), a, 1, b, 1, &zero(), &zero(), ctx.budget)?;
    Ok((r.value, r.achieved_tail))
}

/// G(w, χ) = Σ_v χ(v) e(vw/k) at complex w.
fn gauss_fn(w: C64, chi: &[C64]) -> C64 {
    let k = chi.len() as f64;
    chi.iter().enumerate().map(|(v, c)| c * (2.0 * PI * I * v as f64 * w / k).exp()).sum()
}

fn chi_vals(chi: &DirichletCharacter) -> Vec<C64> {
    chi.sequence().embed()
}

fn at(vals: &[C64], n: i64) -> C64 {
    vals[n.rem_euclid(vals.len() as i64) as usize]
}

pub fn n1(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let g = EisensteinArgs::new(seq(p, "A")?, seq(p, "B")?);
    let (z, s) = (complex(p, "z")?, complex(p, "s")?);
    let d = eisenstein_g_direct(z, s, &g, ctx.budget)?;
    let f = g_via_fourier(z, s, &g, ctx.budget)?;
    done(d.value, f.value, d.achieved_tail + f.achieved_tail)
}

/// −(2πi)^{2N+1}/(2k^{2N}) Σ_m (−1)^m B_m(χ₂)B_{2N+2−m}(χ₁)/(m!(2N+2−m)!) z^{m−1}.
fn s4_rhs(n: u32, k: f64, b1: &[C64], b2: &[C64], z: C64) -> C64 {
    let top = 2 * n + 2;
    let mut acc = C64::zero();
    for m in 0..=top {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * b2[m as usize] * b1[(top - m) as usize] / (fact(m) * fact(top - m)) * z.powi(m as i32 - 1);
    }
    -(2.0 * PI * I).powi(2 * n as i32 + 1) / (2.0 * k.powi(2 * n as i32)) * acc
}

fn b_list(top: u32, a: &PeriodicSequence) -> Result<Vec<C64>> {
    (0..=top).map(|m| bf(m, a)).collect()
}

pub fn n2(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let (k, i1, i2, n) = (uint(p, "k")?, uint(p, "i1")?, uint(p, "i2")?, uint(p, "N")?);
    let z = complex(p, "z")?;
    let (x1, x2) = (char_of(k, i1)?, char_of(k, i2)?);
    let (g1, g2) = (spec(&format!("gauss:k={k},i={i1}"))?, spec(&format!("gauss:k={k},i={i2}"))?);
    let s = -2.0 * n as f64;
    let (u, tu) = a0(-1.0 / z, s, x1.sequence(), &g2, ctx)?;
    let (v, tv) = a0(z, s, x2.sequence(), &g1, ctx)?;
    let lhs = z.powi(2 * n as i32) * u - x1.parity() as f64 * v;
    let top = 2 * n + 2;
    let rhs = s4_rhs(n, k as f64, &b_list(top, x1.sequence())?, &b_list(top, x2.sequence())?, z);
    done(lhs, rhs, z.norm().powi(2 * n as i32) * tu + tv)
}

/// Σ_n G(n,χ_a) G(inkγ/π, χ_b) n^{−2N−1}/(1 − e^{−2nkγ}).
fn gamma_series(n: u32, k: u32, gamma: f64, xa: &[C64], xb: &[C64], ctx: &Ctx) -> Result<(C64, f64)> {
    let kf = k as f64;
    let amp = kf * kf / (1.0 - (-2.0 * kf * gamma).exp());
    exp_series(amp, -(2.0 * n as f64 + 1.0), 2.0 * gamma, ctx, |m| {
        let w = I * m * kf * gamma / PI;
        gauss_fn(re(m), xa) * gauss_fn(w, xb) * m.powi(-(2 * n as i32 + 1)) / (1.0 - (-2.0 * m * kf * gamma).exp())
    })
}

pub fn n3(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let (k, i1, i2, n) = (uint(p, "k")?, uint(p, "i1")?, uint(p, "i2")?, uint(p, "N")?);
    let gamma = real(p, "gamma")?;
    let kf = k as f64;
    let theta = PI * PI / (kf * kf * gamma);
    let (x1, x2) = (char_of(k, i1)?, char_of(k, i2)?);
    let (v1, v2) = (chi_vals(&x1), chi_vals(&x2));
    let (sg, tg) = gamma_series(n, k, gamma, &v2, &v1, &weighted(ctx, 2.0 * gamma.powi(-(n as i32))))?;
    let (st, tt) = gamma_series(n, k, theta, &v1, &v2, &weighted(ctx, 2.0 * theta.powi(-(n as i32))))?;
    let ni = n as i32;
    let lhs = gamma.powi(-ni) * sg - (-theta).powi(-ni) * x1.parity() as f64 * st;
    let top = 2 * n + 2;
    let (b1, b2) = (b_list(top, x1.sequence())?, b_list(top, x2.sequence())?);
    let mut acc = C64::zero();
    for m in 0..=top {
        let w = (-I).powi(m as i32) * b2[m as usize] * b1[(top - m) as usize] / (fact(m) * fact(top - m));
        acc += w * gamma.powf(n as f64 + 1.0 - m as f64 / 2.0) * theta.powf(m as f64 / 2.0);
    }
    let rhs = -kf * 4f64.powi(ni) * acc;
    done(lhs, rhs, gamma.powi(-ni) * tg + theta.powi(-ni) * tt)
}

fn chi4(n: f64) -> f64 {
    match (n as i64).rem_euclid(4) {
        1 => 1.0,
        3 => -1.0,
        _ => 0.0,
    }
}

/// Σ χ₄(n) sech(2nx)/n^{2N+1}.
fn sech_series(n: u32, x: f64, ctx: &Ctx) -> Result<(C64, f64)> {
    exp_series(2.0, -(2.0 * n as f64 + 1.0), 2.0 * x, ctx, |m| {
        re(chi4(m) / (2.0 * m * x).cosh() / m.powi(2 * n as i32 + 1))
    })
}

fn euler_f(n: u32) -> Result<f64> {
    Ok(to_f64(&Rational::from_integer(euler_number(n)?)))
}

pub fn n4(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    primitive_char(4, 1)?;
    match text(p, "form")? {
        "sech" => {
            let (n, gamma) = (uint(p, "N")?, real(p, "gamma")?);
            let theta = PI * PI / (16.0 * gamma);
            let (sg, tg) = sech_series(n, gamma, &weighted(ctx, 2.0 * gamma.powi(-(n as i32))))?;
            let (st, tt) = sech_series(n, theta, &weighted(ctx, 2.0 * theta.powi(-(n as i32))))?;
            let ni = n as i32;
            let lhs = gamma.powi(-ni) * sg + (-theta).powi(-ni) * st;
            let mut acc = 0.0;
            for m in 0..=n {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                acc += sign * euler_f(2 * m)? * euler_f(2 * n - 2 * m)? / (fact(2 * m) * fact(2 * n - 2 * m))
                    * gamma.powi((n - m) as i32)
                    * theta.powi(m as i32);
            }
            let rhs = 4f64.powi(ni) * PI / 4.0 * acc;
            done(lhs, re(rhs), gamma.powi(-ni) * tg + theta.powi(-ni) * tt)
        }
        "pi_over_8" => {
            let (v, t) = exp_series(2.0, -1.0, PI / 2.0, ctx, |m| re(chi4(m) / (m * PI / 2.0).cosh() / m))?;
            done(v, re(PI / 8.0), t)
        }
        f => Err(unknown_form(f)),
    }
}

/// Σ (−1)^n csch(nx)/n^{2N+1}.
fn csch_series(n: u32, x: f64, ctx: &Ctx) -> Result<(C64, f64)> {
    let amp = 2.0 / (1.0 - (-2.0 * x).exp());
    exp_series(amp, -(2.0 * n as f64 + 1.0), x, ctx, |m| {
        let sign = if (m as i64) % 2 == 0 { 1.0 } else { -1.0 };
        re(sign / (m * x).sinh() / m.powi(2 * n as i32 + 1))
    })
}

fn b_half(m: u32) -> Result<f64> {
    Ok(to_f64(&bernoulli_poly(m, &Rational::new(1.into(), 2.into()))?))
}

/// −2^{2N+1} Σ_{m=0}^{N+1} (−1)^m B_{2m}(½)B_{2N+2−2m}(½)/((2m)!(2N+2−2m)!) γ^{N+1−m} θ^m.
fn csch_rhs(n: u32, gamma: f64, theta: f64) -> Result<f64> {
    let mut acc = 0.0;
    for m in 0..=n + 1 {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let (a, b) = (2 * m, 2 * n + 2 - 2 * m);
        acc += sign * b_half(a)? * b_half(b)? / (fact(a) * fact(b)) * gamma.powi((n + 1 - m) as i32) * theta.powi(m as i32);
    }
    Ok(-2f64.powi(2 * n as i32 + 1) * acc)
}

pub fn n5(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    match text(p, "form")? {
        "csch" => {
            let (n, gamma) = (uint(p, "N")?, real(p, "gamma")?);
            let theta = PI * PI / gamma;
            let (sg, tg) = csch_series(n, gamma, &weighted(ctx, 2.0 * gamma.powi(-(n as i32))))?;
            let (st, tt) = csch_series(n, theta, &weighted(ctx, 2.0 * theta.powi(-(n as i32))))?;
            let ni = n as i32;
            let lhs = gamma.powi(-ni) * sg - (-theta).powi(-ni) * st;
            done(lhs, re(csch_rhs(n, gamma, theta)?), gamma.powi(-ni) * tg + theta.powi(-ni) * tt)
        }
        "at_pi" => {
            // N = 2M+1 at γ = θ = π: both sides of the transformation carry the same sum.
            let n = 2 * uint(p, "M")? + 1;
            let (v, t) = csch_series(n, PI, ctx)?;
            let value = csch_rhs(n, PI, PI)? / (2.0 * PI.powi(-(n as i32)));
            done(v, re(value), t)
        }
        f => Err(unknown_form(f)),
    }
}

pub fn n_cauchy(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let m = uint(p, "M")?;
    let n = 2 * m + 1;
    let (v, t) = csch_series(n, PI, ctx)?;
    let top = 2 * m + 2;
    let mut acc = 0.0;
    for j in 0..=top {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let (a, b) = (2 * j, 4 * m + 4 - 2 * j);
        acc += sign * b_half(a)? * b_half(b)? / (fact(a) * fact(b));
    }
    let stated = -(2.0 * PI).powi(4 * m as i32 + 3) * acc;
    done(v, re(stated), t)
}

/// Σ_n G(n,χ) G(in,χ) n^{e}/(1 − e^{−2πn}).
fn self_dual_series(e: i32, vals: &[C64], ctx: &Ctx) -> Result<(C64, f64)> {
    let k = vals.len() as f64;
    let amp = k * k / (1.0 - (-2.0 * PI).exp());
    exp_series(amp, e as f64, 2.0 * PI / k, ctx, |m| {
        gauss_fn(re(m), vals) * gauss_fn(I * m, vals) * m.powi(e) / (1.0 - (-2.0 * PI * m).exp())
    })
}

pub fn n6(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let (k, i) = (uint(p, "k")?, uint(p, "i")?);
    let chi = char_of(k, i)?;
    let vals = chi_vals(&chi);
    let kf = k as f64;
    match text(p, "form")? {
        "closed" => {
            let n = uint(p, "N")?;
            let (v, t) = self_dual_series(-(2 * n as i32 + 1), &vals, ctx)?;
            let top = 2 * n + 2;
            let b = b_list(top, chi.sequence())?;
            let mut acc = C64::zero();
            for m in 0..=top {
                acc += (-I).powi(m as i32) * b[m as usize] * b[(top - m) as usize] / (fact(m) * fact(top - m));
            }
            let rhs = -kf * (2.0 * PI / kf).powi(2 * n as i32 + 1) / 4.0 * acc;
            done(v, rhs, t)
        }
        "odd" => {
            let (v, t) = self_dual_series(-1, &vals, ctx)?;
            let b1 = bf(1, chi.sequence())?;
            done(v, PI * I / 2.0 * b1 * b1, t)
        }
        "even" => {
            let (v, t) = self_dual_series(1, &vals, ctx)?;
            let b0 = bf(0, chi.sequence())?;
            done(v, -kf * kf / (8.0 * PI) * b0 * b0, t)
        }
        "vanishing" => {
            let m = int(p, "M")?;
            let (v, t) = self_dual_series(2 * m as i32 - 1, &vals, ctx)?;
            done(v, C64::zero(), t)
        }
        f => Err(unknown_form(f)),
    }
}

pub fn n7(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let (k, i, n) = (uint(p, "k")?, uint(p, "i")?, uint(p, "N")?);
    let chi = char_of(k, i)?;
    let vals = chi_vals(&chi);
    let kf = k as f64;
    let nf = n as f64;
    let x1 = (-2.0 * PI / kf).exp();
    let amp = kf * (nf + 2.0 * PI / kf) / ((1.0 - x1) * (1.0 - x1));
    // Inner sum over m = v + hk in closed form, with y = e^{−2πn}.
    let (v, t) = exp_series(amp, -2.0 * nf, 2.0 * PI / kf, ctx, |m| {
        let x = (-2.0 * PI * m / kf).exp();
        let y = (-2.0 * PI * m).exp();
        let (s0, s1) = (1.0 / (1.0 - y), y / ((1.0 - y) * (1.0 - y)));
        let mut inner = C64::zero();
        for (r, c) in vals.iter().enumerate() {
            let r = if r == 0 { k as usize } else { r };
            let rf = r as f64;
            inner += c * x.powf(rf) * ((nf + 2.0 * PI * rf * m / kf) * s0 + 2.0 * PI * m * s1);
        }
        gauss_fn(re(m), &vals) * m.powi(-(2 * n as i32 + 1)) * inner
    })?;
    let top = 2 * n + 2;
    let b = b_list(top, chi.sequence())?;
    let mut acc = C64::zero();
    for m in 0..=top {
        acc += (-I).powi(m as i32) * (m as f64 - 1.0) * b[m as usize] * b[(top - m) as usize] / (fact(m) * fact(top - m));
    }
    let rhs = -kf * (2.0 * PI / kf).powi(2 * n as i32 + 1) / 4.0 * acc;
    done(v, rhs, t)
}

#[derive(Clone, Copy)]
struct Matrix {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl Matrix {
    fn read(p: &Value) -> Result<Self> {
        let v = p.get("V").and_then(Value::as_array).ok_or_else(|| Error::Domain("parameter `V` must be [a,b,c,d]".into()))?;
        let e: Vec<i64> = v.iter().filter_map(Value::as_i64).collect();
        let [a, b, c, d] = e[..] else {
            return Err(Error::Domain("parameter `V` must be [a,b,c,d]".into()));
        };
        if a * d - b * c != 1 || c <= 0 {
            return Err(Error::Domain(format!("V must have ad − bc = 1 and c > 0, got ({a},{b},{c},{d})")));
        }
        Ok(Matrix { a, b, c, d })
    }

    fn apply(&self, z: C64) -> C64 {
        (self.a as f64 * z + self.b as f64) / (self.c as f64 * z + self.d as f64)
    }

    fn jac(&self, z: C64) -> C64 {
        self.c as f64 * z + self.d as f64
    }
}

pub fn n8(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let (k, i1, i2) = (uint(p, "k")?, uint(p, "i1")?, uint(p, "i2")?);
    let v = Matrix::read(p)?;
    let z = complex(p, "z")?;
    let (x1, x2) = (char_of(k, i1)?, char_of(k, i2)?);
    let (g1, g2) = (spec(&format!("gauss:k={k},i={i1}"))?, spec(&format!("gauss:k={k},i={i2}"))?);
    let (s1, s2) = (x1.sequence(), x2.sequence());
    let (u, tu) = a0(v.apply(z), 0.0, s1, &g2, ctx)?;
    let (w, tw) = a0(z, 0.0, s2, &g1, ctx)?;
    let coeff = ex(s1.at(v.c)) * ex(s2.at(v.b));
    let lhs = (u - coeff * w) * (1.0 + (x1.parity() * x2.parity()) as f64);
    let sum = ex(&dedekind_sum_explicit(v.d, v.c, s2, 1, s1, 1, &zero(), &zero())?);
    let (c, j) = (v.c as f64, v.jac(z));
    let rhs = 2.0 * PI * I * coeff * sum - PI * I / (c * j) * bf(0, s2)? * bf(2, s1)?
        - 2.0 * PI * I * ex(s2.at(v.b)) / c * j * bf(0, s1)? * pf(2, &zero(), s2, 1)?;
    done(lhs, rhs, tu + tw)
}

/// δ(z; c, d; χ₁, χ₂): (c_k(0)/k) P₁(0, c_k) log(cz+d) for two principal characters, else 0.
fn delta(k: u32, principal: bool, w: C64) -> C64 {
    if !principal {
        return C64::zero();
    }
    let phi = euler_phi(k as u64) as f64;
    phi / k as f64 * (-phi / 2.0) * log_branch(w)
}

fn both_principal(x1: &DirichletCharacter, x2: &DirichletCharacter) -> Result<bool> {
    match (x1.is_principal(), x2.is_principal()) {
        (true, true) => Ok(true),
        (false, false) => Ok(false),
        _ => Err(Error::Domain("δ(z;c,d;χ₁,χ₂) is stated only when both or neither character is principal".into())),
    }
}

/// Σ_n χ_b(n)/n Σ_v χ_a(v) ζ^v q^n/(1 − ζ^v q^n) with q = e^{−2x}.
fn cosh_double(x: f64, xa: &[C64], xb: &[C64], ctx: &Ctx) -> Result<(C64, f64)> {
    let k = xa.len() as f64;
    let amp = k / (1.0 - (-2.0 * x).exp());
    exp_series(amp, -1.0, 2.0 * x, ctx, |m| {
        let q = (-2.0 * m * x).exp();
        let mut inner = C64::zero();
        for (v, c) in xa.iter().enumerate() {
            let zq = (2.0 * PI * I * v as f64 / k).exp() * q;
            inner += c * zq / (1.0 - zq);
        }
        at(xb, m as i64) / m * inner
    })
}

fn chi6(n: f64) -> f64 {
    match (n as i64).rem_euclid(6) {
        1 => 1.0,
        5 => -1.0,
        _ => 0.0,
    }
}

fn chi3(n: f64) -> f64 {
    match (n as i64).rem_euclid(3) {
        1 => 1.0,
        2 => -1.0,
        _ => 0.0,
    }
}

/// Σ χ(n) n^{−1}/(2cosh(2nx) + sign).
fn cosh_series(chi: fn(f64) -> f64, sign: f64, x: f64, ctx: &Ctx) -> Result<(C64, f64)> {
    let amp = 1.0 / (1.0 - (-2.0 * x).exp());
    exp_series(amp, -1.0, 2.0 * x, ctx, |m| re(chi(m) / m / (2.0 * (2.0 * m * x).cosh() + sign)))
}

pub fn n9(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let form = text(p, "form")?;
    match form {
        "cosh_mod6" | "cosh_mod3" => {
            let gamma = real(p, "gamma")?;
            let (chi, sign, k, value): (fn(f64) -> f64, f64, f64, f64) = if form == "cosh_mod6" {
                (chi6, -1.0, 6.0, PI / (2.0 * 3f64.sqrt()))
            } else {
                (chi3, 1.0, 3.0, PI / (9.0 * 3f64.sqrt()))
            };
            let theta = PI * PI / (k * k * gamma);
            let (a, ta) = cosh_series(chi, sign, gamma, ctx)?;
            let (b, tb) = cosh_series(chi, sign, theta, ctx)?;
            return done(a + b, re(value), ta + tb);
        }
        "cosh_mod6_single" => {
            let (a, t) = cosh_series(chi6, -1.0, PI / 6.0, ctx)?;
            return done(a, re(PI / (4.0 * 3f64.sqrt())), t);
        }
        _ => {}
    }
    let (k, i1, i2) = (uint(p, "k")?, uint(p, "i1")?, uint(p, "i2")?);
    let (x1, x2) = (char_of(k, i1)?, char_of(k, i2)?);
    let principal = both_principal(&x1, &x2)?;
    let (g1, g2) = (spec(&format!("gauss:k={k},i={i1}"))?, spec(&format!("gauss:k={k},i={i2}"))?);
    let (s1, s2) = (x1.sequence(), x2.sequence());
    let kf = k as f64;
    match form {
        "transformation" => {
            let v = Matrix::read(p)?;
            let z = complex(p, "z")?;
            let (u, tu) = a0(v.apply(z), 0.0, &g1, s2, ctx)?;
            let (w, tw) = a0(z, 0.0, &g2, s1, ctx)?;
            let coeff = ex(s1.at(v.c)).conj() * ex(s2.at(v.b)).conj();
            let sum = ex(&dedekind_sum_explicit(v.d, v.c, &g2, 1, &g1, 1, &zero(), &zero())?);
            let rhs = PI * I / kf * ex(s1.at(-v.c)).conj() * ex(s2.at(v.b)).conj() * sum + delta(k, principal, v.jac(z));
            done(u - coeff * w, rhs, tu + tw)
        }
        "inversion" => {
            let z = complex(p, "z")?;
            let (u, tu) = a0(-1.0 / z, 0.0, &g1, s2, ctx)?;
            let (w, tw) = a0(z, 0.0, &g2, s1, ctx)?;
            let (lhs, rhs) = match (principal, x1.parity()) {
                (true, _) => {
                    let phi = euler_phi(k as u64) as f64;
                    (u - w, phi * phi / (2.0 * kf) * (PI * I / 2.0 - log_branch(z)))
                }
                (false, -1) => (u + w, -kf / (PI * I) * dirichlet_l(1, &x1)? * dirichlet_l(1, &x2)?),
                (false, _) => (u - w, C64::zero()),
            };
            done(lhs, rhs, tu + tw)
        }
        "gamma_theta" => {
            let gamma = real(p, "gamma")?;
            let theta = PI * PI / (kf * kf * gamma);
            let (v1, v2) = (chi_vals(&x1), chi_vals(&x2));
            // the n-th terms also carry G(0,χ₁)χ₂(n)/n and χ₂(−1)G(0,χ₂)χ₁(n)/n, which cancel
            let (a, ta) = cosh_double(gamma, &v1, &v2, ctx)?;
            let (b, tb) = cosh_double(theta, &v2, &v1, ctx)?;
            let lhs = a - x2.parity() as f64 * b;
            let z = PI * I / (kf * gamma);
            let rhs = PI * I / kf * x1.parity() as f64 * pf(1, &zero(), &g1, 1)? * pf(1, &zero(), &g2, 1)?
                + delta(k, principal, z);
            done(lhs, rhs, ta + tb)
        }
        f => Err(unknown_form(f)),
    }
}

pub fn n10(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    match text(p, "form")? {
        "log" => {
            let gamma = real(p, "gamma")?;
            let theta = PI * PI / gamma;
            let lo = gamma.min(theta);
            let f = |x: f64| 1.0 / (1.0 + (-x).exp());
            // term j covers n = j − 1, i.e. 2n+1 = 2j − 1
            let (v, t) = exp_series(lo.exp(), 0.0, 2.0 * lo, ctx, |j| {
                let o = 2.0 * j - 1.0;
                re((f(o * gamma) - f(o * theta)) / o)
            })?;
            done(v, re((gamma.ln() - theta.ln()) / 8.0), t)
        }
        "sech_squared" => {
            let gamma = real(p, "gamma")?;
            let theta = PI * PI / gamma;
            let (a, ta) = sech2_series(gamma, ctx)?;
            let (b, tb) = sech2_series(theta, ctx)?;
            done(gamma * a + theta * b, re(1.0), gamma * ta + theta * tb)
        }
        "sech_squared_at_pi" => {
            let (a, t) = sech2_series(PI, ctx)?;
            done(a, re(1.0 / (2.0 * PI)), t)
        }
        f => Err(unknown_form(f)),
    }
}

/// Σ_{n≥0} sech²((2n+1)x/2).
fn sech2_series(x: f64, ctx: &Ctx) -> Result<(C64, f64)> {
    exp_series(4.0 * x.exp(), 0.0, 2.0 * x, ctx, |j| {
        let c = ((2.0 * j - 1.0) * x / 2.0).cosh();
        re(1.0 / (c * c))
    })
}

/// Σ_n G(n+k/2,χ_a) G(inkx/π + k/2, χ_b)/(n(1 − e^{−2nkx})).
fn shifted_gauss_series(x: f64, xa: &[C64], xb: &[C64], ctx: &Ctx) -> Result<(C64, f64)> {
    let k = xa.len() as f64;
    let amp = k * k / (1.0 - (-2.0 * k * x).exp());
    exp_series(amp, -1.0, 2.0 * x, ctx, |m| {
        let w = I * m * k * x / PI + k / 2.0;
        gauss_fn(re(m + k / 2.0), xa) * gauss_fn(w, xb) / (m * (1.0 - (-2.0 * m * k * x).exp()))
    })
}

pub fn n11(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let form = text(p, "form")?;
    match form {
        "example_mod4" => return n_ex1(p, ctx),
        "example_mod8" => {
            let gamma = real(p, "gamma")?;
            let theta = PI * PI / (64.0 * gamma);
            let f = |x: f64| {
                let amp = 1.0 / (1.0 - (-16.0 * x).exp());
                exp_series(amp, -1.0, 8.0 * x, ctx, |m| {
                    let sign = if (m as i64) % 2 == 0 { 1.0 } else { -1.0 };
                    re(sign / (2.0 * m * (8.0 * m * x).sinh()))
                })
            };
            let ((a, ta), (b, tb)) = (f(gamma)?, f(theta)?);
            return done(a - b, re((gamma - theta) / 3.0), ta + tb);
        }
        "example_mod6" => {
            let gamma = real(p, "gamma")?;
            let theta = PI * PI / (9.0 * gamma);
            let f = |x: f64| {
                exp_series(1.0, -1.0, x, ctx, |m| {
                    let sign = if (m as i64) % 2 == 0 { 1.0 } else { -1.0 };
                    re(sign * (2.0 * PI * m / 3.0).sin() * (m * x).cosh() / (m * (2.0 * (2.0 * m * x).cosh() + 1.0)))
                })
            };
            let ((a, ta), (b, tb)) = (f(gamma)?, f(theta)?);
            return done(a + b, re(-PI / 9.0), ta + tb);
        }
        _ => {}
    }
    let (k, i1, i2) = (uint(p, "k")?, uint(p, "i1")?, uint(p, "i2")?);
    let (x1, x2) = (char_of(k, i1)?, char_of(k, i2)?);
    let (s1, s2) = (x1.sequence(), x2.sequence());
    // the B0*·B2* terms enter at half weight for principal characters
    let w = if x1.is_principal() || x2.is_principal() { 0.5 } else { 1.0 };
    let kf = k as f64;
    let z0 = zero();
    match form {
        "transformation" => {
            let v = Matrix::read(p)?;
            let z = complex(p, "z")?;
            let alt = |i: u32| spec(&format!("altchar:k={k},i={i}"));
            let gs = |i: u32| spec(&format!("gauss_shift:k={k},i={i}"));
            let (u, tu) = a0(v.apply(z), 0.0, &alt(i1)?, &gs(i2)?, ctx)?;
            let (r, tr) = a0(z, 0.0, &alt(i2)?, &gs(i1)?, ctx)?;
            let coeff = ex(s1.at(v.c)) * ex(s2.at(v.b));
            let star = dedekind_sum_explicit(v.d, v.c, &alt(i2)?, 1, &alt(i1)?, -1, &z0, &z0)?;
            let (c, j) = (v.c as f64, v.jac(z));
            let rhs = PI * I * ex(s1.at(-v.c)) * ex(s2.at(v.b)) * ex(&star)
                - w * PI * I / (c * j) * ex(&b_star(0, s2)?) * ex(&b_star(2, s1)?)
                - w * 2.0 * PI * I / c * j * ex(s2.at(-v.b)) * ex(&b_star(0, s1)?) * ex(&p_star(2, &z0, s2)?);
            done(u - coeff * r, rhs, tu + tr)
        }
        "gamma_theta" => {
            let gamma = real(p, "gamma")?;
            let theta = PI * PI / (kf * kf * gamma);
            let (v1, v2) = (chi_vals(&x1), chi_vals(&x2));
            let (a, ta) = shifted_gauss_series(gamma, &v2, &v1, ctx)?;
            let (b, tb) = shifted_gauss_series(theta, &v1, &v2, ctx)?;
            let lhs = a - x2.parity() as f64 * b;
            let rhs = PI * I * ex(&p_star(1, &z0, s2)?) * ex(&p_star(1, &z0, s1)?)
                - w * kf * gamma * ex(&b_star(0, s2)?) * ex(&b_star(2, s1)?)
                + w * theta * kf * x2.parity() as f64 * ex(&b_star(0, s1)?) * ex(&b_star(2, s2)?);
            done(lhs, rhs, ta + tb)
        }
        f => Err(unknown_form(f)),
    }
}

pub fn n_ex1(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    primitive_char(4, 1)?;
    let gamma = real(p, "gamma")?;
    let theta = PI * PI / gamma;
    let f = |x: f64| exp_series(1.0, -1.0, x / 2.0, ctx, |m| re(chi4(m) / (m * 2.0 * (m * x / 2.0).cosh())));
    let ((a, ta), (b, tb)) = (f(gamma)?, f(theta)?);
    done(a + b, re(PI / 8.0), ta + tb)
}

pub fn n12(p: &Value, _: &Ctx) -> Result<Outcome> {
    match text(p, "form")? {
        "l_at_zero" => {
            let (a, beta, theta) = (seq(p, "A")?, int(p, "beta")?, rational(p, "theta")?);
            let l = periodic_l(C64::zero(), &a, beta, &theta)?;
            done(l, pf(1, &-theta, &a, beta)?, 0.0)
        }
        "bridge" => {
            let (k, i, r) = (uint(p, "k")?, uint(p, "i")?, uint(p, "r")?);
            let chi = char_of(k, i)?;
            let g = spec(&format!("gauss:k={k},i={i}"))?;
            let rhs = -2.0 * (re(k as f64) / (2.0 * PI * I)).powi(r as i32) * dirichlet_l(r, &chi)?;
            done(pf(r, &zero(), &g, 1)?, rhs, 0.0)
        }
        f => Err(unknown_form(f)),
    }
}

pub fn n13(p: &Value, _: &Ctx) -> Result<Outcome> {
    let args = LoopArgs {
        c: int(p, "c")?,
        d: int(p, "d")?,
        k: int(p, "k")?,
        mu: int(p, "mu")?,
        v: int(p, "v")?,
        j: int(p, "j")?,
        r1: rational(p, "R1")?,
        r2: rational(p, "R2")?,
    };
    let (z, n) = (complex(p, "z")?, uint(p, "N")?);
    done(loop_i_residue(z, n, &args)?, loop_i_quadrature(z, n, &args)?, 0.0)
}

const EPS: f64 = 1e-3;

/// Richardson extrapolation to s → 0 of the symmetric average of F(±ε).
fn limit_at_zero(f: impl Fn(f64) -> Result<(C64, f64)>) -> Result<(C64, f64)> {
    let sym = |e: f64| -> Result<(C64, f64)> {
        let (a, ta) = f(e)?;
        let (b, tb) = f(-e)?;
        Ok(((a + b) / 2.0, (ta + tb) / 2.0))
    };
    let (h, th) = sym(EPS)?;
    let (q, tq) = sym(EPS / 2.0)?;
    Ok(((4.0 * q - h) / 3.0, (4.0 * tq + th) / 3.0))
}

/// Γ(s)((cz+d)^{−s} G(Vz, s; first) − G(z, s; second)).
fn weighted_difference(
    v: Matrix,
    z: C64,
    first: &EisensteinArgs,
    second: &EisensteinArgs,
    budget: SeriesBudget,
) -> impl Fn(f64) -> Result<(C64, f64)> {
    let (first, second) = (first.clone(), second.clone());
    move |s: f64| {
        let s = re(s);
        let a = gamma_g_via_fourier(v.apply(z), s, &first, budget)?;
        let b = gamma_g_via_fourier(z, s, &second, budget)?;
        let w = cpow(v.jac(z), -s);
        Ok((w * a.value - b.value, w.norm() * a.achieved_tail + b.achieved_tail))
    }
}

pub fn n14(p: &Value, ctx: &Ctx) -> Result<Outcome> {
    let form = text(p, "form")?;
    let (a, b) = (seq(p, "A")?, seq(p, "B")?);
    let z = complex(p, "z")?;
    let two_pi_i = 2.0 * PI * I;
    if form == "inversion" {
        let v = Matrix { a: 0, b: -1, c: 1, d: 0 };
        let first = EisensteinArgs::new(b.clone(), a.clone()).scaled(1, -1);
        let second = EisensteinArgs::new(a.clone(), b.clone()).scaled(-1, -1);
        let (lhs, t) = limit_at_zero(weighted_difference(v, z, &first, &second, weighted(ctx, 8.0).budget))?;
        let z0 = zero();
        let rhs = two_pi_i * pf(1, &z0, &b, 1)? * pf(1, &z0, &a, -1)?
            - two_pi_i / z * bf(0, &a)? * pf(2, &z0, &b, -1)?
            - two_pi_i * z * bf(0, &b)? * pf(2, &z0, &a, 1)?;
        return done(lhs, rhs, t);
    }
    let v = Matrix::read(p)?;
    let shifted = form.ends_with("_shifted");
    let (r1, r2) = if shifted { (rational(p, "r1")?, rational(p, "r2")?) } else { (zero(), zero()) };
    let q = |n: i64| Rational::from_integer(n.into());
    let big_r1 = q(v.a) * &r1 + q(v.c) * &r2;
    let big_r2 = q(v.b) * &r1 + q(v.d) * &r2;
    let (c, d) = (v.c, v.d);
    let (cf, j) = (c as f64, v.jac(z));
    let mixed = q(c) * &big_r2 - q(d) * &big_r1;
    let first = EisensteinArgs::new(a.clone(), b.clone()).shifted(r1.clone(), r2.clone());
    let (second, rhs) = match form.trim_end_matches("_shifted") {
        "ad_zero" => {
            let second = EisensteinArgs::new(b.clone(), a.clone()).scaled(-v.b, -c).shifted(big_r1.clone(), big_r2.clone());
            let sum = dedekind_sum_explicit(d, c, &b, v.b, &a, c, &big_r2, &-&big_r1)?;
            let rhs = two_pi_i * ex(&sum) - two_pi_i / (cf * j) * bf(0, &b)? * pf(2, &mixed, &a, 1)?
                - two_pi_i / cf * j * bf(0, &a)? * pf(2, &big_r1, &b, v.b)?;
            (second, rhs)
        }
        "bc_zero" => {
            let second = EisensteinArgs::new(a.clone(), b.clone()).scaled(d, v.a).shifted(big_r1.clone(), big_r2.clone());
            let sum = dedekind_sum_explicit(d, c, &a, -d, &b, -v.a, &big_r2, &-&big_r1)?;
            let rhs = two_pi_i * ex(&sum) - two_pi_i / (cf * j) * bf(0, &b)? * pf(2, &mixed, &a, 1)?
                - two_pi_i / cf * j * bf(0, &b)? * pf(2, &-&big_r1, &a, d)?;
            (second, rhs)
        }
        f => return Err(unknown_form(f)),
    };
    let (lhs, t) = limit_at_zero(weighted_difference(v, z, &first, &second, weighted(ctx, 8.0).budget))?;
    done(lhs, rhs, t)
}
