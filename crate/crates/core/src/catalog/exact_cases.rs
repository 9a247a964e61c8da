//! Evaluators of the exact cases. Each returns `LHS − RHS` as a cyclotomic number.

use num::{One, Zero};
use serde_json::Value;

use super::params::{int, rational, seq, text, uint};
use super::{Ctx, Outcome};
use crate::arith::{euler_phi, gcd};
use crate::bernoulli::{
    bernoulli_function_p, bernoulli_function_p_with, bernoulli_poly, euler_number, factorial, p_star, b_star,
    periodic_b, periodic_p, periodic_p_with, P1Convention,
};
use crate::dedekind::{classical_s, dedekind_sum_explicit, dedekind_sum_explicit_with, least_b};
use crate::error::{Error, Result};
use crate::exact::{int as q, rat, Cyclotomic, Rational};
use crate::sequences::{dirichlet_characters, gauss_sum, make_sequence, PeriodicSequence};

type C = Cyclotomic;

fn zero() -> Rational {
    Rational::zero()
}

fn cq(x: Rational) -> C {
    C::from_rational(&x)
}

fn p(n: u32, x: &Rational, a: &PeriodicSequence, c: i64) -> Result<C> {
    periodic_p(n, x, a, c)
}

fn p0(n: u32, a: &PeriodicSequence, c: i64) -> Result<C> {
    periodic_p(n, &zero(), a, c)
}

/// s(X,Y; S_α, T_β) with no shifts.
fn s(x: i64, y: i64, a: &PeriodicSequence, alpha: i64, b: &PeriodicSequence, beta: i64) -> Result<C> {
    dedekind_sum_explicit(x, y, a, alpha, b, beta, &zero(), &zero())
}

fn pf(n: u32, x: Rational) -> Result<Rational> {
    bernoulli_function_p(n, &x)
}

fn ch(k: u32, i: u32) -> Result<PeriodicSequence> {
    make_sequence(&format!("char:k={k},i={i}"))
}

fn gauss(k: u32, i: u32) -> Result<PeriodicSequence> {
    make_sequence(&format!("gauss:k={k},i={i}"))
}

fn conj_at(a: &PeriodicSequence, n: i64) -> C {
    a.at(n).conj()
}

/// {(−1)ⁿ χ(n)} on the even period of χ.
fn alt(chi: &PeriodicSequence) -> Result<PeriodicSequence> {
    PeriodicSequence::from_fn(chi.period(), |n| if n % 2 == 0 { chi.at(n).clone() } else { -chi.at(n).clone() })
}

/// The first nonzero entry, so that a list of required equalities reports one residual.
fn first_nonzero(rs: Vec<C>) -> C {
    rs.into_iter().find(|r| !r.is_zero()).unwrap_or_else(C::zero)
}

fn done(r: C) -> Result<Outcome> {
    Ok(Outcome::exact(r))
}

fn unknown_form(f: &str) -> Error {
    Error::Domain(format!("unknown form `{f}`"))
}

/// Σ_{n=1}^{c−1} w(n) P(n/c) P(hn/c) for any h, coprime to c or not.
fn two_factor_sum(h: i64, c: i64, sign: bool, saw: bool) -> Result<Rational> {
    let conv = if saw { P1Convention::Sawtooth } else { P1Convention::Bernoulli };
    let mut acc = zero();
    for n in 1..c {
        let t = bernoulli_function_p_with(1, &rat(n, c), conv)? * bernoulli_function_p_with(1, &rat(h * n, c), conv)?;
        acc += if sign && n % 2 == 1 { -t } else { t };
    }
    Ok(acc)
}

fn s_cl(h: i64, c: i64) -> Result<Rational> {
    two_factor_sum(h, c, false, true)
}

fn s2(h: i64, c: i64) -> Result<Rational> {
    two_factor_sum(h, c, true, false)
}

fn s3(h: i64, c: i64) -> Result<Rational> {
    let mut acc = zero();
    for n in 1..c {
        let t = pf(1, rat(h * n, c))?;
        acc += if n % 2 == 1 { -t } else { t };
    }
    Ok(acc)
}

pub fn e1(pr: &Value, _: &Ctx) -> Result<Outcome> {
    let (c, d) = (int(pr, "c")?, int(pr, "d")?);
    let lhs = classical_s(d, c)? + classical_s(c, d)?;
    let rhs = rat(-1, 4) + (rat(d, c) + rat(c, d) + rat(1, d * c)) / q(12);
    done(cq(lhs - rhs))
}

struct Pair {
    a: PeriodicSequence,
    b: PeriodicSequence,
    c: i64,
    d: i64,
    bb: i64,
}

fn pair(pr: &Value) -> Result<Pair> {
    let (c, d) = (int(pr, "c")?, int(pr, "d")?);
    Ok(Pair { a: seq(pr, "A")?, b: seq(pr, "B")?, c, d, bb: least_b(c, d)? })
}

pub fn e2(pr: &Value, _: &Ctx) -> Result<Outcome> {
    let Pair { a, b, c, d, bb } = pair(pr)?;
    let lhs = s(-c, d, &a, c, &b, -bb)? - s(d, c, &b, bb, &a, c)?;
    let rhs = p0(1, &b, -bb)? * p0(1, &a, -c)?
        - periodic_b(0, &a)? * p0(2, &b, bb)? * &rat(d, c)
        - periodic_b(0, &b)? * p0(2, &a, c)? * &rat(c, d)
        - periodic_b(0, &b)? * periodic_b(2, &a)? * &rat(1, 2 * d * c);
    done(lhs - rhs)
}

pub fn e3(pr: &Value, _: &Ctx) -> Result<Outcome> {
    let Pair { a, b, c, d, bb } = pair(pr)?;
    let f0p1 = a.at(0) * p0(1, &b, 1)?;
    match text(pr, "form")? {
        "swapped" => {
            let lhs = s(c, d, &a, c, &b, bb)? + s(d, c, &b, bb, &a, c)?;
            let rhs = -(p0(1, &b, -bb)? * p0(1, &a, -c)?)
                + periodic_b(0, &b)? * periodic_b(2, &a)? * &rat(1, 2 * d * c)
                + periodic_b(0, &a)? * p0(2, &b, bb)? * &rat(d, c)
                + periodic_b(0, &b)? * p0(2, &a, c)? * &rat(c, d)
                - f0p1;
            done(lhs - rhs)
        }
        "sign_change" => done(s(-c, d, &a, c, &b, -bb)? + s(c, d, &a, c, &b, bb)? + f0p1),
        f => Err(unknown_form(f)),
    }
}

struct Shifted {
    p: Pair,
    r1: Rational,
    r2: Rational,
}

fn shifted(pr: &Value) -> Result<Shifted> {
    Ok(Shifted { p: pair(pr)?, r1: rational(pr, "R1")?, r2: rational(pr, "R2")? })
}

pub fn e4(pr: &Value, _: &Ctx) -> Result<Outcome> {
    let Shifted { p: Pair { a, b, c, d, bb }, r1, r2 } = shifted(pr)?;
    let lhs = dedekind_sum_explicit(-c, d, &a, c, &b, -bb, &-&r1, &-&r2)?
        - dedekind_sum_explicit(d, c, &b, bb, &a, c, &r2, &-&r1)?;
    let cr = q(c) * &r2 - q(d) * &r1;
    let rhs = p(1, &r2, &b, -bb)? * p(1, &-&r1, &a, -c)?
        - periodic_b(0, &b)? * p(2, &cr, &a, 1)? * &rat(1, c * d)
        - periodic_b(0, &a)? * p(2, &r2, &b, -bb)? * &rat(d, c)
        - periodic_b(0, &b)? * p(2, &r1, &a, c)? * &rat(c, d);
    done(lhs - rhs)
}

pub fn e4_corrected(pr: &Value, _: &Ctx) -> Result<Outcome> {
    let Shifted { p: Pair { a, b, c, d, bb }, r1, r2 } = shifted(pr)?;
    let saw = P1Convention::Sawtooth;
    let pw = |n: u32, x: &Rational, s: &PeriodicSequence, m: i64| periodic_p_with(n, x, s, m, saw);
    let lhs = dedekind_sum_explicit_with(-c, d, &a, c, &b, -bb, &-&r1, &-&r2, saw)?
        - dedekind_sum_explicit_with(d, c, &b, -bb, &a, -c, &-&r2, &r1, saw)?;
    let cr = q(c) * &r2 - q(d) * &r1;
    let rhs = -(pw(1, &r1, &b, bb)? * pw(1, &-&r2, &a, -c)?)
        - periodic_b(0, &a)? * pw(2, &r1, &b, bb)? * &rat(d, c)
        - periodic_b(0, &b)? * pw(2, &r2, &a, c)? * &rat(c, d)
        - periodic_b(0, &b)? * pw(2, &cr, &a, 1)? * &rat(1, c * d);
    done(lhs - rhs)
}

struct CharPair {
    k: u32,
    i1: u32,
    i2: u32,
    x1: PeriodicSequence,
    x2: PeriodicSequence,
    c: i64,
    d: i64,
    b: i64,
}

fn char_pair(pr: &Value) -> Result<CharPair> {
    let (k, i1, i2) = (uint(pr, "k")?, uint(pr, "i1")?, uint(pr, "i2")?);
    let (c, d) = (int(pr, "c")?, int(pr, "d")?);
    Ok(CharPair { k, i1, i2, x1: ch(k, i1)?, x2: ch(k, i2)?, c, d, b: least_b(c, d)? })
}

fn unit() -> PeriodicSequence {
    PeriodicSequence::constant(1, C::one()).expect("period 1")
}

pub fn e5(pr: &Value, _: &Ctx) -> Result<Outcome> {
    let form = text(pr, "form")?;
    if form.starts_with("identity_seq") {
        let (c, d) = (int(pr, "c")?, int(pr, "d")?);
        let i = unit();
        let quarter = rat(1, 4);
        return match form {
            "identity_seq" => done(s(d, c, &i, 0, &i, 1)? - cq(classical_s(d, c)? + quarter)),
            "identity_seq_sign_change" => done(s(-c, d, &i, 1, &i, 1)? - cq(quarter - classical_s(c, d)?)),
            f => Err(unknown_form(f)),
        };
    }
    let CharPair { x1, x2, c, d, b, .. } = char_pair(pr)?;
    match form {
        "vanishing" => done(s(c, d, &x1, 1, &x2, 1)?),
        "reciprocity" => {
            let lhs = s(c, d, &x1, 1, &x2, 1)? + s(d, c, &x2, 1, &x1, 1)?;
            let x1c = conj_at(&x1, c);
            let coeff = (&x1c * &cq(rat(1, c)) + C::from_int(c)) * conj_at(&x2, b) * &rat(1, 2 * d);
            let rhs = -(periodic_b(1, &x1)? * periodic_b(1, &x2)?)
                + coeff * periodic_b(0, &x2)? * periodic_b(2, &x1)?
                + x1c * periodic_b(0, &x1)? * periodic_b(2, &x2)? * &rat(d, 2 * c);
            done(lhs - rhs)
        }
        f => Err(unknown_form(f)),
    }
}

pub fn e6(pr: &Value, _: &Ctx) -> Result<Outcome> {
    let form = text(pr, "form")?;
    if form.starts_with("k2_") {
        let (c, d) = (int(pr, "c")?, int(pr, "d")?);
        let (x0, c2) = (ch(2, 0)?, gauss(2, 0)?);
        return match form {
            "k2_first" => {
                let rhs = q(2) * s_cl(c, 2 * d)? - q(3) * s_cl(c, d)? + s_cl(2 * c, d)?;
                done(s(c, d, &x0, 1, &c2, 1)? - cq(rhs))
            }
            "k2_second" => done(s(d, c, &c2, 1, &x0, 1)? - cq(s2(2 * d, 2 * c)? - s2(d, 2 * c)?)),
            f => Err(unknown_form(f)),
        };
    }
    let CharPair { k, i2, x1, x2, c, d, .. } = char_pair(pr)?;
    let g2 = gauss(k, i2)?;
    let swapped = form.ends_with("_swapped");
    let lhs = if swapped {
        s(c, d, &g2, 1, &x1, 1)? + s(d, c, &x1, 1, &g2, 1)?
    } else {
        s(c, d, &x1, 1, &g2, 1)? + s(d, c, &g2, 1, &x1, 1)?
    };
    let rhs = match form.trim_end_matches("_swapped") {
        "nonprincipal" => -(x1.at(-1) * x2.at(-1) * p0(1, &x1, 1)? * p0(1, &g2, 1)?),
        "principal" => {
            let w = if swapped { (rat(1, c) + q(c)) / q(d) } else { rat(d, c) };
            periodic_b(0, &x1)? * p0(2, &g2, 1)? * &w
        }
        f => return Err(unknown_form(f)),
    };
    done(lhs - rhs)
}

pub fn e7(pr: &Value, _: &Ctx) -> Result<Outcome> {
    let form = text(pr, "form")?;
    if form == "k2_s2" {
        let (c, d) = (int(pr, "c")?, int(pr, "d")?);
        let c2 = gauss(2, 0)?;
        let rhs = q(2) * s2(d, 2 * c)? - s2(2 * d, 2 * c)? + rat(1, 4);
        return done(s(d, c, &c2, 1, &c2, 1)? - cq(rhs));
    }
    let CharPair { k, i1, i2, c, d, .. } = char_pair(pr)?;
    let (g1, g2) = (gauss(k, i1)?, gauss(k, i2)?);
    let lhs = s(c, d, &g1, 1, &g2, 1)? + s(d, c, &g2, 1, &g1, 1)?;
    let rhs = match form {
        "principal" => {
            let phi = euler_phi(k as u64) as i64;
            cq(rat(phi * phi, 4))
        }
        "nonprincipal" => -(p0(1, &g1, 1)? * p0(1, &g2, 1)?),
        f => return Err(unknown_form(f)),
    };
    done(lhs - rhs)
}

/// s*(X,Y; χ_a, χ_b) = s(X,Y; (−1)ⁿχ_a, ((−1)ⁿχ_b)_{−1}).
fn s_star(x: i64, y: i64, chi_a: &PeriodicSequence, chi_b: &PeriodicSequence) -> Result<C> {
    s(x, y, &alt(chi_a)?, 1, &alt(chi_b)?, -1)
}

pub fn e8(pr: &Value, _: &Ctx) -> Result<Outcome> {
    let CharPair { x1, x2, c, d, b, .. } = char_pair(pr)?;
    let sign = x1.at(-1) * x2.at(-1);
    let lhs = s_star(c, d, &x1, &x2)? + sign * s_star(d, c, &x2, &x1)?;
    let zero = zero();
    let main = -(x2.at(-1) * p_star(1, &zero, &x2)? * p_star(1, &zero, &x1)?);
    let rhs = match text(pr, "form")? {
        "nonprincipal" => main,
        "full" => {
            main + conj_at(&x1, -c) * conj_at(&x2, -b) * b_star(0, &x2)? * b_star(2, &x1)? * &rat(1, 2 * d * c)
                + conj_at(&x1, c) * b_star(0, &x1)? * p_star(2, &zero, &x2)? * &rat(d, c)
                + x1.at(-1) * conj_at(&x2, -b) * b_star(0, &x2)? * p_star(2, &zero, &x1)? * &rat(c, d)
        }
        f => return Err(unknown_form(f)),
    };
    done(lhs - rhs)
}

struct ExpCase {
    k: u32,
    c: i64,
    d: i64,
    a: PeriodicSequence,
    s1: C,
    s2: C,
}

fn exp_case(pr: &Value) -> Result<ExpCase> {
    let (k, c, d) = (uint(pr, "k")?, int(pr, "c")?, int(pr, "d")?);
    let a = make_sequence(&format!("exp:k={k}"))?;
    let ki = k as i64;
    let ah = PeriodicSequence::from_fn(k, |n| if (n - 1) % ki == 0 { C::one() } else { C::zero() })?;
    let b = least_b(c, d)?;
    let s1 = s(c, d, &a, c, &ah, b)?;
    let s2 = s(d, c, &ah, b, &a, c)?;
    Ok(ExpCase { k, c, d, a, s1, s2 })
}

/// 1/(1 − ζ^c) with ζ = e(1/k), which is 1/2 + (i/2)cot(πc/k).
fn half_cot(k: u32, c: i64) -> Result<C> {
    (C::one() - C::root_of_unity(k, c)?).inv()
}

/// 2s(d,c) − s(2d,c) + s₂(2c,2d) − s₂(c,2d) + s₃(d/2,c) − ½s₃(d,c).
fn hardy_chain(c: i64, d: i64) -> Result<Rational> {
    Ok(q(2) * s_cl(d, c)? - s_cl(2 * d, c)? + s2(2 * c, 2 * d)? - s2(c, 2 * d)? + s3(d / 2, c)? - s3(d, c)? / q(2))
}

pub fn e9(pr: &Value, _: &Ctx) -> Result<Outcome> {
    let ExpCase { k, c, d, a, s1, s2: s2v } = exp_case(pr)?;
    let pc = pf(1, rat(c, k as i64))?;
    match text(pr, "form")? {
        "value" => {
            let rhs = -(half_cot(k, c)? * &pc) + cq(pf(2, rat(c, k as i64))? * rat(d, c));
            done(s1 + s2v - rhs)
        }
        "first_sum" => {
            let dk = d * k as i64;
            let mut f1 = C::zero();
            for n in 1..=dk {
                let w = pf(1, rat(n, dk))? * pf(1, rat(c * (d + n), dk))?;
                f1 += C::root_of_unity(k, c * n)? * &w;
            }
            done(s1 - f1)
        }
        "second_sum" => {
            let mut f2 = C::zero();
            for mu in 0..c {
                let w = pf(1, rat(mu, c) - rat(1, k as i64))?;
                f2 += p(1, &rat(d * k as i64 * mu, c), &a, c)? * &w;
            }
            done(s2v - f2)
        }
        "k2_value" => done(s1 + s2v + cq(rat(d, 24 * c))),
        "k2_first_hardy" => done(s1 - cq(s2(2 * c, 2 * d)? - s2(c, 2 * d)?)),
        "k2_second_hardy" => {
            let rhs = q(2) * s_cl(d, c)? + s3(d / 2, c)? - s_cl(2 * d, c)? - s3(d, c)? / q(2);
            done(s2v - cq(rhs))
        }
        "k2_chain" => done(cq(hardy_chain(c, d)? + rat(d, 24 * c))),
        f => Err(unknown_form(f)),
    }
}

pub fn e9_corrected(pr: &Value, _: &Ctx) -> Result<Outcome> {
    let ExpCase { k, c, d, a, s1, s2: s2v } = exp_case(pr)?;
    let ki = k as i64;
    match text(pr, "form")? {
        "value" => {
            let rhs = -(half_cot(k, c)? * &pf(1, rat(c, ki))?)
                + periodic_b(2, &a)? * &rat(1, 2 * c * d * ki)
                + p0(2, &a, c)? * &rat(c, d * ki)
                + cq(pf(1, rat(1, ki))?);
            done(s1 + s2v - rhs)
        }
        "k2_value" => done(s1 + s2v - cq(rat(c * c + 1, 8 * c * d))),
        "k2_chain" => done(cq(hardy_chain(c, d)? - rat(c * c + 1, 8 * c * d))),
        f => Err(unknown_form(f)),
    }
}

pub fn e10(pr: &Value, _: &Ctx) -> Result<Outcome> {
    match text(pr, "form")? {
        "raabe" => {
            let (n, r) = (uint(pr, "n")?, int(pr, "r")?);
            let x = rational(pr, "x")?;
            let mut rhs = zero();
            for m in 0..r {
                rhs += pf(n, (q(m) + &x) / q(r))?;
            }
            let scale = Rational::from_integer(num::BigInt::from(r).pow(n)) / q(r);
            done(cq(pf(n, x)? - rhs * scale))
        }
        "polynomial_reflection" => {
            let m = uint(pr, "m")?;
            let x = rational(pr, "x")?;
            let b = bernoulli_poly(m, &x)?;
            let sign = if m % 2 == 0 { b } else { -b };
            done(cq(bernoulli_poly(m, &(Rational::one() - &x))? - sign))
        }
        "reflection" => {
            let (a, r, c) = (seq(pr, "A")?, uint(pr, "r")?, int(pr, "c")?);
            let x = rational(pr, "x")?;
            let rhs = p(r, &x, &a, -c)?;
            let rhs = if r % 2 == 0 { rhs } else { -rhs };
            done(p(r, &-&x, &a, c)? - rhs)
        }
        "p_at_zero" => {
            let (a, r) = (seq(pr, "A")?, uint(pr, "r")?);
            let b = periodic_b(r, &a)? * &Rational::from_integer(factorial(r)).recip();
            let b = if r % 2 == 0 { b } else { -b };
            done(p0(r, &a, 1)? - b)
        }
        "cosets" => {
            let (a, r, c, d) = (seq(pr, "A")?, uint(pr, "r")?, int(pr, "c")?, int(pr, "d")?);
            let mut lhs = C::zero();
            for j in 1..=c {
                lhs += p(r, &rat(d * j, c), &a, c)?;
            }
            let w = Rational::from_integer(num::BigInt::from(c).pow(r)).recip() * q(c);
            done(lhs - p0(r, &a, 1)? * &w)
        }
        "vanishing" => {
            let (k, i, m) = (uint(pr, "k")?, uint(pr, "i")?, uint(pr, "m")?);
            let chars = dirichlet_characters(k)?;
            let chi = &chars[i as usize];
            let a = chi.sequence();
            let mut rs = vec![if chi.parity() == 1 { periodic_b(2 * m + 1, a)? } else { periodic_b(2 * m, a)? }];
            if !chi.is_principal() {
                rs.push(periodic_b(0, a)?);
            }
            done(first_nonzero(rs))
        }
        "quarter" => {
            let m = uint(pr, "m")?;
            let two_m = Rational::from_integer(num::BigInt::from(2).pow(m));
            let rhs = bernoulli_poly(m, &rat(1, 2))? / &two_m
                - Rational::from_integer(euler_number(m - 1)?) * q(m as i64) / (&two_m * &two_m);
            done(cq(bernoulli_poly(m, &rat(1, 4))? - rhs))
        }
        f => Err(unknown_form(f)),
    }
}

pub fn e11(pr: &Value, _: &Ctx) -> Result<Outcome> {
    match text(pr, "form")? {
        "starred_function" => {
            let (k, i1, m, c) = (uint(pr, "k")?, uint(pr, "i1")?, uint(pr, "m")?, int(pr, "c")?);
            let x = rational(pr, "x")?;
            let chi = ch(k, i1)?;
            done(p(m, &x, &alt(&chi)?, c)? - chi.at(-c) * p_star(m, &x, &chi)?)
        }
        "starred_sum" => {
            let CharPair { x1, x2, c, d, b, .. } = char_pair(pr)?;
            let lhs = s(d, c, &alt(&x2)?, b, &alt(&x1)?, c)?;
            done(lhs - x1.at(-c) * x2.at(b) * s_star(d, c, &x2, &x1)?)
        }
        "cotangent" => {
            let (k, i) = (uint(pr, "k")?, uint(pr, "i")?);
            let chi = ch(k, i)?;
            let g = gauss(k, i)?;
            let mut rhs = C::zero();
            let half = rat(1, 2);
            for j in 1..k as i64 {
                if gcd(j, k as i64) != 1 {
                    continue;
                }
                let z = C::root_of_unity(k, j)?;
                // (i/2)cot(πj/k) = −(ζ^j + 1) / (2(ζ^j − 1))
                let icot = -((&z + C::one()) * (z - C::one()).inv()?) * &half;
                rhs += chi.at(j) * (icot - cq(half.clone()));
            }
            done(p0(1, &g, 1)? - rhs)
        }
        f => Err(unknown_form(f)),
    }
}

pub fn e12(pr: &Value, _: &Ctx) -> Result<Outcome> {
    match text(pr, "form")? {
        "round_trip" => {
            let a = seq(pr, "A")?;
            let back = a.fourier_hat()?.fourier_inverse()?;
            done(first_nonzero((0..a.period() as i64).map(|n| back.at(n) - a.at(n)).collect()))
        }
        "character_dual" => {
            let (k, i) = (uint(pr, "k")?, uint(pr, "i")?);
            let chi = &dirichlet_characters(k)?[i as usize];
            let hat = chi.sequence().fourier_hat()?;
            let kinv = rat(1, k as i64);
            let rs = (0..k as i64)
                .map(|n| Ok(hat.at(n) - gauss_sum(-n, chi)? * &kinv))
                .collect::<Result<Vec<_>>>()?;
            done(first_nonzero(rs))
        }
        f => Err(unknown_form(f)),
    }
}
