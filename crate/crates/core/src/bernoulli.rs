//! Bernoulli and Euler numbers, Bernoulli polynomials and functions, and their
//! periodic versions attached to a sequence.
//!
//! `P_n(x) = B_n({x})/n!` throughout, with `P_1(x) = −1/2` at integers. The
//! sawtooth `((x))`, which vanishes at integers, is available as [`sawtooth`] and
//! through [`P1Convention::Sawtooth`].
//!
//! For a character χ the values `P_m(x,χ)` and `B_m(χ)` here correspond to
//! `χ(−1)B_m(x,χ̄)` in the classical normalization of generalized Bernoulli numbers.

use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::{OnceLock, RwLock};

use num::bigint::BigInt;
use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{frac, is_integer};
use crate::exact::{int, rat, Cyclotomic, Rational};
use crate::sequences::PeriodicSequence;

pub const DEFAULT_MAX_INDEX: u32 = 64;

static MAX_INDEX: AtomicU32 = AtomicU32::new(DEFAULT_MAX_INDEX);

/// Largest Bernoulli/Euler index served.
pub fn max_index() -> u32 {
    MAX_INDEX.load(Ordering::Relaxed)
}

pub fn set_max_index(n: u32) {
    MAX_INDEX.store(n, Ordering::Relaxed);
}

fn check(n: u32) -> Result<()> {
    if n > max_index() {
        return Err(Error::Capacity(format!("Bernoulli index {n} exceeds the configured maximum {}", max_index())));
    }
    Ok(())
}

/// How `P_1` behaves at integer arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum P1Convention {
    /// `P_1(n) = B_1(0) = −1/2`.
    #[default]
    Bernoulli,
    /// `P_1(n) = 0`, the classical sawtooth.
    Sawtooth,
}

struct Tables {
    bernoulli: Vec<Rational>,
    euler: Vec<BigInt>,
}

fn tables() -> &'static RwLock<Tables> {
    static T: OnceLock<RwLock<Tables>> = OnceLock::new();
    T.get_or_init(|| RwLock::new(Tables { bernoulli: vec![int(1)], euler: vec![BigInt::one()] }))
}

fn binomials(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for j in 0..n {
        let next = row[j as usize].clone() * (n - j) / (j + 1);
        row.push(next);
    }
    row
}

fn extend_to(n: u32) {
    let mut t = tables().write().expect("bernoulli table poisoned");
    while t.bernoulli.len() <= n as usize {
        // Σ_{j=0}^{m} C(m+1, j) B_j = 0
        let m = t.bernoulli.len() as u32;
        let c = binomials(m + 1);
        let s: Rational = (0..m as usize).map(|j| &t.bernoulli[j] * Rational::from_integer(c[j].clone())).sum();
        let b = -s / Rational::from_integer(BigInt::from(m + 1));
        t.bernoulli.push(b);
    }
    while t.euler.len() <= n as usize {
        // Σ_{j even} C(m, j) E_j = 0 for even m ≥ 2
        let m = t.euler.len() as u32;
        if m % 2 == 1 {
            t.euler.push(BigInt::zero());
            continue;
        }
        let c = binomials(m);
        let s: BigInt = (0..m as usize).step_by(2).map(|j| &c[j] * &t.euler[j]).sum();
        t.euler.push(-s);
    }
}

/// B_n from t/(e^t − 1) = Σ B_n tⁿ/n!, so B_1 = −1/2.
pub fn bernoulli_number(n: u32) -> Result<Rational> {
    check(n)?;
    if let Some(b) = tables().read().expect("bernoulli table poisoned").bernoulli.get(n as usize) {
        return Ok(b.clone());
    }
    extend_to(n);
    Ok(tables().read().expect("bernoulli table poisoned").bernoulli[n as usize].clone())
}

/// Euler numbers from sech t = Σ E_n tⁿ/n!: 1, 0, −1, 0, 5, …
pub fn euler_number(n: u32) -> Result<BigInt> {
    check(n)?;
    if let Some(e) = tables().read().expect("bernoulli table poisoned").euler.get(n as usize) {
        return Ok(e.clone());
    }
    extend_to(n);
    Ok(tables().read().expect("bernoulli table poisoned").euler[n as usize].clone())
}

/// B_n(x) = Σ_j C(n,j) B_j x^{n−j}.
pub fn bernoulli_poly(n: u32, x: &Rational) -> Result<Rational> {
    check(n)?;
    extend_to(n);
    let t = tables().read().expect("bernoulli table poisoned");
    let c = binomials(n);
    // Horner in x over the reversed coefficient list
    let mut acc = Rational::zero();
    for j in 0..=n as usize {
        acc = acc * x + &t.bernoulli[j] * Rational::from_integer(c[j].clone());
    }
    Ok(acc)
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * i)
}

/// P_n(x) = B_n({x})/n!, with P_1 = −1/2 at integers.
pub fn bernoulli_function_p(n: u32, x: &Rational) -> Result<Rational> {
    bernoulli_function_p_with(n, x, P1Convention::Bernoulli)
}

pub fn bernoulli_function_p_with(n: u32, x: &Rational, conv: P1Convention) -> Result<Rational> {
    if n == 1 {
        return Ok(if is_integer(x) {
            match conv {
                P1Convention::Bernoulli => rat(-1, 2),
                P1Convention::Sawtooth => Rational::zero(),
            }
        } else {
            frac(x) - rat(1, 2)
        });
    }
    Ok(bernoulli_poly(n, &frac(x))? / Rational::from_integer(factorial(n)))
}

/// ((x)) = x − [x] − 1/2 off the integers, 0 on them.
pub fn sawtooth(x: &Rational) -> Rational {
    if is_integer(x) {
        Rational::zero()
    } else {
        frac(x) - rat(1, 2)
    }
}

fn k_pow(k: u32, e: i64) -> Rational {
    let p = Rational::from_integer(BigInt::from(k).pow(e.unsigned_abs() as u32));
    if e >= 0 {
        p
    } else {
        p.recip()
    }
}

/// P_n(x, A_c) = k^{n−1} Σ_{v=0}^{k−1} f(−cv) P_n((v+x)/k).
pub fn periodic_p(n: u32, x: &Rational, a: &PeriodicSequence, c: i64) -> Result<Cyclotomic> {
    periodic_p_with(n, x, a, c, P1Convention::Bernoulli)
}

pub fn periodic_p_with(n: u32, x: &Rational, a: &PeriodicSequence, c: i64, conv: P1Convention) -> Result<Cyclotomic> {
    let k = a.period();
    let kr = int(k as i64);
    let ws = (0..k as i64)
        .map(|v| bernoulli_function_p_with(n, &((int(v) + x) / &kr), conv))
        .collect::<Result<Vec<_>>>()?;
    let s = Cyclotomic::linear_combination(ws.iter().zip((0..k as i64).map(|v| a.at(-c * v))))?;
    Ok(s.scale(&k_pow(k, n as i64 - 1)))
}

/// B_j(A) = k^{j−1} Σ_{n=0}^{k−1} f(n) B_j(n/k).
pub fn periodic_b(j: u32, a: &PeriodicSequence) -> Result<Cyclotomic> {
    let k = a.period();
    let ws = (0..k as i64)
        .map(|n| bernoulli_poly(j, &rat(n, k as i64)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Cyclotomic::linear_combination(ws.iter().zip(a.values()))?.scale(&k_pow(k, j as i64 - 1)))
}

/// B_j(x, A) = k^{j−1} Σ_{n=0}^{k−1} f(−n) B_j((n+x)/k).
pub fn periodic_b_poly(j: u32, x: &Rational, a: &PeriodicSequence) -> Result<Cyclotomic> {
    let k = a.period();
    let kr = int(k as i64);
    let ws = (0..k as i64)
        .map(|n| bernoulli_poly(j, &((int(n) + x) / &kr)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Cyclotomic::linear_combination(ws.iter().zip((0..k as i64).map(|n| a.at(-n))))?.scale(&k_pow(k, j as i64 - 1)))
}

/// {(−1)^v χ(v)} on the even period k.
fn alternate(chi: &PeriodicSequence) -> Result<PeriodicSequence> {
    if !chi.period().is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "starred functions need an even modulus, got {}",
            chi.period()
        )));
    }
    PeriodicSequence::from_fn(chi.period(), |v| if v % 2 == 0 { chi.at(v).clone() } else { -chi.at(v).clone() })
}

/// P*_m(x, χ̄) = k^{m−1} Σ_v (−1)^v χ(v) P_m((v+x)/k); `chi` is χ, not χ̄.
pub fn p_star(m: u32, x: &Rational, chi: &PeriodicSequence) -> Result<Cyclotomic> {
    periodic_p(m, x, &alternate(chi)?, -1)
}

/// B*_m(χ̄) = k^{m−1} Σ_v (−1)^v χ(v) B_m(v/k) = m!·P*_m(0, χ̄); `chi` is χ.
pub fn b_star(m: u32, chi: &PeriodicSequence) -> Result<Cyclotomic> {
    periodic_b(m, &alternate(chi)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::make_sequence;

    fn q(s: &str) -> Rational {
        crate::exact::rational::parse_rational(s).unwrap()
    }

    #[test]
    fn numbers() {
        assert_eq!(bernoulli_number(0).unwrap(), int(1));
        assert_eq!(bernoulli_number(1).unwrap(), rat(-1, 2));
        assert_eq!(bernoulli_number(2).unwrap(), rat(1, 6));
        assert_eq!(bernoulli_number(3).unwrap(), int(0));
        assert_eq!(bernoulli_number(12).unwrap(), rat(-691, 2730));
        let e: Vec<i64> = (0..9).map(|n| euler_number(n).unwrap().try_into().unwrap()).collect();
        assert_eq!(e, [1, 0, -1, 0, 5, 0, -61, 0, 1385]);
        assert!(matches!(bernoulli_number(65), Err(Error::Capacity(_))));
    }

    #[test]
    fn polynomials() {
        assert_eq!(bernoulli_poly(1, &q("3/4")).unwrap(), q("1/4"));
        assert_eq!(bernoulli_poly(2, &q("1/2")).unwrap(), q("-1/12"));
        assert_eq!(bernoulli_poly(2, &q("1/4")).unwrap(), q("-1/48"));
        // B_m(1/4) = 2^{−m} B_m(1/2) − m 4^{−m} E_{m−1}
        for m in 1..12u32 {
            let rhs = bernoulli_poly(m, &q("1/2")).unwrap() / int(1 << m)
                - int(m as i64) * Rational::from_integer(euler_number(m - 1).unwrap()) / int(1i64 << (2 * m));
            assert_eq!(bernoulli_poly(m, &q("1/4")).unwrap(), rhs, "m={m}");
        }
    }

    #[test]
    fn bernoulli_functions() {
        assert_eq!(bernoulli_function_p(1, &int(0)).unwrap(), rat(-1, 2));
        assert_eq!(bernoulli_function_p(1, &int(-3)).unwrap(), rat(-1, 2));
        assert_eq!(bernoulli_function_p(1, &q("7/3")).unwrap(), q("-1/6"));
        assert_eq!(bernoulli_function_p_with(1, &int(4), P1Convention::Sawtooth).unwrap(), int(0));
        let p2 = bernoulli_function_p(2, &q("1/2")).unwrap();
        assert_eq!(p2, q("-1/24"));
        assert_eq!(
            p2,
            int(2) * (bernoulli_function_p(2, &q("1/4")).unwrap() + bernoulli_function_p(2, &q("3/4")).unwrap())
        );
        assert_eq!(sawtooth(&q("-1/3")), q("1/6"));
    }

    #[test]
    fn periodic_examples() {
        for k in [3u32, 4, 5, 6] {
            let ck = make_sequence(&format!("ramanujan:k={k}")).unwrap();
            let phi = crate::arith::euler_phi(k as u64) as i64;
            assert_eq!(periodic_p(1, &int(0), &ck, 1).unwrap(), Cyclotomic::from_rational(&rat(-phi, 2)));
            let chi0 = make_sequence(&format!("principal:k={k}")).unwrap();
            assert_eq!(periodic_p(0, &q("2/7"), &chi0, 1).unwrap(), Cyclotomic::from_rational(&rat(phi, k as i64)));
        }
        let five = make_sequence("const:k=5").unwrap();
        assert_eq!(periodic_b(0, &five).unwrap(), Cyclotomic::one());
        let chi4 = make_sequence("char:k=4,i=1").unwrap();
        assert_eq!(periodic_b(1, &chi4).unwrap(), Cyclotomic::from_rational(&rat(-1, 2)));
        // the reflected sum 4^{m−1} Σ χ(−v) B_m(v/4) is (m/2) E_{m−1} for odd m
        let reflected = chi4.scale_index(-1);
        for m in [1u32, 3, 5, 7] {
            let e = Rational::from_integer(euler_number(m - 1).unwrap()) * rat(m as i64, 2);
            assert_eq!(periodic_b(m, &reflected).unwrap(), Cyclotomic::from_rational(&e));
        }
    }

    #[test]
    fn starred_examples() {
        let chi4 = make_sequence("char:k=4,i=1").unwrap();
        assert!(b_star(0, &chi4.conj()).unwrap().is_zero());
        let chi0 = make_sequence("principal:k=8").unwrap();
        let b0 = b_star(0, &chi0).unwrap();
        assert_eq!(b0, Cyclotomic::from_rational(&rat(-1, 2)));
        assert_eq!(b0.scale(&int(8)), Cyclotomic::from_int(-4));
        assert!(p_star(1, &int(0), &chi0).unwrap().is_zero());
        for m in [0u32, 2, 3, 4] {
            let lhs = b_star(m, &chi4).unwrap();
            let rhs = p_star(m, &int(0), &chi4).unwrap().scale(&Rational::from_integer(factorial(m)));
            assert_eq!(lhs, rhs, "m={m}");
        }
        assert!(matches!(p_star(1, &int(0), &make_sequence("principal:k=3").unwrap()), Err(Error::Domain(_))));
    }
}
