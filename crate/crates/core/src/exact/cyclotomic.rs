//! Exact arithmetic in cyclotomic fields Q(ζ_m), power basis modulo Φ_m.

use std::collections::HashMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use num_complex::Complex64;

use super::rational::{to_f64, Rational};
use crate::arith;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ORDER: u32 = 360;

static MAX_ORDER: AtomicU32 = AtomicU32::new(DEFAULT_MAX_ORDER);

/// Largest cyclotomic order that may be constructed.
pub fn max_order() -> u32 {
    MAX_ORDER.load(Ordering::Relaxed)
}

/// Changes the order cap. Fields already cached stay usable.
pub fn set_max_order(m: u32) -> Result<()> {
    if m == 0 {
        return Err(Error::Domain("order cap must be positive".into()));
    }
    MAX_ORDER.store(m, Ordering::Relaxed);
    Ok(())
}

struct Field {
    deg: usize,
    /// Φ_m, low degree first, monic.
    phi: Vec<i64>,
}

fn cache() -> &'static RwLock<HashMap<u32, Arc<Field>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn field(m: u32) -> Result<Arc<Field>> {
    if m == 0 {
        return Err(Error::Domain("cyclotomic order must be positive".into()));
    }
    if m > max_order() {
        return Err(Error::Capacity(format!(
            "cyclotomic order {m} exceeds the configured maximum {}",
            max_order()
        )));
    }
    if let Some(f) = cache().read().expect("cyclotomic cache poisoned").get(&m) {
        return Ok(f.clone());
    }
    let poly = compute_phi(m)?;
    let phi = poly
        .iter()
        .map(|c| i64::try_from(c).map_err(|_| Error::Capacity(format!("Φ_{m} coefficient overflow"))))
        .collect::<Result<Vec<_>>>()?;
    let f = Arc::new(Field { deg: phi.len() - 1, phi });
    cache()
        .write()
        .expect("cyclotomic cache poisoned")
        .entry(m)
        .or_insert(f.clone());
    Ok(f)
}

fn compute_phi(m: u32) -> Result<Vec<BigInt>> {
    let mut p = vec![BigInt::zero(); m as usize + 1];
    p[0] = BigInt::from(-1);
    p[m as usize] = BigInt::one();
    for d in arith::divisors(m as u64) {
        if d == m as u64 {
            continue;
        }
        let q = field(d as u32)?;
        p = exact_div_monic(&p, &q.phi);
    }
    Ok(p)
}

fn exact_div_monic(p: &[BigInt], q: &[i64]) -> Vec<BigInt> {
    let dq = q.len() - 1;
    let mut r = p.to_vec();
    let mut out = vec![BigInt::zero(); p.len() - dq];
    for e in (dq..p.len()).rev() {
        let c = r[e].clone();
        if c.is_zero() {
            continue;
        }
        out[e - dq] = c.clone();
        for (i, &qi) in q.iter().enumerate() {
            if qi != 0 {
                r[e - dq + i] -= &c * qi;
            }
        }
    }
    debug_assert!(r.iter().all(Zero::is_zero), "cyclotomic division not exact");
    out
}

/// Φ_m with integer coefficients, constant term first.
pub fn cyclotomic_polynomial(m: u32) -> Result<Vec<BigInt>> {
    Ok(field(m)?.phi.iter().map(|&c| BigInt::from(c)).collect())
}

/// Reduces a polynomial of any degree modulo Φ, in place, and truncates it.
fn reduce(p: &mut Vec<BigInt>, f: &Field) {
    let n = f.deg;
    for e in (n..p.len()).rev() {
        if p[e].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut p[e]);
        for (i, &qi) in f.phi[..n].iter().enumerate() {
            match qi {
                0 => {}
                1 => p[e - n + i] -= &c,
                -1 => p[e - n + i] += &c,
                _ => p[e - n + i] -= &c * qi,
            }
        }
    }
    p.resize(n, BigInt::zero());
}

/// An element of Q(ζ_m) stored as `num / den` over the power basis 1, ζ, …, ζ^{φ(m)−1}.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic { order: 1, num: vec![BigInt::zero()], den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Cyclotomic { order: 1, num: vec![BigInt::from(n)], den: BigInt::one() }
    }

    pub fn from_rational(q: &Rational) -> Self {
        Cyclotomic { order: 1, num: vec![q.numer().clone()], den: q.denom().clone() }
    }

    /// ζ_m^j = e(j/m).
    pub fn root_of_unity(m: u32, j: i64) -> Result<Self> {
        let f = field(m)?;
        let e = arith::modp(j, m as i64) as usize;
        let mut p = vec![BigInt::zero(); e.max(f.deg) + 1];
        p[e] = BigInt::one();
        reduce(&mut p, &f);
        Ok(Cyclotomic { order: m, num: p, den: BigInt::one() }.normalized())
    }

    /// Builds an element from rational coefficients over the power basis of order `m`.
    pub fn from_coeffs(m: u32, coeffs: &[Rational]) -> Result<Self> {
        let f = field(m)?;
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut p: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        p.resize(p.len().max(f.deg), BigInt::zero());
        reduce(&mut p, &f);
        Ok(Cyclotomic { order: m, num: p, den }.normalized())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Rational coefficients of 1, ζ_m, …, ζ_m^{φ(m)−1}.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num.iter().map(|n| Rational::new(n.clone(), self.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn normalized(mut self) -> Self {
        if self.den.is_negative() {
            self.den = -self.den;
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        let g = self.num.iter().fold(self.den.clone(), |g, c| if c.is_zero() { g } else { g.gcd(c) });
        if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
        if self.order != 1 && self.num[1..].iter().all(Zero::is_zero) {
            self.num.truncate(1);
            self.order = 1;
        }
        if self.num[0].is_zero() && self.num.len() == 1 {
            self.den = BigInt::one();
        }
        self
    }

    /// Re-expresses the element in Q(ζ_m); `m` must be a multiple of the current order.
    pub fn promote(&self, m: u32) -> Result<Self> {
        if !m.is_multiple_of(self.order) {
            return Err(Error::Domain(format!("cannot promote order {} to {m}", self.order)));
        }
        if m == self.order {
            return Ok(self.clone());
        }
        let f = field(m)?;
        let r = (m / self.order) as usize;
        let mut p = vec![BigInt::zero(); (r * (self.num.len() - 1) + 1).max(f.deg)];
        for (j, c) in self.num.iter().enumerate() {
            p[r * j] = c.clone();
        }
        reduce(&mut p, &f);
        Ok(Cyclotomic { order: m, num: p, den: self.den.clone() })
    }

    fn common(&self, other: &Self) -> Result<(Self, Self)> {
        let m = arith::lcm(self.order as i64, other.order as i64) as u32;
        Ok((self.promote(m)?, other.promote(m)?))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.common(other)?;
        let num = a
            .num
            .iter()
            .zip(&b.num)
            .map(|(x, y)| x * &b.den + y * &a.den)
            .collect();
        Ok(Cyclotomic { order: a.order, num, den: &a.den * &b.den }.normalized())
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.order == 1 {
            return Ok(other.scale_parts(&self.num[0], &self.den));
        }
        if other.order == 1 {
            return Ok(self.scale_parts(&other.num[0], &other.den));
        }
        let (a, b) = self.common(other)?;
        let f = field(a.order)?;
        let mut p = vec![BigInt::zero(); 2 * f.deg - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    p[i + j] += x * y;
                }
            }
        }
        reduce(&mut p, &f);
        Ok(Cyclotomic { order: a.order, num: p, den: &a.den * &b.den }.normalized())
    }

    fn scale_parts(&self, n: &BigInt, d: &BigInt) -> Self {
        Cyclotomic {
            order: self.order,
            num: self.num.iter().map(|c| c * n).collect(),
            den: &self.den * d,
        }
        .normalized()
    }

    /// Σ qᵢ·xᵢ, promoting once to the lcm order and normalizing once at the end.
    pub fn linear_combination<'a, I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a Rational, &'a Cyclotomic)>,
    {
        let terms: Vec<_> = terms.into_iter().filter(|(q, x)| !q.is_zero() && !x.is_zero()).collect();
        if terms.is_empty() {
            return Ok(Cyclotomic::zero());
        }
        let m = terms.iter().fold(1i64, |a, (_, x)| arith::lcm(a, x.order as i64)) as u32;
        let f = field(m)?;
        let den = terms.iter().fold(BigInt::one(), |a, (q, x)| a.lcm(&(q.denom() * &x.den)));
        let mut acc = vec![BigInt::zero(); f.deg];
        for (q, x) in terms {
            let w = q.numer() * (&den / (q.denom() * &x.den));
            let xp = x.promote(m)?;
            for (a, c) in acc.iter_mut().zip(&xp.num) {
                if !c.is_zero() {
                    *a += c * &w;
                }
            }
        }
        Ok(Cyclotomic { order: m, num: acc, den }.normalized())
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, q: &Rational) -> Self {
        self.scale_parts(q.numer(), q.denom())
    }

    fn neg_ref(&self) -> Self {
        Cyclotomic { order: self.order, num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_m.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inversion of zero".into()));
        }
        if self.order == 1 {
            return Ok(Cyclotomic { order: 1, num: vec![self.den.clone()], den: self.num[0].clone() }.normalized());
        }
        let f = field(self.order)?;
        let modulus: Vec<Rational> = f.phi.iter().map(|&c| Rational::from_integer(c.into())).collect();
        let a: Vec<Rational> = self.coeffs();
        let inv = poly_inv_mod(&a, &modulus).ok_or_else(|| Error::Domain("element not invertible".into()))?;
        Cyclotomic::from_coeffs(self.order, &inv)
    }

    /// Complex conjugate: ζ ↦ ζ^{−1}.
    pub fn conj(&self) -> Self {
        if self.order == 1 {
            return self.clone();
        }
        let f = field(self.order).expect("order already validated");
        let m = self.order as usize;
        let mut p = vec![BigInt::zero(); m];
        for (j, c) in self.num.iter().enumerate() {
            p[(m - j) % m] += c;
        }
        reduce(&mut p, &f);
        Cyclotomic { order: self.order, num: p, den: self.den.clone() }.normalized()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Cyclotomic::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at ζ_m = e^{2πi/m} in double precision.
    pub fn embed(&self) -> Complex64 {
        let d = to_f64(&Rational::from_integer(self.den.clone()));
        let step = std::f64::consts::TAU / self.order as f64;
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| {
                let v = to_f64(&Rational::new(c.clone(), BigInt::one())) / d;
                Complex64::from_polar(v, step * j as f64)
            })
            .sum()
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![Rational::zero()], r);
    }
    let lead = b[db].clone();
    let mut q = vec![Rational::zero(); r.len() - db];
    for e in (db..r.len()).rev() {
        if r[e].is_zero() {
            continue;
        }
        let c = &r[e] / &lead;
        for (i, bi) in b.iter().enumerate() {
            let t = &c * bi;
            r[e - db + i] -= t;
        }
        q[e - db] = c;
    }
    r.truncate(db.max(1));
    trim(&mut r);
    (q, r)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

fn poly_inv_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![Rational::zero()], vec![Rational::one()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = poly_divrem(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    Some(s0.into_iter().map(|x| x / &c).collect())
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other).expect("orders exceed the cyclotomic capacity");
        a.num.iter().zip(&b.num).all(|(x, y)| x * &b.den == y * &a.den)
    }
}

impl Eq for Cyclotomic {}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Cyclotomic::from_rational(&q)
    }
}

impl From<&Rational> for Cyclotomic {
    fn from(q: &Rational) -> Self {
        Cyclotomic::from_rational(q)
    }
}

// Operator forms panic when the promoted order exceeds the capacity; the `try_*`
// methods report it instead.
macro_rules! binop {
    ($tr:ident, $f:ident, $try:ident, $atr:ident, $af:ident) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: &Cyclotomic) -> Cyclotomic {
                self.$try(rhs).expect("cyclotomic capacity exceeded")
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$f(rhs)
            }
        }
        impl $tr<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $f(self, rhs: Cyclotomic) -> Cyclotomic {
                self.$f(&rhs)
            }
        }
        impl $atr<&Cyclotomic> for Cyclotomic {
            fn $af(&mut self, rhs: &Cyclotomic) {
                *self = (&*self).$f(rhs);
            }
        }
        impl $atr<Cyclotomic> for Cyclotomic {
            fn $af(&mut self, rhs: Cyclotomic) {
                *self = (&*self).$f(&rhs);
            }
        }
    };
}

binop!(Add, add, try_add, AddAssign, add_assign);
binop!(Sub, sub, try_sub, SubAssign, sub_assign);
binop!(Mul, mul, try_mul, MulAssign, mul_assign);

impl Mul<&Rational> for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Rational) -> Cyclotomic {
        self.scale(rhs)
    }
}

impl Mul<&Rational> for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Rational) -> Cyclotomic {
        self.scale(rhs)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.neg_ref()
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.neg_ref()
    }
}

impl Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl<'a> Sum<&'a Cyclotomic> for Cyclotomic {
    fn sum<I: Iterator<Item = &'a Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::literal::format_literal(self))
    }
}
