//! Classical, Hardy–Berndt and periodic Dedekind sums.
//!
//! Every periodic family reduces to one explicit-subscript sum
//!
//! ```text
//! s(X,Y; S_α, T_β; x, y) = Σ_{n=1}^{Yk} S(αn) P_1((n+y)/(Yk)) P_1(X(n+y)/Y + x, T_β)
//! ```
//!
//! where `P_1(u, T_β) = Σ_{v=0}^{k−1} T(−βv) P_1((v+u)/k)` and `k` is the common
//! period of `S` and `T`. [`SumKernel`] holds the rational weights of this sum so
//! that many sequence pairs can share one evaluation of the Bernoulli values.

use num::{Integer, Zero};
use num_complex::Complex64;

use crate::arith::{gcd, lcm, modp};
use crate::bernoulli::{bernoulli_function_p, bernoulli_function_p_with, sawtooth, P1Convention};
use crate::error::{Error, Result};
use crate::exact::{int, rat, Cyclotomic, Rational};
use crate::sequences::PeriodicSequence;

fn require_coprime(d: i64, c: i64) -> Result<()> {
    if c <= 0 {
        return Err(Error::Domain(format!("c must be positive, got c={c}")));
    }
    if gcd(c, d) != 1 {
        return Err(Error::Domain(format!("gcd(c,d) = 1 fails for (d,c) = ({d},{c})")));
    }
    Ok(())
}

/// x ≡ y (mod m), where modulus 0 means equality.
fn congruent(x: i64, y: i64, m: i64) -> bool {
    if m == 0 {
        x == y
    } else {
        modp(x - y, m.abs()) == 0
    }
}

/// s(d,c) = Σ_{n mod c} ((n/c))((dn/c)).
pub fn classical_s(d: i64, c: i64) -> Result<Rational> {
    require_coprime(d, c)?;
    Ok((1..c).map(|n| sawtooth(&rat(n, c)) * sawtooth(&rat(d * n, c))).sum())
}

/// s₂(d,c) = Σ_{n=1}^{c−1} (−1)ⁿ P₁(n/c) P₁(dn/c).
pub fn hardy_s2(d: i64, c: i64) -> Result<Rational> {
    require_coprime(d, c)?;
    (1..c)
        .map(|n| {
            let t = bernoulli_function_p(1, &rat(n, c))? * bernoulli_function_p(1, &rat(d * n, c))?;
            Ok(if n % 2 == 0 { t } else { -t })
        })
        .sum()
}

/// s₃(d,c) = Σ_{n=1}^{c−1} (−1)ⁿ P₁(dn/c).
pub fn hardy_s3(d: i64, c: i64) -> Result<Rational> {
    require_coprime(d, c)?;
    (1..c)
        .map(|n| {
            let t = bernoulli_function_p(1, &rat(d * n, c))?;
            Ok(if n % 2 == 0 { t } else { -t })
        })
        .sum()
}

/// Least nonnegative b with bc ≡ −1 (mod d); for d = 0 the unique b = −c (c = 1).
pub fn least_b(c: i64, d: i64) -> Result<i64> {
    if gcd(c, d) != 1 {
        return Err(Error::Domain(format!("bc ≡ −1 (mod d) has no solution for (c,d) = ({c},{d})")));
    }
    if d == 0 {
        return Ok(-c);
    }
    let m = d.abs();
    Ok((0..m).find(|b| congruent(b * c, -1, m)).expect("coprime residues are invertible"))
}

/// Vz = (az+b)/(cz+d) with ad − bc = 1 and c > 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModularMap {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl ModularMap {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if a * d - b * c != 1 {
            return Err(Error::Domain(format!("ad − bc = 1 fails for ({a},{b},{c},{d})")));
        }
        if c <= 0 {
            return Err(Error::Domain(format!("c must be positive, got c={c}")));
        }
        Ok(ModularMap { a, b, c, d })
    }

    /// Completes (c,d) with the least valid b from [`least_b`].
    pub fn from_cd(c: i64, d: i64) -> Result<Self> {
        require_coprime(d, c)?;
        let b = least_b(c, d)?;
        let a = if d == 0 { 0 } else { (1 + b * c) / d };
        Self::new(a, b, c, d)
    }

    /// a ≡ d ≡ 0 (mod k).
    pub fn ad_zero_mod(&self, k: i64) -> bool {
        congruent(self.a, 0, k) && congruent(self.d, 0, k)
    }

    /// b ≡ c ≡ 0 (mod k).
    pub fn bc_zero_mod(&self, k: i64) -> bool {
        congruent(self.b, 0, k) && congruent(self.c, 0, k)
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        (z * self.a as f64 + self.b as f64) / (z * self.c as f64 + self.d as f64)
    }
}

/// Rational weights M[i][v] of the explicit-subscript sum, indexed by n mod k and v.
#[derive(Clone, Debug)]
pub struct SumKernel {
    k: u32,
    weights: Vec<Vec<Rational>>,
}

impl SumKernel {
    /// Weights of s(X,Y; ·, ·; x, y) for period `k`. `Y = 0` gives the empty sum.
    pub fn new(big_x: i64, big_y: i64, k: u32, x: &Rational, y: &Rational, conv: P1Convention) -> Result<Self> {
        if big_y < 0 {
            return Err(Error::Domain(format!("summation length Y·k needs Y ≥ 0, got Y={big_y}")));
        }
        if k == 0 {
            return Err(Error::Domain("period must be positive".into()));
        }
        let ki = k as i64;
        let kr = int(ki);
        let mut weights = vec![vec![Rational::zero(); k as usize]; k as usize];
        let top = big_y * ki;
        for n in 1..=top {
            let ny = int(n) + y;
            let w1 = bernoulli_function_p_with(1, &(&ny / int(top)), conv)?;
            if w1.is_zero() {
                continue;
            }
            let u = &ny * int(big_x) / int(big_y) + x;
            let row = &mut weights[(n % ki) as usize];
            for (v, slot) in row.iter_mut().enumerate() {
                let w2 = bernoulli_function_p_with(1, &((int(v as i64) + &u) / &kr), conv)?;
                if !w2.is_zero() {
                    *slot += &w1 * w2;
                }
            }
        }
        Ok(SumKernel { k, weights })
    }

    pub fn period(&self) -> u32 {
        self.k
    }

    /// Σ_{i,v} S(αi) T(−βv) M[i][v]; both sequences are read with period k.
    pub fn eval(&self, s: &PeriodicSequence, alpha: i64, t: &PeriodicSequence, beta: i64) -> Result<Cyclotomic> {
        let k = self.k as i64;
        for p in [s.period(), t.period()] {
            if k % p as i64 != 0 {
                return Err(Error::Domain(format!("sequence period {p} does not divide kernel period {k}")));
            }
        }
        let tv: Vec<&Cyclotomic> = (0..k).map(|v| t.at(-beta * v)).collect();
        let mut inner = Vec::with_capacity(k as usize);
        let mut outer = Vec::with_capacity(k as usize);
        for (i, row) in self.weights.iter().enumerate() {
            let si = s.at(alpha * i as i64);
            if si.is_zero() {
                continue;
            }
            inner.push(Cyclotomic::linear_combination(row.iter().zip(tv.iter().copied()))?);
            outer.push(si);
        }
        inner.iter().zip(outer).try_fold(Cyclotomic::zero(), |acc, (a, b)| acc.try_add(&a.try_mul(b)?))
    }
}

fn common_period(s: &PeriodicSequence, t: &PeriodicSequence) -> u32 {
    lcm(s.period() as i64, t.period() as i64) as u32
}

/// s(X,Y; S_α, T_β; x, y) with P₁(n) = −1/2 at integers.
#[allow(clippy::too_many_arguments)]
pub fn dedekind_sum_explicit(
    big_x: i64,
    big_y: i64,
    s: &PeriodicSequence,
    alpha: i64,
    t: &PeriodicSequence,
    beta: i64,
    x: &Rational,
    y: &Rational,
) -> Result<Cyclotomic> {
    dedekind_sum_explicit_with(big_x, big_y, s, alpha, t, beta, x, y, P1Convention::Bernoulli)
}

#[allow(clippy::too_many_arguments)]
pub fn dedekind_sum_explicit_with(
    big_x: i64,
    big_y: i64,
    s: &PeriodicSequence,
    alpha: i64,
    t: &PeriodicSequence,
    beta: i64,
    x: &Rational,
    y: &Rational,
    conv: P1Convention,
) -> Result<Cyclotomic> {
    SumKernel::new(big_x, big_y, common_period(s, t), x, y, conv)?.eval(s, alpha, t, beta)
}

/// The two families of periodic sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// s(d,c;B_b,A_c) = Σ f*(bn) P₁(n/ck) P₁(dn/c, A_c); needs d ≡ 0 (mod k), bc ≡ −1 (mod d).
    BbAc,
    /// s(d,c;A_d,B_a) = Σ f(dn) P₁(n/ck) P₁(dn/c, B_a); needs c ≡ 0 (mod k), ad ≡ 1 (mod c).
    AdBa,
}

/// Arguments of a periodic Dedekind sum. `m` is b for [`Family::BbAc`] and a for
/// [`Family::AdBa`]; `a` and `b` are the sequences A = {f(n)} and B = {f*(n)}.
#[derive(Clone, Debug)]
pub struct SumParams {
    pub d: i64,
    pub c: i64,
    pub m: i64,
    pub a: PeriodicSequence,
    pub b: PeriodicSequence,
    pub x: Rational,
    pub y: Rational,
}

impl SumParams {
    pub fn new(d: i64, c: i64, m: i64, a: PeriodicSequence, b: PeriodicSequence) -> Self {
        SumParams { d, c, m, a, b, x: Rational::zero(), y: Rational::zero() }
    }

    pub fn with_shifts(mut self, x: Rational, y: Rational) -> Self {
        self.x = x;
        self.y = y;
        self
    }

    pub fn period(&self) -> u32 {
        common_period(&self.a, &self.b)
    }

    pub fn check(&self, family: Family) -> Result<()> {
        let (d, c, m, k) = (self.d, self.c, self.m, self.period() as i64);
        require_coprime(d, c)?;
        match family {
            Family::BbAc => {
                if !congruent(d, 0, k) {
                    return Err(Error::Domain(format!("d ≡ 0 (mod k) fails: d={d}, k={k}")));
                }
                if !congruent(m * c, -1, d) {
                    return Err(Error::Domain(format!("bc ≡ −1 (mod d) fails: b={m}, c={c}, d={d}")));
                }
            }
            Family::AdBa => {
                if !congruent(c, 0, k) {
                    return Err(Error::Domain(format!("c ≡ 0 (mod k) fails: c={c}, k={k}")));
                }
                if !congruent(m * d, 1, c) {
                    return Err(Error::Domain(format!("ad ≡ 1 (mod c) fails: a={m}, c={c}, d={d}")));
                }
            }
        }
        Ok(())
    }
}

/// Unshifted periodic Dedekind sum; any shifts in `p` are ignored.
pub fn periodic_dedekind(p: &SumParams, family: Family) -> Result<Cyclotomic> {
    let zero = Rational::zero();
    family_sum(p, family, &zero, &zero)
}

/// Shifted sum s(d,c;·,·;x,y) with the shifts carried in `p`.
pub fn generalized_dedekind(p: &SumParams, family: Family) -> Result<Cyclotomic> {
    family_sum(p, family, &p.x, &p.y)
}

fn family_sum(p: &SumParams, family: Family, x: &Rational, y: &Rational) -> Result<Cyclotomic> {
    p.check(family)?;
    match family {
        Family::BbAc => dedekind_sum_explicit(p.d, p.c, &p.b, p.m, &p.a, p.c, x, y),
        Family::AdBa => dedekind_sum_explicit(p.d, p.c, &p.a, p.d, &p.b, p.m, x, y),
    }
}

fn alternate(chi: &PeriodicSequence) -> PeriodicSequence {
    PeriodicSequence::from_fn(chi.period(), |v| if v % 2 == 0 { chi.at(v).clone() } else { -chi.at(v).clone() })
        .expect("period ≥ 1")
}

/// s*(d,c;χ₂,χ₁) = Σ_{n=1}^{ck} (−1)ⁿ χ₂(n) P₁(n/ck) P₁*(dn/c, χ̄₁), where
/// P₁*(x, χ̄₁) = Σ_v (−1)^v χ₁(v) P₁((v+x)/k). `chi1` is χ₁ itself.
pub fn alternating_char_sum(d: i64, c: i64, chi2: &PeriodicSequence, chi1: &PeriodicSequence) -> Result<Cyclotomic> {
    let k = common_period(chi1, chi2) as i64;
    if k % 2 != 0 {
        return Err(Error::Domain(format!("starred sums need an even modulus, got k={k}")));
    }
    require_coprime(d, c)?;
    if !congruent(d, 0, k) {
        return Err(Error::Domain(format!("d ≡ 0 (mod k) fails: d={d}, k={k}")));
    }
    let zero = Rational::zero();
    dedekind_sum_explicit(d, c, &alternate(chi2), 1, &alternate(chi1), -1, &zero, &zero)
}

/// The literal defining sum of [`dedekind_sum_explicit`], term by term; slow, for cross-checks.
#[doc(hidden)]
#[allow(clippy::too_many_arguments)]
pub fn dedekind_sum_naive(
    big_x: i64,
    big_y: i64,
    s: &PeriodicSequence,
    alpha: i64,
    t: &PeriodicSequence,
    beta: i64,
    x: &Rational,
    y: &Rational,
) -> Result<Cyclotomic> {
    let k = common_period(s, t) as i64;
    let mut acc = Cyclotomic::zero();
    for n in 1..=big_y * k {
        let ny = int(n) + y;
        let w = bernoulli_function_p(1, &(&ny / int(big_y * k)))?;
        let u = &ny * int(big_x) / int(big_y) + x;
        let inner: Cyclotomic = (0..k)
            .map(|v| Ok(t.at(-beta * v).scale(&bernoulli_function_p(1, &((int(v) + &u) / int(k)))?)))
            .sum::<Result<Cyclotomic>>()?;
        acc = acc.try_add(&s.at(alpha * n).try_mul(&inner)?.scale(&w))?;
    }
    Ok(acc)
}

/// d/2 for s₃(d/2, c); errors on odd d.
pub fn half(d: i64) -> Result<i64> {
    if d.is_odd() {
        return Err(Error::Domain(format!("s₃(d/2,c) needs even d, got d={d}")));
    }
    Ok(d / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::make_sequence;

    fn seq(s: &str) -> PeriodicSequence {
        make_sequence(s).unwrap()
    }

    #[test]
    fn classical_examples() {
        assert_eq!(classical_s(1, 3).unwrap(), rat(1, 18));
        assert_eq!(classical_s(1, 2).unwrap(), rat(0, 1));
        let lhs = classical_s(2, 3).unwrap() + classical_s(3, 2).unwrap();
        let rhs = rat(-1, 4) + rat(1, 12) * (rat(2, 3) + rat(3, 2) + rat(1, 6));
        assert_eq!(lhs, rhs);
        assert!(classical_s(2, 4).is_err());
        assert!(classical_s(1, 0).is_err());
    }

    #[test]
    fn hardy_examples() {
        assert_eq!(hardy_s2(1, 2).unwrap(), rat(0, 1));
        assert_eq!(hardy_s2(1, 3).unwrap(), rat(0, 1));
        assert_eq!(hardy_s3(1, 2).unwrap(), rat(0, 1));
        assert!(half(3).is_err());
    }

    #[test]
    fn kernel_matches_naive_sum() {
        let a = seq("char:k=4,i=1");
        let b = seq("gauss:k=4,i=1");
        for (bx, by, al, be) in [(4, 3, 1, 3), (-3, 4, 3, -1), (8, 5, 3, 5)] {
            for (x, y) in [(rat(0, 1), rat(0, 1)), (rat(1, 2), rat(1, 3)), (rat(-3, 4), rat(5, 7))] {
                assert_eq!(
                    dedekind_sum_explicit(bx, by, &b, al, &a, be, &x, &y).unwrap(),
                    dedekind_sum_naive(bx, by, &b, al, &a, be, &x, &y).unwrap()
                );
            }
        }
    }

    #[test]
    fn identity_sequence_shifts_one_one() {
        let i = seq("const:k=1");
        for c in 1..=12i64 {
            for d in 1..=12i64 {
                if gcd(c, d) != 1 {
                    continue;
                }
                let p = SumParams::new(d, c, least_b(c, d).unwrap(), i.clone(), i.clone());
                let v = periodic_dedekind(&p, Family::BbAc).unwrap();
                assert_eq!(v, Cyclotomic::from_rational(&(classical_s(d, c).unwrap() + rat(1, 4))));
            }
        }
    }

    #[test]
    fn degenerate_single_term() {
        // k = 1, (d,c) = (1,1), shifts (1/2, 1/3): one term P₁(4/3) P₁(4/3 + 1/2)
        let i = seq("const:k=1");
        let v = dedekind_sum_explicit(1, 1, &i, 1, &i, 1, &rat(1, 2), &rat(1, 3)).unwrap();
        let direct = bernoulli_function_p(1, &rat(4, 3)).unwrap() * bernoulli_function_p(1, &rat(11, 6)).unwrap();
        assert_eq!(v, Cyclotomic::from_rational(&direct));
    }

    #[test]
    fn preconditions_name_the_failure() {
        let chi = seq("char:k=4,i=1");
        let p = SumParams::new(6, 5, 1, chi.clone(), chi.clone());
        let e = periodic_dedekind(&p, Family::BbAc).unwrap_err().to_string();
        assert!(e.contains("d ≡ 0 (mod k)"), "{e}");
        let p = SumParams::new(8, 5, 2, chi.clone(), chi.clone());
        let e = periodic_dedekind(&p, Family::BbAc).unwrap_err().to_string();
        assert!(e.contains("bc ≡ −1"), "{e}");
        let p = SumParams::new(3, 8, 3, chi.clone(), chi.clone());
        assert!(periodic_dedekind(&p, Family::AdBa).is_ok());
        let p = SumParams::new(3, 8, 2, chi.clone(), chi);
        assert!(periodic_dedekind(&p, Family::AdBa).unwrap_err().to_string().contains("ad ≡ 1"));
    }

    #[test]
    fn modular_map() {
        let v = ModularMap::from_cd(3, 4).unwrap();
        assert_eq!(v.a * v.d - v.b * v.c, 1);
        assert!(!v.ad_zero_mod(2) && !v.bc_zero_mod(2));
        assert!(ModularMap::new(1, 1, 1, 1).is_err());
        let m = ModularMap::new(0, -1, 1, 0).unwrap();
        assert!(m.ad_zero_mod(5) && !m.bc_zero_mod(5));
        let z = m.apply(Complex64::new(0.0, 2.0));
        assert!((z - Complex64::new(0.0, 0.5)).norm() < 1e-15);
        assert_eq!(least_b(1, 0).unwrap(), -1);
        assert_eq!(least_b(3, 8).unwrap(), 5);
    }

    #[test]
    fn starred_needs_even_modulus() {
        let chi = seq("char:k=3,i=1");
        assert!(matches!(alternating_char_sum(3, 1, &chi, &chi), Err(Error::Domain(_))));
    }
}
