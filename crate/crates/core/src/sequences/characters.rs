use std::collections::HashMap;

use super::PeriodicSequence;
use crate::arith::{self, crt, gcd, modp, mod_pow, primitive_root_odd_prime_power};
use crate::error::{Error, Result};
use crate::exact::{max_order, Cyclotomic};

/// A Dirichlet character modulo k, identified by its exponent vector over a fixed
/// generator basis of (Z/kZ)^×.
#[derive(Clone, Debug)]
pub struct DirichletCharacter {
    modulus: u32,
    index: usize,
    exponents: Vec<u32>,
    orders: Vec<u32>,
    seq: PeriodicSequence,
}

/// Generators of (Z/kZ)^× with their orders: the 2-part first (3 for 4; −1 and 5 for
/// 2^e, e ≥ 3), then the smallest primitive root of each odd prime power, each lifted
/// by CRT to be 1 modulo the complementary factor.
pub(crate) fn generators(k: u32) -> Vec<(i64, u32)> {
    let k = k as i64;
    let mut out = Vec::new();
    for (p, e) in arith::factorize(k as u64) {
        let q = p.pow(e) as i64;
        let rest = k / q;
        let lift = |g: i64| if rest == 1 { modp(g, k) } else { crt(modp(g, q), q, 1, rest) };
        if p == 2 {
            match e {
                1 => {}
                2 => out.push((lift(3), 2)),
                _ => {
                    out.push((lift(q - 1), 2));
                    out.push((lift(5), 1 << (e - 2)));
                }
            }
        } else {
            let g = primitive_root_odd_prime_power(p, e) as i64;
            out.push((lift(g), (q / p as i64 * (p as i64 - 1)) as u32));
        }
    }
    out
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Position in the enumeration order of [`dirichlet_characters`].
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn sequence(&self) -> &PeriodicSequence {
        &self.seq
    }

    pub fn value(&self, n: i64) -> &Cyclotomic {
        self.seq.at(n)
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// χ(−1) ∈ {+1, −1}.
    pub fn parity(&self) -> i8 {
        if *self.value(-1) == Cyclotomic::one() {
            1
        } else {
            -1
        }
    }

    /// True when χ is not induced from any proper divisor of the modulus.
    pub fn is_primitive(&self) -> bool {
        let k = self.modulus as i64;
        let one = Cyclotomic::one();
        arith::divisors(k as u64).into_iter().filter(|&d| (d as i64) < k).all(|d| {
            (0..k)
                .filter(|&n| gcd(n, k) == 1 && n % d as i64 == 1 % d as i64)
                .any(|n| *self.value(n) != one)
        })
    }

    /// The conjugate character χ̄.
    pub fn conj(&self) -> DirichletCharacter {
        let exps: Vec<u32> = self.exponents.iter().zip(&self.orders).map(|(&e, &o)| (o - e) % o).collect();
        let index = exps.iter().zip(&self.orders).fold(0usize, |acc, (&e, &o)| acc * o as usize + e as usize);
        let mut seq = self.seq.conj();
        seq.tags = self.seq.tags.clone();
        seq.tags.character = Some((self.modulus, index));
        seq.tags.label = Some(format!("char:k={},i={}", self.modulus, index));
        DirichletCharacter { modulus: self.modulus, index, exponents: exps, orders: self.orders.clone(), seq }
    }
}

/// All φ(k) characters mod k in lexicographic order of their exponent vectors
/// (first generator most significant); index 0 is the principal character.
pub fn dirichlet_characters(k: u32) -> Result<Vec<DirichletCharacter>> {
    if k == 0 {
        return Err(Error::Domain("character modulus must be positive".into()));
    }
    if k > max_order() {
        return Err(Error::Capacity(format!("modulus {k} exceeds the configured maximum {}", max_order())));
    }
    let gens = generators(k);
    let orders: Vec<u32> = gens.iter().map(|&(_, o)| o).collect();
    let l = orders.iter().fold(1i64, |a, &o| arith::lcm(a, o as i64)) as u32;
    let ki = k as i64;

    // discrete logarithms of every unit
    let mut log: HashMap<i64, Vec<u32>> = HashMap::new();
    let total: usize = orders.iter().map(|&o| o as usize).product();
    for flat in 0..total {
        let ex = unflatten(flat, &orders);
        let n = gens
            .iter()
            .zip(&ex)
            .fold(1 % ki, |acc, (&(g, _), &x)| acc * mod_pow(g, x as u64, ki) % ki);
        log.insert(n, ex);
    }
    let roots = (0..l as i64).map(|j| Cyclotomic::root_of_unity(l, j)).collect::<Result<Vec<_>>>()?;

    let mut out = Vec::with_capacity(total);
    for index in 0..total {
        let idx = unflatten(index, &orders);
        let seq = PeriodicSequence::from_fn(k, |n| match log.get(&modp(n, ki)) {
            Some(ex) if gcd(n, ki) == 1 => {
                let e: u64 = ex
                    .iter()
                    .zip(&idx)
                    .zip(&orders)
                    .map(|((&x, &i), &o)| x as u64 * i as u64 * (l / o) as u64)
                    .sum();
                roots[(e % l as u64) as usize].clone()
            }
            _ => Cyclotomic::zero(),
        })?;
        let mut chi = DirichletCharacter { modulus: k, index, exponents: idx, orders: orders.clone(), seq };
        let parity = chi.parity();
        let primitive = chi.is_primitive();
        chi.seq.tags.character = Some((k, index));
        chi.seq.tags.parity = Some(parity);
        chi.seq.tags.primitive = Some(primitive);
        chi.seq.tags.label = Some(format!("char:k={k},i={index}"));
        out.push(chi);
    }
    Ok(out)
}

fn unflatten(mut flat: usize, orders: &[u32]) -> Vec<u32> {
    let mut ex = vec![0u32; orders.len()];
    for (slot, &o) in ex.iter_mut().zip(orders).rev() {
        *slot = (flat % o as usize) as u32;
        flat /= o as usize;
    }
    ex
}

/// G(n, χ) = Σ_{v=0}^{k−1} χ(v) e(nv/k).
pub fn gauss_sum(n: i64, chi: &DirichletCharacter) -> Result<Cyclotomic> {
    let k = chi.modulus() as i64;
    let mut acc = Cyclotomic::zero();
    for v in 0..k {
        let c = chi.value(v);
        if !c.is_zero() {
            acc = acc.try_add(&c.try_mul(&Cyclotomic::root_of_unity(k as u32, n * v)?)?)?;
        }
    }
    Ok(acc)
}
