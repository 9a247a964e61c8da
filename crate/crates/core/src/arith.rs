//! Small integer helpers.

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b) * b).abs()
}

/// Mathematical remainder in `0..m`.
pub fn modp(a: i64, m: i64) -> i64 {
    a.rem_euclid(m)
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).take_while(|d| d * d <= n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut hi: Vec<u64> = out.iter().rev().map(|d| n / d).filter(|&q| q * q != n).collect();
    out.append(&mut hi);
    out
}

pub fn mod_pow(base: i64, mut e: u64, m: i64) -> i64 {
    let m128 = m as i128;
    let mut b = (base as i128).rem_euclid(m128);
    let mut r: i128 = 1 % m128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m128;
        }
        b = b * b % m128;
        e >>= 1;
    }
    r as i64
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inv(a: i64, m: i64) -> Option<i64> {
    let (mut r0, mut r1) = (m as i128, (a as i128).rem_euclid(m as i128));
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(m as i128) as i64)
}

/// Smallest primitive root modulo an odd prime power `p^e`.
pub fn primitive_root_odd_prime_power(p: u64, e: u32) -> u64 {
    let q = p.pow(e);
    let phi = q / p * (p - 1);
    let primes: Vec<u64> = factorize(phi).into_iter().map(|(r, _)| r).collect();
    (2..q)
        .find(|&g| {
            g % p != 0 && primes.iter().all(|&r| mod_pow(g as i64, phi / r, q as i64) != 1)
        })
        .expect("odd prime powers have primitive roots")
}

/// Chinese remainder for coprime moduli: x ≡ a (mod m), x ≡ b (mod n).
pub fn crt(a: i64, m: i64, b: i64, n: i64) -> i64 {
    let inv = mod_inv(m, n).expect("moduli must be coprime");
    let t = modp(b - a, n) as i128 * inv as i128 % n as i128;
    modp((a as i128 + m as i128 * t) as i64, m * n)
}
