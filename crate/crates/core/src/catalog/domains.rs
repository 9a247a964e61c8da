//! Fixed parameter domains of the catalog cases (see `DOMAIN_VERSION`).

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::params::cpx;
use crate::arith::{gcd, lcm};
use crate::sequences::dirichlet_characters;
use num_complex::Complex64;

const SHIFTS: [&str; 5] = ["0", "1/2", "1/3", "-3/4", "5/7"];

fn n_chars(k: u32) -> u32 {
    dirichlet_characters(k).map(|v| v.len() as u32).unwrap_or(0)
}

/// Parity χ(−1) of character `i` mod `k`.
fn parity(k: u32, i: u32) -> i8 {
    dirichlet_characters(k).expect("small modulus")[i as usize].parity()
}

fn chars(k: u32) -> Vec<String> {
    (0..n_chars(k)).map(|i| format!("char:k={k},i={i}")).collect()
}

/// A rational sequence with small random entries; the same `(k, seed)` always gives the same list.
pub(super) fn random_list(k: u32, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed * 1000 + k as u64);
    let vals: Vec<String> = (0..k)
        .map(|_| {
            let p: i64 = rng.gen_range(-5..=5);
            let q: i64 = rng.gen_range(1..=4);
            let g = gcd(p, q).max(1);
            if q / g == 1 {
                format!("{}", p / g)
            } else {
                format!("{}/{}", p / g, q / g)
            }
        })
        .collect();
    format!("list:k={k};vals={}", vals.join(","))
}

fn period(spec: &str) -> i64 {
    crate::sequences::make_sequence(spec).expect("catalog spec").period() as i64
}

/// The sequences of the reciprocity sweeps for one modulus.
fn sweep_sequences(k: u32) -> Vec<String> {
    let n = n_chars(k);
    let mut v = chars(k);
    v.extend((0..n).map(|i| format!("gauss:k={k},i={i}")));
    v.push(format!("ramanujan:k={k}"));
    v.extend((0..n).map(|i| format!("altchar:k={k},i={i}")));
    v.push(format!("exp:k={k}"));
    v.extend((1..=3).map(|s| random_list(k, s)));
    v
}

const SWEEP_MODULI: [u32; 5] = [1, 2, 3, 4, 6];

/// Coprime (c, d) with c ≤ 10, h | d, d ≤ 6k.
fn sweep_cd(k: u32, h: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    let mut d = h;
    while d <= 6 * k as i64 {
        for c in 1..=10 {
            if gcd(c, d) == 1 {
                out.push((c, d));
            }
        }
        d += h;
    }
    out
}

/// Each sequence against itself, its successor in the list and the first random list.
fn sweep_pairs(k: u32) -> Vec<(String, String)> {
    let s = sweep_sequences(k);
    let rand1 = random_list(k, 1);
    let mut out = Vec::new();
    for (i, a) in s.iter().enumerate() {
        let partners = [a.clone(), s[(i + 1) % s.len()].clone(), rand1.clone()];
        for b in partners {
            if !out.contains(&(a.clone(), b.clone())) {
                out.push((a.clone(), b));
            }
        }
    }
    out
}

fn rep1_domain() -> Vec<Value> {
    let mut out = Vec::new();
    for k in SWEEP_MODULI {
        for (a, b) in sweep_pairs(k) {
            let h = lcm(period(&a), period(&b));
            for (c, d) in sweep_cd(k, h) {
                out.push(json!({"k": k, "A": a, "B": b, "c": c, "d": d}));
            }
        }
    }
    out
}

pub fn e1() -> Vec<Value> {
    let mut out = Vec::new();
    for c in 1..=50i64 {
        for d in 1..=50i64 {
            if gcd(c, d) == 1 {
                out.push(json!({"c": c, "d": d}));
            }
        }
    }
    out
}

pub fn e2() -> Vec<Value> {
    rep1_domain()
}

pub fn e3() -> Vec<Value> {
    let mut out = Vec::new();
    for p in rep1_domain() {
        for form in ["swapped", "sign_change"] {
            let mut q = p.clone();
            q["form"] = json!(form);
            out.push(q);
        }
    }
    out
}

/// The (c, d, k) points of the sweep with one pair of random sequences per modulus.
fn shift_domain(skip_integer_pair: bool) -> Vec<Value> {
    let mut out = Vec::new();
    for k in SWEEP_MODULI {
        let (a, b) = (random_list(k, 2), random_list(k, 3));
        for (c, d) in sweep_cd(k, k as i64) {
            for r1 in SHIFTS {
                for r2 in SHIFTS {
                    if skip_integer_pair && r1 == "0" && r2 == "0" {
                        continue;
                    }
                    out.push(json!({"k": k, "A": a, "B": b, "c": c, "d": d, "R1": r1, "R2": r2}));
                }
            }
        }
    }
    out
}

pub fn e4() -> Vec<Value> {
    shift_domain(false)
}

pub fn e4_corrected() -> Vec<Value> {
    shift_domain(true)
}

/// Coprime (c, d) with c ≤ cmax and d ∈ {k, 2k, …, mult·k}.
fn small_cd(k: u32, cmax: i64, mult: i64, odd_c: bool) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for d in (1..=mult).map(|m| m * k as i64) {
        for c in 1..=cmax {
            if gcd(c, d) == 1 && (!odd_c || c % 2 == 1) {
                out.push((c, d));
            }
        }
    }
    out
}

pub fn e5() -> Vec<Value> {
    let mut out = Vec::new();
    for c in 1..=12i64 {
        for d in 1..=12i64 {
            if gcd(c, d) == 1 {
                out.push(json!({"form": "identity_seq", "c": c, "d": d}));
                out.push(json!({"form": "identity_seq_sign_change", "c": c, "d": d}));
            }
        }
    }
    for k in [3u32, 4, 5, 6, 8] {
        let n = n_chars(k);
        for i1 in 0..n {
            for i2 in 0..n {
                let form = if parity(k, i1) * parity(k, i2) == 1 { "reciprocity" } else { "vanishing" };
                for (c, d) in small_cd(k, 5, 3, false) {
                    out.push(json!({"form": form, "k": k, "i1": i1, "i2": i2, "c": c, "d": d}));
                }
            }
        }
    }
    out
}

pub fn e6() -> Vec<Value> {
    let mut out = Vec::new();
    for k in [3u32, 4, 5, 6, 8] {
        let n = n_chars(k);
        for i1 in 0..n {
            for i2 in 0..n {
                let both = (i1 == 0, i2 == 0);
                let tag = match both {
                    (true, true) => "principal",
                    (false, false) => "nonprincipal",
                    _ => continue,
                };
                for (c, d) in small_cd(k, 5, 3, false) {
                    for swap in [false, true] {
                        let form = format!("{tag}{}", if swap { "_swapped" } else { "" });
                        out.push(json!({"form": form, "k": k, "i1": i1, "i2": i2, "c": c, "d": d}));
                    }
                }
            }
        }
    }
    for c in 1..12i64 {
        for d in (2..24i64).step_by(2) {
            if gcd(c, d) == 1 {
                out.push(json!({"form": "k2_first", "c": c, "d": d}));
                out.push(json!({"form": "k2_second", "c": c, "d": d}));
            }
        }
    }
    out
}

pub fn e7() -> Vec<Value> {
    let mut out = Vec::new();
    for k in [2u32, 3, 4, 5, 6, 8] {
        let n = n_chars(k);
        for i1 in 0..n {
            for i2 in 0..n {
                let form = match (i1 == 0, i2 == 0) {
                    (true, true) => "principal",
                    (false, false) => "nonprincipal",
                    _ => continue,
                };
                for (c, d) in small_cd(k, 5, 3, false) {
                    out.push(json!({"form": form, "k": k, "i1": i1, "i2": i2, "c": c, "d": d}));
                }
            }
        }
    }
    for c in 1..12i64 {
        for d in (2..24i64).step_by(2) {
            if gcd(c, d) == 1 {
                out.push(json!({"form": "k2_s2", "c": c, "d": d}));
            }
        }
    }
    out
}

pub fn e8() -> Vec<Value> {
    let mut out = Vec::new();
    for k in [4u32, 6, 8] {
        let n = n_chars(k);
        for i1 in 0..n {
            for i2 in 0..n {
                for (c, d) in small_cd(k, 7, 3, true) {
                    out.push(json!({"form": "full", "k": k, "i1": i1, "i2": i2, "c": c, "d": d}));
                    if i1 > 0 && i2 > 0 {
                        out.push(json!({"form": "nonprincipal", "k": k, "i1": i1, "i2": i2, "c": c, "d": d}));
                    }
                }
            }
        }
    }
    out
}

fn exp_domain(forms: &[&str], k2_forms: &[&str]) -> Vec<Value> {
    let mut out = Vec::new();
    for k in [2u32, 3, 4, 5, 6, 8] {
        for (c, d) in small_cd(k, 8, 4, false) {
            for f in forms {
                out.push(json!({"form": f, "k": k, "c": c, "d": d}));
            }
            if k == 2 {
                for f in k2_forms {
                    out.push(json!({"form": f, "k": k, "c": c, "d": d}));
                }
            }
        }
    }
    out
}

pub fn e9() -> Vec<Value> {
    exp_domain(&["value", "first_sum", "second_sum"], &["k2_value", "k2_first_hardy", "k2_second_hardy", "k2_chain"])
}

pub fn e9_corrected() -> Vec<Value> {
    exp_domain(&["value"], &["k2_value", "k2_chain"])
}

/// Small sequences used by the structural checks.
fn structural_sequences() -> Vec<String> {
    let mut v = vec!["const:k=1".to_string(), "const:k=3".into(), "exp:k=5".into(), "ramanujan:k=6".into()];
    v.extend(["char:k=4,i=1", "char:k=5,i=1", "char:k=5,i=2", "gauss:k=5,i=1", "altchar:k=3,i=1"].map(String::from));
    v.extend((1..=3).map(|s| random_list(4, s)));
    v
}

pub fn e10() -> Vec<Value> {
    let mut out = Vec::new();
    let xs = ["0", "1/2", "1/3", "-3/4", "5/7", "2"];
    for n in 0..=6u32 {
        for r in 1..=8u32 {
            for x in xs {
                out.push(json!({"form": "raabe", "n": n, "r": r, "x": x}));
            }
        }
    }
    for m in 0..=8u32 {
        for x in xs {
            out.push(json!({"form": "polynomial_reflection", "m": m, "x": x}));
        }
    }
    for a in structural_sequences() {
        for r in 1..=4u32 {
            for x in ["1/2", "1/3", "-3/4", "5/7", "2"] {
                if r == 1 && x == "2" {
                    continue;
                }
                out.push(json!({"form": "reflection", "A": a, "r": r, "c": 1, "x": x}));
                out.push(json!({"form": "reflection", "A": a, "r": r, "c": 3, "x": x}));
            }
        }
        for r in [0u32, 2, 3, 4, 5] {
            out.push(json!({"form": "p_at_zero", "A": a, "r": r}));
        }
        let k = period(&a);
        for r in 1..=3u32 {
            for (c, d) in small_cd(k as u32, 7, 2, false) {
                out.push(json!({"form": "cosets", "A": a, "r": r, "c": c, "d": d}));
            }
        }
    }
    for k in 1..=8u32 {
        for i in 0..n_chars(k) {
            for m in (0..=3u32).filter(|&m| k > 1 || m > 0) {
                out.push(json!({"form": "vanishing", "k": k, "i": i, "m": m}));
            }
        }
    }
    for m in 1..=12u32 {
        out.push(json!({"form": "quarter", "m": m}));
    }
    out
}

pub fn e11() -> Vec<Value> {
    let mut out = Vec::new();
    for k in [4u32, 6, 8] {
        let n = n_chars(k);
        for i1 in 0..n {
            for m in 1..=3u32 {
                for c in [1i64, 3, 5] {
                    for x in ["0", "1/2", "-3/4", "5/7"] {
                        out.push(json!({"form": "starred_function", "k": k, "i1": i1, "m": m, "c": c, "x": x}));
                    }
                }
            }
            for i2 in 0..n {
                for (c, d) in small_cd(k, 7, 2, true) {
                    out.push(json!({"form": "starred_sum", "k": k, "i1": i1, "i2": i2, "c": c, "d": d}));
                }
            }
        }
    }
    for k in 2..=8u32 {
        for i in 0..n_chars(k) {
            out.push(json!({"form": "cotangent", "k": k, "i": i}));
        }
    }
    out
}

pub fn e12() -> Vec<Value> {
    let mut out: Vec<Value> = structural_sequences().into_iter().map(|a| json!({"form": "round_trip", "A": a})).collect();
    for k in 1..=8u32 {
        for i in 0..n_chars(k) {
            out.push(json!({"form": "character_dual", "k": k, "i": i}));
        }
    }
    out
}

pub fn n1() -> Vec<Value> {
    let mut out = Vec::new();
    let ss = [Complex64::new(3.0, 0.0), Complex64::new(2.5, 0.5)];
    let zs = [Complex64::new(0.0, 1.0), Complex64::new(0.3, 0.9)];
    for k in [3u32, 4] {
        for a in chars(k) {
            for b in chars(k) {
                for s in ss {
                    for z in zs {
                        out.push(json!({"A": a, "B": b, "s": cpx(s), "z": cpx(z)}));
                    }
                }
            }
        }
    }
    out
}

/// Character pairs mod k with χ₁(−1)χ₂(−1) = 1.
fn even_pairs(k: u32) -> Vec<(u32, u32)> {
    let n = n_chars(k);
    let mut out = Vec::new();
    for i1 in 0..n {
        for i2 in 0..n {
            if parity(k, i1) * parity(k, i2) == 1 {
                out.push((i1, i2));
            }
        }
    }
    out
}

pub fn n2() -> Vec<Value> {
    let mut out = Vec::new();
    let zs = [Complex64::new(0.0, 1.0), Complex64::new(1.0 / 3.0, 2.0 / 3.0)];
    for k in [3u32, 4, 5] {
        for (i1, i2) in even_pairs(k) {
            for n in 0..=2u32 {
                for z in zs {
                    out.push(json!({"k": k, "i1": i1, "i2": i2, "N": n, "z": cpx(z)}));
                }
            }
        }
    }
    out
}

pub fn n3() -> Vec<Value> {
    let mut out = Vec::new();
    for k in [3u32, 4, 5] {
        for (i1, i2) in even_pairs(k) {
            for n in 0..=2u32 {
                for g in [0.6, 1.5] {
                    out.push(json!({"k": k, "i1": i1, "i2": i2, "N": n, "gamma": g * PI / k as f64}));
                }
            }
        }
    }
    out
}

pub fn n4() -> Vec<Value> {
    let mut out = Vec::new();
    for n in 0..=3u32 {
        for g in [PI / 4.0, 0.5, 1.0, 2.0] {
            out.push(json!({"form": "sech", "N": n, "gamma": g}));
        }
    }
    out.push(json!({"form": "pi_over_8"}));
    out
}

pub fn n5() -> Vec<Value> {
    let mut out = Vec::new();
    for n in 0..=3u32 {
        for g in [PI, 2.0, 4.5] {
            out.push(json!({"form": "csch", "N": n, "gamma": g}));
        }
    }
    for m in 0..=1u32 {
        out.push(json!({"form": "at_pi", "M": m}));
    }
    out
}

pub fn n6() -> Vec<Value> {
    let mut out = Vec::new();
    for k in [3u32, 4, 5, 8] {
        for i in 0..n_chars(k) {
            let p = parity(k, i) as i64;
            for n in 0..=2i64 {
                if p * if n % 2 == 0 { 1 } else { -1 } == -1 {
                    out.push(json!({"form": "closed", "k": k, "i": i, "N": n}));
                }
            }
            if p == -1 {
                out.push(json!({"form": "odd", "k": k, "i": i}));
            } else {
                out.push(json!({"form": "even", "k": k, "i": i}));
            }
            for m in 2..=3i64 {
                if p * if m % 2 == 0 { 1 } else { -1 } == -1 {
                    out.push(json!({"form": "vanishing", "k": k, "i": i, "M": m}));
                }
            }
        }
    }
    out
}

pub fn n7() -> Vec<Value> {
    let mut out = Vec::new();
    for k in [3u32, 4, 5] {
        for i in 0..n_chars(k) {
            let p = parity(k, i) as i64;
            for n in 0..=2i64 {
                if p * if n % 2 == 0 { 1 } else { -1 } == 1 {
                    out.push(json!({"k": k, "i": i, "N": n}));
                }
            }
        }
    }
    out
}

/// Matrices with a ≡ d ≡ 0 (mod k): the inversion and (k, k−1, k+1, k).
fn ad_zero_maps(k: u32) -> Vec<[i64; 4]> {
    let k = k as i64;
    vec![[0, -1, 1, 0], [k, k - 1, k + 1, k]]
}

pub fn n8() -> Vec<Value> {
    let mut out = Vec::new();
    let zs = [Complex64::new(0.0, 1.0), Complex64::new(0.25, 1.0)];
    for k in [3u32, 4, 5] {
        let n = n_chars(k);
        for i1 in 0..n {
            for i2 in 0..n {
                for m in ad_zero_maps(k) {
                    for z in zs {
                        out.push(json!({"k": k, "i1": i1, "i2": i2, "V": m, "z": cpx(z)}));
                    }
                }
            }
        }
    }
    out
}

pub fn n9() -> Vec<Value> {
    let mut out = Vec::new();
    let zs = [Complex64::new(0.0, 1.0), Complex64::new(0.25, 1.0)];
    for k in [3u32, 4, 5, 8] {
        for (i1, i2) in even_pairs(k) {
            if (i1 == 0) != (i2 == 0) {
                continue;
            }
            for m in ad_zero_maps(k) {
                for z in zs {
                    out.push(json!({"form": "transformation", "k": k, "i1": i1, "i2": i2, "V": m, "z": cpx(z)}));
                }
            }
            for g in [0.7, 1.0, 1.6] {
                out.push(json!({"form": "gamma_theta", "k": k, "i1": i1, "i2": i2, "gamma": g * PI / k as f64}));
            }
            for z in zs {
                out.push(json!({"form": "inversion", "k": k, "i1": i1, "i2": i2, "z": cpx(z)}));
            }
        }
    }
    for g in [PI / 6.0, 0.4] {
        out.push(json!({"form": "cosh_mod6", "gamma": g}));
    }
    out.push(json!({"form": "cosh_mod6_single"}));
    for g in [PI / 3.0, 0.5] {
        out.push(json!({"form": "cosh_mod3", "gamma": g}));
    }
    out
}

pub fn n10() -> Vec<Value> {
    let mut out = Vec::new();
    for g in [2.0, 0.5, PI] {
        out.push(json!({"form": "log", "gamma": g}));
    }
    for g in [PI, 2.0, 0.8] {
        out.push(json!({"form": "sech_squared", "gamma": g}));
    }
    out.push(json!({"form": "sech_squared_at_pi"}));
    out
}

pub fn n11() -> Vec<Value> {
    let mut out = Vec::new();
    let zs = [Complex64::new(0.0, 1.0), Complex64::new(0.25, 1.0)];
    for k in [4u32, 6, 8] {
        for (i1, i2) in even_pairs(k) {
            for m in ad_zero_maps(k) {
                if m[1] % 2 == 0 || m[2] % 2 == 0 {
                    continue;
                }
                for z in zs {
                    out.push(json!({"form": "transformation", "k": k, "i1": i1, "i2": i2, "V": m, "z": cpx(z)}));
                }
            }
            for g in [0.7, 1.0, 1.6] {
                out.push(json!({"form": "gamma_theta", "k": k, "i1": i1, "i2": i2, "gamma": g * PI / k as f64}));
            }
        }
    }
    for g in [PI, 2.0, 0.7] {
        out.push(json!({"form": "example_mod4", "gamma": g}));
    }
    for g in [1.0, 0.3] {
        out.push(json!({"form": "example_mod8", "gamma": g}));
    }
    for g in [PI / 3.0, 0.5] {
        out.push(json!({"form": "example_mod6", "gamma": g}));
    }
    out
}

pub fn n12() -> Vec<Value> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let thetas = ["0", "1", "-2", "1/2", "1/3", "-3/4", "5/7", "7/3"];
    for draw in 0..50u32 {
        let k = rng.gen_range(1..=6u32);
        let a = random_list(k, 100 + draw as u64);
        let beta = [1i64, -1, 5][rng.gen_range(0..3)];
        let theta = thetas[rng.gen_range(0..thetas.len())];
        out.push(json!({"form": "l_at_zero", "A": a, "beta": beta, "theta": theta}));
    }
    for k in [3u32, 4, 5, 7, 8] {
        for i in 1..n_chars(k) {
            let odd = parity(k, i) == -1;
            for r in 1..=4u32 {
                if (r % 2 == 1) == odd {
                    out.push(json!({"form": "bridge", "k": k, "i": i, "r": r}));
                }
            }
        }
    }
    out
}

pub fn n13() -> Vec<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let shifts = ["0", "1/2", "1/3", "-3/4", "5/7", "2/5"];
    (0..20)
        .map(|_| {
            let k = rng.gen_range(1..=5i64);
            let c = rng.gen_range(1..=4i64);
            let d = rng.gen_range(-3..=5i64);
            let n = rng.gen_range(0..=3u32);
            let z = Complex64::new(rng.gen_range(-0.5..0.5), rng.gen_range(0.6..1.6));
            json!({
                "N": n, "c": c, "d": d, "k": k,
                "mu": rng.gen_range(0..k), "v": rng.gen_range(0..k), "j": rng.gen_range(1..=c),
                "R1": shifts[rng.gen_range(0..shifts.len())], "R2": shifts[rng.gen_range(0..shifts.len())],
                "z": cpx(z),
            })
        })
        .collect()
}

pub fn n14() -> Vec<Value> {
    let mut out = Vec::new();
    let zs = [Complex64::new(0.0, 1.0), Complex64::new(0.25, 1.0)];
    let ad: [(&str, [i64; 4]); 2] = [("char:k=4,i=1", [0, -1, 1, 0]), ("const:k=2", [4, 5, 3, 4])];
    let mut pairs: Vec<(String, String, [i64; 4])> = Vec::new();
    for (spec, m) in ad {
        let k = period(spec) as u32;
        pairs.push((spec.into(), spec.into(), m));
        pairs.push((random_list(k, 1), random_list(k, 2), m));
    }
    pairs.push(("char:k=3,i=1".into(), random_list(3, 3), [0, -1, 1, 0]));
    for (a, b, m) in &pairs {
        for z in zs {
            out.push(json!({"form": "ad_zero", "A": a, "B": b, "V": m, "z": cpx(z)}));
        }
    }
    for (a, b, m) in &pairs {
        for (r1, r2) in [("1/3", "1/2"), ("-3/4", "0")] {
            out.push(json!({"form": "ad_zero_shifted", "A": a, "B": b, "V": m, "z": cpx(zs[0]), "r1": r1, "r2": r2}));
        }
    }
    let bc: [(&str, [i64; 4]); 2] = [("char:k=4,i=1", [1, 0, 4, 1]), ("const:k=2", [3, 4, 2, 3])];
    for (spec, m) in bc {
        let k = period(spec) as u32;
        for (a, b) in [(spec.to_string(), spec.to_string()), (random_list(k, 1), random_list(k, 2))] {
            for z in zs {
                out.push(json!({"form": "bc_zero", "A": a, "B": b, "V": m, "z": cpx(z)}));
            }
            out.push(json!({"form": "bc_zero_shifted", "A": a, "B": b, "V": m, "z": cpx(zs[1]), "r1": "1/3", "r2": "1/2"}));
        }
    }
    for (a, b) in [("char:k=4,i=1".to_string(), "char:k=4,i=1".to_string()), (random_list(3, 1), random_list(3, 2))] {
        for z in zs {
            out.push(json!({"form": "inversion", "A": a, "B": b, "z": cpx(z)}));
        }
    }
    out
}

pub fn n_ex1() -> Vec<Value> {
    let mut out = vec![json!({"gamma": PI})];
    for g in [0.5, 1.0, 2.0, 5.0] {
        out.push(json!({"gamma": g}));
    }
    out
}

pub fn n_cauchy() -> Vec<Value> {
    (0..=1u32).map(|m| json!({"M": m})).collect()
}
