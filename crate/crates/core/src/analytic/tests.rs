use super::*;
use crate::bernoulli::{bernoulli_poly, periodic_p};
use crate::exact::rational::to_f64;
use crate::exact::{int, rat, Rational};
use crate::sequences::{dirichlet_characters, gauss_sum, make_sequence, PeriodicSequence};
use num_complex::Complex64;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol
}

fn chi4() -> PeriodicSequence {
    make_sequence("char:k=4,i=1").unwrap()
}

#[test]
fn hurwitz_examples() {
    assert!(close(hurwitz_zeta(c(0.0, 0.0), &rat(1, 4)).unwrap(), c(0.25, 0.0), 1e-13));
    assert!(close(hurwitz_zeta(c(2.0, 0.0), &int(1)).unwrap(), c(PI * PI / 6.0, 0.0), 1e-11));
    assert!(close(hurwitz_zeta(c(-1.0, 0.0), &int(1)).unwrap(), c(-1.0 / 12.0, 0.0), 1e-12));
    assert!(matches!(hurwitz_zeta(c(1.0, 0.0), &rat(1, 2)), Err(crate::Error::Pole(_))));
    // ζ(−n, θ) = −B_{n+1}(θ)/(n+1)
    for n in 0..6u32 {
        for th in [rat(1, 3), rat(7, 10), int(1)] {
            let want = -to_f64(&bernoulli_poly(n + 1, &th).unwrap()) / (n + 1) as f64;
            assert!(close(hurwitz_zeta(c(-(n as f64), 0.0), &th).unwrap(), c(want, 0.0), 1e-11), "n={n} {th} {} {want}", hurwitz_zeta(c(-(n as f64), 0.0), &th).unwrap());
        }
    }
    // shift identity for θ > 1
    let a = hurwitz_zeta(c(2.5, 0.3), &rat(7, 3)).unwrap();
    let b = hurwitz_zeta(c(2.5, 0.3), &rat(1, 3)).unwrap()
        - cpow(c(1.0 / 3.0, 0.0), c(-2.5, -0.3))
        - cpow(c(4.0 / 3.0, 0.0), c(-2.5, -0.3));
    assert!(close(a, b, 1e-12));
}

#[test]
fn gamma_examples() {
    assert!(close(gamma_fn(c(0.5, 0.0)).unwrap(), c(PI.sqrt(), 0.0), 1e-12));
    assert!(close(gamma_fn(c(5.0, 0.0)).unwrap(), c(24.0, 0.0), 1e-12));
    let s = c(0.3, 0.2);
    let lhs = gamma_fn(s).unwrap() * gamma_fn(1.0 - s).unwrap();
    assert!(close(lhs, PI / (PI * s).sin(), 1e-10));
    assert!(gamma_fn(c(-2.0, 0.0)).is_err());
    assert_eq!(rgamma(c(-3.0, 0.0)), c(0.0, 0.0));
    let s = c(-1.7, 2.1);
    assert!(close(gamma_fn(s + 1.0).unwrap(), s * gamma_fn(s).unwrap(), 1e-12 * gamma_fn(s + 1.0).unwrap().norm()));
}

#[test]
fn digamma_values() {
    let euler_gamma = 0.577_215_664_901_532_9;
    assert!((digamma(1.0).unwrap() + euler_gamma).abs() < 1e-14);
    assert!((digamma(0.5).unwrap() + euler_gamma + 2.0 * 2f64.ln()).abs() < 1e-14);
}

#[test]
fn branch_discipline() {
    for w in [c(-2.0, 0.0), c(-1.0, 1e-3), c(-1.0, -1e-3), c(0.3, -4.0), c(2.0, 0.0)] {
        let s = c(0.7, -1.3);
        assert!(close(cpow(w, -s) * cpow(w, s), c(1.0, 0.0), 1e-12));
        let arg = log_branch(w).im;
        assert!((-PI..PI).contains(&arg));
    }
    assert_eq!(log_branch(c(-1.0, 0.0)).im, -PI);
}

#[test]
fn periodic_l_direct_and_at_zero() {
    let seqs = [
        chi4(),
        make_sequence("list:k=3;vals=1/2,-1,z3").unwrap(),
        make_sequence("gauss:k=5,i=2").unwrap(),
        make_sequence("const:k=1").unwrap(),
    ];
    for a in &seqs {
        let vals = a.embed();
        let k = vals.len() as i64;
        for beta in [1i64, -1, 2] {
            for th in [int(0), int(2), int(-1), rat(1, 3), rat(-7, 4)] {
                let s = c(3.0, 0.5);
                let got = periodic_l(s, a, beta, &th).unwrap();
                let tf = to_f64(&th);
                let mut want = c(0.0, 0.0);
                let start = (-tf).floor() as i64 + 1;
                for n in start..start + 200_000 {
                    want += vals[(beta * n).rem_euclid(k) as usize] * cpow(c(n as f64 + tf, 0.0), -s);
                }
                assert!(close(got, want, 1e-9), "direct {th}");
                let l0 = periodic_l(c(0.0, 0.0), a, beta, &th).unwrap();
                let p1 = periodic_p(1, &-th.clone(), a, beta).unwrap().embed();
                assert!(close(l0, p1, 1e-10), "L(0) vs P1 at θ = {th}");
            }
        }
    }
    let zeta2 = periodic_l(c(2.0, 0.0), &seqs[3], 1, &int(0)).unwrap();
    assert!(close(zeta2, c(PI * PI / 6.0, 0.0), 1e-11));
    assert!(periodic_l(c(1.0, 0.0), &seqs[3], 1, &int(0)).is_err());
}

#[test]
fn dirichlet_l_values() {
    let chars = dirichlet_characters(4).unwrap();
    let l1 = dirichlet_l(1, &chars[1]).unwrap();
    assert!(close(l1, c(PI / 4.0, 0.0), 1e-10));
    assert!(dirichlet_l(1, &chars[0]).is_err());
    // P₁(0, G) = −2(k/2πi) L(1, χ) with G the Gauss-sum sequence
    let g = make_sequence("gauss:k=4,i=1").unwrap();
    let p1 = periodic_p(1, &int(0), &g, 1).unwrap().embed();
    assert!(close(p1, c(0.0, 1.0), 1e-12));
    let rhs = -2.0 * (4.0 / c(0.0, 2.0 * PI)) * l1;
    assert!(close(rhs, c(0.0, 1.0), 1e-10));
    // P₁(0, G) = (i/2) Σ χ(j) cot(πj/k) − (1/2) Σ χ(j)
    for k in [3u32, 4, 5] {
        for chi in dirichlet_characters(k).unwrap() {
            let g = PeriodicSequence::new((0..k as i64).map(|n| gauss_sum(n, &chi).unwrap()).collect()).unwrap();
            let p1 = periodic_p(1, &int(0), &g, 1).unwrap().embed();
            let mut want = c(0.0, 0.0);
            for j in 1..k as i64 {
                let x = chi.value(j).embed();
                want += x * c(0.0, 0.5) / (PI * j as f64 / k as f64).tan() - 0.5 * x;
            }
            assert!(close(p1, want, 1e-10), "k={k}");
        }
    }
}

#[test]
fn a_series_examples() {
    let z = c(0.0, 1.0);
    let zero = make_sequence("list:k=4;vals=0,0,0,0").unwrap();
    let r0 = int(0);
    let v = a_series(z, c(2.0, 0.0), &chi4(), 1, &zero, 1, &r0, &r0, SeriesBudget::default()).unwrap();
    assert_eq!(v.value, c(0.0, 0.0));

    let chars = dirichlet_characters(4).unwrap();
    let chi = &chars[1];
    let g2 = make_sequence("gauss:k=4,i=1").unwrap();
    for n_big in 0..3i32 {
        let s = c(-2.0 * n_big as f64, 0.0);
        let a = a_series(z, s, &chi4(), 1, &g2, 1, &r0, &r0, SeriesBudget::default()).unwrap();
        let mut want = c(0.0, 0.0);
        for n in 1..200i64 {
            let gn = gauss_sum(n, chi).unwrap().embed();
            let gz: Complex64 = (0..4).map(|v| chi.value(v).embed() * e2pi(v as f64 * n as f64 * z / 4.0)).sum();
            want += gn * gz * (n as f64).powi(-2 * n_big - 1) / (1.0 - e2pi(n as f64 * z));
        }
        assert!(close(a.value, want, 1e-10), "N={n_big}");
        assert!(a.achieved_tail <= 1e-13);
    }
    let s = c(1.5, 0.4);
    let z = c(0.2, 0.6);
    let tight = SeriesBudget { tail_target: 1e-15, ..SeriesBudget::default() };
    let r1 = rat(-1, 3);
    let a = a_series(z, s, &chi4(), 3, &g2, 1, &r1, &rat(1, 5), SeriesBudget::default()).unwrap();
    let b = a_series(z, s, &chi4(), 3, &g2, 1, &r1, &rat(1, 5), tight).unwrap();
    assert!(close(a.value, b.value, 1e-12));
    let tiny = SeriesBudget { max_terms: 10, ..SeriesBudget::default() };
    assert!(matches!(
        a_series(z, s, &chi4(), 1, &g2, 1, &r1, &r1, tiny),
        Err(crate::Error::Accuracy { .. })
    ));
}

#[test]
fn g_direct_matches_fourier() {
    let args = EisensteinArgs::new(chi4(), chi4());
    let z = c(0.0, 1.0);
    let s = c(3.0, 0.0);
    let d = eisenstein_g_direct(z, s, &args, SeriesBudget::default()).unwrap();
    let f = g_via_fourier(z, s, &args, SeriesBudget::default()).unwrap();
    assert!(close(d.value, f.value, 1e-7), "{} vs {}", d.value, f.value);

    let zero = make_sequence("list:k=4;vals=0,0,0,0").unwrap();
    let v = eisenstein_g_direct(z, s, &EisensteinArgs::new(zero.clone(), zero), SeriesBudget::default()).unwrap();
    assert_eq!(v.value, c(0.0, 0.0));
}

#[test]
fn g_direct_weight_four() {
    let one = make_sequence("const:k=1").unwrap();
    let args = EisensteinArgs::new(one.clone(), one);
    let z = c(0.0, 1.0);
    let d = eisenstein_g_direct(z, c(4.0, 0.0), &args, SeriesBudget::default()).unwrap().value;
    // closed form Γ(1/4)^8 / (960 π²)
    let g14 = gamma_fn(c(0.25, 0.0)).unwrap().re;
    assert!(close(d, c(g14.powi(8) / (960.0 * PI * PI), 0.0), 1e-10));
    // plain square lattice loop
    let m_max = 300i64;
    let mut lattice = c(0.0, 0.0);
    for m in -m_max..=m_max {
        for n in -m_max..=m_max {
            if (m, n) != (0, 0) {
                lattice += (m as f64 * z + n as f64).powi(-4);
            }
        }
    }
    assert!(close(d, lattice, 1e-4));
}

#[test]
fn g_fourier_various() {
    let cases: Vec<(EisensteinArgs, Complex64, Complex64)> = vec![
        (
            EisensteinArgs::new(make_sequence("gauss:k=5,i=2").unwrap(), make_sequence("exp:k=5").unwrap())
                .scaled(2, 3)
                .shifted(rat(1, 3), rat(-2, 5)),
            c(0.3, 0.8),
            c(2.6, 0.7),
        ),
        (
            EisensteinArgs::new(make_sequence("list:k=3;vals=1,-1/2,z3").unwrap(), make_sequence("const:k=1").unwrap())
                .shifted(int(1), int(-2)),
            c(-0.4, 1.1),
            c(3.5, -0.5),
        ),
        (
            EisensteinArgs::new(chi4(), make_sequence("ramanujan:k=6").unwrap()).scaled(1, -1).shifted(int(0), rat(1, 2)),
            c(0.1, 0.7),
            c(2.5, 0.5),
        ),
    ];
    for (args, z, s) in cases {
        let d = eisenstein_g_direct(z, s, &args, SeriesBudget::default()).unwrap();
        let f = g_via_fourier(z, s, &args, SeriesBudget::default()).unwrap();
        assert!(close(d.value, f.value, 1e-7), "{} vs {}", d.value, f.value);
    }
}

#[test]
fn lambda_term_switches_off() {
    let args = EisensteinArgs::new(chi4(), chi4()).shifted(rat(1, 2), int(0));
    let z = c(0.0, 1.0);
    let s = c(3.0, 0.0);
    let g = g_via_fourier(z, s, &args, SeriesBudget::default()).unwrap().value;
    let bhat = chi4().fourier_hat().unwrap();
    let r1 = rat(1, 2);
    let r0 = int(0);
    let tight = SeriesBudget { tail_target: 1e-18, ..SeriesBudget::default() };
    let a1 = a_series(z, s, &chi4(), 1, &bhat, -1, &r1, &r0, tight).unwrap().value;
    let a2 = a_series(z, s, &chi4(), -1, &bhat, 1, &-r1.clone(), &r0, tight).unwrap().value;
    let pre = cpow(c(0.0, -PI / 2.0), s) * 4.0 * rgamma(s);
    assert!(close(g, pre * (a1 + (c(0.0, PI) * s).exp() * a2), 1e-12));
}

#[test]
fn beta_must_be_invertible() {
    let args = EisensteinArgs::new(chi4(), chi4()).scaled(1, 2);
    assert!(matches!(
        g_via_fourier(c(0.0, 1.0), c(3.0, 0.0), &args, SeriesBudget::default()),
        Err(crate::Error::Domain(_))
    ));
}

fn loop_args(c: i64, d: i64, k: i64, mu: i64, v: i64, j: i64, r1: Rational, r2: Rational) -> LoopArgs {
    LoopArgs { c, d, k, mu, v, j, r1, r2 }
}

#[test]
fn loop_integral_forms() {
    let z = c(0.0, 1.0);
    let a = loop_args(1, 0, 4, 0, 0, 1, int(0), int(0));
    let got = loop_i_residue(z, 0, &a).unwrap();
    let b = |n: u32, x: Rational| to_f64(&bernoulli_poly(n, &x).unwrap());
    let pii = c(0.0, PI);
    let want = -pii / z * b(2, int(0)) - pii * z * b(2, rat(1, 4)) + 2.0 * pii * b(1, rat(1, 4)) * b(1, int(0));
    assert!(close(got, want, 1e-14));
    let q = loop_i_quadrature(z, 0, &a).unwrap();
    assert!(close(got, q, 1e-8));

    let mut seed = 0x2545_f491_4f6c_dd1du64;
    let mut next = |m: u64| {
        seed ^= seed << 13;
        seed ^= seed >> 7;
        seed ^= seed << 17;
        seed % m
    };
    for _ in 0..20 {
        let k = 1 + next(5) as i64;
        let cc = 1 + next(4) as i64;
        let d = k * (next(5) as i64 - 2);
        let z = c(next(200) as f64 / 100.0 - 1.0, 0.3 + next(100) as f64 / 50.0);
        let a = loop_args(
            cc,
            d,
            k,
            next(k as u64) as i64,
            next(k as u64) as i64,
            1 + next(cc as u64) as i64,
            rat(next(13) as i64 - 6, 1 + next(5) as i64),
            rat(next(13) as i64 - 6, 1 + next(5) as i64),
        );
        let n = next(4) as u32;
        let r = loop_i_residue(z, n, &a).unwrap();
        let q = loop_i_quadrature(z, n, &a).unwrap();
        assert!(close(r, q, 1e-8 * r.norm().max(1.0)), "{a:?} N={n}: {r} vs {q}");
    }
    assert!(loop_i_quadrature_with_radius(z, 0, &a, 2.0).is_err());
}

#[test]
fn lipschitz_summation() {
    let s = c(3.0, 0.0);
    let z = c(0.0, 1.0);
    let tau = 1.0 / 3.0;
    let mut lhs = c(0.0, 0.0);
    for n in 1..60 {
        let x = n as f64 - tau;
        lhs += cpow(c(x, 0.0), s - 1.0) * e2pi(z * x);
    }
    let mut rhs = c(0.0, 0.0);
    let big = 100_000i64;
    for n in -big..=big {
        rhs += cpow(z + n as f64, -s) * e2pi(c(n as f64 * tau, 0.0));
    }
    let rhs = rhs * gamma_fn(s).unwrap() / cpow(c(0.0, -2.0 * PI), s);
    assert!(close(lhs, rhs, 1e-9), "{lhs} vs {rhs}");
}
