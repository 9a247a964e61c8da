use pdedekind::bernoulli::*;
use pdedekind::exact::{int, rat, Cyclotomic, Rational};
use pdedekind::sequences::{dirichlet_characters, make_sequence, PeriodicSequence};
use proptest::prelude::*;

fn c(q: &Rational) -> Cyclotomic {
    Cyclotomic::from_rational(q)
}

fn fact(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

/// Power-series quotient num/den, both given by their first `n` coefficients.
fn series_div(num: &[Cyclotomic], den: &[Rational], n: usize) -> Vec<Cyclotomic> {
    let mut q: Vec<Cyclotomic> = Vec::with_capacity(n);
    for i in 0..n {
        let mut acc = num[i].clone();
        for j in 0..i {
            acc -= q[j].scale(&den[i - j]);
        }
        q.push(acc.scale(&den[0].recip()));
    }
    q
}

/// Coefficients of Σ_n w(n) e^{(n+x)t} up to t^{order}.
fn exp_series(k: u32, w: impl Fn(i64) -> Cyclotomic, x: &Rational, order: usize) -> Vec<Cyclotomic> {
    (0..=order)
        .map(|i| {
            (0..k as i64)
                .map(|n| {
                    let base = int(n) + x;
                    let p = (0..i).fold(int(1), |a, _| a * &base);
                    w(n).scale(&(p / fact(i as u32)))
                })
                .sum()
        })
        .collect()
}

fn oracle_sequences() -> Vec<PeriodicSequence> {
    let mut out = Vec::new();
    for k in 1..=6u32 {
        out.push(make_sequence(&format!("const:k={k}")).unwrap());
        out.push(make_sequence(&format!("ramanujan:k={k}")).unwrap());
        out.push(make_sequence(&format!("exp:k={k}")).unwrap());
        for chi in dirichlet_characters(k).unwrap() {
            out.push(chi.sequence().clone());
            out.push(make_sequence(&format!("gauss:k={k},i={}", chi.index())).unwrap());
        }
    }
    out.push(make_sequence("list:k=5;vals=1/3,-2,0,7/5,z3").unwrap());
    out.push(make_sequence("list:k=6;vals=0,0,1,-1/2,4,z4").unwrap());
    out
}

#[test]
fn generating_function_oracle_numbers_and_polynomials() {
    const ORDER: usize = 8;
    for a in oracle_sequences() {
        let k = a.period();
        // denominator (e^{kt} − 1)/t
        let den: Vec<Rational> = (0..=ORDER)
            .map(|i| Rational::from_integer(num::BigInt::from(k).pow(i as u32 + 1)) / fact(i as u32 + 1))
            .collect();
        let q = series_div(&exp_series(k, |n| a.at(n).clone(), &int(0), ORDER), &den, ORDER + 1);
        for j in 0..=ORDER as u32 {
            assert_eq!(periodic_b(j, &a).unwrap().scale(&fact(j).recip()), q[j as usize], "B_{j}(A), k={k}");
        }
        for x in [rat(0, 1), rat(1, 3), rat(-5, 2)] {
            let q = series_div(&exp_series(k, |n| a.at(-n).clone(), &x, ORDER), &den, ORDER + 1);
            for j in 0..=ORDER as u32 {
                assert_eq!(
                    periodic_b_poly(j, &x, &a).unwrap().scale(&fact(j).recip()),
                    q[j as usize],
                    "B_{j}(x,A), k={k}"
                );
            }
        }
    }
}

#[test]
fn character_vanishing() {
    for k in 1..=8u32 {
        for chi in dirichlet_characters(k).unwrap() {
            let s = chi.sequence();
            for m in 0..=3u32 {
                if chi.parity() == 1 && k == 1 && m == 0 {
                    assert_eq!(periodic_b(1, s).unwrap(), c(&rat(-1, 2)));
                } else if chi.parity() == 1 {
                    assert!(periodic_b(2 * m + 1, s).unwrap().is_zero(), "k={k} even odd-index");
                } else {
                    assert!(periodic_b(2 * m, s).unwrap().is_zero(), "k={k} odd even-index");
                }
            }
            if !chi.is_principal() {
                assert!(periodic_b(0, s).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn p_integer_convention_and_reflection_at_integers() {
    for x in -4..=4 {
        assert_eq!(bernoulli_function_p(1, &int(x)).unwrap(), rat(-1, 2));
        assert_eq!(bernoulli_function_p(1, &int(-x)).unwrap(), bernoulli_function_p(1, &int(x)).unwrap());
    }
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..13).prop_map(|(n, d)| rat(n, d))
}

fn sequence() -> impl Strategy<Value = PeriodicSequence> {
    (1u32..=6).prop_flat_map(|k| {
        prop::collection::vec((-6i64..6, 1i64..4, 0u32..3), k as usize).prop_map(move |v| {
            PeriodicSequence::new(
                v.into_iter()
                    .map(|(n, d, r)| {
                        let q = c(&rat(n, d));
                        if r == 0 { q } else { &q * &Cyclotomic::root_of_unity(k, r as i64).unwrap() }
                    })
                    .collect(),
            )
            .unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn raabe(n in 0u32..=6, r in 1i64..=8, x in small_rational()) {
        prop_assume!(!(n == 1 && x.denom() == &num::BigInt::from(1)));
        let rhs: Rational = (0..r)
            .map(|m| bernoulli_function_p(n, &((int(m) + &x) / int(r))).unwrap())
            .sum::<Rational>()
            * Rational::from_integer(num::BigInt::from(r).pow(n.saturating_sub(1)))
            / if n == 0 { int(r) } else { int(1) };
        prop_assert_eq!(bernoulli_function_p(n, &x).unwrap(), rhs);
    }

    #[test]
    fn reflection(n in 0u32..=7, x in small_rational()) {
        prop_assume!(!(n == 1 && x.denom() == &num::BigInt::from(1)));
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(bernoulli_function_p(n, &-x.clone()).unwrap(), sign * bernoulli_function_p(n, &x).unwrap());
    }

    #[test]
    fn periodic_p_has_period_k(n in 0u32..=4, x in small_rational(), a in sequence(), cc in -5i64..6) {
        let k = int(a.period() as i64);
        prop_assert_eq!(periodic_p(n, &(&x + &k), &a, cc).unwrap(), periodic_p(n, &x, &a, cc).unwrap());
    }

    #[test]
    fn p_at_zero_vs_b(r in 0u32..=6, a in sequence()) {
        prop_assume!(r != 1);
        let sign = if r % 2 == 0 { int(1) } else { int(-1) };
        prop_assert_eq!(periodic_p(r, &int(0), &a, 1).unwrap(), periodic_b(r, &a).unwrap().scale(&(sign / fact(r))));
    }

    #[test]
    fn coset_distribution(r in 1u32..=4, a in sequence(), cc in 1i64..9, m in 0i64..5) {
        let k = a.period() as i64;
        let d = k * m;
        prop_assume!(num::integer::gcd(d, cc) == 1);
        let lhs: Cyclotomic = (1..=cc).map(|j| periodic_p(r, &rat(d * j, cc), &a, cc).unwrap()).sum();
        let rhs = periodic_p(r, &int(0), &a, 1).unwrap().scale(&(Rational::from_integer(num::BigInt::from(cc)).pow(1 - r as i32)));
        prop_assert_eq!(lhs, rhs);
    }
}
