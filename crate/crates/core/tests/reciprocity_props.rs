use std::f64::consts::PI;

use pdedekind::catalog::run_case;
use pdedekind::dedekind::classical_s;
use pdedekind::exact::rational::to_f64;
use proptest::prelude::*;
use serde_json::json;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// s(d,c) = (1/4c) Σ_{n=1}^{c−1} cot(πn/c) cot(πdn/c).
fn cot_oracle(d: i64, c: i64) -> f64 {
    let cot = |x: f64| x.cos() / x.sin();
    (1..c).map(|n| cot(PI * n as f64 / c as f64) * cot(PI * (d * n) as f64 / c as f64)).sum::<f64>() / (4.0 * c as f64)
}

fn list(k: usize) -> impl Strategy<Value = String> {
    prop::collection::vec((-5i64..6, 1i64..5), k).prop_map(move |v| {
        let vals: Vec<String> = v.iter().map(|(n, d)| format!("{n}/{d}")).collect();
        format!("list:k={k};vals={}", vals.join(","))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn classical_sum_matches_cotangent_form(c in 1i64..200, d in -300i64..300) {
        prop_assume!(gcd(c, d.abs()) == 1);
        prop_assert!((to_f64(&classical_s(d, c).unwrap()) - cot_oracle(d, c)).abs() < 1e-9);
    }

    #[test]
    fn classical_reciprocity(c in 1i64..300, d in 1i64..300) {
        prop_assume!(gcd(c, d) == 1);
        let r = run_case("E1", &json!({"c": c, "d": d})).unwrap();
        prop_assert!(r.pass);
    }
}

fn rep1_params() -> impl Strategy<Value = serde_json::Value> {
    prop_oneof![Just(1usize), Just(2), Just(3), Just(4), Just(6)].prop_flat_map(|k| {
        (list(k), list(k), 1i64..12, 1i64..6).prop_filter_map("coprime", move |(a, b, c, m)| {
            let d = m * k as i64;
            (gcd(c, d) == 1).then(|| json!({"k": k, "A": a, "B": b, "c": c, "d": d}))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn periodic_reciprocity_on_random_sequences(p in rep1_params()) {
        let r = run_case("E2", &p).unwrap();
        prop_assert!(r.pass, "{}", r.to_json());
    }
}
