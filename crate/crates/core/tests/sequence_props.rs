use pdedekind::sequences::{dirichlet_characters, make_sequence, PeriodicSequence};
use proptest::prelude::*;

fn list_spec() -> impl Strategy<Value = String> {
    (1usize..=12)
        .prop_flat_map(|k| prop::collection::vec((-7i64..8, 1i64..5), k))
        .prop_map(|v| {
            let vals: Vec<String> = v.iter().map(|(n, d)| format!("{n}/{d}")).collect();
            format!("list:k={};vals={}", v.len(), vals.join(","))
        })
}

fn character_spec() -> impl Strategy<Value = String> {
    (1u32..=12).prop_flat_map(|k| {
        let n = dirichlet_characters(k).unwrap().len();
        (Just(k), 0..n).prop_map(|(k, i)| format!("char:k={k},i={i}"))
    })
}

fn seq(spec: &str) -> PeriodicSequence {
    make_sequence(spec).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn fourier_round_trip(spec in prop_oneof![list_spec(), character_spec()]) {
        let a = seq(&spec);
        let hat = a.fourier_hat().unwrap();
        prop_assert_eq!(hat.period(), a.period());
        let back = hat.fourier_inverse().unwrap();
        prop_assert_eq!(back.values(), a.values());
    }
}

#[test]
fn principal_gauss_sequence_is_ramanujan() {
    for k in 1..=30u32 {
        assert_eq!(seq(&format!("gauss:k={k},i=0")).values(), seq(&format!("ramanujan:k={k}")).values(), "k={k}");
    }
}

#[test]
fn alternating_period() {
    for k in 1..=12u32 {
        for (i, chi) in dirichlet_characters(k).unwrap().iter().enumerate() {
            let alt = seq(&format!("altchar:k={k},i={i}"));
            let h = if k % 2 == 0 { k } else { 2 * k };
            assert_eq!(alt.period(), h);
            for n in 0..2 * h as i64 {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                assert_eq!(*alt.at(n), chi.value(n).scale(&pdedekind::exact::int(sign)), "k={k} i={i} n={n}");
            }
        }
    }
}

#[test]
fn character_parity() {
    for k in 1..=24u32 {
        for chi in dirichlet_characters(k).unwrap() {
            let p = pdedekind::exact::int(chi.parity() as i64);
            for n in -(k as i64)..=k as i64 {
                assert_eq!(chi.value(n).scale(&p), *chi.value(-n));
            }
        }
    }
}
