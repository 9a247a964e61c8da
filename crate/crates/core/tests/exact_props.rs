use num::BigInt;
use pdedekind::arith::euler_phi;
use pdedekind::exact::{cyclotomic_polynomial, rat, Cyclotomic};
use proptest::prelude::*;

fn z(m: u32, j: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(m, j).unwrap()
}

#[test]
fn roots_of_unity_have_order_m() {
    for m in 1..=60u32 {
        let one = Cyclotomic::one();
        for j in [-(m as i64) - 1, -1, 0, 1, 2, m as i64 / 2, 2 * m as i64 + 3] {
            assert_eq!(z(m, j).pow(m), one, "m={m} j={j}");
        }
        // Φ_m(ζ_m) by Horner
        let mut acc = Cyclotomic::zero();
        for c in cyclotomic_polynomial(m).unwrap().iter().rev() {
            acc = &acc * &z(m, 1) + Cyclotomic::from_int(i64::try_from(c.clone()).unwrap());
        }
        assert!(acc.is_zero(), "Φ_{m}(ζ_{m}) ≠ 0");
    }
}

#[test]
fn cyclotomic_degrees() {
    for m in 1..=360u32 {
        let p = cyclotomic_polynomial(m).unwrap();
        assert_eq!(p.len() as u64 - 1, euler_phi(m as u64), "deg Φ_{m}");
        assert_eq!(p.last(), Some(&BigInt::from(1)));
    }
}

/// Σ_j q_j ζ_m^j with small rational q_j.
fn element(m: u32) -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-9i64..10, 1i64..6), m as usize).prop_map(move |qs| {
        qs.iter().enumerate().map(|(j, &(n, d))| z(m, j as i64).scale(&rat(n, d))).sum()
    })
}

fn pair() -> impl Strategy<Value = (u32, Cyclotomic, Cyclotomic)> {
    (1u32..=24).prop_flat_map(|m| (Just(m), element(m), element(m)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn embed_is_a_ring_homomorphism((_m, x, y) in pair()) {
        let (ex, ey) = (x.embed(), y.embed());
        prop_assert!(((&x * &y).embed() - ex * ey).norm() <= 1e-10 * (1.0 + ex.norm() * ey.norm()));
        prop_assert!(((&x + &y).embed() - (ex + ey)).norm() <= 1e-10 * (1.0 + ex.norm() + ey.norm()));
    }

    #[test]
    fn promotion_commutes_with_arithmetic((m, x, y) in pair(), r in 1u32..=4) {
        let big = m * r;
        let (px, py) = (x.promote(big).unwrap(), y.promote(big).unwrap());
        prop_assert_eq!((&x + &y).promote(big).unwrap(), &px + &py);
        prop_assert_eq!((&x * &y).promote(big).unwrap(), &px * &py);
        prop_assert_eq!(px.order(), big);
    }

    #[test]
    fn field_inverse((_m, x, _y) in pair()) {
        prop_assume!(!x.is_zero());
        prop_assert_eq!(&x * &x.inv().unwrap(), Cyclotomic::one());
    }
}
