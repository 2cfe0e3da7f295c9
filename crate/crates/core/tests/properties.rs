use num_bigint::BigInt;
use proptest::prelude::*;
use qsign_core::Series;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed for the hand-rolled randomized checks; `QSIGN_SEED` overrides it.
fn seed() -> u64 {
    std::env::var("QSIGN_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5eed_2024)
}

fn small_series(len: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(-20i64..=20, len).prop_map(|c| Series::from_i64s(&c))
}

fn unit_series(len: usize) -> impl Strategy<Value = Series> {
    (prop::bool::ANY, prop::collection::vec(-5i64..=5, len - 1)).prop_map(|(neg, tail)| {
        let mut c = vec![if neg { -1 } else { 1 }];
        c.extend(tail);
        Series::from_i64s(&c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn multiplication_is_commutative_and_associative(
        a in small_series(16), b in small_series(16), c in small_series(16)
    ) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in small_series(16), b in small_series(16), c in small_series(16)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a);
    }

    #[test]
    fn inverse_round_trips(x in unit_series(24)) {
        let y = x.invert().unwrap();
        prop_assert_eq!(&x * &y, Series::one(23));
    }

    #[test]
    fn powers_add(x in unit_series(12), a in -4i64..=4, b in -4i64..=4) {
        let lhs = x.pow_int(a + b).unwrap();
        let rhs = &x.pow_int(a).unwrap() * &x.pow_int(b).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dissection_round_trips(x in small_series(40), m in 1usize..=9) {
        // a dilated slice is known only up to its last full period, and
        // shifting never extends precision, so up to 2m - 2 orders are lost
        let t = x.precision();
        let mut sum = Series::zero(t);
        for r in 0..m.min(t + 1) {
            let part = x.slice(r, m).unwrap();
            sum = &sum + &part.dilate(m, Some(t)).shift(r);
        }
        prop_assert!(sum.precision() + 2 * m >= t + 2);
        prop_assert_eq!(&sum, &x.truncate(sum.precision()));
    }

    #[test]
    fn slices_pick_the_progression(x in small_series(30), m in 1usize..=7, r in 0usize..7) {
        prop_assume!(r < m);
        let s = x.slice(r, m).unwrap();
        prop_assert_eq!(s.precision(), (x.precision() - r) / m);
        for (n, c) in s.coeffs().iter().enumerate() {
            prop_assert_eq!(c, &x.coeffs()[m * n + r]);
        }
    }
}

fn one_minus(e: usize, t: usize) -> Series {
    &Series::one(t) - &Series::monomial(e, 1, t)
}

fn product(exps: &[usize], t: usize) -> Series {
    exps.iter()
        .fold(Series::one(t), |acc, &e| &acc * &one_minus(e, t))
}

#[test]
fn quotient_of_nested_factor_sets_is_a_positive_series() {
    let mut rng = ChaCha8Rng::seed_from_u64(seed());
    let t = 60;
    for _ in 0..40 {
        let big: Vec<usize> = (1..=t).filter(|_| rng.gen_bool(0.4)).collect();
        let small: Vec<usize> = big.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        let rest: Vec<usize> = big.iter().copied().filter(|e| !small.contains(e)).collect();

        let quotient = &product(&small, t) * &product(&big, t).invert().unwrap();
        let expected = product(&rest, t).invert().unwrap();
        assert_eq!(quotient, expected, "S1 = {small:?}, S2 = {big:?}");
        assert_eq!(quotient.coeffs()[0], BigInt::from(1));
        assert!(quotient.coeffs().iter().all(|c| *c >= BigInt::from(0)));
    }
}

#[test]
fn dividing_a_nonnegative_series_by_one_minus_q_m_is_strictly_positive() {
    let mut rng = ChaCha8Rng::seed_from_u64(seed() ^ 1);
    let t = 120;
    for _ in 0..40 {
        let m = rng.gen_range(2..=9);
        let mut b = Series::one(t);
        for n in 1..=t / m {
            if rng.gen_bool(0.5) {
                b = &b + &Series::monomial(m * n, rng.gen_range(0..5), t);
            }
        }
        let a = &b * &one_minus(m, t).invert().unwrap();
        for (n, c) in a.coeffs().iter().enumerate() {
            if n % m == 0 {
                assert!(*c >= BigInt::from(1), "m = {m}, n = {n}");
            } else {
                assert_eq!(*c, BigInt::from(0));
            }
        }
    }
}
