use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use thetarep::cli::parse_rational;
use thetarep::gauge::{self, BundleTopology};
use thetarep::repnum::{self, QuadForm};
use thetarep::QSeries;

fn series() -> impl Strategy<Value = QSeries> {
    (0usize..12).prop_flat_map(|t| {
        prop::collection::vec(-1000i64..1000, t + 1).prop_map(|v| QSeries::from_i64s(&v))
    })
}

fn same_truncation_pair() -> impl Strategy<Value = (QSeries, QSeries, QSeries)> {
    (0usize..10).prop_flat_map(|t| {
        let v = || prop::collection::vec(-50i64..50, t + 1).prop_map(|v| QSeries::from_i64s(&v));
        (v(), v(), v())
    })
}

fn naive_mul(a: &QSeries, b: &QSeries) -> Vec<BigInt> {
    let t = a.truncation().min(b.truncation());
    (0..=t)
        .map(|n| (0..=n).map(|i| &a.coeffs()[i] * &b.coeffs()[n - i]).sum())
        .collect()
}

fn topology() -> impl Strategy<Value = (i64, Vec<i64>, i64)> {
    (1usize..5, -30i64..30, (1i64..8).prop_flat_map(|s| prop_oneof![Just(s), Just(-s)]))
        .prop_flat_map(|(n, k, sigma)| {
            prop::collection::vec(-9i64..9, n).prop_map(move |mut l| {
                l.push(-l.iter().sum::<i64>());
                (k, l, sigma)
            })
        })
}

proptest! {
    #[test]
    fn mul_commutes_and_matches_convolution((a, b, _) in same_truncation_pair()) {
        prop_assert_eq!(&a * &b, &b * &a);
        let prod = &a * &b;
        prop_assert_eq!(prod.coeffs(), &naive_mul(&a, &b)[..]);
    }

    #[test]
    fn mul_associates((a, b, c) in same_truncation_pair()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn mul_truncates_to_shorter(a in series(), b in series()) {
        prop_assert_eq!((&a * &b).truncation(), a.truncation().min(b.truncation()));
    }

    #[test]
    fn pow_adds_exponents(a in series(), i in 0u32..4, j in 0u32..4) {
        prop_assert_eq!(a.pow(i + j), &a.pow(i) * &a.pow(j));
    }

    #[test]
    fn big_coefficients_fall_back_exactly(v in prop::collection::vec(any::<i64>(), 1..6)) {
        let a = QSeries::from_i64s(&v);
        let sq = &a * &a;
        prop_assert_eq!(sq.coeffs(), &naive_mul(&a, &a)[..]);
    }

    #[test]
    fn theta_powers_are_nonnegative(k in 1u32..7, t in 0usize..60) {
        prop_assert!(repnum::theta3_series(t).pow(k).is_nonnegative());
        prop_assert!(repnum::theta3_nonzero_series(t).pow(k).is_nonnegative());
    }

    #[test]
    fn tables_are_stable_under_truncation(k in 1u32..6, small in 0usize..40, extra in 0usize..40) {
        let a = repnum::r_squares_table(k, small);
        let b = repnum::r_squares_table(k, small + extra);
        prop_assert_eq!(a.counts(), &b.counts()[..=small]);
    }

    #[test]
    fn squares_satisfy_convolution(k in 1u32..6, nmax in 0usize..80) {
        // r_{k+1} = r_k * r_1
        let rk = repnum::r_squares_table(k, nmax);
        let r1 = repnum::r_squares_table(1, nmax);
        let next = repnum::r_squares_table(k + 1, nmax);
        for n in 0..=nmax {
            let conv: BigInt = (0..=n).map(|i| &rk.counts()[i] * &r1.counts()[n - i]).sum();
            prop_assert_eq!(&conv, &next.counts()[n]);
        }
    }

    #[test]
    fn counts_are_even_away_from_zero(k in 1u32..6, nmax in 1usize..80) {
        let r = repnum::r_squares_table(k, nmax);
        let big_r = repnum::nonvanishing_squares_table(k, nmax);
        for n in 1..=nmax {
            prop_assert!((&r.counts()[n] % 2u32).is_zero());
            prop_assert!((&big_r.counts()[n] % BigInt::from(1u32 << k)).is_zero());
        }
    }

    #[test]
    fn all_ones_is_the_smallest_nonvanishing(k in 1u32..8) {
        let t = repnum::nonvanishing_squares_table(k, k as usize);
        prop_assert_eq!(t.count(k as usize).unwrap(), &BigInt::from(1u64 << k));
        for n in 1..k as usize {
            prop_assert!(t.count(n).unwrap().is_zero());
        }
    }

    #[test]
    fn form_counts_are_even(n in 1usize..4, nmax in 1usize..30) {
        let q = QuadForm::an(n).unwrap();
        let t = repnum::form_table(&q, nmax);
        for m in 1..=nmax {
            prop_assert!((&t.counts()[m] % 2u32).is_zero());
        }
    }

    #[test]
    fn chern_simons_in_unit_interval_and_k_free((k, l, sigma) in topology(), shift in -20i64..20) {
        let n1 = l.len();
        let b = BundleTopology::new(k, l.clone(), sigma).unwrap();
        let shifted = BundleTopology::new(k + shift, l, sigma).unwrap();
        for q in 1..7i64 {
            // a region point with denominator q: (q-1)/q, 1/q, 0, ...
            let mut alpha = vec![BigRational::zero(); n1];
            alpha[0] = BigRational::new((q - 1).into(), q.into());
            alpha[1] = BigRational::new(1.into(), q.into());
            if q == 1 {
                alpha[1] = BigRational::zero();
            }
            let h = thetarep::gauge::HolonomyClass::new(alpha).unwrap();
            let cs = gauge::chern_simons(&b, &h).unwrap();
            prop_assert!(!cs.is_negative() && cs < BigRational::from_integer(1.into()));
            prop_assert_eq!(&cs, &gauge::chern_simons(&shifted, &h).unwrap());
            let charge = gauge::chern_weil_charge(&b, &h).unwrap();
            prop_assert!((charge - &cs).is_integer());
        }
    }

    #[test]
    fn rationals_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
        let r = BigRational::new(p.into(), q.into());
        let text = r.to_string();
        let back = parse_rational(&text).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert!(back.denom().is_positive());
        prop_assert_eq!(num_integer::Integer::gcd(back.numer(), back.denom()), BigInt::from(1));
    }
}
