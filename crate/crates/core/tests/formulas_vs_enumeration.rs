mod common;

use fubini_core::oracle::{
    count_rigged, count_weak_orderings, enumerate_weak_orderings, set_partition_counts,
    signed_cycle_counts, verify_counting_lemma, RiggedMode,
};
use fubini_core::sequences::{
    factorials, fubini, fubini_alternating, fubini_r_with, horse_r_with, transform_strong_to_weak,
    transform_weak_to_strong,
};
use fubini_core::stirling::{
    falling_factorial_coefficients, second_kind_row, stirling_first_signed, stirling_second,
};
use num_bigint::BigInt;
use std::collections::HashSet;

#[test]
fn weak_ordering_counts_match_fubini() {
    let f = fubini(9);
    for n in 0..=8 {
        assert_eq!(
            BigInt::from(count_weak_orderings(n).unwrap()),
            f.values()[n],
            "n = {n}"
        );
    }
}

#[test]
fn rigged_counts_match_closed_forms() {
    let f = fubini(8);
    for n in 0..=7 {
        for r in 0..=n {
            let strong = count_rigged(n, r, RiggedMode::RelativeStrong).unwrap();
            let prescribed = count_rigged(n, r, RiggedMode::Prescribed).unwrap();
            assert_eq!(
                BigInt::from(strong),
                fubini_r_with(&f, n, r).unwrap(),
                "F_{r}({n})"
            );
            assert_eq!(
                BigInt::from(prescribed),
                horse_r_with(&f, n, r).unwrap(),
                "H_{r}({n})"
            );
            let r_fact: u64 = (1..=r as u64).product();
            assert_eq!(strong, r_fact * prescribed);
        }
    }
}

#[test]
fn cycle_counts_match_first_kind() {
    for n in 0..=9 {
        let counts = signed_cycle_counts(n).unwrap();
        let coeffs = falling_factorial_coefficients(n);
        for k in 0..=n {
            assert_eq!(BigInt::from(counts[k]), coeffs[k], "s({n},{k})");
            assert_eq!(BigInt::from(counts[k]), stirling_first_signed(n, k));
        }
    }
}

#[test]
fn partition_counts_match_second_kind() {
    for n in 0..=12 {
        let counts = set_partition_counts(n).unwrap();
        let row = second_kind_row(n);
        for k in 0..=n {
            assert_eq!(BigInt::from(counts[k]), row[k], "S({n},{k})");
        }
    }
    for n in 0..=10 {
        for k in 0..=n {
            assert_eq!(
                BigInt::from(set_partition_counts(n).unwrap()[k]),
                stirling_second(n, k)
            );
        }
    }
}

#[test]
fn counting_lemma_holds() {
    for n in 0..=6 {
        for m in 0..=n {
            assert!(verify_counting_lemma(n, m).unwrap(), "n={n} m={m}");
        }
    }
}

#[test]
fn streams_have_no_duplicates() {
    for n in 0..=6 {
        let mut seen = HashSet::new();
        for o in enumerate_weak_orderings(n).unwrap() {
            assert!(seen.insert(o.ranks()));
        }
        assert_eq!(seen.len() as u64, count_weak_orderings(n).unwrap());
    }
}

#[test]
fn three_routes_to_fubini() {
    let len = 121;
    let production = fubini(len);
    let alternating = fubini_alternating(len);
    let transformed = transform_strong_to_weak(&factorials(len), len).unwrap();
    let classical = common::fubini_binomial_recurrence(len);
    assert_eq!(production.values(), alternating.values());
    assert_eq!(production.values(), transformed.values());
    assert_eq!(production.values(), &classical[..]);
}

#[test]
fn weak_strong_round_trip() {
    for len in [1, 2, 10, 33, 60] {
        let f = factorials(len);
        let back =
            transform_weak_to_strong(&transform_strong_to_weak(&f, len).unwrap(), len).unwrap();
        assert_eq!(back.values(), f.values());
    }
}

#[test]
fn rigged_boundaries() {
    let f = fubini(26);
    for n in 0..=25 {
        assert_eq!(&fubini_r_with(&f, n, 0).unwrap(), f.get(n).unwrap());
        if n >= 1 {
            assert_eq!(&fubini_r_with(&f, n, 1).unwrap(), f.get(n).unwrap());
        }
    }
    for r in 0..=12 {
        assert_eq!(horse_r_with(&fubini(13), r, r).unwrap(), BigInt::from(1));
    }
}
