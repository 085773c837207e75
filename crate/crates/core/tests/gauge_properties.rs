//! Arithmetic properties of the gauge-group invariants: agreement between
//! the gcd criterion and the capped valuations at odd primes, periodicity,
//! and attainment of every invariant class.

use std::collections::HashSet;

use anpoly::gauge::{
    an_triviality_order, count_su2_classes, gcd_equivalent, is_ad_p_trivial, odd_primes_up_to,
    p_adic_valuation, su2_an_equivalent, su2_invariant, Valuation, Verdict,
};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use proptest::prelude::*;

proptest! {
    #[test]
    fn equivalence_is_reflexive(k in -100_000i64..=100_000, n in 1u32..=4) {
        prop_assert_eq!(su2_an_equivalent(k, k, n), Verdict::Equivalent);
    }

    #[test]
    fn equivalence_is_symmetric(k in -10_000i64..=10_000, k2 in -10_000i64..=10_000, n in 1u32..=4) {
        prop_assert_eq!(su2_an_equivalent(k, k2, n), su2_an_equivalent(k2, k, n));
    }

    #[test]
    fn not_equivalent_requires_the_converse_clause(
        k in -10_000i64..=10_000,
        k2 in -10_000i64..=10_000,
        n in 1u32..=4,
    ) {
        if su2_an_equivalent(k, k2, n) == Verdict::NotEquivalent {
            let v2 = p_adic_valuation(k, 2).unwrap().min(p_adic_valuation(k2, 2).unwrap());
            prop_assert!(v2 <= Valuation::Finite(1));
        }
    }

    #[test]
    fn capped_valuation_agreement_is_gcd_agreement_per_prime(
        k in -5_000i64..=5_000,
        k2 in -5_000i64..=5_000,
        n in 1u32..=3,
    ) {
        // per odd prime p: gcd(p^cap, k) = gcd(p^cap, k2) iff the capped
        // valuations agree
        for p in odd_primes_up_to(2 * n as u64 + 1) {
            let cap = anpoly::gauge::su2_cap(p, n);
            let modulus = BigUint::from(p).pow(cap);
            let gcd_agree = gcd_equivalent(&modulus, k, k2);
            let val_agree = p_adic_valuation(k, p).unwrap().capped(cap)
                == p_adic_valuation(k2, p).unwrap().capped(cap);
            prop_assert_eq!(gcd_agree, val_agree, "p = {}", p);
        }
    }
}

#[test]
fn gcd_criterion_agrees_with_odd_invariant_entries() {
    // with N = odd_part(n) * 2^(2n), gcd agreement forces the odd-prime
    // entries of the invariants to agree
    for n in 1..=3u32 {
        let order = an_triviality_order(n).unwrap();
        let modulus = order.odd_part.clone() * BigUint::from(2u32).pow(2 * n);
        for k in -300i64..=300 {
            for k2 in k..=300 {
                if gcd_equivalent(&modulus, k, k2) {
                    let a = su2_invariant(k, n);
                    let b = su2_invariant(k2, n);
                    let odd_a: Vec<_> = a.entries.iter().filter(|e| e.p != 2).collect();
                    let odd_b: Vec<_> = b.entries.iter().filter(|e| e.p != 2).collect();
                    assert_eq!(odd_a, odd_b, "n={n} k={k} k2={k2}");
                }
            }
        }
    }
}

#[test]
fn invariant_depends_only_on_k_mod_the_full_period() {
    for n in 1..=2u32 {
        let order = an_triviality_order(n).unwrap();
        let period = (order.odd_part.clone() * BigUint::from(2u32).pow(2 * n))
            .to_i64()
            .unwrap();
        for k in -500i64..=500 {
            assert_eq!(su2_invariant(k, n), su2_invariant(k + period, n), "n={n} k={k}");
            assert_eq!(su2_invariant(k, n), su2_invariant(k - period, n), "n={n} k={k}");
        }
    }
}

#[test]
fn odd_part_is_the_exact_triviality_threshold_per_prime() {
    for n in 1..=4u32 {
        let order = an_triviality_order(n).unwrap();
        let odd_part = order.odd_part.to_i64().unwrap();
        for p in odd_primes_up_to(2 * n as u64 + 1) {
            if odd_part % p as i64 == 0 {
                assert!(is_ad_p_trivial(odd_part, p, n).unwrap(), "n={n} p={p}");
                assert!(
                    !is_ad_p_trivial(odd_part / p as i64, p, n).unwrap(),
                    "n={n} p={p}"
                );
            }
        }
    }
}

#[test]
fn every_class_is_attained_at_level_2() {
    // 30 classes; a full period of k plus k = 0 attains each
    let order = an_triviality_order(2).unwrap();
    let period = (order.odd_part * BigUint::from(2u32).pow(4)).to_u64().unwrap() as i64;
    let mut seen = HashSet::new();
    seen.insert(su2_invariant(0, 2));
    for k in 1..=period {
        seen.insert(su2_invariant(k, 2));
    }
    assert_eq!(BigUint::from(seen.len() as u64), count_su2_classes(2));
    assert_eq!(seen.len(), 30);
}

#[test]
fn verdict_digest_over_a_small_exhaustive_grid() {
    // every pair in [-40, 40]^2 at n = 1: the three verdicts partition
    // the grid and Inconclusive only occurs with both v_2 >= 2
    let mut counts = [0u64; 3];
    for k in -40i64..=40 {
        for k2 in -40i64..=40 {
            match su2_an_equivalent(k, k2, 1) {
                Verdict::Equivalent => counts[0] += 1,
                Verdict::NotEquivalent => counts[1] += 1,
                Verdict::Inconclusive => {
                    counts[2] += 1;
                    let v2k = p_adic_valuation(k, 2).unwrap();
                    let v2k2 = p_adic_valuation(k2, 2).unwrap();
                    assert!(v2k >= Valuation::Finite(2) && v2k2 >= Valuation::Finite(2));
                }
            }
        }
    }
    assert_eq!(counts.iter().sum::<u64>(), 81 * 81);
    assert!(counts[0] > 0 && counts[1] > 0 && counts[2] > 0);
}
