use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use proptest::prelude::*;

use smex_core::asymptotics::{bernoulli_poly_exact, corollary_deviation, LogValue};
use smex_core::partitions::{enumerate_partitions, mex_s, mex_s_mod, sigma_oracle};
use smex_core::qseries::{partition_numbers, varsigma_theta_direct, varsigma_theta_reformulated};
use smex_core::{IntSeries, MexParams, MomentEngine, MomentKind, Partition, TruncatedSeries};

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..12, 0..14).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn series_strategy(order: usize) -> impl Strategy<Value = IntSeries> {
    prop::collection::vec(-50i64..50, order + 1).prop_map(|mut c| {
        c[0] = 1;
        TruncatedSeries::from_coeffs(c.into_iter().map(BigInt::from).collect()).unwrap()
    })
}

proptest! {
    #[test]
    fn mex_with_trivial_modulus_is_plain_mex(pi in partition_strategy(), s in 1u32..4) {
        prop_assert_eq!(mex_s(&pi, s), mex_s_mod(&pi, s, 1, 1));
    }

    #[test]
    fn mex_is_weakly_decreasing_in_s(pi in partition_strategy(), s in 1u32..4) {
        prop_assert!(mex_s(&pi, s + 1) <= mex_s(&pi, s));
    }

    #[test]
    fn mex_is_at_most_largest_part_plus_one(pi in partition_strategy(), s in 1u32..4) {
        prop_assert!(mex_s(&pi, s) <= pi.largest().unwrap_or(0) + 1);
    }

    #[test]
    fn residue_mex_lands_in_its_class(pi in partition_strategy(), s in 1u32..4, m in 1u32..5, a in 1u32..5) {
        prop_assume!(a <= m);
        let v = mex_s_mod(&pi, s, m, a);
        prop_assert_eq!(v % m, a % m);
        prop_assert!(pi.frequency(v) < s);
        for k in (a..v).step_by(m as usize) {
            prop_assert!(pi.frequency(k) >= s);
        }
    }

    #[test]
    fn series_inverse_is_two_sided(a in series_strategy(12)) {
        let inv = a.invert().unwrap();
        prop_assert_eq!(&a * &inv, TruncatedSeries::one(12));
        prop_assert_eq!(&inv * &a, TruncatedSeries::one(12));
    }

    #[test]
    fn series_product_commutes(a in series_strategy(10), b in series_strategy(10)) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn both_varsigma_factors_agree(s in 1u32..5, m in 1u32..7, a in 1u32..7, r in 0u32..5) {
        prop_assume!(a <= m);
        let p = MexParams::new(s, m, a, r).unwrap();
        prop_assert_eq!(varsigma_theta_direct(&p, 300), varsigma_theta_reformulated(&p, 300));
    }

    #[test]
    fn log_values_multiply_like_numbers(x in 1u64..1_000_000, y in 1u64..1_000_000) {
        let lx = LogValue::<f64>::from_biguint(&BigUint::from(x));
        let ly = LogValue::<f64>::from_biguint(&BigUint::from(y));
        let prod = (lx * ly).to_real();
        prop_assert!((prod / (x as f64 * y as f64) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bernoulli_difference_identity(n in 1usize..12, num in -20i64..20) {
        // B_n(x+1) - B_n(x) = n x^{n-1}
        let x = num_rational::BigRational::new(num.into(), 7.into());
        let one = num_rational::BigRational::from_integer(1.into());
        let lhs = bernoulli_poly_exact(n, &(&x + &one)) - bernoulli_poly_exact(n, &x);
        let rhs = num_rational::BigRational::from_integer((n as i64).into()) * num_traits::pow(x, n - 1);
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn enumeration_counts_partition_numbers() {
    let p = partition_numbers(25);
    for n in 0..=25u32 {
        let count = enumerate_partitions(n).count();
        assert_eq!(BigUint::from(count), p[n as usize], "n={n}");
    }
}

#[test]
fn enumeration_is_strictly_descending_lexicographic() {
    let all: Vec<Vec<u32>> = enumerate_partitions(12)
        .map(|p| p.parts().to_vec())
        .collect();
    assert!(all.windows(2).all(|w| w[0] > w[1]));
    assert!(all.iter().all(|p| p.iter().sum::<u32>() == 12));
}

#[test]
fn zeroth_sigma_moments_partition_the_partitions() {
    let p = partition_numbers(20);
    for s in 1..=3 {
        for m in 1..=4 {
            for n in 0..=20u32 {
                let total: BigUint = (1..=m)
                    .map(|a| sigma_oracle(&MexParams::new(s, m, a, 0).unwrap(), n))
                    .sum();
                assert_eq!(total, p[n as usize], "s={s} M={m} n={n}");
            }
        }
    }
}

#[test]
fn varsigma_is_nondecreasing_and_dominates_its_residue() {
    let engine = MomentEngine::new(600);
    for p in MexParams::grid(5, 3, 3) {
        let seq = engine.moments(&p, MomentKind::Varsigma);
        assert_eq!(seq.nondecreasing_from(), 0, "{p}");
        // every partition contributes at least A^r
        let floor = BigUint::from(p.residue()).pow(p.r());
        let counts = partition_numbers(600);
        for (v, c) in seq.values().iter().zip(&counts) {
            assert!(v >= &(&floor * c));
        }
    }
}

#[test]
fn equal_sequences_have_zero_deviation() {
    let engine = MomentEngine::new(50);
    let p1 = MexParams::new(1, 2, 1, 0).unwrap();
    let a = engine.varsigma(&p1);
    let b = engine.varsigma(&p1.with_residue(2).unwrap());
    assert!(corollary_deviation::<f64>(&a, &b, 50).unwrap().is_zero());
}
