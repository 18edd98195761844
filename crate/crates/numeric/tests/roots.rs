//! Root-finder integration tests: exactness on constructed factorizations,
//! extreme coefficient spreads, and randomized round trips.

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use twobridge_numeric::{horner_int, int_roots, to_f64, NumCtx};

/// Expands lead·Π(x − rᵢ) exactly, ascending coefficients.
fn expand(roots: &[i64], lead: i64) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(lead)];
    for &r in roots {
        let mut next = vec![BigInt::zero(); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= BigInt::from(r) * c;
        }
        p = next;
    }
    p
}

#[test]
fn mixed_real_and_complex_factors() {
    let ctx = NumCtx::new(128);
    // (x² + 1)(x² − 2)(x − 3): roots ±i, ±√2, 3.
    // Expanded: x⁵ − 3x⁴ − x³ + 3x² − 2x + 6.
    let coeffs: Vec<BigInt> = [6, -2, 3, -1, -3, 1].iter().map(|&c| BigInt::from(c)).collect();
    let roots = int_roots(&coeffs, &ctx).unwrap();
    assert_eq!(roots.len(), 5);
    let s2 = 2f64.sqrt();
    let expect = [(-s2, 0.0), (0.0, -1.0), (0.0, 1.0), (s2, 0.0), (3.0, 0.0)];
    for (r, (ere, eim)) in roots.iter().zip(expect) {
        let (re, im) = r.to_f64s();
        assert!(
            (re - ere).abs() < 1e-14 && (im - eim).abs() < 1e-14,
            "got {re}+{im}i, want {ere}+{eim}i"
        );
    }
}

#[test]
fn huge_coefficient_spread() {
    let ctx = NumCtx::new(160);
    // (2^100·x − 1)(x − 2^100): roots 2^−100 and 2^100, forcing the
    // Newton-polygon seeding to produce wildly different radii.
    let big: BigInt = BigInt::from(1u8) << 100;
    let coeffs = vec![big.clone(), -(&big * &big + BigInt::from(1)), big.clone()];
    let roots = int_roots(&coeffs, &ctx).unwrap();
    assert_eq!(roots.len(), 2);
    let small = to_f64(&roots[0].abs(&ctx));
    let large = to_f64(&roots[1].abs(&ctx));
    let expect = 2f64.powi(100);
    assert!((small * expect - 1.0).abs() < 1e-30, "small root: {small:e}");
    assert!((large / expect - 1.0).abs() < 1e-30, "large root: {large:e}");
}

#[test]
fn residuals_are_tiny() {
    let ctx = NumCtx::new(192);
    let coeffs = expand(&[-7, -2, 0, 1, 3, 4, 11], 5);
    let roots = int_roots(&coeffs, &ctx).unwrap();
    for r in &roots {
        let residual = to_f64(&horner_int(&coeffs, r, &ctx).abs(&ctx));
        assert!(residual < 1e-45, "residual {residual:e}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recovers_constructed_integer_roots(
        wanted in proptest::collection::btree_set(-12i64..=12, 2..=8),
        lead in 1i64..=4,
    ) {
        let wanted: Vec<i64> = wanted.iter().copied().collect();
        let ctx = NumCtx::new(128);
        let coeffs = expand(&wanted, lead);
        let roots = int_roots(&coeffs, &ctx).unwrap();
        prop_assert_eq!(roots.len(), wanted.len());
        // Both lists are sorted ascending (the finder sorts by real part).
        for (r, &want) in roots.iter().zip(wanted.iter()) {
            let (re, im) = r.to_f64s();
            prop_assert!(
                (re - want as f64).abs() < 1e-20 && im.abs() < 1e-20,
                "got {}+{}i, want {}", re, im, want
            );
        }
    }
}
