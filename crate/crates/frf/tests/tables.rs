//! The recursion reproduces every frozen reference row exactly.

use twobridge_frf::tables::SMALL_SLOPE_TABLE;
use twobridge_frf::{Families, Fraction, IntPoly};

#[test]
fn q_and_n_match_reference_rows() {
    let mut fam = Families::new();
    assert_eq!(SMALL_SLOPE_TABLE.len(), 37);
    for &((p, q), q_str, n_str) in SMALL_SLOPE_TABLE {
        let slope = Fraction::new(p, q);
        let want_q: IntPoly = q_str.parse().expect("reference Q parses");
        let want_n: IntPoly = n_str.parse().expect("reference N parses");
        assert_eq!(*fam.q(slope), want_q, "Q({slope})");
        assert_eq!(*fam.n(slope), want_n, "N({slope})");
    }
}

/// The recursion is also defined at slopes the table omits (those > 1/2 and
/// 7/15); the mirror p/q ↦ (q−p)/q sends Q(x) to ±Q(−x), checked here for
/// the pair 2/5 ↦ 3/5.
#[test]
fn q_is_defined_beyond_the_table_slopes() {
    let mut fam = Families::new();
    for &(p, q) in &[(3, 5), (4, 5), (5, 7), (7, 15), (8, 15), (11, 15)] {
        let slope = Fraction::new(p, q);
        let poly = fam.q(slope);
        assert!(poly.degree().is_some(), "Q({slope}) is nonzero");
        assert_eq!(poly.coeff(0), 1.into(), "constant term of Q({slope})");
    }
    assert_eq!(fam.q(Fraction::new(3, 5)).to_string(), "x^2 + x + 1");
}
