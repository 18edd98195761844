//! The Riley polynomials against the reversed edge polynomials: the two
//! agree up to a sign and a power of Z that only appears when 8 | q.

use twobridge_frf::{expected_degree, reversed_q, riley, riley_shift, Families, Fraction};

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[test]
fn hand_computed_anchors() {
    let mut fam = Families::new();
    assert_eq!(riley(&mut fam, Fraction::new(1, 2)).to_string(), "1");
    assert_eq!(riley(&mut fam, Fraction::new(1, 3)).to_string(), "-x - 1");
    assert_eq!(riley(&mut fam, Fraction::new(1, 4)).to_string(), "-x - 2");
    assert_eq!(riley(&mut fam, Fraction::new(2, 5)).to_string(), "-x^2 - x - 1");
    assert_eq!(reversed_q(&mut fam, Fraction::new(2, 5)).to_string(), "x^2 + x + 1");
}

#[test]
fn riley_degree_is_half_the_denominator() {
    let mut fam = Families::new();
    for q in 2..=60 {
        for p in 1..q {
            if gcd(p, q) == 1 {
                let slope = Fraction::new(p, q);
                assert_eq!(
                    riley(&mut fam, slope).degree(),
                    Some(expected_degree(slope)),
                    "deg of the Riley polynomial of {slope}"
                );
            }
        }
    }
}

#[test]
fn shift_exponent_fixtures() {
    let mut fam = Families::new();
    for &(p, q, mu) in &[
        (3, 8, 1),
        (7, 16, 1),
        (5, 24, 1),
        (11, 24, 1),
        (23, 64, 2),
        (25, 64, 2),
        (47, 128, 3),
        (49, 128, 3),
    ] {
        let slope = Fraction::new(p, q);
        let m = riley_shift(&mut fam, slope).expect("shift relation holds");
        assert_eq!(m.mu, mu, "mu({slope})");
    }
}

#[test]
fn shift_relation_holds_up_to_denominator_80() {
    let mut fam = Families::new();
    for q in 2..=80 {
        for p in 1..q {
            if gcd(p, q) != 1 {
                continue;
            }
            let slope = Fraction::new(p, q);
            let m = riley_shift(&mut fam, slope)
                .unwrap_or_else(|| panic!("no shift relation at {slope}"));
            let deg_q = fam.q(slope).degree().expect("Q nonzero");
            assert_eq!(m.mu, expected_degree(slope) - deg_q, "mu({slope}) vs degree gap");
            if q % 8 != 0 {
                assert_eq!(m.mu, 0, "mu({slope}) must vanish when 8 does not divide {q}");
            }
        }
    }
}
