//! Continued fractions and the Stern–Brocot structure of a slope.
//!
//! Every γ = p/q in (0, 1) has a unique expansion [0; a₁, …, a_k] with all
//! aᵢ ≥ 1 and a_k ≥ 2, produced by the Euclidean algorithm.  Dropping the
//! last term gives the *center* α of γ's Stern–Brocot triangle, and γ sits at
//! the end of a fan of a_k triangles around α:
//!
//!   γ = κ ⊕ʲ α,   j = a_k,
//!
//! where the *corner* κ is the previous convergent.  This decomposition is
//! the induction step for every Farey-recursive function, so it is computed
//! here once and shared.

use crate::fraction::Fraction;

/// Canonical continued fraction [a₀; a₁, …, a_k] of a finite slope, with all
/// partial quotients ≥ 1 past a₀ and, whenever q ≥ 2, a final term ≥ 2.
///
/// ```
/// use twobridge_farey::{continued_fraction, Fraction};
/// assert_eq!(continued_fraction(Fraction::new(2, 7)), vec![0, 3, 2]);
/// assert_eq!(continued_fraction(Fraction::new(24, 103)), vec![0, 4, 3, 2, 3]);
/// assert_eq!(continued_fraction(Fraction::ZERO), vec![0]);
/// ```
pub fn continued_fraction(gamma: Fraction) -> Vec<i64> {
    assert!(!gamma.is_infinite(), "\u{221e} has no continued fraction expansion");
    let (mut a, mut b) = (gamma.num(), gamma.den());
    let mut terms = Vec::new();
    while b != 0 {
        terms.push(a.div_euclid(b));
        (a, b) = (b, a.rem_euclid(b));
    }
    terms
}

/// Evaluates a continued fraction [a₀; a₁, …, a_k] by the convergent
/// recurrence.  Terms need not be canonical (a trailing 1 is allowed).
pub fn from_continued_fraction(terms: &[i64]) -> Fraction {
    assert!(!terms.is_empty(), "empty continued fraction");
    let (mut p0, mut q0) = (0i64, 1i64);
    let (mut p1, mut q1) = (1i64, 0i64);
    for &a in terms {
        (p0, p1) = (p1, a * p1 + p0);
        (q0, q1) = (q1, a * q1 + q0);
    }
    Fraction::new(p1, q1)
}

/// The center α, corner κ, and index j of γ ∈ ℚ ∩ (0, 1), so that
/// γ = κ ⊕ʲ α with j ≥ 2.
///
/// For γ = [0; a₁, …, a_k] the center is the convergent [0; a₁, …, a_{k−1}],
/// the corner is the one before that, and j = a_k.  The corner of a slope
/// 1/m is ∞ = 1/0.
///
/// ```
/// use twobridge_farey::{center_corner_index, Fraction};
/// let (center, corner, j) = center_corner_index(Fraction::new(2, 7));
/// assert_eq!((center, corner, j), (Fraction::new(1, 3), Fraction::ZERO, 2));
/// let (center, corner, j) = center_corner_index(Fraction::new(1, 6));
/// assert_eq!((center, corner, j), (Fraction::ZERO, Fraction::INFINITY, 6));
/// ```
pub fn center_corner_index(gamma: Fraction) -> (Fraction, Fraction, i64) {
    assert!(
        gamma > Fraction::ZERO && gamma < Fraction::ONE,
        "center/corner decomposition needs 0 < \u{3b3} < 1, got {}",
        gamma
    );
    let cf = continued_fraction(gamma);
    let k = cf.len() - 1;
    let center = from_continued_fraction(&cf[..k]);
    let mut with_one = cf[..k].to_vec();
    with_one.push(1);
    let corner = from_continued_fraction(&with_one).vector_sub(center);
    let j = cf[k];
    debug_assert_eq!(corner.mediant_pow(center, j), gamma);
    (center, corner, j)
}

/// The corners (left, right) of the Stern–Brocot triangle Δ(γ): the two
/// Farey parents whose mediant is γ, in numeric order.
///
/// Δ(0) and Δ(1) are the boundary cases: Δ(0) has corners (1, ∞) and Δ(1)
/// has corners (0, ∞).
///
/// ```
/// use twobridge_farey::{corners, Fraction};
/// let (l, r) = corners(Fraction::new(2, 7));
/// assert_eq!((l, r), (Fraction::new(1, 4), Fraction::new(1, 3)));
/// ```
pub fn corners(gamma: Fraction) -> (Fraction, Fraction) {
    assert!(!gamma.is_infinite(), "\u{221e} has no Stern\u{2013}Brocot triangle here");
    if gamma == Fraction::ZERO {
        return (Fraction::ONE, Fraction::INFINITY);
    }
    if gamma == Fraction::ONE {
        return (Fraction::ZERO, Fraction::INFINITY);
    }
    let (center, corner, j) = center_corner_index(gamma);
    let other = corner.mediant_pow(center, j - 1);
    if center < other {
        (center, other)
    } else {
        (other, center)
    }
}

/// The reverse of γ = p/q: the slope s/q whose continued fraction lists the
/// partial quotients of γ in the opposite order.  Equivalently s is the
/// denominator of the next-to-last convergent, and p·s ≡ ±1 (mod q).  The
/// 2-bridge links of a slope and its reverse are homeomorphic.
///
/// Defined for 0 < γ ≤ 1/2, where reversal is an involution: there the
/// partial quotients start and end with a term ≥ 2, so the reversed word is
/// again canonical.
///
/// ```
/// use twobridge_farey::{reverse, Fraction};
/// assert_eq!(reverse(Fraction::new(2, 7)), Fraction::new(3, 7));
/// // Palindromic slopes are their own reverse.
/// assert_eq!(reverse(Fraction::new(42967, 90783)), Fraction::new(42967, 90783));
/// ```
pub fn reverse(gamma: Fraction) -> Fraction {
    assert!(
        gamma > Fraction::ZERO && 2 * gamma.num() <= gamma.den(),
        "reverse needs 0 < \u{3b3} \u{2264} 1/2, got {}",
        gamma
    );
    let cf = continued_fraction(gamma);
    let mut rev = vec![0];
    rev.extend(cf[1..].iter().rev());
    from_continued_fraction(&rev)
}

/// True when γ equals its own reverse.
pub fn is_palindrome(gamma: Fraction) -> bool {
    reverse(gamma) == gamma
}
