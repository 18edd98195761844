//! Riley polynomials and their comparison with the edge polynomials.
//!
//! For a slope p/q the Riley polynomial Λ(p/q) ∈ ℤ[Z] cuts out the
//! parabolic SL₂(ℂ) representations of the 2-bridge link group in the
//! classical normalisation: the two meridian generators map to
//! [[1, 1], [0, 1]] and [[1, 0], [w, 1]], and Λ is the defining polynomial
//! of the variable Z = −w.  It is recovered here from the Farey-recursive
//! family P ∈ ℤ[i][z] of [`Families::riley_p`] by dividing out a parity
//! unit f(p/q) ∈ {iz, z, iz²} and substituting Z = z².
//!
//! The edge polynomial Q(p/q) describes the same representations in the
//! shape-parameter coordinate x, related to Z by x = −1/Z.  Clearing
//! denominators turns Q into the reversed polynomial Q̄ ∈ ℤ[Z], and the two
//! descriptions agree up to a sign and a power of Z:
//!
//!   Λ(p/q) = ±Z^μ · Q̄(p/q),   μ = ⌊(q−1)/2⌋ − deg Q(p/q).
//!
//! [`riley_shift`] verifies this relation for a given slope and reports μ
//! and the sign.

use crate::engine::Families;
use crate::poly::{GaussPoly, IntPoly};
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::Zero;
use twobridge_farey::Fraction;

/// The z-valuation of the parity unit f(p/q) and whether f carries a
/// factor of i (z-parities of p and q decide among iz, z, iz²).
fn parity_unit(gamma: Fraction) -> (usize, bool) {
    let p_even = gamma.num() % 2 == 0;
    let q_even = gamma.den() % 2 == 0;
    if q_even {
        (2, true) // f = iz²
    } else if p_even {
        (1, true) // f = iz
    } else {
        (1, false) // f = z
    }
}

/// Divides a Gaussian-integer polynomial in z by i^[has_i]·z^shift and
/// rewrites the quotient in Z = z², which must land in ℤ[Z].
fn descend_to_z_squared(p: &GaussPoly, shift: usize, has_i: bool, label: Fraction) -> IntPoly {
    let reduced = p
        .shift_down(shift)
        .unwrap_or_else(|| panic!("P({label}) is not divisible by z^{shift}"));
    let reduced = if has_i {
        // 1/i = −i, and (−i)(a + bi) = b − ai.
        let minus_i = Complex::new(BigInt::from(0), BigInt::from(-1));
        reduced.scale(&minus_i)
    } else {
        reduced
    };
    let deg = match reduced.degree() {
        Some(d) => d,
        None => return IntPoly::zero(),
    };
    let mut out = vec![BigInt::from(0); deg / 2 + 1];
    for k in 0..=deg {
        let c = reduced.coeff(k);
        if k % 2 == 1 {
            assert!(c.is_zero(), "P({label})/f has an odd-degree term {c:?}z^{k}");
        } else {
            assert!(c.im.is_zero(), "P({label})/f has a non-real coefficient {c:?}z^{k}");
            out[k / 2] = c.re;
        }
    }
    IntPoly::from_coeffs(out)
}

/// The Riley polynomial Λ(p/q) ∈ ℤ[Z].
///
/// ```
/// use twobridge_frf::{riley, Families, Fraction};
/// let mut fam = Families::new();
/// assert_eq!(riley(&mut fam, Fraction::new(1, 3)).to_string(), "-x - 1");
/// assert_eq!(riley(&mut fam, Fraction::new(2, 5)).to_string(), "-x^2 - x - 1");
/// ```
///
/// (The display variable is always written `x`; here it stands for Z.)
pub fn riley(fam: &mut Families, gamma: Fraction) -> IntPoly {
    assert!(!gamma.is_infinite(), "the Riley polynomial needs a finite slope");
    let p = fam.riley_p(gamma);
    let (shift, has_i) = parity_unit(gamma);
    descend_to_z_squared(&p, shift, has_i, gamma)
}

/// Q(p/q) rewritten in Z = −1/x with denominators cleared: if
/// Q = Σ cᵢ xⁱ has degree D, then Q̄(Z) = Σ cᵢ (−1)ⁱ Z^{D−i}.
///
/// ```
/// use twobridge_frf::{reversed_q, Families, Fraction};
/// let mut fam = Families::new();
/// assert_eq!(reversed_q(&mut fam, Fraction::new(1, 3)).to_string(), "x + 1");
/// ```
pub fn reversed_q(fam: &mut Families, gamma: Fraction) -> IntPoly {
    assert!(!gamma.is_infinite(), "the reversed edge polynomial needs a finite slope");
    let q = fam.q(gamma);
    let d = q.degree().expect("Q of a finite slope is nonzero");
    let coeffs: Vec<BigInt> = (0..=d)
        .map(|j| {
            let c = q.coeff(d - j);
            if (d - j) % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    IntPoly::from_coeffs(coeffs)
}

/// The outcome of matching Λ against ±Z^μ·Q̄ for one slope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RileyShift {
    /// Power of Z separating the two polynomials; equals
    /// ⌊(q−1)/2⌋ − deg Q(p/q).
    pub mu: usize,
    /// True when Λ = −Z^μ·Q̄.
    pub negated: bool,
}

/// Checks Λ(p/q) = ±Z^μ·Q̄(p/q) and reports μ and the sign, or `None` when
/// the two polynomials do not match this way.
///
/// ```
/// use twobridge_frf::{riley_shift, Families, Fraction};
/// let mut fam = Families::new();
/// let m = riley_shift(&mut fam, Fraction::new(3, 8)).unwrap();
/// assert_eq!(m.mu, 1);
/// ```
pub fn riley_shift(fam: &mut Families, gamma: Fraction) -> Option<RileyShift> {
    let lam = riley(fam, gamma);
    let qb = reversed_q(fam, gamma);
    let mu = lam.degree()?.checked_sub(qb.degree()?)?;
    let shifted = qb.shift_up(mu);
    if shifted == lam {
        Some(RileyShift { mu, negated: false })
    } else if -&shifted == lam {
        Some(RileyShift { mu, negated: true })
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: i64, q: i64) -> Fraction {
        Fraction::new(p, q)
    }

    #[test]
    fn hand_computed_values() {
        let mut fam = Families::new();
        assert_eq!(riley(&mut fam, f(1, 2)), IntPoly::one());
        assert_eq!(riley(&mut fam, f(1, 3)).to_string(), "-x - 1");
        assert_eq!(riley(&mut fam, f(2, 5)).to_string(), "-x^2 - x - 1");
        assert_eq!(riley(&mut fam, Fraction::ZERO), IntPoly::one());
        assert_eq!(riley(&mut fam, Fraction::ONE), IntPoly::one());
    }

    #[test]
    fn shift_for_plain_slopes_is_zero() {
        let mut fam = Families::new();
        for &(p, q) in &[(1, 2), (1, 3), (2, 5), (3, 7), (2, 7), (4, 9), (5, 12)] {
            let m = riley_shift(&mut fam, f(p, q)).expect("shift relation");
            assert_eq!(m.mu, 0, "mu({p}/{q})");
        }
    }
}
