//! The Farey-recursive polynomial families attached to slopes.
//!
//! A Farey-recursive function F with determinant d and trace T satisfies,
//! for every Farey pair {α, γ},
//!
//!   F(γ ⊕² α) = −d(α)·F(γ) + T(α)·F(α ⊕ γ),
//!
//! which pins F on all of ℚ ∩ [0, 1] ∪ {∞} once its values at 0, ∞, 1 are
//! chosen.  Three families are computed here, each with the trace equal to
//! the Q family itself (or to the family itself for the Riley case):
//!
//! * `q`: determinant d_Q(p/q) = (−1)^p x^q, initial values (1, 0, 1).
//!   Its roots carry the hyperbolic geometry of the 2-bridge link of the
//!   slope: the geometric root is the cusp shape parameter.
//! * `n`: same determinant and trace, initial values (1, 1, 1).  The ratio
//!   N/Q is the ideal-vertex position function on the Stern–Brocot diagram.
//! * `riley_p`: constant determinant 1 over ℤ[i][z], initial values
//!   (iz, 0, z), from which the classical Riley polynomial is extracted.
//!
//! Values are memoised per family, so sweeping a range of slopes shares all
//! intermediate work.

use crate::poly::{Coeff, GaussPoly, IntPoly, Poly};
use num_bigint::BigInt;
use num_complex::Complex;
use std::collections::HashMap;
use std::rc::Rc;
use twobridge_farey::{center_corner_index, Fraction};

/// The determinant d_Q(p/q) = (−1)^p x^q of the Q recursion.
///
/// ```
/// use twobridge_frf::{q_determinant, Fraction};
/// assert_eq!(q_determinant(Fraction::ZERO).to_string(), "x");
/// assert_eq!(q_determinant(Fraction::INFINITY).to_string(), "-1");
/// assert_eq!(q_determinant(Fraction::new(1, 2)).to_string(), "-x^2");
/// ```
pub fn q_determinant(gamma: Fraction) -> IntPoly {
    let sign = if gamma.num() % 2 == 0 { 1 } else { -1 };
    IntPoly::monomial(BigInt::from(sign), gamma.den() as usize)
}

/// ⌊(q−1)/2⌋, an upper bound for deg Q(p/q) that is attained unless the
/// Riley polynomial picks up a power of Z.
pub fn expected_degree(gamma: Fraction) -> usize {
    ((gamma.den() - 1) / 2) as usize
}

/// Runs the fan recursion g_{i+2} = T·g_{i+1} − d·g_i from (g₀, g₁) and
/// returns g_j.
fn fan<C: Coeff>(trace: &Poly<C>, det: &Poly<C>, g0: Poly<C>, g1: Poly<C>, j: i64) -> Poly<C> {
    assert!(j >= 1, "fan index must be positive");
    let (mut g0, mut g1) = (g0, g1);
    for _ in 1..j {
        let g2 = &(trace * &g1) - &(det * &g0);
        g0 = g1;
        g1 = g2;
    }
    g1
}

/// Memoised values of the polynomial families, shared across queries.
pub struct Families {
    q: HashMap<Fraction, Rc<IntPoly>>,
    n: HashMap<Fraction, Rc<IntPoly>>,
    p: HashMap<Fraction, Rc<GaussPoly>>,
}

impl Families {
    pub fn new() -> Families {
        Families { q: HashMap::new(), n: HashMap::new(), p: HashMap::new() }
    }

    /// The edge polynomial Q(γ) ∈ ℤ[x].
    ///
    /// ```
    /// use twobridge_frf::{Families, Fraction};
    /// let mut fam = Families::new();
    /// assert_eq!(fam.q(Fraction::new(2, 5)).to_string(), "x^2 - x + 1");
    /// assert_eq!(fam.q(Fraction::new(2, 7)).to_string(), "x^3 + 2x^2 - 3x + 1");
    /// ```
    pub fn q(&mut self, gamma: Fraction) -> Rc<IntPoly> {
        q_rec(&mut self.q, gamma)
    }

    /// The vertex-position numerator N(γ) ∈ ℤ[x]; the vertex function itself
    /// is V(γ) = N(γ)/Q(γ).
    ///
    /// ```
    /// use twobridge_frf::{Families, Fraction};
    /// let mut fam = Families::new();
    /// assert_eq!(fam.n(Fraction::new(1, 2)).to_string(), "-x + 1");
    /// assert_eq!(fam.n(Fraction::new(2, 7)).to_string(), "4x^2 - 4x + 1");
    /// ```
    pub fn n(&mut self, gamma: Fraction) -> Rc<IntPoly> {
        if let Some(v) = self.n.get(&gamma) {
            return v.clone();
        }
        let val = if gamma == Fraction::ZERO || gamma == Fraction::ONE || gamma.is_infinite() {
            IntPoly::one()
        } else {
            let (c, k, j) = center_corner_index(gamma);
            let t = q_rec(&mut self.q, c);
            let g0 = self.n(k);
            let g1 = self.n(k.mediant(c));
            fan(&t, &q_determinant(c), (*g0).clone(), (*g1).clone(), j)
        };
        let rc = Rc::new(val);
        self.n.insert(gamma, rc.clone());
        rc
    }

    /// The discriminant D_Q(γ) = Q(γ)² − 4·d_Q(γ) of the crossing loop at γ.
    ///
    /// ```
    /// use twobridge_frf::{Families, Fraction};
    /// let mut fam = Families::new();
    /// assert_eq!(fam.q_disc(Fraction::ZERO).to_string(), "-4x + 1");
    /// ```
    pub fn q_disc(&mut self, gamma: Fraction) -> IntPoly {
        let q = self.q(gamma);
        &(&*q * &*q) - &q_determinant(gamma).scale(&BigInt::from(4))
    }

    /// The Farey-recursive extension P(γ) ∈ ℤ[i][z] of the Riley polynomial
    /// data: constant determinant 1, trace P, initial values (iz, 0, z)
    /// at (0, ∞, 1).
    pub fn riley_p(&mut self, gamma: Fraction) -> Rc<GaussPoly> {
        p_rec(&mut self.p, gamma)
    }
}

impl Default for Families {
    fn default() -> Families {
        Families::new()
    }
}

fn q_rec(memo: &mut HashMap<Fraction, Rc<IntPoly>>, gamma: Fraction) -> Rc<IntPoly> {
    if let Some(v) = memo.get(&gamma) {
        return v.clone();
    }
    let val = if gamma == Fraction::ZERO || gamma == Fraction::ONE {
        IntPoly::one()
    } else if gamma.is_infinite() {
        IntPoly::zero()
    } else {
        let (c, k, j) = center_corner_index(gamma);
        let t = q_rec(memo, c);
        let g0 = q_rec(memo, k);
        let g1 = q_rec(memo, k.mediant(c));
        fan(&t, &q_determinant(c), (*g0).clone(), (*g1).clone(), j)
    };
    let rc = Rc::new(val);
    memo.insert(gamma, rc.clone());
    rc
}

fn p_rec(memo: &mut HashMap<Fraction, Rc<GaussPoly>>, gamma: Fraction) -> Rc<GaussPoly> {
    if let Some(v) = memo.get(&gamma) {
        return v.clone();
    }
    let i = Complex::new(BigInt::from(0), BigInt::from(1));
    let val = if gamma == Fraction::ZERO {
        GaussPoly::monomial(i, 1)
    } else if gamma.is_infinite() {
        GaussPoly::zero()
    } else if gamma == Fraction::ONE {
        GaussPoly::var()
    } else {
        let (c, k, j) = center_corner_index(gamma);
        let t = p_rec(memo, c);
        let g0 = p_rec(memo, k);
        let g1 = p_rec(memo, k.mediant(c));
        fan(&t, &GaussPoly::one(), (*g0).clone(), (*g1).clone(), j)
    };
    let rc = Rc::new(val);
    memo.insert(gamma, rc.clone());
    rc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: i64, q: i64) -> Fraction {
        Fraction::new(p, q)
    }

    #[test]
    fn base_values() {
        let mut fam = Families::new();
        assert_eq!(*fam.q(Fraction::ZERO), IntPoly::one());
        assert_eq!(*fam.q(Fraction::INFINITY), IntPoly::zero());
        assert_eq!(*fam.q(Fraction::ONE), IntPoly::one());
        assert_eq!(*fam.q(f(1, 2)), IntPoly::one());
        assert_eq!(fam.q(f(1, 3)).to_string(), "-x + 1");
        assert_eq!(fam.q(f(1, 4)).to_string(), "-2x + 1");
        assert_eq!(fam.n(f(1, 3)).to_string(), "-2x + 1");
    }

    #[test]
    fn discriminants() {
        let mut fam = Families::new();
        assert_eq!(fam.q_disc(f(1, 2)).to_string(), "4x^2 + 1");
        assert_eq!(fam.q_disc(f(1, 3)), "4x^3 + x^2 - 2x + 1".parse().unwrap());
    }

    #[test]
    fn riley_p_small_values() {
        let mut fam = Families::new();
        // P(1/2) = iz², P(1/3) = −z³ − z.
        let p_half = fam.riley_p(f(1, 2));
        assert_eq!(p_half.degree(), Some(2));
        assert_eq!(p_half.coeff(2), Complex::new(BigInt::from(0), BigInt::from(1)));
        let p_third = fam.riley_p(f(1, 3));
        assert_eq!(p_third.coeff(3), Complex::new(BigInt::from(-1), BigInt::from(0)));
        assert_eq!(p_third.coeff(1), Complex::new(BigInt::from(-1), BigInt::from(0)));
        assert_eq!(p_third.coeff(0), Complex::new(BigInt::from(0), BigInt::from(0)));
    }
}
