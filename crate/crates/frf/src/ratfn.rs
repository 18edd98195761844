//! Rational functions over ℚ(x), represented as reduced integer-polynomial
//! fractions.
//!
//! Shape parameters of Farey edges, gluing-equation products, and holonomy
//! matrix entries all live in ℚ(x).  A [`RatFn`] stores such a function as
//! num/den with num, den ∈ ℤ[x], kept in the normal form
//!
//! * den ≠ 0 and the leading coefficient of den is positive,
//! * gcd(num, den) = 1 in ℤ[x] (both the polynomial gcd and the integer
//!   content gcd are trivial),
//! * the zero function is 0/1.
//!
//! The normal form makes equality structural, so identities such as
//! "this product of edge parameters equals −1" become exact comparisons.

use crate::poly::IntPoly;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A reduced fraction of integer polynomials, modelling an element of ℚ(x).
#[derive(Clone, PartialEq, Eq)]
pub struct RatFn {
    num: IntPoly,
    den: IntPoly,
}

/// Divides out the integer content common to both polynomials.
fn strip_common_content(num: &mut IntPoly, den: &mut IntPoly) {
    let g = num_integer::gcd(num.content(), den.content());
    if g > BigInt::one() {
        *num = IntPoly::from_coeffs(num.coeffs().iter().map(|c| c / &g).collect());
        *den = IntPoly::from_coeffs(den.coeffs().iter().map(|c| c / &g).collect());
    }
}

impl RatFn {
    /// Builds num/den and reduces it to normal form.  Panics if den = 0.
    pub fn new(num: IntPoly, den: IntPoly) -> RatFn {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFn { num, den: IntPoly::one() };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides the numerator");
        let mut den = den.div_exact(&g).expect("gcd divides the denominator");
        strip_common_content(&mut num, &mut den);
        if den.leading().unwrap().is_negative() {
            num = -&num;
            den = -&den;
        }
        RatFn { num, den }
    }

    /// The polynomial p viewed as p/1.
    pub fn from_poly(p: IntPoly) -> RatFn {
        RatFn { num: p, den: IntPoly::one() }
    }

    /// The constant function c.
    pub fn constant(c: i64) -> RatFn {
        RatFn::from_poly(IntPoly::constant(BigInt::from(c)))
    }

    /// The identity function x.
    pub fn var() -> RatFn {
        RatFn::from_poly(IntPoly::var())
    }

    /// x^k for k ∈ ℤ, allowing negative exponents.
    pub fn x_power(k: i64) -> RatFn {
        let mono = IntPoly::monomial(BigInt::one(), k.unsigned_abs() as usize);
        if k >= 0 {
            RatFn::from_poly(mono)
        } else {
            RatFn { num: IntPoly::one(), den: mono }
        }
    }

    pub fn zero() -> RatFn {
        RatFn { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> RatFn {
        RatFn { num: IntPoly::one(), den: IntPoly::one() }
    }

    /// The reduced numerator.
    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    /// The reduced denominator (positive leading coefficient).
    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_neg_one(&self) -> bool {
        !self.num.is_zero() && self.num == -&self.den
    }

    /// Some(c) when the function is the constant c.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.den == IntPoly::one() && self.num.degree().map_or(true, |d| d == 0) {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// The reciprocal.  Panics on the zero function.
    pub fn recip(&self) -> RatFn {
        assert!(!self.is_zero(), "reciprocal of the zero function");
        let mut num = self.den.clone();
        let mut den = self.num.clone();
        if den.leading().unwrap().is_negative() {
            num = -&num;
            den = -&den;
        }
        RatFn { num, den }
    }

    /// self², in one reduction-free step (squaring preserves normal form).
    pub fn square(&self) -> RatFn {
        RatFn { num: &self.num * &self.num, den: &self.den * &self.den }
    }

    /// self^k for k ∈ ℤ.  Panics on 0^k with k < 0.
    pub fn powi(&self, k: i64) -> RatFn {
        let base = if k < 0 { self.recip() } else { self.clone() };
        let mut out = RatFn::one();
        let mut sq = base;
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.square();
            }
        }
        out
    }

    /// 1 − self, the argument of the Möbius map ζ(x) = 1/(1−x).
    pub fn one_minus(&self) -> RatFn {
        RatFn::new(&self.den - &self.num, self.den.clone())
    }
}

impl Mul for &RatFn {
    type Output = RatFn;
    /// Cross-reduced product: cancels gcd(a, d) and gcd(c, b) before
    /// multiplying, so telescoping products stay small.
    fn mul(self, rhs: &RatFn) -> RatFn {
        if self.is_zero() || rhs.is_zero() {
            return RatFn::zero();
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.div_exact(&g1).unwrap();
        let d = rhs.den.div_exact(&g1).unwrap();
        let c = rhs.num.div_exact(&g2).unwrap();
        let b = self.den.div_exact(&g2).unwrap();
        let mut num = &a * &c;
        let mut den = &b * &d;
        strip_common_content(&mut num, &mut den);
        if den.leading().unwrap().is_negative() {
            num = -&num;
            den = -&den;
        }
        RatFn { num, den }
    }
}

impl Div for &RatFn {
    type Output = RatFn;
    fn div(self, rhs: &RatFn) -> RatFn {
        self * &rhs.recip()
    }
}

impl Add for &RatFn {
    type Output = RatFn;
    fn add(self, rhs: &RatFn) -> RatFn {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFn::new(num, &self.den * &rhs.den)
    }
}

impl Sub for &RatFn {
    type Output = RatFn;
    fn sub(self, rhs: &RatFn) -> RatFn {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RatFn::new(num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
