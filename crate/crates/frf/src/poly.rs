//! Dense univariate polynomials over an exact coefficient ring.
//!
//! Coefficients are stored in ascending order of degree with no trailing
//! zeros, so the zero polynomial is the empty list.  The generic type covers
//! both ℤ[x] (via [`IntPoly`]) and ℤ[i][z] (via [`GaussPoly`]); the extra
//! integer-only machinery (content, exact division, greatest common divisor,
//! parsing, printing) lives on [`IntPoly`].

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

/// Coefficient ring requirements: exact equality and ring operations.
pub trait Coeff: Clone + PartialEq + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}
impl<T> Coeff for T where T: Clone + PartialEq + Zero + One + Neg<Output = T> + Sub<Output = T> {}

/// Polynomials with integer coefficients.
pub type IntPoly = Poly<BigInt>;

/// Polynomials with Gaussian integer coefficients.
pub type GaussPoly = Poly<Complex<BigInt>>;

/// A dense univariate polynomial; `c[k]` is the coefficient of the k-th
/// power.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    c: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn from_coeffs(mut c: Vec<C>) -> Poly<C> {
        while c.last().is_some_and(|t| t.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Poly<C> {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Poly<C> {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Poly<C> {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial c·x^k.
    pub fn monomial(c: C, k: usize) -> Poly<C> {
        let mut v = vec![C::zero(); k];
        v.push(c);
        Poly::from_coeffs(v)
    }

    /// The variable x.
    pub fn var() -> Poly<C> {
        Poly::monomial(C::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// The degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Ascending coefficients, without trailing zeros.
    pub fn coeffs(&self) -> &[C] {
        &self.c
    }

    /// The coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.c.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// The leading coefficient, or None for the zero polynomial.
    pub fn leading(&self) -> Option<&C> {
        self.c.last()
    }

    /// Evaluation by Horner's rule.
    pub fn eval(&self, at: &C) -> C {
        let mut acc = C::zero();
        for c in self.c.iter().rev() {
            acc = acc * at.clone() + c.clone();
        }
        acc
    }

    /// Multiplication by x^k.
    pub fn shift_up(&self, k: usize) -> Poly<C> {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![C::zero(); k];
        v.extend(self.c.iter().cloned());
        Poly { c: v }
    }

    /// Division by x^k, provided the k lowest coefficients vanish.
    pub fn shift_down(&self, k: usize) -> Option<Poly<C>> {
        if self.c.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Poly::from_coeffs(self.c.iter().skip(k).cloned().collect()))
    }

    /// Multiplication by a scalar.
    pub fn scale(&self, s: &C) -> Poly<C> {
        Poly::from_coeffs(self.c.iter().map(|c| c.clone() * s.clone()).collect())
    }

    /// Small integer power.
    pub fn pow(&self, n: usize) -> Poly<C> {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The number of vanishing low-order coefficients (the multiplicity of
    /// the root x = 0); None for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|c| !c.is_zero())
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.c.len().max(rhs.c.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) + rhs.coeff(k));
        }
        Poly::from_coeffs(v)
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.c.len().max(rhs.c.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) - rhs.coeff(k));
        }
        Poly::from_coeffs(v)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::from_coeffs(self.c.iter().map(|c| -c.clone()).collect())
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![C::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(v)
    }
}

impl IntPoly {
    /// The formal derivative.
    pub fn derivative(&self) -> IntPoly {
        let v = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigInt::from(k))
            .collect();
        IntPoly::from_coeffs(v)
    }

    /// The content: the (nonnegative) greatest common divisor of the
    /// coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.c {
            g = num_integer::gcd(g, c.abs());
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// The primitive part, normalised to a positive leading coefficient.
    /// The zero polynomial is its own primitive part.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        IntPoly::from_coeffs(self.c.iter().map(|c| c / &g).collect())
    }

    /// Exact division: Some(q) with self = q·d when d divides self over ℤ,
    /// None otherwise.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let (dn, dd) = (self.degree().unwrap(), d.degree().unwrap());
        if dn < dd {
            return None;
        }
        let lead = d.leading().unwrap();
        let mut rem = self.c.clone();
        let mut quo = vec![BigInt::zero(); dn - dd + 1];
        for k in (0..quo.len()).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, dc) in d.c.iter().enumerate() {
                let t = dc * &q;
                rem[k + i] -= t;
            }
            quo[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(quo))
    }

    /// A pseudo-remainder of self by d: each elimination step scales by the
    /// leading coefficient of d, so no fractions appear.
    fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let lead = d.leading().expect("pseudo_rem by zero").clone();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= d.degree() {
            let k = r.degree().unwrap() - d.degree().unwrap();
            let top = r.leading().unwrap().clone();
            r = &r.scale(&lead) - &d.shift_up(k).scale(&top);
        }
        r
    }

    /// A greatest common divisor over ℤ, primitive with positive leading
    /// coefficient, computed by a primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part()
    }

    /// The squarefree part: self divided by gcd(self, self′), primitive with
    /// positive leading coefficient.  Shares the roots of self, each with
    /// multiplicity one.
    pub fn squarefree_part(&self) -> IntPoly {
        assert!(!self.is_zero(), "the zero polynomial has no squarefree part");
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .div_exact(&g)
            .expect("gcd with derivative divides the primitive part")
    }

    /// Yun's squarefree factorisation: the pairs (fᵢ, i) with each fᵢ
    /// squarefree, pairwise coprime, primitive with positive leading
    /// coefficient, and Π fᵢ^i equal to the primitive part of self.
    /// Constant fᵢ are omitted, so a squarefree input returns one pair.
    pub fn squarefree_factorization(&self) -> Vec<(IntPoly, u32)> {
        assert!(!self.is_zero(), "the zero polynomial has no factorisation");
        let p = self.primitive_part();
        if p.degree().unwrap() == 0 {
            return Vec::new();
        }
        let g = p.gcd(&p.derivative());
        let mut out = Vec::new();
        if g.degree() == Some(0) {
            out.push((p, 1));
            return out;
        }
        let mut b = p.div_exact(&g).unwrap();
        let c = p.derivative().div_exact(&g).unwrap();
        let mut d = &c - &b.derivative();
        let mut i = 1u32;
        while b.degree().map_or(false, |k| k > 0) {
            let a = b.gcd(&d);
            let c = d.div_exact(&a).unwrap();
            b = b.div_exact(&a).unwrap();
            d = &c - &b.derivative();
            if a.degree().map_or(false, |k| k > 0) {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }
}

impl fmt::Display for IntPoly {
    /// Conventional descending form, e.g. `x^3 + 2x^2 - 3x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 || !mag.is_one() {
                write!(f, "{}", mag)?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{}", k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Debug for GaussPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Ascending coefficient list; no pretty-printer for ℤ[i][z].
        f.debug_list().entries(self.c.iter()).finish()
    }
}

/// Error from parsing a polynomial expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePolyError {
    pub message: String,
    pub position: usize,
}

impl fmt::Display for ParsePolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at byte {}", self.message, self.position)
    }
}

impl std::error::Error for ParsePolyError {}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.s.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err<T>(&self, message: &str) -> Result<T, ParsePolyError> {
        Err(ParsePolyError { message: message.to_string(), position: self.pos })
    }

    fn expr(&mut self) -> Result<IntPoly, ParsePolyError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let t = self.term()?;
                -&t
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<IntPoly, ParsePolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                // Adjacency means multiplication: "3x", "(a)(b)", "2(x-1)".
                Some(c) if c == b'(' || c == b'x' || c.is_ascii_digit() => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<IntPoly, ParsePolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp = self.integer()?;
            let exp: usize = exp
                .try_into()
                .map_err(|_| ParsePolyError { message: "exponent out of range".into(), position: self.pos })?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<IntPoly, ParsePolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected )");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(IntPoly::var())
            }
            Some(c) if c.is_ascii_digit() => Ok(IntPoly::constant(self.integer()?.into())),
            _ => self.err("expected a number, x, or ("),
        }
    }

    fn integer(&mut self) -> Result<i64, ParsePolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected digits");
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| ParsePolyError { message: "integer out of range".into(), position: start })
    }
}

impl FromStr for IntPoly {
    type Err = ParsePolyError;

    /// Parses elementary polynomial expressions in x with integer
    /// coefficients: sums, products (explicit `*` or adjacency), powers with
    /// `^`, and parentheses.
    ///
    /// ```
    /// use twobridge_frf::IntPoly;
    /// let p: IntPoly = "-(2x^2 - 4x + 1)(2x - 1)".parse().unwrap();
    /// assert_eq!(p.to_string(), "-4x^3 + 10x^2 - 6x + 1");
    /// ```
    fn from_str(s: &str) -> Result<IntPoly, ParsePolyError> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let poly = p.expr()?;
        if p.peek().is_some() {
            return p.err("trailing input");
        }
        Ok(poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_round_trip() {
        let a = p("x^2 - 3x + 1");
        let b = p("2x - 1");
        assert_eq!((&a * &b).to_string(), "2x^3 - 7x^2 + 5x - 1");
        assert_eq!((&(&a * &b)).div_exact(&b), Some(a.clone()));
        assert_eq!((&a + &b).to_string(), "x^2 - x");
        assert_eq!((&a - &a), IntPoly::zero());
        assert_eq!(a.pow(2), &a * &a);
    }

    #[test]
    fn parser_handles_table_shapes() {
        assert_eq!(p("(3x - 1)(x - 1)").to_string(), "3x^2 - 4x + 1");
        assert_eq!(p("(2x - 1)^2").to_string(), "4x^2 - 4x + 1");
        assert_eq!(p("-x + 1").to_string(), "-x + 1");
        assert_eq!(p("0"), IntPoly::zero());
        assert_eq!(p("x"), IntPoly::var());
        assert_eq!(
            p("-(x^4 - 24x^3 + 26x^2 - 9x + 1)(x^2 - 3x + 1)(x - 1)").degree(),
            Some(7)
        );
        assert!("x +".parse::<IntPoly>().is_err());
        assert!("(x".parse::<IntPoly>().is_err());
        assert!("y".parse::<IntPoly>().is_err());
    }

    #[test]
    fn division_rejects_non_divisors() {
        let a = p("x^2 + 1");
        assert_eq!(a.div_exact(&p("x + 1")), None);
        assert_eq!(a.div_exact(&p("2x + 1")), None);
        assert_eq!(p("2x^2 + 2").div_exact(&p("2")), Some(a));
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p("(x - 1)^2 (2x - 1)");
        let b = p("(x - 1)(3x - 1)");
        assert_eq!(a.gcd(&b).to_string(), "x - 1");
        assert_eq!(a.squarefree_part().to_string(), "2x^2 - 3x + 1");
        assert_eq!(p("6x + 6").gcd(&p("4x + 4")).to_string(), "x + 1");
        assert_eq!(p("5").gcd(&p("0")).to_string(), "1");
    }

    #[test]
    fn derivative_and_eval() {
        let a = p("x^3 + 2x^2 - 3x + 1");
        assert_eq!(a.derivative().to_string(), "3x^2 + 4x - 3");
        assert_eq!(a.eval(&BigInt::from(2)), BigInt::from(11));
        assert_eq!(a.valuation(), Some(0));
        assert_eq!(p("x^2 + 3x").valuation(), Some(1));
    }
}
