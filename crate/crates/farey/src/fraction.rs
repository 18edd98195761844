//! Fractions as primitive integer vectors.
//!
//! A slope is a pair (p, q) of coprime non-negative integers with q ≥ 0 and
//! (p, q) ≠ (0, 0); the pair (1, 0) is the point ∞.  Working with the vector
//! form rather than a quotient keeps the mediant exact: p/q ⊕ r/s is simply
//! (p + r)/(q + s), and {p/q, r/s} is a Farey pair exactly when the
//! determinant ps − rq is ±1.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A fraction p/q in lowest terms with p, q ≥ 0, including ∞ = 1/0.
///
/// ```
/// use twobridge_farey::Fraction;
/// let a = Fraction::new(2, 7);
/// let b = Fraction::new(4, 14);
/// assert_eq!(a, b);
/// assert_eq!(a.to_string(), "2/7");
/// ```
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    p: i64,
    q: i64,
}

/// Greatest common divisor of two non-negative integers.
fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Fraction {
    /// The slope 0 = 0/1.
    pub const ZERO: Fraction = Fraction { p: 0, q: 1 };
    /// The slope 1 = 1/1.
    pub const ONE: Fraction = Fraction { p: 1, q: 1 };
    /// The slope ∞ = 1/0.
    pub const INFINITY: Fraction = Fraction { p: 1, q: 0 };

    /// Builds p/q reduced to lowest terms.
    ///
    /// Panics if (p, q) = (0, 0) or if the value would be negative; slopes of
    /// 2-bridge links live in [0, ∞].
    pub fn new(p: i64, q: i64) -> Fraction {
        let (p, q) = if q < 0 { (-p, -q) } else { (p, q) };
        assert!(p >= 0, "fraction {}/{} is negative; slopes lie in [0, \u{221e}]", p, q);
        assert!(p != 0 || q != 0, "0/0 is not a slope");
        if q == 0 {
            return Fraction { p: 1, q: 0 };
        }
        let g = gcd(p, q);
        Fraction { p: p / g, q: q / g }
    }

    /// Numerator of the reduced fraction.
    pub fn num(&self) -> i64 {
        self.p
    }

    /// Denominator of the reduced fraction (0 exactly for ∞).
    pub fn den(&self) -> i64 {
        self.q
    }

    /// True for ∞ = 1/0.
    pub fn is_infinite(&self) -> bool {
        self.q == 0
    }

    /// The Farey sum (mediant): p/q ⊕ r/s = (p + r)/(q + s).
    ///
    /// ```
    /// use twobridge_farey::Fraction;
    /// let m = Fraction::new(1, 3).mediant(Fraction::new(1, 4));
    /// assert_eq!(m, Fraction::new(2, 7));
    /// ```
    pub fn mediant(&self, other: Fraction) -> Fraction {
        Fraction::new(
            self.p.checked_add(other.p).expect("mediant numerator overflow"),
            self.q.checked_add(other.q).expect("mediant denominator overflow"),
        )
    }

    /// The j-fold Farey sum self ⊕ʲ other = self + j·other as vectors.
    pub fn mediant_pow(&self, other: Fraction, j: i64) -> Fraction {
        assert!(j >= 0, "mediant power must be non-negative, got {}", j);
        Fraction::new(self.p + j * other.p, self.q + j * other.q)
    }

    /// Vector difference self − other, which must land back in [0, ∞].
    ///
    /// For a Farey pair this recovers the other Stern–Brocot parent:
    /// the parents of γ are κ and γ − κ.
    pub fn vector_sub(&self, other: Fraction) -> Fraction {
        Fraction::new(self.p - other.p, self.q - other.q)
    }

    /// The determinant ps − rq of the vectors (p, q), (r, s).
    pub fn det(&self, other: Fraction) -> i64 {
        self.p * other.q - other.p * self.q
    }

    /// True when {self, other} is a Farey pair, i.e. |det| = 1.
    ///
    /// ```
    /// use twobridge_farey::Fraction;
    /// assert!(Fraction::new(1, 3).is_farey_pair(Fraction::new(1, 4)));
    /// assert!(Fraction::ZERO.is_farey_pair(Fraction::INFINITY));
    /// assert!(!Fraction::new(1, 3).is_farey_pair(Fraction::new(3, 5)));
    /// ```
    pub fn is_farey_pair(&self, other: Fraction) -> bool {
        self.det(other).abs() == 1
    }

    /// The vertex embedding p/q ↦ (p/q, 1/q) used to draw the Stern–Brocot
    /// diagram; ∞ is not embeddable.
    pub fn embed(&self) -> (f64, f64) {
        assert!(!self.is_infinite(), "\u{221e} has no vertex embedding");
        (self.p as f64 / self.q as f64, 1.0 / self.q as f64)
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Fraction) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    /// Numeric order on [0, ∞], with ∞ greatest.
    fn cmp(&self, other: &Fraction) -> Ordering {
        (self.p * other.q).cmp(&(other.p * self.q))
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.q {
            0 => write!(f, "inf"),
            1 => write!(f, "{}", self.p),
            _ => write!(f, "{}/{}", self.p, self.q),
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Error from parsing a fraction string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseFractionError(String);

impl fmt::Display for ParseFractionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid fraction: {}", self.0)
    }
}

impl std::error::Error for ParseFractionError {}

impl FromStr for Fraction {
    type Err = ParseFractionError;

    /// Parses "p/q" or a bare integer "p"; "inf" and "1/0" both give ∞.
    fn from_str(s: &str) -> Result<Fraction, ParseFractionError> {
        let s = s.trim();
        if s == "inf" || s == "\u{221e}" {
            return Ok(Fraction::INFINITY);
        }
        let bad = || ParseFractionError(s.to_string());
        let (p, q) = match s.split_once('/') {
            Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
            None => (s.parse().map_err(|_| bad())?, 1),
        };
        if p < 0 || q < 0 || (p, q) == (0, 0) {
            return Err(bad());
        }
        Ok(Fraction::new(p, q))
    }
}
