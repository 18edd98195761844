//! Evaluation context: precision, rounding, and cached constants.
//!
//! Every floating-point operation in this workspace goes through a
//! [`NumCtx`], which fixes the working precision in bits and the rounding
//! mode, and owns the caches for π-style constants and Bernoulli numbers.
//! Contexts are cheap to construct, so parallel code simply builds one per
//! worker instead of sharing.

use astro_float::{BigFloat, Consts, Exponent, RoundingMode, Sign, WORD_BIT_SIZE};
use num_bigint::{BigInt, Sign as IntSign};
use num_traits::Zero;
use std::cell::RefCell;

// The exact BigInt conversion below assembles 64-bit words.
const _: () = assert!(WORD_BIT_SIZE == 64, "requires a 64-bit word target");

/// Precision, rounding mode, and constant caches for one computation.
pub struct NumCtx {
    prec: usize,
    rm: RoundingMode,
    cc: RefCell<Consts>,
    /// Cached Bernoulli numbers B₂, B₄, … as exact fractions.
    bernoulli: RefCell<Vec<(BigInt, BigInt)>>,
}

impl NumCtx {
    /// A context carrying `prec` bits of working precision and
    /// round-to-even.
    pub fn new(prec: usize) -> NumCtx {
        assert!(prec >= 32, "precision below 32 bits is not supported");
        NumCtx {
            prec,
            rm: RoundingMode::ToEven,
            cc: RefCell::new(Consts::new().expect("constant cache allocation")),
            bernoulli: RefCell::new(Vec::new()),
        }
    }

    /// A fresh context at a different precision (caches start empty).
    pub fn with_precision(&self, prec: usize) -> NumCtx {
        NumCtx::new(prec)
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn rounding(&self) -> RoundingMode {
        self.rm
    }

    // Scalar arithmetic at the context precision.

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.prec, self.rm)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.prec, self.rm)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.prec, self.rm)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.prec, self.rm)
    }

    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.prec, self.rm)
    }

    pub fn powi(&self, a: &BigFloat, n: usize) -> BigFloat {
        a.powi(n, self.prec, self.rm)
    }

    // Transcendentals (these consult the constant cache).

    pub fn ln(&self, a: &BigFloat) -> BigFloat {
        a.ln(self.prec, self.rm, &mut self.cc.borrow_mut())
    }

    pub fn exp(&self, a: &BigFloat) -> BigFloat {
        a.exp(self.prec, self.rm, &mut self.cc.borrow_mut())
    }

    pub fn sin(&self, a: &BigFloat) -> BigFloat {
        a.sin(self.prec, self.rm, &mut self.cc.borrow_mut())
    }

    pub fn cos(&self, a: &BigFloat) -> BigFloat {
        a.cos(self.prec, self.rm, &mut self.cc.borrow_mut())
    }

    pub fn atan(&self, a: &BigFloat) -> BigFloat {
        a.atan(self.prec, self.rm, &mut self.cc.borrow_mut())
    }

    pub fn acos(&self, a: &BigFloat) -> BigFloat {
        a.acos(self.prec, self.rm, &mut self.cc.borrow_mut())
    }

    /// Two-argument arctangent with the usual quadrant conventions;
    /// `atan2(0, 0) = 0`.  A zero `y` is treated as +0 whatever its sign
    /// bit, so the negative real axis gets argument +π.
    pub fn atan2(&self, y: &BigFloat, x: &BigFloat) -> BigFloat {
        if y.is_zero() {
            return if x.is_negative() {
                self.pi()
            } else {
                BigFloat::new(self.prec)
            };
        }
        if x.is_zero() {
            return if y.is_negative() {
                self.half_pi().neg()
            } else {
                self.half_pi()
            };
        }
        let base = self.atan(&self.div(y, x));
        if x.is_negative() {
            if y.is_negative() {
                self.sub(&base, &self.pi())
            } else {
                self.add(&base, &self.pi())
            }
        } else {
            base
        }
    }

    pub fn pi(&self) -> BigFloat {
        self.cc.borrow_mut().pi(self.prec, self.rm)
    }

    pub fn two_pi(&self) -> BigFloat {
        let mut pi = self.pi();
        if let Some(e) = pi.exponent() {
            pi.set_exponent(e + 1);
        }
        pi
    }

    pub fn half_pi(&self) -> BigFloat {
        let mut pi = self.pi();
        if let Some(e) = pi.exponent() {
            pi.set_exponent(e - 1);
        }
        pi
    }

    // Constructors for scalars.

    /// Exact embedding of an `f64`.
    pub fn bf(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.prec)
    }

    /// Exact embedding of a small integer.
    pub fn int(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, self.prec)
    }

    /// 2^k as a float.
    pub fn pow2(&self, k: i32) -> BigFloat {
        let mut one = BigFloat::from_i8(1, self.prec);
        if let Some(e) = one.exponent() {
            one.set_exponent(e + k);
        }
        one
    }

    /// The unit roundoff 2^(1−precision).
    pub fn eps(&self) -> BigFloat {
        self.pow2(1 - self.prec as i32)
    }

    /// Parses a decimal literal at the context precision (test fixtures and
    /// CLI input).
    pub fn parse(&self, s: &str) -> BigFloat {
        BigFloat::parse(
            s,
            astro_float::Radix::Dec,
            self.prec,
            self.rm,
            &mut self.cc.borrow_mut(),
        )
    }

    /// The Bernoulli number B_{2n} (n ≥ 1) as an exact fraction.
    pub fn bernoulli(&self, n: usize) -> (BigInt, BigInt) {
        assert!(n >= 1, "bernoulli(n) is indexed so that n = 1 gives B_2");
        {
            let cache = self.bernoulli.borrow();
            if n <= cache.len() {
                return cache[n - 1].clone();
            }
        }
        let target = n.max(16).next_power_of_two();
        let fresh = bernoulli_list(target);
        let mut cache = self.bernoulli.borrow_mut();
        if fresh.len() > cache.len() {
            *cache = fresh;
        }
        cache[n - 1].clone()
    }
}

/// B_2, B_4, …, B_{2n} as (numerator, denominator) pairs, via the integer
/// tangent-number recurrence: T_1 ← 1; T_k ← (k−1)T_{k−1}; then for
/// k = 2..n, j = k..n: T_j ← (j−k)T_{j−1} + (j−k+2)T_j; finally
/// B_{2k} = (−1)^{k−1} · 2k · T_k / (4^k (4^k − 1)).
fn bernoulli_list(n: usize) -> Vec<(BigInt, BigInt)> {
    let mut t: Vec<BigInt> = Vec::with_capacity(n + 1);
    t.push(BigInt::zero()); // unused index 0
    t.push(BigInt::from(1));
    for k in 2..=n {
        let prev = t[k - 1].clone();
        t.push(prev * BigInt::from(k as u64 - 1));
    }
    for k in 2..=n {
        for j in k..=n {
            let a = &t[j - 1] * BigInt::from((j - k) as u64);
            let b = &t[j] * BigInt::from((j - k + 2) as u64);
            t[j] = a + b;
        }
    }
    (1..=n)
        .map(|k| {
            let four_k = BigInt::from(4u64).pow(k as u32);
            let den = &four_k * (&four_k - BigInt::from(1));
            let mut num = &t[k] * BigInt::from(2 * k as u64);
            if k % 2 == 0 {
                num = -num;
            }
            (num, den)
        })
        .collect()
}

/// Exact conversion of an arbitrary-precision integer to a float (no
/// rounding; the result carries as many bits as the integer needs).
pub fn bigint_to_bigfloat(x: &BigInt) -> BigFloat {
    if x.is_zero() {
        return BigFloat::from_i8(0, WORD_BIT_SIZE);
    }
    let (sign, digits) = x.to_u64_digits();
    // from_words treats the words as the fixed-point mantissa 0.m scaled by
    // 2^e, normalising internally, so e = total mantissa bits gives |x|.
    let e = (digits.len() * WORD_BIT_SIZE) as Exponent;
    let s = if sign == IntSign::Minus { Sign::Neg } else { Sign::Pos };
    BigFloat::from_words(&digits, s, e)
}

/// Nearest-f64 approximation (for plotting and diagnostics, not proofs).
pub fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    match x.as_raw_parts() {
        None => f64::NAN,
        Some((words, _n, sign, exp, _inexact)) => {
            let len = words.len();
            let top = words[len - 1] as u128;
            let next = if len >= 2 { words[len - 2] as u128 } else { 0 };
            let m = (top << 64) | next;
            // The mantissa contributes ~2^127, so scale by 2^(exp−128) in
            // two halves: a single factor under- or overflows f64 even when
            // the product is representable.
            let e = (exp - 128).clamp(-2400, 2400);
            let h = e / 2;
            let mag = (m as f64) * (h as f64).exp2() * ((e - h) as f64).exp2();
            if sign == Sign::Neg {
                -mag
            } else {
                mag
            }
        }
    }
}
