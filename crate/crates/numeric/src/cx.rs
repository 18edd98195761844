//! Arbitrary-precision complex numbers on top of `astro_float::BigFloat`.
//!
//! Operations take the [`NumCtx`] explicitly so precision and rounding stay
//! visible at every call site.  The type is deliberately small: just the
//! arithmetic, metric, and elementary functions the geometry needs.

use crate::ctx::{to_f64, NumCtx};
use astro_float::BigFloat;

/// A complex number with arbitrary-precision real and imaginary parts.
#[derive(Clone)]
pub struct Cx {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Cx {
    pub fn new(re: BigFloat, im: BigFloat) -> Cx {
        Cx { re, im }
    }

    pub fn zero(ctx: &NumCtx) -> Cx {
        Cx::new(ctx.int(0), ctx.int(0))
    }

    pub fn one(ctx: &NumCtx) -> Cx {
        Cx::new(ctx.int(1), ctx.int(0))
    }

    /// The imaginary unit.
    pub fn i(ctx: &NumCtx) -> Cx {
        Cx::new(ctx.int(0), ctx.int(1))
    }

    pub fn from_f64(re: f64, im: f64, ctx: &NumCtx) -> Cx {
        Cx::new(ctx.bf(re), ctx.bf(im))
    }

    pub fn from_re(re: BigFloat, ctx: &NumCtx) -> Cx {
        Cx::new(re, ctx.int(0))
    }

    /// r·(cos θ + i sin θ).
    pub fn from_polar(r: &BigFloat, theta: &BigFloat, ctx: &NumCtx) -> Cx {
        Cx::new(ctx.mul(r, &ctx.cos(theta)), ctx.mul(r, &ctx.sin(theta)))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !(self.re.is_inf() || self.re.is_nan() || self.im.is_inf() || self.im.is_nan())
    }

    pub fn conj(&self) -> Cx {
        Cx::new(self.re.clone(), self.im.neg())
    }

    pub fn neg(&self) -> Cx {
        Cx::new(self.re.neg(), self.im.neg())
    }

    pub fn add(&self, rhs: &Cx, ctx: &NumCtx) -> Cx {
        Cx::new(ctx.add(&self.re, &rhs.re), ctx.add(&self.im, &rhs.im))
    }

    pub fn sub(&self, rhs: &Cx, ctx: &NumCtx) -> Cx {
        Cx::new(ctx.sub(&self.re, &rhs.re), ctx.sub(&self.im, &rhs.im))
    }

    pub fn mul(&self, rhs: &Cx, ctx: &NumCtx) -> Cx {
        let re = ctx.sub(&ctx.mul(&self.re, &rhs.re), &ctx.mul(&self.im, &rhs.im));
        let im = ctx.add(&ctx.mul(&self.re, &rhs.im), &ctx.mul(&self.im, &rhs.re));
        Cx::new(re, im)
    }

    pub fn mul_bf(&self, s: &BigFloat, ctx: &NumCtx) -> Cx {
        Cx::new(ctx.mul(&self.re, s), ctx.mul(&self.im, s))
    }

    pub fn div_bf(&self, s: &BigFloat, ctx: &NumCtx) -> Cx {
        Cx::new(ctx.div(&self.re, s), ctx.div(&self.im, s))
    }

    pub fn div(&self, rhs: &Cx, ctx: &NumCtx) -> Cx {
        let den = rhs.abs2(ctx);
        self.mul(&rhs.conj(), ctx).div_bf(&den, ctx)
    }

    pub fn recip(&self, ctx: &NumCtx) -> Cx {
        self.conj().div_bf(&self.abs2(ctx), ctx)
    }

    /// |z|².
    pub fn abs2(&self, ctx: &NumCtx) -> BigFloat {
        ctx.add(&ctx.mul(&self.re, &self.re), &ctx.mul(&self.im, &self.im))
    }

    /// |z|.
    pub fn abs(&self, ctx: &NumCtx) -> BigFloat {
        ctx.sqrt(&self.abs2(ctx))
    }

    /// Principal argument in (−π, π].
    pub fn arg(&self, ctx: &NumCtx) -> BigFloat {
        ctx.atan2(&self.im, &self.re)
    }

    /// Principal logarithm ln|z| + i·arg z.
    pub fn ln(&self, ctx: &NumCtx) -> Cx {
        assert!(!self.is_zero(), "log of zero");
        Cx::new(ctx.ln(&self.abs(ctx)), self.arg(ctx))
    }

    /// Principal square root (nonnegative real part).
    pub fn sqrt(&self, ctx: &NumCtx) -> Cx {
        if self.is_zero() {
            return Cx::zero(ctx);
        }
        // w = sqrt((|z| + |Re z|)/2) is the large component; the small one
        // is |Im z|/(2w).  This avoids cancellation near the axes.
        let two = ctx.int(2);
        let w = ctx.sqrt(&ctx.div(&ctx.add(&self.abs(ctx), &self.re.abs()), &two));
        if w.is_zero() {
            // Pure negative real: |z| + Re z cancels; w would divide by 0.
            let root = ctx.sqrt(&self.re.abs());
            return Cx::new(ctx.int(0), if self.im.is_negative() { root.neg() } else { root });
        }
        let small = ctx.div(&self.im.abs(), &ctx.mul(&two, &w));
        if !self.re.is_negative() {
            Cx::new(w, if self.im.is_negative() { small.neg() } else { small })
        } else {
            Cx::new(small, if self.im.is_negative() { w.neg() } else { w })
        }
    }

    /// Integer power, including negative exponents.
    pub fn powi(&self, n: i64, ctx: &NumCtx) -> Cx {
        if n < 0 {
            return self.recip(ctx).powi(-n, ctx);
        }
        let mut acc = Cx::one(ctx);
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, ctx);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base, ctx);
            }
        }
        acc
    }

    /// |self − rhs|.
    pub fn dist(&self, rhs: &Cx, ctx: &NumCtx) -> BigFloat {
        self.sub(rhs, ctx).abs(ctx)
    }

    /// Nearest-f64 pair (plotting and diagnostics).
    pub fn to_f64s(&self) -> (f64, f64) {
        (to_f64(&self.re), to_f64(&self.im))
    }
}

impl std::fmt::Debug for Cx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (re, im) = self.to_f64s();
        write!(f, "{re}{im:+}i")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-13
    }

    #[test]
    fn field_operations() {
        let ctx = NumCtx::new(128);
        let a = Cx::from_f64(1.0, 2.0, &ctx);
        let b = Cx::from_f64(3.0, -1.0, &ctx);
        let (re, im) = a.mul(&b, &ctx).to_f64s();
        assert!(close(re, 5.0) && close(im, 5.0), "(1+2i)(3-i) = {re}+{im}i");
        let q = a.div(&b, &ctx);
        let back = q.mul(&b, &ctx);
        let (re, im) = back.to_f64s();
        assert!(close(re, 1.0) && close(im, 2.0), "division round trip: {re}+{im}i");
        let r = a.recip(&ctx).mul(&a, &ctx);
        let (re, im) = r.to_f64s();
        assert!(close(re, 1.0) && close(im, 0.0), "recip: {re}+{im}i");
    }

    #[test]
    fn square_roots() {
        let ctx = NumCtx::new(128);
        for (re, im) in [(0.0, 2.0), (3.0, 4.0), (-3.0, 4.0), (-3.0, -4.0), (-4.0, 0.0), (4.0, 0.0), (1e-8, -5.0)] {
            let z = Cx::from_f64(re, im, &ctx);
            let s = z.sqrt(&ctx);
            let (sre, _) = s.to_f64s();
            assert!(sre >= 0.0, "principal branch for {re}+{im}i");
            let back = s.mul(&s, &ctx);
            let (bre, bim) = back.to_f64s();
            assert!(close(bre, re) && close(bim, im), "sqrt({re}+{im}i)^2 = {bre}+{bim}i");
        }
    }

    #[test]
    fn polar_and_log() {
        let ctx = NumCtx::new(128);
        let theta = std::f64::consts::PI / 3.0;
        let z = Cx::from_polar(&ctx.int(2), &ctx.bf(theta), &ctx);
        assert!(close(to_f64(&z.abs(&ctx)), 2.0));
        assert!(close(to_f64(&z.arg(&ctx)), theta));
        let l = z.ln(&ctx);
        let (lre, lim) = l.to_f64s();
        assert!(close(lre, 2f64.ln()) && close(lim, theta));
    }

    #[test]
    fn integer_powers() {
        let ctx = NumCtx::new(128);
        let z = Cx::from_f64(1.0, 1.0, &ctx);
        let (re, im) = z.powi(8, &ctx).to_f64s();
        assert!(close(re, 16.0) && close(im, 0.0), "(1+i)^8 = {re}+{im}i");
        let (re, im) = z.powi(-2, &ctx).to_f64s();
        assert!(close(re, 0.0) && close(im, -0.5), "(1+i)^-2 = {re}+{im}i");
    }
}
