//! Dilogarithm, Clausen, Lobachevsky, and Bloch–Wigner functions.
//!
//! Hyperbolic volumes are sums of Bloch–Wigner values D(z) over tetrahedron
//! shapes, and volumes of drum-shaped domains come from the Lobachevsky
//! function L(θ).  Everything here reduces to the complex dilogarithm
//!
//!   Li₂(z) = Σ_{k≥1} z^k/k²,
//!
//! evaluated through the exponentially convergent Debye series
//!
//!   Li₂(z) = u − u²/4 + Σ_{n≥1} B₂ₙ u^{2n+1}/(2n+1)!,   u = −ln(1−z),
//!
//! after the standard inversion (|z| > 1 → 1/z) and reflection
//! (Re z > 1/2 → 1−z) steps confine the argument to a region where
//! |u|² ≤ ln²2 + π²/4.  There the terms shrink by a factor
//! |u/2π|² < 0.075 each, so a few dozen terms give hundreds of bits.
//!
//! The real-variable series for Cl₂ comes from integrating the expansion of
//! ln(2 sin(θ/2)); its terms shrink by (θ/2π)² ≤ 1/4 once θ is reduced to
//! (−π, π].

use crate::ctx::{bigint_to_bigfloat, NumCtx};
use crate::cx::Cx;
use astro_float::BigFloat;
use num_bigint::BigInt;
use num_traits::Signed;

/// Guard bits added internally so reductions and series summation do not
/// erode the caller's precision.
const GUARD_BITS: usize = 32;

/// π²/6 = Li₂(1).
fn pi2_over_6(ctx: &NumCtx) -> BigFloat {
    let pi = ctx.pi();
    ctx.div(&ctx.mul(&pi, &pi), &ctx.int(6))
}

/// The principal branch of the dilogarithm Li₂(z).
///
/// On the cut z ∈ (1, ∞) this takes the limit from below (imaginary part
/// −π ln z), the side consistent with ln(−z) for Im z → 0⁻.
pub fn li2(z: &Cx, ctx: &NumCtx) -> Cx {
    let wp = ctx.precision() + GUARD_BITS;
    let w = ctx.with_precision(wp);
    let one = w.int(1);

    if z.is_zero() {
        return Cx::zero(ctx);
    }
    if z.im.is_zero() && ctx.sub(&z.re, &one).is_zero() {
        return round_cx(Cx::from_re(pi2_over_6(&w), &w), ctx);
    }

    let value = if z.abs2(&w) > one {
        // Inversion: Li₂(z) = −Li₂(1/z) − π²/6 − ln²(−z)/2.
        let inner = li2_in_disk(&z.recip(&w), ctx, &w);
        let lnmz = z.neg().ln(&w);
        let half_sq = lnmz.mul(&lnmz, &w).div_bf(&w.int(2), &w);
        inner
            .neg()
            .sub(&Cx::from_re(pi2_over_6(&w), &w), &w)
            .sub(&half_sq, &w)
    } else {
        li2_in_disk(z, ctx, &w)
    };
    round_cx(value, ctx)
}

/// Li₂ for |z| ≤ 1, z ≠ 1.  `ctx` carries the Bernoulli cache, `w` the
/// working precision.
fn li2_in_disk(z: &Cx, ctx: &NumCtx, w: &NumCtx) -> Cx {
    let half = w.pow2(-1);
    if z.re > half {
        // Reflection: Li₂(z) = π²/6 − ln z ln(1−z) − Li₂(1−z).
        let zc = Cx::one(w).sub(z, w);
        let cross = z.ln(w).mul(&zc.ln(w), w);
        Cx::from_re(pi2_over_6(w), w)
            .sub(&cross, w)
            .sub(&debye_series(&zc, ctx, w), w)
    } else {
        debye_series(z, ctx, w)
    }
}

/// The Debye series at u = −ln(1−z); requires |u| ≲ 1.8.
fn debye_series(z: &Cx, ctx: &NumCtx, w: &NumCtx) -> Cx {
    if z.is_zero() {
        return Cx::zero(w);
    }
    let u = Cx::one(w).sub(z, w).ln(w).neg();
    let u2 = u.mul(&u, w);
    // sum = u − u²/4.
    let mut sum = u.sub(&u2.div_bf(&w.int(4), w), w);
    let mut upow = u.mul(&u2, w); // u^(2n+1)
    let mut fact = BigInt::from(6); // (2n+1)!
    let tol = w.pow2(-(w.precision() as i32) - 8);
    let max_terms = w.precision();
    for n in 1..=max_terms {
        let (bnum, bden) = ctx.bernoulli(n);
        let coef = w.div(&bigint_to_bigfloat(&bnum), &bigint_to_bigfloat(&(bden * &fact)));
        let term = upow.mul_bf(&coef, w);
        sum = sum.add(&term, w);
        if term.abs(w) < tol {
            return sum;
        }
        upow = upow.mul(&u2, w);
        let k = 2 * n as u64;
        fact *= BigInt::from((k + 2) * (k + 3));
    }
    unreachable!("dilogarithm series did not converge; argument outside the reduced region");
}

/// The Clausen function Cl₂(θ) = −∫₀^θ ln|2 sin(t/2)| dt.
pub fn clausen2(theta: &BigFloat, ctx: &NumCtx) -> BigFloat {
    let wp = ctx.precision() + GUARD_BITS;
    let w = ctx.with_precision(wp);

    // Reduce to (−π, π] using 2π-periodicity, then to [0, π] by oddness.
    let two_pi = w.two_pi();
    let pi = w.pi();
    let mut t = theta.rem(&two_pi);
    if t > pi {
        t = w.sub(&t, &two_pi);
    } else if t <= pi.neg() {
        t = w.add(&t, &two_pi);
    }
    let negate = t.is_negative();
    if negate {
        t = t.neg();
    }
    if t.is_zero() {
        return BigFloat::new(ctx.precision());
    }

    // Cl₂(θ) = θ − θ ln θ + Σ_{n≥1} |B₂ₙ| θ^{2n+1} / (2n(2n+1)(2n)!).
    let mut sum = w.sub(&t, &w.mul(&t, &w.ln(&t)));
    let t2 = w.mul(&t, &t);
    let mut tpow = w.mul(&t, &t2); // θ^(2n+1)
    let mut fact = BigInt::from(2); // (2n)!
    let tol = w.pow2(-(wp as i32) - 8);
    let mut converged = false;
    for n in 1..=wp {
        let (bnum, bden) = ctx.bernoulli(n);
        let k = 2 * n as u64;
        let den = bden * &fact * BigInt::from(k * (k + 1));
        let coef = w.div(&bigint_to_bigfloat(&bnum.abs()), &bigint_to_bigfloat(&den));
        let term = w.mul(&coef, &tpow);
        sum = w.add(&sum, &term);
        if term < tol {
            converged = true;
            break;
        }
        tpow = w.mul(&tpow, &t2);
        fact *= BigInt::from((k + 1) * (k + 2));
    }
    assert!(converged, "Clausen series did not converge");
    if negate {
        sum = sum.neg();
    }
    round_bf(sum, ctx)
}

/// The Lobachevsky function L(θ) = Cl₂(2θ)/2.
pub fn lobachevsky(theta: &BigFloat, ctx: &NumCtx) -> BigFloat {
    // Doubling and halving are exact in binary; no extra guard needed.
    let double = theta.add_full_prec(theta);
    let mut half = clausen2(&double, ctx);
    if let Some(e) = half.exponent() {
        half.set_exponent(e - 1);
    }
    half
}

/// The Bloch–Wigner function
/// D(z) = Im Li₂(z) + ln|z| · arg(1−z),
/// the hyperbolic volume of the ideal tetrahedron with shape z (for
/// Im z > 0).  Vanishes identically on the real line.
pub fn bloch_wigner(z: &Cx, ctx: &NumCtx) -> BigFloat {
    if z.im.is_zero() {
        return BigFloat::new(ctx.precision());
    }
    let wp = ctx.precision() + GUARD_BITS;
    let w = ctx.with_precision(wp);
    let im_li2 = li2(z, &w).im;
    let one_minus = Cx::one(&w).sub(z, &w);
    // ln|z| = ln(|z|²)/2.
    let mut ln_abs = w.ln(&z.abs2(&w));
    if let Some(e) = ln_abs.exponent() {
        ln_abs.set_exponent(e - 1);
    }
    let d = w.add(&im_li2, &w.mul(&ln_abs, &one_minus.arg(&w)));
    round_bf(d, ctx)
}

fn round_bf(mut x: BigFloat, ctx: &NumCtx) -> BigFloat {
    x.set_precision(ctx.precision(), ctx.rounding())
        .expect("rounding to context precision");
    x
}

fn round_cx(z: Cx, ctx: &NumCtx) -> Cx {
    Cx::new(round_bf(z.re, ctx), round_bf(z.im, ctx))
}
