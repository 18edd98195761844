//! Simultaneous polynomial root finding (Aberth–Ehrlich iteration).
//!
//! Roots are found for all of them at once: starting from moduli read off
//! the Newton polygon of the coefficients, the Aberth–Ehrlich correction
//!
//!   z_i ← z_i − N_i / (1 − N_i·Σ_{j≠i} 1/(z_i − z_j)),   N_i = p(z_i)/p′(z_i)
//!
//! converges cubically for simple roots.  The iteration runs on a precision
//! ladder (a cheap low-precision pass locates the roots, a full-precision
//! pass sharpens them), so the cost at high precision is a handful of
//! sweeps.
//!
//! The input polynomial must be squarefree: repeated roots stall the
//! iteration.  Callers with exact integer coefficients should divide out
//! the gcd with the derivative first.

use crate::ctx::{bigint_to_bigfloat, to_f64, NumCtx};
use crate::cx::Cx;
use astro_float::BigFloat;
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RootError {
    #[error("the zero polynomial has no well-defined roots")]
    ZeroPolynomial,
    #[error("root iteration failed to converge at {precision} bits after {sweeps} sweeps")]
    NoConvergence { precision: usize, sweeps: usize },
}

/// All complex roots of a squarefree polynomial with integer coefficients
/// (ascending order, `coeffs[k]` multiplying x^k), at the context precision.
pub fn int_roots(coeffs: &[BigInt], ctx: &NumCtx) -> Result<Vec<Cx>, RootError> {
    let mut hi = coeffs.len();
    while hi > 0 && coeffs[hi - 1].is_zero() {
        hi -= 1;
    }
    if hi == 0 {
        return Err(RootError::ZeroPolynomial);
    }
    let cx_coeffs: Vec<Cx> = coeffs[..hi]
        .iter()
        .map(|c| Cx::new(bigint_to_bigfloat(c), ctx.int(0)))
        .collect();
    cx_roots(&cx_coeffs, ctx)
}

/// All complex roots of a squarefree polynomial with complex coefficients.
/// The leading coefficient must be nonzero.
pub fn cx_roots(coeffs: &[Cx], ctx: &NumCtx) -> Result<Vec<Cx>, RootError> {
    let n = match coeffs.len() {
        0 => return Err(RootError::ZeroPolynomial),
        l => l - 1,
    };
    assert!(!coeffs[n].is_zero(), "leading coefficient must be nonzero");

    // Exactly-zero low coefficients contribute exact zero roots.
    let mut lo = 0;
    while coeffs[lo].is_zero() {
        lo += 1;
    }
    let coeffs = &coeffs[lo..];
    let mut roots: Vec<Cx> = (0..lo).map(|_| Cx::zero(ctx)).collect();

    if coeffs.len() > 1 {
        // Working precision: enough guard bits that the requested precision
        // survives the evaluation error of a degree-n polynomial.
        let deg = coeffs.len() - 1;
        let guard = 32 + 2 * (usize::BITS - deg.leading_zeros()) as usize;
        let wp = ctx.precision() + guard;

        let mut z = initial_guesses(coeffs, ctx);
        // Hardware-float warm start: when the coefficients fit in f64, a
        // native Aberth pass locates the roots at a tiny fraction of the
        // big-float cost, and the ladder below only has to polish them.
        if let Some(w) = f64_warm_start(coeffs, &z, ctx) {
            z = w;
        }
        // Precision ladder: locate at a cheap precision, then sharpen.
        let mut rung = 192.min(wp);
        loop {
            let wctx = ctx.with_precision(rung);
            aberth(coeffs, &mut z, &wctx)?;
            if rung == wp {
                break;
            }
            rung = (rung * 4).min(wp);
        }
        roots.extend(z);
    }

    sort_roots(&mut roots);
    Ok(roots)
}

/// Seed points distributed on circles whose radii come from the Newton
/// polygon of the coefficient magnitudes.
fn initial_guesses(coeffs: &[Cx], ctx: &NumCtx) -> Vec<Cx> {
    let n = coeffs.len() - 1;
    // Upper convex hull of (k, log2 |c_k|), skipping zero coefficients.
    let pts: Vec<(f64, f64)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k as f64, log2_abs(c, ctx)))
        .collect();
    let mut hull: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            // Pop b unless it lies strictly above the chord from a to p.
            if (p.1 - a.1) * (b.0 - a.0) >= (b.1 - a.1) * (p.0 - a.0) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }

    let mut seeds = Vec::with_capacity(n);
    let mut group = 0usize;
    for w in hull.windows(2) {
        let (i, li) = w[0];
        let (k, lk) = w[1];
        let count = (k - i) as usize;
        // Roots on this hull segment have |z| ≈ 2^((l_i − l_k)/(k − i)).
        let s = ((li - lk) / (k - i)).clamp(-400.0, 400.0);
        let r = s.exp2();
        for t in 0..count {
            let angle = 2.0 * std::f64::consts::PI * (t as f64 + 0.37) / count as f64
                + 0.61 * group as f64;
            seeds.push(Cx::from_f64(r * angle.cos(), r * angle.sin(), ctx));
        }
        group += 1;
    }
    debug_assert_eq!(seeds.len(), n);
    seeds
}

/// Aberth–Ehrlich in hardware floats.  Returns sharpened seeds when every
/// coefficient survives the trip to f64 and the iteration settles; returns
/// None (leaving the caller on the big-float path) for coefficients beyond
/// f64 range or an iteration that refuses to converge.
fn f64_warm_start(coeffs: &[Cx], seeds: &[Cx], ctx: &NumCtx) -> Option<Vec<Cx>> {
    type C = (f64, f64);
    fn sub(a: C, b: C) -> C {
        (a.0 - b.0, a.1 - b.1)
    }
    fn mul(a: C, b: C) -> C {
        (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
    }
    fn div(a: C, b: C) -> C {
        let d = b.0 * b.0 + b.1 * b.1;
        ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d)
    }
    fn norm(a: C) -> f64 {
        a.0.hypot(a.1)
    }

    let c: Vec<C> = coeffs.iter().map(|c| c.to_f64s()).collect();
    for (k, v) in c.iter().enumerate() {
        if !v.0.is_finite() || !v.1.is_finite() {
            return None;
        }
        // A nonzero coefficient that underflows to zero would falsify the
        // polynomial, so give up on the warm start.
        if v.0 == 0.0 && v.1 == 0.0 && !coeffs[k].is_zero() {
            return None;
        }
    }
    let dc: Vec<C> = c.iter().enumerate().skip(1).map(|(k, v)| (v.0 * k as f64, v.1 * k as f64)).collect();
    let mut z: Vec<C> = seeds.iter().map(|s| s.to_f64s()).collect();
    if z.iter().any(|v| !v.0.is_finite() || !v.1.is_finite()) {
        return None;
    }

    let n = z.len();
    let mut settled = false;
    for _ in 0..200 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let zi = z[i];
            let mut p = (0.0, 0.0);
            for k in (0..c.len()).rev() {
                p = mul(p, zi);
                p = (p.0 + c[k].0, p.1 + c[k].1);
            }
            let mut dp = (0.0, 0.0);
            for k in (0..dc.len()).rev() {
                dp = mul(dp, zi);
                dp = (dp.0 + dc[k].0, dp.1 + dc[k].1);
            }
            if dp.0 == 0.0 && dp.1 == 0.0 {
                dp = (1e-12, 3e-13);
            }
            let nw = div(p, dp);
            let mut s = (0.0, 0.0);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    let mut d = sub(zi, *zj);
                    if d.0 == 0.0 && d.1 == 0.0 {
                        d = (3e-9, 1e-9);
                    }
                    let r = div((1.0, 0.0), d);
                    s = (s.0 + r.0, s.1 + r.1);
                }
            }
            let denom = sub((1.0, 0.0), mul(nw, s));
            let w = if denom.0 == 0.0 && denom.1 == 0.0 { nw } else { div(nw, denom) };
            if !w.0.is_finite() || !w.1.is_finite() {
                return None;
            }
            z[i] = sub(zi, w);
            moved = moved.max(norm(w) / norm(z[i]).max(1.0));
        }
        if moved < 1e-13 {
            settled = true;
            break;
        }
    }
    if !settled {
        return None;
    }
    Some(z.iter().map(|v| Cx::from_f64(v.0, v.1, ctx)).collect())
}

/// log2 |c| from the f64 image, falling back to the raw exponent when the
/// magnitude leaves f64 range (coarse is fine for seeding).
fn log2_abs(c: &Cx, ctx: &NumCtx) -> f64 {
    let a = to_f64(&c.abs(ctx));
    if a.is_finite() && a > 0.0 {
        a.log2()
    } else {
        let er = c.re.exponent().unwrap_or(0);
        let ei = c.im.exponent().unwrap_or(0);
        er.max(ei) as f64
    }
}

/// Runs the Aberth–Ehrlich iteration in place until every root either takes
/// corrections below 2^(8 − precision) of its magnitude or evaluates within
/// the Horner roundoff floor (at which point this precision cannot improve
/// it further).
fn aberth(coeffs: &[Cx], z: &mut [Cx], ctx: &NumCtx) -> Result<(), RootError> {
    let n = z.len();
    let deriv: Vec<Cx> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.mul_bf(&ctx.int(k as i64), ctx))
        .collect();
    let tol = ctx.pow2(8i32.saturating_sub(ctx.precision() as i32));
    let one = ctx.int(1);
    let max_sweeps = 240;
    let mut done = vec![false; n];

    // Evaluation-noise majorant: |p(z)| computed by Horner at precision b
    // is uncertain by about Σ|c_k||z|^k · 2n·2^(−b).  Low precision is
    // plenty for an error estimate.
    let ectx = NumCtx::new(64);
    let abs_coeffs: Vec<BigFloat> = coeffs.iter().map(|c| c.abs(&ectx)).collect();
    let noise = ectx.pow2(5 + n.ilog2() as i32 - ctx.precision() as i32);

    for _sweep in 0..max_sweeps {
        let mut all_done = true;
        for i in 0..n {
            if done[i] {
                continue;
            }
            let p = horner(coeffs, &z[i], ctx);
            if p.is_zero() {
                done[i] = true;
                continue;
            }
            // Within roundoff of a root: no further progress is possible
            // at this working precision.
            let zmag = z[i].abs(&ectx);
            let mut majorant = BigFloat::new(64);
            for c in abs_coeffs.iter().rev() {
                majorant = ectx.add(&ectx.mul(&majorant, &zmag), c);
            }
            let bound = ectx.mul(&majorant, &noise);
            if p.abs2(ctx) < ectx.mul(&bound, &bound) {
                done[i] = true;
                continue;
            }
            let dp = horner(&deriv, &z[i], ctx);
            let newton = if dp.is_zero() {
                // Derivative vanished (seed hit a critical point); nudge
                // away and let the next sweep recover.
                Cx::from_f64(1e-3, 2e-3, ctx)
            } else {
                p.div(&dp, ctx)
            };
            let mut sum = Cx::zero(ctx);
            for j in 0..n {
                if j == i {
                    continue;
                }
                let d = z[i].sub(&z[j], ctx);
                if d.is_zero() {
                    // Collided with another iterate: shear apart.
                    z[i] = z[i].add(&Cx::from_f64(3e-4, 1e-4, ctx), ctx);
                    continue;
                }
                sum = sum.add(&d.recip(ctx), ctx);
            }
            let denom = Cx::one(ctx).sub(&newton.mul(&sum, ctx), ctx);
            let w = if denom.is_zero() {
                newton
            } else {
                newton.div(&denom, ctx)
            };
            z[i] = z[i].sub(&w, ctx);

            // Converged when the correction is negligible at this precision.
            let mut scale = z[i].abs(ctx);
            if scale < one {
                scale = one.clone();
            }
            if w.abs(ctx) < ctx.mul(&scale, &tol) {
                done[i] = true;
            } else {
                all_done = false;
            }
        }
        if all_done {
            return Ok(());
        }
    }
    Err(RootError::NoConvergence {
        precision: ctx.precision(),
        sweeps: max_sweeps,
    })
}

/// Horner evaluation with ascending coefficients.
pub fn horner(coeffs: &[Cx], z: &Cx, ctx: &NumCtx) -> Cx {
    let mut acc = Cx::zero(ctx);
    for c in coeffs.iter().rev() {
        acc = acc.mul(z, ctx).add(c, ctx);
    }
    acc
}

/// Horner evaluation of integer coefficients at a complex point.
pub fn horner_int(coeffs: &[BigInt], z: &Cx, ctx: &NumCtx) -> Cx {
    let mut acc = Cx::zero(ctx);
    for c in coeffs.iter().rev() {
        let cf = Cx::new(bigint_to_bigfloat(c), ctx.int(0));
        acc = acc.mul(z, ctx).add(&cf, ctx);
    }
    acc
}

/// Deterministic order: ascending real part, then imaginary part.
fn sort_roots(roots: &mut [Cx]) {
    roots.sort_by(|a, b| {
        let (ar, ai) = a.to_f64s();
        let (br, bi) = b.to_f64s();
        ar.total_cmp(&br).then(ai.total_cmp(&bi))
    });
}
