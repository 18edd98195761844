//! Numeric evaluation of the Farey-recursive families at a fixed point.
//!
//! The exact engine in `twobridge_frf` computes whole polynomials, which is
//! the right tool while degrees stay modest.  Filtering candidate roots,
//! however, needs the *values* Q(γ)(z), N(γ)(z), and the derived shape
//! parameters on funnel vertices whose denominators can reach 10⁵, where
//! deg Q(γ) ≈ q/2 makes exact polynomials hopeless.  The Farey recursion
//!
//!   F(γ ⊕² α) = −d(α)·F(γ) + T(α)·F(α ⊕ γ)
//!
//! works for values exactly as it does for polynomials, so this module runs
//! the same fan recursion over arbitrary-precision complex numbers and
//! memoises the results per evaluation point.

use std::collections::HashMap;
use twobridge_farey::{center_corner_index, Edge, Fraction};
use twobridge_numeric::{Cx, NumCtx};

/// Values of the Q and N families at one complex number `point`, memoised
/// slope by slope.
///
/// ```
/// use twobridge_numeric::{Cx, NumCtx};
/// use twobridge_shapes::NumFamilies;
/// use twobridge_farey::Fraction;
///
/// let ctx = NumCtx::new(128);
/// let mut fam = NumFamilies::new(Cx::from_f64(0.25, 0.0, &ctx), &ctx);
/// // Q(2/5) = x² − x + 1 evaluates to 13/16 at x = 1/4.
/// let v = fam.q_at(Fraction::new(2, 5));
/// assert!((twobridge_numeric::to_f64(&v.re) - 0.8125).abs() < 1e-15);
/// ```
pub struct NumFamilies<'a> {
    ctx: &'a NumCtx,
    point: Cx,
    q: HashMap<Fraction, Cx>,
    n: HashMap<Fraction, Cx>,
}

impl<'a> NumFamilies<'a> {
    pub fn new(point: Cx, ctx: &'a NumCtx) -> NumFamilies<'a> {
        NumFamilies { ctx, point, q: HashMap::new(), n: HashMap::new() }
    }

    /// The evaluation point z.
    pub fn point(&self) -> &Cx {
        &self.point
    }

    /// The determinant d_Q(p/q) = (−1)^p x^q evaluated at the point.
    pub fn det_at(&self, gamma: Fraction) -> Cx {
        let zq = self.point.powi(gamma.den(), self.ctx);
        if gamma.num() % 2 == 0 {
            zq
        } else {
            zq.neg()
        }
    }

    /// Q(γ) evaluated at the point.
    pub fn q_at(&mut self, gamma: Fraction) -> Cx {
        if let Some(v) = self.q.get(&gamma) {
            return v.clone();
        }
        let val = if gamma == Fraction::ZERO || gamma == Fraction::ONE {
            Cx::one(self.ctx)
        } else if gamma.is_infinite() {
            Cx::zero(self.ctx)
        } else {
            let (c, k, j) = center_corner_index(gamma);
            let t = self.q_at(c);
            let d = self.det_at(c);
            let g0 = self.q_at(k);
            let g1 = self.q_at(k.mediant(c));
            fan_at(&t, &d, g0, g1, j, self.ctx)
        };
        self.q.insert(gamma, val.clone());
        val
    }

    /// N(γ) evaluated at the point.
    pub fn n_at(&mut self, gamma: Fraction) -> Cx {
        if let Some(v) = self.n.get(&gamma) {
            return v.clone();
        }
        let val = if gamma == Fraction::ZERO || gamma == Fraction::ONE || gamma.is_infinite() {
            Cx::one(self.ctx)
        } else {
            let (c, k, j) = center_corner_index(gamma);
            let t = self.q_at(c);
            let d = self.det_at(c);
            let g0 = self.n_at(k);
            let g1 = self.n_at(k.mediant(c));
            fan_at(&t, &d, g0, g1, j, self.ctx)
        };
        self.n.insert(gamma, val.clone());
        val
    }

    /// The ideal-vertex position V(γ) = N(γ)/Q(γ) at the point.  Infinite
    /// when Q(γ) vanishes there (V(∞) in particular).
    pub fn vertex_at(&mut self, gamma: Fraction) -> Cx {
        let n = self.n_at(gamma);
        let q = self.q_at(gamma);
        n.div(&q, self.ctx)
    }

    /// The shape parameter Z(e) = −(d_Q(ê)·Q(e⁻)²/Q(e⁺)²)^(−ν(e)) at the
    /// point, with the convention Z = 1 on the horizontal base edge.
    pub fn shape_at(&mut self, e: &Edge) -> Cx {
        if e.hat().is_infinite() {
            return Cx::one(self.ctx);
        }
        let d = self.det_at(e.hat());
        let qm = self.q_at(e.minus());
        let qp = self.q_at(e.plus());
        let qm2 = qm.mul(&qm, self.ctx);
        let qp2 = qp.mul(&qp, self.ctx);
        let core = d.mul(&qm2, self.ctx).div(&qp2, self.ctx);
        if e.nu() == 1 {
            core.recip(self.ctx).neg()
        } else {
            core.neg()
        }
    }
}

/// The fan recursion g_{i+2} = T·g_{i+1} − d·g_i on values, returning g_j.
fn fan_at(trace: &Cx, det: &Cx, g0: Cx, g1: Cx, j: i64, ctx: &NumCtx) -> Cx {
    assert!(j >= 1, "fan index must be positive");
    let (mut g0, mut g1) = (g0, g1);
    for _ in 1..j {
        let g2 = trace.mul(&g1, ctx).sub(&det.mul(&g0, ctx), ctx);
        g0 = g1;
        g1 = g2;
    }
    g1
}
