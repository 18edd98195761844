//! Exact shape parameters of the triangulation as rational functions.
//!
//! Each non-horizontal edge e of the Stern–Brocot funnel carries a pair of
//! ideal tetrahedra whose shape parameter is the rational function
//!
//!   Z(e) = −(d_Q(ê) · Q(e⁻)² / Q(e⁺)²)^(−ν(e))
//!
//! of the trace variable x, where ê is the hat vertex e⁺ ⊖ e⁻ and ν(e)
//! orients the edge inside the funnel.  Horizontal edges take Z = 1 by
//! convention.  Evaluating Z on the geometric root of Q(α) yields the
//! actual tetrahedron shapes of the hyperbolic structure; keeping Z exact
//! lets the gluing equations be verified as identities in ℚ(x).

use twobridge_farey::Edge;
use twobridge_frf::{q_determinant, Families, RatFn};
use twobridge_numeric::{horner_int, Cx, NumCtx};

/// The shape parameter Z(e) as a reduced rational function of x.
///
/// ```
/// use twobridge_farey::{Edge, Fraction};
/// use twobridge_frf::Families;
/// use twobridge_shapes::shape_fn;
///
/// let mut fam = Families::new();
/// let e = Edge::new(Fraction::ZERO, Fraction::new(1, 2));
/// assert_eq!(shape_fn(&mut fam, &e).to_string(), "x");
/// let e = Edge::new(Fraction::new(1, 2), Fraction::new(1, 3));
/// assert_eq!(shape_fn(&mut fam, &e).to_string(), "(-x^2 + 2x - 1) / (x)");
/// ```
pub fn shape_fn(fam: &mut Families, e: &Edge) -> RatFn {
    if e.hat().is_infinite() {
        return RatFn::one();
    }
    let d = RatFn::from_poly(q_determinant(e.hat()));
    let qm = RatFn::from_poly((*fam.q(e.minus())).clone());
    let qp = RatFn::from_poly((*fam.q(e.plus())).clone());
    let core = &(&d * &qm.square()) / &qp.square();
    -&core.powi(-i64::from(e.nu()))
}

/// Evaluates a rational function at a complex point.  Returns a non-finite
/// value when the denominator vanishes there.
pub fn ratfn_at(f: &RatFn, z: &Cx, ctx: &NumCtx) -> Cx {
    let num = horner_int(f.numerator().coeffs(), z, ctx);
    let den = horner_int(f.denominator().coeffs(), z, ctx);
    num.div(&den, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use twobridge_farey::{funnel_edges, Fraction};

    #[test]
    fn worked_shape_examples() {
        let mut fam = Families::new();
        let mut z = |a, b| shape_fn(&mut fam, &Edge::new(a, b)).to_string();
        assert_eq!(z(Fraction::ZERO, Fraction::ONE), "1");
        assert_eq!(z(Fraction::ZERO, Fraction::new(1, 2)), "x");
        assert_eq!(z(Fraction::ZERO, Fraction::new(1, 3)), "(x^2) / (x^2 - 2x + 1)");
        assert_eq!(z(Fraction::new(1, 2), Fraction::new(1, 3)), "(-x^2 + 2x - 1) / (x)");
    }

    #[test]
    fn exact_and_numeric_shapes_agree_along_a_funnel() {
        let ctx = NumCtx::new(160);
        let alpha = Fraction::new(10, 33);
        let z = Cx::from_f64(0.451069913, 0.280155498, &ctx);
        let mut exact = Families::new();
        let mut num = crate::NumFamilies::new(z.clone(), &ctx);
        for e in funnel_edges(alpha) {
            let f = shape_fn(&mut exact, &e);
            let a = ratfn_at(&f, &z, &ctx);
            let b = num.shape_at(&e);
            assert!(
                a.dist(&b, &ctx) < ctx.bf(1e-25),
                "shape of {e} disagrees between exact and recursive evaluation"
            );
        }
    }
}
