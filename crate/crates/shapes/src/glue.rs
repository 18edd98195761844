//! Thurston's gluing equations for the triangulated 2-bridge complement.
//!
//! The Sakuma–Weeks triangulation assembles one pair of ideal tetrahedra per
//! interior funnel edge e₁, …, e_n.  Writing z_j for the shape parameter of
//! the j-th pair and padding with sentinels z₀ = z_{n+1} = 1, every interior
//! edge class of the complex imposes one equation stating that the shape
//! parameters around it multiply to 1 (or to −1 for the tunnel classes,
//! which wrap around with total dihedral angle 2π but reversed sign
//! conventions at the fold):
//!
//! * a **vertex class** at a funnel vertex β collects the two bare factors
//!   z_{k−1}, z_{ℓ+1} and the squared run (∏_{j=k}^{ℓ} ζ^s(z_j))², where
//!   [k, ℓ] is the range of interior edges having β as a vertex, ζ(x) =
//!   1/(1−x), and s is 1 on the left of the funnel (β < α) and 2 on the
//!   right;
//! * the **upper tunnel** at the vertex 0 takes the bare factors z₁ and
//!   z_{ℓ₀+1} with the squared run ∏_{j=1}^{ℓ₀} ζ(z_j) and target −1;
//! * folding the complex up into the link complement adds two **closing
//!   classes**: the hairpin class at ê_{n+1} (which degenerates to the
//!   upper-tunnel form when ê_{n+1} = 0) and the lower tunnel at e⁻_{n+1},
//!   with bare factors z_{k−1} and z_n and target −1.
//!
//! On the unfolded complex the equations hold *identically* in ℚ(x) once
//! z_j = Z(e_j); each closing equation holds exactly on the roots of Q(α),
//! so its residual has numerator divisible by Q(α).  Those two facts are
//! what the validation suite checks.

use twobridge_farey::{funnel_edges, Edge, Fraction};
use twobridge_frf::{Families, RatFn};
use twobridge_numeric::{Cx, NumCtx};

use crate::famval::NumFamilies;
use crate::shape::shape_fn;

/// Which edge class of the complex an equation closes up.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlueLabel {
    /// The class of a funnel vertex β strictly inside the funnel.
    Vertex(Fraction),
    /// The tunnel class at the vertex 0.
    UpperTunnel,
    /// The tunnel class at e⁻_{n+1}, present only after folding.
    LowerTunnel,
}

impl std::fmt::Display for GlueLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GlueLabel::Vertex(v) => write!(f, "vertex {v}"),
            GlueLabel::UpperTunnel => write!(f, "upper tunnel"),
            GlueLabel::LowerTunnel => write!(f, "lower tunnel"),
        }
    }
}

/// One multiplicative gluing equation
///
///   target = z_lead · z_trail · (∏_{j=run.0}^{run.1} ζ^s(z_j))²
///
/// over the shape parameters z₁ … z_n, with the sentinel convention
/// z₀ = z_{n+1} = 1 and s = 1 (left) or 2 (right).
#[derive(Debug, Clone)]
pub struct GlueEquation {
    pub label: GlueLabel,
    /// +1 or −1.
    pub target: i32,
    /// Index of the leading bare factor (0 means the sentinel 1).
    pub lead: usize,
    /// Index of the trailing bare factor (n+1 means the sentinel 1).
    pub trail: usize,
    /// Inclusive range of interior edge indices in the squared run.
    pub run: (usize, usize),
    /// Whether the class lies on the left side of the funnel, selecting
    /// ζ(x) = 1/(1−x) for the run; the right side uses ζ²(x) = (x−1)/x.
    pub left: bool,
}

impl GlueEquation {
    /// Product minus target, as an exact rational function.  `shapes[j]`
    /// must hold Z(e_{j+1}) for j = 0, …, n−1.
    pub fn residual_exact(&self, shapes: &[RatFn]) -> RatFn {
        let one = RatFn::one();
        let mut run = RatFn::one();
        for j in self.run.0..=self.run.1 {
            let z = sentinel(shapes, &one, j);
            let zeta = if self.left {
                z.one_minus().recip()
            } else {
                &(-&z.one_minus()) / z
            };
            run = &run * &zeta;
        }
        let bare = sentinel(shapes, &one, self.lead) * sentinel(shapes, &one, self.trail);
        let product = &bare * &run.square();
        &product - &RatFn::constant(i64::from(self.target))
    }

    /// Product minus target at a numeric shape assignment; same indexing as
    /// [`GlueEquation::residual_exact`].
    pub fn residual_at(&self, shapes: &[Cx], ctx: &NumCtx) -> Cx {
        let one = Cx::one(ctx);
        let mut run = Cx::one(ctx);
        for j in self.run.0..=self.run.1 {
            let z = sentinel_cx(shapes, &one, j);
            let zeta = if self.left {
                one.sub(z, ctx).recip(ctx)
            } else {
                z.sub(&one, ctx).div(z, ctx)
            };
            run = run.mul(&zeta, ctx);
        }
        let bare = sentinel_cx(shapes, &one, self.lead)
            .mul(sentinel_cx(shapes, &one, self.trail), ctx);
        let product = bare.mul(&run.mul(&run, ctx), ctx);
        let target = if self.target == 1 { one } else { one.neg() };
        product.sub(&target, ctx)
    }
}

/// Looks up z_i with the sentinel convention z₀ = z_{n+1} = 1.
fn sentinel<'a>(shapes: &'a [RatFn], one: &'a RatFn, i: usize) -> &'a RatFn {
    if i == 0 || i == shapes.len() + 1 {
        one
    } else {
        &shapes[i - 1]
    }
}

fn sentinel_cx<'a>(shapes: &'a [Cx], one: &'a Cx, i: usize) -> &'a Cx {
    if i == 0 || i == shapes.len() + 1 {
        one
    } else {
        &shapes[i - 1]
    }
}

/// The full system of gluing equations along the funnel of α.
pub struct GluingSystem {
    pub alpha: Fraction,
    /// The funnel edges e₀, …, e_{n+1}.
    pub edges: Vec<Edge>,
    /// Equations of the unfolded complex; identities in ℚ(x) under
    /// z_j = Z(e_j).
    pub interior: Vec<GlueEquation>,
    /// The two extra equations of the folded link complement, equivalent to
    /// Q(α) = 0.  Empty for the non-hyperbolic slopes 1/q.
    pub closing: Vec<GlueEquation>,
}

impl GluingSystem {
    /// The number n of tetrahedron pairs (= interior funnel edges).
    pub fn tet_pairs(&self) -> usize {
        self.edges.len() - 2
    }

    /// The exact shape parameters Z(e₁), …, Z(e_n).
    pub fn exact_shapes(&self, fam: &mut Families) -> Vec<RatFn> {
        let n = self.tet_pairs();
        self.edges[1..=n].iter().map(|e| shape_fn(fam, e)).collect()
    }

    /// The numeric shape parameters at the point z.
    pub fn shapes_at(&self, z: &Cx, ctx: &NumCtx) -> Vec<Cx> {
        let n = self.tet_pairs();
        let mut fam = NumFamilies::new(z.clone(), ctx);
        self.edges[1..=n].iter().map(|e| fam.shape_at(e)).collect()
    }
}

/// Builds the gluing system along the funnel of α ∈ (0, 1/2).
///
/// ```
/// use twobridge_farey::Fraction;
/// use twobridge_shapes::gluing_system;
///
/// // The figure-eight sibling 2/5 closes up without interior classes.
/// let sys = gluing_system(Fraction::new(2, 5));
/// assert_eq!(sys.tet_pairs(), 1);
/// assert!(sys.interior.is_empty());
/// assert_eq!(sys.closing.len(), 2);
/// ```
pub fn gluing_system(alpha: Fraction) -> GluingSystem {
    assert!(
        Fraction::ZERO < alpha && alpha < Fraction::new(1, 2),
        "gluing systems are defined for slopes strictly between 0 and 1/2, got {alpha}"
    );
    assert!(alpha.den() >= 4, "slopes 1/2 and 1/3 have no interior funnel edge");
    let edges = funnel_edges(alpha);
    let n = edges.len() - 2;
    let last = edges[n + 1];
    let hat_last = last.hat();
    let hyperbolic = alpha.num() > 1;

    // Funnel vertices in order of first appearance.
    let mut vertices: Vec<Fraction> = Vec::new();
    for e in &edges {
        for v in [e.left(), e.right()] {
            if !vertices.contains(&v) {
                vertices.push(v);
            }
        }
    }

    let min_interior = |beta: Fraction| -> usize {
        (1..=n)
            .find(|&i| edges[i].contains(beta))
            .unwrap_or_else(|| panic!("vertex {beta} lies on no interior edge of {alpha}"))
    };
    let max_interior = |beta: Fraction| -> usize {
        (1..=n)
            .rev()
            .find(|&i| edges[i].contains(beta))
            .unwrap_or_else(|| panic!("vertex {beta} lies on no interior edge of {alpha}"))
    };

    let mut interior = Vec::new();
    for &beta in &vertices {
        if beta == Fraction::ZERO
            || beta == Fraction::ONE
            || last.contains(beta)
            || beta == hat_last
        {
            continue;
        }
        let k = min_interior(beta);
        let l = max_interior(beta);
        interior.push(GlueEquation {
            label: GlueLabel::Vertex(beta),
            target: 1,
            lead: k - 1,
            trail: l + 1,
            run: (k, l),
            left: beta < alpha,
        });
    }
    if hyperbolic && hat_last != Fraction::ZERO {
        // 0 leaves the funnel before the end; its tunnel class closes up
        // already in the unfolded complex.
        let l0 = max_interior(Fraction::ZERO);
        interior.push(GlueEquation {
            label: GlueLabel::UpperTunnel,
            target: -1,
            lead: 1,
            trail: l0 + 1,
            run: (1, l0),
            left: true,
        });
    }

    let mut closing = Vec::new();
    if hyperbolic {
        if hat_last == Fraction::ZERO {
            closing.push(GlueEquation {
                label: GlueLabel::UpperTunnel,
                target: -1,
                lead: 1,
                trail: n + 1,
                run: (1, n),
                left: true,
            });
        } else {
            let k = min_interior(hat_last);
            closing.push(GlueEquation {
                label: GlueLabel::Vertex(hat_last),
                target: 1,
                lead: k - 1,
                trail: n + 1,
                run: (k, n),
                left: hat_last < alpha,
            });
        }
        let low = last.minus();
        let k = min_interior(low);
        closing.push(GlueEquation {
            label: GlueLabel::LowerTunnel,
            target: -1,
            lead: k - 1,
            trail: n,
            run: (k, n),
            left: low < alpha,
        });
    }

    GluingSystem { alpha, edges, interior, closing }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interior_equations_vanish_identically_for_ten_thirtythirds() {
        let sys = gluing_system(Fraction::new(10, 33));
        let mut fam = Families::new();
        let shapes = sys.exact_shapes(&mut fam);
        assert!(!sys.interior.is_empty());
        for eq in &sys.interior {
            let r = eq.residual_exact(&shapes);
            assert!(r.is_zero(), "interior class ({}) left residual {r}", eq.label);
        }
    }

    #[test]
    fn closing_equations_reduce_to_the_slope_polynomial_for_two_fifths() {
        let sys = gluing_system(Fraction::new(2, 5));
        let mut fam = Families::new();
        let shapes = sys.exact_shapes(&mut fam);
        let q = fam.q(Fraction::new(2, 5));
        for eq in &sys.closing {
            let r = eq.residual_exact(&shapes);
            let num = r.numerator().primitive_part();
            assert!(
                num.div_exact(&q.primitive_part()).is_some(),
                "closing residual of ({}) is not divisible by Q(2/5)",
                eq.label
            );
        }
    }

    #[test]
    fn torus_slopes_build_interior_systems_only() {
        let sys = gluing_system(Fraction::new(1, 5));
        assert!(sys.closing.is_empty());
        let mut fam = Families::new();
        let shapes = sys.exact_shapes(&mut fam);
        for eq in &sys.interior {
            assert!(eq.residual_exact(&shapes).is_zero());
        }
    }
}
