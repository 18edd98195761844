//! Locating the geometric root of a slope polynomial.
//!
//! Q(α) has many complex roots, but (for a hyperbolic slope α) exactly one
//! of them gives every tetrahedron of the Sakuma–Weeks triangulation a shape
//! in the upper half-plane — the root at which the gluing produces the
//! complete hyperbolic structure.  [`geometric_root`] finds all roots, then
//! eliminates candidates edge by edge until a single one survives the
//! positivity filter, escalating precision if the test is ever ambiguous.
//! The same machinery selects the shortcut root of an edge polynomial
//! p_e and, with a continuation oracle, the cusp root of a discriminant
//! D_Q(ω) = Q(ω)² − 4·d_Q(ω).

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;
use twobridge_farey::{
    continued_fraction, from_continued_fraction, funnel_edges, Edge, Fraction,
};
use twobridge_frf::{q_determinant, Families, IntPoly};
use twobridge_numeric::{bigint_to_bigfloat, horner_int, int_roots, to_f64, Cx, NumCtx, RootError};

use crate::famval::NumFamilies;

/// Failure modes of geometric root selection.
#[derive(Debug, Error)]
pub enum ShapeError {
    #[error("root finding failed: {0}")]
    Roots(#[from] RootError),
    #[error(
        "the positivity filter left {survivors} candidate roots for {alpha} \
         at {precision} bits; the slope polynomial may be degenerate"
    )]
    FilterAmbiguity { alpha: Fraction, survivors: usize, precision: usize },
    #[error("the cusp-root continuation for {omega} did not converge")]
    NoConvergence { omega: Fraction },
}

/// How the representative root of a report was chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootStatus {
    /// A unique root passed the geometric selection.
    Geometric,
    /// Non-hyperbolic torus slope 1/q: all roots are real and no geometric
    /// root exists; the conventional value ¼·sec²(π/q) is reported instead.
    Degenerate,
}

/// One elimination made by the positivity filter.
#[derive(Debug, Clone, Copy)]
pub struct FilterStep {
    /// Index into the report's root list.
    pub root: usize,
    /// The interior funnel edge (1-based) whose shape parameter failed the
    /// positive-imaginary-part test; 0 means the candidate root itself lay
    /// outside the upper half-plane.
    pub edge: usize,
    /// The offending imaginary part, for diagnostics.
    pub imag: f64,
}

/// The outcome of root finding and geometric selection for one polynomial.
#[derive(Debug, Clone)]
pub struct RootReport {
    /// The slope the polynomial belongs to (the palindrome slope for edge
    /// polynomials, the limit slope for discriminants).
    pub alpha: Fraction,
    /// The polynomial whose roots were computed.
    pub poly: IntPoly,
    /// All distinct complex roots, sorted by real then imaginary part.
    pub roots: Vec<Cx>,
    /// Multiplicity of each root in `poly`.
    pub multiplicities: Vec<u32>,
    /// Index of the selected geometric root, if one exists.
    pub selected: Option<usize>,
    /// The conventional value reported for degenerate (torus) slopes.
    pub conventional: Option<Cx>,
    pub status: RootStatus,
    /// Shape parameters Z(e₁), …, Z(e_n) at the selected root (slope
    /// reports only).
    pub shapes: Vec<Cx>,
    /// Why each unselected candidate was eliminated (slope reports only).
    pub eliminated: Vec<FilterStep>,
    /// |poly(value)| / max|coefficient|, the relative residual at the
    /// representative root.
    pub residual: f64,
    /// Working precision (bits) at which the selection succeeded.
    pub precision: usize,
}

impl RootReport {
    /// The representative root: the selected geometric root if one exists,
    /// otherwise the conventional degenerate value.
    pub fn value(&self) -> Option<&Cx> {
        match self.selected {
            Some(i) => Some(&self.roots[i]),
            None => self.conventional.as_ref(),
        }
    }
}

/// All distinct roots of an integer polynomial with their multiplicities,
/// sorted by real then imaginary part.
///
/// Multiplicities are separated first (a cheap modular certificate skips
/// the exact squarefree factorization whenever the polynomial is already
/// squarefree), so the iteration only ever polishes simple roots.
pub fn all_roots(poly: &IntPoly, ctx: &NumCtx) -> Result<(Vec<Cx>, Vec<u32>), ShapeError> {
    assert!(!poly.is_zero(), "the zero polynomial has no well-defined roots");
    if poly.degree() == Some(0) {
        return Ok((Vec::new(), Vec::new()));
    }
    let factors: Vec<(IntPoly, u32)> = if certified_squarefree(poly) {
        vec![(poly.clone(), 1)]
    } else {
        poly.squarefree_factorization()
    };
    let mut pairs: Vec<(Cx, u32)> = Vec::new();
    for (f, m) in factors {
        for r in int_roots(f.coeffs(), ctx)? {
            pairs.push((r, m));
        }
    }
    pairs.sort_by(|a, b| {
        let (ar, ai) = a.0.to_f64s();
        let (br, bi) = b.0.to_f64s();
        ar.total_cmp(&br).then(ai.total_cmp(&bi))
    });
    Ok(pairs.into_iter().unzip())
}

/// The geometric root of Q(α) for α ∈ (0, 1/2).
///
/// For a hyperbolic slope (numerator > 1) the unique root whose induced
/// tetrahedron shapes all lie in the upper half-plane is selected; the
/// report records the shapes and the elimination trace.  For a torus slope
/// 1/q all roots are real, no selection is made, and the conventional value
/// ¼·sec²(π/q) is reported.
///
/// ```
/// use twobridge_farey::Fraction;
/// use twobridge_frf::Families;
/// use twobridge_numeric::{to_f64, NumCtx};
/// use twobridge_shapes::geometric_root;
///
/// let ctx = NumCtx::new(128);
/// let mut fam = Families::new();
/// let rep = geometric_root(&mut fam, Fraction::new(1, 4), &ctx).unwrap();
/// assert!((to_f64(&rep.value().unwrap().re) - 0.5).abs() < 1e-30);
/// ```
pub fn geometric_root(
    fam: &mut Families,
    alpha: Fraction,
    ctx: &NumCtx,
) -> Result<RootReport, ShapeError> {
    assert!(
        Fraction::ZERO < alpha && alpha < Fraction::new(1, 2),
        "geometric roots are defined for slopes strictly between 0 and 1/2, got {alpha}"
    );
    let poly = (*fam.q(alpha)).clone();
    if alpha.num() == 1 {
        // Torus slope: the roots ¼·sec²(kπ/q) are all real.
        let (roots, multiplicities) = all_roots(&poly, ctx)?;
        let q = alpha.den();
        let angle = ctx.div(&ctx.pi(), &ctx.int(q));
        let c = ctx.cos(&angle);
        let c2 = ctx.mul(&c, &c);
        let conv = Cx::from_re(ctx.div(&ctx.bf(0.25), &c2), ctx);
        let residual = relative_residual(&poly, &conv, ctx);
        return Ok(RootReport {
            alpha,
            poly,
            roots,
            multiplicities,
            selected: None,
            conventional: Some(conv),
            status: RootStatus::Degenerate,
            shapes: Vec::new(),
            eliminated: Vec::new(),
            residual,
            precision: ctx.precision(),
        });
    }
    filtered_report(alpha, &poly, ctx)
}

/// The edge polynomial p_e = d_Q(ê)·Q(e⁻)² − Q(e⁺)², which vanishes exactly
/// where the crossing loops at the two vertices of e share a trace.
///
/// ```
/// use twobridge_farey::{Edge, Fraction};
/// use twobridge_frf::Families;
/// use twobridge_shapes::edge_poly;
///
/// let mut fam = Families::new();
/// let e = Edge::new(Fraction::new(1, 3), Fraction::new(2, 5));
/// assert_eq!(edge_poly(&mut fam, &e).to_string(), "-2x^4 + 4x^3 - 4x^2 + 2x - 1");
/// ```
pub fn edge_poly(fam: &mut Families, e: &Edge) -> IntPoly {
    let d = q_determinant(e.hat());
    let qm = fam.q(e.minus());
    let qp = fam.q(e.plus());
    &(&d * &qm.pow(2)) - &qp.pow(2)
}

/// The shortcut root of an edge e: the geometric root of the palindrome
/// slope α_e of e, located among the roots of the small polynomial p_e
/// instead of the (astronomically larger) Q(α_e).
pub fn shortcut_root(fam: &mut Families, e: &Edge, ctx: &NumCtx) -> Result<RootReport, ShapeError> {
    let alpha = e.palindrome_slope();
    assert!(
        Fraction::ZERO < alpha && alpha < Fraction::new(1, 2) && alpha.num() > 1,
        "the palindrome slope {alpha} of {e} is not a hyperbolic funnel slope"
    );
    let poly = edge_poly(fam, e);
    filtered_report(alpha, &poly, ctx)
}

/// The cusp root of the discriminant D_Q(ω) = Q(ω)² − 4·d_Q(ω) for
/// ω ∈ [0, 1/2]: the root that is the limit of geometric roots 𝔷(α) as
/// α → ω along the Stern–Brocot fan below ω.
///
/// Degree-one discriminants (ω = 0) are solved exactly.  Otherwise, when a
/// unique root lies in the open positive quadrant it is selected directly;
/// failing that, geometric roots of the approximants [0; a₁, …, a_k, m] for
/// growing m single out the limit root by proximity.
pub fn geometric_root_dq(
    fam: &mut Families,
    omega: Fraction,
    ctx: &NumCtx,
) -> Result<RootReport, ShapeError> {
    assert!(
        Fraction::ZERO <= omega && omega <= Fraction::new(1, 2),
        "cusp roots are defined for slopes in [0, 1/2], got {omega}"
    );
    let poly = fam.q_disc(omega);
    if poly.degree() == Some(1) {
        // Exact rational root −c₀/c₁.
        let c0 = bigint_to_bigfloat(&poly.coeff(0));
        let c1 = bigint_to_bigfloat(&poly.coeff(1));
        let root = Cx::from_re(ctx.div(&c0, &c1).neg(), ctx);
        let residual = relative_residual(&poly, &root, ctx);
        return Ok(RootReport {
            alpha: omega,
            poly,
            roots: vec![root],
            multiplicities: vec![1],
            selected: Some(0),
            conventional: None,
            status: RootStatus::Geometric,
            shapes: Vec::new(),
            eliminated: Vec::new(),
            residual,
            precision: ctx.precision(),
        });
    }

    let (roots, multiplicities) = all_roots(&poly, ctx)?;
    let eps = ctx.pow2(-((ctx.precision() / 2) as i32));
    let positive: Vec<usize> = (0..roots.len())
        .filter(|&i| roots[i].re > eps && roots[i].im > eps)
        .collect();
    let selected = if positive.len() == 1 {
        positive[0]
    } else {
        continuation_target(fam, omega, &roots, ctx)?
    };
    let residual = relative_residual(&poly, &roots[selected], ctx);
    Ok(RootReport {
        alpha: omega,
        poly,
        roots,
        multiplicities,
        selected: Some(selected),
        conventional: None,
        status: RootStatus::Geometric,
        shapes: Vec::new(),
        eliminated: Vec::new(),
        residual,
        precision: ctx.precision(),
    })
}

/// The interior shape parameters Z(e₁), …, Z(e_n) of the funnel of α at a
/// point z, via the value recursion.
pub fn interior_shapes(alpha: Fraction, z: &Cx, ctx: &NumCtx) -> Vec<Cx> {
    let edges = funnel_edges(alpha);
    let n = edges.len() - 2;
    let mut nf = NumFamilies::new(z.clone(), ctx);
    edges[1..=n].iter().map(|e| nf.shape_at(e)).collect()
}

/// Runs the positivity filter on the roots of `poly` over the funnel of
/// `alpha`, doubling the working precision (twice) if it fails to isolate a
/// single root.
fn filtered_report(
    alpha: Fraction,
    poly: &IntPoly,
    base: &NumCtx,
) -> Result<RootReport, ShapeError> {
    let edges = funnel_edges(alpha);
    let n = edges.len() - 2;
    let mut prec = base.precision();
    let mut last_survivors = 0;
    for _attempt in 0..3 {
        let ctx = base.with_precision(prec);
        let (roots, multiplicities) = all_roots(poly, &ctx)?;
        let eps = ctx.pow2(-((prec / 2) as i32));
        let mut eliminated = Vec::new();
        let mut survivors: Vec<(usize, Vec<Cx>)> = Vec::new();
        for (idx, root) in roots.iter().enumerate() {
            if !(root.im > eps) {
                eliminated.push(FilterStep { root: idx, edge: 0, imag: to_f64(&root.im) });
                continue;
            }
            let mut nf = NumFamilies::new(root.clone(), &ctx);
            let mut shapes = Vec::with_capacity(n);
            let mut alive = true;
            for i in 1..=n {
                let z = nf.shape_at(&edges[i]);
                if !z.is_finite() || !(z.im > eps) {
                    eliminated.push(FilterStep { root: idx, edge: i, imag: to_f64(&z.im) });
                    alive = false;
                    break;
                }
                shapes.push(z);
            }
            if alive {
                survivors.push((idx, shapes));
            }
        }
        if survivors.len() == 1 {
            let (idx, shapes) = survivors.pop().unwrap();
            let residual = relative_residual(poly, &roots[idx], &ctx);
            return Ok(RootReport {
                alpha,
                poly: poly.clone(),
                roots,
                multiplicities,
                selected: Some(idx),
                conventional: None,
                status: RootStatus::Geometric,
                shapes,
                eliminated,
                residual,
                precision: prec,
            });
        }
        last_survivors = survivors.len();
        prec *= 2;
    }
    Err(ShapeError::FilterAmbiguity { alpha, survivors: last_survivors, precision: prec / 2 })
}

/// Locates the limit root by following geometric roots of the fan
/// approximants [ω's continued fraction; m] into the root list of D_Q(ω).
fn continuation_target(
    fam: &mut Families,
    omega: Fraction,
    roots: &[Cx],
    ctx: &NumCtx,
) -> Result<usize, ShapeError> {
    let terms = continued_fraction(omega);
    let mut prev: Option<(usize, f64)> = None;
    for m in [8i64, 16, 32, 64] {
        let mut t = terms.clone();
        t.push(m);
        let approx = from_continued_fraction(&t);
        let rep = geometric_root(fam, approx, ctx)?;
        let z = rep.value().expect("approximant reports carry a value").clone();
        let (idx, dist) = nearest_root(roots, &z, ctx);
        if let Some((pidx, pdist)) = prev {
            if pidx == idx && dist < pdist {
                return Ok(idx);
            }
        }
        prev = Some((idx, dist));
    }
    Err(ShapeError::NoConvergence { omega })
}

fn nearest_root(roots: &[Cx], z: &Cx, ctx: &NumCtx) -> (usize, f64) {
    let mut best = (0, f64::INFINITY);
    for (i, r) in roots.iter().enumerate() {
        let d = to_f64(&r.dist(z, ctx));
        let d = if d.is_finite() { d } else { f64::INFINITY };
        if d < best.1 {
            best = (i, d);
        }
    }
    best
}

/// |poly(z)| / max|coefficient| as an f64, for residual reporting.
fn relative_residual(poly: &IntPoly, z: &Cx, ctx: &NumCtx) -> f64 {
    let val = horner_int(poly.coeffs(), z, ctx);
    let mut scale = BigInt::zero();
    for c in poly.coeffs() {
        let a = c.abs();
        if a > scale {
            scale = a;
        }
    }
    let s = bigint_to_bigfloat(&scale);
    to_f64(&ctx.div(&val.abs(ctx), &s))
}

/// True when a modular gcd certifies gcd(f, f′) = 1, hence f squarefree.
/// `false` is inconclusive (the caller falls back to exact factorization).
fn certified_squarefree(poly: &IntPoly) -> bool {
    let deg = match poly.degree() {
        Some(d) if d >= 2 => d,
        Some(_) => return true,
        None => return false,
    };
    let der = poly.derivative();
    // Large primes keep the probability of a spurious common factor
    // negligible; soundness needs none, since only "coprime" is trusted.
    for p in [(1u64 << 61) - 1, 1_000_000_007, 998_244_353] {
        let a = reduce_mod(poly, p);
        let b = reduce_mod(&der, p);
        // The degree argument needs both leading terms to survive reduction.
        if a.len() != deg + 1 || b.len() != deg {
            continue;
        }
        let (mut x, mut y) = (a, b);
        while !y.is_empty() {
            let r = gf_rem(x, &y, p);
            x = y;
            y = r;
        }
        if x.len() == 1 {
            return true;
        }
    }
    false
}

fn reduce_mod(poly: &IntPoly, p: u64) -> Vec<u64> {
    let m = BigInt::from(p);
    let mut out: Vec<u64> = poly
        .coeffs()
        .iter()
        .map(|c| {
            let r = ((c % &m) + &m) % &m;
            r.to_u64().expect("residue fits in u64")
        })
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn modpow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Remainder of a by b in GF(p)[x], coefficients ascending.
fn gf_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let inv = modpow(b[db], p - 2, p);
    while a.len() > db {
        let da = a.len() - 1;
        let c = ((a[da] as u128 * inv as u128) % p as u128) as u64;
        if c != 0 {
            let shift = da - db;
            for i in 0..db {
                let sub = ((c as u128 * b[i] as u128) % p as u128) as u64;
                a[shift + i] = ((a[shift + i] + p) - sub) % p;
            }
        }
        a.pop();
        while a.last() == Some(&0) {
            a.pop();
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_certificate_matches_exact_factorization() {
        // (x − 1)²(x² + 1) is not squarefree; x² − x + 1 is.
        let x = IntPoly::var();
        let one = IntPoly::one();
        let sq = (&x - &one).pow(2);
        let p = &sq * &(&(&x * &x) + &one);
        assert!(!certified_squarefree(&p));
        let q = &(&(&x * &x) - &x) + &one;
        assert!(certified_squarefree(&q));
    }

    #[test]
    fn all_roots_orders_and_counts_multiplicities() {
        let ctx = NumCtx::new(128);
        // x²(x − 2)³: roots 0 (double) and 2 (triple).
        let x = IntPoly::var();
        let p = &x.pow(2) * &(&x - &IntPoly::constant(BigInt::from(2))).pow(3);
        let (roots, mults) = all_roots(&p, &ctx).unwrap();
        assert_eq!(mults, vec![2, 3]);
        assert!(to_f64(&roots[0].abs(&ctx)) < 1e-30);
        assert!((to_f64(&roots[1].re) - 2.0).abs() < 1e-30);
    }
}
