//! Sampling the real locus of a shape parameter.
//!
//! The set {z ∈ ℍ² : Z(e)(z) ∈ ℝ} cuts the upper half-plane into regions on
//! which Im Z(e) keeps a constant sign.  For the first funnel edges these
//! loci are classical circles (Z([0,1/2]) = x is real only on ℝ itself;
//! Z([1/2,1/3]) is real exactly on the unit circle; Z([0,1/3]) on the
//! circle of radius 1/2 about 1/2), and in general they organize where
//! geometric roots can and cannot lie.  This module classifies a rectangular
//! grid of sample points by the sign of Im Z(e) and emits midpoints of
//! grid segments where the sign flips, giving a plottable approximation of
//! the locus.

use twobridge_farey::Edge;
use twobridge_frf::Families;
use twobridge_numeric::{to_f64, Cx, NumCtx};

use crate::shape::{ratfn_at, shape_fn};

/// A rectangular sampling window with its resolution.  Samples are taken at
/// cell centers, so a window touching the real axis never evaluates on it.
#[derive(Debug, Clone, Copy)]
pub struct LocusGrid {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub cols: usize,
    pub rows: usize,
}

impl LocusGrid {
    /// A square window over [−1.25, 1.25] × (0, 1.25], fine enough to see
    /// the classical circles.
    pub fn standard() -> LocusGrid {
        LocusGrid { re_min: -1.25, re_max: 1.25, im_min: 0.0, im_max: 1.25, cols: 100, rows: 50 }
    }

    /// The sample point at column c, row r (cell centers).
    pub fn point(&self, c: usize, r: usize) -> (f64, f64) {
        let dx = (self.re_max - self.re_min) / self.cols as f64;
        let dy = (self.im_max - self.im_min) / self.rows as f64;
        (self.re_min + (c as f64 + 0.5) * dx, self.im_min + (r as f64 + 0.5) * dy)
    }
}

/// The classified grid: `signs[r][c]` is the sign of Im Z(e) at the sample
/// point (−1, 0, +1; 0 also flags poles), and `boundary` collects midpoints
/// of horizontally or vertically adjacent sample pairs with opposite signs.
#[derive(Debug, Clone)]
pub struct LocusSample {
    pub signs: Vec<Vec<i8>>,
    pub boundary: Vec<(f64, f64)>,
}

/// Classifies the grid by the sign of Im Z(e).
pub fn real_locus_sample(
    fam: &mut Families,
    e: &Edge,
    grid: &LocusGrid,
    ctx: &NumCtx,
) -> LocusSample {
    let f = shape_fn(fam, e);
    let tol = 1e-13;
    let mut signs = vec![vec![0i8; grid.cols]; grid.rows];
    for r in 0..grid.rows {
        for c in 0..grid.cols {
            let (x, y) = grid.point(c, r);
            let z = Cx::from_f64(x, y, ctx);
            let v = ratfn_at(&f, &z, ctx);
            let im = to_f64(&v.im);
            signs[r][c] = if !im.is_finite() || im.abs() <= tol {
                0
            } else if im > 0.0 {
                1
            } else {
                -1
            };
        }
    }
    let mut boundary = Vec::new();
    for r in 0..grid.rows {
        for c in 0..grid.cols {
            let s = signs[r][c];
            if c + 1 < grid.cols && s * signs[r][c + 1] == -1 {
                let (x0, y0) = grid.point(c, r);
                let (x1, _) = grid.point(c + 1, r);
                boundary.push(((x0 + x1) / 2.0, y0));
            }
            if r + 1 < grid.rows && s * signs[r + 1][c] == -1 {
                let (x0, y0) = grid.point(c, r);
                let (_, y1) = grid.point(c, r + 1);
                boundary.push((x0, (y0 + y1) / 2.0));
            }
        }
    }
    LocusSample { signs, boundary }
}

#[cfg(test)]
mod tests {
    use super::*;
    use twobridge_farey::Fraction;

    #[test]
    fn shape_of_the_base_interior_edge_has_no_locus_off_the_real_axis() {
        // Z([0, 1/2]) = x, whose imaginary part never vanishes on ℍ².
        let ctx = NumCtx::new(64);
        let mut fam = Families::new();
        let e = Edge::new(Fraction::ZERO, Fraction::new(1, 2));
        let s = real_locus_sample(&mut fam, &e, &LocusGrid::standard(), &ctx);
        assert!(s.boundary.is_empty());
    }

    #[test]
    fn locus_of_the_unit_circle_edge() {
        let ctx = NumCtx::new(64);
        let mut fam = Families::new();
        let e = Edge::new(Fraction::new(1, 2), Fraction::new(1, 3));
        let grid = LocusGrid::standard();
        let s = real_locus_sample(&mut fam, &e, &grid, &ctx);
        assert!(!s.boundary.is_empty());
        let cell = ((grid.re_max - grid.re_min) / grid.cols as f64)
            .hypot((grid.im_max - grid.im_min) / grid.rows as f64);
        for (x, y) in &s.boundary {
            let r = x.hypot(*y);
            assert!(
                (r - 1.0).abs() < cell,
                "boundary point ({x}, {y}) is not near the unit circle"
            );
        }
    }
}
