//! Reference values of Q and N for small slopes.
//!
//! Each entry is ((p, q), Q(p/q), N(p/q)) with the polynomials written in
//! the factored form in which they were hand-checked; parse the strings
//! with [`IntPoly::from_str`](crate::IntPoly) to expand them.  The slopes
//! cover ∞, 1, and every reduced slope ≤ 1/2 of denominator at most 15
//! except 7/15; values at the remaining slopes follow from the mirror
//! symmetry of the diagram.  These rows anchor the regression and
//! acceptance suites.

/// Frozen (slope, Q, N) rows; the ∞ row is encoded as (1, 0).
pub const SMALL_SLOPE_TABLE: &[((i64, i64), &str, &str)] = &[
    ((1, 0), "0", "1"),
    ((1, 1), "1", "1"),
    ((1, 2), "1", "-x + 1"),
    ((1, 3), "-x + 1", "-2x + 1"),
    ((1, 4), "-2x + 1", "x^2 - 3x + 1"),
    ((1, 5), "x^2 - 3x + 1", "(3x - 1)(x - 1)"),
    ((2, 5), "x^2 - x + 1", "(x - 1)^2"),
    ((1, 6), "(3x - 1)(x - 1)", "-x^3 + 6x^2 - 5x + 1"),
    ((1, 7), "-x^3 + 6x^2 - 5x + 1", "-(2x^2 - 4x + 1)(2x - 1)"),
    ((2, 7), "x^3 + 2x^2 - 3x + 1", "(2x - 1)^2"),
    ((3, 7), "-x^3 + 2x^2 - x + 1", "-2x^3 + 2x^2 - 2x + 1"),
    ((1, 8), "-(2x^2 - 4x + 1)(2x - 1)", "(x^3 - 9x^2 + 6x - 1)(x - 1)"),
    ((3, 8), "2x^2 - 2x + 1", "-(x^3 + x^2 - 2x + 1)(x - 1)"),
    ((1, 9), "(x^3 - 9x^2 + 6x - 1)(x - 1)", "(5x^2 - 5x + 1)(x^2 - 3x + 1)"),
    ((2, 9), "x^4 - 2x^3 + 7x^2 - 5x + 1", "(x^2 - 3x + 1)^2"),
    ((4, 9), "x^4 - 2x^3 + 3x^2 - x + 1", "x^4 - 4x^3 + 3x^2 - 2x + 1"),
    ((1, 10), "(5x^2 - 5x + 1)(x^2 - 3x + 1)", "-x^5 + 15x^4 - 35x^3 + 28x^2 - 9x + 1"),
    ((3, 10), "-(3x^2 - 3x + 1)(x^2 + x - 1)", "x^5 - 3x^4 - 3x^3 + 8x^2 - 5x + 1"),
    ((1, 11), "-x^5 + 15x^4 - 35x^3 + 28x^2 - 9x + 1", "-(x^2 - 4x + 1)(3x - 1)(2x - 1)(x - 1)"),
    ((2, 11), "x^5 + 3x^4 - 13x^3 + 16x^2 - 7x + 1", "(3x - 1)^2(x - 1)^2"),
    ((3, 11), "-x^5 - x^4 - 3x^3 + 8x^2 - 5x + 1", "-(x^4 + 4x^2 - 4x + 1)(2x - 1)"),
    ((4, 11), "x^5 - x^4 - x^3 + 4x^2 - 3x + 1", "(2x^3 + x^2 - 2x + 1)(x - 1)^2"),
    ((5, 11), "-x^5 + 3x^4 - 3x^3 + 4x^2 - x + 1", "-2x^5 + 3x^4 - 6x^3 + 4x^2 - 2x + 1"),
    ((1, 12), "-(x^2 - 4x + 1)(3x - 1)(2x - 1)(x - 1)", "x^6 - 21x^5 + 70x^4 - 84x^3 + 45x^2 - 11x + 1"),
    ((5, 12), "-(2x^2 - x + 1)(x^2 + 1)(x - 1)", "x^6 - 3x^5 + 4x^4 - 6x^3 + 5x^2 - 3x + 1"),
    ((1, 13), "x^6 - 21x^5 + 70x^4 - 84x^3 + 45x^2 - 11x + 1", "(7x^3 - 14x^2 + 7x - 1)(x^3 - 6x^2 + 5x - 1)"),
    ((2, 13), "x^6 - 3x^5 + 22x^4 - 40x^3 + 29x^2 - 9x + 1", "(x^3 - 6x^2 + 5x - 1)^2"),
    ((3, 13), "x^6 - 5x^5 + 6x^4 - 16x^3 + 17x^2 - 7x + 1", "3x^6 - 6x^5 + 14x^4 - 28x^3 + 23x^2 - 8x + 1"),
    ((4, 13), "x^6 + 5x^5 - 6x^4 - 4x^3 + 9x^2 - 5x + 1", "-x^6 + 8x^5 - 4x^4 - 10x^3 + 13x^2 - 6x + 1"),
    ((5, 13), "x^6 - x^5 + 2x^4 - 4x^3 + 5x^2 - 3x + 1", "x^6 + 2x^4 - 6x^3 + 7x^2 - 4x + 1"),
    ((6, 13), "x^6 - 3x^5 + 6x^4 - 4x^3 + 5x^2 - x + 1", "x^6 - 6x^5 + 6x^4 - 8x^3 + 5x^2 - 2x + 1"),
    ((1, 14), "(7x^3 - 14x^2 + 7x - 1)(x^3 - 6x^2 + 5x - 1)", "-(x^4 - 24x^3 + 26x^2 - 9x + 1)(x^2 - 3x + 1)(x - 1)"),
    ((3, 14), "-(x^3 + 6x^2 - 5x + 1)(x^3 - 2x^2 + 3x - 1)", "(x^5 + x^4 - 6x^3 + 11x^2 - 6x + 1)(x^2 - 3x + 1)"),
    ((5, 14), "-(x^3 - 4x^2 + 3x - 1)(x^3 - x + 1)", "-(x^6 + 3x^5 - 5x^4 - x^3 + 6x^2 - 4x + 1)(x - 1)"),
    ((1, 15), "-(x^4 - 24x^3 + 26x^2 - 9x + 1)(x^2 - 3x + 1)(x - 1)", "-(2x^4 - 16x^3 + 20x^2 - 8x + 1)(2x^2 - 4x + 1)(2x - 1)"),
    ((2, 15), "x^7 + 4x^6 - 34x^5 + 86x^4 - 91x^3 + 46x^2 - 11x + 1", "(2x^2 - 4x + 1)^2(2x - 1)^2"),
    ((4, 15), "(x^4 + 2x^2 - 3x + 1)(x^3 + 4x^2 - 4x + 1)", "(2x^4 + 4x^2 - 4x + 1)(2x - 1)^2"),
];
