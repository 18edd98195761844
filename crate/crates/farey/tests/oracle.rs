//! Cross-checks of the Farey combinatorics against independent brute-force
//! constructions that never call the code paths they verify.

use twobridge_farey::{
    center_corner_index, continued_fraction, from_continued_fraction, funnel_edges, hubs,
    Fraction, Side,
};

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// All slopes p/q in lowest terms with 0 < p/q < 1 and q ≤ qmax.
fn slopes(qmax: i64) -> Vec<Fraction> {
    let mut out = Vec::new();
    for q in 2..=qmax {
        for p in 1..q {
            if gcd(p, q) == 1 {
                out.push(Fraction::new(p, q));
            }
        }
    }
    out
}

/// Brute force: the funnel of α is the set of Farey edges [u, v] with
/// u < α < v, here found by scanning every pair of slopes in [0, 1] with
/// denominators up to den(α), and ordered by decreasing interval width.
#[test]
fn funnel_matches_exhaustive_edge_search() {
    for alpha in slopes(40) {
        let q = alpha.den();
        let mut verts = vec![Fraction::ZERO, Fraction::ONE];
        verts.extend(slopes(q));
        let mut found: Vec<(Fraction, Fraction)> = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                let (lo, hi) = if u < v { (u, v) } else { (v, u) };
                if lo < alpha && alpha < hi && lo.is_farey_pair(hi) {
                    found.push((lo, hi));
                }
            }
        }
        // Nested intervals: sorting by width (descending) linearises the chain.
        found.sort_by(|a, b| {
            let wa = (a.1.num() * a.0.den() - a.0.num() * a.1.den()) * b.0.den() * b.1.den();
            let wb = (b.1.num() * b.0.den() - b.0.num() * b.1.den()) * a.0.den() * a.1.den();
            wb.cmp(&wa)
        });
        let computed: Vec<(Fraction, Fraction)> =
            funnel_edges(alpha).iter().map(|e| (e.left(), e.right())).collect();
        assert_eq!(computed, found, "funnel mismatch at {}", alpha);
    }
}

/// Brute force: the center of γ is the unique Farey parent that can be
/// subtracted from γ at least twice, and the corner is what remains after
/// subtracting it as often as possible.
#[test]
fn center_corner_matches_parent_search() {
    for gamma in slopes(60) {
        let (p, q) = (gamma.num(), gamma.den());
        let mut parents = Vec::new();
        for b in 1..q {
            for a in 0..=b {
                if gcd(a, b) == 1 && (a * q - p * b).abs() == 1 {
                    parents.push((a, b));
                }
            }
        }
        assert_eq!(parents.len(), 2, "{} should have two parents", gamma);

        let mut witness = None;
        for &(a, b) in &parents {
            // Subtract (a, b) from (p, q) while the remainder is a valid
            // nonnegative primitive vector.
            let mut j = 0;
            while p - (j + 1) * a >= 0 && q - (j + 1) * b >= 0 && (p - (j + 1) * a, q - (j + 1) * b) != (0, 0)
            {
                j += 1;
            }
            if j >= 2 {
                assert!(witness.is_none(), "two admissible centers for {}", gamma);
                witness = Some((Fraction::new(a, b), Fraction::new(p - j * a, q - j * b), j));
            }
        }
        let expected = witness.expect("no admissible center");
        assert_eq!(center_corner_index(gamma), expected, "decomposition mismatch at {}", gamma);
    }
}

/// The hub slopes are exactly the convergents of α (all but the last), their
/// spoke counts are the partial quotients with the final one reduced by one,
/// and the sides alternate starting on the left.
#[test]
fn hubs_match_convergents_and_partial_quotients() {
    for alpha in slopes(60) {
        let cf = continued_fraction(alpha);
        let k = cf.len() - 1;
        let h = hubs(alpha);
        assert_eq!(h.len(), k, "hub count at {}", alpha);
        for (j, hub) in h.iter().enumerate() {
            assert_eq!(hub.slope, from_continued_fraction(&cf[..j + 1]), "hub slope at {}", alpha);
            let expected_spokes = if j + 1 == k { cf[k] - 1 } else { cf[j + 1] };
            assert_eq!(hub.spokes as i64, expected_spokes, "spokes at {}", alpha);
            let expected_side = if j % 2 == 0 { Side::Left } else { Side::Right };
            assert_eq!(hub.side, expected_side, "side at {}", alpha);
        }
        let total: usize = h.iter().map(|h| h.spokes).sum();
        assert_eq!(total, funnel_edges(alpha).len(), "spoke total at {}", alpha);
    }
}
