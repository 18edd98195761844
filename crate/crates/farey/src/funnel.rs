//! The funnel of a slope: the chain of Farey edges cut by the vertical line
//! at α in the Farey tessellation of the hyperbolic plane.
//!
//! For α = p/q in (0, 1) the funnel is the finite sequence of edges
//! e₀ = [0, 1], e₁, …, e_{n+1}, where each edge after the first is obtained
//! by replacing one endpoint of its predecessor with the mediant, keeping α
//! strictly inside, and the process stops when the mediant hits α itself.
//! The edges e₁, …, eₙ are the *interior* edges; each one carries an ideal
//! tetrahedron on either side of the vertical plane, so the associated
//! triangulation has 2n tetrahedra.  The endpoints of the interior edges
//! group into *hubs*: fans of consecutive edges sharing a vertex, whose
//! sizes recover the continued fraction of α and whose sides alternate.

use crate::cf::continued_fraction;
use crate::fraction::Fraction;

/// One Farey edge [a, b] of the funnel, stored with a < b numerically.
///
/// The two endpoints play asymmetric roles everywhere downstream, under two
/// different orderings: by value (`left`/`right`) and by denominator
/// (`minus`/`plus`).  The sign ν records how the orderings compare, and the
/// far vertex ê = e⁺ ⊖ e⁻ completes e⁻'s Stern–Brocot triangle on the far
/// side from the mediant.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    lo: Fraction,
    hi: Fraction,
}

impl Edge {
    /// Builds the edge [a, b], reordering so the first coordinate is the
    /// numerically smaller endpoint.  Panics unless {a, b} is a Farey pair.
    pub fn new(a: Fraction, b: Fraction) -> Edge {
        assert!(a.is_farey_pair(b), "[{}, {}] is not a Farey edge", a, b);
        if a < b {
            Edge { lo: a, hi: b }
        } else {
            Edge { lo: b, hi: a }
        }
    }

    /// The numerically smaller endpoint e^L.
    pub fn left(&self) -> Fraction {
        self.lo
    }

    /// The numerically larger endpoint e^R.
    pub fn right(&self) -> Fraction {
        self.hi
    }

    /// The endpoint e⁻ of smaller denominator.  On the base edge [0, 1],
    /// where the denominators tie, e⁻ = 0.
    pub fn minus(&self) -> Fraction {
        if self.lo.den() <= self.hi.den() {
            self.lo
        } else {
            self.hi
        }
    }

    /// The endpoint e⁺ of larger denominator (e⁺ = 1 on the base edge).
    pub fn plus(&self) -> Fraction {
        if self.lo.den() <= self.hi.den() {
            self.hi
        } else {
            self.lo
        }
    }

    /// The sign ν(e) of the edge's slope in the Stern–Brocot diagram: −1
    /// when the smaller-denominator endpoint e⁻ sits to the left of e⁺
    /// (negative slope for the drawn segment), +1 otherwise.  The horizontal
    /// base edge [0, 1] has ν = +1.
    pub fn nu(&self) -> i32 {
        if self.lo.den() != self.hi.den() && self.minus() < self.plus() {
            -1
        } else {
            1
        }
    }

    /// The far vertex ê = e⁺ ⊖ e⁻, the third corner of the triangle that e⁻
    /// and e⁺ span away from their mediant.  ê([0, 1]) = ∞.
    pub fn hat(&self) -> Fraction {
        self.plus().vector_sub(self.minus())
    }

    /// The mediant e⁻ ⊕ e⁺ of the endpoints.
    pub fn mediant(&self) -> Fraction {
        self.lo.mediant(self.hi)
    }

    /// Whether v is an endpoint of this edge.
    pub fn contains(&self, v: Fraction) -> bool {
        self.lo == v || self.hi == v
    }

    /// The palindromic slope attached to e: writing e⁻ = a/b and e⁺ = c/d,
    /// this is (cd − ab)/(d² − b²).  Its geometric root is the point where
    /// the shape parameter of e degenerates to −1.
    pub fn palindrome_slope(&self) -> Fraction {
        let (m, p) = (self.minus(), self.plus());
        Fraction::new(
            p.num() * p.den() - m.num() * m.den(),
            p.den() * p.den() - m.den() * m.den(),
        )
    }
}

impl std::fmt::Display for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl std::fmt::Debug for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Display::fmt(self, f)
    }
}

/// The funnel edges e₀, …, e_{n+1} of α ∈ ℚ ∩ (0, 1).
///
/// Starts from [0, 1] and repeatedly cuts with the mediant, keeping the side
/// containing α, stopping (without recording a degenerate edge) when the
/// mediant equals α.  The result always starts with [0, 1] and ends with the
/// unique Farey edge whose mediant is α, so it has a single edge only for
/// α = 1/2.
///
/// ```
/// use twobridge_farey::{funnel_edges, Fraction};
/// let f = funnel_edges(Fraction::new(2, 7));
/// let walls: Vec<String> = f.iter().map(|e| e.to_string()).collect();
/// assert_eq!(walls, ["[0, 1]", "[0, 1/2]", "[0, 1/3]", "[1/4, 1/3]"]);
/// ```
pub fn funnel_edges(alpha: Fraction) -> Vec<Edge> {
    assert!(
        alpha > Fraction::ZERO && alpha < Fraction::ONE,
        "the funnel is defined for 0 < \u{3b1} < 1, got {}",
        alpha
    );
    let mut edges = vec![Edge::new(Fraction::ZERO, Fraction::ONE)];
    loop {
        let e = edges.last().unwrap();
        let m = e.mediant();
        if m == alpha {
            return edges;
        }
        let next = if alpha < m {
            Edge::new(e.left(), m)
        } else {
            Edge::new(m, e.right())
        };
        edges.push(next);
    }
}

/// The interior edges e₁, …, eₙ of the funnel of α (possibly empty).
pub fn interior_edges(alpha: Fraction) -> Vec<Edge> {
    let f = funnel_edges(alpha);
    f[1..f.len() - 1].to_vec()
}

/// The number of ideal tetrahedra in the triangulation attached to α: two
/// per interior funnel edge.  Panics for α = 1/2, whose funnel has no
/// geometric content.
pub fn tet_number(alpha: Fraction) -> usize {
    let f = funnel_edges(alpha);
    assert!(f.len() >= 2, "{} has a degenerate funnel", alpha);
    2 * (f.len() - 2)
}

/// The crossing number of the 2-bridge diagram of α: the sum of the partial
/// quotients of α, which is also funnel length + 1.
pub fn crossings(alpha: Fraction) -> usize {
    funnel_edges(alpha).len() + 1
}

/// The braid word of α: its partial quotients [a₁, …, a_k], read as counts
/// of alternating horizontal and vertical twist regions.
pub fn braid_word(alpha: Fraction) -> Vec<i64> {
    continued_fraction(alpha)[1..].to_vec()
}

/// Which side of the vertical line at α a hub lies on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A hub of the funnel: a vertex ω shared by a maximal fan of consecutive
/// edges (its spokes), all of which have ω as their smaller-denominator
/// endpoint.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Hub {
    /// The shared vertex ω.
    pub slope: Fraction,
    /// How many funnel edges have ω = e⁻.
    pub spokes: usize,
    /// Left when ω < α, right when ω > α.
    pub side: Side,
}

/// The hubs ω₁, …, ω_k of the funnel of α, in order of increasing
/// denominator.  Their spoke counts sum to the funnel length and recover the
/// partial quotients: a₁, …, a_{k−1}, a_k − 1.  Sides alternate, starting on
/// the left with ω₁ = 0.
///
/// ```
/// use twobridge_farey::{hubs, Fraction, Side};
/// let h = hubs(Fraction::new(24, 103));
/// let view: Vec<(String, usize, Side)> =
///     h.iter().map(|h| (h.slope.to_string(), h.spokes, h.side)).collect();
/// assert_eq!(view, [
///     ("0".to_string(), 4, Side::Left),
///     ("1/4".to_string(), 3, Side::Right),
///     ("3/13".to_string(), 2, Side::Left),
///     ("7/30".to_string(), 2, Side::Right),
/// ]);
/// ```
pub fn hubs(alpha: Fraction) -> Vec<Hub> {
    let mut out: Vec<Hub> = Vec::new();
    for e in funnel_edges(alpha) {
        let w = e.minus();
        match out.last_mut() {
            Some(h) if h.slope == w => h.spokes += 1,
            _ => out.push(Hub {
                slope: w,
                spokes: 1,
                side: if w < alpha { Side::Left } else { Side::Right },
            }),
        }
    }
    // Denominators tie only between the hubs 0 and 1 (for α > 1/2).
    debug_assert!(out.windows(2).all(|w| w[0].slope.den() <= w[1].slope.den()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_edge_orientation() {
        let e0 = Edge::new(Fraction::ONE, Fraction::ZERO);
        assert_eq!(e0.minus(), Fraction::ZERO);
        assert_eq!(e0.plus(), Fraction::ONE);
        // the base edge is horizontal, so its slope sign is +1
        assert_eq!(e0.nu(), 1);
        assert_eq!(e0.hat(), Fraction::INFINITY);
    }

    #[test]
    fn nu_flips_with_value_order() {
        // [1/2, 1/3]: e⁻ = 1/2, e⁺ = 1/3, and e⁻ > e⁺.
        let e = Edge::new(Fraction::new(1, 2), Fraction::new(1, 3));
        assert_eq!(e.minus(), Fraction::new(1, 2));
        assert_eq!(e.plus(), Fraction::new(1, 3));
        assert_eq!(e.nu(), 1);
        // the triangle over [1/2, 1/3] away from the mediant 2/5 is {1/2, 1/3, 0}
        assert_eq!(e.hat(), Fraction::ZERO);
    }

    #[test]
    fn half_has_a_single_wall() {
        assert_eq!(funnel_edges(Fraction::new(1, 2)).len(), 1);
        assert_eq!(crossings(Fraction::new(1, 2)), 2);
    }

    #[test]
    fn palindrome_slope_of_the_big_edge() {
        let e = Edge::new(Fraction::new(133, 281), Fraction::new(195, 412));
        assert_eq!(e.palindrome_slope(), Fraction::new(42967, 90783));
    }
}
