//! Farey/Stern–Brocot combinatorics for slopes of 2-bridge links.
//!
//! A 2-bridge link is indexed by a fraction α = p/q in lowest terms, and all
//! of the combinatorial data attached to it here — continued fractions,
//! Stern–Brocot parents, the funnel of Farey triangles above α, hubs and their
//! spokes, braid words — is derived from exact integer arithmetic on the pair
//! (p, q).  Fractions are treated as primitive integer vectors (p, q) with
//! q ≥ 0, so that the Farey sum (mediant) is vector addition and the Farey
//! condition |ps − rq| = 1 is a determinant.
//!
//! The key objects:
//!
//! * [`Fraction`] — a slope in ℚ ∪ {∞}, always in lowest terms.
//! * [`cf::continued_fraction`] — the canonical expansion [a₀; a₁, …, a_k]
//!   with every term ≥ 1 and the last term ≥ 2.
//! * [`cf::center_corner_index`] — the (center, corner, index) decomposition
//!   γ = κ ⊕ʲ α that drives every Farey-recursive computation downstream.
//! * [`funnel::funnel_edges`] — the strip of Farey triangles between the edge
//!   [0, 1] and the slope α; its interior edges index the tetrahedra of the
//!   Sakuma–Weeks triangulation of the 2-bridge link complement.
//! * [`funnel::hubs`] — the funnel's high-valence vertices, which correspond
//!   to the twist regions of the standard 4-plat diagram.

pub mod cf;
pub mod fraction;
pub mod funnel;

pub use cf::{
    center_corner_index, continued_fraction, corners, from_continued_fraction, is_palindrome,
    reverse,
};
pub use fraction::Fraction;
pub use funnel::{braid_word, crossings, funnel_edges, hubs, interior_edges, tet_number, Edge, Hub, Side};
