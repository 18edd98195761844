//! Farey-recursive polynomial families for 2-bridge links.
//!
//! The combinatorics of a 2-bridge slope p/q (see `twobridge_farey`)
//! drives a family of recursions over the Stern–Brocot diagram.  This
//! crate computes the resulting polynomials exactly:
//!
//! * [`Families::q`]: the edge polynomial Q(p/q) ∈ ℤ[x], whose roots are
//!   the candidate cusp shapes of the 2-bridge link of slope p/q;
//! * [`Families::n`]: the numerator N(p/q) of the ideal vertex position
//!   V = N/Q;
//! * [`Families::q_disc`]: the discriminant D_Q = Q² − 4·d_Q controlling
//!   where the crossing loop holonomy becomes parabolic;
//! * [`Families::riley_p`] / [`riley`]: the classical Riley polynomial,
//!   reached through an auxiliary family over the Gaussian integers;
//! * [`q_torus`]: Chebyshev closed forms of Q(1/n) for torus links;
//! * [`RatFn`]: reduced fractions of integer polynomials, the ℚ(x)
//!   arithmetic in which shape parameters and holonomy entries live.
//!
//! All arithmetic is exact over ℤ (or ℤ[i]) with arbitrary-precision
//! coefficients; nothing here touches floating point.

pub mod chebyshev;
pub mod engine;
pub mod poly;
pub mod ratfn;
pub mod riley;
pub mod tables;

pub use chebyshev::q_torus;
pub use engine::{expected_degree, q_determinant, Families};
pub use poly::{Coeff, GaussPoly, IntPoly, ParsePolyError, Poly};
pub use ratfn::RatFn;
pub use riley::{reversed_q, riley, riley_shift, RileyShift};

// Re-exported so doc examples and downstream crates can name slopes without
// importing the combinatorics crate separately.
pub use twobridge_farey::Fraction;
