//! Shape parameters, gluing equations, and geometric roots.
//!
//! This crate turns the combinatorics of a 2-bridge slope α into the data
//! of its hyperbolic structure:
//!
//! * [`shape_fn`] expresses the shape parameter Z(e) of each funnel edge as
//!   an exact rational function of the trace variable x, and
//!   [`NumFamilies`] evaluates the same quantities numerically at any
//!   complex point by running the Farey recursion on values;
//! * [`gluing_system`] assembles Thurston's gluing equations of the
//!   Sakuma–Weeks triangulation, split into the interior equations (which
//!   hold identically in ℚ(x)) and the two closing equations (equivalent to
//!   Q(α) = 0);
//! * [`geometric_root`] selects, among all roots of Q(α), the one whose
//!   tetrahedron shapes all lie in the upper half-plane — the root carrying
//!   the complete hyperbolic structure — with [`shortcut_root`] and
//!   [`geometric_root_dq`] doing the same for edge polynomials p_e and cusp
//!   discriminants D_Q(ω);
//! * [`real_locus_sample`] maps out where a shape parameter is real, the
//!   curves that confine geometric roots.

pub mod famval;
pub mod glue;
pub mod locus;
pub mod root;
pub mod shape;

pub use famval::NumFamilies;
pub use glue::{gluing_system, GlueEquation, GlueLabel, GluingSystem};
pub use locus::{real_locus_sample, LocusGrid, LocusSample};
pub use root::{
    all_roots, edge_poly, geometric_root, geometric_root_dq, interior_shapes, shortcut_root,
    FilterStep, RootReport, RootStatus, ShapeError,
};
pub use shape::{ratfn_at, shape_fn};
