//! Arbitrary-precision numerics for hyperbolic geometry computations.
//!
//! This crate supplies the floating-point layer used by the geometric
//! pipeline: an explicit precision/rounding context ([`NumCtx`]), complex
//! arithmetic ([`Cx`]), simultaneous root finding for the integer and
//! complex polynomials produced by the recursive trace machinery
//! ([`int_roots`], [`cx_roots`]), and the special functions that express
//! hyperbolic volume ([`bloch_wigner`], [`lobachevsky`]).
//!
//! Precision is always explicit: every operation takes the context, and
//! results are rounded to the context precision.  Nothing here depends on
//! the ambient hardware float format except the diagnostic [`to_f64`]
//! conversions.

pub mod ctx;
pub mod cx;
pub mod dilog;
pub mod roots;

pub use ctx::{bigint_to_bigfloat, to_f64, NumCtx};
pub use cx::Cx;
pub use dilog::{bloch_wigner, clausen2, li2, lobachevsky};
pub use roots::{cx_roots, horner, horner_int, int_roots, RootError};

pub use astro_float::BigFloat;
