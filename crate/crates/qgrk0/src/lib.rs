//! Exact arithmetic for the ordered Grothendieck group of a graded algebra
//! presented by degree data.
//!
//! Given the degrees `(d_1, ..., d_g)` of the generators, the crate
//! computes with the group `Z[t, t^-1]/(f)` where
//! `f(t) = t^d - sum_i t^{d_i} + 1`, ordered by the sign of representatives
//! at the smallest positive root of `f`. The pieces:
//!
//! * [`degree`] — validation of degree data and the defining polynomial.
//! * [`hilbert`] — coefficient streams of `1/f` and of `p/f`.
//! * [`roots`] — exact root isolation, sign determination, integer
//!   factorization of `f`, and numeric certification of the max-modulus
//!   root structure.
//! * [`qgraph`] — the two directed graphs attached to the degree data, their
//!   characteristic polynomial by two independent routes, and
//!   Perron-Frobenius certification.
//! * [`k0`] — canonical forms and the positive cone in `Z[t,t^-1]/(f)`.
//! * [`realize`] — construction of explicit graded-module descriptions
//!   realizing positive classes.
//! * [`cli`] — the command-line surface; see the `qgrk0` binary.

pub mod cli;
pub mod degree;
pub mod hilbert;
pub mod jsonint;
pub mod k0;
pub mod poly;
pub mod qgraph;
pub mod realize;
pub mod roots;
pub mod selftest;

pub use degree::{validate_degrees, DegreeData, DegreeError};
pub use poly::{IntPoly, LaurentPoly, PolyParseError};
