//! Exact knot invariants: Fox colorings and Alexander polynomials.
//!
//! The crate works with two kinds of input:
//!
//! * knot diagrams as crossing/arc incidence ([`diagram::KnotDiagram`]), from
//!   which coloring matrices, Smith normal forms, the knot determinant and
//!   r-coloring counts are computed ([`coloring`]);
//! * pretzel knots `P(n1, ..., nN)`, for which closed forms exist both for the
//!   coloring invariants ([`pretzel`]) and, for the all-odd and one-even
//!   families, for Seifert matrices and Alexander polynomials ([`seifert`]).
//!
//! All arithmetic is exact ([`num_bigint::BigInt`] entries, integer Laurent
//! polynomials in [`laurent`]).

pub mod cli;
pub mod coloring;
pub mod diagram;
pub mod error;
pub mod laurent;
pub mod matrix;
pub mod polymatrix;
pub mod pretzel;
pub mod seifert;
pub mod smith;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use matrix::{ElemOp, IntMatrix};
pub use polymatrix::{DetMethod, PolyMatrix};
pub use smith::{smith_normal_form, DeltaProfile, SmithForm};
