//! Exact one-dimensional metrical geometry over any field of characteristic
//! not two.
//!
//! The affine line carries quadrance `Q = (x2 - x1)^2`; the projective line
//! carries a projective quadrance for every non-degenerate form `(d:e:f)`.
//! On top of these sit the Triple and Quadruple quad/spread formulas, the
//! spread polynomials, the blue/red/green chromogeometry and the three
//! projective isometry groups. Everything is computed exactly, over
//! arbitrary-precision rationals or over `F_p` for odd primes `p`, and the
//! [`verify`] module checks every identity by seeded random sampling over the
//! rationals and exhaustive enumeration over prime fields.

pub mod affine;
pub mod chromo;
pub mod error;
pub mod field;
pub mod isometry;
mod linalg;
pub mod projective;
pub mod spread_poly;
pub mod verify;

pub use affine::{AffineIsometry, AffinePoint, Parity};
pub use chromo::Color;
pub use error::{Error, Result};
pub use field::{make_context, FieldContext, FieldElement};
pub use isometry::{IsometryKind, ProjIsometry, ProjMatrix};
pub use projective::{Form, ProjPoint};
pub use spread_poly::IntPolynomial;
pub use verify::{Suite, VerificationReport, VerifyOptions};

/// Result of a Quadruple quad or Quadruple spread check on four points.
///
/// `value` is the quadruple function evaluated at the four cyclic
/// quadrances; `q13` and `q24` are the solving fractions for the diagonal
/// quadrances, absent when their denominators vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadrupleCheck {
    pub value: FieldElement,
    pub q13: Option<FieldElement>,
    pub q24: Option<FieldElement>,
}
