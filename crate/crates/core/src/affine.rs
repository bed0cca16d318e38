//! The affine line: quadrance, the Triple and Quadruple quad formulas, the
//! Heron and Brahmagupta factorizations, and affine isometries.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{same_context, FieldContext, FieldElement};
use crate::linalg::det;
use crate::QuadrupleCheck;

/// A point `[x]` of the affine line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffinePoint(pub FieldElement);

impl AffinePoint {
    pub fn new(x: FieldElement) -> Self {
        AffinePoint(x)
    }

    pub fn x(&self) -> &FieldElement {
        &self.0
    }

    pub fn parse(ctx: &FieldContext, s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(s);
        Ok(AffinePoint(ctx.parse_element(inner)?))
    }
}

impl fmt::Display for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `Q(A1, A2) = (x2 - x1)^2`.
pub fn quadrance(a1: &AffinePoint, a2: &AffinePoint) -> Result<FieldElement> {
    same_context([&a1.0, &a2.0])?;
    Ok((&a2.0 - &a1.0).square())
}

/// Archimedes' function `A(a,b,c) = (a+b+c)^2 - 2(a^2+b^2+c^2)`.
///
/// Operands must share a field.
pub fn archimedes(a: &FieldElement, b: &FieldElement, c: &FieldElement) -> FieldElement {
    let sum = a + b + c;
    sum.square() - (a.square() + b.square() + c.square()).times(2)
}

/// The five alternate expressions of Archimedes' function, in order:
/// `4ab - (a+b-c)^2`, `2(ab+bc+ca) - (a^2+b^2+c^2)`,
/// `4(ab+bc+ca) - (a+b+c)^2`, the 2x2 determinant and the negated 4x4
/// determinant.
pub fn archimedes_alternates(a: &FieldElement, b: &FieldElement, c: &FieldElement) -> [FieldElement; 5] {
    let zero = a.zero_like();
    let one = a.one_like();
    let pairs = a * b + b * c + c * a;
    let squares = a.square() + b.square() + c.square();
    let abc = a + b - c;
    let two_by_two = vec![vec![a.times(2), abc.clone()], vec![abc.clone(), b.times(2)]];
    let cayley_menger = vec![
        vec![zero.clone(), a.clone(), b.clone(), one.clone()],
        vec![a.clone(), zero.clone(), c.clone(), one.clone()],
        vec![b.clone(), c.clone(), zero.clone(), one.clone()],
        vec![one.clone(), one.clone(), one, zero],
    ];
    [
        (a * b).times(4) - abc.square(),
        pairs.times(2) - squares,
        pairs.times(4) - (a + b + c).square(),
        det(&two_by_two),
        -det(&cayley_menger),
    ]
}

/// `{a, b, c}` is a quad triple when `A(a,b,c) = 0`.
pub fn is_quad_triple(a: &FieldElement, b: &FieldElement, c: &FieldElement) -> bool {
    archimedes(a, b, c).is_zero()
}

/// `(d1+d2+d3)(-d1+d2+d3)(d1-d2+d3)(d1+d2-d3)`, which equals
/// `A(d1^2, d2^2, d3^2)`.
pub fn heron_product(d1: &FieldElement, d2: &FieldElement, d3: &FieldElement) -> FieldElement {
    (d1 + d2 + d3) * (d2 + d3 - d1) * (d1 - d2 + d3) * (d1 + d2 - d3)
}

/// Solves two quad triples `{a,b,x}`, `{c,d,x}` for their common `x`:
/// `x = ((a-b)^2 - (c-d)^2) / (2(a+b-c-d))`.
pub fn solve_quad_triple_pair(
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
    d: &FieldElement,
) -> Result<FieldElement> {
    same_context([a, b, c, d])?;
    let den = (a + b - c - d).times(2);
    if den.is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    ((a - b).square() - (c - d).square()).checked_div(&den)
}

/// The Quadruple quad function
/// `((a+b+c+d)^2 - 2(a^2+b^2+c^2+d^2))^2 - 64abcd`.
pub fn quadruple_quad_fn(a: &FieldElement, b: &FieldElement, c: &FieldElement, d: &FieldElement) -> FieldElement {
    let inner = (a + b + c + d).square() - (a.square() + b.square() + c.square() + d.square()).times(2);
    inner.square() - (a * b * c * d).times(64)
}

/// Left side of the substituted Two quad triples equation,
/// `((a-b)^2 - (c-d)^2 - 2(a+b-c-d)(a+b))^2 - 16ab(a+b-c-d)^2`; it rearranges
/// to [`quadruple_quad_fn`].
pub fn two_quad_triples_lhs(a: &FieldElement, b: &FieldElement, c: &FieldElement, d: &FieldElement) -> FieldElement {
    let gap = a + b - c - d;
    let first = (a - b).square() - (c - d).square() - (&gap * (a + b)).times(2);
    first.square() - (a * b * gap.square()).times(16)
}

/// Quadruple quad formula for four points: the function value at
/// `(Q12, Q23, Q34, Q14)` together with the fractions for `Q13` and `Q24`.
pub fn quadruple_quad_check(points: &[AffinePoint; 4]) -> Result<QuadrupleCheck> {
    same_context(points.iter().map(|p| &p.0))?;
    let q = |i: usize, j: usize| quadrance(&points[i], &points[j]);
    let (q12, q23, q34, q14) = (q(0, 1)?, q(1, 2)?, q(2, 3)?, q(0, 3)?);
    Ok(QuadrupleCheck {
        value: quadruple_quad_fn(&q12, &q23, &q34, &q14),
        q13: solve_quad_triple_pair(&q12, &q23, &q34, &q14).ok(),
        q24: solve_quad_triple_pair(&q23, &q34, &q12, &q14).ok(),
    })
}

/// The eight-factor product of Brahmagupta's identity, which equals
/// `quadruple_quad_fn(d12^2, d23^2, d34^2, d14^2)`.
pub fn brahmagupta_product(
    d12: &FieldElement,
    d23: &FieldElement,
    d34: &FieldElement,
    d14: &FieldElement,
) -> FieldElement {
    let plus = (d14 + d23 + d34 - d12) * (d12 - d14 + d23 + d34) * (d12 + d14 - d23 + d34) * (d12 + d14 + d23 - d34);
    let minus = (d12 + d14 + d23 + d34) * (d12 - d14 - d23 + d34) * (d12 - d14 + d23 - d34) * (d23 - d14 - d12 + d34);
    plus * minus
}

/// Whether an affine isometry keeps or reverses orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    /// `[x] -> [x + shift]`
    Translation,
    /// `[x] -> [shift - x]`
    Reflection,
}

impl Parity {
    fn sign(self) -> i64 {
        match self {
            Parity::Translation => 1,
            Parity::Reflection => -1,
        }
    }

    fn then(self, other: Parity) -> Parity {
        if self == other {
            Parity::Translation
        } else {
            Parity::Reflection
        }
    }
}

/// An isometry `x -> ±x + shift` of the affine line. These are all of them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineIsometry {
    pub parity: Parity,
    pub shift: FieldElement,
}

impl AffineIsometry {
    pub fn translation(shift: FieldElement) -> Self {
        AffineIsometry {
            parity: Parity::Translation,
            shift,
        }
    }

    pub fn reflection(shift: FieldElement) -> Self {
        AffineIsometry {
            parity: Parity::Reflection,
            shift,
        }
    }

    pub fn identity(ctx: &FieldContext) -> Self {
        Self::translation(ctx.zero())
    }

    pub fn apply(&self, a: &AffinePoint) -> Result<AffinePoint> {
        same_context([&self.shift, &a.0])?;
        Ok(AffinePoint(a.0.times(self.parity.sign()) + &self.shift))
    }

    /// The map "first `self`, then `then`": `(e1 e2, e2 a1 + a2)`.
    pub fn compose(&self, then: &AffineIsometry) -> Result<AffineIsometry> {
        same_context([&self.shift, &then.shift])?;
        Ok(AffineIsometry {
            parity: self.parity.then(then.parity),
            shift: self.shift.times(then.parity.sign()) + &then.shift,
        })
    }

    pub fn inverse(&self) -> AffineIsometry {
        match self.parity {
            Parity::Translation => Self::translation(-&self.shift),
            Parity::Reflection => self.clone(),
        }
    }

    /// Recovers the isometry sending `[0]` to `image_o` and `[1]` to `image_i`.
    pub fn classify(image_o: &AffinePoint, image_i: &AffinePoint) -> Result<AffineIsometry> {
        let q = quadrance(image_o, image_i)?;
        if !q.is_one() {
            return Err(Error::NotIsometry(format!("Q([{image_o}], [{image_i}]) = {q}, not 1")));
        }
        let step = &image_i.0 - &image_o.0;
        Ok(if step.is_one() {
            Self::translation(image_o.0.clone())
        } else {
            Self::reflection(image_o.0.clone())
        })
    }

    /// Parses `t:<shift>` or `r:<shift>`.
    pub fn parse(ctx: &FieldContext, s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once(':') {
            Some(("t", v)) => Ok(Self::translation(ctx.parse_element(v)?)),
            Some(("r", v)) => Ok(Self::reflection(ctx.parse_element(v)?)),
            _ => Err(Error::parse(s, "expected t:<shift> or r:<shift>")),
        }
    }
}

impl fmt::Display for AffineIsometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.parity {
            Parity::Translation => "t",
            Parity::Reflection => "r",
        };
        write!(f, "{tag}:{}", self.shift)
    }
}
