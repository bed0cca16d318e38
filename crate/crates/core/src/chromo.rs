//! Chromogeometry on the projective line: the blue, red and green forms,
//! their perpendiculars and quadrances, and the four interaction theorems.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};
use crate::projective::{Form, ProjPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Blue,
    Red,
    Green,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Blue, Color::Red, Color::Green];

    pub fn name(self) -> &'static str {
        match self {
            Color::Blue => "blue",
            Color::Red => "red",
            Color::Green => "green",
        }
    }

    /// Coefficients `(d, e, f)` of the associated form.
    pub fn coefficients(self) -> (i64, i64, i64) {
        match self {
            Color::Blue => (1, 0, 1),
            Color::Red => (1, 0, -1),
            Color::Green => (0, 1, 0),
        }
    }

    /// Value of the colour's quadratic expression at a representative,
    /// up to the constant factor 2 for green.
    fn norm(self, a: &ProjPoint) -> FieldElement {
        let (x, y) = (a.x(), a.y());
        match self {
            Color::Blue => x.square() + y.square(),
            Color::Red => x.square() - y.square(),
            Color::Green => x * y,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "blue" | "b" => Ok(Color::Blue),
            "red" | "r" => Ok(Color::Red),
            "green" | "g" => Ok(Color::Green),
            _ => Err(Error::parse(s, "expected blue, red or green")),
        }
    }
}

pub fn colored_form(c: Color, ctx: &FieldContext) -> Form {
    let (d, e, f) = c.coefficients();
    Form::from_ints(ctx, d, e, f).expect("colour forms are nonzero")
}

/// `a^b = [-y:x]`, `a^r = [y:x]`, `a^g = [x:-y]`.
pub fn perpendicular_point(c: Color, a: &ProjPoint) -> ProjPoint {
    let (x, y) = (a.x().clone(), a.y().clone());
    let (nx, ny) = match c {
        Color::Blue => (-y, x),
        Color::Red => (y, x),
        Color::Green => (x, -y),
    };
    ProjPoint::new(nx, ny).expect("perpendicular of a point is a point")
}

pub fn is_null_in(c: Color, a: &ProjPoint) -> bool {
    c.norm(a).is_zero()
}

/// Colour quadrance from the closed formulas
/// `q^b = C^2 / ((x1^2+y1^2)(x2^2+y2^2))`, `q^r = -C^2 / ((x1^2-y1^2)(x2^2-y2^2))`,
/// `q^g = -C^2 / (4 x1 y1 x2 y2)` with `C = x1 y2 - x2 y1`.
pub fn colored_quadrance(c: Color, a1: &ProjPoint, a2: &ProjPoint) -> Result<FieldElement> {
    if a1.context() != a2.context() {
        return Err(Error::MixedContexts);
    }
    let n1 = c.norm(a1);
    if n1.is_zero() {
        return Err(Error::NullPoint { arg: 1 });
    }
    let n2 = c.norm(a2);
    if n2.is_zero() {
        return Err(Error::NullPoint { arg: 2 });
    }
    let num = a1.cross(a2).square();
    match c {
        Color::Blue => num.checked_div(&(n1 * n2)),
        Color::Red => (-num).checked_div(&(n1 * n2)),
        Color::Green => (-num).checked_div(&(n1 * n2).times(4)),
    }
}

/// `1/q^b + 1/q^r + 1/q^g`.
pub fn reciprocal_sum(a1: &ProjPoint, a2: &ProjPoint) -> Result<FieldElement> {
    for c in Color::ALL {
        for (i, a) in [a1, a2].into_iter().enumerate() {
            if is_null_in(c, a) {
                return Err(Error::NullPoint { arg: i + 1 });
            }
        }
    }
    let mut total = a1.x().zero_like();
    for c in Color::ALL {
        let q = colored_quadrance(c, a1, a2)?;
        if q.is_zero() {
            return Err(Error::CoincidentPoints);
        }
        total = total + q.inv()?;
    }
    Ok(total)
}

/// Outcome of checking one instance of a theorem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TheoremInstance {
    Holds,
    Violated { lhs: FieldElement, rhs: FieldElement },
    Undefined(Error),
}

impl TheoremInstance {
    pub fn holds(&self) -> bool {
        matches!(self, TheoremInstance::Holds)
    }

    /// Combines independent equalities: violated if any defined one fails,
    /// undefined if none is defined.
    fn from_equalities(pairs: Vec<(Result<FieldElement>, Result<FieldElement>)>) -> Self {
        let mut defined = 0;
        let mut first_error = None;
        for (lhs, rhs) in pairs {
            match (lhs, rhs) {
                (Ok(l), Ok(r)) => {
                    if l != r {
                        return TheoremInstance::Violated { lhs: l, rhs: r };
                    }
                    defined += 1;
                }
                (Err(e), _) | (_, Err(e)) => {
                    first_error.get_or_insert(e);
                }
            }
        }
        if defined == 0 {
            TheoremInstance::Undefined(first_error.unwrap_or(Error::DivisionByZero))
        } else {
            TheoremInstance::Holds
        }
    }
}

/// `1/q^b + 1/q^r + 1/q^g = 2`.
pub fn check_reciprocal_sum(a1: &ProjPoint, a2: &ProjPoint) -> TheoremInstance {
    let two = a1.x().lift(2);
    TheoremInstance::from_equalities(vec![(reciprocal_sum(a1, a2), Ok(two))])
}

/// `q^b(a^r, a^g) = q^r(a^g, a^b) = q^g(a^b, a^r) = 1`.
pub fn check_cyclic_perpendicularity(a: &ProjPoint) -> TheoremInstance {
    let [b, r, g] = Color::ALL.map(|c| perpendicular_point(c, a));
    let one = || Ok(a.x().one_like());
    TheoremInstance::from_equalities(vec![
        (colored_quadrance(Color::Blue, &r, &g), one()),
        (colored_quadrance(Color::Red, &g, &b), one()),
        (colored_quadrance(Color::Green, &b, &r), one()),
    ])
}

/// `q^c(a1, a2) = q^c(a1^b, a2^b) = q^c(a1^r, a2^r) = q^c(a1^g, a2^g)` on
/// the members of the chain that are defined.
pub fn check_color_invariance(c: Color, a1: &ProjPoint, a2: &ProjPoint) -> TheoremInstance {
    let mut values: Vec<Result<FieldElement>> = vec![colored_quadrance(c, a1, a2)];
    for k in Color::ALL {
        values.push(colored_quadrance(
            c,
            &perpendicular_point(k, a1),
            &perpendicular_point(k, a2),
        ));
    }
    let first_error = values.iter().find_map(|v| v.as_ref().err().cloned());
    let defined: Vec<FieldElement> = values.into_iter().filter_map(|v| v.ok()).collect();
    if defined.len() < 2 {
        return TheoremInstance::Undefined(first_error.unwrap_or(Error::DivisionByZero));
    }
    TheoremInstance::from_equalities(
        defined[1..]
            .iter()
            .map(|v| (Ok(defined[0].clone()), Ok(v.clone())))
            .collect(),
    )
}

/// `q^b(a1^r, a2^g) = q^b(a1^g, a2^r)` and its red and green counterparts.
pub fn check_cross_symmetry(a1: &ProjPoint, a2: &ProjPoint) -> TheoremInstance {
    let [b1, r1, g1] = Color::ALL.map(|c| perpendicular_point(c, a1));
    let [b2, r2, g2] = Color::ALL.map(|c| perpendicular_point(c, a2));
    TheoremInstance::from_equalities(vec![
        (
            colored_quadrance(Color::Blue, &r1, &g2),
            colored_quadrance(Color::Blue, &g1, &r2),
        ),
        (
            colored_quadrance(Color::Red, &g1, &b2),
            colored_quadrance(Color::Red, &b1, &g2),
        ),
        (
            colored_quadrance(Color::Green, &b1, &r2),
            colored_quadrance(Color::Green, &r1, &b2),
        ),
    ])
}
