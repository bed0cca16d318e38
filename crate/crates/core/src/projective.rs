//! The projective line with a non-degenerate form: null and perpendicular
//! points, projective quadrance, and the Triple/Quadruple spread machinery.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::field::{same_context, FieldContext, FieldElement};
use crate::linalg::det;
use crate::QuadrupleCheck;

/// A projective point `[x:y]`, `x` and `y` not both zero.
///
/// Equality is `x1 y2 - x2 y1 = 0`. The canonical representative (first
/// nonzero coordinate scaled to 1) is only used for display and hashing.
#[derive(Clone, Debug)]
pub struct ProjPoint {
    x: FieldElement,
    y: FieldElement,
}

impl ProjPoint {
    pub fn new(x: FieldElement, y: FieldElement) -> Result<Self> {
        same_context([&x, &y])?;
        if x.is_zero() && y.is_zero() {
            return Err(Error::ZeroPoint);
        }
        Ok(ProjPoint { x, y })
    }

    pub fn from_ints(ctx: &FieldContext, x: i64, y: i64) -> Result<Self> {
        Self::new(ctx.from_integer(x), ctx.from_integer(y))
    }

    pub fn x(&self) -> &FieldElement {
        &self.x
    }

    pub fn y(&self) -> &FieldElement {
        &self.y
    }

    pub fn context(&self) -> FieldContext {
        self.x.context()
    }

    /// `x1 y2 - x2 y1`; zero exactly when the points coincide.
    pub fn cross(&self, other: &ProjPoint) -> FieldElement {
        &self.x * &other.y - &other.x * &self.y
    }

    /// Another representative `[lx : ly]` of the same point.
    pub fn rescale(&self, lambda: &FieldElement) -> Result<ProjPoint> {
        if lambda.is_zero() {
            return Err(Error::ZeroPoint);
        }
        ProjPoint::new(&self.x * lambda, &self.y * lambda)
    }

    pub fn canonical(&self) -> (FieldElement, FieldElement) {
        if self.x.is_zero() {
            (self.x.zero_like(), self.x.one_like())
        } else {
            let inv = self.x.inv().expect("nonzero");
            (self.x.one_like(), &self.y * &inv)
        }
    }

    /// Every point of the projective line over a prime field: `[1:t]` for
    /// each `t` in ascending order, then `[0:1]`.
    pub fn all(ctx: &FieldContext) -> Result<Vec<ProjPoint>> {
        let mut points: Vec<ProjPoint> = ctx
            .elements()?
            .into_iter()
            .map(|t| ProjPoint { x: ctx.one(), y: t })
            .collect();
        points.push(ProjPoint {
            x: ctx.zero(),
            y: ctx.one(),
        });
        Ok(points)
    }

    /// Parses `[x:y]` (brackets optional).
    pub fn parse(ctx: &FieldContext, s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(t);
        let (x, y) = inner
            .split_once(':')
            .ok_or_else(|| Error::parse(s, "expected a projective point [x:y]"))?;
        Self::new(ctx.parse_element(x)?, ctx.parse_element(y)?)
    }
}

impl PartialEq for ProjPoint {
    fn eq(&self, other: &Self) -> bool {
        self.context() == other.context() && self.cross(other).is_zero()
    }
}

impl Eq for ProjPoint {}

impl Hash for ProjPoint {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.canonical();
        write!(f, "[{x}:{y}]")
    }
}

/// A form `(d:e:f)`, the quadratic expression `dx^2 + 2exy + fy^2` up to a
/// nonzero scalar. Degenerate forms can be built and inspected; operations
/// that need a non-degenerate form reject them.
#[derive(Clone, Debug)]
pub struct Form {
    d: FieldElement,
    e: FieldElement,
    f: FieldElement,
}

impl Form {
    pub fn new(d: FieldElement, e: FieldElement, f: FieldElement) -> Result<Self> {
        same_context([&d, &e, &f])?;
        if d.is_zero() && e.is_zero() && f.is_zero() {
            return Err(Error::ZeroForm);
        }
        Ok(Form { d, e, f })
    }

    pub fn from_ints(ctx: &FieldContext, d: i64, e: i64, f: i64) -> Result<Self> {
        Self::new(ctx.from_integer(d), ctx.from_integer(e), ctx.from_integer(f))
    }

    pub fn coefficients(&self) -> (&FieldElement, &FieldElement, &FieldElement) {
        (&self.d, &self.e, &self.f)
    }

    pub fn context(&self) -> FieldContext {
        self.d.context()
    }

    /// `df - e^2` of this representative.
    pub fn discriminant(&self) -> FieldElement {
        &self.d * &self.f - self.e.square()
    }

    pub fn is_degenerate(&self) -> bool {
        self.discriminant().is_zero()
    }

    /// `dx^2 + 2exy + fy^2`.
    pub fn eval(&self, a: &ProjPoint) -> FieldElement {
        &self.d * a.x.square() + (&self.e * &a.x * &a.y).times(2) + &self.f * a.y.square()
    }

    /// The symmetric bilinear pairing `d x1 x2 + e x1 y2 + e x2 y1 + f y1 y2`.
    pub fn pairing(&self, a1: &ProjPoint, a2: &ProjPoint) -> FieldElement {
        &self.d * &a1.x * &a2.x + &self.e * (&a1.x * &a2.y + &a2.x * &a1.y) + &self.f * &a1.y * &a2.y
    }

    pub fn rescale(&self, lambda: &FieldElement) -> Result<Form> {
        if lambda.is_zero() {
            return Err(Error::ZeroForm);
        }
        Form::new(&self.d * lambda, &self.e * lambda, &self.f * lambda)
    }

    fn canonical(&self) -> [FieldElement; 3] {
        let lead = [&self.d, &self.e, &self.f]
            .into_iter()
            .find(|c| !c.is_zero())
            .expect("form is not zero")
            .inv()
            .expect("nonzero");
        [&self.d * &lead, &self.e * &lead, &self.f * &lead]
    }

    /// Every form up to scale over a prime field, degenerate ones included.
    pub fn all(ctx: &FieldContext) -> Result<Vec<Form>> {
        let elements = ctx.elements()?;
        let mut forms = Vec::with_capacity(elements.len() * elements.len() + elements.len() + 1);
        for e in &elements {
            for f in &elements {
                forms.push(Form::new(ctx.one(), e.clone(), f.clone())?);
            }
        }
        for f in &elements {
            forms.push(Form::new(ctx.zero(), ctx.one(), f.clone())?);
        }
        forms.push(Form::new(ctx.zero(), ctx.zero(), ctx.one())?);
        Ok(forms)
    }

    /// Parses `(d:e:f)` (parentheses optional).
    pub fn parse(ctx: &FieldContext, s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t);
        let parts: Vec<&str> = inner.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::parse(s, "expected a form d:e:f"));
        }
        Self::new(
            ctx.parse_element(parts[0])?,
            ctx.parse_element(parts[1])?,
            ctx.parse_element(parts[2])?,
        )
    }

    fn require_nondegenerate(&self) -> Result<()> {
        if self.is_degenerate() {
            Err(Error::DegenerateForm)
        } else {
            Ok(())
        }
    }
}

impl PartialEq for Form {
    fn eq(&self, other: &Self) -> bool {
        self.context() == other.context() && self.canonical() == other.canonical()
    }
}

impl Eq for Form {}

impl Hash for Form {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [d, e, ff] = self.canonical();
        write!(f, "({d}:{e}:{ff})")
    }
}

pub fn discriminant(form: &Form) -> FieldElement {
    form.discriminant()
}

fn check_points(form: &Form, points: &[&ProjPoint]) -> Result<()> {
    let ctx = form.context();
    if points.iter().any(|p| p.context() != ctx) {
        return Err(Error::MixedContexts);
    }
    form.require_nondegenerate()
}

pub fn is_null(form: &Form, a: &ProjPoint) -> Result<bool> {
    check_points(form, &[a])?;
    Ok(form.eval(a).is_zero())
}

pub fn is_perpendicular(form: &Form, a1: &ProjPoint, a2: &ProjPoint) -> Result<bool> {
    check_points(form, &[a1, a2])?;
    Ok(form.pairing(a1, a2).is_zero())
}

/// Projective quadrance
/// `q = (df - e^2)(x1 y2 - x2 y1)^2 / ((dx1^2 + 2ex1y1 + fy1^2)(dx2^2 + 2ex2y2 + fy2^2))`.
pub fn p_quadrance(form: &Form, a1: &ProjPoint, a2: &ProjPoint) -> Result<FieldElement> {
    check_points(form, &[a1, a2])?;
    let n1 = form.eval(a1);
    if n1.is_zero() {
        return Err(Error::NullPoint { arg: 1 });
    }
    let n2 = form.eval(a2);
    if n2.is_zero() {
        return Err(Error::NullPoint { arg: 2 });
    }
    (form.discriminant() * a1.cross(a2).square()).checked_div(&(n1 * n2))
}

/// Triple spread function `S(a,b,c) = (a+b+c)^2 - 2(a^2+b^2+c^2) - 4abc`.
pub fn triple_spread_fn(a: &FieldElement, b: &FieldElement, c: &FieldElement) -> FieldElement {
    crate::affine::archimedes(a, b, c) - (a * b * c).times(4)
}

/// The seven alternate expressions of the Triple spread function, in the
/// order they are usually displayed; the last one,
/// `4bc(1-b)(1-c) - (a-b-c+2bc)^2`, is the form used to solve for `a`.
pub fn triple_spread_alternates(a: &FieldElement, b: &FieldElement, c: &FieldElement) -> [FieldElement; 7] {
    let zero = a.zero_like();
    let one = a.one_like();
    let two = a.lift(2);
    let abc4 = (a * b * c).times(4);
    let pairs = a * b + b * c + c * a;
    let squares = a.square() + b.square() + c.square();
    let matrix = vec![
        vec![zero.clone(), a.clone(), b.clone(), one.clone()],
        vec![a.clone(), zero.clone(), c.clone(), one.clone()],
        vec![b.clone(), c.clone(), zero.clone(), one.clone()],
        vec![one.clone(), one.clone(), one.clone(), two.clone()],
    ];
    [
        crate::affine::archimedes(a, b, c) - &abc4,
        pairs.times(2) - &squares - &abc4,
        pairs.times(4) - (a + b + c).square() - &abc4,
        ((&one - a) * (&one - b) * (&one - c)).times(4) - (a + b + c - &two).square(),
        ((&one - a) * b * c).times(4) - (a - b - c).square(),
        -det(&matrix),
        (b * c * (&one - b) * (&one - c)).times(4) - (a - b - c + (b * c).times(2)).square(),
    ]
}

pub fn is_spread_triple(a: &FieldElement, b: &FieldElement, c: &FieldElement) -> bool {
    triple_spread_fn(a, b, c).is_zero()
}

/// Common solution of two spread triples `{a,b,x}`, `{c,d,x}`:
/// `x = ((a-b)^2 - (c-d)^2) / (2(a+b-c-d-2ab+2cd))`.
pub fn solve_spread_triple_pair(
    a: &FieldElement,
    b: &FieldElement,
    c: &FieldElement,
    d: &FieldElement,
) -> Result<FieldElement> {
    same_context([a, b, c, d])?;
    let den = (a + b - c - d - (a * b).times(2) + (c * d).times(2)).times(2);
    if den.is_zero() {
        return Err(Error::DegenerateDenominator);
    }
    ((a - b).square() - (c - d).square()).checked_div(&den)
}

/// Quadruple spread function `R(a,b,c,d)`.
pub fn quadruple_spread_fn(a: &FieldElement, b: &FieldElement, c: &FieldElement, d: &FieldElement) -> FieldElement {
    let one = a.one_like();
    let inner = (a + b + c + d).square()
        - (a.square() + b.square() + c.square() + d.square()).times(2)
        - (a * b * c + a * b * d + a * c * d + b * c * d).times(4)
        + (a * b * c * d).times(8);
    let correction = (a * b * c * d * (&one - a) * (&one - b) * (&one - c) * (&one - d)).times(64);
    inner.square() - correction
}

/// Left side of the substituted Two spread triples equation, moved to one
/// side; it rearranges to [`quadruple_spread_fn`].
pub fn two_spread_triples_lhs(a: &FieldElement, b: &FieldElement, c: &FieldElement, d: &FieldElement) -> FieldElement {
    let one = a.one_like();
    let ab2 = (a * b).times(2);
    let gap = a + b - c - d - &ab2 + (c * d).times(2);
    let first = (a - b).square() - (c - d).square() - (&gap * (a + b - &ab2)).times(2);
    first.square() - (a * b * (&one - a) * (&one - b) * gap.square()).times(16)
}

/// Projective quadruple quad formula for four non-null points.
pub fn projective_quadruple_check(form: &Form, points: &[ProjPoint; 4]) -> Result<QuadrupleCheck> {
    check_points(form, &points.iter().collect::<Vec<_>>())?;
    if let Some(i) = points.iter().position(|p| form.eval(p).is_zero()) {
        return Err(Error::NullPoint { arg: i + 1 });
    }
    let q = |i: usize, j: usize| p_quadrance(form, &points[i], &points[j]);
    let (q12, q23, q34, q14) = (q(0, 1)?, q(1, 2)?, q(2, 3)?, q(0, 3)?);
    Ok(QuadrupleCheck {
        value: quadruple_spread_fn(&q12, &q23, &q34, &q14),
        q13: solve_spread_triple_pair(&q12, &q23, &q34, &q14).ok(),
        q24: solve_spread_triple_pair(&q23, &q34, &q12, &q14).ok(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q() -> FieldContext {
        FieldContext::rationals()
    }

    fn r(n: i64, d: i64) -> FieldElement {
        q().from_ratio(n, d).unwrap()
    }

    fn pt(x: i64, y: i64) -> ProjPoint {
        ProjPoint::from_ints(&q(), x, y).unwrap()
    }

    fn form(d: i64, e: i64, f: i64) -> Form {
        Form::from_ints(&q(), d, e, f).unwrap()
    }

    #[test]
    fn point_construction_and_equality() {
        assert_eq!(ProjPoint::from_ints(&q(), 0, 0).unwrap_err(), Error::ZeroPoint);
        assert_eq!(pt(2, 3), pt(-4, -6));
        assert_ne!(pt(2, 3), pt(3, 2));
        assert_eq!(pt(2, 3).to_string(), "[1:3/2]");
        assert_eq!(pt(0, -5).to_string(), "[0:1]");
        assert_eq!(ProjPoint::parse(&q(), "[4:-1]").unwrap(), pt(4, -1));
        assert!(ProjPoint::parse(&q(), "4,-1").is_err());
        let f7 = FieldContext::prime(7).unwrap();
        assert_ne!(pt(1, 1), ProjPoint::from_ints(&f7, 1, 1).unwrap());
        assert_eq!(ProjPoint::all(&f7).unwrap().len(), 8);
    }

    #[test]
    fn form_basics() {
        assert_eq!(form(1, 0, 1).discriminant(), r(1, 1));
        assert_eq!(form(0, 1, 0).discriminant(), r(-1, 1));
        assert_eq!(discriminant(&form(1, 1, 1)), r(0, 1));
        assert!(form(1, 1, 1).is_degenerate());
        assert_eq!(form(2, 0, 2), form(1, 0, 1));
        assert_eq!(form(0, -3, 0).to_string(), "(0:1:0)");
        assert_eq!(Form::parse(&q(), "(1:0:-1)").unwrap(), form(1, 0, -1));
        assert_eq!(Form::from_ints(&q(), 0, 0, 0).unwrap_err(), Error::ZeroForm);
        let f5 = FieldContext::prime(5).unwrap();
        assert_eq!(Form::all(&f5).unwrap().len(), 31);
    }

    #[test]
    fn null_points() {
        assert!(is_null(&form(1, 0, -1), &pt(1, 1)).unwrap());
        assert!(!is_null(&form(1, 0, 1), &pt(1, 1)).unwrap());
        let f5 = FieldContext::prime(5).unwrap();
        let blue = Form::from_ints(&f5, 1, 0, 1).unwrap();
        assert!(is_null(&blue, &ProjPoint::from_ints(&f5, 2, 1).unwrap()).unwrap());
        assert_eq!(is_null(&form(1, 1, 1), &pt(1, 0)), Err(Error::DegenerateForm));
    }

    #[test]
    fn perpendicular_points() {
        assert!(is_perpendicular(&form(1, 0, 1), &pt(1, 0), &pt(0, 1)).unwrap());
        assert!(is_perpendicular(&form(1, 0, 1), &pt(1, 2), &pt(2, -1)).unwrap());
        assert!(is_perpendicular(&form(1, 0, -1), &pt(1, 2), &pt(2, 1)).unwrap());
        assert!(!is_perpendicular(&form(1, 0, 1), &pt(1, 2), &pt(2, 1)).unwrap());
        assert_eq!(
            is_perpendicular(&form(2, 2, 2), &pt(1, 0), &pt(0, 1)),
            Err(Error::DegenerateForm)
        );
    }

    #[test]
    fn p_quadrance_examples() {
        let blue = form(1, 0, 1);
        assert_eq!(p_quadrance(&blue, &pt(1, 0), &pt(2, 3)).unwrap(), r(9, 13));
        assert_eq!(p_quadrance(&form(2, 1, 5), &pt(3, 7), &pt(3, 7)).unwrap(), r(0, 1));
        assert_eq!(p_quadrance(&form(1, 0, 2), &pt(1, 0), &pt(0, 1)).unwrap(), r(1, 1));
        let red = form(1, 0, -1);
        assert_eq!(
            p_quadrance(&red, &pt(1, 1), &pt(1, 0)),
            Err(Error::NullPoint { arg: 1 })
        );
        assert_eq!(
            p_quadrance(&red, &pt(1, 0), &pt(1, -1)),
            Err(Error::NullPoint { arg: 2 })
        );
        assert_eq!(
            p_quadrance(&form(1, 1, 1), &pt(1, 0), &pt(0, 1)),
            Err(Error::DegenerateForm)
        );
    }

    #[test]
    fn triple_spread_examples() {
        assert_eq!(triple_spread_fn(&r(0, 1), &r(0, 1), &r(0, 1)), r(0, 1));
        assert_eq!(triple_spread_fn(&r(1, 2), &r(1, 2), &r(1, 1)), r(0, 1));
        assert_eq!(triple_spread_fn(&r(1, 1), &r(1, 1), &r(1, 1)), r(-1, 1));
        let s = r(2, 7);
        assert!(is_spread_triple(&s, &s, &r(0, 1)));
        assert!(is_spread_triple(&r(1, 3), &r(1, 3), &r(8, 9)));
        assert!(!is_spread_triple(&r(1, 1), &r(1, 1), &r(1, 1)));
    }

    #[test]
    fn two_spread_triples_examples() {
        let x = solve_spread_triple_pair(&r(9, 13), &r(196, 221), &r(529, 578), &r(25, 34)).unwrap();
        assert_eq!(x, r(1, 17));
        let x = solve_spread_triple_pair(&r(1, 2), &r(1, 2), &r(1, 1), &r(1, 1)).unwrap();
        assert_eq!(x, r(0, 1));
        assert!(is_spread_triple(&r(1, 2), &r(1, 2), &x));
        assert!(is_spread_triple(&r(1, 1), &r(1, 1), &x));
        assert_eq!(
            solve_spread_triple_pair(&r(2, 5), &r(3, 7), &r(2, 5), &r(3, 7)),
            Err(Error::DegenerateDenominator)
        );
    }

    #[test]
    fn quadruple_spread_examples() {
        let v = quadruple_spread_fn(&r(9, 13), &r(196, 221), &r(529, 578), &r(25, 34));
        assert_eq!(v, r(0, 1));
        let z = r(0, 1);
        assert_eq!(quadruple_spread_fn(&z, &z, &z, &z), z);
        assert_eq!(quadruple_spread_fn(&r(1, 1), &z, &z, &z), r(1, 1));
    }

    #[test]
    fn quadruple_check_worked_example() {
        let points = [pt(1, 0), pt(2, 3), pt(4, -1), pt(3, 5)];
        let check = projective_quadruple_check(&form(1, 0, 1), &points).unwrap();
        assert_eq!(check.value, r(0, 1));
        assert_eq!(check.q13, Some(r(1, 17)));
        assert_eq!(check.q24, Some(r(1, 442)));

        let same = [pt(2, 5), pt(2, 5), pt(2, 5), pt(2, 5)];
        let check = projective_quadruple_check(&form(3, 1, 2), &same).unwrap();
        assert!(check.value.is_zero());
        assert_eq!((check.q13, check.q24), (None, None));

        let red = form(1, 0, -1);
        let with_null = [pt(2, 5), pt(1, 3), pt(1, -1), pt(0, 1)];
        assert_eq!(
            projective_quadruple_check(&red, &with_null),
            Err(Error::NullPoint { arg: 3 })
        );
    }

    #[test]
    fn quadruple_check_mod_7() {
        let f7 = FieldContext::prime(7).unwrap();
        let p = |x, y| ProjPoint::from_ints(&f7, x, y).unwrap();
        let blue = Form::from_ints(&f7, 1, 0, 1).unwrap();
        let points = [p(1, 0), p(1, 1), p(0, 1), p(1, 6)];
        let check = projective_quadruple_check(&blue, &points).unwrap();
        assert!(check.value.is_zero());
        let direct13 = p_quadrance(&blue, &points[0], &points[2]).unwrap();
        let direct24 = p_quadrance(&blue, &points[1], &points[3]).unwrap();
        if let Some(q13) = check.q13 {
            assert_eq!(q13, direct13);
        }
        if let Some(q24) = check.q24 {
            assert_eq!(q24, direct24);
        }
    }

    fn rat() -> impl Strategy<Value = FieldElement> {
        (-40i64..40, 1i64..20).prop_map(|(a, b)| r(a, b))
    }

    fn nonzero() -> impl Strategy<Value = FieldElement> {
        rat().prop_filter("nonzero", |v| !v.is_zero())
    }

    fn point() -> impl Strategy<Value = ProjPoint> {
        (rat(), rat()).prop_filter_map("zero point", |(x, y)| ProjPoint::new(x, y).ok())
    }

    fn nondegenerate() -> impl Strategy<Value = Form> {
        (rat(), rat(), rat()).prop_filter_map("degenerate", |(d, e, f)| {
            Form::new(d, e, f).ok().filter(|f| !f.is_degenerate())
        })
    }

    proptest! {
        #[test]
        fn generalized_fibonacci(d in rat(), e in rat(), f in rat(), x1 in rat(), y1 in rat(), x2 in rat(), y2 in rat()) {
            let lhs = (&d * &f - e.square()) * (&x1 * &y2 - &x2 * &y1).square()
                + (&d * &x1 * &x2 + &e * &x1 * &y2 + &e * &x2 * &y1 + &f * &y1 * &y2).square();
            let rhs = (&d * x1.square() + (&e * &x1 * &y1).times(2) + &f * y1.square())
                * (&d * x2.square() + (&e * &x2 * &y2).times(2) + &f * y2.square());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn p_quadrance_is_scale_invariant(fm in nondegenerate(), a in point(), b in point(), l1 in nonzero(), l2 in nonzero(), l3 in nonzero()) {
            if let Ok(v) = p_quadrance(&fm, &a, &b) {
                let scaled = p_quadrance(&fm.rescale(&l1).unwrap(), &a.rescale(&l2).unwrap(), &b.rescale(&l3).unwrap()).unwrap();
                prop_assert_eq!(&v, &scaled);
                prop_assert_eq!(&v, &p_quadrance(&fm, &b, &a).unwrap());
                prop_assert_eq!(v.is_zero(), a == b);
                prop_assert_eq!(v.is_one(), is_perpendicular(&fm, &a, &b).unwrap());
            }
        }

        #[test]
        fn projective_triple_quad(fm in nondegenerate(), a1 in point(), a2 in point(), a3 in point()) {
            let q1 = p_quadrance(&fm, &a2, &a3);
            let q2 = p_quadrance(&fm, &a1, &a3);
            let q3 = p_quadrance(&fm, &a1, &a2);
            if let (Ok(q1), Ok(q2), Ok(q3)) = (q1, q2, q3) {
                prop_assert!(triple_spread_fn(&q1, &q2, &q3).is_zero());
                let one = q1.one_like();
                prop_assert_eq!((&q1 + &q2 - &q3).square(), (&q1 * &q2 * (one - &q3)).times(4));
            }
        }

        #[test]
        fn spread_alternates_agree(a in rat(), b in rat(), c in rat()) {
            let s = triple_spread_fn(&a, &b, &c);
            prop_assert_eq!(&s, &triple_spread_fn(&c, &a, &b));
            for alt in triple_spread_alternates(&a, &b, &c) {
                prop_assert_eq!(&s, &alt);
            }
        }

        #[test]
        fn quadruple_spread_symmetry_and_rearrangement(a in rat(), b in rat(), c in rat(), d in rat()) {
            let v = quadruple_spread_fn(&a, &b, &c, &d);
            prop_assert_eq!(&v, &quadruple_spread_fn(&b, &a, &c, &d));
            prop_assert_eq!(&v, &quadruple_spread_fn(&c, &d, &b, &a));
            prop_assert_eq!(&v, &two_spread_triples_lhs(&a, &b, &c, &d));
        }

        #[test]
        fn spread_pair_recovers_common_value(a1 in point(), a2 in point(), a3 in point(), a4 in point()) {
            // {q12, q23, q13} and {q34, q14, q13} are spread triples sharing q13
            let blue = form(1, 0, 1);
            let pts = [a1, a2, a3, a4];
            let check = projective_quadruple_check(&blue, &pts).unwrap();
            prop_assert!(check.value.is_zero());
            if let Some(q13) = check.q13 {
                prop_assert_eq!(q13, p_quadrance(&blue, &pts[0], &pts[2]).unwrap());
            }
            if let Some(q24) = check.q24 {
                prop_assert_eq!(q24, p_quadrance(&blue, &pts[1], &pts[3]).unwrap());
            }
        }
    }
}
