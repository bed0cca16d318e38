//! Isometries of the blue, red and green projective quadrances, their
//! composition tables, and the induced multiplication of p-points.

use std::fmt;

use crate::chromo::{is_null_in, Color};
use crate::error::{Error, Result};
use crate::field::{same_context, FieldContext, FieldElement};
use crate::projective::ProjPoint;

/// A 2x2 matrix `[[a, b], [c, d]]` up to a nonzero scalar, acting on the
/// right: `[x:y] -> [ax + cy : bx + dy]`.
#[derive(Clone, Debug)]
pub struct ProjMatrix {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl ProjMatrix {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Result<Self> {
        same_context([&a, &b, &c, &d])?;
        Ok(ProjMatrix { a, b, c, d })
    }

    pub fn from_ints(ctx: &FieldContext, a: i64, b: i64, c: i64, d: i64) -> Self {
        ProjMatrix {
            a: ctx.from_integer(a),
            b: ctx.from_integer(b),
            c: ctx.from_integer(c),
            d: ctx.from_integer(d),
        }
    }

    pub fn context(&self) -> FieldContext {
        self.a.context()
    }

    pub fn det(&self) -> FieldElement {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn apply(&self, p: &ProjPoint) -> Result<ProjPoint> {
        let (x, y) = (p.x(), p.y());
        ProjPoint::new(&self.a * x + &self.c * y, &self.b * x + &self.d * y)
    }

    /// Ordinary matrix product `self * rhs`: apply `self`, then `rhs`.
    pub fn mul(&self, rhs: &ProjMatrix) -> ProjMatrix {
        ProjMatrix {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    fn entries(&self) -> [&FieldElement; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Parses `a,b;c,d`.
    pub fn parse(ctx: &FieldContext, s: &str) -> Result<Self> {
        let rows: Vec<&str> = s.split(';').collect();
        let entries: Vec<&str> = rows.iter().flat_map(|r| r.split(',')).collect();
        if rows.len() != 2 || entries.len() != 4 {
            return Err(Error::parse(s, "expected a matrix a,b;c,d"));
        }
        let e = entries
            .iter()
            .map(|t| ctx.parse_element(t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone())
    }
}

impl PartialEq for ProjMatrix {
    /// Equality up to a nonzero scalar.
    fn eq(&self, other: &Self) -> bool {
        if self.context() != other.context() {
            return false;
        }
        let (u, v) = (self.entries(), other.entries());
        if u.iter().all(|e| e.is_zero()) || v.iter().all(|e| e.is_zero()) {
            return u.iter().all(|e| e.is_zero()) && v.iter().all(|e| e.is_zero());
        }
        (0..4).all(|i| (0..4).all(|j| (u[i] * v[j] - u[j] * v[i]).is_zero()))
    }
}

impl fmt::Display for ProjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{};{},{}", self.a, self.b, self.c, self.d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IsometryKind {
    Rotation,
    Reflection,
}

impl IsometryKind {
    pub fn name(self) -> &'static str {
        match self {
            IsometryKind::Rotation => "rho",
            IsometryKind::Reflection => "sigma",
        }
    }
}

/// A rotation `rho_p` or reflection `sigma_p` of one colour, with a
/// parameter `p = [a:b]` that is non-null in that colour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjIsometry {
    color: Color,
    kind: IsometryKind,
    param: ProjPoint,
}

impl ProjIsometry {
    pub fn new(color: Color, kind: IsometryKind, param: ProjPoint) -> Result<Self> {
        if is_null_in(color, &param) {
            return Err(Error::NullParameter);
        }
        Ok(ProjIsometry { color, kind, param })
    }

    pub fn rotation(color: Color, param: ProjPoint) -> Result<Self> {
        Self::new(color, IsometryKind::Rotation, param)
    }

    pub fn reflection(color: Color, param: ProjPoint) -> Result<Self> {
        Self::new(color, IsometryKind::Reflection, param)
    }

    pub fn color(&self) -> Color {
        self.color
    }

    pub fn kind(&self) -> IsometryKind {
        self.kind
    }

    pub fn param(&self) -> &ProjPoint {
        &self.param
    }

    pub fn matrix(&self) -> ProjMatrix {
        let (a, b) = (self.param.x().clone(), self.param.y().clone());
        let zero = a.zero_like();
        let (m11, m12, m21, m22) = match (self.color, self.kind) {
            (Color::Blue, IsometryKind::Rotation) => (a.clone(), b.clone(), -&b, a),
            (Color::Blue, IsometryKind::Reflection) => (a.clone(), b.clone(), b, -&a),
            (Color::Red, IsometryKind::Rotation) => (a.clone(), b.clone(), b, a),
            (Color::Red, IsometryKind::Reflection) => (a.clone(), b.clone(), -&b, -&a),
            (Color::Green, IsometryKind::Rotation) => (a, zero.clone(), zero, b),
            (Color::Green, IsometryKind::Reflection) => (zero.clone(), a, b, zero),
        };
        ProjMatrix {
            a: m11,
            b: m12,
            c: m21,
            d: m22,
        }
    }

    pub fn apply(&self, p: &ProjPoint) -> Result<ProjPoint> {
        if p.context() != self.param.context() {
            return Err(Error::MixedContexts);
        }
        self.matrix().apply(p)
    }

    /// `self` followed by `then`, from the closed-form composition tables.
    pub fn compose(&self, then: &ProjIsometry) -> Result<ProjIsometry> {
        use IsometryKind::{Reflection as S, Rotation as R};
        if self.color != then.color {
            return Err(Error::ColorMismatch);
        }
        if self.param.context() != then.param.context() {
            return Err(Error::MixedContexts);
        }
        let (a, b) = (self.param.x(), self.param.y());
        let (c, d) = (then.param.x(), then.param.y());
        let kind = if self.kind == then.kind { R } else { S };
        let (x, y) = match (self.color, self.kind, then.kind) {
            (Color::Blue, S, S) | (Color::Blue, R, S) => (a * c + b * d, a * d - b * c),
            (Color::Blue, R, R) | (Color::Blue, S, R) => (a * c - b * d, a * d + b * c),
            (Color::Red, S, S) | (Color::Red, R, S) => (a * c - b * d, a * d - b * c),
            (Color::Red, R, R) | (Color::Red, S, R) => (a * c + b * d, a * d + b * c),
            (Color::Green, S, S) | (Color::Green, S, R) => (a * d, b * c),
            (Color::Green, R, R) | (Color::Green, R, S) => (a * c, b * d),
        };
        ProjIsometry::new(self.color, kind, ProjPoint::new(x, y)?)
    }

    /// Recognizes the rotation or reflection shape of `color` in `m`.
    pub fn classify(m: &ProjMatrix, color: Color) -> Result<ProjIsometry> {
        if m.det().is_zero() {
            return Err(Error::NotIsometry("singular matrix".into()));
        }
        let (kind, param) = match color {
            Color::Blue | Color::Red => {
                let sign = if color == Color::Blue { -1 } else { 1 };
                let kind = if m.c == m.b.times(sign) && m.d == m.a {
                    IsometryKind::Rotation
                } else if m.c == m.b.times(-sign) && m.d == -&m.a {
                    IsometryKind::Reflection
                } else {
                    return Err(Error::NotIsometry(format!("matrix does not have a {color} shape")));
                };
                (kind, (m.a.clone(), m.b.clone()))
            }
            Color::Green => {
                if m.b.is_zero() && m.c.is_zero() {
                    (IsometryKind::Rotation, (m.a.clone(), m.d.clone()))
                } else if m.a.is_zero() && m.d.is_zero() {
                    (IsometryKind::Reflection, (m.b.clone(), m.c.clone()))
                } else {
                    return Err(Error::NotIsometry("matrix does not have a green shape".into()));
                }
            }
        };
        let param = ProjPoint::new(param.0, param.1)?;
        ProjIsometry::new(color, kind, param).map_err(|_| Error::NotIsometry(format!("parameter is {color}-null")))
    }

    /// Parses `rho:<color>:[a:b]` or `sigma:<color>:[a:b]`.
    pub fn parse(ctx: &FieldContext, s: &str) -> Result<Self> {
        let mut parts = s.trim().splitn(3, ':');
        let (kind, color, param) = match (parts.next(), parts.next(), parts.next()) {
            (Some(k), Some(c), Some(p)) => (k, c, p),
            _ => return Err(Error::parse(s, "expected rho:<color>:[a:b] or sigma:<color>:[a:b]")),
        };
        let kind = match kind {
            "rho" => IsometryKind::Rotation,
            "sigma" => IsometryKind::Reflection,
            _ => return Err(Error::parse(s, "kind must be rho or sigma")),
        };
        Self::new(color.parse()?, kind, ProjPoint::parse(ctx, param)?)
    }
}

impl fmt::Display for ProjIsometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.kind.name(), self.color, self.param)
    }
}

/// `[1:0]` for blue and red, `[1:1]` for green.
pub fn identity_point(c: Color, ctx: &FieldContext) -> ProjPoint {
    let y = if c == Color::Green { 1 } else { 0 };
    ProjPoint::from_ints(ctx, 1, y).expect("nonzero")
}

/// `[a:b] x_b [c:d] = [ac-bd : ad+bc]`, `x_r` gives `[ac+bd : ad+bc]`,
/// `x_g` gives `[ac : bd]`.
pub fn multiply_points(c: Color, p1: &ProjPoint, p2: &ProjPoint) -> Result<ProjPoint> {
    if is_null_in(c, p1) || is_null_in(c, p2) {
        return Err(Error::NullParameter);
    }
    if p1.context() != p2.context() {
        return Err(Error::MixedContexts);
    }
    let (a, b, x, y) = (p1.x(), p1.y(), p2.x(), p2.y());
    match c {
        Color::Blue => ProjPoint::new(a * x - b * y, a * y + b * x),
        Color::Red => ProjPoint::new(a * x + b * y, a * y + b * x),
        Color::Green => ProjPoint::new(a * x, b * y),
    }
}

/// `p^n` under `x_c`; `p^0` is the identity point.
pub fn point_power(c: Color, p: &ProjPoint, n: u32) -> Result<ProjPoint> {
    if is_null_in(c, p) {
        return Err(Error::NullParameter);
    }
    let mut acc = identity_point(c, &p.context());
    let mut base = p.clone();
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            acc = multiply_points(c, &acc, &base)?;
        }
        base = multiply_points(c, &base, &base)?;
        n >>= 1;
    }
    Ok(acc)
}

/// `[a:-b]` for blue and red, `[b:a]` for green.
pub fn point_inverse(c: Color, p: &ProjPoint) -> Result<ProjPoint> {
    if is_null_in(c, p) {
        return Err(Error::NullParameter);
    }
    match c {
        Color::Blue | Color::Red => ProjPoint::new(p.x().clone(), -p.y()),
        Color::Green => ProjPoint::new(p.y().clone(), p.x().clone()),
    }
}

/// The square root `[a+1 : b]` of `p`, where `[a:b]` is the representative
/// of `p` on the unit circle `a^2 + b^2 = 1`.
pub fn blue_sqrt(p: &ProjPoint) -> Result<ProjPoint> {
    let norm = p.x().square() + p.y().square();
    if norm.is_zero() {
        return Err(Error::NotUnitCircle);
    }
    let mut r = norm.sqrt().ok_or(Error::NotUnitCircle)?;
    let one = norm.one_like();
    if (p.x().checked_div(&r)? + &one).is_zero() {
        r = -r;
    }
    let a = p.x().checked_div(&r)?;
    let b = p.y().checked_div(&r)?;
    ProjPoint::new(a + one, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromo::colored_quadrance;
    use crate::spread_poly::spread_poly;
    use proptest::prelude::*;
    use IsometryKind::{Reflection, Rotation};

    fn q() -> FieldContext {
        FieldContext::rationals()
    }

    fn pt(x: i64, y: i64) -> ProjPoint {
        ProjPoint::from_ints(&q(), x, y).unwrap()
    }

    fn iso(c: Color, k: IsometryKind, x: i64, y: i64) -> ProjIsometry {
        ProjIsometry::new(c, k, pt(x, y)).unwrap()
    }

    #[test]
    fn construction() {
        assert_eq!(
            iso(Color::Blue, Rotation, 1, 0).matrix(),
            ProjMatrix::from_ints(&q(), 1, 0, 0, 1)
        );
        assert_eq!(
            iso(Color::Green, Rotation, 1, 1).matrix(),
            ProjMatrix::from_ints(&q(), 1, 0, 0, 1)
        );
        assert!(ProjIsometry::new(Color::Blue, Rotation, pt(1, 1)).is_ok());
        assert_eq!(
            ProjIsometry::new(Color::Red, Rotation, pt(1, 1)),
            Err(Error::NullParameter)
        );
        assert_eq!(
            ProjIsometry::new(Color::Green, Reflection, pt(0, 1)),
            Err(Error::NullParameter)
        );
    }

    #[test]
    fn application() {
        assert_eq!(iso(Color::Blue, Rotation, 0, 1).apply(&pt(1, 0)).unwrap(), pt(0, 1));
        // green sigma_[a:b] sends [x:y] to [by:ax]; [ay:bx] is sigma_[b:a]
        let a = pt(5, -2);
        assert_eq!(
            iso(Color::Green, Reflection, 2, 3).apply(&a).unwrap(),
            pt(3 * -2, 2 * 5)
        );
        assert_eq!(
            iso(Color::Green, Reflection, 3, 2).apply(&a).unwrap(),
            pt(2 * -2, 3 * 5)
        );
        for c in Color::ALL {
            let id = ProjIsometry::rotation(c, identity_point(c, &q())).unwrap();
            assert_eq!(id.apply(&a).unwrap(), a);
        }
    }

    #[test]
    fn composition_examples() {
        let s = iso(Color::Blue, Reflection, 1, 0)
            .compose(&iso(Color::Blue, Reflection, 0, 1))
            .unwrap();
        assert_eq!(s, iso(Color::Blue, Rotation, 0, 1));
        let g = iso(Color::Green, Rotation, 2, 3)
            .compose(&iso(Color::Green, Rotation, 5, 7))
            .unwrap();
        assert_eq!(g, iso(Color::Green, Rotation, 10, 21));
        let r = iso(Color::Red, Rotation, 2, 1)
            .compose(&iso(Color::Red, Rotation, 3, 1))
            .unwrap();
        assert_eq!(r, iso(Color::Red, Rotation, 7, 5));
        assert_eq!(
            iso(Color::Red, Rotation, 2, 1).compose(&iso(Color::Blue, Rotation, 2, 1)),
            Err(Error::ColorMismatch)
        );
    }

    #[test]
    fn classification() {
        let m = ProjMatrix::from_ints(&q(), 1, 2, -2, 1);
        assert_eq!(
            ProjIsometry::classify(&m, Color::Blue).unwrap(),
            iso(Color::Blue, Rotation, 1, 2)
        );
        let singular = ProjMatrix::from_ints(&q(), 1, 1, 1, 1);
        for c in Color::ALL {
            assert!(matches!(
                ProjIsometry::classify(&singular, c),
                Err(Error::NotIsometry(_))
            ));
        }
        let m = ProjMatrix::from_ints(&q(), 3, 0, 0, 5);
        assert_eq!(
            ProjIsometry::classify(&m, Color::Green).unwrap(),
            iso(Color::Green, Rotation, 3, 5)
        );
        assert!(ProjIsometry::classify(&m, Color::Blue).is_err());
        assert_eq!(
            ProjMatrix::parse(&q(), "1,2;-2,1").unwrap(),
            ProjMatrix::from_ints(&q(), 2, 4, -4, 2)
        );
    }

    #[test]
    fn point_multiplication_examples() {
        assert_eq!(multiply_points(Color::Green, &pt(2, 3), &pt(2, 3)).unwrap(), pt(4, 9));
        assert_eq!(multiply_points(Color::Blue, &pt(1, 2), &pt(3, 1)).unwrap(), pt(1, 7));
        assert_eq!(multiply_points(Color::Red, &pt(2, 1), &pt(3, 1)).unwrap(), pt(7, 5));
        assert_eq!(point_power(Color::Green, &pt(2, 3), 3).unwrap(), pt(8, 27));
        assert_eq!(point_power(Color::Blue, &pt(0, 1), 2).unwrap(), pt(1, 0));
        for c in Color::ALL {
            assert_eq!(point_power(c, &pt(3, 5), 1).unwrap(), pt(3, 5));
        }
        assert_eq!(
            multiply_points(Color::Red, &pt(1, 1), &pt(2, 1)),
            Err(Error::NullParameter)
        );
    }

    #[test]
    fn blue_square_roots() {
        assert_eq!(blue_sqrt(&pt(0, 1)).unwrap(), pt(1, 1));
        assert_eq!(multiply_points(Color::Blue, &pt(1, 1), &pt(1, 1)).unwrap(), pt(0, 1));
        assert_eq!(blue_sqrt(&pt(1, 0)).unwrap(), pt(1, 0));
        assert_eq!(blue_sqrt(&pt(-1, 0)).unwrap(), pt(1, 0));
        assert_eq!(blue_sqrt(&pt(3, 4)).unwrap(), pt(2, 1));
        assert_eq!(blue_sqrt(&pt(1, 1)), Err(Error::NotUnitCircle));
        let f5 = FieldContext::prime(5).unwrap();
        assert_eq!(
            blue_sqrt(&ProjPoint::from_ints(&f5, 1, 2).unwrap()),
            Err(Error::NotUnitCircle)
        );
    }

    #[test]
    fn serialization() {
        let i = iso(Color::Red, Reflection, 2, 1);
        assert_eq!(i.to_string(), "sigma:red:[1:1/2]");
        assert_eq!(ProjIsometry::parse(&q(), "sigma:red:[2:1]").unwrap(), i);
        assert!(ProjIsometry::parse(&q(), "tau:red:[2:1]").is_err());
    }

    #[test]
    fn preservation_exhaustive_mod_7() {
        let f7 = FieldContext::prime(7).unwrap();
        let points = ProjPoint::all(&f7).unwrap();
        for c in Color::ALL {
            for param in points.iter().filter(|p| !is_null_in(c, p)) {
                for kind in [Rotation, Reflection] {
                    let s = ProjIsometry::new(c, kind, param.clone()).unwrap();
                    for a in &points {
                        for b in &points {
                            if let Ok(before) = colored_quadrance(c, a, b) {
                                let after = colored_quadrance(c, &s.apply(a).unwrap(), &s.apply(b).unwrap());
                                assert_eq!(after.unwrap(), before);
                            }
                        }
                    }
                }
            }
        }
    }

    fn int() -> impl Strategy<Value = i64> {
        -30i64..30
    }

    fn point() -> impl Strategy<Value = ProjPoint> {
        (int(), int()).prop_filter_map("zero", |(x, y)| ProjPoint::from_ints(&q(), x, y).ok())
    }

    fn kind() -> impl Strategy<Value = IsometryKind> {
        prop_oneof![Just(Rotation), Just(Reflection)]
    }

    fn color() -> impl Strategy<Value = Color> {
        prop_oneof![Just(Color::Blue), Just(Color::Red), Just(Color::Green)]
    }

    proptest! {
        #[test]
        fn tables_match_matrix_product(c in color(), k1 in kind(), k2 in kind(), p in point(), r in point()) {
            if let (Ok(s1), Ok(s2)) = (ProjIsometry::new(c, k1, p), ProjIsometry::new(c, k2, r)) {
                let composed = s1.compose(&s2).unwrap();
                prop_assert_eq!(composed.matrix(), s1.matrix().mul(&s2.matrix()));
                prop_assert_eq!(composed.kind() == Rotation, k1 == k2);
                prop_assert_eq!(ProjIsometry::classify(&composed.matrix(), c).unwrap(), composed);
            }
        }

        #[test]
        fn fibonacci_identities(a in int(), b in int(), c in int(), d in int()) {
            prop_assert_eq!((a*c + b*d).pow(2) + (a*d - b*c).pow(2), (a*a + b*b) * (c*c + d*d));
            prop_assert_eq!((a*c - b*d).pow(2) + (a*d + b*c).pow(2), (a*a + b*b) * (c*c + d*d));
            prop_assert_eq!((a*c + b*d).pow(2) - (a*d + b*c).pow(2), (a*a - b*b) * (c*c - d*d));
            prop_assert_eq!((a*c - b*d).pow(2) - (a*d - b*c).pow(2), (a*a - b*b) * (c*c - d*d));
        }

        #[test]
        fn multiplication_group_laws(c in color(), x in point(), y in point(), z in point()) {
            prop_assume!(!is_null_in(c, &x) && !is_null_in(c, &y) && !is_null_in(c, &z));
            let m = |u: &ProjPoint, v: &ProjPoint| multiply_points(c, u, v).unwrap();
            prop_assert_eq!(m(&m(&x, &y), &z), m(&x, &m(&y, &z)));
            prop_assert_eq!(m(&x, &y), m(&y, &x));
            let id = identity_point(c, &q());
            prop_assert_eq!(m(&x, &id), x.clone());
            prop_assert_eq!(m(&x, &point_inverse(c, &x).unwrap()), id);
            let rot = |p: &ProjPoint| ProjIsometry::rotation(c, p.clone()).unwrap();
            prop_assert_eq!(rot(&x).compose(&rot(&y)).unwrap(), rot(&m(&x, &y)));
        }

        #[test]
        fn green_power_matches_spread_polynomial(x in 1i64..40, y in 1i64..40, sx in prop::bool::ANY, n in 1u32..=8) {
            let x = if sx { -x } else { x };
            prop_assume!(x != y && x != -y);
            let one = pt(1, 1);
            let a = pt(x, y);
            let s = colored_quadrance(Color::Green, &one, &a).unwrap();
            let lhs = colored_quadrance(Color::Green, &one, &point_power(Color::Green, &a, n).unwrap()).unwrap();
            prop_assert_eq!(lhs, spread_poly(n as usize).eval(&s));
        }

        #[test]
        fn blue_sqrt_round_trip(m in 1i64..30, n in 0i64..30) {
            // (m^2 - n^2, 2mn) always has x^2 + y^2 a square
            let p = ProjPoint::from_ints(&q(), m * m - n * n, 2 * m * n);
            if let Ok(p) = p {
                let r = blue_sqrt(&p).unwrap();
                prop_assert_eq!(multiply_points(Color::Blue, &r, &r).unwrap(), p);
            }
        }
    }
}
