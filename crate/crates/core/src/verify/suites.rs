use crate::affine::{
    archimedes, archimedes_alternates, brahmagupta_product, heron_product, quadrance, quadruple_quad_check,
    quadruple_quad_fn, two_quad_triples_lhs, AffinePoint,
};
use crate::chromo::{
    check_color_invariance, check_cross_symmetry, check_cyclic_perpendicularity, check_reciprocal_sum, colored_form,
    colored_quadrance, is_null_in, perpendicular_point, Color, TheoremInstance,
};
use crate::field::FieldElement;
use crate::isometry::{
    blue_sqrt, identity_point, multiply_points, point_inverse, point_power, IsometryKind, ProjIsometry,
};
use crate::projective::{
    is_perpendicular, p_quadrance, projective_quadruple_check, quadruple_spread_fn, triple_spread_alternates,
    triple_spread_fn, two_spread_triples_lhs, Form, ProjPoint,
};
use crate::spread_poly::{
    chebyshev_t, divisors, has_power_of_four_lead, product, spread_at_green_ratio, spread_cyclotomic, spread_sequence,
    spread_via_chebyshev, IntPolynomial, SpreadCache,
};
use crate::QuadrupleCheck;

use super::report::{each, fan_out, Recorder};
use super::Ctx;

const KINDS: [IsometryKind; 2] = [IsometryKind::Rotation, IsometryKind::Reflection];

fn show<T: ToString>(items: &[&T]) -> Vec<String> {
    items.iter().map(|t| t.to_string()).collect()
}

fn theorem(rec: &mut Recorder, check: &str, outcome: TheoremInstance, inputs: impl FnOnce() -> Vec<String>) {
    match outcome {
        TheoremInstance::Holds => rec.pass(check),
        TheoremInstance::Violated { lhs, rhs } => rec.fail(check, inputs(), lhs.to_string(), rhs.to_string()),
        TheoremInstance::Undefined(e) => rec.skip(check, e.name()),
    }
}

/// Records the diagonal fractions of a quadruple check against the direct
/// quadrances.
fn diagonals(
    rec: &mut Recorder,
    prefix: &str,
    check: &QuadrupleCheck,
    direct13: &FieldElement,
    direct24: &FieldElement,
    inputs: impl Fn() -> Vec<String>,
) {
    for (suffix, frac, direct) in [("q13", &check.q13, direct13), ("q24", &check.q24, direct24)] {
        let name = format!("{prefix}_{suffix}");
        match frac {
            Some(v) => rec.equal(&name, v, direct, &inputs),
            None => rec.skip(&name, "DegenerateDenominator"),
        }
    }
}

pub(crate) fn triple_quad(ctx: &Ctx) -> Recorder {
    let mut rec = ctx.over_elements("triple_quad", 3, |x, rec| {
        let a: Vec<AffinePoint> = x.iter().map(|v| AffinePoint::new((*v).clone())).collect();
        let q1 = quadrance(&a[1], &a[2]).expect("same field");
        let q2 = quadrance(&a[0], &a[2]).expect("same field");
        let q3 = quadrance(&a[0], &a[1]).expect("same field");
        rec.equal("triple_quad", &archimedes(&q1, &q2, &q3), &x[0].zero_like(), || show(x));
    });
    rec.merge(ctx.over_elements("archimedes_alternates", 3, |x, rec| {
        let a = archimedes(x[0], x[1], x[2]);
        for (i, alt) in archimedes_alternates(x[0], x[1], x[2]).iter().enumerate() {
            rec.equal(&format!("archimedes_alternate_{}", i + 1), alt, &a, || show(x));
        }
        rec.equal("archimedes_symmetry", &archimedes(x[1], x[2], x[0]), &a, || show(x));
    }));
    rec
}

pub(crate) fn quadruple_quad(ctx: &Ctx) -> Recorder {
    let mut rec = ctx.over_elements("quadruple_quad", 4, |x, rec| {
        let a: [AffinePoint; 4] = std::array::from_fn(|i| AffinePoint::new(x[i].clone()));
        let check = quadruple_quad_check(&a).expect("same field");
        rec.equal("quadruple_quad", &check.value, &x[0].zero_like(), || show(x));
        let d13 = quadrance(&a[0], &a[2]).expect("same field");
        let d24 = quadrance(&a[1], &a[3]).expect("same field");
        diagonals(rec, "quadruple_quad", &check, &d13, &d24, || show(x));
    });
    rec.merge(ctx.over_elements("two_quad_triples", 4, |x, rec| {
        rec.equal(
            "two_quad_triples_rearrangement",
            &two_quad_triples_lhs(x[0], x[1], x[2], x[3]),
            &quadruple_quad_fn(x[0], x[1], x[2], x[3]),
            || show(x),
        );
    }));
    rec
}

pub(crate) fn heron(ctx: &Ctx) -> Recorder {
    ctx.over_elements("heron", 3, |x, rec| {
        let lhs = heron_product(x[0], x[1], x[2]);
        let rhs = archimedes(&x[0].square(), &x[1].square(), &x[2].square());
        rec.equal("heron", &lhs, &rhs, || show(x));
    })
}

pub(crate) fn brahmagupta(ctx: &Ctx) -> Recorder {
    ctx.over_elements("brahmagupta", 4, |x, rec| {
        let lhs = brahmagupta_product(x[0], x[1], x[2], x[3]);
        let rhs = quadruple_quad_fn(&x[0].square(), &x[1].square(), &x[2].square(), &x[3].square());
        rec.equal("brahmagupta", &lhs, &rhs, || show(x));
    })
}

fn fibonacci_instance(rec: &mut Recorder, form: &Form, a1: &ProjPoint, a2: &ProjPoint) {
    let lhs = form.discriminant() * a1.cross(a2).square() + form.pairing(a1, a2).square();
    let rhs = form.eval(a1) * form.eval(a2);
    rec.equal("generalized_fibonacci", &lhs, &rhs, || {
        vec![form.to_string(), a1.to_string(), a2.to_string()]
    });
}

pub(crate) fn fibonacci(ctx: &Ctx) -> Recorder {
    let mut rec = if ctx.exhaustive() {
        let forms = Form::all(ctx.field()).expect("finite field");
        let points = ProjPoint::all(ctx.field()).expect("finite field");
        fan_out(forms.len(), |i, rec| {
            for a1 in &points {
                for a2 in &points {
                    fibonacci_instance(rec, &forms[i], a1, a2);
                }
            }
        })
    } else {
        let mut g = ctx.gen("generalized_fibonacci");
        let cases: Vec<(Form, ProjPoint, ProjPoint)> = (0..ctx.trials())
            .map(|_| {
                let form = loop {
                    if let Ok(f) = Form::new(g.elem(), g.elem(), g.elem()) {
                        break f;
                    }
                };
                (form, g.point(), g.point())
            })
            .collect();
        each(&cases, |(f, a1, a2), rec| fibonacci_instance(rec, f, a1, a2))
    };
    rec.merge(ctx.over_elements("fibonacci_colors", 4, |x, rec| {
        let (a, b, c, d) = (x[0], x[1], x[2], x[3]);
        let blue = (a.square() + b.square()) * (c.square() + d.square());
        rec.equal(
            "blue_fibonacci_1",
            &((a * c + b * d).square() + (a * d - b * c).square()),
            &blue,
            || show(x),
        );
        rec.equal(
            "blue_fibonacci_2",
            &((a * c - b * d).square() + (a * d + b * c).square()),
            &blue,
            || show(x),
        );
        let red = (a.square() - b.square()) * (c.square() - d.square());
        rec.equal(
            "red_fibonacci_1",
            &((a * c + b * d).square() - (a * d + b * c).square()),
            &red,
            || show(x),
        );
        rec.equal(
            "red_fibonacci_2",
            &((a * c - b * d).square() - (a * d - b * c).square()),
            &red,
            || show(x),
        );
    }));
    rec
}

pub(crate) fn triple_spread(ctx: &Ctx) -> Recorder {
    let mut rec = Recorder::default();
    for (label, form) in ctx.forms() {
        let check = format!("triple_spread/{label}");
        rec.merge(ctx.over_points(&check, 3, |a, rec| {
            let qs = (
                p_quadrance(&form, a[1], a[2]),
                p_quadrance(&form, a[0], a[2]),
                p_quadrance(&form, a[0], a[1]),
            );
            match qs {
                (Ok(q1), Ok(q2), Ok(q3)) => {
                    rec.equal(&check, &triple_spread_fn(&q1, &q2, &q3), &q1.zero_like(), || show(a))
                }
                (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => rec.skip(&check, e.name()),
            }
        }));
        let check = format!("perpendicular_iff_unit/{label}");
        rec.merge(
            ctx.over_points(&check, 2, |a, rec| match p_quadrance(&form, a[0], a[1]) {
                Ok(q) => {
                    let perp = is_perpendicular(&form, a[0], a[1]).expect("non-degenerate");
                    rec.holds(&check, perp == q.is_one(), || show(a));
                }
                Err(e) => rec.skip(&check, e.name()),
            }),
        );
    }
    rec.merge(ctx.over_elements("spread_alternates", 3, |x, rec| {
        let s = triple_spread_fn(x[0], x[1], x[2]);
        for (i, alt) in triple_spread_alternates(x[0], x[1], x[2]).iter().enumerate() {
            rec.equal(&format!("spread_alternate_{}", i + 1), alt, &s, || show(x));
        }
    }));
    rec
}

pub(crate) fn quadruple_spread(ctx: &Ctx) -> Recorder {
    let mut rec = ctx.over_elements("two_spread_triples", 4, |x, rec| {
        rec.equal(
            "two_spread_triples_rearrangement",
            &two_spread_triples_lhs(x[0], x[1], x[2], x[3]),
            &quadruple_spread_fn(x[0], x[1], x[2], x[3]),
            || show(x),
        );
    });
    for (label, form) in ctx.forms() {
        let check = format!("quadruple_spread/{label}");
        rec.merge(ctx.over_points(&check, 4, |a, rec| {
            let pts: [ProjPoint; 4] = std::array::from_fn(|i| a[i].clone());
            match projective_quadruple_check(&form, &pts) {
                Ok(q) => {
                    rec.equal(&check, &q.value, &q.value.zero_like(), || show(a));
                    let d13 = p_quadrance(&form, a[0], a[2]).expect("non-null");
                    let d24 = p_quadrance(&form, a[1], a[3]).expect("non-null");
                    diagonals(rec, &check, &q, &d13, &d24, || show(a));
                }
                Err(e) => {
                    rec.skip(&check, e.name());
                    rec.skip(&format!("{check}_q13"), e.name());
                    rec.skip(&format!("{check}_q24"), e.name());
                }
            }
        }));
    }
    rec
}

pub(crate) fn chromo(ctx: &Ctx) -> Recorder {
    let colors = ctx.colors();
    let mut rec = ctx.over_points("chromo_pairs", 2, |a, rec| {
        let inputs = || show(a);
        theorem(rec, "reciprocal_sum", check_reciprocal_sum(a[0], a[1]), inputs);
        theorem(rec, "cross_symmetry", check_cross_symmetry(a[0], a[1]), inputs);
        for &c in &colors {
            let name = format!("color_invariance/{c}");
            theorem(rec, &name, check_color_invariance(c, a[0], a[1]), inputs);
            let direct = colored_quadrance(c, a[0], a[1]);
            let general = p_quadrance(&colored_form(c, &a[0].context()), a[0], a[1]);
            let name = format!("color_formula_vs_form/{c}");
            match (direct, general) {
                (Ok(x), Ok(y)) => rec.equal(&name, &x, &y, inputs),
                (Err(e), Err(f)) if e == f => rec.skip(&name, e.name()),
                (x, y) => rec.fail(&name, inputs(), format!("{x:?}"), format!("{y:?}")),
            }
        }
    });
    rec.merge(ctx.over_points("chromo_points", 1, |a, rec| {
        let inputs = || show(a);
        theorem(
            rec,
            "cyclic_perpendicularity",
            check_cyclic_perpendicularity(a[0]),
            inputs,
        );
        for &c in &colors {
            let twice = perpendicular_point(c, &perpendicular_point(c, a[0]));
            rec.holds(&format!("perpendicular_involution/{c}"), &twice == a[0], inputs);
        }
    }));
    rec.merge(ctx.over_elements("reciprocal_identity", 4, |x, rec| {
        let (x1, y1, x2, y2) = (x[0], x[1], x[2], x[3]);
        let lhs = (x1.square() + y1.square()) * (x2.square() + y2.square())
            - (x1.square() - y1.square()) * (x2.square() - y2.square())
            - (x1 * y1 * x2 * y2).times(4);
        rec.equal(
            "reciprocal_identity",
            &lhs,
            &(x1 * y2 - x2 * y1).square().times(2),
            || show(x),
        );
    }));
    rec
}

fn preservation(rec: &mut Recorder, check: &str, iso: &ProjIsometry, a: &ProjPoint, b: &ProjPoint) {
    let c = iso.color();
    match colored_quadrance(c, a, b) {
        Ok(before) => {
            let after = colored_quadrance(
                c,
                &iso.apply(a).expect("same field"),
                &iso.apply(b).expect("same field"),
            );
            match after {
                Ok(after) => rec.equal(check, &after, &before, || {
                    vec![iso.to_string(), a.to_string(), b.to_string()]
                }),
                Err(e) => rec.fail(
                    check,
                    vec![iso.to_string(), a.to_string(), b.to_string()],
                    e.name().to_string(),
                    before.to_string(),
                ),
            }
        }
        Err(e) => rec.skip(check, e.name()),
    }
}

fn composition(rec: &mut Recorder, check: &str, s1: &ProjIsometry, s2: &ProjIsometry) {
    let inputs = || vec![s1.to_string(), s2.to_string()];
    let composed = s1.compose(s2).expect("same colour");
    let product = s1.matrix().mul(&s2.matrix());
    if composed.matrix() != product {
        rec.fail(check, inputs(), composed.matrix().to_string(), product.to_string());
        return;
    }
    let parity = (composed.kind() == IsometryKind::Rotation) == (s1.kind() == s2.kind());
    rec.holds(check, parity, inputs);
}

fn group_laws(rec: &mut Recorder, c: Color, x: &ProjPoint, y: &ProjPoint, z: &ProjPoint) {
    if [x, y, z].iter().any(|p| is_null_in(c, p)) {
        for name in ["associative", "commutative", "identity", "inverse", "rotation_product"] {
            rec.skip(&format!("multiplication_{name}/{c}"), "NullParameter");
        }
        return;
    }
    let m = |u: &ProjPoint, v: &ProjPoint| multiply_points(c, u, v).expect("non-null");
    let inputs = || vec![x.to_string(), y.to_string(), z.to_string()];
    let id = identity_point(c, &x.context());
    rec.holds(
        &format!("multiplication_associative/{c}"),
        m(&m(x, y), z) == m(x, &m(y, z)),
        inputs,
    );
    rec.holds(&format!("multiplication_commutative/{c}"), m(x, y) == m(y, x), inputs);
    rec.holds(&format!("multiplication_identity/{c}"), &m(x, &id) == x, inputs);
    let inv = point_inverse(c, x).expect("non-null");
    rec.holds(&format!("multiplication_inverse/{c}"), m(x, &inv) == id, inputs);
    let rot = |p: &ProjPoint| ProjIsometry::rotation(c, p.clone()).expect("non-null");
    rec.holds(
        &format!("multiplication_rotation_product/{c}"),
        rot(x).compose(&rot(y)).expect("same colour") == rot(&m(x, y)),
        inputs,
    );
}

fn green_power(rec: &mut Recorder, spreads: &[IntPolynomial], a: &ProjPoint) {
    let one = ProjPoint::new(a.x().one_like(), a.x().one_like()).expect("nonzero");
    let Ok(s) = colored_quadrance(Color::Green, &one, a) else {
        rec.skip("green_power", "NullPoint");
        return;
    };
    for (n, spread) in spreads.iter().enumerate().skip(1).take(8) {
        let power = point_power(Color::Green, a, n as u32).expect("non-null");
        let lhs = colored_quadrance(Color::Green, &one, &power).expect("non-null");
        rec.equal("green_power", &lhs, &spread.eval(&s), || {
            vec![a.to_string(), n.to_string()]
        });
    }
}

pub(crate) fn isometry(ctx: &Ctx) -> Recorder {
    let mut rec = Recorder::default();
    let spreads = spread_sequence(8);
    for c in ctx.colors() {
        let check = format!("preservation/{c}");
        let table = format!("composition_table/{c}");
        let classify = format!("classify_round_trip/{c}");
        if ctx.exhaustive() {
            let points = ProjPoint::all(ctx.field()).expect("finite field");
            rec.merge(fan_out(points.len(), |i, rec| {
                for kind in KINDS {
                    let Ok(iso) = ProjIsometry::new(c, kind, points[i].clone()) else {
                        rec.skip(&check, "NullParameter");
                        rec.skip(&classify, "NullParameter");
                        continue;
                    };
                    for a in &points {
                        for b in &points {
                            preservation(rec, &check, &iso, a, b);
                        }
                    }
                    let back = ProjIsometry::classify(&iso.matrix(), c);
                    rec.holds(&classify, back.as_ref() == Ok(&iso), || vec![iso.to_string()]);
                    for q in &points {
                        for k2 in KINDS {
                            match ProjIsometry::new(c, k2, q.clone()) {
                                Ok(other) => composition(rec, &table, &iso, &other),
                                Err(_) => rec.skip(&table, "NullParameter"),
                            }
                        }
                    }
                }
            }));
            rec.merge(fan_out(points.len(), |i, rec| {
                for y in &points {
                    for z in &points {
                        group_laws(rec, c, &points[i], y, z);
                    }
                }
            }));
        } else {
            let mut g = ctx.gen(&check);
            let cases: Vec<(
                IsometryKind,
                ProjPoint,
                IsometryKind,
                ProjPoint,
                ProjPoint,
                ProjPoint,
                ProjPoint,
            )> = (0..ctx.trials())
                .map(|_| {
                    let k1 = KINDS[g.int(0, 1) as usize];
                    let k2 = KINDS[g.int(0, 1) as usize];
                    (k1, g.point(), k2, g.point(), g.point(), g.point(), g.point())
                })
                .collect();
            rec.merge(each(&cases, |(k1, p1, k2, p2, a, b, z), rec| {
                match (
                    ProjIsometry::new(c, *k1, p1.clone()),
                    ProjIsometry::new(c, *k2, p2.clone()),
                ) {
                    (Ok(s1), Ok(s2)) => {
                        preservation(rec, &check, &s1, a, b);
                        composition(rec, &table, &s1, &s2);
                        let back = ProjIsometry::classify(&s1.matrix(), c);
                        rec.holds(&classify, back.as_ref() == Ok(&s1), || vec![s1.to_string()]);
                    }
                    _ => {
                        rec.skip(&check, "NullParameter");
                        rec.skip(&table, "NullParameter");
                        rec.skip(&classify, "NullParameter");
                    }
                }
                group_laws(rec, c, a, b, z);
            }));
        }
    }
    if ctx.colors().contains(&Color::Blue) {
        if ctx.exhaustive() {
            rec.merge(ctx.over_points("blue_sqrt", 1, |a, rec| match blue_sqrt(a[0]) {
                Ok(r) => rec.holds(
                    "blue_sqrt",
                    multiply_points(Color::Blue, &r, &r).as_ref() == Ok(a[0]),
                    || show(a),
                ),
                Err(e) => rec.skip("blue_sqrt", e.name()),
            }));
        } else {
            // unit-circle points [m^2 - n^2 : 2mn]
            let mut g = ctx.gen("blue_sqrt");
            let cases: Vec<ProjPoint> = (0..ctx.trials())
                .map(|_| {
                    let (m, n) = (g.elem(), g.elem());
                    ProjPoint::new(m.square() - n.square(), (&m * &n).times(2)).unwrap_or_else(|_| g.point())
                })
                .collect();
            rec.merge(each(&cases, |a, rec| match blue_sqrt(a) {
                Ok(r) => rec.holds(
                    "blue_sqrt",
                    multiply_points(Color::Blue, &r, &r).as_ref() == Ok(a),
                    || vec![a.to_string()],
                ),
                Err(e) => rec.skip("blue_sqrt", e.name()),
            }));
        }
    }
    if ctx.colors().contains(&Color::Green) {
        rec.merge(ctx.over_points("green_power", 1, |a, rec| green_power(rec, &spreads, a[0])));
    }
    rec
}

fn poly_check(rec: &mut Recorder, check: &str, lhs: &IntPolynomial, rhs: &IntPolynomial, inputs: Vec<String>) {
    if lhs == rhs {
        rec.pass(check);
    } else {
        rec.fail(check, inputs, lhs.to_string(), rhs.to_string());
    }
}

pub(crate) fn spread_poly(ctx: &Ctx) -> Recorder {
    let spreads = spread_sequence(36);
    let mut rec = Recorder::default();
    for n in 1..=6 {
        for m in 1..=6 {
            let composed = spreads[n].compose(&spreads[m]);
            poly_check(
                &mut rec,
                "composition",
                &composed,
                &spreads[n * m],
                vec![n.to_string(), m.to_string()],
            );
        }
    }
    for (n, sn) in spreads.iter().enumerate().take(17) {
        match spread_via_chebyshev(n) {
            Ok(p) => poly_check(&mut rec, "chebyshev", &p, sn, vec![n.to_string()]),
            Err(e) => rec.fail("chebyshev", vec![n.to_string()], e.name().into(), sn.to_string()),
        }
    }
    let t2 = chebyshev_t(2);
    poly_check(
        &mut rec,
        "chebyshev_base",
        &t2,
        &IntPolynomial::from_i64s(&[-1, 0, 2]),
        vec!["2".into()],
    );
    let mut cache = SpreadCache::new();
    for n in 1..=12u64 {
        let factors: Result<Vec<IntPolynomial>, _> = divisors(n).into_iter().map(|k| cache.cyclotomic(k)).collect();
        match factors {
            Ok(f) => poly_check(
                &mut rec,
                "cyclotomic_product",
                &product(&f),
                &spreads[n as usize],
                vec![n.to_string()],
            ),
            Err(e) => rec.fail(
                "cyclotomic_product",
                vec![n.to_string()],
                e.to_string(),
                spreads[n as usize].to_string(),
            ),
        }
        match (cache.cyclotomic(n), spread_cyclotomic(n)) {
            (Ok(a), Ok(b)) => poly_check(&mut rec, "cache_transparency", &a, &b, vec![n.to_string()]),
            (a, b) => rec.fail(
                "cache_transparency",
                vec![n.to_string()],
                format!("{a:?}"),
                format!("{b:?}"),
            ),
        }
    }
    for (n, sn) in spreads.iter().enumerate().take(17).skip(1) {
        rec.holds("leading_coefficient", has_power_of_four_lead(n, sn), || {
            vec![n.to_string()]
        });
    }
    let logistic = &IntPolynomial::from_i64s(&[0, 4]) * &IntPolynomial::from_i64s(&[1, -1]);
    poly_check(&mut rec, "logistic", &spreads[2], &logistic, vec![]);

    let recurrence = |s: &FieldElement, rec: &mut Recorder| {
        for n in 1..=12 {
            let v = triple_spread_fn(&spreads[n - 1].eval(s), s, &spreads[n].eval(s));
            rec.equal("spread_recurrence_triple", &v, &s.zero_like(), || {
                vec![s.to_string(), n.to_string()]
            });
        }
    };
    let green_ratio = |x: &FieldElement, y: &FieldElement, rec: &mut Recorder| {
        if x.is_zero() || y.is_zero() {
            rec.skip("green_ratio", "DivisionByZero");
            return;
        }
        for n in 1..=8 {
            let g = spread_at_green_ratio(x, y, n).expect("nonzero");
            rec.equal("green_ratio", &g.spread_value, &g.closed_form, || {
                vec![x.to_string(), y.to_string(), n.to_string()]
            });
        }
    };
    if ctx.exhaustive() {
        rec.merge(ctx.over_elements("spread_recurrence", 1, |x, rec| recurrence(x[0], rec)));
        rec.merge(ctx.over_elements("green_ratio", 2, |x, rec| green_ratio(x[0], x[1], rec)));
    } else {
        let mut g = ctx.gen("spread_recurrence");
        let cases: Vec<FieldElement> = (0..ctx.trials().min(200)).map(|_| g.elem()).collect();
        rec.merge(each(&cases, |s, rec| recurrence(s, rec)));
        let mut g = ctx.gen("green_ratio");
        let cases: Vec<(FieldElement, FieldElement)> = (0..ctx.trials()).map(|_| (g.nonzero(), g.nonzero())).collect();
        rec.merge(each(&cases, |(x, y), rec| green_ratio(x, y, rec)));
    }
    rec
}
