use std::io::Write;

use clap::{Args, ValueEnum};

use linegeom::projective::{p_quadrance, projective_quadruple_check, quadruple_spread_fn, Form, ProjPoint};
use linegeom::{FieldContext, FieldElement};

use crate::{exit, CliError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Example {
    /// Four rational p-points under the Euclidean form (1:0:1)
    Paper,
}

#[derive(Args, Debug)]
pub struct ExampleArgs {
    #[arg(value_enum)]
    pub name: Example,
}

const POINTS: [(i64, i64); 4] = [(1, 0), (2, 3), (4, -1), (3, 5)];

/// Expected values as (label, numerator, denominator).
const EXPECTED: [(&str, i64, i64); 9] = [
    ("q12", 9, 13),
    ("q23", 196, 221),
    ("q34", 529, 578),
    ("q14", 25, 34),
    ("q13", 1, 17),
    ("q24", 1, 442),
    ("q13 from fraction", 1, 17),
    ("q24 from fraction", 1, 442),
    ("R(q12,q23,q34,q14)", 0, 1),
];

fn computed() -> Result<Vec<Option<FieldElement>>, CliError> {
    let ctx = FieldContext::rationals();
    let form = Form::from_ints(&ctx, 1, 0, 1)?;
    let pts: Vec<ProjPoint> = POINTS
        .iter()
        .map(|&(x, y)| ProjPoint::from_ints(&ctx, x, y))
        .collect::<Result<_, _>>()?;
    let q = |i: usize, j: usize| p_quadrance(&form, &pts[i], &pts[j]);
    let (q12, q23, q34, q14) = (q(0, 1)?, q(1, 2)?, q(2, 3)?, q(0, 3)?);
    let check = projective_quadruple_check(&form, &[pts[0].clone(), pts[1].clone(), pts[2].clone(), pts[3].clone()])?;
    let r = quadruple_spread_fn(&q12, &q23, &q34, &q14);
    Ok(vec![
        Some(q12),
        Some(q23),
        Some(q34),
        Some(q14),
        Some(q(0, 2)?),
        Some(q(1, 3)?),
        check.q13,
        check.q24,
        Some(r),
    ])
}

pub fn run(args: &ExampleArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    match args.name {
        Example::Paper => {}
    }
    let ctx = FieldContext::rationals();
    let points: Vec<String> = POINTS.iter().map(|(x, y)| format!("[{x}:{y}]")).collect();
    let _ = writeln!(out, "form (1:0:1) over rationals");
    let _ = writeln!(out, "points {}", points.join(" "));
    let mut all_match = true;
    for ((label, n, d), value) in EXPECTED.iter().zip(computed()?) {
        let expected = ctx.from_ratio(*n, *d)?;
        let ok = value.as_ref() == Some(&expected);
        all_match &= ok;
        let shown = value.map_or_else(|| "undefined".to_string(), |v| v.to_string());
        let status = if ok { "ok" } else { "MISMATCH" };
        let _ = writeln!(out, "{label} = {shown} (expected {expected}) {status}");
    }
    if all_match {
        let _ = writeln!(out, "all values match");
        Ok(exit::OK)
    } else {
        let _ = writeln!(out, "some values differ");
        Ok(exit::VERIFICATION_FAILED)
    }
}
