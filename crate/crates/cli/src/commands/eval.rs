use clap::{Args, ValueEnum};

use linegeom::affine::{self, AffinePoint};
use linegeom::chromo::{self, Color};
use linegeom::isometry::{self, ProjIsometry, ProjMatrix};
use linegeom::projective::{self, Form, ProjPoint};
use linegeom::spread_poly;
use linegeom::{make_context, FieldContext, FieldElement};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Op {
    /// Affine quadrance of two points
    Quad,
    /// Projective quadrance of two p-points under --form or --color
    Pquad,
    /// Archimedes function A(a,b,c)
    Archimedes,
    /// Triple spread function S(a,b,c)
    Spread,
    /// Quadruple quad function of four values
    Quadquad,
    /// Quadruple spread function R of four values
    Quadspread,
    /// Heron product of three values
    Heron,
    /// Brahmagupta product of four values
    Brahmagupta,
    /// Common solution of two quad triples {a,b,x}, {c,d,x}
    SolveQuad,
    /// Common solution of two spread triples {a,b,x}, {c,d,x}
    SolveSpread,
    /// Whether two p-points are perpendicular
    Perp,
    /// Whether a p-point is null
    Null,
    /// 1/q^b + 1/q^r + 1/q^g for two p-points
    Recip,
    /// Colour perpendicular of a p-point
    Perpendicular,
    /// Product of two p-points in a colour
    Multiply,
    /// --n-th power of a p-point in a colour
    Power,
    /// Blue square root of a p-point
    Sqrt,
    /// Image of a p-point under --iso
    Apply,
    /// Composition of two --iso arguments, first then second
    Compose,
    /// Isometry with the given --matrix in --color
    Classify,
    /// S_n(s) for --n and one value s
    SpreadEval,
    /// Both sides of the green-ratio identity for values x y and --n
    GreenRatio,
}

#[derive(Args, Debug, Clone)]
pub struct EvalArgs {
    #[arg(value_enum)]
    pub op: Op,
    /// `rationals` or `fp:<p>`
    #[arg(long, default_value = "rationals")]
    pub field: String,
    /// Form `d:e:f`
    #[arg(long)]
    pub form: Option<String>,
    /// blue, red or green
    #[arg(long)]
    pub color: Option<String>,
    /// Points: `x` for the affine line, `[x:y]` for the projective line
    #[arg(long, num_args = 1..)]
    pub points: Vec<String>,
    /// Field elements such as `3`, `-2/7`
    #[arg(long, num_args = 1..)]
    pub values: Vec<String>,
    #[arg(long)]
    pub n: Option<u32>,
    /// Isometry `rho:<color>:[a:b]` or `sigma:<color>:[a:b]`
    #[arg(long)]
    pub iso: Vec<String>,
    /// Matrix `a,b;c,d`
    #[arg(long)]
    pub matrix: Option<String>,
}

struct Inputs<'a> {
    args: &'a EvalArgs,
    ctx: FieldContext,
}

impl Inputs<'_> {
    fn name(&self) -> String {
        self.args
            .op
            .to_possible_value()
            .map(|v| v.get_name().to_string())
            .unwrap_or_default()
    }

    fn values(&self, k: usize) -> Result<Vec<FieldElement>, CliError> {
        if self.args.values.len() != k {
            return Err(CliError::Usage(format!("{} expects {k} --values", self.name())));
        }
        Ok(self
            .args
            .values
            .iter()
            .map(|v| self.ctx.parse_element(v))
            .collect::<Result<_, _>>()?)
    }

    fn raw_points(&self, k: usize) -> Result<&[String], CliError> {
        if self.args.points.len() != k {
            return Err(CliError::Usage(format!("{} expects {k} --points", self.name())));
        }
        Ok(&self.args.points)
    }

    fn points(&self, k: usize) -> Result<Vec<ProjPoint>, CliError> {
        Ok(self
            .raw_points(k)?
            .iter()
            .map(|p| ProjPoint::parse(&self.ctx, p))
            .collect::<Result<_, _>>()?)
    }

    fn affine_points(&self, k: usize) -> Result<Vec<AffinePoint>, CliError> {
        Ok(self
            .raw_points(k)?
            .iter()
            .map(|p| AffinePoint::parse(&self.ctx, p))
            .collect::<Result<_, _>>()?)
    }

    fn color(&self) -> Result<Color, CliError> {
        match &self.args.color {
            Some(c) => Ok(c.parse()?),
            None => Err(CliError::Usage(format!("{} needs --color", self.name()))),
        }
    }

    fn form(&self) -> Result<Form, CliError> {
        match (&self.args.form, &self.args.color) {
            (Some(f), None) => Ok(Form::parse(&self.ctx, f)?),
            (None, Some(c)) => Ok(chromo::colored_form(c.parse()?, &self.ctx)),
            _ => Err(CliError::Usage(format!(
                "{} needs exactly one of --form or --color",
                self.name()
            ))),
        }
    }

    fn n(&self) -> Result<u32, CliError> {
        self.args
            .n
            .ok_or_else(|| CliError::Usage(format!("{} needs --n", self.name())))
    }

    fn isometries(&self, k: usize) -> Result<Vec<ProjIsometry>, CliError> {
        if self.args.iso.len() != k {
            return Err(CliError::Usage(format!("{} expects {k} --iso", self.name())));
        }
        Ok(self
            .args
            .iso
            .iter()
            .map(|s| ProjIsometry::parse(&self.ctx, s))
            .collect::<Result<_, _>>()?)
    }
}

/// Evaluates one request and returns the printed result.
pub fn run(args: &EvalArgs) -> Result<String, CliError> {
    let ctx = make_context(&args.field)?;
    let inp = Inputs { args, ctx };
    let out = match args.op {
        Op::Quad => {
            let a = inp.affine_points(2)?;
            affine::quadrance(&a[0], &a[1])?.to_string()
        }
        Op::Pquad => {
            let a = inp.points(2)?;
            match (&args.color, &args.form) {
                (Some(_), None) => chromo::colored_quadrance(inp.color()?, &a[0], &a[1])?.to_string(),
                _ => projective::p_quadrance(&inp.form()?, &a[0], &a[1])?.to_string(),
            }
        }
        Op::Archimedes => {
            let v = inp.values(3)?;
            affine::archimedes(&v[0], &v[1], &v[2]).to_string()
        }
        Op::Spread => {
            let v = inp.values(3)?;
            projective::triple_spread_fn(&v[0], &v[1], &v[2]).to_string()
        }
        Op::Quadquad => {
            let v = inp.values(4)?;
            affine::quadruple_quad_fn(&v[0], &v[1], &v[2], &v[3]).to_string()
        }
        Op::Quadspread => {
            let v = inp.values(4)?;
            projective::quadruple_spread_fn(&v[0], &v[1], &v[2], &v[3]).to_string()
        }
        Op::Heron => {
            let v = inp.values(3)?;
            affine::heron_product(&v[0], &v[1], &v[2]).to_string()
        }
        Op::Brahmagupta => {
            let v = inp.values(4)?;
            affine::brahmagupta_product(&v[0], &v[1], &v[2], &v[3]).to_string()
        }
        Op::SolveQuad => {
            let v = inp.values(4)?;
            affine::solve_quad_triple_pair(&v[0], &v[1], &v[2], &v[3])?.to_string()
        }
        Op::SolveSpread => {
            let v = inp.values(4)?;
            projective::solve_spread_triple_pair(&v[0], &v[1], &v[2], &v[3])?.to_string()
        }
        Op::Perp => {
            let a = inp.points(2)?;
            projective::is_perpendicular(&inp.form()?, &a[0], &a[1])?.to_string()
        }
        Op::Null => {
            let a = inp.points(1)?;
            projective::is_null(&inp.form()?, &a[0])?.to_string()
        }
        Op::Recip => {
            let a = inp.points(2)?;
            chromo::reciprocal_sum(&a[0], &a[1])?.to_string()
        }
        Op::Perpendicular => {
            let a = inp.points(1)?;
            chromo::perpendicular_point(inp.color()?, &a[0]).to_string()
        }
        Op::Multiply => {
            let a = inp.points(2)?;
            isometry::multiply_points(inp.color()?, &a[0], &a[1])?.to_string()
        }
        Op::Power => {
            let a = inp.points(1)?;
            isometry::point_power(inp.color()?, &a[0], inp.n()?)?.to_string()
        }
        Op::Sqrt => {
            let a = inp.points(1)?;
            isometry::blue_sqrt(&a[0])?.to_string()
        }
        Op::Apply => {
            let a = inp.points(1)?;
            inp.isometries(1)?[0].apply(&a[0])?.to_string()
        }
        Op::Compose => {
            let s = inp.isometries(2)?;
            s[0].compose(&s[1])?.to_string()
        }
        Op::Classify => {
            let m = args
                .matrix
                .as_ref()
                .ok_or_else(|| CliError::Usage("classify needs --matrix".into()))?;
            let m = ProjMatrix::parse(&inp.ctx, m)?;
            ProjIsometry::classify(&m, inp.color()?)?.to_string()
        }
        Op::SpreadEval => {
            let v = inp.values(1)?;
            spread_poly::spread_poly(inp.n()? as usize).eval(&v[0]).to_string()
        }
        Op::GreenRatio => {
            let v = inp.values(2)?;
            let g = spread_poly::spread_at_green_ratio(&v[0], &v[1], inp.n()?)?;
            format!(
                "s = {}, S_n(s) = {}, closed form = {}",
                g.s, g.spread_value, g.closed_form
            )
        }
    };
    Ok(out)
}
