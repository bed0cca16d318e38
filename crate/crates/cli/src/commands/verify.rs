use std::io::Write;
use std::time::Instant;

use clap::Args;

use linegeom::verify::{self, GroupBy};
use linegeom::{make_context, Color, FieldContext, Suite, VerificationReport, VerifyOptions};

use crate::{exit, CliError};

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// triple-quad, quadruple-quad, heron, brahmagupta, fibonacci,
    /// triple-spread, quadruple-spread, chromo, isometry, spreadpoly or all
    #[arg(long)]
    pub suite: String,
    /// `rationals` (random trials) or `fp:<p>` (exhaustive)
    #[arg(long, default_value = "rationals")]
    pub field: String,
    /// Random cases per check over the rationals
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Comma-separated primes; runs the suite over each and overrides --field
    #[arg(long, value_delimiter = ',')]
    pub primes: Vec<u64>,
    /// Restrict form-dependent checks to one colour
    #[arg(long)]
    pub color: Option<String>,
    /// Report elapsed_ms as 0 so output is byte-reproducible
    #[arg(long)]
    pub no_timing: bool,
}

pub fn report(args: &VerifyArgs) -> Result<VerificationReport, CliError> {
    let suite: Suite = args.suite.parse()?;
    let color: Option<Color> = args.color.as_deref().map(str::parse).transpose()?;
    let options = |field: FieldContext| VerifyOptions {
        field,
        trials: args.trials,
        seed: args.seed,
        color,
        timing: !args.no_timing,
    };
    if args.primes.is_empty() {
        return Ok(verify::run(suite, &options(make_context(&args.field)?)));
    }
    let start = Instant::now();
    let children = args
        .primes
        .iter()
        .map(|&p| Ok(verify::run(suite, &options(FieldContext::prime(p)?))))
        .collect::<Result<Vec<_>, CliError>>()?;
    let primes: Vec<String> = args.primes.iter().map(u64::to_string).collect();
    let elapsed = if args.no_timing {
        0
    } else {
        start.elapsed().as_millis() as u64
    };
    Ok(VerificationReport::combine(
        suite.name(),
        format!("primes:{}", primes.join(",")),
        None,
        elapsed,
        children,
        GroupBy::Field,
    ))
}

pub fn run(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let report = report(args)?;
    let json = serde_json::to_string_pretty(&report).expect("report serializes");
    let _ = writeln!(out, "{json}");
    Ok(if report.ok() {
        exit::OK
    } else {
        exit::VERIFICATION_FAILED
    })
}
