use std::io::Write;

use clap::Args;

use linegeom::spread_poly::{divisors, spread_sequence, SpreadCache};

use crate::{exit, CliError};

#[derive(Args, Debug)]
pub struct SpreadpolyArgs {
    /// Print S_0 through S_n
    #[arg(long)]
    pub n: usize,
    /// Also print the spread-cyclotomic factors phi_k for k dividing n
    #[arg(long)]
    pub factor: bool,
}

pub fn run(args: &SpreadpolyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    for (k, p) in spread_sequence(args.n).iter().enumerate() {
        let _ = writeln!(out, "S_{k}: {p}");
    }
    if args.factor && args.n > 0 {
        let mut cache = SpreadCache::new();
        for k in divisors(args.n as u64) {
            let _ = writeln!(out, "phi_{k}: {}", cache.cyclotomic(k)?);
        }
    }
    Ok(exit::OK)
}
