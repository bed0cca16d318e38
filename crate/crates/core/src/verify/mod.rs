//! Identity verification harness.
//!
//! Over the rationals every check runs on seeded pseudo-random inputs; over
//! `F_p` the input space is enumerated exhaustively. Work is spread over a
//! thread pool, and results are merged in input order so reports are
//! byte-identical across runs and thread counts.

mod report;
mod suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chromo::{colored_form, Color};
use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};
use crate::projective::{Form, ProjPoint};

use report::{each, sweep, Recorder};
pub use report::{Counterexample, GroupBy, Tally, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    TripleQuad,
    QuadrupleQuad,
    Heron,
    Brahmagupta,
    Fibonacci,
    TripleSpread,
    QuadrupleSpread,
    Chromo,
    Isometry,
    SpreadPoly,
    All,
}

impl Suite {
    /// Every suite except `all`, in the order `all` runs them.
    pub const EACH: [Suite; 10] = [
        Suite::TripleQuad,
        Suite::QuadrupleQuad,
        Suite::Heron,
        Suite::Brahmagupta,
        Suite::Fibonacci,
        Suite::TripleSpread,
        Suite::QuadrupleSpread,
        Suite::Chromo,
        Suite::Isometry,
        Suite::SpreadPoly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TripleQuad => "triple-quad",
            Suite::QuadrupleQuad => "quadruple-quad",
            Suite::Heron => "heron",
            Suite::Brahmagupta => "brahmagupta",
            Suite::Fibonacci => "fibonacci",
            Suite::TripleSpread => "triple-spread",
            Suite::QuadrupleSpread => "quadruple-spread",
            Suite::Chromo => "chromo",
            Suite::Isometry => "isometry",
            Suite::SpreadPoly => "spreadpoly",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub field: FieldContext,
    /// Random cases per check over the rationals.
    pub trials: usize,
    pub seed: u64,
    /// Restricts form-dependent checks to one colour.
    pub color: Option<Color>,
    /// When false, `elapsed_ms` is reported as 0.
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            field: FieldContext::rationals(),
            trials: 1000,
            seed: 42,
            color: None,
            timing: true,
        }
    }
}

impl VerifyOptions {
    pub fn new(field: FieldContext) -> Self {
        VerifyOptions {
            field,
            ..Self::default()
        }
    }
}

/// Runs a suite and returns its report.
pub fn run(suite: Suite, opts: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let seed = (!opts.field.is_finite()).then_some(opts.seed);
    let elapsed = |start: Instant| {
        if opts.timing {
            start.elapsed().as_millis() as u64
        } else {
            0
        }
    };
    if suite == Suite::All {
        let children: Vec<VerificationReport> = Suite::EACH.iter().map(|&s| run(s, opts)).collect();
        return VerificationReport::combine(
            "all",
            opts.field.to_string(),
            seed,
            elapsed(start),
            children,
            GroupBy::Suite,
        );
    }
    let ctx = Ctx { opts };
    let rec = match suite {
        Suite::TripleQuad => suites::triple_quad(&ctx),
        Suite::QuadrupleQuad => suites::quadruple_quad(&ctx),
        Suite::Heron => suites::heron(&ctx),
        Suite::Brahmagupta => suites::brahmagupta(&ctx),
        Suite::Fibonacci => suites::fibonacci(&ctx),
        Suite::TripleSpread => suites::triple_spread(&ctx),
        Suite::QuadrupleSpread => suites::quadruple_spread(&ctx),
        Suite::Chromo => suites::chromo(&ctx),
        Suite::Isometry => suites::isometry(&ctx),
        Suite::SpreadPoly => suites::spread_poly(&ctx),
        Suite::All => unreachable!(),
    };
    rec.into_report(suite.name(), opts.field.to_string(), seed, elapsed(start))
}

/// Seeded generator of rational (or residue) test inputs.
pub(crate) struct Gen {
    rng: ChaCha8Rng,
    field: FieldContext,
}

impl Gen {
    /// Numerators in `[-40, 40]`, denominators in `[1, 25]`.
    pub fn elem(&mut self) -> FieldElement {
        match self.field.modulus() {
            None => {
                let n = self.rng.gen_range(-40i64..=40);
                let d = self.rng.gen_range(1i64..=25);
                self.field.from_ratio(n, d).expect("nonzero denominator")
            }
            Some(p) => self.field.from_integer(self.rng.gen_range(0..p) as i64),
        }
    }

    pub fn nonzero(&mut self) -> FieldElement {
        loop {
            let e = self.elem();
            if !e.is_zero() {
                return e;
            }
        }
    }

    pub fn point(&mut self) -> ProjPoint {
        loop {
            if let Ok(p) = ProjPoint::new(self.elem(), self.elem()) {
                return p;
            }
        }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }
}

/// Suite-side view of the options.
pub(crate) struct Ctx<'a> {
    opts: &'a VerifyOptions,
}

impl Ctx<'_> {
    pub fn field(&self) -> &FieldContext {
        &self.opts.field
    }

    pub fn exhaustive(&self) -> bool {
        self.opts.field.is_finite()
    }

    pub fn trials(&self) -> usize {
        self.opts.trials
    }

    /// A generator whose stream depends only on the seed and `label`.
    pub fn gen(&self, label: &str) -> Gen {
        let mut rng = ChaCha8Rng::seed_from_u64(self.opts.seed);
        rng.set_stream(fnv1a(label));
        Gen {
            rng,
            field: self.opts.field,
        }
    }

    /// Colours to exercise: the selected one, or all three.
    pub fn colors(&self) -> Vec<Color> {
        match self.opts.color {
            Some(c) => vec![c],
            None => Color::ALL.to_vec(),
        }
    }

    /// Labelled forms for form-dependent checks: the colour forms, plus the
    /// general form `(2:1:1)` when no colour is selected.
    pub fn forms(&self) -> Vec<(String, Form)> {
        let mut forms: Vec<(String, Form)> = self
            .colors()
            .into_iter()
            .map(|c| (c.name().to_string(), colored_form(c, self.field())))
            .collect();
        if self.opts.color.is_none() {
            let general = Form::from_ints(self.field(), 2, 1, 1).expect("nonzero form");
            forms.push(("general".to_string(), general));
        }
        forms
    }

    /// All `arity`-tuples of field elements over `F_p`, or `trials` random
    /// tuples over the rationals.
    pub fn over_elements(
        &self,
        label: &str,
        arity: u32,
        f: impl Fn(&[&FieldElement], &mut Recorder) + Sync,
    ) -> Recorder {
        if self.exhaustive() {
            let pool = self.field().elements().expect("finite field");
            sweep(&pool, arity, f)
        } else {
            let mut g = self.gen(label);
            let cases: Vec<Vec<FieldElement>> = (0..self.trials())
                .map(|_| (0..arity).map(|_| g.elem()).collect())
                .collect();
            each(&cases, |c, rec| f(&c.iter().collect::<Vec<_>>(), rec))
        }
    }

    /// All `arity`-tuples of projective points over `F_p`, or `trials`
    /// random tuples over the rationals.
    pub fn over_points(&self, label: &str, arity: u32, f: impl Fn(&[&ProjPoint], &mut Recorder) + Sync) -> Recorder {
        if self.exhaustive() {
            let pool = ProjPoint::all(self.field()).expect("finite field");
            sweep(&pool, arity, f)
        } else {
            let mut g = self.gen(label);
            let cases: Vec<Vec<ProjPoint>> = (0..self.trials())
                .map(|_| (0..arity).map(|_| g.point()).collect())
                .collect();
            each(&cases, |c, rec| f(&c.iter().collect::<Vec<_>>(), rec))
        }
    }
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("nope".parse::<Suite>(), Err(Error::UnknownSuite("nope".into())));
    }

    #[test]
    fn reports_are_deterministic() {
        let opts = VerifyOptions {
            trials: 50,
            timing: false,
            ..VerifyOptions::default()
        };
        let a = run(Suite::TripleSpread, &opts);
        let b = run(Suite::TripleSpread, &opts);
        assert_eq!(a, b);
        assert!(a.ok());
        assert_eq!(a.seed, Some(42));
    }

    #[test]
    fn triple_spread_counts_mod_7_blue() {
        let opts = VerifyOptions {
            color: Some(Color::Blue),
            ..VerifyOptions::new(FieldContext::prime(7).unwrap())
        };
        let r = run(Suite::TripleSpread, &opts);
        let t = r.check("triple_spread/blue").unwrap();
        assert_eq!(t.attempted, 8 * 8 * 8);
        assert_eq!(t.skipped, 0);
        assert!(r.ok());
        assert_eq!(r.seed, None);
    }

    #[test]
    fn triple_spread_counts_mod_5_blue() {
        let opts = VerifyOptions {
            color: Some(Color::Blue),
            ..VerifyOptions::new(FieldContext::prime(5).unwrap())
        };
        let r = run(Suite::TripleSpread, &opts);
        let t = r.check("triple_spread/blue").unwrap();
        assert_eq!(t.attempted, 6 * 6 * 6);
        assert_eq!(t.attempted - t.skipped, 4 * 4 * 4);
    }

    #[test]
    fn every_suite_passes_small() {
        let opts = VerifyOptions {
            trials: 20,
            ..VerifyOptions::default()
        };
        let r = run(Suite::All, &opts);
        assert!(r.ok(), "{:?}", r.counterexample);
        assert_eq!(r.children.len(), Suite::EACH.len());
        assert_eq!(r.passed + r.failed + r.skipped, r.attempted);
        let r = run(Suite::All, &VerifyOptions::new(FieldContext::prime(5).unwrap()));
        assert!(r.ok(), "{:?}", r.counterexample);
    }
}
