use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::field::FieldElement;

/// Per-check counters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub attempted: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
}

impl Tally {
    fn absorb(&mut self, other: &Tally) {
        self.attempted += other.attempted;
        self.passed += other.passed;
        self.failed += other.failed;
        self.skipped += other.skipped;
    }
}

/// The first failing instance, with both sides in exact form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: String,
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one suite (or of `all`, whose totals sum its children).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub field: String,
    pub attempted: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    pub skip_reasons: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
    pub checks: BTreeMap<String, Tally>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<VerificationReport>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    /// Tally of one named check, if it ran.
    pub fn check(&self, name: &str) -> Option<&Tally> {
        self.checks.get(name)
    }

    /// Sums child reports into one. Child check names are prefixed with the
    /// child's suite or field, per `group`.
    pub fn combine(
        suite: &str,
        field: String,
        seed: Option<u64>,
        elapsed_ms: u64,
        children: Vec<VerificationReport>,
        group: GroupBy,
    ) -> Self {
        let mut report = VerificationReport {
            suite: suite.to_string(),
            field,
            attempted: 0,
            passed: 0,
            failed: 0,
            skipped: 0,
            skip_reasons: BTreeMap::new(),
            counterexample: None,
            seed,
            elapsed_ms,
            checks: BTreeMap::new(),
            children: Vec::new(),
        };
        for child in &children {
            report.attempted += child.attempted;
            report.passed += child.passed;
            report.failed += child.failed;
            report.skipped += child.skipped;
            for (k, v) in &child.skip_reasons {
                *report.skip_reasons.entry(k.clone()).or_default() += v;
            }
            for (k, v) in &child.checks {
                report
                    .checks
                    .entry(format!("{}/{}", group.label(child), k))
                    .or_default()
                    .absorb(v);
            }
            if report.counterexample.is_none() {
                report.counterexample = child.counterexample.clone();
            }
        }
        report.children = children;
        report
    }
}

/// How [`VerificationReport::combine`] labels the checks of each child.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupBy {
    Suite,
    Field,
}

impl GroupBy {
    fn label(self, r: &VerificationReport) -> &str {
        match self {
            GroupBy::Suite => &r.suite,
            GroupBy::Field => &r.field,
        }
    }
}

/// Accumulates check outcomes. Recorders from disjoint slices of the input
/// space are merged in input order, so the first counterexample does not
/// depend on scheduling.
#[derive(Debug, Default)]
pub(crate) struct Recorder {
    checks: BTreeMap<String, Tally>,
    skip_reasons: BTreeMap<String, u64>,
    counterexample: Option<Counterexample>,
}

impl Recorder {
    fn tally(&mut self, check: &str) -> &mut Tally {
        if !self.checks.contains_key(check) {
            self.checks.insert(check.to_string(), Tally::default());
        }
        let t = self.checks.get_mut(check).expect("inserted");
        t.attempted += 1;
        t
    }

    pub fn pass(&mut self, check: &str) {
        self.tally(check).passed += 1;
    }

    pub fn skip(&mut self, check: &str, reason: &str) {
        self.tally(check).skipped += 1;
        match self.skip_reasons.get_mut(reason) {
            Some(n) => *n += 1,
            None => {
                self.skip_reasons.insert(reason.to_string(), 1);
            }
        }
    }

    pub fn fail(&mut self, check: &str, inputs: Vec<String>, lhs: String, rhs: String) {
        self.tally(check).failed += 1;
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                check: check.to_string(),
                inputs,
                lhs,
                rhs,
            });
        }
    }

    /// Records `lhs == rhs`; `inputs` is only formatted on failure.
    pub fn equal(&mut self, check: &str, lhs: &FieldElement, rhs: &FieldElement, inputs: impl FnOnce() -> Vec<String>) {
        if lhs == rhs {
            self.pass(check);
        } else {
            self.fail(check, inputs(), lhs.to_string(), rhs.to_string());
        }
    }

    /// Records a boolean property; the sides are reported as `true`/`false`.
    pub fn holds(&mut self, check: &str, ok: bool, inputs: impl FnOnce() -> Vec<String>) {
        if ok {
            self.pass(check);
        } else {
            self.fail(check, inputs(), "false".into(), "true".into());
        }
    }

    pub fn merge(&mut self, other: Recorder) {
        for (k, v) in other.checks {
            self.checks.entry(k).or_default().absorb(&v);
        }
        for (k, v) in other.skip_reasons {
            *self.skip_reasons.entry(k).or_default() += v;
        }
        if self.counterexample.is_none() {
            self.counterexample = other.counterexample;
        }
    }

    pub fn into_report(self, suite: &str, field: String, seed: Option<u64>, elapsed_ms: u64) -> VerificationReport {
        let mut total = Tally::default();
        for t in self.checks.values() {
            total.absorb(t);
        }
        VerificationReport {
            suite: suite.to_string(),
            field,
            attempted: total.attempted,
            passed: total.passed,
            failed: total.failed,
            skipped: total.skipped,
            skip_reasons: self.skip_reasons,
            counterexample: self.counterexample,
            seed,
            elapsed_ms,
            checks: self.checks,
            children: Vec::new(),
        }
    }
}

const CHUNK: usize = 64;

/// Runs `f` on every index in `0..total` across worker threads and merges
/// the per-chunk recorders in index order.
pub(crate) fn fan_out(total: usize, f: impl Fn(usize, &mut Recorder) + Sync) -> Recorder {
    let chunks = total.div_ceil(CHUNK);
    let parts: Vec<Recorder> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rec = Recorder::default();
            for i in c * CHUNK..total.min((c + 1) * CHUNK) {
                f(i, &mut rec);
            }
            rec
        })
        .collect();
    let mut out = Recorder::default();
    for part in parts {
        out.merge(part);
    }
    out
}

/// Calls `f` on every ordered `arity`-tuple drawn from `pool`.
pub(crate) fn sweep<T: Sync>(pool: &[T], arity: u32, f: impl Fn(&[&T], &mut Recorder) + Sync) -> Recorder {
    let n = pool.len();
    let total = n.pow(arity);
    fan_out(total, |mut idx, rec| {
        let mut items: Vec<&T> = Vec::with_capacity(arity as usize);
        for _ in 0..arity {
            items.push(&pool[idx % n]);
            idx /= n;
        }
        items.reverse();
        f(&items, rec)
    })
}

/// Calls `f` on each pre-generated case.
pub(crate) fn each<T: Sync>(cases: &[T], f: impl Fn(&T, &mut Recorder) + Sync) -> Recorder {
    fan_out(cases.len(), |i, rec| f(&cases[i], rec))
}
