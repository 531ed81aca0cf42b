use std::collections::BTreeMap;
use std::fmt::Display;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::SweepSpec;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub partition: String,
    pub detail: String,
}

/// Per-check counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// Accumulated outcomes of a suite, mergeable across threads.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Log {
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub skipped: Vec<Failure>,
    pub tallies: BTreeMap<String, Tally>,
}

impl Log {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records one check named `name` about `subject`.
    pub fn check(&mut self, name: &str, subject: impl Display, ok: bool, detail: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        let t = self.tallies.entry(name.to_string()).or_default();
        t.checked += 1;
        if !ok {
            t.failed += 1;
            self.failures.push(Failure { partition: subject.to_string(), detail: format!("{name}: {}", detail()) });
        }
        ok
    }

    /// Compares two values for equality.
    pub fn same<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, subject: impl Display, got: T, want: T) -> bool {
        let ok = got == want;
        self.check(name, subject, ok, || format!("got {got:?}, expected {want:?}"))
    }

    /// An instance whose hypothesis status could not be decided.
    pub fn skip(&mut self, name: &str, subject: impl Display, detail: impl Into<String>) {
        self.tallies.entry(name.to_string()).or_default().skipped += 1;
        self.skipped.push(Failure { partition: subject.to_string(), detail: format!("{name}: {}", detail.into()) });
    }

    /// Counts an observation without making it a check.
    pub fn note(&mut self, name: &str) {
        self.tallies.entry(name.to_string()).or_default().checked += 1;
    }

    pub fn merge(&mut self, other: Log) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.skipped.extend(other.skipped);
        for (k, v) in other.tallies {
            let t = self.tallies.entry(k).or_default();
            t.checked += v.checked;
            t.failed += v.failed;
            t.skipped += v.skipped;
        }
    }

    pub fn into_report(self, spec: &SweepSpec) -> Report {
        Report {
            suite: spec.suite.clone(),
            params: Params { p: spec.p, max_n: spec.max_n, filter: spec.filter.to_string() },
            checked: self.checked,
            failures: self.failures,
            skipped: self.skipped,
            tallies: self.tallies,
        }
    }
}

/// Runs `f` on every item in parallel and merges the logs in input order.
pub fn par_sweep<T: Sync, F: Fn(&T, &mut Log) + Sync>(items: &[T], f: F) -> Log {
    let logs: Vec<Log> = items
        .par_iter()
        .map(|x| {
            let mut log = Log::new();
            f(x, &mut log);
            log
        })
        .collect();
    let mut out = Log::new();
    for l in logs {
        out.merge(l);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Params {
    pub p: usize,
    pub max_n: usize,
    pub filter: String,
}

/// The JSON report of one suite run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub params: Params,
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub skipped: Vec<Failure>,
    pub tallies: BTreeMap<String, Tally>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
