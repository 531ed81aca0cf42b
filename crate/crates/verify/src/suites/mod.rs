//! Registered verification suites.

mod examples;
mod hom;
mod invariants;
mod rouquier;
mod sweeps;

use thiserror::Error;

use crate::enumerate::SweepSpec;
use crate::report::{Log, Report};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("unknown suite {0:?}; known suites: {1}")]
    UnknownSuite(String, String),
    #[error("suite {0} does not support p = {1}")]
    UnsupportedPrime(String, usize),
    #[error(transparent)]
    Core(#[from] spechtkit::Error),
}

pub type SuiteFn = fn(&SweepSpec) -> Result<Log, VerifyError>;

const SUITES: &[(&str, SuiteFn)] = &[
    ("paper_examples", examples::run),
    ("renorl_oracle", sweeps::renorl_oracle),
    ("jm_crosscheck", sweeps::jm_crosscheck),
    ("r_crosscheck", sweeps::r_crosscheck),
    ("mullineux", sweeps::mullineux),
    ("rouquier", rouquier::run),
    ("hom", hom::run),
    ("spotcheck", crate::spotcheck::run),
    ("invariants", invariants::run),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

pub fn run_suite(spec: &SweepSpec) -> Result<Report, VerifyError> {
    let f = SUITES
        .iter()
        .find(|(n, _)| *n == spec.suite)
        .map(|(_, f)| f)
        .ok_or_else(|| VerifyError::UnknownSuite(spec.suite.clone(), suite_names().join(", ")))?;
    Ok(f(spec)?.into_report(spec))
}

pub(crate) fn is_prime(p: usize) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

pub(crate) fn require_prime(spec: &SweepSpec, odd: bool) -> Result<(), VerifyError> {
    if !is_prime(spec.p) || (odd && spec.p == 2) {
        return Err(VerifyError::UnsupportedPrime(spec.suite.clone(), spec.p));
    }
    Ok(())
}

/// All words of length at most `len` over `0..p`, shortest first.
pub(crate) fn words(p: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    let mut layer = out.clone();
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..p).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}
