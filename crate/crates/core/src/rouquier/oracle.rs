//! Decomposition numbers `[Δ^σ : L^τ]` for Schur algebras, where known.

use std::collections::HashMap;
use std::path::Path;

use serde::Deserialize;

use crate::classify::is_jm;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Environment variable naming an extra data file for [`TableOracle::from_env`].
pub const ORACLE_ENV: &str = "SPECHTKIT_ORACLE";

/// Source of Weyl module decomposition numbers; `None` means unknown.
pub trait WeylOracle: Send + Sync {
    fn multiplicity(&self, sigma: &Partition, tau: &Partition, p: usize) -> Option<u64>;
}

/// Cases settled without data: equal labels, different sizes, labels of size
/// at most one, non-dominated labels, and p-restricted JM labels, whose Weyl
/// modules are simple.
#[derive(Debug, Clone, Copy, Default)]
pub struct BuiltinOracle;

impl WeylOracle for BuiltinOracle {
    fn multiplicity(&self, sigma: &Partition, tau: &Partition, p: usize) -> Option<u64> {
        if sigma.size() != tau.size() {
            return Some(0);
        }
        if sigma == tau {
            return Some(1);
        }
        if sigma.size() <= 1 || !sigma.dominates(tau) {
            return Some(0);
        }
        if sigma.is_restricted(p) && is_jm(sigma, p) {
            return Some(0);
        }
        None
    }
}

#[derive(Debug, Deserialize)]
struct Entry {
    sigma: Partition,
    tau: Partition,
    p: usize,
    value: u64,
}

/// The builtin cases extended by a table of `(σ, τ, p, value)` entries.
///
/// The table is a JSON array of objects `{"sigma": [..], "tau": [..], "p": 3, "value": 1}`.
#[derive(Debug, Clone, Default)]
pub struct TableOracle {
    table: HashMap<(Partition, Partition, usize), u64>,
}

impl TableOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, sigma: Partition, tau: Partition, p: usize, value: u64) {
        self.table.insert((sigma, tau, p), value);
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let entries: Vec<Entry> = serde_json::from_str(text).map_err(|e| Error::OracleData(e.to_string()))?;
        let mut out = Self::new();
        for e in entries {
            out.insert(e.sigma, e.tau, e.p, e.value);
        }
        Ok(out)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::OracleData(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Reads the file named by `SPECHTKIT_ORACLE`, or returns an empty table.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(ORACLE_ENV) {
            Some(path) => Self::from_file(Path::new(&path)),
            None => Ok(Self::new()),
        }
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }
}

impl WeylOracle for TableOracle {
    fn multiplicity(&self, sigma: &Partition, tau: &Partition, p: usize) -> Option<u64> {
        BuiltinOracle
            .multiplicity(sigma, tau, p)
            .or_else(|| self.table.get(&(sigma.clone(), tau.clone(), p)).copied())
    }
}
