use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use spechtkit::{partitions, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Filter {
    #[default]
    All,
    SelfConjugate,
    PRestricted,
}

impl Filter {
    pub fn accepts(self, la: &Partition, p: usize) -> bool {
        match self {
            Filter::All => true,
            Filter::SelfConjugate => la.is_self_conjugate(),
            Filter::PRestricted => la.is_restricted(p),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::All => "all",
            Filter::SelfConjugate => "self_conjugate",
            Filter::PRestricted => "p_restricted",
        })
    }
}

impl FromStr for Filter {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "all" => Ok(Filter::All),
            "self_conjugate" | "self-conjugate" => Ok(Filter::SelfConjugate),
            "p_restricted" | "p-restricted" => Ok(Filter::PRestricted),
            _ => Err(format!("unknown filter {s:?}")),
        }
    }
}

/// Parameters of one sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSpec {
    pub p: usize,
    pub max_n: usize,
    pub filter: Filter,
    pub suite: String,
}

impl SweepSpec {
    pub fn new(suite: &str, p: usize, max_n: usize) -> Self {
        SweepSpec { p, max_n, filter: Filter::All, suite: suite.to_string() }
    }

    pub fn with_filter(mut self, filter: Filter) -> Self {
        self.filter = filter;
        self
    }
}

/// Partitions of each `n ≤ max_n` passing the filter, by increasing size and
/// then in reverse lexicographic order.
pub fn enumerate(spec: &SweepSpec) -> impl Iterator<Item = Partition> + '_ {
    (0..=spec.max_n).flat_map(partitions).filter(move |la| spec.filter.accepts(la, spec.p))
}

/// Like [`enumerate`] with an extra filter and size cap, collected.
pub(crate) fn sweep_list(spec: &SweepSpec, max_n: usize, extra: Filter) -> Vec<Partition> {
    let capped = SweepSpec { max_n: spec.max_n.min(max_n), ..spec.clone() };
    enumerate(&capped).filter(|la| extra.accepts(la, spec.p)).collect()
}
