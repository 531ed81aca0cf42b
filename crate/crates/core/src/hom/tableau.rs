use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::multiset::Multiset;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// A filling of a diagram by positive integers, stored row by row.
///
/// The shape is the sequence of row lengths and the type is the content:
/// `type[i-1]` is the number of entries equal to `i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

/// Result of comparing two tableaux in the dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Dominance {
    pub dominates: bool,
    pub strictly: bool,
}

impl Tableau {
    /// Panics on a zero entry.
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        assert!(rows.iter().flatten().all(|&x| x > 0), "tableau entries are positive");
        let mut rows = rows;
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        Tableau { rows }
    }

    /// The row-standard tableau with the given row multisets.
    pub fn from_multisets(rows: &[Multiset]) -> Self {
        Tableau::new(rows.iter().map(Multiset::to_sorted_vec).collect())
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    /// The tableau of shape `shape` with row `i` filled with `i`.
    pub fn identity(shape: &[usize]) -> Self {
        Tableau::new(shape.iter().enumerate().map(|(i, &n)| vec![i + 1; n]).collect())
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Row `r` (1-based); empty beyond the last row.
    pub fn row(&self, r: usize) -> &[usize] {
        self.rows.get(r - 1).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `T_{r,c}`.
    pub fn entry(&self, r: usize, c: usize) -> Option<usize> {
        self.rows.get(r - 1)?.get(c - 1).copied()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn shape_partition(&self) -> Result<Partition> {
        Partition::new(self.shape())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// The content `μ`, with no trailing zeros.
    pub fn content(&self) -> Vec<usize> {
        let mut out = vec![0; self.max_entry()];
        for &x in self.rows.iter().flatten() {
            out[x - 1] += 1;
        }
        out
    }

    /// `T^r` as a multiset.
    pub fn row_multiset(&self, r: usize) -> Multiset {
        self.row(r).iter().copied().collect()
    }

    /// `T^r_i`.
    pub fn count(&self, r: usize, i: usize) -> usize {
        self.row(r).iter().filter(|&&x| x == i).count()
    }

    /// `T[l,r]`: entries at most `l` in rows `1..=r`.
    pub fn rec(&self, l: usize, r: usize) -> usize {
        self.rows.iter().take(r).flatten().filter(|&&x| x <= l).count()
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]))
    }

    pub fn is_semistandard(&self) -> bool {
        self.is_row_standard()
            && self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| lo > hi))
    }

    /// Rows sorted into weakly increasing order.
    pub fn row_standardized(&self) -> Tableau {
        let mut rows = self.rows.clone();
        for r in &mut rows {
            r.sort_unstable();
        }
        Tableau { rows }
    }

    /// Shape and type both agree.
    pub fn comparable(&self, other: &Tableau) -> bool {
        self.shape() == other.shape() && self.content() == other.content()
    }

    /// `T ⊵ U` in the dominance order.
    pub fn dominance(&self, other: &Tableau) -> Result<Dominance> {
        if !self.comparable(other) {
            return Err(Error::ShapeTypeMismatch);
        }
        let (a, b) = (self.row_standardized(), other.row_standardized());
        let dominates = a.dominates_unchecked(&b);
        Ok(Dominance { dominates, strictly: dominates && a != b })
    }

    /// Dominance for row-standard tableaux already known to be comparable.
    pub fn dominates_unchecked(&self, other: &Tableau) -> bool {
        let top = self.max_entry();
        (1..=self.num_rows()).all(|r| (1..=top).all(|l| self.rec(l, r) >= other.rec(l, r)))
    }

    /// `Σ_{l,r} T[l,r]`; strictly increasing along strict dominance.
    pub fn dominance_key(&self) -> u64 {
        let mut total = 0u64;
        let top = self.max_entry();
        let mut counts = vec![0u64; top + 1];
        for row in &self.rows {
            for &x in row {
                counts[x] += 1;
            }
            let mut running = 0;
            for c in &counts[1..] {
                running += c;
                total += running;
            }
        }
        total
    }

    /// Every row-standard tableau of the given shape and type, in increasing order.
    pub fn all_row_standard(shape: &[usize], content: &[usize]) -> Vec<Tableau> {
        let mut out = Vec::new();
        let pool: Multiset = content.iter().enumerate().flat_map(|(i, &n)| std::iter::repeat(i + 1).take(n)).collect();
        fn go(r: usize, shape: &[usize], pool: &Multiset, cur: &mut Vec<Multiset>, out: &mut Vec<Tableau>) {
            if r == shape.len() {
                if pool.is_empty() {
                    out.push(Tableau::from_multisets(cur));
                }
                return;
            }
            for row in pool.submultisets(shape[r]) {
                let rest = pool.difference(&row).expect("submultiset");
                cur.push(row);
                go(r + 1, shape, &rest, cur, out);
                cur.pop();
            }
        }
        if shape.iter().sum::<usize>() == content.iter().sum::<usize>() {
            go(0, shape, &pool, &mut Vec::new(), &mut out);
        }
        out.sort();
        out
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.max_entry() >= 10;
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let items: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                items.join(if wide { "," } else { "" })
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Rows separated by `/`; entries are single digits, or comma separated.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("cannot parse tableau {s:?}"));
        let mut rows = Vec::new();
        for row in s.trim().split('/') {
            let row = row.trim();
            let entries: Vec<usize> = if row.contains(',') || row.contains(' ') {
                row.split([',', ' ']).filter(|t| !t.is_empty()).map(|t| t.parse().map_err(|_| bad())).collect::<Result<_>>()?
            } else {
                row.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_>>()?
            };
            if entries.contains(&0) {
                return Err(bad());
            }
            rows.push(entries);
        }
        Ok(Tableau::new(rows))
    }
}

/// Parses a tableau literal; panics on malformed input.
pub fn tab(s: &str) -> Tableau {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}
