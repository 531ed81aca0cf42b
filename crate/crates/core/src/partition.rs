//! Partitions, Young diagrams, hooks, cores and ramps.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A node `(row, col)` of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        Node { row, col }
    }

    /// Content `col - row`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    /// Residue `(col - row) mod p`.
    pub fn residue(&self, p: usize) -> usize {
        self.content().rem_euclid(p as i64) as usize
    }

    /// Residue in the given characteristic; in characteristic zero this is the content.
    pub fn residue_in(&self, ch: Characteristic) -> i64 {
        match ch {
            Characteristic::Prime(p) => self.residue(p) as i64,
            Characteristic::Zero => self.content(),
        }
    }

    /// The ramp containing the node: `col - 1 + (p - 1)(row - 1)`.
    pub fn ramp(&self, p: usize) -> usize {
        self.col - 1 + (p - 1) * (self.row - 1)
    }
}

impl From<(usize, usize)> for Node {
    fn from((row, col): (usize, usize)) -> Self {
        Node { row, col }
    }
}

impl From<Node> for (usize, usize) {
    fn from(n: Node) -> Self {
        (n.row, n.col)
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Characteristic used for residues. `Zero` keeps contents unreduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Characteristic {
    Prime(usize),
    Zero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Addable,
    Removable,
}

/// An addable or removable node together with its residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundaryNode {
    pub node: Node,
    pub kind: NodeKind,
    pub residue: i64,
}

/// Whether a partition is p-restricted and/or p-regular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regularity {
    pub restricted: bool,
    pub regular: bool,
}

/// Ramp statistics: nodes, addable nodes and removable nodes in one ramp.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RampStats {
    pub rmp: usize,
    pub addable: usize,
    pub removable: usize,
}

/// A partition, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// Builds a partition from integer parts, dropping trailing zeros.
pub fn make_partition(parts: &[i64]) -> Result<Partition> {
    if parts.iter().any(|&x| x < 0) {
        return Err(Error::NegativePart(parts.to_vec()));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotWeaklyDecreasing(parts.to_vec()));
    }
    let mut v: Vec<usize> = parts.iter().map(|&x| x as usize).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    Ok(Partition { parts: v })
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        make_partition(&v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(
                parts.iter().map(|&x| x as i64).collect(),
            ));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `i`th part, 1-based; zero beyond the length. `part(0)` is treated as infinite.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains_node(&self, n: Node) -> bool {
        n.row >= 1 && n.col >= 1 && n.col <= self.part(n.row)
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Dominance order: `self ⊵ other` for partitions of the same size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 1..=self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(1);
        let mut c = vec![0usize; if self.is_empty() { 0 } else { first }];
        for &x in &self.parts {
            for item in c.iter_mut().take(x) {
                *item += 1;
            }
        }
        Partition { parts: c }
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// All nodes in row-major order.
    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &x)| (1..=x).map(move |c| Node::new(i + 1, c)))
    }

    /// p-restricted: consecutive parts differ by less than p.
    pub fn is_restricted(&self, p: usize) -> bool {
        (1..=self.len()).all(|i| self.part(i) - self.part(i + 1) < p)
    }

    /// p-regular: no p equal nonzero parts.
    pub fn is_regular(&self, p: usize) -> bool {
        self.conjugate().is_restricted(p)
    }

    pub fn regularity(&self, p: usize) -> Regularity {
        Regularity {
            restricted: self.is_restricted(p),
            regular: self.is_regular(p),
        }
    }

    /// Removable nodes, top to bottom.
    pub fn removable_nodes(&self) -> Vec<Node> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| Node::new(i, self.part(i)))
            .collect()
    }

    /// Addable nodes, top to bottom.
    pub fn addable_nodes(&self) -> Vec<Node> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| Node::new(i, self.part(i) + 1))
            .collect()
    }

    /// Addable and removable nodes, top to bottom, with residues mod p.
    pub fn boundary_nodes(&self, p: usize) -> Vec<BoundaryNode> {
        self.boundary_nodes_in(Characteristic::Prime(p))
    }

    pub fn boundary_nodes_in(&self, ch: Characteristic) -> Vec<BoundaryNode> {
        let mut out = Vec::new();
        for i in 1..=self.len() + 1 {
            if i == 1 || self.part(i - 1) > self.part(i) {
                let node = Node::new(i, self.part(i) + 1);
                out.push(BoundaryNode { node, kind: NodeKind::Addable, residue: node.residue_in(ch) });
            }
            if self.part(i) > self.part(i + 1) {
                let node = Node::new(i, self.part(i));
                out.push(BoundaryNode { node, kind: NodeKind::Removable, residue: node.residue_in(ch) });
            }
        }
        out
    }

    /// Adds a node at the end of `row`; the caller guarantees it is addable.
    pub fn with_node_added(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        if row > parts.len() {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// Removes the last node of `row`; the caller guarantees it is removable.
    pub fn with_node_removed(&self, row: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn hook_length(&self, n: Node) -> Result<usize> {
        if !self.contains_node(n) {
            return Err(Error::NodeOutsideDiagram(n.row, n.col));
        }
        Ok(self.part(n.row) + self.conjugate().part(n.col) + 1 - n.row - n.col)
    }

    fn hook_unchecked(&self, conj: &Partition, n: Node) -> usize {
        self.part(n.row) + conj.part(n.col) + 1 - n.row - n.col
    }

    /// Each entry is the p-adic valuation of the hook length at that node.
    pub fn p_power_diagram(&self, p: usize) -> Vec<Vec<u32>> {
        let conj = self.conjugate();
        (1..=self.len())
            .map(|r| {
                (1..=self.part(r))
                    .map(|c| {
                        let mut h = self.hook_unchecked(&conj, Node::new(r, c));
                        let mut v = 0;
                        while h % p == 0 {
                            h /= p;
                            v += 1;
                        }
                        v
                    })
                    .collect()
            })
            .collect()
    }

    /// The rim hook associated with `n`, walking the rim from the end of its row
    /// to the foot of its column.
    pub fn rim_hook(&self, n: Node) -> Result<Vec<Node>> {
        if !self.contains_node(n) {
            return Err(Error::NodeOutsideDiagram(n.row, n.col));
        }
        let end = Node::new(self.conjugate().part(n.col), n.col);
        let mut cur = Node::new(n.row, self.part(n.row));
        let mut out = vec![cur];
        while cur != end {
            if self.contains_node(Node::new(cur.row + 1, cur.col)) {
                cur.row += 1;
            } else {
                cur.col -= 1;
            }
            out.push(cur);
        }
        Ok(out)
    }

    /// Removes the rim hook associated with `n`.
    pub fn strip_rim_hook(&self, n: Node) -> Result<Partition> {
        let hook = self.rim_hook(n)?;
        let mut parts = self.parts.clone();
        for m in hook {
            parts[m.row - 1] -= 1;
        }
        Partition::new(parts).map_err(|_| Error::Precondition("rim hook removal broke shape".into()))
    }

    /// Nodes whose hook length is exactly `h`, row-major.
    pub fn nodes_with_hook(&self, h: usize) -> Vec<Node> {
        let conj = self.conjugate();
        self.nodes().filter(|&n| self.hook_unchecked(&conj, n) == h).collect()
    }

    /// p-core and p-weight, by repeatedly stripping rim p-hooks.
    pub fn p_core_weight(&self, p: usize) -> (Partition, usize) {
        let mut cur = self.clone();
        let mut w = 0;
        while let Some(&n) = cur.nodes_with_hook(p).first() {
            cur = cur.strip_rim_hook(n).expect("node is in the diagram");
            w += 1;
        }
        (cur, w)
    }

    pub fn p_core(&self, p: usize) -> Partition {
        self.p_core_weight(p).0
    }

    pub fn p_weight(&self, p: usize) -> usize {
        self.p_core_weight(p).1
    }

    /// Positions of ramp `l`: `(r, c)` with `c - 1 + (p - 1)(r - 1) = l`, `r >= 1`, `c >= 1`.
    fn ramp_positions(p: usize, l: usize) -> impl Iterator<Item = Node> {
        (1..=l / (p - 1) + 1).map(move |r| Node::new(r, l + 1 - (p - 1) * (r - 1)))
    }

    /// Counts of nodes, addable nodes and removable nodes in ramp `l`.
    pub fn ramp_stats(&self, p: usize, l: i64) -> RampStats {
        if l < 0 {
            return RampStats::default();
        }
        let l = l as usize;
        let mut s = RampStats::default();
        for n in Self::ramp_positions(p, l) {
            if self.contains_node(n) {
                s.rmp += 1;
                if self.part(n.row + 1) < n.col && self.part(n.row) == n.col {
                    s.removable += 1;
                }
            } else if n.col == self.part(n.row) + 1 && (n.row == 1 || self.part(n.row - 1) >= n.col) {
                s.addable += 1;
            }
        }
        s
    }

    /// Largest ramp containing a node, if any.
    pub fn max_ramp(&self, p: usize) -> Option<usize> {
        self.removable_nodes().iter().map(|n| n.ramp(p)).max()
    }

    /// Moves the nodes of every ramp as far left as possible.
    pub fn restrictise(&self, p: usize) -> Partition {
        let Some(top) = self.max_ramp(p) else {
            return Partition::empty();
        };
        let mut count = vec![0usize; top + 1];
        for n in self.nodes() {
            count[n.ramp(p)] += 1;
        }
        let mut rows = vec![0usize; self.size() + 1];
        for (l, &k) in count.iter().enumerate() {
            let bottom = l / (p - 1) + 1;
            for r in (bottom + 1 - k)..=bottom {
                rows[r - 1] += 1;
                debug_assert_eq!(rows[r - 1], l + 1 - (p - 1) * (r - 1));
            }
        }
        Partition::new(rows).expect("restrictisation is a partition")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"4,3,1,1"`, `"(4,3,1^2)"` or `""`.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut v = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let bad = || Error::Precondition(format!("cannot parse partition token {tok:?}"));
            match tok.split_once('^') {
                Some((a, k)) => {
                    let a: i64 = a.trim().parse().map_err(|_| bad())?;
                    let k: usize = k.trim().parse().map_err(|_| bad())?;
                    v.extend(std::iter::repeat(a).take(k));
                }
                None => v.push(tok.parse().map_err(|_| bad())?),
            }
        }
        make_partition(&v)
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for x in (1..=n.min(max)).rev() {
            cur.push(x);
            go(n - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Shorthand used throughout the tests and the CLI.
pub fn part(s: &str) -> Partition {
    s.parse().expect("valid partition literal")
}
