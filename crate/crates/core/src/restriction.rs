//! Signatures, normal nodes, modular branching and the Mullineux map.

use serde::Serialize;

use crate::abacus::AbacusDisplay;
use crate::error::{Error, Result};
use crate::partition::{Node, NodeKind, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// The `i`-signature: addable (`+`) and removable (`-`) `i`-nodes, top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignSeq {
    pub entries: Vec<(Sign, Node)>,
}

impl SignSeq {
    /// Builds the signature without any restrictedness check.
    pub fn of(la: &Partition, p: usize, i: usize) -> SignSeq {
        let entries = la
            .boundary_nodes(p)
            .into_iter()
            .filter(|b| b.residue as usize == i)
            .map(|b| {
                let s = match b.kind {
                    NodeKind::Addable => Sign::Plus,
                    NodeKind::Removable => Sign::Minus,
                };
                (s, b.node)
            })
            .collect();
        SignSeq { entries }
    }

    /// Deletes adjacent `-+` pairs until none remain.
    pub fn reduced(&self) -> SignSeq {
        let mut stack: Vec<(Sign, Node)> = Vec::new();
        for &(s, n) in &self.entries {
            if s == Sign::Plus && matches!(stack.last(), Some((Sign::Minus, _))) {
                stack.pop();
            } else {
                stack.push((s, n));
            }
        }
        SignSeq { entries: stack }
    }

    /// Nodes carrying the given sign, in order.
    pub fn nodes(&self, sign: Sign) -> Vec<Node> {
        self.entries.iter().filter(|e| e.0 == sign).map(|e| e.1).collect()
    }

    /// The signs as a string such as `"+--"`.
    pub fn signs(&self) -> String {
        self.entries
            .iter()
            .map(|e| if e.0 == Sign::Plus { '+' } else { '-' })
            .collect()
    }
}

fn require_restricted(la: &Partition, p: usize) -> Result<()> {
    if la.is_restricted(p) {
        Ok(())
    } else {
        Err(Error::NotRestricted(la.to_string(), p))
    }
}

/// The `i`-signature of a p-restricted partition.
pub fn signature(la: &Partition, p: usize, i: usize) -> Result<SignSeq> {
    require_restricted(la, p)?;
    Ok(SignSeq::of(la, p, i))
}

/// Removable `i`-nodes surviving reduction.
pub fn normal_nodes(la: &Partition, p: usize, i: usize) -> Vec<Node> {
    SignSeq::of(la, p, i).reduced().nodes(Sign::Minus)
}

/// Addable `i`-nodes surviving reduction.
pub fn conormal_nodes(la: &Partition, p: usize, i: usize) -> Vec<Node> {
    SignSeq::of(la, p, i).reduced().nodes(Sign::Plus)
}

/// Number of normal `i`-nodes.
pub fn nor(la: &Partition, p: usize, i: usize) -> usize {
    normal_nodes(la, p, i).len()
}

/// Number of removable `i`-nodes.
pub fn rem(la: &Partition, p: usize, i: usize) -> usize {
    la.removable_nodes().iter().filter(|n| n.residue(p) == i).count()
}

fn remove_nodes(la: &Partition, nodes: &[Node]) -> Partition {
    let mut parts = la.parts().to_vec();
    for n in nodes {
        parts[n.row - 1] -= 1;
    }
    Partition::new(parts).expect("removing removable nodes keeps a partition")
}

fn add_nodes(la: &Partition, nodes: &[Node]) -> Partition {
    let mut parts = la.parts().to_vec();
    for n in nodes {
        if n.row > parts.len() {
            parts.push(0);
        }
        parts[n.row - 1] += 1;
    }
    Partition::new(parts).expect("adding addable nodes keeps a partition")
}

/// Removes all removable `i`-nodes.
pub fn remove_all_once(la: &Partition, p: usize, i: usize) -> Partition {
    let nodes: Vec<Node> = la.removable_nodes().into_iter().filter(|n| n.residue(p) == i).collect();
    remove_nodes(la, &nodes)
}

/// Applies `remove_all_once` for each letter of `word`, left to right; also
/// returns how many nodes each step removed.
pub fn remove_all(la: &Partition, p: usize, word: &[usize]) -> (Partition, Vec<usize>) {
    let mut cur = la.clone();
    let mut counts = Vec::with_capacity(word.len());
    for &i in word {
        counts.push(rem(&cur, p, i));
        cur = remove_all_once(&cur, p, i);
    }
    (cur, counts)
}

/// Repeatedly removes all removable nodes of residue `i` or `-i`, for a
/// self-conjugate partition.
pub fn remove_all_pm(la: &Partition, p: usize, i: usize) -> Result<Partition> {
    if !la.is_self_conjugate() {
        return Err(Error::NotSelfConjugate(la.to_string()));
    }
    let j = (p - i % p) % p;
    let mut cur = la.clone();
    loop {
        let nodes: Vec<Node> = cur
            .removable_nodes()
            .into_iter()
            .filter(|n| n.residue(p) == i || n.residue(p) == j)
            .collect();
        if nodes.is_empty() {
            return Ok(cur);
        }
        cur = remove_nodes(&cur, &nodes);
    }
}

/// Removes all normal nodes for each letter of `word` in turn.
pub fn remove_normal(la: &Partition, p: usize, word: &[usize]) -> Result<(Partition, Vec<usize>)> {
    require_restricted(la, p)?;
    let mut cur = la.clone();
    let mut counts = Vec::with_capacity(word.len());
    for &i in word {
        let nodes = normal_nodes(&cur, p, i);
        counts.push(nodes.len());
        cur = remove_nodes(&cur, &nodes);
    }
    Ok((cur, counts))
}

fn require_odd(p: usize) -> Result<()> {
    if p >= 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedPrime(p))
    }
}

/// True when some removable `i`-node lies in an earlier ramp than some addable `i`-node.
pub fn later_addable_criterion(la: &Partition, p: usize, i: usize) -> bool {
    let bn = la.boundary_nodes(p);
    let first_removable = bn
        .iter()
        .filter(|b| b.kind == NodeKind::Removable && b.residue as usize == i)
        .map(|b| b.node.ramp(p))
        .min();
    let last_addable = bn
        .iter()
        .filter(|b| b.kind == NodeKind::Addable && b.residue as usize == i)
        .map(|b| b.node.ramp(p))
        .max();
    matches!((first_removable, last_addable), (Some(r), Some(a)) if a > r)
}

/// Whether the restriction along `word` drops below the naive count at some
/// step, decided with the ramp criterion.
pub fn lightning(la: &Partition, p: usize, word: &[usize]) -> Result<bool> {
    require_odd(p)?;
    let mut cur = la.clone();
    for &i in word {
        if later_addable_criterion(&cur, p, i) {
            return Ok(true);
        }
        cur = remove_all_once(&cur, p, i);
    }
    Ok(false)
}

/// The same question answered by restrictising once and comparing normal-node
/// counts with removable-node counts step by step.
pub fn lightning_direct(la: &Partition, p: usize, word: &[usize]) -> Result<bool> {
    require_odd(p)?;
    let mut rest = la.restrictise(p);
    let mut cur = la.clone();
    for &i in word {
        let normal = normal_nodes(&rest, p, i);
        if normal.len() < rem(&cur, p, i) {
            return Ok(true);
        }
        rest = remove_nodes(&rest, &normal);
        cur = remove_all_once(&cur, p, i);
    }
    Ok(false)
}

/// Finds `k < l` with positions `kp+i-1`, `lp+i` occupied, `kp+i`, `lp+i-1`
/// vacant and at least `l-k` beads strictly between `kp+i` and `lp+i-1`.
pub fn abacus_lightning_witness(la: &Partition, p: usize, i: usize) -> Option<(i64, i64)> {
    let ab = AbacusDisplay::new(la, p);
    let (lo, hi) = ab.window();
    let (pp, ii) = (p as i64, i as i64);
    let rows: Vec<i64> = (lo.div_euclid(pp) - 1..=hi.div_euclid(pp) + 1).collect();
    let lower: Vec<i64> = rows
        .iter()
        .copied()
        .filter(|&k| ab.is_occupied(k * pp + ii - 1) && !ab.is_occupied(k * pp + ii))
        .collect();
    let upper: Vec<i64> = rows
        .iter()
        .copied()
        .filter(|&l| ab.is_occupied(l * pp + ii) && !ab.is_occupied(l * pp + ii - 1))
        .collect();
    for &k in &lower {
        for &l in upper.iter().filter(|&&l| l > k) {
            let beads = (k * pp + ii + 1..=l * pp + ii - 2).filter(|&x| ab.is_occupied(x)).count() as i64;
            if beads >= l - k {
                return Some((k, l));
            }
        }
    }
    None
}

/// The Mullineux map on p-restricted partitions, by stripping normal nodes of
/// the largest available residue and re-adding conormal nodes of the negated
/// residue.
pub fn mullineux(la: &Partition, p: usize) -> Result<Partition> {
    require_restricted(la, p)?;
    Ok(mullineux_rec(la, p))
}

fn mullineux_rec(la: &Partition, p: usize) -> Partition {
    if la.is_empty() {
        return Partition::empty();
    }
    let (i, normal) = (0..p)
        .rev()
        .map(|i| (i, normal_nodes(la, p, i)))
        .find(|(_, n)| !n.is_empty())
        .expect("a nonempty restricted partition has a normal node");
    let inner = mullineux_rec(&remove_nodes(la, &normal), p);
    let j = (p - i) % p;
    let co = conormal_nodes(&inner, p, j);
    assert!(co.len() >= normal.len(), "not enough conormal nodes");
    add_nodes(&inner, &co[co.len() - normal.len()..])
}
