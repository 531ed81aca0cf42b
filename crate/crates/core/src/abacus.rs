//! Abacus displays, cores, quotients and the ordered quotient.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Bead configuration with a bead at `λ_i - i` for every `i >= 1`.
///
/// Stored as the finite set of positions whose occupancy differs from the
/// ground state, in which exactly the negative positions are occupied.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbacusDisplay {
    p: usize,
    diff: BTreeSet<i64>,
}

impl AbacusDisplay {
    pub fn new(la: &Partition, p: usize) -> Self {
        assert!(p >= 2, "p must be at least 2");
        let mut ab = AbacusDisplay { p, diff: BTreeSet::new() };
        let n = la.len() as i64;
        let beads: BTreeSet<i64> = (1..=la.len()).map(|i| la.part(i) as i64 - i as i64).collect();
        for x in -n..=(la.part(1) as i64) {
            ab.set(x, beads.contains(&x));
        }
        ab
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn is_occupied(&self, x: i64) -> bool {
        (x < 0) != self.diff.contains(&x)
    }

    pub fn set(&mut self, x: i64, occupied: bool) {
        if occupied == (x < 0) {
            self.diff.remove(&x);
        } else {
            self.diff.insert(x);
        }
    }

    /// Moves a bead; panics unless `from` is occupied and `to` vacant.
    pub fn move_bead(&mut self, from: i64, to: i64) {
        assert!(self.is_occupied(from) && !self.is_occupied(to), "illegal bead move");
        self.set(from, false);
        self.set(to, true);
    }

    /// Runner of a position.
    pub fn runner(&self, x: i64) -> usize {
        x.rem_euclid(self.p as i64) as usize
    }

    /// A window `[lo, hi]` outside of which the display agrees with the ground state,
    /// widened to whole rows.
    pub fn window(&self) -> (i64, i64) {
        let p = self.p as i64;
        let lo = self.diff.first().copied().unwrap_or(0).min(0);
        let hi = self.diff.last().copied().unwrap_or(-1).max(-1);
        (lo.div_euclid(p) * p - p, hi.div_euclid(p) * p + 2 * p - 1)
    }

    /// Occupied positions that are at least zero.
    pub fn nonnegative_beads(&self) -> Vec<i64> {
        self.diff.iter().copied().filter(|&x| x >= 0).collect()
    }

    pub fn partition(&self) -> Partition {
        let (lo, hi) = self.window();
        let beads: Vec<i64> = (lo..=hi).rev().filter(|&x| self.is_occupied(x)).collect();
        let parts: Vec<usize> = beads
            .iter()
            .enumerate()
            .map(|(i, &b)| {
                let v = b + i as i64 + 1;
                assert!(v >= 0, "bead configuration has the wrong charge");
                v as usize
            })
            .collect();
        Partition::new(parts).expect("bead positions are strictly decreasing")
    }

    /// Positions on runner `i` in the window, increasing.
    fn runner_positions(&self, i: usize) -> impl Iterator<Item = i64> + '_ {
        let (lo, hi) = self.window();
        let p = self.p as i64;
        (lo.div_euclid(p)..=hi.div_euclid(p)).map(move |k| k * p + i as i64)
    }

    /// Number of beads on runner `i` in excess of the ground state.
    pub fn runner_charge(&self, i: usize) -> i64 {
        self.runner_positions(i)
            .map(|x| match (x < 0, self.is_occupied(x)) {
                (false, true) => 1,
                (true, false) => -1,
                _ => 0,
            })
            .sum()
    }

    /// `q_i`: the first vacant position on runner `i` of the core.
    pub fn q_values(&self) -> Vec<i64> {
        (0..self.p)
            .map(|i| self.runner_charge(i) * self.p as i64 + i as i64)
            .collect()
    }

    pub fn core(&self) -> AbacusDisplay {
        let mut out = AbacusDisplay { p: self.p, diff: BTreeSet::new() };
        for (i, q) in self.q_values().into_iter().enumerate() {
            let ground = i as i64;
            if q > ground {
                for x in (ground..q).step_by(self.p) {
                    out.set(x, true);
                }
            } else {
                for x in (q..ground).step_by(self.p) {
                    out.set(x, false);
                }
            }
        }
        out
    }

    /// Pairs `l < m` on a common runner with `l` vacant and `m` occupied.
    pub fn weight(&self) -> usize {
        (0..self.p)
            .map(|i| {
                let mut vacant = 0;
                let mut w = 0;
                for x in self.runner_positions(i) {
                    if self.is_occupied(x) {
                        w += vacant;
                    } else {
                        vacant += 1;
                    }
                }
                w
            })
            .sum()
    }

    /// The quotient partition read from runner `i` alone.
    pub fn runner_quotient(&self, i: usize) -> Partition {
        let mut vacant = 0usize;
        let mut counts = Vec::new();
        for x in self.runner_positions(i) {
            if self.is_occupied(x) {
                counts.push(vacant);
            } else {
                vacant += 1;
            }
        }
        counts.reverse();
        Partition::new(counts).expect("vacancy counts decrease downwards")
    }

    /// The p-quotient indexed by runner.
    pub fn quotient(&self) -> Vec<Partition> {
        (0..self.p).map(|i| self.runner_quotient(i)).collect()
    }

    /// First vacant and last occupied position on runner `i`.
    pub fn first_space_last_bead(&self, i: usize) -> (i64, i64) {
        let pos: Vec<i64> = self.runner_positions(i).collect();
        let fs = *pos.iter().find(|&&x| !self.is_occupied(x)).expect("window holds a space");
        let lb = *pos.iter().rev().find(|&&x| self.is_occupied(x)).expect("window holds a bead");
        (fs, lb)
    }

    /// No two runners each have their first space before the other's last bead.
    pub fn is_quotient_separated(&self) -> bool {
        let fl: Vec<(i64, i64)> = (0..self.p).map(|i| self.first_space_last_bead(i)).collect();
        for i in 0..self.p {
            for j in i + 1..self.p {
                if fl[i].0 < fl[j].1 && fl[j].0 < fl[i].1 {
                    return false;
                }
            }
        }
        true
    }

    /// The permutation ordering the runners by `q_i`.
    pub fn pi(&self) -> Vec<usize> {
        let q = self.q_values();
        let mut pi: Vec<usize> = (0..self.p).collect();
        pi.sort_by_key(|&i| q[i]);
        pi
    }

    /// Entry `i` is the quotient on runner `pi(i)`.
    pub fn ordered_quotient(&self) -> Vec<Partition> {
        self.pi().into_iter().map(|i| self.runner_quotient(i)).collect()
    }

    /// `d_j = floor((q_{pi(j)} - q_{pi(j-1)}) / p)` for `1 <= j < p`.
    pub fn gaps(&self) -> Vec<i64> {
        let q = self.q_values();
        let pi = self.pi();
        (1..self.p)
            .map(|j| (q[pi[j]] - q[pi[j - 1]]).div_euclid(self.p as i64))
            .collect()
    }

    pub fn is_rouquier(&self) -> bool {
        let q = self.q_values();
        let pi = self.pi();
        let bound = (self.weight() as i64 - 1) * self.p as i64;
        (1..self.p).all(|j| q[pi[j]] - q[pi[j - 1]] > bound)
    }

    /// Moves every bead at a position `x - 1` with `x` vacant and `x ≡ i`.
    pub fn add_all(&mut self, i: usize) {
        let (lo, hi) = self.window();
        let moves: Vec<i64> = (lo..=hi)
            .filter(|&x| self.runner(x) == i && !self.is_occupied(x) && self.is_occupied(x - 1))
            .collect();
        for x in moves {
            self.move_bead(x - 1, x);
        }
    }

    /// Moves every bead at a position `x` with `x - 1` vacant and `x ≡ i`.
    pub fn remove_all(&mut self, i: usize) {
        let (lo, hi) = self.window();
        let moves: Vec<i64> = (lo..=hi)
            .filter(|&x| self.runner(x) == i && self.is_occupied(x) && !self.is_occupied(x - 1))
            .collect();
        for x in moves {
            self.move_bead(x, x - 1);
        }
    }

    /// The p-core whose runner `i` holds `charges[i]` beads beyond the ground state.
    pub fn core_from_charges(p: usize, charges: &[i64]) -> Self {
        assert_eq!(charges.len(), p);
        assert_eq!(charges.iter().sum::<i64>(), 0, "charges must sum to zero");
        let mut out = AbacusDisplay { p, diff: BTreeSet::new() };
        for (i, &n) in charges.iter().enumerate() {
            let (a, b) = if n > 0 { (0, n) } else { (n, 0) };
            for row in a..b {
                out.set(row * p as i64 + i as i64, n > 0);
            }
        }
        out
    }

    /// Builds a display from a p-core and a runner-indexed quotient.
    pub fn from_core_quotient(core: &Partition, p: usize, quotient: &[Partition]) -> Self {
        assert_eq!(quotient.len(), p);
        let base = AbacusDisplay::new(core, p);
        let q = base.q_values();
        let mut out = AbacusDisplay { p, diff: BTreeSet::new() };
        for i in 0..p {
            let n = (q[i] - i as i64).div_euclid(p as i64);
            let kappa = &quotient[i];
            let len = kappa.len() as i64;
            // the j-th lowest bead sits in row n - j + kappa_j
            let rows: BTreeSet<i64> = (1..=len).map(|j| n - j + kappa.part(j as usize) as i64).collect();
            for row in (n - len).min(0)..(n + kappa.part(1) as i64 + 1).max(0) {
                out.set(row * p as i64 + i as i64, row < n - len || rows.contains(&row));
            }
        }
        out
    }

    /// Builds a display from a p-core and an ordered quotient.
    pub fn from_core_ordered_quotient(core: &Partition, p: usize, oq: &[Partition]) -> Self {
        assert_eq!(oq.len(), p);
        let pi = AbacusDisplay::new(core, p).pi();
        let mut quotient = vec![Partition::empty(); p];
        for (k, &r) in pi.iter().enumerate() {
            quotient[r] = oq[k].clone();
        }
        Self::from_core_quotient(core, p, &quotient)
    }

    /// Text grid, one abacus row per line, `b` for a bead and `-` for a space.
    pub fn render(&self) -> String {
        let (lo, hi) = self.window();
        let p = self.p as i64;
        let mut s = String::new();
        for row in lo.div_euclid(p)..=hi.div_euclid(p) {
            for i in 0..p {
                s.push(if self.is_occupied(row * p + i) { 'b' } else { '-' });
            }
            s.push('\n');
        }
        s
    }
}

/// Core, weight and (ordered) quotient data of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderedQuotient {
    pub core: Partition,
    pub weight: usize,
    pub q: Vec<i64>,
    pub pi: Vec<usize>,
    pub quotient: Vec<Partition>,
    pub ordered_quotient: Vec<Partition>,
}

pub fn ordered_quotient(la: &Partition, p: usize) -> OrderedQuotient {
    let ab = AbacusDisplay::new(la, p);
    OrderedQuotient {
        core: ab.core().partition(),
        weight: ab.weight(),
        q: ab.q_values(),
        pi: ab.pi(),
        quotient: ab.quotient(),
        ordered_quotient: ab.ordered_quotient(),
    }
}

pub fn is_quotient_separated(la: &Partition, p: usize) -> bool {
    AbacusDisplay::new(la, p).is_quotient_separated()
}

pub fn is_rouquier(la: &Partition, p: usize) -> bool {
    AbacusDisplay::new(la, p).is_rouquier()
}

/// Adds every addable node of residue `i`.
pub fn add_all(la: &Partition, p: usize, i: usize) -> Partition {
    let mut parts = la.parts().to_vec();
    for n in la.addable_nodes() {
        if n.residue(p) == i {
            if n.row > parts.len() {
                parts.push(1);
            } else {
                parts[n.row - 1] += 1;
            }
        }
    }
    Partition::new(parts).expect("adding addable nodes keeps a partition")
}

/// Cycle notation of a permutation of `0..n`, fixed points omitted.
pub fn cycle_notation(pi: &[usize]) -> String {
    let mut seen = vec![false; pi.len()];
    let mut out = String::new();
    for start in 0..pi.len() {
        if seen[start] || pi[start] == start {
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let mut x = pi[start];
        while x != start {
            seen[x] = true;
            cyc.push(x);
            x = pi[x];
        }
        let body: Vec<String> = cyc.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("({})", body.join(",")));
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// One step of the walk: the residue used and the partition reached.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WalkStep {
    pub residue: usize,
    pub partition: Partition,
}

/// Walks a quotient-separated partition to a Rouquier partition with the same
/// ordered quotient by repeated `add_all`, choosing the smallest usable residue.
pub fn rouquier_walk(la: &Partition, p: usize) -> Result<(Partition, Vec<WalkStep>)> {
    let mut ab = AbacusDisplay::new(la, p);
    if !ab.is_quotient_separated() {
        return Err(Error::NotQuotientSeparated(la.to_string(), p));
    }
    let w = ab.weight() as i64;
    let mut steps = Vec::new();
    while !ab.is_rouquier() {
        let q = ab.q_values();
        let sandwich = (0..p).find(|&i| {
            let lo = q[i];
            let hi = q[(i + p - 1) % p];
            (0..p).any(|k| hi > q[k] && q[k] > lo)
        });
        let i = match sandwich {
            Some(i) => i,
            None => {
                let pi = ab.pi();
                let d = ab.gaps();
                (1..p)
                    .filter(|&j| d[j - 1] < w - 1)
                    .map(|j| pi[j - 1])
                    .min()
                    .expect("a non-Rouquier partition has a short gap")
            }
        };
        ab.add_all(i);
        steps.push(WalkStep { residue: i, partition: ab.partition() });
    }
    Ok((ab.partition(), steps))
}
