use std::collections::BTreeSet;

use serde::Serialize;

use super::compose::compose_exprs;
use super::expr::{semistandardize, HomExpr};
use super::field::signed;
use super::tableau::Tableau;
use crate::error::{Error, Result};
use crate::partition::{Node, Partition};

/// Number of full ramps, `λ^rest_1`.
pub fn full_ramps(la: &Partition, p: usize) -> usize {
    la.restrictise(p).part(1)
}

/// Rows `m` with `λ_m + (m-1)(p-1) = F` and `λ_l + (l-1)(p-1) ≥ F` for `l ≤ m`,
/// where `F` is the number of full ramps.
pub fn nice_values(la: &Partition, p: usize) -> Vec<usize> {
    if la.is_empty() {
        return Vec::new();
    }
    let f = full_ramps(la, p);
    let val = |l: usize| la.part(l) + (l - 1) * (p - 1);
    let mut out = Vec::new();
    for m in 1..=la.len() + 1 {
        if val(m) < f {
            break;
        }
        if val(m) == f {
            out.push(m);
        }
    }
    out
}

/// `λ°` for the nice value `m`.
pub fn lambda_circ(la: &Partition, p: usize, m: usize) -> Partition {
    let parts: Vec<usize> = (1..=la.len())
        .map(|i| if i < m { la.part(i) + 1 - p } else { la.part(i + 1) })
        .collect();
    Partition::new(parts).expect("λ° is a partition")
}

/// The `λ`-tableau `U⁺` built from a `λ°`-tableau `U`.
pub fn insert_row(u: &Tableau, la: &Partition, p: usize, m: usize) -> Tableau {
    let rows = (1..=la.len().max(m))
        .map(|x| {
            if x < m {
                let mut row = vec![1; p - 1];
                row.extend(u.row(x).iter().map(|v| v + 1));
                row
            } else if x == m {
                vec![1; la.part(m)]
            } else {
                u.row(x - 1).iter().map(|v| v + 1).collect()
            }
        })
        .collect();
    Tableau::new(rows)
}

/// The magic tableau from the smallest nice value at every step.
pub fn magic_tableau(la: &Partition, p: usize) -> Tableau {
    if la.is_empty() {
        return Tableau::empty();
    }
    let m = nice_values(la, p)[0];
    let inner = lambda_circ(la, p, m);
    insert_row(&magic_tableau(&inner, p), la, p, m)
}

/// `Re(λ)`: each node holds the row it moves to under restrictisation.
pub fn re_tableau(la: &Partition, p: usize) -> Tableau {
    let rows = (1..=la.len())
        .map(|x| {
            (1..=la.part(x))
                .map(|y| {
                    let ramp = y - 1 + (p - 1) * (x - 1);
                    let missing = (x + 1..)
                        .take_while(|r| (p - 1) * (r - 1) <= ramp)
                        .filter(|&r| ramp + 1 - (p - 1) * (r - 1) > la.part(r))
                        .count();
                    x + missing
                })
                .collect()
        })
        .collect();
    Tableau::new(rows)
}

/// The magic homomorphism `S^λ → S^{λ^rest}` in the semistandard basis.
pub fn restrictisation_hom(la: &Partition, p: usize) -> HomExpr {
    semistandardize(&HomExpr::single(magic_tableau(la, p), p as u64))
}

/// Checks the one-node Carter-Payne hypotheses and returns `μ`.
pub fn carter_payne_target(la: &Partition, p: usize, a_node: Node, c_node: Node) -> Result<Partition> {
    let (a, c, d) = (a_node.row, c_node.row, c_node.col);
    if !la.removable_nodes().contains(&a_node) {
        return Err(Error::Precondition(format!("{a_node:?} is not removable from {la}")));
    }
    if !la.addable_nodes().contains(&c_node) {
        return Err(Error::Precondition(format!("{c_node:?} is not addable to {la}")));
    }
    if c <= a {
        return Err(Error::Precondition("the added node must be below the removed node".into()));
    }
    if a_node.residue(p) != c_node.residue(p) {
        return Err(Error::Precondition("nodes have different residues".into()));
    }
    if (a + 1..c).any(|r| la.part(r) != d) {
        return Err(Error::Precondition(format!("rows {}..{} of {la} are not all of length {d}", a + 1, c - 1)));
    }
    Ok(la.with_node_removed(a).with_node_added(c))
}

/// `CP(r)`: row `a` ends in `r`, rows `r..c-1` end in the next row number.
pub fn carter_payne_tableau(la: &Partition, a_node: Node, c_node: Node, r: usize) -> Tableau {
    let (a, b, c, d) = (a_node.row, a_node.col, c_node.row, c_node.col);
    let rows = (1..=la.len())
        .map(|x| {
            (1..=la.part(x))
                .map(|y| {
                    if (x, y) == (a, b) {
                        r
                    } else if r <= x && x < c && y == d {
                        x + 1
                    } else {
                        x
                    }
                })
                .collect()
        })
        .collect();
    Tableau::new(rows)
}

/// `Σ_{r=a+1}^{c} (-1)^r Θ̂_{CP(r)}`.
pub fn carter_payne_hom(la: &Partition, p: usize, a_node: Node, c_node: Node) -> Result<HomExpr> {
    carter_payne_target(la, p, a_node, c_node)?;
    let mut out = HomExpr::zero(p as u64);
    for r in a_node.row + 1..=c_node.row {
        let sign = if r % 2 == 0 { 1 } else { p as u64 - 1 };
        out.add_term(carter_payne_tableau(la, a_node, c_node, r), sign);
    }
    Ok(out)
}

/// The composite `S^λ → S^μ → S^{μ^rest}` and its coefficient at `V`.
#[derive(Debug, Clone, Serialize)]
pub struct Composite {
    pub mu: Partition,
    pub expr: HomExpr,
    pub v_tableau: Tableau,
    pub v_coefficient: i64,
}

/// `Re(μ)` with its `(c,d)` entry moved to `(a,b)`, as a `λ`-tableau.
pub fn v_tableau(mu: &Partition, p: usize, a_node: Node, c_node: Node) -> Tableau {
    let re = re_tableau(mu, p);
    let mut rows: Vec<Vec<usize>> = re.rows().to_vec();
    let moved = rows[c_node.row - 1].remove(c_node.col - 1);
    rows[a_node.row - 1].push(moved);
    Tableau::new(rows)
}

/// Composes the Carter-Payne map with the restrictisation map of `μ`, when the
/// added node lies in the same or a later ramp than the removed one.
pub fn composed_nonvanishing(la: &Partition, p: usize, a_node: Node, c_node: Node) -> Result<Composite> {
    let mu = carter_payne_target(la, p, a_node, c_node)?;
    if c_node.ramp(p) < a_node.ramp(p) {
        return Err(Error::Precondition(format!(
            "added node {c_node:?} is in an earlier ramp than removed node {a_node:?}"
        )));
    }
    let alpha = carter_payne_hom(la, p, a_node, c_node)?;
    let beta = restrictisation_hom(&mu, p);
    let expr = semistandardize(&compose_exprs(&beta, &alpha)?);
    let v = v_tableau(&mu, p, a_node, c_node);
    let v_coefficient = signed(expr.coefficient(&v), p as u64);
    Ok(Composite { mu, expr, v_tableau: v, v_coefficient })
}

fn from_beads(beads: &BTreeSet<i64>) -> Partition {
    let parts: Vec<usize> = beads.iter().rev().enumerate().map(|(i, &b)| (b + i as i64 + 1) as usize).collect();
    Partition::new(parts).expect("bead set gives a partition")
}

/// Self-conjugate partitions whose only non-negative beads (charge 0) lie on
/// the middle runner, at `lp + (p-1)/2` for `l` in a set of size at least 2,
/// together with the Carter-Payne data moving the lowest such bead one step
/// left and its mirror one step right.
pub fn middle_runner_family(p: usize, max_n: usize) -> Vec<(Partition, Node, Node)> {
    let h = (p - 1) / 2;
    let mut out = Vec::new();
    let mut max_l = 0;
    while max_l * p + h + 1 <= max_n {
        max_l += 1;
    }
    for mask in 0u64..(1 << max_l) {
        let ls: Vec<usize> = (0..max_l).filter(|l| mask >> l & 1 == 1).collect();
        if ls.len() < 2 {
            continue;
        }
        let pos: BTreeSet<i64> = ls.iter().map(|&l| (l * p + h) as i64).collect();
        let bound = *pos.iter().next_back().unwrap() + p as i64 + 2;
        let mirror = |set: &BTreeSet<i64>| -> BTreeSet<i64> {
            let mut beads = set.clone();
            for y in -bound..0 {
                if !set.contains(&(-1 - y)) {
                    beads.insert(y);
                }
            }
            beads
        };
        let beads = mirror(&pos);
        let la = from_beads(&beads);
        if la.size() > max_n {
            continue;
        }
        let k = ls[0] as i64;
        let (p_, h_) = (p as i64, h as i64);
        let mut moved = beads.clone();
        moved.remove(&(k * p_ + h_));
        moved.insert(k * p_ + h_ - 1);
        moved.remove(&(-(k + 1) * p_ + h_ - 1));
        moved.insert(-(k + 1) * p_ + h_);
        let mu = from_beads(&moved);
        let rows = la.len().max(mu.len());
        let removed = (1..=rows).find(|&r| la.part(r) > mu.part(r)).expect("a node is removed");
        let added = (1..=rows).find(|&r| mu.part(r) > la.part(r)).expect("a node is added");
        out.push((la.clone(), Node::new(removed, la.part(removed)), Node::new(added, mu.part(added))));
    }
    out.sort_by(|x, y| x.0.size().cmp(&y.0.size()).then_with(|| y.0.cmp(&x.0)));
    out
}
