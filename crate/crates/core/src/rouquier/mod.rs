//! Decomposition numbers for Rouquier blocks, and composition lengths of
//! Specht modules labelled by quotient-separated partitions.

mod lr;
mod oracle;

use std::collections::BTreeMap;

pub use lr::{lr_coefficient, lr_support_pairs, skew_expansion, subpartitions};
pub use oracle::{BuiltinOracle, TableOracle, WeylOracle, ORACLE_ENV};

use crate::abacus::{rouquier_walk, AbacusDisplay};
use crate::error::{Error, Result};
use crate::partition::{partitions, Partition};

/// `d_{λμ}` from ordered quotients, where the last entry of `mu` is empty.
///
/// Sums over `σ(0..p-2)` and `τ(1..p-1)` (with `τ(0) = σ(p-1) = ∅`) the product
/// of `c^{λ[i]}_{τ(i)', σ(i)}` over all `i` and `c^{μ[i]}_{σ(i), τ(i+1)}` over `i < p-1`.
pub fn d_from_quotients(la: &[Partition], mu: &[Partition]) -> u64 {
    let p = la.len();
    assert_eq!(mu.len(), p);
    fn go(i: usize, tau: &Partition, la: &[Partition], mu: &[Partition]) -> u64 {
        let p = la.len();
        let tau_c = tau.conjugate();
        if i == p - 1 {
            return lr_coefficient(&la[i], &tau_c, &Partition::empty());
        }
        let mut total = 0;
        for (sigma, c1) in skew_expansion(&la[i], &tau_c) {
            for (next, c2) in skew_expansion(&mu[i], &sigma) {
                total += c1 * c2 * go(i + 1, &next, la, mu);
            }
        }
        total
    }
    go(0, &Partition::empty(), la, mu)
}

fn rouquier_display(la: &Partition, p: usize) -> Result<AbacusDisplay> {
    let ab = AbacusDisplay::new(la, p);
    if !ab.is_rouquier() {
        return Err(Error::NotRouquier(la.to_string(), p));
    }
    Ok(ab)
}

/// The decomposition number `[S^λ : D^μ]` for Rouquier partitions `λ`, `μ` in the
/// same block with `μ` p-restricted.
pub fn d_coeff(la: &Partition, mu: &Partition, p: usize) -> Result<u64> {
    let a = AbacusDisplay::new(la, p);
    let b = AbacusDisplay::new(mu, p);
    if a.core() != b.core() || a.weight() != b.weight() {
        return Err(Error::CoreWeightMismatch);
    }
    let a = rouquier_display(la, p)?;
    let b = rouquier_display(mu, p)?;
    let mq = b.ordered_quotient();
    if !mq[p - 1].is_empty() {
        return Err(Error::NotRestrictedQuotient(mu.to_string()));
    }
    Ok(d_from_quotients(&a.ordered_quotient(), &mq))
}

/// `a_{μν}`: the product of Weyl module decomposition numbers slot by slot,
/// zero when slot sizes differ, unknown when any factor is unknown.
pub fn a_coeff(mu: &[Partition], nu: &[Partition], p: usize, oracle: &dyn WeylOracle) -> Option<u64> {
    if mu.iter().zip(nu).any(|(a, b)| a.size() != b.size()) {
        return Some(0);
    }
    let mut prod = 1;
    let mut unknown = false;
    for i in 0..p - 1 {
        match oracle.multiplicity(&mu[i], &nu[i], p) {
            Some(0) => return Some(0),
            Some(v) => prod *= v,
            None => unknown = true,
        }
    }
    (!unknown).then_some(prod)
}

/// Ordered quotients `[κ_0, ..., κ_{p-2}, ∅]` of total size `w`.
pub fn restricted_quotients(p: usize, w: usize) -> Vec<Vec<Partition>> {
    fn go(slot: usize, left: usize, p: usize, cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        if slot == p - 1 {
            if left == 0 {
                let mut v = cur.clone();
                v.push(Partition::empty());
                out.push(v);
            }
            return;
        }
        for k in 0..=left {
            for kappa in partitions(k) {
                cur.push(kappa);
                go(slot + 1, left - k, p, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(0, w, p, &mut Vec::new(), &mut out);
    out
}

/// The row of the decomposition matrix for a Rouquier partition: for each
/// p-restricted `ν` in the block, `Σ_μ d_{λμ} a_{μν}`, or `None` if unknown.
pub fn rouquier_row(la: &Partition, p: usize, oracle: &dyn WeylOracle) -> Result<BTreeMap<Partition, Option<u64>>> {
    let ab = rouquier_display(la, p)?;
    let core = ab.core().partition();
    let lq = ab.ordered_quotient();
    let block = restricted_quotients(p, ab.weight());
    let ds: Vec<(usize, u64)> = block
        .iter()
        .enumerate()
        .map(|(k, mq)| (k, d_from_quotients(&lq, mq)))
        .filter(|&(_, d)| d > 0)
        .collect();
    let mut row = BTreeMap::new();
    for nq in &block {
        let nu = AbacusDisplay::from_core_ordered_quotient(&core, p, nq).partition();
        let mut total = Some(0u64);
        for &(k, d) in &ds {
            total = match (total, a_coeff(&block[k], nq, p, oracle)) {
                (Some(t), Some(a)) => Some(t + d * a),
                (_, Some(0)) => total,
                _ => None,
            };
        }
        row.insert(nu, total);
    }
    Ok(row)
}

/// Composition length of `S^λ` for a quotient-separated `λ`, by walking to a
/// Rouquier partition and summing its row.
pub fn qs_length(la: &Partition, p: usize, oracle: &dyn WeylOracle) -> Result<Option<u64>> {
    let (end, _) = rouquier_walk(la, p)?;
    let row = rouquier_row(&end, p, oracle)?;
    Ok(row.values().try_fold(0, |acc, v| v.map(|x| acc + x)))
}
