use std::collections::BTreeMap;

use spechtkit::abacus::{add_all, is_quotient_separated, ordered_quotient, rouquier_walk, AbacusDisplay};
use spechtkit::{partitions, Partition};

use super::{require_prime, VerifyError};
use crate::enumerate::{sweep_list, Filter, SweepSpec};
use crate::report::{par_sweep, Log};

pub const ROUND_TRIP_MAX: usize = 25;
pub const RAMP_MAX: usize = 20;
pub const ADD_ALL_MAX: usize = 18;
pub const BLOCK_WEIGHT_MAX: usize = 3;

fn ramp_counts(la: &Partition, p: usize) -> BTreeMap<usize, usize> {
    let mut out = BTreeMap::new();
    for n in la.nodes() {
        *out.entry(n.ramp(p)).or_insert(0) += 1;
    }
    out
}

/// Adds every addable node of residue `i` at once, on the diagram.
fn add_all_on_diagram(la: &Partition, p: usize, i: usize) -> Partition {
    let rows: Vec<usize> = la.addable_nodes().into_iter().filter(|n| n.residue(p) == i).map(|n| n.row).collect();
    let mut parts: Vec<usize> = la.parts().to_vec();
    for r in rows {
        if r > parts.len() {
            parts.push(1);
        } else {
            parts[r - 1] += 1;
        }
    }
    Partition::new(parts).expect("adding addable nodes")
}

fn abacus_checks(la: &Partition, p: usize, log: &mut Log) {
    let ab = AbacusDisplay::new(la, p);
    log.same("round_trip", la, ab.partition(), la.clone());
    let (core, w) = la.p_core_weight(p);
    log.same("core_dual", la, ab.core().partition(), core.clone());
    log.same("weight_dual", la, ab.weight(), w);
    log.same("size_identity", la, core.size() + p * w, la.size());
    log.same("core_quotient_round_trip", la, AbacusDisplay::from_core_quotient(&core, p, &ab.quotient()).partition(), la.clone());
    log.same("conjugate_involution", la, la.conjugate().conjugate(), la.clone());
    let sc = la.is_self_conjugate();
    let (lo, hi) = ab.window();
    let mirror = (lo - 1..=hi + 1).all(|l| ab.is_occupied(l) != ab.is_occupied(-l - 1));
    log.same("bead_symmetry_iff_self_conjugate", la, mirror, sc);
    if sc {
        log.check("core_self_conjugate", la, core.is_self_conjugate(), || format!("core {core}"));
        let quo = ab.quotient();
        let q = ab.q_values();
        for i in 0..p {
            log.same("quotient_symmetry", la, quo[i].clone(), quo[p - 1 - i].conjugate());
            log.same("q_symmetry", la, q[i] + q[p - 1 - i], p as i64 - 1);
        }
    }
}

fn ramp_checks(la: &Partition, p: usize, log: &mut Log) {
    let rest = la.restrictise(p);
    log.check("restrictise_restricted", la, rest.is_restricted(p), || format!("{rest}"));
    log.same("restrictise_ramp_counts", la, ramp_counts(&rest, p), ramp_counts(la, p));
    if p == 2 {
        return;
    }
    let top = la.max_ramp(p).unwrap_or(0) as i64 + 2 * p as i64;
    let r = |l: i64| la.ramp_stats(p, l).rmp as i64;
    let pp = p as i64;
    for l in 0..=top {
        let lhs = la.ramp_stats(p, l).addable as i64 - la.ramp_stats(p, l - pp).removable as i64;
        let rhs = (l == 0) as i64 - r(l) + r(l - 1) + r(l - pp + 1) - r(l - pp);
        log.check("ramp_identity", la, lhs == rhs, || format!("ramp {l}: {lhs} vs {rhs}"));
    }
}

fn add_all_checks(la: &Partition, p: usize, log: &mut Log) {
    let qs = is_quotient_separated(la, p);
    for i in 0..p {
        let mu = add_all(la, p, i);
        log.same("add_all_abacus_vs_diagram", la, mu.clone(), add_all_on_diagram(la, p, i));
        if qs {
            log.check("add_all_keeps_separated", la, is_quotient_separated(&mu, p), || format!("i={i}: {mu}"));
        }
    }
    if !qs {
        return;
    }
    let Ok((end, steps)) = rouquier_walk(la, p) else {
        log.check("walk", la, false, || "walk failed on a separated partition".into());
        return;
    };
    log.check("walk_ends_rouquier", la, AbacusDisplay::new(&end, p).is_rouquier(), || format!("{end}"));
    let (a, b) = (ordered_quotient(la, p), ordered_quotient(&end, p));
    log.same("walk_keeps_ordered_quotient", la, b.ordered_quotient, a.ordered_quotient);
    log.same("walk_keeps_weight", la, b.weight, a.weight);
    let mut prev = la.clone();
    for s in &steps {
        let i = s.residue;
        let j = (i + p - 1) % p;
        let no_removable = prev.removable_nodes().iter().all(|n| n.residue(p) != i);
        log.check("walk_step_no_removable", la, no_removable, || format!("residue {i} at {prev}"));
        log.same("walk_step_is_add_all", la, add_all(&prev, p, i), s.partition.clone());
        let mut pi = AbacusDisplay::new(&prev, p).pi();
        for x in pi.iter_mut() {
            if *x == i {
                *x = j;
            } else if *x == j {
                *x = i;
            }
        }
        log.same("walk_step_swaps_runners", la, AbacusDisplay::new(&s.partition, p).pi(), pi);
        prev = s.partition.clone();
    }
}

fn all_quotients(p: usize, w: usize) -> Vec<Vec<Partition>> {
    let mut out: Vec<Vec<Partition>> = vec![vec![]];
    for _ in 0..p {
        out = out
            .into_iter()
            .flat_map(|v| {
                let used: usize = v.iter().map(Partition::size).sum();
                (0..=w - used).flat_map(partitions).map(move |k| {
                    let mut v = v.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out.into_iter().filter(|v| v.iter().map(Partition::size).sum::<usize>() == w).collect()
}

/// Charge vectors summing to zero with entries in `-r..=r`.
fn charge_vectors(p: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..p {
        out = out.into_iter().flat_map(|v| (-r..=r).map(move |c| [v.clone(), vec![c]].concat())).collect();
    }
    out.retain(|v| v.iter().sum::<i64>() == 0);
    out
}

fn block_checks(p: usize, log: &mut Log) {
    let (r, wmax) = if p == 3 { (3, BLOCK_WEIGHT_MAX) } else { (2, 2) };
    let mut jobs = Vec::new();
    for ch in charge_vectors(p, r) {
        for w in 1..=wmax {
            jobs.push((ch.clone(), w));
        }
    }
    log.merge(par_sweep(&jobs, |(ch, w), log| {
        let core = AbacusDisplay::core_from_charges(p, ch).partition();
        let block: Vec<Partition> = all_quotients(p, *w)
            .iter()
            .map(|q| AbacusDisplay::from_core_quotient(&core, p, q).partition())
            .collect();
        if block.iter().any(|la| AbacusDisplay::new(la, p).is_rouquier()) {
            for la in &block {
                log.check("rouquier_block_separated", la, is_quotient_separated(la, p), || format!("core {core}, weight {w}"));
            }
        }
    }));
}

/// Abacus, ramp and walk invariants, each on its own size range.
pub fn run(spec: &SweepSpec) -> Result<Log, VerifyError> {
    require_prime(spec, false)?;
    let p = spec.p;
    let mut log = Log::new();
    let list = sweep_list(spec, ROUND_TRIP_MAX, Filter::All);
    log.merge(par_sweep(&list, |la, log| {
        abacus_checks(la, p, log);
        if la.size() <= RAMP_MAX {
            ramp_checks(la, p, log);
        }
        if la.size() <= ADD_ALL_MAX {
            add_all_checks(la, p, log);
        }
    }));
    block_checks(p, &mut log);
    Ok(log)
}
