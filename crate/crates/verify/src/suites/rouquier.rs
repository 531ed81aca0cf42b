use spechtkit::abacus::{is_quotient_separated, AbacusDisplay};
use spechtkit::classify::in_two_factor_set;
use spechtkit::rouquier::{d_coeff, d_from_quotients, lr_coefficient, lr_support_pairs, qs_length, restricted_quotients, subpartitions, TableOracle};
use spechtkit::{partitions, Partition};

use super::{require_prime, VerifyError};
use crate::enumerate::{sweep_list, Filter, SweepSpec};
use crate::report::{par_sweep, Log};

/// Largest `|γ|` in the LR symmetry and support sweeps.
pub const LR_MAX: usize = 8;
/// Largest `|α|+|β|` in the two-products check.
pub const MERGE_MAX: usize = 7;
/// Largest weight and core size for the tuple enumeration.
pub const BRUTE_WEIGHT: usize = 2;
pub const BRUTE_CORE: usize = 6;

fn upto(w: usize) -> Vec<Partition> {
    (0..=w).flat_map(partitions).collect()
}

fn lr_checks(log: &mut Log) {
    let gammas: Vec<Partition> = (0..=LR_MAX).flat_map(partitions).collect();
    let sub = par_sweep(&gammas, |gamma, log| {
        for alpha in subpartitions(gamma) {
            for beta in partitions(gamma.size() - alpha.size()) {
                let (a, b) = (lr_coefficient(gamma, &alpha, &beta), lr_coefficient(gamma, &beta, &alpha));
                log.check("lr_symmetry", gamma, a == b, || format!("alpha {alpha}, beta {beta}: {a} vs {b}"));
            }
        }
        if gamma.size() > 1 {
            let n = lr_support_pairs(gamma).len();
            log.check("at_least_three_support_pairs", gamma, n >= 3, || format!("{n} pairs"));
        }
    });
    log.merge(sub);
    for n in 2..=MERGE_MAX {
        for k in 1..n {
            for alpha in partitions(k) {
                for beta in partitions(n - k) {
                    let len = alpha.len().max(beta.len());
                    let sum: Vec<usize> = (1..=len).map(|i| alpha.part(i) + beta.part(i)).collect();
                    let gamma = Partition::new(sum).expect("sum of partitions");
                    let mut merged: Vec<usize> = alpha.parts().iter().chain(beta.parts()).copied().collect();
                    merged.sort_unstable_by(|a, b| b.cmp(a));
                    let delta = Partition::new(merged).expect("sorted");
                    let subject = format!("{alpha} {beta}");
                    let ok = gamma != delta
                        && lr_coefficient(&gamma, &alpha, &beta) > 0
                        && lr_coefficient(&delta, &alpha, &beta) > 0;
                    log.check("two_products", subject, ok, || format!("gamma {gamma}, delta {delta}"));
                }
            }
        }
    }
}

/// `d` by summing over every tuple of partitions of size at most `w`.
pub fn d_by_tuples(la: &[Partition], mu: &[Partition], w: usize) -> u64 {
    let p = la.len();
    let small = upto(w);
    let empty = Partition::empty();
    // slots: sigma(0..p-1), tau(1..p)
    fn go(
        k: usize,
        p: usize,
        small: &[Partition],
        chosen: &mut Vec<Partition>,
        la: &[Partition],
        mu: &[Partition],
        empty: &Partition,
    ) -> u64 {
        if k == 2 * (p - 1) {
            let sigma = |i: usize| if i < p - 1 { &chosen[i] } else { empty };
            let tau = |i: usize| if i == 0 { empty } else { &chosen[p - 1 + i - 1] };
            let mut prod = 1;
            for i in 0..p {
                prod *= lr_coefficient(&la[i], &tau(i).conjugate(), sigma(i));
                if prod == 0 {
                    return 0;
                }
            }
            for i in 0..p - 1 {
                prod *= lr_coefficient(&mu[i], sigma(i), tau(i + 1));
                if prod == 0 {
                    return 0;
                }
            }
            return prod;
        }
        let mut total = 0;
        for x in small {
            chosen.push(x.clone());
            total += go(k + 1, p, small, chosen, la, mu, empty);
            chosen.pop();
        }
        total
    }
    go(0, p, &small, &mut Vec::new(), la, mu, &empty)
}

fn all_quotients(p: usize, w: usize) -> Vec<Vec<Partition>> {
    let mut out: Vec<Vec<Partition>> = vec![vec![]];
    for _ in 0..p {
        out = out
            .into_iter()
            .flat_map(|v| {
                let used: usize = v.iter().map(Partition::size).sum();
                upto(w - used).into_iter().map(move |k| {
                    let mut v = v.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out.into_iter().filter(|v| v.iter().map(Partition::size).sum::<usize>() == w).collect()
}

fn d_checks(p: usize, log: &mut Log) {
    for w in 0..=BRUTE_WEIGHT {
        for lq in all_quotients(p, w) {
            for mq in restricted_quotients(p, w) {
                let (got, want) = (d_from_quotients(&lq, &mq), d_by_tuples(&lq, &mq, w));
                log.check("d_quotients_vs_tuples", format!("{lq:?}"), got == want, || format!("{mq:?}: {got} vs {want}"));
            }
        }
    }
    let cores: Vec<Partition> =
        (0..=BRUTE_CORE).flat_map(partitions).filter(|c| c.p_weight(p) == 0).collect();
    for core in &cores {
        for w in 0..=BRUTE_WEIGHT {
            let block: Vec<Partition> = all_quotients(p, w)
                .iter()
                .map(|q| AbacusDisplay::from_core_quotient(core, p, q).partition())
                .collect();
            if !AbacusDisplay::new(&block[0], p).is_rouquier() {
                log.note("non_rouquier_blocks");
                continue;
            }
            log.note("rouquier_blocks");
            let restricted: Vec<Partition> = restricted_quotients(p, w)
                .iter()
                .map(|q| AbacusDisplay::from_core_ordered_quotient(core, p, q).partition())
                .collect();
            for la in &block {
                let lq = AbacusDisplay::new(la, p).ordered_quotient();
                for mu in &restricted {
                    let mq = AbacusDisplay::new(mu, p).ordered_quotient();
                    let got = d_coeff(la, mu, p).ok();
                    let want = d_by_tuples(&lq, &mq, w);
                    log.check("d_vs_tuples", la, got == Some(want), || format!("mu {mu}: {got:?} vs {want}"));
                }
                if restricted.contains(la) {
                    log.same("d_diagonal", la, d_coeff(la, la, p).ok(), Some(1));
                }
            }
        }
    }
}

/// LR identities, `d` against tuple enumeration, and the length-two consistency check.
pub fn run(spec: &SweepSpec) -> Result<Log, VerifyError> {
    require_prime(spec, true)?;
    let p = spec.p;
    let oracle = TableOracle::from_env()?;
    let mut log = Log::new();
    lr_checks(&mut log);
    if p == 3 {
        d_checks(p, &mut log);
    }
    let list = sweep_list(spec, usize::MAX, Filter::SelfConjugate);
    let sub = par_sweep(&list, |la, log| {
        if !is_quotient_separated(la, p) {
            return;
        }
        match qs_length(la, p, &oracle) {
            Ok(Some(2)) => {
                log.check("length_two_in_two_factor_set", la, in_two_factor_set(la, p), || "not in the set".into());
                if p == 3 {
                    log.same("length_two_weight_one", la, la.p_weight(3), 1);
                }
            }
            Ok(Some(_)) => log.note("length_known"),
            Ok(None) => log.note("length_unknown"),
            Err(e) => {
                log.check("qs_length", la, false, || e.to_string());
            }
        }
    });
    log.merge(sub);
    Ok(log)
}
