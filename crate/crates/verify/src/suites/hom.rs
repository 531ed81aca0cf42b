use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spechtkit::hom::{
    composed_nonvanishing, middle_runner_family, re_tableau, restrictisation_hom, semistandardize,
    semistandardize_with, HomExpr, Pivot, Tableau,
};
use spechtkit::{part, partitions, Node, Partition};

use super::{require_prime, VerifyError};
use crate::enumerate::{sweep_list, Filter, SweepSpec};
use crate::report::{par_sweep, Log};

/// Size bound for the middle-runner family.
pub const FAMILY_MAX_N: usize = 30;
pub const RANDOM_EXPRESSIONS: usize = 500;
pub const RANDOM_NULL_TABLEAUX: usize = 200;

fn random_partition(rng: &mut ChaCha8Rng, n: usize) -> Partition {
    partitions(n).choose(rng).expect("n has a partition").clone()
}

fn random_tableau(rng: &mut ChaCha8Rng, shape: &[usize], content: &[usize]) -> Tableau {
    let mut vals: Vec<usize> = content.iter().enumerate().flat_map(|(i, &n)| vec![i + 1; n]).collect();
    vals.shuffle(rng);
    let mut it = vals.into_iter();
    let rows = shape.iter().map(|&n| it.by_ref().take(n).collect()).collect();
    Tableau::new(rows).row_standardized()
}

fn random_expr(rng: &mut ChaCha8Rng, p: u64) -> (Partition, HomExpr) {
    let n = rng.gen_range(2..=10);
    let la = random_partition(rng, n);
    let mu = random_partition(rng, n);
    let mut e = HomExpr::zero(p);
    for _ in 0..rng.gen_range(1..=3) {
        let t = random_tableau(rng, la.parts(), mu.parts());
        let c = rng.gen_range(1..p);
        e.add_term(t, c);
    }
    (la, e)
}

fn contract(spec: &SweepSpec, log: &mut Log) {
    let p = spec.p;
    let list = sweep_list(spec, usize::MAX, Filter::All);
    log.merge(par_sweep(&list, |la, log| {
        let e = restrictisation_hom(la, p);
        let re = re_tableau(la, p);
        log.same("re_content", la, re.content(), la.restrictise(p).parts().to_vec());
        log.same("coefficient_at_re", la, e.signed_coefficient(&re).abs(), 1);
        let bad: Vec<String> = e
            .tableaux()
            .filter(|t| !t.is_semistandard() || !t.dominance(&re).map(|d| d.dominates).unwrap_or(false))
            .map(|t| t.to_string())
            .collect();
        log.check("support_dominates_re", la, bad.is_empty(), || format!("{bad:?}"));
    }));
}

fn random_checks(p: u64, log: &mut Log) {
    let mut rng = ChaCha8Rng::seed_from_u64(2024 + p);
    for k in 0..RANDOM_EXPRESSIONS {
        let (_, e) = random_expr(&mut rng, p);
        let subject = format!("expression {k}");
        let a = semistandardize_with(&e, Pivot::TopLeft);
        let b = semistandardize_with(&e, Pivot::BottomRight);
        log.check("confluence", &subject, a == b, || format!("{}", serde_json::to_string(&e).unwrap_or_default()));
        log.check("normal_form_semistandard", &subject, a.is_semistandard(), String::new);
        let ok = a.tableaux().all(|t| e.tableaux().any(|s| t.dominance(s).map(|d| d.dominates).unwrap_or(false)));
        log.check("output_dominates_input", &subject, ok, String::new);
    }
    let mut hits = 0;
    while hits < RANDOM_NULL_TABLEAUX {
        let (la, e) = random_expr(&mut rng, p);
        let Some(a) = e.tableaux().next().cloned() else { continue };
        let violates = (1..a.num_rows()).any(|h| {
            (1..=a.max_entry()).any(|l| (h + 1..=a.num_rows()).any(|k| a.count(h, l) + a.count(k, l) > la.part(h)))
        });
        if violates {
            hits += 1;
            let out = semistandardize(&HomExpr::single(a.clone(), p));
            log.check("too_many_equal_entries_vanish", &a, out.is_zero(), || format!("{} terms", out.len()));
        }
    }
}

fn family(p: usize, log: &mut Log) {
    let fam = middle_runner_family(p, FAMILY_MAX_N);
    log.merge(par_sweep(&fam, |(la, a, c), log| {
        log.check("family_self_conjugate", la, la.is_self_conjugate(), String::new);
        match composed_nonvanishing(la, p, *a, *c) {
            Ok(comp) => {
                log.same("v_coefficient", la, comp.v_coefficient.abs(), 1);
                log.check("v_semistandard", la, comp.v_tableau.is_semistandard(), || comp.v_tableau.to_string());
            }
            Err(e) => {
                log.check("v_coefficient", la, false, || e.to_string());
            }
        }
    }));
    if p == 3 {
        let la = part("6");
        let r = composed_nonvanishing(&la, 3, Node::new(1, 6), Node::new(2, 1));
        log.check("rejects_earlier_ramp", &la, r.is_err(), || "accepted (6) -> (5,1)".into());
    }
}

/// Restrictisation contract, straightening checks and the middle-runner family.
pub fn run(spec: &SweepSpec) -> Result<Log, VerifyError> {
    require_prime(spec, false)?;
    let mut log = Log::new();
    contract(spec, &mut log);
    random_checks(spec.p as u64, &mut log);
    if spec.p > 2 {
        family(spec.p, &mut log);
    }
    Ok(log)
}
