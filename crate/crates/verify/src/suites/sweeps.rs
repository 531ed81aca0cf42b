use spechtkit::classify::{in_two_factor_set, is_jm, is_jm_abacus, r_info, r_info_abacus, r_type_by_definition};
use spechtkit::restriction::{
    later_addable_criterion, lightning, lightning_direct, mullineux as mull, nor, rem, remove_all_once,
    remove_normal,
};
use spechtkit::Partition;

use super::{require_prime, words, VerifyError};
use crate::enumerate::{sweep_list, Filter, SweepSpec};
use crate::report::{par_sweep, Log};

/// Ramp criterion against the direct restrictise-and-count computation.
pub fn renorl_oracle(spec: &SweepSpec) -> Result<Log, VerifyError> {
    require_prime(spec, true)?;
    let p = spec.p;
    let ws = words(p, 3);
    let list = sweep_list(spec, usize::MAX, Filter::All);
    Ok(par_sweep(&list, |la, log| {
        for w in &ws {
            let a = lightning(la, p, w).expect("odd p");
            let b = lightning_direct(la, p, w).expect("odd p");
            log.check("criterion_vs_direct", la, a == b, || format!("word {w:?}: criterion {a}, direct {b}"));
        }
        let rest = la.restrictise(p);
        for i in 0..p {
            let (n, r) = (nor(&rest, p, i), rem(la, p, i));
            let crit = later_addable_criterion(la, p, i);
            log.check("normal_count_bound", la, n <= r, || format!("i={i}: nor {n} > rem {r}"));
            log.check("equality_iff_no_later_addable", la, (n == r) != crit, || {
                format!("i={i}: nor {n}, rem {r}, criterion {crit}")
            });
            if !crit {
                let left = remove_normal(&rest, p, &[i]).expect("restricted").0;
                let right = remove_all_once(la, p, i).restrictise(p);
                log.same("removal_commutes_with_restrictisation", la, left, right);
            }
        }
    }))
}

/// Diagram and abacus characterisations of JM-partitions.
pub fn jm_crosscheck(spec: &SweepSpec) -> Result<Log, VerifyError> {
    require_prime(spec, true)?;
    let p = spec.p;
    let list = sweep_list(spec, usize::MAX, Filter::All);
    Ok(par_sweep(&list, |la, log| {
        log.same("jm_diagram_vs_abacus", la, is_jm(la, p), is_jm_abacus(la, p));
    }))
}

/// R-partition characterisations on self-conjugate partitions.
pub fn r_crosscheck(spec: &SweepSpec) -> Result<Log, VerifyError> {
    require_prime(spec, true)?;
    let p = spec.p;
    let list = sweep_list(spec, usize::MAX, Filter::SelfConjugate);
    Ok(par_sweep(&list, |la, log| {
        let a = r_info(la, p);
        let b = r_info_abacus(la, p);
        let flags = |r: Option<spechtkit::classify::RInfo>| r.map(|r| (r.type_one, r.type_two));
        log.same("r_diagram_vs_abacus", la, flags(a), flags(b));
        log.same("r_vs_definition", la, flags(a), r_type_by_definition(la, p));
        if let Some(r) = a {
            log.check("r_has_a_type", la, r.type_one || r.type_two, || "neither type I nor type II".into());
        }
        if in_two_factor_set(la, p) && is_jm(la, p) {
            log.note("twofac_and_jm_overlap");
        }
    }))
}

fn neg(i: usize, p: usize) -> usize {
    (p - i) % p
}

/// Involution, size, normal-node intertwining and the first-column congruence.
pub fn mullineux(spec: &SweepSpec) -> Result<Log, VerifyError> {
    require_prime(spec, true)?;
    let p = spec.p;
    let list: Vec<Partition> = sweep_list(spec, usize::MAX, Filter::PRestricted);
    Ok(par_sweep(&list, |la, log| {
        let m = mull(la, p).expect("restricted input");
        log.check("image_restricted", la, m.is_restricted(p), || format!("image {m}"));
        log.same("size", la, m.size(), la.size());
        let back = mull(&m, p).ok();
        log.same("involution", la, back, Some(la.clone()));
        for i in 0..p {
            log.same("normal_count_intertwining", la, nor(la, p, i), nor(&m, p, neg(i, p)));
        }
        if !la.is_empty() {
            let s = la.conjugate().part(1) + m.conjugate().part(1);
            log.check("first_column_congruence", la, s % p != 1 % p, || format!("image {m}, sum {s}"));
        }
    }))
}
