//! Spot checks of the case analysis for self-conjugate partitions outside the
//! two-factor and JM sets.
//!
//! Each lemma's hypothesis is evaluated literally on the partition; when it
//! holds, its lightning conclusion is checked with the restriction module.
//! The standing assumptions are evaluated non-inductively from the classify
//! predicates.

use spechtkit::abacus::{is_quotient_separated, AbacusDisplay};
use spechtkit::classify::{in_two_factor_set, is_jm, r_info};
use spechtkit::hom::composed_nonvanishing;
use spechtkit::restriction::{lightning, mullineux, remove_all_pm};
use spechtkit::{part, Node, Partition};

use crate::enumerate::{sweep_list, Filter, SweepSpec};
use crate::report::{par_sweep, Log};
use crate::suites::VerifyError;

/// Everything the lemmas refer to, computed once per partition.
struct Ctx<'a> {
    la: &'a Partition,
    p: usize,
    h: usize,
    alpha: Vec<Partition>,
}

impl Ctx<'_> {
    fn light(&self, w: &[usize]) -> bool {
        lightning(self.la, self.p, w).expect("odd prime")
    }

    fn neg(&self, i: usize) -> usize {
        (self.p - i) % self.p
    }

    fn moved(&self, i: usize) -> bool {
        self.alpha[i] != *self.la
    }

    fn fixed_below(&self, i: usize) -> bool {
        (0..i).all(|j| !self.moved(j))
    }
}

/// Holds when λ is one of the partitions the case analysis is about.
pub fn standing_assumptions(la: &Partition, p: usize) -> bool {
    let h = (p - 1) / 2;
    if !la.is_self_conjugate() || is_quotient_separated(la, p) || in_two_factor_set(la, p) || is_jm(la, p) {
        return false;
    }
    (0..=h).all(|i| {
        let a = remove_all_pm(la, p, i).expect("self-conjugate");
        a == *la || in_two_factor_set(&a, p) || (i == h && is_jm(&a, p))
    })
}

fn runner_extremes(a: &Partition, p: usize) -> (usize, usize) {
    let q = AbacusDisplay::new(a, p).q_values();
    let largest = (0..p).max_by_key(|&i| q[i]).expect("p > 0");
    let smallest = (0..p).min_by_key(|&i| q[i]).expect("p > 0");
    (largest, smallest)
}

fn first_case(c: &Ctx, log: &mut Log) {
    let (la, p, h) = (c.la, c.p, c.h);
    if !c.moved(0) {
        return;
    }
    let quo0 = AbacusDisplay::new(&c.alpha[0], p).runner_quotient(0);
    if quo0.is_empty() {
        log.check("runner_zero_empty", la, c.light(&[0]), || "no lightning at 0".into());
    } else {
        let ok = p >= 5 && (c.light(&[0]) || c.light(&[p - 1]));
        log.check("runner_zero_nonempty", la, ok, || format!("quotient on runner 0 is {quo0}"));
    }
    let others_fixed = (2..=h).all(|i| !c.moved(i));
    log.check("zero_case_others_fixed", la, others_fixed, || "some alpha_i with 1 < i <= h moved".into());
}

fn ith_case(c: &Ctx, log: &mut Log) {
    let (la, p, h) = (c.la, c.p, c.h);
    for i in 1..h {
        if !c.moved(i) {
            continue;
        }
        let (largest, smallest) = runner_extremes(&c.alpha[i], p);
        let li = c.light(&[i]);
        let lneg = c.light(&[c.neg(i)]);
        let ok = li || lneg || largest == i - 1 || smallest == i;
        log.check("extreme_runner", la, ok, || format!("i={i}, largest {largest}, smallest {smallest}"));
        if !c.fixed_below(i) {
            continue;
        }
        if i > 1 {
            if largest == i - 1 {
                log.check("largest_on_previous_runner", la, li, || format!("i={i}"));
            }
            if smallest == i {
                log.check("smallest_on_runner", la, li, || format!("i={i}"));
            }
        } else if p >= 5 {
            if largest == 0 {
                log.check("one_largest_on_zero", la, li || lneg, String::new);
            }
            if smallest == 1 {
                log.check("one_smallest_on_one", la, li || lneg, String::new);
            }
        }
    }
}

fn ar_case(c: &Ctx, log: &mut Log) {
    let (la, p, h) = (c.la, c.p, c.h);
    if !c.fixed_below(h) || !r_info(&c.alpha[h], p).is_some_and(|r| r.type_two) {
        return;
    }
    let exceptional = p == 3 && *la == part("4,4,4,3");
    let ok = c.light(&[h]) || c.light(&[h + 1]) || exceptional;
    log.check("type_two_middle", la, ok, || format!("alpha_h = {}", c.alpha[h]));
    if exceptional {
        log.check("type_two_exception", la, c.light(&[1, 2, 1]) && c.light(&[2, 1, 2]), String::new);
    }
}

/// Occupancy of positions `kp+h-1, kp+h, kp+h+1`, written with `b` and `n`.
fn pattern(ab: &AbacusDisplay, p: usize, h: usize, k: i64) -> String {
    let base = k * p as i64 + h as i64;
    (base - 1..=base + 1).map(|x| if ab.is_occupied(x) { 'b' } else { 'n' }).collect()
}

/// Adds all addable nodes whose residue is not `h` or `h+1` until none remain.
fn saturate_outside_middle(la: &Partition, p: usize, h: usize) -> Partition {
    let mut cur = la.clone();
    loop {
        let rows: Vec<usize> = cur
            .addable_nodes()
            .into_iter()
            .filter(|n| n.residue(p) != h && n.residue(p) != h + 1)
            .map(|n| n.row)
            .collect();
        if rows.is_empty() {
            return cur;
        }
        // add the lowest first so row indices stay valid
        for r in rows.into_iter().rev() {
            cur = cur.with_node_added(r);
        }
    }
}

fn fourth_case(c: &Ctx, log: &mut Log) {
    let (la, p, h) = (c.la, c.p, c.h);
    if !c.fixed_below(h) || !is_jm(&c.alpha[h], p) {
        return;
    }
    let ab = AbacusDisplay::new(la, p);
    let (lo, hi) = ab.window();
    let pp = p as i64;
    let rows: Vec<i64> = (lo.div_euclid(pp) - 1..=hi.div_euclid(pp) + 1).collect();
    let pat: Vec<(i64, String)> = rows.iter().map(|&k| (k, pattern(&ab, p, h, k))).collect();
    let at = |want: &str| -> Vec<i64> { pat.iter().filter(|(_, s)| s == want).map(|(k, _)| *k).collect() };
    let beads = |s: &str| s.chars().filter(|&x| x == 'b').count();

    let bad: Vec<String> = pat
        .iter()
        .filter(|(k, s)| if *k < 0 { beads(s) < 2 } else { beads(s) > 1 })
        .map(|(k, s)| format!("{k}:{s}"))
        .collect();
    log.check("middle_pattern_shape", la, bad.is_empty(), || bad.join(" "));

    let (bnn, nbn, nnb) = (at("bnn"), at("nbn"), at("nnb"));
    if !bnn.is_empty() {
        log.check("bnn_row", la, c.light(&[h + 1]) && c.light(&[h, h + 1]), || format!("bnn at {bnn:?}"));
    } else {
        log.check("nbn_row", la, !nbn.is_empty() && c.light(&[h]), || format!("nbn at {nbn:?}"));
    }
    if nbn.iter().any(|&k| nnb.iter().any(|&l| k > l)) {
        log.check("nbn_above_nnb", la, c.light(&[h + 1, h, h + 1]), String::new);
    }
    let vacant = |x: i64| !ab.is_occupied(x);
    let pairs: Vec<(i64, i64)> = nbn
        .iter()
        .flat_map(|&k| nnb.iter().map(move |&l| (k, l)))
        .filter(|&(k, l)| k < l && vacant((k - 1) * pp + h as i64 + 1) && vacant((l + 1) * pp + h as i64))
        .collect();
    if !pairs.is_empty() {
        let mu = saturate_outside_middle(la, p, h);
        let ok = lightning(&mu, p, &[h]).expect("odd") && lightning(&mu, p, &[h + 1]).expect("odd");
        log.check("saturated_middle", la, ok, || format!("pairs {pairs:?}, mu {mu}"));
    }
    if nbn.contains(&0) {
        let ok = pat.iter().any(|(l, s)| *l >= 1 && (s == "bnn" || s == "nbn"));
        log.check("nbn_at_zero", la, ok, String::new);
    }
    if pat.iter().all(|(k, s)| *k < 0 || s == "nbn" || s == "nnn") {
        jm_certificate(c, &ab, &nbn, log);
    }
}

fn jm_certificate(c: &Ctx, ab: &AbacusDisplay, nbn: &[i64], log: &mut Log) {
    let (la, p, h) = (c.la, c.p, c.h);
    let Some(&k) = nbn.iter().filter(|&&k| k >= 0).min() else {
        log.check("jm_certificate", la, false, || "no row k >= 0 with nbn".into());
        return;
    };
    let (pp, hh) = (p as i64, h as i64);
    let mut moved = ab.clone();
    moved.move_bead(k * pp + hh, k * pp + hh - 1);
    moved.move_bead(-(k + 1) * pp + hh - 1, -(k + 1) * pp + hh);
    let mu = moved.partition();
    let rows = la.len().max(mu.len());
    let (Some(a), Some(cr)) =
        ((1..=rows).find(|&r| la.part(r) > mu.part(r)), (1..=rows).find(|&r| mu.part(r) > la.part(r)))
    else {
        log.skip("jm_certificate", la, format!("bead moves give {mu}, not a one-node move"));
        return;
    };
    let (an, cn) = (Node::new(a, la.part(a)), Node::new(cr, mu.part(cr)));
    match composed_nonvanishing(la, p, an, cn) {
        Ok(comp) => {
            let nu = comp.mu.restrictise(p);
            let rest = la.restrictise(p);
            let m = mullineux(&rest, p).expect("restricted");
            let ok = comp.v_coefficient.abs() == 1 && nu != rest && nu != m;
            log.check("jm_certificate", la, ok, || format!("v = {}, nu = {nu}, rest = {rest}, image = {m}", comp.v_coefficient));
        }
        Err(e) => log.skip("jm_certificate", la, format!("one-node map not available: {e}")),
    }
}

fn check_one(la: &Partition, p: usize, log: &mut Log) {
    if !standing_assumptions(la, p) {
        log.note("outside_standing_assumptions");
        return;
    }
    log.note("standing_assumptions_hold");
    let h = (p - 1) / 2;
    let alpha = (0..=h).map(|i| remove_all_pm(la, p, i).expect("self-conjugate")).collect();
    let c = Ctx { la, p, h, alpha };
    first_case(&c, log);
    ith_case(&c, log);
    ar_case(&c, log);
    fourth_case(&c, log);
}

/// Runs every lemma over self-conjugate partitions of size at most `max_n`.
pub fn run(spec: &SweepSpec) -> Result<Log, VerifyError> {
    let p = spec.p;
    if p != 3 && p != 5 {
        return Err(VerifyError::UnsupportedPrime(spec.suite.clone(), p));
    }
    let mut log = Log::new();
    if p == 3 {
        let cube = part("3,3,3");
        log.same("excluded_example", &cube, standing_assumptions(&cube, 3), false);
        let la = part("4,4,4,3");
        log.same("exceptional_example_standing", &la, standing_assumptions(&la, 3), true);
        let mut sub = Log::new();
        check_one(&la, 3, &mut sub);
        log.same("exceptional_example_matches_ar", &la, sub.tallies.get("type_two_exception").map(|t| t.checked), Some(1));
        log.check("exceptional_example_conclusion", &la, sub.failures.is_empty(), || format!("{:?}", sub.failures));
    }
    let list = sweep_list(spec, usize::MAX, Filter::SelfConjugate);
    log.merge(par_sweep(&list, |la, log| check_one(la, p, log)));
    Ok(log)
}
