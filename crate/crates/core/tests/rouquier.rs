use spechtkit::abacus::{is_quotient_separated, AbacusDisplay};
use spechtkit::classify::in_two_factor_set;
use spechtkit::rouquier::{
    d_coeff, d_from_quotients, lr_coefficient, lr_support_pairs, qs_length, restricted_quotients,
    rouquier_row, BuiltinOracle, TableOracle, WeylOracle,
};
use spechtkit::{part, partitions, Error, Partition};

/// Semistandard fillings of `γ/α` with content `μ`, no lattice condition.
fn skew_kostka(gamma: &Partition, alpha: &Partition, mu: &Partition) -> u64 {
    let mut cells = Vec::new();
    for r in 1..=gamma.len() {
        for c in alpha.part(r) + 1..=gamma.part(r) {
            cells.push((r, c));
        }
    }
    let mut grid = vec![vec![0usize; gamma.part(1) + 2]; gamma.len() + 2];
    let mut left: Vec<usize> = (0..=mu.len()).map(|i| if i == 0 { 0 } else { mu.part(i) }).collect();
    fn go(k: usize, cells: &[(usize, usize)], alpha: &Partition, grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let lo_row = if c > alpha.part(r) + 1 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 1 && c > alpha.part(r - 1) { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo_row.max(lo_col).max(1)..left.len() {
            if left[v] == 0 {
                continue;
            }
            left[v] -= 1;
            grid[r][c] = v;
            total += go(k + 1, cells, alpha, grid, left);
            left[v] += 1;
        }
        total
    }
    go(0, &cells, alpha, &mut grid, &mut left)
}

/// LR coefficients of `γ/α` recovered from skew Kostka numbers by unitriangularity.
fn lr_by_kostka(gamma: &Partition, alpha: &Partition) -> Vec<(Partition, u64)> {
    let n = gamma.size() - alpha.size();
    let ps = partitions(n);
    let mut out: Vec<(Partition, i64)> = Vec::new();
    for mu in &ps {
        let mut c = skew_kostka(gamma, alpha, mu) as i64;
        for (beta, cb) in &out {
            c -= cb * skew_kostka(beta, &Partition::empty(), mu) as i64;
        }
        out.push((mu.clone(), c));
    }
    out.into_iter().map(|(b, c)| (b, c as u64)).collect()
}

#[test]
fn small_coefficients() {
    assert_eq!(lr_coefficient(&part("2,1"), &part("1"), &part("1,1")), 1);
    assert_eq!(lr_coefficient(&part("2,1"), &part("1"), &part("2")), 1);
    assert_eq!(lr_coefficient(&part("3,2,1"), &part("2,1"), &part("2,1")), 2);
    assert_eq!(lr_coefficient(&part("2"), &part("1,1"), &part("")), 0);
    assert_eq!(lr_coefficient(&part("3"), &part("1"), &part("1")), 0);
}

#[test]
fn coefficients_match_kostka_inversion() {
    for n in 0..=7 {
        for gamma in partitions(n) {
            for k in 0..=n {
                for alpha in partitions(k).into_iter().filter(|a| gamma.contains(a)) {
                    for (beta, c) in lr_by_kostka(&gamma, &alpha) {
                        assert_eq!(lr_coefficient(&gamma, &alpha, &beta), c, "{gamma}/{alpha} {beta}");
                    }
                }
            }
        }
    }
}

#[test]
fn symmetry() {
    for n in 0..=8 {
        for gamma in partitions(n) {
            for k in 0..=n {
                for a in partitions(k) {
                    for b in partitions(n - k) {
                        assert_eq!(lr_coefficient(&gamma, &a, &b), lr_coefficient(&gamma, &b, &a));
                    }
                }
            }
        }
    }
}

#[test]
fn two_products_for_nonempty_factors() {
    for s in 2..=7 {
        for k in 1..s {
            for a in partitions(k) {
                for b in partitions(s - k) {
                    let sums: Vec<usize> = (1..=a.len().max(b.len())).map(|i| a.part(i) + b.part(i)).collect();
                    let gamma = Partition::new(sums).unwrap();
                    let mut merged: Vec<usize> = a.parts().iter().chain(b.parts()).copied().collect();
                    merged.sort_unstable_by(|x, y| y.cmp(x));
                    let delta = Partition::new(merged).unwrap();
                    assert_ne!(gamma, delta);
                    assert!(lr_coefficient(&gamma, &a, &b) > 0);
                    assert!(lr_coefficient(&delta, &a, &b) > 0);
                }
            }
        }
    }
}

#[test]
fn support_pairs() {
    assert_eq!(lr_support_pairs(&part("1")).len(), 2);
    let two = lr_support_pairs(&part("2"));
    for pair in [("", "2"), ("2", ""), ("1", "1")] {
        assert!(two.iter().any(|(a, b, _)| *a == part(pair.0) && *b == part(pair.1)));
    }
    // (2,1): (∅,(2,1)), ((2,1),∅), ((1),(2)), ((1),(1,1)), ((2),(1)), ((1,1),(1))
    assert_eq!(lr_support_pairs(&part("2,1")).len(), 6);
    for n in 2..=8 {
        for gamma in partitions(n) {
            assert!(lr_support_pairs(&gamma).len() >= 3);
        }
    }
}

fn upto(w: usize) -> Vec<Partition> {
    (0..=w).flat_map(partitions).collect()
}

/// Direct evaluation of the defining sum over all tuples, p = 3.
fn d_brute_p3(la: &[Partition], mu: &[Partition], w: usize) -> u64 {
    let e = Partition::empty();
    let all = upto(w);
    let mut total = 0;
    for s0 in &all {
        for s1 in &all {
            for t1 in &all {
                for t2 in &all {
                    let sigma = [s0, s1, &e];
                    let tau = [&e, t1, t2];
                    let mut prod = 1;
                    for i in 0..3 {
                        prod *= lr_coefficient(&la[i], &tau[i].conjugate(), sigma[i]);
                    }
                    for i in 0..2 {
                        prod *= lr_coefficient(&mu[i], sigma[i], tau[i + 1]);
                    }
                    total += prod;
                }
            }
        }
    }
    total
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

#[test]
fn d_matches_tuple_enumeration() {
    for w in 0..=2 {
        for lq in all_quotients(3, w) {
            for mq in restricted_quotients(3, w) {
                assert_eq!(d_from_quotients(&lq, &mq), d_brute_p3(&lq, &mq, w), "{lq:?} {mq:?}");
            }
        }
    }
}

#[test]
fn d_on_rouquier_partitions() {
    let core = AbacusDisplay::core_from_charges(3, &[-2, 0, 2]).partition();
    assert!(core.p_weight(3) == 0);
    let build = |oq: &[&str]| {
        let oq: Vec<Partition> = oq.iter().map(|s| part(s)).collect();
        AbacusDisplay::from_core_ordered_quotient(&core, 3, &oq).partition()
    };
    let la = build(&["1", "", "1"]);
    let mu = build(&["1", "1", ""]);
    assert!(AbacusDisplay::new(&la, 3).is_rouquier());
    assert_eq!(d_coeff(&mu, &mu, 3).unwrap(), 1);
    assert_eq!(d_coeff(&la, &mu, 3).unwrap(), d_brute_p3(&AbacusDisplay::new(&la, 3).ordered_quotient(), &AbacusDisplay::new(&mu, 3).ordered_quotient(), 2));
    assert!(matches!(d_coeff(&la, &la, 3), Err(Error::NotRestrictedQuotient(_))));
    assert!(matches!(d_coeff(&la, &part("1"), 3), Err(Error::CoreWeightMismatch)));
    let near = part("3,3");
    assert!(matches!(d_coeff(&near, &near, 3), Err(Error::NotRouquier(..))));
}

#[test]
fn restricted_diagonal_is_one() {
    for p in [3usize, 5] {
        for w in 0..=3 {
            for q in restricted_quotients(p, w) {
                assert_eq!(d_from_quotients(&q, &q), 1);
            }
        }
    }
}

#[test]
fn square_length_case() {
    // [α, ∅, ..., ∅, α'] only reaches [α, ∅, ..., ∅, α, ∅]
    for p in [3usize, 5] {
        for alpha in [part("1"), part("2"), part("1,1"), part("2,1")] {
            let mut lq = vec![Partition::empty(); p];
            lq[0] = alpha.clone();
            lq[p - 1] = alpha.conjugate();
            let mut target = vec![Partition::empty(); p];
            target[0] = alpha.clone();
            target[p - 2] = alpha.clone();
            for mq in restricted_quotients(p, 2 * alpha.size()) {
                let d = d_from_quotients(&lq, &mq);
                assert_eq!(d, (mq == target) as u64, "{mq:?}");
            }
        }
    }
}

#[test]
fn rows_of_cores_and_weight_one() {
    let core = part("4,2");
    assert_eq!(core.p_weight(3), 0);
    let row = rouquier_row(&core, 3, &BuiltinOracle).unwrap();
    assert_eq!(row.into_iter().collect::<Vec<_>>(), vec![(core, Some(1))]);
    for p in [3usize, 5] {
        for n in 0..=24 {
            for la in partitions(n) {
                if la.is_self_conjugate() && la.p_weight(p) == 1 {
                    assert!(is_quotient_separated(&la, p));
                    assert_eq!(qs_length(&la, p, &BuiltinOracle).unwrap(), Some(2), "{la} p={p}");
                }
            }
        }
    }
    assert!(matches!(qs_length(&part("3,3,3"), 3, &BuiltinOracle), Err(Error::NotQuotientSeparated(..))));
    assert_eq!(qs_length(&part(""), 3, &BuiltinOracle).unwrap(), Some(1));
}

#[test]
fn rows_need_oracle_data_in_larger_slots() {
    let core = AbacusDisplay::core_from_charges(3, &[-3, 0, 3]).partition();
    let oq = vec![part("2"), part("1"), part("")];
    let la = AbacusDisplay::from_core_ordered_quotient(&core, 3, &oq).partition();
    // size-3 slots need [Δ(3):L(2,1)] and [Δ(2,1):L(1^3)], which the builtin rules leave open
    let row = rouquier_row(&la, 3, &BuiltinOracle).unwrap();
    assert!(row.values().any(Option::is_none));
    let mut table = TableOracle::new();
    table.insert(part("3"), part("2,1"), 3, 1);
    table.insert(part("3"), part("1,1,1"), 3, 0);
    table.insert(part("2,1"), part("1,1,1"), 3, 1);
    let row = rouquier_row(&la, 3, &table).unwrap();
    assert!(row.values().all(Option::is_some));
    let oq_mu = vec![part("2"), part("1"), part("")];
    let mu = AbacusDisplay::from_core_ordered_quotient(&core, 3, &oq_mu).partition();
    assert_eq!(mu, la);
}

#[test]
fn oracle_table() {
    let t = TableOracle::from_json(r#"[{"sigma":[2,1],"tau":[1,1,1],"p":3,"value":1}]"#).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(t.multiplicity(&part("2,1"), &part("1,1,1"), 3), Some(1));
    assert_eq!(BuiltinOracle.multiplicity(&part("2,1"), &part("1,1,1"), 3), None);
    assert_eq!(BuiltinOracle.multiplicity(&part("2,1"), &part("2,1"), 3), Some(1));
    assert_eq!(BuiltinOracle.multiplicity(&part("1,1,1"), &part("2,1"), 3), Some(0));
    assert_eq!(BuiltinOracle.multiplicity(&part("2"), &part("1,1"), 3), Some(0));
    assert!(TableOracle::from_json("not json").is_err());
}

#[test]
fn length_two_means_two_factor_set() {
    for p in [3usize, 5] {
        for n in 0..=16 {
            for la in partitions(n) {
                if la.is_self_conjugate() && is_quotient_separated(&la, p) {
                    if let Some(2) = qs_length(&la, p, &BuiltinOracle).unwrap() {
                        assert!(in_two_factor_set(&la, p), "{la} p={p}");
                        if p == 3 {
                            assert_eq!(la.p_weight(3), 1);
                        }
                    }
                }
            }
        }
    }
}

