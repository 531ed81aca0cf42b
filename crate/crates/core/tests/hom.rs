use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spechtkit::hom::{
    carter_payne_hom, carter_payne_tableau, compose, compose_exprs, composed_nonvanishing, garnir_relation,
    insert_row, lambda_circ, magic_tableau, middle_runner_family, move_ones, nice_values, re_tableau,
    restrictisation_hom, semistandardize, semistandardize_with, tab, HomExpr, Multiset, Pivot, Tableau,
};
use spechtkit::{part, partitions, Error, Node, Partition};

fn random_tableau(rng: &mut ChaCha8Rng, shape: &[usize], content: &[usize]) -> Tableau {
    let mut vals: Vec<usize> = content.iter().enumerate().flat_map(|(i, &n)| vec![i + 1; n]).collect();
    vals.shuffle(rng);
    let mut rows = Vec::new();
    let mut it = vals.into_iter();
    for &n in shape {
        rows.push(it.by_ref().take(n).collect());
    }
    Tableau::new(rows).row_standardized()
}

fn random_partition(rng: &mut ChaCha8Rng, n: usize) -> Partition {
    partitions(n).choose(rng).unwrap().clone()
}

#[test]
fn hasse_diagram() {
    let all = Tableau::all_row_standard(&[3, 2], &[2, 2, 1]);
    let names: Vec<String> = all.iter().map(|t| t.to_string()).collect();
    assert_eq!(names.len(), 5);
    for n in ["112/23", "113/22", "122/13", "123/12", "223/11"] {
        assert!(names.contains(&n.to_string()));
    }
    let mut covers = Vec::new();
    for a in &all {
        for b in &all {
            if !a.dominance(b).unwrap().strictly {
                continue;
            }
            let between = all
                .iter()
                .any(|c| a.dominance(c).unwrap().strictly && c.dominance(b).unwrap().strictly);
            if !between {
                covers.push((a.to_string(), b.to_string()));
            }
        }
    }
    covers.sort();
    let mut expected: Vec<(String, String)> = [
        ("112/23", "113/22"),
        ("112/23", "122/13"),
        ("113/22", "123/12"),
        ("122/13", "123/12"),
        ("123/12", "223/11"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    expected.sort();
    assert_eq!(covers, expected);
}

#[test]
fn dominance_basics() {
    let t = tab("122/13");
    let s = tab("112/23");
    assert!(t.dominance(&t).unwrap().dominates);
    assert!(!t.dominance(&t).unwrap().strictly);
    assert!(s.dominance(&t).unwrap().strictly);
    assert_eq!(t.dominance(&tab("11/2")), Err(Error::ShapeTypeMismatch));
    let above: Vec<_> = Tableau::all_row_standard(&[3, 2], &[2, 2, 1])
        .into_iter()
        .filter(|u| u.is_semistandard() && u.dominance(&t).unwrap().strictly)
        .collect();
    assert_eq!(above, vec![s]);
}

#[test]
fn small_straightening() {
    for p in [2u64, 3, 5, 7] {
        let e = semistandardize(&HomExpr::single(tab("122/13"), p));
        assert_eq!(e.len(), 1);
        assert_eq!(e.coefficient(&tab("112/23")), p - 1);
    }
    let s = tab("112/23");
    assert_eq!(semistandardize(&HomExpr::single(s.clone(), 3)), HomExpr::single(s, 3));
}

#[test]
fn garnir_relations() {
    let a = tab("122/13");
    let r = Multiset::new();
    let s: Multiset = [1, 2, 2, 1].into_iter().collect();
    let t: Multiset = [3].into_iter().collect();
    let rel = garnir_relation(&a, 1, &r, &s, &t, 3).unwrap();
    assert_eq!(rel.len(), 2);
    assert_eq!(rel.coefficient(&a), 1);
    assert_eq!(rel.coefficient(&tab("112/23")), 1);
    // too-many case: three 1s across rows of length 2 force a single term
    let b = tab("11/12");
    let rel = garnir_relation(&b, 1, &Multiset::new(), &Multiset::repeated(1, 3), &Multiset::repeated(2, 1), 5).unwrap();
    assert_eq!(rel, HomExpr::single(b.clone(), 5));
    assert!(semistandardize(&HomExpr::single(b.clone(), 5)).is_zero());
    assert!(matches!(garnir_relation(&b, 1, &Multiset::new(), &Multiset::repeated(1, 2), &Multiset::new(), 5), Err(Error::InvalidGarnir(_))));
    assert!(matches!(garnir_relation(&b, 2, &Multiset::new(), &Multiset::new(), &Multiset::new(), 5), Err(Error::InvalidGarnir(_))));
}

#[test]
fn magic_example() {
    let la = part("8,6,2,1,1");
    assert_eq!(nice_values(&la, 3), vec![3]);
    let circ = lambda_circ(&la, 3, 3);
    assert_eq!(circ, part("6,4,1,1"));
    assert_eq!(magic_tableau(&circ, 3), tab("112222/1133/1/4"));
    assert_eq!(magic_tableau(&la, 3), tab("11223333/112244/11/2/5"));
    assert_eq!(re_tableau(&la, 3), tab("11111123/222234/33/4/5"));
    assert_eq!(re_tableau(&circ, 3), tab("111112/2223/3/4"));
    assert_eq!(insert_row(&re_tableau(&circ, 3), &la, 3, 3), tab("11222223/113334/11/4/5"));
    assert_eq!(magic_tableau(&Partition::empty(), 3), Tableau::empty());
    assert_eq!(la.restrictise(3), part("6,5,4,2,1"));
    assert_eq!(re_tableau(&la, 3).content(), vec![6, 5, 4, 2, 1]);
}

fn move_all_ones(start: &Tableau, hs: &[usize], p: u64) -> HomExpr {
    let mut cur = HomExpr::single(start.clone(), p);
    for &h in hs {
        let mut next = HomExpr::zero(p);
        for (b, c) in cur.iter() {
            next.add(&move_ones(b, h, 1, p).scaled(c));
        }
        cur = next;
    }
    cur
}

#[test]
fn moving_ones_figure() {
    let start = tab("11222223/113334/11/4/5");
    let step = move_all_ones(&start, &[2], 101);
    let mid: Vec<String> = step.tableaux().map(|t| t.to_string()).collect();
    assert_eq!(mid, vec!["11222223/111133/34/4/5", "11222223/111134/33/4/5"]);
    // coefficients from the binomials in the moving rule, computed by hand
    let big = move_all_ones(&start, &[2, 1], 101);
    let expect = [
        ("11111122/222333/34/4/5", 3),
        ("11111123/222233/34/4/5", 1),
        ("11111122/222334/33/4/5", 2),
        ("11111123/222234/33/4/5", 1),
    ];
    assert_eq!(big.len(), 4);
    for (t, c) in expect {
        assert_eq!(big.coefficient(&tab(t)), c, "{t}");
    }
    let three = move_all_ones(&start, &[2, 1], 3);
    assert_eq!(three.len(), 3);
    assert_eq!(three.coefficient(&tab("11111122/222333/34/4/5")), 0);
    assert!(three.tableaux().all(|t| t.is_semistandard() && expect.iter().any(|(s, _)| tab(s) == *t)));
    let re = re_tableau(&part("8,6,2,1,1"), 3);
    assert_eq!(three.coefficient(&re), 1);
    assert!(three.tableaux().all(|t| t.dominance(&re).unwrap().dominates));
    // both sides of the moves straighten to the same thing
    assert_eq!(semistandardize(&HomExpr::single(start, 3)), three);
}

#[test]
fn restrictisation_example() {
    let la = part("8,6,2,1,1");
    let e = restrictisation_hom(&la, 3);
    let re = re_tableau(&la, 3);
    assert!(e.is_semistandard());
    assert_eq!(e.signed_coefficient(&re), 1);
    let figure = ["11111122/222333/34/4/5", "11111123/222233/34/4/5", "11111122/222334/33/4/5", "11111123/222234/33/4/5"];
    assert!(e.tableaux().all(|t| figure.iter().any(|s| tab(s) == *t)), "{:?}", e);
}

#[test]
fn restrictisation_contract() {
    for (p, max_n) in [(3usize, 12usize), (5, 11)] {
        for n in 0..=max_n {
            for la in partitions(n) {
                let e = restrictisation_hom(&la, p);
                let re = re_tableau(&la, p);
                assert!(re.is_semistandard());
                assert_eq!(re.content(), la.restrictise(p).parts().to_vec());
                assert_eq!(e.signed_coefficient(&re).abs(), 1, "{la} p={p}");
                for t in e.tableaux() {
                    assert!(t.is_semistandard());
                    assert!(t.dominance(&re).unwrap().dominates, "{la} p={p}: {t}");
                }
            }
        }
    }
}

#[test]
fn restricted_partitions_map_identically() {
    for n in 0..=10 {
        for la in partitions(n).into_iter().filter(|l| l.is_restricted(3)) {
            let id = Tableau::identity(la.parts());
            assert_eq!(re_tableau(&la, 3), id);
            assert_eq!(restrictisation_hom(&la, 3), HomExpr::single(id, 3));
        }
    }
}

#[test]
fn re_monotone_in_ramps() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let p = *[3usize, 5, 7].choose(&mut rng).unwrap();
        let n = rng.gen_range(1..=25);
        let la = random_partition(&mut rng, n);
        let re = re_tableau(&la, p);
        let nodes: Vec<Node> = la.nodes().collect();
        for x in &nodes {
            for y in &nodes {
                if x.ramp(p) > y.ramp(p) || (x.ramp(p) == y.ramp(p) && x.row > y.row) {
                    continue;
                }
                let (rx, ry) = (re.entry(x.row, x.col).unwrap(), re.entry(y.row, y.col).unwrap());
                if x.row == y.row {
                    assert!(rx <= ry);
                } else if x.row < y.row {
                    assert!(rx < ry, "{la} p={p} {x:?} {y:?}");
                }
            }
        }
    }
}

#[test]
fn carter_payne_example() {
    let la = part("4,4,2,2,2,1,1");
    let (a, c) = (Node::new(2, 4), Node::new(6, 2));
    let tabs: Vec<Tableau> = (3..=6).map(|r| carter_payne_tableau(&la, a, c, r)).collect();
    assert_eq!(
        tabs,
        vec![
            tab("1111/2223/34/45/56/6/7"),
            tab("1111/2224/33/45/56/6/7"),
            tab("1111/2225/33/44/56/6/7"),
            tab("1111/2226/33/44/55/6/7"),
        ]
    );
    let hom = carter_payne_hom(&la, 3, a, c).unwrap();
    assert_eq!(hom.len(), 4);
    assert_eq!(hom.coefficient(&tabs[0]), 2);
    assert_eq!(hom.coefficient(&tabs[1]), 1);
    assert!(tabs.iter().all(|t| t.content() == vec![4, 3, 2, 2, 2, 2, 1]));
}

#[test]
fn carter_payne_edge_cases() {
    // (3) at p = 3: move (1,3) to (2,1), both of residue 2
    let la = part("3");
    let hom = carter_payne_hom(&la, 3, Node::new(1, 3), Node::new(2, 1)).unwrap();
    assert_eq!(hom, HomExpr::single(tab("112"), 3));
    assert!(matches!(carter_payne_hom(&la, 3, Node::new(1, 3), Node::new(1, 4)), Err(Error::Precondition(_))));
    assert!(matches!(carter_payne_hom(&part("3,1"), 3, Node::new(1, 3), Node::new(2, 2)), Err(Error::Precondition(_))));
    assert!(matches!(carter_payne_hom(&la, 3, Node::new(1, 2), Node::new(2, 1)), Err(Error::Precondition(_))));
    let c = composed_nonvanishing(&la, 3, Node::new(1, 3), Node::new(2, 1)).unwrap();
    assert_eq!(c.mu, part("2,1"));
    assert_eq!(c.expr, semistandardize(&hom));
}

#[test]
fn rejects_earlier_ramp() {
    let la = part("6");
    let r = composed_nonvanishing(&la, 3, Node::new(1, 6), Node::new(2, 1));
    assert!(matches!(r, Err(Error::Precondition(_))));
    assert_eq!(part("5,1").restrictise(3), part("3,2,1"));
}

#[test]
fn middle_runner_instances() {
    let fam = middle_runner_family(3, 30);
    let las: Vec<Partition> = fam.iter().map(|x| x.0.clone()).collect();
    for s in ["5,3,2,1,1", "8,3,2,1^5", "11,3,2,1^8", "14,3,2,1^11", "8,6,2^4,1^2", "11,6,2^4,1^5", "8,6,4,3,2,2,1,1"] {
        assert!(las.contains(&part(s)), "{s}");
    }
    assert_eq!(las.len(), 7);
    for (la, a, c) in fam {
        assert!(la.is_self_conjugate());
        let comp = composed_nonvanishing(&la, 3, a, c).unwrap();
        assert!(comp.v_tableau.is_semistandard());
        assert_eq!(comp.v_coefficient.abs(), 1, "{la}");
        assert!(comp.expr.is_semistandard());
    }
}

/// `λ`-tabloids as row assignments of `1..=n`.
type Tabloid = Vec<usize>;

fn tabloids(shape: &[usize]) -> Vec<Tabloid> {
    let n: usize = shape.iter().sum();
    let mut out = Vec::new();
    fn go(k: usize, n: usize, left: &mut Vec<usize>, cur: &mut Tabloid, out: &mut Vec<Tabloid>) {
        if k == n {
            out.push(cur.clone());
            return;
        }
        for r in 0..left.len() {
            if left[r] > 0 {
                left[r] -= 1;
                cur.push(r + 1);
                go(k + 1, n, left, cur, out);
                cur.pop();
                left[r] += 1;
            }
        }
    }
    go(0, n, &mut shape.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// `Θ_T` applied to a combination of tabloids, by definition.
fn apply(t: &Tableau, v: &HashMap<Tabloid, u64>, p: u64) -> HashMap<Tabloid, u64> {
    let targets = tabloids(&t.content());
    let mut out: HashMap<Tabloid, u64> = HashMap::new();
    for (src, &c) in v {
        for dst in &targets {
            let ok = (1..=t.num_rows()).all(|j| {
                (1..=t.max_entry()).all(|i| {
                    let k = src.iter().zip(dst).filter(|&(&a, &b)| a == j && b == i).count();
                    k == t.count(j, i)
                })
            });
            if ok {
                let e = out.entry(dst.clone()).or_insert(0);
                *e = (*e + c) % p;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn apply_expr(e: &HomExpr, v: &HashMap<Tabloid, u64>) -> HashMap<Tabloid, u64> {
    let p = e.p();
    let mut out: HashMap<Tabloid, u64> = HashMap::new();
    for (t, c) in e.iter() {
        for (k, x) in apply(t, v, p) {
            let s = out.entry(k).or_insert(0);
            *s = (*s + c * x) % p;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

#[test]
fn compose_matches_tabloid_action() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(1..=6);
        let la = random_partition(&mut rng, n);
        let mu = random_partition(&mut rng, n);
        let nu = random_partition(&mut rng, n);
        let s = random_tableau(&mut rng, la.parts(), mu.parts());
        let t = random_tableau(&mut rng, mu.parts(), nu.parts());
        for p in [3u64, 1_000_003] {
            let start: HashMap<Tabloid, u64> = [(tabloids(la.parts())[0].clone(), 1)].into_iter().collect();
            let lhs = apply(&t, &apply(&s, &start, p), p);
            let rhs = apply_expr(&compose(&t, &s, p).unwrap(), &start);
            assert_eq!(lhs, rhs, "{t} ∘ {s} p={p}");
        }
    }
}

#[test]
fn compose_identity_and_mismatch() {
    let s = Tableau::identity(&[3, 2]);
    let t = tab("112/23");
    assert_eq!(compose(&t, &s, 3).unwrap(), HomExpr::single(t.clone(), 3));
    assert!(matches!(compose(&t, &tab("11/2"), 3), Err(Error::ChainMismatch(_))));
}

#[test]
fn compose_associative() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..40 {
        let n = rng.gen_range(1..=8);
        let ps: Vec<Partition> = (0..4).map(|_| random_partition(&mut rng, n)).collect();
        let r = HomExpr::single(random_tableau(&mut rng, ps[0].parts(), ps[1].parts()), 3);
        let s = HomExpr::single(random_tableau(&mut rng, ps[1].parts(), ps[2].parts()), 3);
        let t = HomExpr::single(random_tableau(&mut rng, ps[2].parts(), ps[3].parts()), 3);
        let left = compose_exprs(&compose_exprs(&t, &s).unwrap(), &r).unwrap();
        let right = compose_exprs(&t, &compose_exprs(&s, &r).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}

fn random_expr(rng: &mut ChaCha8Rng, p: u64) -> (Partition, HomExpr) {
    let n = rng.gen_range(2..=10);
    let la = random_partition(rng, n);
    let mu = random_partition(rng, n);
    let mut e = HomExpr::zero(p);
    for _ in 0..rng.gen_range(1..=3) {
        e.add_term(random_tableau(rng, la.parts(), mu.parts()), rng.gen_range(1..p));
    }
    (la, e)
}

#[test]
fn straightening_is_confluent() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for k in 0..500 {
        let p = [2u64, 3, 5][k % 3];
        let (_, e) = random_expr(&mut rng, p);
        let a = semistandardize_with(&e, Pivot::TopLeft);
        let b = semistandardize_with(&e, Pivot::BottomRight);
        assert_eq!(a, b, "{e:?}");
        assert!(a.is_semistandard());
        for t in a.tableaux() {
            assert!(e.tableaux().any(|s| t.dominance(s).unwrap().dominates), "{t}");
        }
    }
}

#[test]
fn too_many_equal_entries_vanish() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut hits = 0;
    while hits < 200 {
        let (la, e) = random_expr(&mut rng, 3);
        let Some(a) = e.tableaux().next().cloned() else { continue };
        let violates = (1..a.num_rows()).any(|h| {
            (1..=a.max_entry()).any(|l| (h + 1..=a.num_rows()).any(|k| a.count(h, l) + a.count(k, l) > la.part(h)))
        });
        if violates {
            hits += 1;
            assert!(semistandardize(&HomExpr::single(a.clone(), 3)).is_zero(), "{a}");
        }
    }
}

#[test]
fn moves_agree_after_straightening() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let (_, e) = random_expr(&mut rng, 3);
        let Some(b) = e.tableaux().next().cloned() else { continue };
        if b.num_rows() < 2 {
            continue;
        }
        let h = rng.gen_range(1..b.num_rows());
        let r = rng.gen_range(1..=b.max_entry());
        let moved = move_ones(&b, h, r, 3);
        if b.count(h + 1, r) == 0 {
            assert_eq!(moved, HomExpr::single(b.clone(), 3));
        }
        assert_eq!(semistandardize(&moved), semistandardize(&HomExpr::single(b, 3)));
    }
}

#[test]
fn insertion_preserves_relations() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut checked = 0;
    while checked < 60 {
        let p = *[3usize, 5].choose(&mut rng).unwrap();
        let n = rng.gen_range(2..=11);
        let la = random_partition(&mut rng, n);
        for m in nice_values(&la, p) {
            let circ = lambda_circ(&la, p, m);
            let content = circ.restrictise(p);
            let u = random_tableau(&mut rng, circ.parts(), content.parts());
            let nf = semistandardize(&HomExpr::single(u.clone(), p as u64));
            let mut lifted = HomExpr::zero(p as u64);
            for (v, c) in nf.iter() {
                lifted.add_term(insert_row(v, &la, p, m), c);
            }
            let direct = semistandardize(&HomExpr::single(insert_row(&u, &la, p, m), p as u64));
            assert_eq!(semistandardize(&lifted), direct, "{la} m={m} U={u}");
            checked += 1;
        }
    }
}
