use spechtkit::abacus::{add_all, cycle_notation, ordered_quotient, AbacusDisplay};
use spechtkit::classify::{in_two_factor_set, is_jm, is_jm_abacus, r_info};
use spechtkit::hom::{
    carter_payne_hom, carter_payne_tableau, insert_row, lambda_circ, magic_tableau, move_ones, nice_values,
    re_tableau, restrictisation_hom, semistandardize, tab, HomExpr, Tableau,
};
use spechtkit::restriction::{lightning, normal_nodes, remove_all, remove_normal, signature};
use spechtkit::{part, Node, Partition};

use super::VerifyError;
use crate::enumerate::SweepSpec;
use crate::report::Log;

fn strs(v: &[Partition]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn restriction_examples(log: &mut Log) {
    let la = part("8,6,2,1,1");
    log.same("restrictise", &la, la.restrictise(3), part("6,5,4,2,1"));
    let la = part("14,5,2,2,2,1^5");
    log.same("restrictise", &la, la.restrictise(3), part("6,5,4,4,3,3,2,1,1,1"));

    let la = part("4,3,1,1");
    log.same("remove_all_0", &la, remove_all(&la, 3, &[0]), (part("3,3,1"), vec![2]));
    log.same("remove_all_1", &la, remove_all(&la, 3, &[1]), (part("4,2,1,1"), vec![1]));
    log.same("remove_all_2", &la, remove_all(&la, 3, &[2]), (la.clone(), vec![0]));

    let la = part("6,5,3,2,1,1,1");
    let sig = signature(&la, 3, 0).map(|s| s.signs());
    log.same("signature", &la, sig.ok(), Some("+--+-".to_string()));
    log.same("normal_nodes", &la, normal_nodes(&la, 3, 0), vec![Node::new(2, 5), Node::new(7, 1)]);
    log.same("remove_normal", &la, remove_normal(&la, 3, &[0]).ok().map(|x| x.0), Some(part("6,4,3,2,1,1")));

    // per ramp l: (nodes, addable, removable) for λ and for λ^rest
    let la = part("14,5,2,2,2,1^5");
    let mu = la.restrictise(3);
    let table: [(i64, [usize; 3], [usize; 3]); 7] = [
        (0, [1, 0, 0], [1, 0, 0]),
        (3, [2, 0, 0], [2, 0, 0]),
        (6, [3, 1, 1], [3, 1, 1]),
        (9, [2, 0, 1], [2, 0, 1]),
        (12, [2, 0, 0], [2, 0, 1]),
        (15, [0, 0, 0], [0, 1, 0]),
        (18, [1, 0, 1], [1, 0, 1]),
    ];
    for (l, a, b) in table {
        let s = la.ramp_stats(3, l);
        let t = mu.ramp_stats(3, l);
        log.same(&format!("ramp_table_{l}"), &la, ([s.rmp, s.addable, s.removable], [t.rmp, t.addable, t.removable]), (a, b));
    }

    let la = part("4,4,4,3");
    for w in [[1, 2, 1], [2, 1, 2]] {
        log.same(&format!("lightning_{w:?}"), &la, lightning(&la, 3, &w).ok(), Some(true));
    }
}

fn abacus_examples(log: &mut Log) {
    let la = part("12,10,9,7,5,4,3,3,2,1^7");
    let ab = AbacusDisplay::new(&la, 5);
    let oq = ordered_quotient(&la, 5);
    log.same("beads", &la, ab.nonnegative_beads(), vec![0, 3, 6, 8, 11]);
    log.same("core_is_core", &la, oq.core.p_weight(5), 0);
    log.same("core_size", &la, oq.core.size() + 5 * oq.weight, la.size());
    log.same("quotient", &la, strs(&oq.quotient), strs(&[part(""), part("1,1"), part(""), part(""), part("1")]));
    log.same("weight", &la, oq.weight, 3);
    log.same("q", &la, oq.q.clone(), vec![5, 11, -8, 13, -11]);
    log.same("pi", &la, cycle_notation(&oq.pi), "(0,4,3,1,2)".to_string());
    log.same(
        "ordered_quotient",
        &la,
        strs(&oq.ordered_quotient),
        strs(&[part("1"), part(""), part(""), part("1,1"), part("")]),
    );
    log.same("quotient_separated", &la, ab.is_quotient_separated(), true);
    log.same("rouquier", &la, ab.is_rouquier(), false);
    log.same("gaps", &la, ab.gaps(), vec![0, 2, 1, 0]);
    log.same("add_all_2", &la, add_all(&la, 5, 2), part("13,10,10,7,5,4,4,3,2,2,1^6"));

    let end = part("14,14,11,11,7,5,5,5,3,3,3,1^8");
    log.same("walk_gaps", &end, AbacusDisplay::new(&end, 5).gaps(), vec![0, 2, 1, 0]);
    log.same("walk_ordered_quotient", &end, strs(&ordered_quotient(&end, 5).ordered_quotient), strs(&oq.ordered_quotient));

    let la = part("3,3,3");
    log.same("quotient_separated", &la, AbacusDisplay::new(&la, 3).is_quotient_separated(), false);
}

fn classify_examples(log: &mut Log) {
    let la = part("19,11,2,2,2,1,1");
    log.same("jm", &la, is_jm(&la, 3), true);
    log.same("jm_abacus", &la, is_jm_abacus(&la, 3), true);

    let one = part("13,3,3,1^10");
    let info = r_info(&one, 5);
    log.same("r_type", &one, info.map(|r| (r.type_one, r.type_two)), Some((true, false)));
    log.same("distinguished", &one, info.map(|r| r.distinguished), Some(Node::new(1, 1)));
    log.same("jm", &one, is_jm(&one, 5), false);

    let two = part("14,10,5,4,3,2^5,1^4");
    let info = r_info(&two, 5);
    log.same("r_type", &two, info.map(|r| (r.type_one, r.type_two)), Some((false, true)));
    log.same("distinguished", &two, info.map(|r| r.distinguished), Some(Node::new(3, 3)));
    log.same("two_factor", &two, in_two_factor_set(&two, 5), true);
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

fn hom_examples(log: &mut Log) {
    let all = Tableau::all_row_standard(&[3, 2], &[2, 2, 1]);
    let mut covers = Vec::new();
    for a in &all {
        for b in &all {
            let strictly = |x: &Tableau, y: &Tableau| x.dominance(y).map(|d| d.strictly).unwrap_or(false);
            if strictly(a, b) && !all.iter().any(|c| strictly(a, c) && strictly(c, b)) {
                covers.push(format!("{a} > {b}"));
            }
        }
    }
    covers.sort();
    let want = ["112/23 > 113/22", "112/23 > 122/13", "113/22 > 123/12", "122/13 > 123/12", "123/12 > 223/11"];
    log.same("hasse_diagram", "tableaux of shape (3,2), type (2,2,1)", covers, want.map(String::from).to_vec());

    let e = semistandardize(&HomExpr::single(tab("122/13"), 3));
    log.same("straighten_122/13", "(3,2)", e, HomExpr::single(tab("112/23"), 3).scaled(2));

    let la = part("8,6,2,1,1");
    log.same("nice_values", &la, nice_values(&la, 3), vec![3]);
    let circ = lambda_circ(&la, 3, 3);
    log.same("lambda_circ", &la, circ.clone(), part("6,4,1,1"));
    log.same("magic_circ", &la, magic_tableau(&circ, 3), tab("112222/1133/1/4"));
    log.same("magic", &la, magic_tableau(&la, 3), tab("11223333/112244/11/2/5"));
    let re = re_tableau(&la, 3);
    log.same("re", &la, re.clone(), tab("11111123/222234/33/4/5"));
    log.same("re_circ", &la, re_tableau(&circ, 3), tab("111112/2223/3/4"));
    let start = insert_row(&re_tableau(&circ, 3), &la, 3, 3);
    log.same("inserted", &la, start.clone(), tab("11222223/113334/11/4/5"));

    // integer coefficients of the four-term expansion, read in a large field
    let figure = [
        ("11111122/222333/34/4/5", 3),
        ("11111123/222233/34/4/5", 1),
        ("11111122/222334/33/4/5", 2),
        ("11111123/222234/33/4/5", 1),
    ];
    let big = move_all_ones(&start, &[2, 1], 101);
    let mut got: Vec<(String, u64)> = big.iter().map(|(t, c)| (t.to_string(), c)).collect();
    got.sort();
    let mut want: Vec<(String, u64)> = figure.iter().map(|(t, c)| (t.to_string(), *c)).collect();
    want.sort();
    log.same("four_term_expansion", &la, got, want);
    let hom = restrictisation_hom(&la, 3);
    log.same("coefficient_at_re", &la, hom.signed_coefficient(&re), 1);
    log.check("support_in_figure", &la, hom.tableaux().all(|t| figure.iter().any(|(s, _)| tab(s) == *t)), || {
        serde_json::to_string(&hom).unwrap_or_default()
    });
    log.same("moves_agree_with_straightening", &la, semistandardize(&HomExpr::single(start, 3)), hom);

    let la = part("4,4,2,2,2,1,1");
    let (a, c) = (Node::new(2, 4), Node::new(6, 2));
    let got: Vec<Tableau> = (3..=6).map(|r| carter_payne_tableau(&la, a, c, r)).collect();
    let want: Vec<Tableau> =
        ["1111/2223/34/45/56/6/7", "1111/2224/33/45/56/6/7", "1111/2225/33/44/56/6/7", "1111/2226/33/44/55/6/7"]
            .map(tab)
            .to_vec();
    log.same("carter_payne_tableaux", &la, got, want);
    log.same("carter_payne_terms", &la, carter_payne_hom(&la, 3, a, c).map(|h| h.len()).ok(), Some(4));
}

/// Replays the worked examples with exact comparisons.
pub fn run(_spec: &SweepSpec) -> Result<Log, VerifyError> {
    let mut log = Log::new();
    restriction_examples(&mut log);
    abacus_examples(&mut log);
    classify_examples(&mut log);
    hom_examples(&mut log);
    Ok(log)
}
