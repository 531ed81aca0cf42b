use spechtkit::classify::{
    alt_irreducible, in_two_factor_set, is_jm, is_jm_abacus, r1_stability, r_info, r_info_abacus,
    r_type_by_definition, type_one_bead_row,
};
use spechtkit::{part, partitions, Node, Partition};

fn self_conjugate(max_n: usize) -> Vec<Partition> {
    (0..=max_n).flat_map(partitions).filter(Partition::is_self_conjugate).collect()
}

#[test]
fn jm_examples() {
    assert!(is_jm(&part("19,11,2,2,2,1,1"), 3));
    assert!(is_jm_abacus(&part("19,11,2,2,2,1,1"), 3));
    assert!(!is_jm(&part("13,3,3,1^10"), 5));
    assert!(is_jm(&part("9,8,6,5,5,4,3,3,2,1,1"), 5));
    assert!(is_jm_abacus(&part(""), 3));
}

#[test]
fn r_partition_examples() {
    let one = part("13,3,3,1^10");
    let info = r_info(&one, 5).unwrap();
    assert_eq!(info.distinguished, Node::new(1, 1));
    assert!(info.type_one);
    assert_eq!(r_info_abacus(&one, 5).map(|r| r.type_one), Some(true));
    // the only bead at a position >= 2 is 12 = 2*5 + 2
    assert_eq!(type_one_bead_row(&one, 5), Some(2));

    let two = part("14,10,5,4,3,2^5,1^4");
    let info = r_info(&two, 5).unwrap();
    assert_eq!(info.distinguished, Node::new(3, 3));
    assert!(info.type_two && !info.type_one);
    assert!(in_two_factor_set(&two, 5));
    assert_eq!(r_info_abacus(&two, 5).unwrap().distinguished, Node::new(3, 3));

    assert_eq!(r_info(&part(""), 3), None);
    assert_eq!(r_info_abacus(&part(""), 3), None);
}

#[test]
fn two_by_two_at_three() {
    // diagram [[1,0],[0,0]]: the corner is the only nonzero entry, its hook is 3
    // and removing it leaves the 3-core (1)
    let la = part("2,2");
    assert_eq!(la.p_power_diagram(3), vec![vec![1, 0], vec![0, 0]]);
    let info = r_info(&la, 3).unwrap();
    assert_eq!(info.distinguished, Node::new(1, 1));
    assert!(info.type_one && info.type_two);
    assert_eq!(r_type_by_definition(&la, 3), Some((true, true)));
}

#[test]
fn two_factor_examples() {
    assert!(in_two_factor_set(&part("3,3,3"), 3));
    assert!(!in_two_factor_set(&part("4,4,4,3"), 3));
    assert!(alt_irreducible(&part("3,3,3"), 3));
    assert!(alt_irreducible(&part("19,11,2,2,2,1,1"), 3));
    assert!(alt_irreducible(&part("13,3,3,1^10"), 5));
}

#[test]
fn jm_characterisations_agree() {
    for p in [3usize, 5] {
        for n in 0..=20 {
            for la in partitions(n) {
                assert_eq!(is_jm(&la, p), is_jm_abacus(&la, p), "{la} p={p}");
            }
        }
    }
}

#[test]
fn r_characterisations_agree() {
    for p in [3usize, 5] {
        for la in self_conjugate(24) {
            let a = r_info(&la, p);
            let b = r_info_abacus(&la, p);
            assert_eq!(
                a.map(|r| (r.type_one, r.type_two)),
                b.map(|r| (r.type_one, r.type_two)),
                "{la} p={p}"
            );
            assert_eq!(a.map(|r| (r.type_one, r.type_two)), r_type_by_definition(&la, p), "{la} p={p}");
            if let Some(r) = a {
                assert!(r.type_one || r.type_two, "{la} p={p}");
                if r.type_one {
                    assert_eq!(r.distinguished, Node::new(1, 1));
                }
            }
        }
    }
}

#[test]
fn type_one_is_stable_under_pm_removal() {
    for p in [3usize, 5] {
        for la in self_conjugate(24) {
            for i in 0..(p - 1) / 2 {
                assert!(r1_stability(&la, p, i), "{la} p={p} i={i}");
            }
        }
    }
}

#[test]
fn weight_one_self_conjugate_are_type_two() {
    for p in [3usize, 5, 7] {
        for la in self_conjugate(24) {
            if la.p_weight(p) == 1 {
                assert!(r_info(&la, p).is_some_and(|r| r.type_two), "{la} p={p}");
                assert!(in_two_factor_set(&la, p));
            }
        }
    }
}

#[test]
fn alternating_list_for_three() {
    for la in self_conjugate(24) {
        let listed = is_jm(&la, 3)
            || la.p_weight(3) == 1
            || r_info(&la, 3).is_some_and(|r| r.type_one)
            || la == part("3,3,3");
        assert_eq!(alt_irreducible(&la, 3), listed, "{la}");
    }
    for p in [5usize, 7] {
        for la in self_conjugate(24) {
            assert_eq!(alt_irreducible(&la, p), is_jm(&la, p) || r_info(&la, p).is_some(), "{la} p={p}");
        }
    }
}
