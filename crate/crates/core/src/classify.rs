//! JM-partitions, R-partitions and the two-composition-factor set.

use serde::Serialize;

use crate::abacus::AbacusDisplay;
use crate::partition::{Node, Partition};
use crate::restriction::remove_all_pm;

/// An R-partition's distinguished diagonal node and its type flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RInfo {
    pub distinguished: Node,
    pub type_one: bool,
    pub type_two: bool,
}

fn row_or_column_constant(d: &[Vec<u32>], r: usize, c: usize) -> bool {
    let v = d[r][c];
    let row_ok = d[r].iter().all(|&x| x == v);
    let col_ok = d.iter().filter(|row| row.len() > c).all(|row| row[c] == v);
    row_ok || col_ok
}

/// Every nonzero p-power diagram entry equals the rest of its row or of its column.
pub fn is_jm(la: &Partition, p: usize) -> bool {
    let d = la.p_power_diagram(p);
    (0..d.len()).all(|r| (0..d[r].len()).all(|c| d[r][c] == 0 || row_or_column_constant(&d, r, c)))
}

/// The abacus characterisation of JM-partitions.
pub fn is_jm_abacus(la: &Partition, p: usize) -> bool {
    let ab = AbacusDisplay::new(la, p);
    if !ab.is_quotient_separated() {
        return false;
    }
    let oq = ab.ordered_quotient();
    let first = &oq[0];
    let last = &oq[p - 1];
    first.is_restricted(p)
        && is_jm(first, p)
        && last.is_regular(p)
        && is_jm(last, p)
        && oq[1..p - 1].iter().all(Partition::is_empty)
}

/// Diagonal indices `r` (1-based) whose node can serve as the distinguished node.
fn valid_distinguished(la: &Partition, p: usize) -> Vec<usize> {
    let d = la.p_power_diagram(p);
    let diag = (1..=la.len()).take_while(|&r| la.part(r) >= r);
    diag.filter(|&r| {
        d[r - 1][r - 1] != 0
            && (0..d.len()).all(|i| {
                (0..d[i].len()).all(|j| (i == r - 1 && j == r - 1) || d[i][j] == 0 || row_or_column_constant(&d, i, j))
            })
    })
    .collect()
}

fn type_one_by_stripping(la: &Partition, p: usize) -> bool {
    let xi = la.strip_rim_hook(Node::new(1, 1)).expect("(1,1) lies in a nonempty diagram");
    xi.is_self_conjugate() && xi.p_weight(p) == 0 && xi.part(1) <= (p - 1) / 2
}

fn type_two_by_stripping(la: &Partition, p: usize, r: usize) -> bool {
    let n = Node::new(r, r);
    if la.hook_length(n).ok() != Some(p) {
        return false;
    }
    let rest = la.strip_rim_hook(n).expect("diagonal node in diagram");
    rest.is_self_conjugate() && is_jm(&rest, p)
}

/// R-partition data read from the p-power diagram. The type flags come from the
/// rim-hook stripping descriptions.
pub fn r_info(la: &Partition, p: usize) -> Option<RInfo> {
    if !la.is_self_conjugate() {
        return None;
    }
    let valid = valid_distinguished(la, p);
    let &r = valid.first()?;
    Some(RInfo {
        distinguished: Node::new(r, r),
        type_one: r == 1 && type_one_by_stripping(la, p),
        type_two: valid.iter().any(|&s| type_two_by_stripping(la, p, s)),
    })
}

/// Type flags straight from the definitions: type I means the node `(1,1)` is
/// distinguished, type II means some distinguished node has hook length `p`.
pub fn r_type_by_definition(la: &Partition, p: usize) -> Option<(bool, bool)> {
    if !la.is_self_conjugate() {
        return None;
    }
    let valid = valid_distinguished(la, p);
    if valid.is_empty() {
        return None;
    }
    let one = valid.contains(&1);
    let two = valid.iter().any(|&r| la.hook_length(Node::new(r, r)).ok() == Some(p));
    Some((one, two))
}

/// R-partition data read from the abacus.
pub fn r_info_abacus(la: &Partition, p: usize) -> Option<RInfo> {
    if !la.is_self_conjugate() {
        return None;
    }
    let h = ((p - 1) / 2) as i64;
    let ab = AbacusDisplay::new(la, p);
    let late: Vec<i64> = ab.nonnegative_beads().into_iter().filter(|&x| x >= h).collect();
    let type_one = late.len() == 1 && (late[0] - h) % p as i64 == 0;
    let type_two = ab.is_quotient_separated() && {
        let oq = ab.ordered_quotient();
        let h = h as usize;
        oq[0].is_restricted(p)
            && is_jm(&oq[0], p)
            && oq[p - 1].is_regular(p)
            && is_jm(&oq[p - 1], p)
            && oq[h] == Partition::new(vec![1]).unwrap()
            && (1..p - 1).filter(|&i| i != h).all(|i| oq[i].is_empty())
    };
    if !type_one && !type_two {
        return None;
    }
    let distinguished = if type_one {
        Node::new(1, 1)
    } else {
        (1..=la.len())
            .map(|r| Node::new(r, r))
            .find(|&n| la.hook_length(n).ok() == Some(p))
            .expect("a type II partition has a diagonal p-hook")
    };
    Some(RInfo { distinguished, type_one, type_two })
}

/// The abacus row `j` of the single late bead of a type I R-partition.
pub fn type_one_bead_row(la: &Partition, p: usize) -> Option<i64> {
    let h = ((p - 1) / 2) as i64;
    let late: Vec<i64> = AbacusDisplay::new(la, p)
        .nonnegative_beads()
        .into_iter()
        .filter(|&x| x >= h)
        .collect();
    match late.as_slice() {
        [x] if (x - h) % p as i64 == 0 => Some((x - h) / p as i64),
        _ => None,
    }
}

/// Self-conjugate partitions whose Specht module has exactly two composition factors.
pub fn in_two_factor_set(la: &Partition, p: usize) -> bool {
    if !la.is_self_conjugate() {
        return false;
    }
    if la.p_weight(p) == 1 {
        return true;
    }
    if p == 3 && la.parts() == [3, 3, 3] {
        return true;
    }
    match r_info(la, p) {
        Some(info) => info.type_one || (p >= 5 && info.type_two),
        None => false,
    }
}

/// Whether the corresponding ordinary irreducible character of the alternating
/// group stays irreducible mod p.
pub fn alt_irreducible(la: &Partition, p: usize) -> bool {
    is_jm(la, p) || (la.is_self_conjugate() && in_two_factor_set(la, p))
}

/// If removing all `±i`-nodes leaves a type I R-partition then `la` is one too.
pub fn r1_stability(la: &Partition, p: usize, i: usize) -> bool {
    let Ok(mu) = remove_all_pm(la, p, i) else {
        return true;
    };
    let is_one = |x: &Partition| r_info(x, p).is_some_and(|r| r.type_one);
    !is_one(&mu) || is_one(la)
}

/// Summary used by the command line interface.
#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub self_conjugate: bool,
    pub jm: bool,
    pub r_type: Option<RInfo>,
    pub two_factor: bool,
    pub alt_irreducible: bool,
    pub weight: usize,
    pub core: Partition,
}

pub fn classify(la: &Partition, p: usize) -> Classification {
    let (core, weight) = la.p_core_weight(p);
    Classification {
        self_conjugate: la.is_self_conjugate(),
        jm: is_jm(la, p),
        r_type: r_info(la, p),
        two_factor: in_two_factor_set(la, p),
        alt_irreducible: alt_irreducible(la, p),
        weight,
        core,
    }
}
