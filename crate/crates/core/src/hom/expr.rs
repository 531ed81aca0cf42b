use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::field::{binom_mod, neg, signed};
use super::multiset::Multiset;
use super::tableau::Tableau;
use crate::error::{Error, Result};

/// A linear combination of tableau homomorphisms over `F_p`, keyed by
/// row-standard tableaux.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomExpr {
    p: u64,
    terms: BTreeMap<Tableau, u64>,
}

impl HomExpr {
    pub fn zero(p: u64) -> Self {
        HomExpr { p, terms: BTreeMap::new() }
    }

    pub fn single(t: Tableau, p: u64) -> Self {
        let mut out = Self::zero(p);
        out.add_term(t, 1);
        out
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Adds `c Θ_t`; `t` is row-standardized first.
    pub fn add_term(&mut self, t: Tableau, c: u64) {
        let c = c % self.p;
        if c == 0 {
            return;
        }
        let t = if t.is_row_standard() { t } else { t.row_standardized() };
        let p = self.p;
        let entry = self.terms.entry(t);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = (*o.get() + c) % p;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&mut self, other: &HomExpr) {
        for (t, &c) in &other.terms {
            self.add_term(t.clone(), c);
        }
    }

    pub fn scaled(&self, c: u64) -> HomExpr {
        let mut out = HomExpr::zero(self.p);
        for (t, &a) in &self.terms {
            out.add_term(t.clone(), a * (c % self.p));
        }
        out
    }

    pub fn coefficient(&self, t: &Tableau) -> u64 {
        let t = t.row_standardized();
        self.terms.get(&t).copied().unwrap_or(0)
    }

    /// The coefficient as an integer in `(-p/2, p/2]`.
    pub fn signed_coefficient(&self, t: &Tableau) -> i64 {
        signed(self.coefficient(t), self.p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Tableau, u64)> {
        self.terms.iter().map(|(t, &c)| (t, c))
    }

    pub fn tableaux(&self) -> impl Iterator<Item = &Tableau> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Every term is semistandard.
    pub fn is_semistandard(&self) -> bool {
        self.terms.keys().all(Tableau::is_semistandard)
    }
}

impl Serialize for HomExpr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            tableau: &'a Tableau,
            coefficient: i64,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (t, &c) in &self.terms {
            seq.serialize_element(&Term { tableau: t, coefficient: signed(c, self.p) })?;
        }
        seq.end()
    }
}

fn with_rows(a: &Tableau, h: usize, top: &Multiset, bottom: &Multiset) -> Tableau {
    let mut rows: Vec<Multiset> = (1..=a.num_rows()).map(|r| a.row_multiset(r)).collect();
    rows[h - 1] = top.clone();
    rows[h] = bottom.clone();
    Tableau::from_multisets(&rows)
}

/// The relation `Σ_{(U,V)} Π binom(R_i+U_i, R_i) binom(T_i+V_i, T_i) Θ̂_{A[U,V]} = 0`
/// between rows `h` and `h+1`, returned as its left-hand side.
pub fn garnir_relation(a: &Tableau, h: usize, r: &Multiset, s: &Multiset, t: &Multiset, p: u64) -> Result<HomExpr> {
    if h == 0 || h >= a.num_rows() {
        return Err(Error::InvalidGarnir(format!("rows {h} and {} of {a}", h + 1)));
    }
    let rows = a.row_multiset(h).union(&a.row_multiset(h + 1));
    if r.union(s).union(t) != rows {
        return Err(Error::InvalidGarnir(format!("R ⊔ S ⊔ T differs from rows {h}, {} of {a}", h + 1)));
    }
    let la_h = a.row(h).len();
    if s.len() <= la_h {
        return Err(Error::InvalidGarnir(format!("|S| = {} is not greater than {la_h}", s.len())));
    }
    let mut out = HomExpr::zero(p);
    if r.len() > la_h {
        return Ok(out);
    }
    for u in s.submultisets(la_h - r.len()) {
        let v = s.difference(&u).expect("submultiset");
        let mut c = 1;
        for (i, n) in u.iter() {
            c = c * binom_mod((r.get(i) + n) as u64, r.get(i) as u64, p) % p;
        }
        for (i, n) in v.iter() {
            c = c * binom_mod((t.get(i) + n) as u64, t.get(i) as u64, p) % p;
        }
        if c != 0 {
            out.add_term(with_rows(a, h, &r.union(&u), &t.union(&v)), c);
        }
    }
    Ok(out)
}

/// Choice of the Garnir relation used to rewrite a non-semistandard tableau.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pivot {
    /// First row pair from the top, leftmost bad column, split at the lower entry.
    #[default]
    TopLeft,
    /// Last row pair, rightmost bad column, split at the upper entry.
    BottomRight,
}

/// `(h, R, S, T)` for the chosen violation, or `None` if `a` is semistandard.
pub fn pivot(a: &Tableau, rule: Pivot) -> Option<(usize, Multiset, Multiset, Multiset)> {
    let bad = |h: usize| -> Vec<usize> {
        let (top, bottom) = (a.row(h), a.row(h + 1));
        (0..bottom.len()).filter(|&c| top[c] >= bottom[c]).collect()
    };
    let pairs: Vec<usize> = match rule {
        Pivot::TopLeft => (1..a.num_rows()).collect(),
        Pivot::BottomRight => (1..a.num_rows()).rev().collect(),
    };
    for h in pairs {
        let cols = bad(h);
        let x = match (rule, cols.first(), cols.last()) {
            (Pivot::TopLeft, Some(&c), _) => a.row(h + 1)[c],
            (Pivot::BottomRight, _, Some(&c)) => a.row(h)[c],
            _ => continue,
        };
        let r: Multiset = a.row(h).iter().copied().filter(|&v| v < x).collect();
        let t: Multiset = a.row(h + 1).iter().copied().filter(|&v| v > x).collect();
        let s = a
            .row(h)
            .iter()
            .copied()
            .filter(|&v| v >= x)
            .chain(a.row(h + 1).iter().copied().filter(|&v| v <= x))
            .collect();
        return Some((h, r, s, t));
    }
    None
}

/// Rewrites `e` in the semistandard basis with the default pivot rule.
pub fn semistandardize(e: &HomExpr) -> HomExpr {
    semistandardize_with(e, Pivot::default())
}

/// Rewrites `e` in the semistandard basis.
///
/// Terms are processed in increasing dominance key; each rewrite replaces a
/// tableau by tableaux strictly dominating it, so the loop terminates.
pub fn semistandardize_with(e: &HomExpr, rule: Pivot) -> HomExpr {
    let p = e.p;
    let mut queue: BTreeMap<(u64, Tableau), u64> = BTreeMap::new();
    let push = |queue: &mut BTreeMap<(u64, Tableau), u64>, t: Tableau, c: u64| {
        let key = (t.dominance_key(), t);
        let slot = queue.entry(key).or_insert(0);
        *slot = (*slot + c) % p;
    };
    for (t, c) in e.iter() {
        push(&mut queue, t.clone(), c);
    }
    let mut out = HomExpr::zero(p);
    while let Some(((key, a), c)) = queue.pop_first() {
        if c == 0 {
            continue;
        }
        let Some((h, r, s, t)) = pivot(&a, rule) else {
            out.add_term(a, c);
            continue;
        };
        let rel = garnir_relation(&a, h, &r, &s, &t, p).expect("pivot gives a valid relation");
        assert_eq!(rel.coefficient(&a), 1, "pivot term of {a} must have coefficient 1");
        for (u, cu) in rel.iter() {
            if *u == a {
                continue;
            }
            assert!(u.dominance_key() > key, "semistandardization failed to terminate at {a}");
            push(&mut queue, u.clone(), neg(c * cu % p, p));
        }
    }
    out
}

/// Moves every `r` in row `h+1` of `b` up to row `h`:
/// `Θ̂_B = (-1)^{B^{h+1}_r} Σ_V Π binom(B^{h+1}_i + V_i, V_i) Θ̂_{B[V]}`.
pub fn move_ones(b: &Tableau, h: usize, r: usize, p: u64) -> HomExpr {
    let n = b.count(h + 1, r);
    let top = b.row_multiset(h);
    let bottom = b.row_multiset(h + 1);
    let mut pool = top.clone();
    pool.remove(r, top.get(r));
    let mut out = HomExpr::zero(p);
    let sign = if n % 2 == 0 { 1 } else { p - 1 };
    let mut lower = bottom.clone();
    lower.remove(r, n);
    let mut upper_base = Multiset::new();
    upper_base.add(r, n);
    for v in pool.submultisets(n) {
        let mut c = sign;
        for (i, k) in v.iter() {
            c = c * binom_mod((bottom.get(i) + k) as u64, k as u64, p) % p;
        }
        if c == 0 {
            continue;
        }
        let upper = top.difference(&v).expect("submultiset").union(&upper_base);
        out.add_term(with_rows(b, h, &upper, &lower.union(&v)), c);
    }
    out
}
