use std::collections::BTreeMap;
use std::fmt;

/// A finite multiset of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiset {
    counts: BTreeMap<usize, usize>,
}

impl Multiset {
    pub fn new() -> Self {
        Self::default()
    }

    /// `{l}^n`.
    pub fn repeated(l: usize, n: usize) -> Self {
        let mut out = Self::new();
        out.add(l, n);
        out
    }

    /// Multiplicity of `i`.
    pub fn get(&self, i: usize) -> usize {
        self.counts.get(&i).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, n: usize) {
        if n > 0 {
            *self.counts.entry(i).or_default() += n;
        }
    }

    /// Removes `n` copies of `i`; returns false (leaving `self` unchanged) if there are fewer.
    pub fn remove(&mut self, i: usize, n: usize) -> bool {
        let have = self.get(i);
        if have < n {
            return false;
        }
        if have == n {
            self.counts.remove(&i);
        } else {
            self.counts.insert(i, have - n);
        }
        true
    }

    /// Total number of elements.
    pub fn len(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// `(element, multiplicity)` pairs in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&k, &v)| (k, v))
    }

    /// Elements in increasing order, with repetition.
    pub fn to_sorted_vec(&self) -> Vec<usize> {
        self.iter().flat_map(|(k, v)| std::iter::repeat(k).take(v)).collect()
    }

    /// `X ⊔ Y`.
    pub fn union(&self, other: &Multiset) -> Multiset {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.add(k, v);
        }
        out
    }

    /// `X \ Y`, or `None` if `Y` is not contained in `X`.
    pub fn difference(&self, other: &Multiset) -> Option<Multiset> {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            if !out.remove(k, v) {
                return None;
            }
        }
        Some(out)
    }

    /// `X + 1`.
    pub fn shifted(&self, by: usize) -> Multiset {
        Multiset { counts: self.counts.iter().map(|(&k, &v)| (k + by, v)).collect() }
    }

    /// Every submultiset with exactly `size` elements.
    pub fn submultisets(&self, size: usize) -> Vec<Multiset> {
        let items: Vec<(usize, usize)> = self.iter().collect();
        let mut out = Vec::new();
        fn go(k: usize, left: usize, items: &[(usize, usize)], cur: &mut Multiset, out: &mut Vec<Multiset>) {
            if k == items.len() {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let rest: usize = items[k + 1..].iter().map(|x| x.1).sum();
            let (e, m) = items[k];
            let lo = left.saturating_sub(rest);
            for take in lo..=m.min(left) {
                cur.add(e, take);
                go(k + 1, left - take, items, cur, out);
                cur.remove(e, take);
            }
        }
        if size <= self.len() {
            go(0, size, &items, &mut Multiset::new(), &mut out);
        }
        out
    }
}

impl FromIterator<usize> for Multiset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut out = Multiset::new();
        for x in iter {
            out.add(x, 1);
        }
        out
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.to_sorted_vec().iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}
