//! Littlewood-Richardson coefficients by counting LR tableaux.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::partition::{partitions, Partition};

type Key = (Partition, Partition, Partition);

fn cache() -> &'static Mutex<HashMap<Key, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `c^γ_{αβ}`: the number of LR tableaux of shape `γ/α` and content `β`.
pub fn lr_coefficient(gamma: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    if alpha.size() + beta.size() != gamma.size() || !gamma.contains(alpha) || !gamma.contains(beta) {
        return 0;
    }
    let key = (gamma.clone(), alpha.clone(), beta.clone());
    if let Some(&v) = cache().lock().unwrap().get(&key) {
        return v;
    }
    let v = count_lr(gamma, alpha, beta);
    cache().lock().unwrap().insert(key, v);
    v
}

fn count_lr(gamma: &Partition, alpha: &Partition, beta: &Partition) -> u64 {
    // cells in reading order: rows top to bottom, each row right to left
    let mut cells = Vec::new();
    for r in 1..=gamma.len() {
        for c in (alpha.part(r) + 1..=gamma.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let width = gamma.part(1) + 1;
    let mut grid = vec![vec![0usize; width + 1]; gamma.len() + 1];
    let mut used = vec![0usize; beta.len() + 1];
    fn go(
        k: usize,
        cells: &[(usize, usize)],
        gamma: &Partition,
        alpha: &Partition,
        beta: &Partition,
        grid: &mut Vec<Vec<usize>>,
        used: &mut Vec<usize>,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let hi = if c < gamma.part(r) { grid[r][c + 1] } else { beta.len() };
        let lo = if r > 1 && c > alpha.part(r - 1) { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi {
            if used[v] >= beta.part(v) || (v > 1 && used[v] + 1 > used[v - 1]) {
                continue;
            }
            used[v] += 1;
            grid[r][c] = v;
            total += go(k + 1, cells, gamma, alpha, beta, grid, used);
            used[v] -= 1;
        }
        grid[r][c] = 0;
        total
    }
    go(0, &cells, gamma, alpha, beta, &mut grid, &mut used)
}

/// All partitions contained in `gamma`.
pub fn subpartitions(gamma: &Partition) -> Vec<Partition> {
    (0..=gamma.size())
        .flat_map(partitions)
        .filter(|a| gamma.contains(a))
        .collect()
}

/// Every `β` with `c^γ_{αβ} > 0`, with its coefficient.
pub fn skew_expansion(gamma: &Partition, alpha: &Partition) -> Vec<(Partition, u64)> {
    if !gamma.contains(alpha) {
        return Vec::new();
    }
    partitions(gamma.size() - alpha.size())
        .into_iter()
        .filter(|b| gamma.contains(b))
        .filter_map(|b| {
            let c = lr_coefficient(gamma, alpha, &b);
            (c > 0).then_some((b, c))
        })
        .collect()
}

/// Every pair `(α, β)` with `c^γ_{αβ} > 0`.
pub fn lr_support_pairs(gamma: &Partition) -> Vec<(Partition, Partition, u64)> {
    subpartitions(gamma)
        .into_iter()
        .flat_map(|a| {
            skew_expansion(gamma, &a)
                .into_iter()
                .map(move |(b, c)| (a.clone(), b, c))
        })
        .collect()
}
