use super::expr::HomExpr;
use super::field::binom_mod;
use super::multiset::Multiset;
use super::tableau::Tableau;
use crate::error::{Error, Result};

/// `Θ_T ∘ Θ_S` for `S` a `λ`-tableau of type `μ` and `T` a `μ`-tableau of type `ν`.
///
/// Sums `Π (X^{1j}_v, X^{2j}_v, ...)! Θ_{U_X}` over all ways `X` of splitting each
/// row `T^i` into pieces `X^{ij}` with `|X^{ij}| = S^j_i`.
pub fn compose(t: &Tableau, s: &Tableau, p: u64) -> Result<HomExpr> {
    let mu = s.content();
    let shape = t.shape();
    let trimmed: Vec<usize> = {
        let mut v = shape.clone();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    };
    if mu != trimmed {
        return Err(Error::ChainMismatch(format!("type of {s} is {mu:?} but {t} has shape {shape:?}")));
    }
    let jrows = s.num_rows();
    let mut out = HomExpr::zero(p);
    // running[j][v] is Σ_i X^{ij}_v so far
    let mut running: Vec<Multiset> = vec![Multiset::new(); jrows];
    fn go(
        i: usize,
        t: &Tableau,
        s: &Tableau,
        p: u64,
        coef: u64,
        running: &mut Vec<Multiset>,
        out: &mut HomExpr,
    ) {
        if i > t.num_rows() {
            out.add_term(Tableau::from_multisets(running), coef);
            return;
        }
        let sizes: Vec<usize> = (1..=s.num_rows()).map(|j| s.count(j, i)).collect();
        split(0, &t.row_multiset(i), &sizes, i, t, s, p, coef, running, out);
    }
    #[allow(clippy::too_many_arguments)]
    fn split(
        j: usize,
        pool: &Multiset,
        sizes: &[usize],
        i: usize,
        t: &Tableau,
        s: &Tableau,
        p: u64,
        coef: u64,
        running: &mut Vec<Multiset>,
        out: &mut HomExpr,
    ) {
        if j == sizes.len() {
            if pool.is_empty() {
                go(i + 1, t, s, p, coef, running, out);
            }
            return;
        }
        for piece in pool.submultisets(sizes[j]) {
            let mut c = coef;
            for (v, x) in piece.iter() {
                let before = running[j].get(v);
                c = c * binom_mod((before + x) as u64, x as u64, p) % p;
            }
            if c == 0 {
                continue;
            }
            let rest = pool.difference(&piece).expect("submultiset");
            let saved = running[j].clone();
            running[j] = running[j].union(&piece);
            split(j + 1, &rest, sizes, i, t, s, p, c, running, out);
            running[j] = saved;
        }
    }
    go(1, t, s, p, 1 % p, &mut running, &mut out);
    Ok(out)
}

/// Bilinear extension of [`compose`].
pub fn compose_exprs(t: &HomExpr, s: &HomExpr) -> Result<HomExpr> {
    let p = t.p();
    let mut out = HomExpr::zero(p);
    for (b, cb) in t.iter() {
        for (a, ca) in s.iter() {
            out.add(&compose(b, a, p)?.scaled(cb * ca % p));
        }
    }
    Ok(out)
}
