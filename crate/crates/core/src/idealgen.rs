//! Minors of a ladder and the generating sets built from them.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cell::Cell;
use crate::error::Result;
use crate::exactpoly::{minor_determinant, Monomial, Polynomial, PrimeField};
use crate::ladder::Ladder;

/// A square submatrix of size `rows.len()` taken from subladder `subladder`
/// (0-based). Rows and columns are strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MinorSpec {
    pub rows: Vec<i32>,
    pub cols: Vec<i32>,
    pub subladder: usize,
}

impl MinorSpec {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows.iter().flat_map(move |&r| self.cols.iter().map(move |&c| Cell::new(r, c)))
    }

    /// The anti-diagonal `x(r_1, c_t) x(r_2, c_{t-1}) ... x(r_t, c_1)`, which is
    /// the leading monomial of the minor.
    pub fn antidiagonal(&self) -> Monomial {
        let t = self.size();
        Monomial::from_cells((0..t).map(|s| Cell::new(self.rows[s], self.cols[t - 1 - s])))
    }

    pub fn polynomial(&self, field: PrimeField) -> Result<Polynomial> {
        minor_determinant(field, &self.rows, &self.cols)
    }
}

pub(crate) fn subsets(items: &[i32], size: usize) -> Vec<Vec<i32>> {
    fn go(items: &[i32], size: usize, acc: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if acc.len() == size {
            out.push(acc.clone());
            return;
        }
        let need = size - acc.len();
        for idx in 0..items.len() {
            if items.len() - idx < need {
                break;
            }
            acc.push(items[idx]);
            go(&items[idx + 1..], size, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(items, size, &mut Vec::with_capacity(size), &mut out);
    out
}

/// All `t_j`-minors lying in `L_j`, sorted by rows then columns.
pub fn enumerate_minors(ladder: &Ladder, j: usize) -> Vec<MinorSpec> {
    let t = ladder.t[j] as usize;
    let low = ladder.lower[j];
    let rows: Vec<i32> = (1..=low.row.min(ladder.m)).collect();
    let cols: Vec<i32> = (low.col.max(1)..=ladder.n).collect();
    let col_sets = subsets(&cols, t);
    let mut out = Vec::new();
    for rs in subsets(&rows, t) {
        for cs in &col_sets {
            if ladder.under_upper(Cell::new(rs[0], cs[t - 1])) {
                out.push(MinorSpec { rows: rs.clone(), cols: cs.clone(), subladder: j });
            }
        }
    }
    out
}

/// The generators of `I_t(L)`: every `t_j`-minor of every `L_j`, a minor
/// shared by several subladders listed once under the smallest index.
pub fn generators(ladder: &Ladder) -> Vec<MinorSpec> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for j in 0..ladder.k() {
        for g in enumerate_minors(ladder, j) {
            if seen.insert((g.rows.clone(), g.cols.clone())) {
                out.push(g);
            }
        }
    }
    out
}

pub fn generator_polynomials(ladder: &Ladder, field: PrimeField) -> Result<Vec<Polynomial>> {
    generators(ladder).iter().map(|g| g.polynomial(field)).collect()
}

/// The minors expected to form a minimal Gröbner basis: a minor of `L_j` is
/// dropped when its anti-diagonal contains the anti-diagonal of a smaller
/// minor of another subladder. For `i < j` that happens when at least `t_i`
/// of its rows are `<= d_i`; for `i > j` when at least `t_i` of its columns
/// are `>= c_i` and `t_i < t_j`. Equal minors are kept once, at the smallest
/// index.
pub fn candidate_gb(ladder: &Ladder) -> Vec<MinorSpec> {
    let k = ladder.k();
    generators(ladder)
        .into_iter()
        .filter(|g| {
            let j = g.subladder;
            let earlier = (0..j).any(|i| {
                let d = ladder.lower[i].row;
                g.rows.iter().filter(|&&r| r <= d).count() >= ladder.t[i] as usize
            });
            let later = (j + 1..k).any(|i| {
                let c = ladder.lower[i].col;
                ladder.t[i] < ladder.t[j] && g.cols.iter().filter(|&&x| x >= c).count() >= ladder.t[i] as usize
            });
            !earlier && !later
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::DEFAULT_PRIME;

    fn c(r: i32, col: i32) -> Cell {
        Cell::new(r, col)
    }

    fn two_corner(t: [u32; 2]) -> Ladder {
        Ladder::new(3, 3, vec![c(1, 3)], vec![c(2, 1), c(3, 2)], t.to_vec()).unwrap()
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn matrix_has_all_minors() {
        for (m, n, t) in [(2, 2, 1), (2, 2, 2), (3, 4, 2), (4, 4, 3), (3, 3, 3)] {
            let l = Ladder::matrix(m, n, t);
            let g = generators(&l);
            assert_eq!(g.len(), binom(m as usize, t as usize) * binom(n as usize, t as usize));
            assert_eq!(candidate_gb(&l).len(), g.len());
        }
    }

    #[test]
    fn two_corner_generators() {
        let l = two_corner([2, 2]);
        let g = generators(&l);
        assert_eq!(g.len(), 5);
        let gb = candidate_gb(&l);
        assert_eq!(gb.len(), 5);
        assert_eq!(enumerate_minors(&l, 0).len(), 3);
        assert_eq!(enumerate_minors(&l, 1).len(), 3);
        let shared = MinorSpec { rows: vec![1, 2], cols: vec![2, 3], subladder: 0 };
        assert!(g.contains(&shared));
    }

    #[test]
    fn mixed_sizes_drop_redundant_minors() {
        let l = two_corner([2, 1]);
        let g = generators(&l);
        assert_eq!(g.len(), 3 + 6);
        let gb = candidate_gb(&l);
        assert!(gb.iter().all(|m| m.size() == 1 || m.cols[0] < 2));
    }

    #[test]
    fn antidiagonal_is_leading_monomial() {
        let f = PrimeField::new(DEFAULT_PRIME).unwrap();
        for g in generators(&Ladder::matrix(3, 4, 3)) {
            let p = g.polynomial(f).unwrap();
            assert_eq!(p.leading_monomial().unwrap(), &g.antidiagonal());
        }
    }

    #[test]
    fn subsets_counts() {
        let v: Vec<i32> = (1..=6).collect();
        for k in 0..=6 {
            assert_eq!(subsets(&v, k).len(), binom(6, k));
        }
    }
}
