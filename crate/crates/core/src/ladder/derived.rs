use std::collections::BTreeSet;

use serde::Serialize;

use super::{lower_corners_of, upper_corners_of, Ladder};
use crate::cell::Cell;
use crate::error::{Error, Result};

/// `L_min` and `L_max`. Building `L_max` may push lower corners left of
/// column 1; the whole ladder is then translated right by `max_col_shift`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Envelope {
    pub min: Ladder,
    pub max: Ladder,
    pub max_col_shift: i32,
}

impl Ladder {
    /// Same upper corners; lower corner `j` moves to `(d_j - t_j + 1, c_j + t_j - 1)`
    /// and every minor size becomes 1. Its cell count is the height of the
    /// ladder determinantal ideal.
    pub fn derived_lprime(&self) -> Ladder {
        Ladder {
            m: self.m,
            n: self.n,
            upper: self.upper.clone(),
            lower: self
                .lower
                .iter()
                .zip(&self.t)
                .map(|(l, &t)| Cell::new(l.row - t as i32 + 1, l.col + t as i32 - 1))
                .collect(),
            t: vec![1; self.k()],
        }
    }

    /// Cells removed from `L` to leave a set of size `|L'|`.
    ///
    /// Each row is cut into runs of cells sharing a region and walked right
    /// to left; a run of minor size `s` whose right neighbour has size `s'`
    /// (1 past the end) loses `s - s'` cells from its left end, and any
    /// shortfall carries to the next run. Columns are walked top to bottom
    /// against the run above and lose cells from their bottom end.
    pub fn derived_b(&self) -> BTreeSet<Cell> {
        let cells = self.cells();
        let mut out = BTreeSet::new();
        for r in 1..=self.m {
            let line: Vec<Cell> = cells.iter().copied().filter(|c| c.row == r).collect();
            let mut carry = 0i64;
            let mut prev = 1i64;
            for run in self.runs(&line).iter().rev() {
                let t = self.region_t(run[0]).unwrap() as i64;
                let need = t - prev + carry;
                let take = need.clamp(0, run.len() as i64) as usize;
                out.extend(&run[..take]);
                carry = (need - take as i64).max(0);
                prev = t;
            }
        }
        for c in 1..=self.n {
            let line: Vec<Cell> = cells.iter().copied().filter(|x| x.col == c).collect();
            let mut carry = 0i64;
            let mut prev = 1i64;
            for run in self.runs(&line) {
                let t = self.region_t(run[0]).unwrap() as i64;
                let need = t - prev + carry;
                let take = need.clamp(0, run.len() as i64) as usize;
                out.extend(&run[run.len() - take..]);
                carry = (need - take as i64).max(0);
                prev = t;
            }
        }
        out
    }

    fn runs(&self, line: &[Cell]) -> Vec<Vec<Cell>> {
        let mut out: Vec<Vec<Cell>> = Vec::new();
        let mut last = None;
        for &x in line {
            let key = self.region_of(x);
            match out.last_mut() {
                Some(run) if key == last => run.push(x),
                _ => out.push(vec![x]),
            }
            last = key;
        }
        out
    }

    pub fn derived_min_max(&self) -> Result<Envelope> {
        let tmin = *self.t.iter().min().unwrap();
        let tmax = *self.t.iter().max().unwrap();
        let mut min = self.clone();
        for (l, &t) in min.lower.iter_mut().zip(&self.t) {
            let s = (t - tmin) as i32;
            *l = Cell::new(l.row - s, l.col + s);
        }
        min.t = vec![tmin; self.k()];
        for (j, &l) in min.lower.iter().enumerate() {
            if !min.in_bounds(l) || !min.under_upper(l) {
                return Err(Error::Degenerate(format!("lower corner {} of L_min leaves the ladder", j + 1)));
            }
        }
        let moved: Vec<Cell> = self
            .lower
            .iter()
            .zip(&self.t)
            .map(|(l, &t)| {
                let s = (tmax - t) as i32;
                Cell::new(l.row + s, l.col - s)
            })
            .collect();
        let shift = (1 - moved.iter().map(|c| c.col).min().unwrap()).max(0);
        let max = Ladder {
            m: self.m.max(moved.iter().map(|c| c.row).max().unwrap()),
            n: self.n + shift,
            upper: self.upper.iter().map(|u| Cell::new(u.row, u.col + shift)).collect(),
            lower: moved.iter().map(|l| Cell::new(l.row, l.col + shift)).collect(),
            t: vec![tmax; self.k()],
        };
        Ok(Envelope { min, max, max_col_shift: shift })
    }

    /// Index actually used by the biliaison step starting from `i`: moves
    /// left past lower corners sharing a row and right past ones sharing a
    /// column.
    pub fn biliaison_index(&self, i: usize) -> Result<usize> {
        if self.is_linear() {
            return Err(Error::AlreadyLinear);
        }
        if i >= self.k() {
            return Err(Error::IndexOutOfRange { index: i + 1, len: self.k() });
        }
        let mut i = i;
        for _ in 0..=self.k() {
            if i > 0 && self.lower[i].row == self.lower[i - 1].row {
                i -= 1;
            } else if i + 1 < self.k() && self.lower[i].col == self.lower[i + 1].col {
                i += 1;
            } else {
                break;
            }
        }
        if self.t[i] < 2 {
            return Err(Error::InvalidLadder(format!("t_{} = {} is too small for a biliaison step", i + 1, self.t[i])));
        }
        Ok(i)
    }

    /// Removes the last row and first column of `L_i` and lowers `t_i` by one.
    /// Returns the new ladder and the index used.
    pub fn derived_m(&self, i: usize) -> Result<(Ladder, usize)> {
        let i = self.biliaison_index(i)?;
        let mut out = self.clone();
        let l = out.lower[i];
        out.lower[i] = Cell::new(l.row - 1, l.col + 1);
        out.t[i] -= 1;
        Ok((out.tidy(), i))
    }

    /// Splits lower corner `i` into `(d_i - 1, c_i)` and `(d_i, c_i + 1)`,
    /// both with minor size `t_i`. `i` must be the index returned by
    /// [`Ladder::biliaison_index`].
    pub fn derived_n(&self, i: usize) -> Result<Ladder> {
        if i >= self.k() {
            return Err(Error::IndexOutOfRange { index: i + 1, len: self.k() });
        }
        let mut out = self.clone();
        let l = out.lower[i];
        out.lower.splice(i..=i, [Cell::new(l.row - 1, l.col), Cell::new(l.row, l.col + 1)]);
        out.t.insert(i, self.t[i]);
        Ok(out.tidy())
    }

    /// Drops the cells that lie in no `t_j`-minor of any `L_j` and recomputes
    /// corners. The ideal is unchanged. A ladder that already satisfies the
    /// nondegeneracy clause is returned as is.
    pub fn prune(&self) -> Result<Ladder> {
        let mut cur = self.clone();
        for _ in 0..=self.len() {
            if !cur.validate().has("nondeg") {
                return Ok(cur);
            }
            cur = cur.rebuild_from_minors()?;
        }
        Err(Error::Degenerate("prune did not reach a fixed point".into()))
    }

    /// Keeps exactly the cells lying in some `t_j`-minor of some `L_j` and
    /// recomputes every corner from them.
    pub fn rebuild_from_minors(&self) -> Result<Ladder> {
        let cells = self.cells();
        let pieces: Vec<(u32, BTreeSet<Cell>)> = (0..self.k())
            .map(|j| (self.t[j], cells.iter().copied().filter(|&x| self.cell_in_some_minor(j, x)).collect()))
            .collect();
        let kept: BTreeSet<Cell> = pieces.iter().flat_map(|(_, p)| p.iter().copied()).collect();
        if kept.is_empty() {
            return Err(Error::Degenerate("no cell lies in a minor of the required size".into()));
        }
        let mut corners: Vec<(Cell, u32)> = pieces
            .iter()
            .filter(|(_, p)| !p.is_empty())
            .flat_map(|(t, p)| lower_corners_of(p).into_iter().map(move |c| (c, *t)))
            .collect();
        corners.sort();
        corners.dedup();
        let dominated = |&(p, tp): &(Cell, u32)| {
            corners
                .iter()
                .any(|&(q, tq)| (q, tq) != (p, tp) && q.row >= p.row && q.col <= p.col && tq <= tp)
        };
        let lower: Vec<(Cell, u32)> = corners.iter().copied().filter(|x| !dominated(x)).collect();
        if lower.windows(2).any(|w| w[1].0.col < w[0].0.col) {
            return Err(Error::InvalidLadder("pruned cell set has crossing lower corners".into()));
        }
        let out = Ladder::new(
            self.m,
            self.n,
            upper_corners_of(&kept),
            lower.iter().map(|x| x.0).collect(),
            lower.iter().map(|x| x.1).collect(),
        )?;
        if out.cells() != kept {
            return Err(Error::InvalidLadder("pruned cell set is not a ladder".into()));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn lprime_of_matrix_is_a_rectangle() {
        for (m, n, t) in [(2, 2, 1), (2, 2, 2), (3, 4, 2), (4, 4, 3), (3, 3, 3)] {
            let l = Ladder::matrix(m, n, t);
            let lp = l.derived_lprime();
            let expect = ((m - t as i32 + 1) * (n - t as i32 + 1)) as usize;
            assert_eq!(lp.len(), expect);
            assert_eq!(l.len() - l.derived_b().len(), expect);
        }
    }

    #[test]
    fn two_corner_lprime_and_b() {
        let l = two_corner([2, 2]);
        assert_eq!(l.derived_lprime().cells(), cells(&[(1, 2), (1, 3), (2, 3)]));
        assert_eq!(l.len() - l.derived_b().len(), 3);
        let l = two_corner([1, 2]);
        assert_eq!(l.len() - l.derived_b().len(), l.derived_lprime().len());
    }

    #[test]
    fn envelope_of_mixed_ladder() {
        let l = Ladder::new(4, 4, vec![c(1, 4)], vec![c(2, 1), c(4, 2)], vec![1, 2]).unwrap();
        assert_eq!(l.len(), 14);
        let e = l.derived_min_max().unwrap();
        assert_eq!(e.min.lower, vec![c(2, 1), c(3, 3)]);
        assert_eq!(e.min.t, vec![1, 1]);
        assert_eq!(e.min.derived_lprime().cells(), l.derived_lprime().cells());
        assert_eq!(e.max_col_shift, 1);
        assert_eq!((e.max.m, e.max.n), (4, 5));
        assert_eq!(e.max.lower, vec![c(3, 1), c(4, 3)]);
        assert_eq!(e.max.t, vec![2, 2]);
    }

    #[test]
    fn envelope_shifts_when_needed() {
        let l = Ladder::new(4, 4, vec![c(1, 4)], vec![c(2, 1), c(4, 2)], vec![1, 2]).unwrap();
        let e = l.derived_min_max().unwrap();
        let shifted: BTreeSet<Cell> =
            e.max.derived_lprime().cells().iter().map(|x| Cell::new(x.row, x.col - e.max_col_shift)).collect();
        assert_eq!(shifted, l.derived_lprime().cells());
        for x in l.cells() {
            assert!(e.max.contains(Cell::new(x.row, x.col + e.max_col_shift)));
        }
    }

    #[test]
    fn biliaison_ladders_of_small_matrix() {
        let l = Ladder::matrix(2, 2, 2);
        let (m, i) = l.derived_m(0).unwrap();
        assert_eq!(i, 0);
        assert_eq!(m.cells(), cells(&[(1, 2)]));
        assert_eq!(m.t, vec![1]);
        let n = l.derived_n(i).unwrap();
        assert_eq!(n.lower, vec![c(1, 1), c(2, 2)]);
        assert_eq!(n.t, vec![2, 2]);
        assert_eq!(n.cells(), cells(&[(1, 1), (1, 2), (2, 2)]));
    }

    #[test]
    fn biliaison_index_skips_shared_lines() {
        let l = Ladder::new(4, 4, vec![c(1, 4)], vec![c(2, 1), c(2, 3)], vec![2, 1]).unwrap();
        assert_eq!(l.biliaison_index(0).unwrap(), 0);
        let l = Ladder::new(4, 4, vec![c(1, 4)], vec![c(2, 1), c(4, 1)], vec![1, 2]).unwrap();
        assert_eq!(l.biliaison_index(0).unwrap(), 1);
        assert_eq!(Ladder::matrix(2, 2, 1).derived_m(0), Err(Error::AlreadyLinear));
    }

    #[test]
    fn prune_drops_isolated_column() {
        let l = Ladder::new(3, 4, vec![c(1, 3), c(3, 4)], vec![c(3, 1)], vec![2]).unwrap();
        assert!(l.validate().has("nondeg"));
        let p = l.prune().unwrap();
        assert_eq!(p.cells(), Ladder::matrix(3, 3, 2).cells());
        assert_eq!(p.upper, vec![c(1, 3)]);
        assert!(p.validate().is_ok(), "{:?}", p.validate());
        assert_eq!(p.prune().unwrap(), p);
    }

    #[test]
    fn prune_of_empty_ideal_is_degenerate() {
        assert!(matches!(Ladder::matrix(2, 2, 3).prune(), Err(Error::Degenerate(_))));
    }
}
