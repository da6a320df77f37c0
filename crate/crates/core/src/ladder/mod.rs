//! Ladder geometry.
//!
//! A ladder is described by its upper outside corners `(b_i, a_i)` and its
//! lower outside corners `(d_j, c_j)`, each lower corner carrying a minor
//! size `t_j`. A cell `(r, c)` belongs to the ladder iff it lies south-west
//! of some upper corner and north-east of some lower corner:
//! `b_i <= r`, `c <= a_i`, `r <= d_j`, `c_j <= c`.
//!
//! Corner lists are the canonical representation; cell sets are derived on
//! demand. Corners of derived ladders may fall outside the ambient matrix
//! (for instance the shifted corners of [`Ladder::derived_lprime`]); cells
//! are always clipped to `1..=m` x `1..=n`.

mod derived;
mod regions;
mod validate;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cell::Cell;
use crate::error::{Error, Result};

pub use regions::Region;
pub use validate::{ValidationReport, Violation};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ladder {
    pub m: i32,
    pub n: i32,
    pub upper: Vec<Cell>,
    pub lower: Vec<Cell>,
    pub t: Vec<u32>,
}

impl Ladder {
    /// Only checks that the pieces fit together; the paper's assumptions are
    /// checked by [`Ladder::validate`].
    pub fn new(m: i32, n: i32, upper: Vec<Cell>, lower: Vec<Cell>, t: Vec<u32>) -> Result<Self> {
        if m < 1 || n < 1 {
            return Err(Error::InvalidLadder(format!("ambient matrix {m}x{n} is empty")));
        }
        if upper.is_empty() || lower.is_empty() {
            return Err(Error::InvalidLadder("a ladder needs at least one upper and one lower corner".into()));
        }
        if t.len() != lower.len() {
            return Err(Error::InvalidLadder(format!(
                "{} minor sizes for {} lower corners",
                t.len(),
                lower.len()
            )));
        }
        if t.iter().any(|&s| s == 0) {
            return Err(Error::InvalidLadder("minor sizes must be positive".into()));
        }
        Ok(Ladder { m, n, upper, lower, t })
    }

    /// The full `m x n` matrix with a single minor size.
    pub fn matrix(m: i32, n: i32, t: u32) -> Self {
        Ladder::new(m, n, vec![Cell::new(1, n)], vec![Cell::new(m, 1)], vec![t]).expect("matrix ladder")
    }

    pub fn k(&self) -> usize {
        self.lower.len()
    }

    pub fn h(&self) -> usize {
        self.upper.len()
    }

    pub fn in_bounds(&self, c: Cell) -> bool {
        (1..=self.m).contains(&c.row) && (1..=self.n).contains(&c.col)
    }

    /// South-west of some upper corner.
    pub fn under_upper(&self, c: Cell) -> bool {
        self.upper.iter().any(|u| u.row <= c.row && c.col <= u.col)
    }

    /// North-east of lower corner `j` (0-based).
    pub fn above_lower(&self, j: usize, c: Cell) -> bool {
        let l = self.lower[j];
        c.row <= l.row && c.col >= l.col
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.in_bounds(c) && self.under_upper(c) && (0..self.k()).any(|j| self.above_lower(j, c))
    }

    /// Membership in the one-sided subladder `L_j` (0-based `j`).
    pub fn in_subladder(&self, j: usize, c: Cell) -> bool {
        self.in_bounds(c) && self.under_upper(c) && self.above_lower(j, c)
    }

    pub fn cells(&self) -> BTreeSet<Cell> {
        self.all_positions().filter(|&c| self.contains(c)).collect()
    }

    pub fn subladder_cells(&self, j: usize) -> BTreeSet<Cell> {
        self.all_positions().filter(|&c| self.in_subladder(j, c)).collect()
    }

    pub fn len(&self) -> usize {
        self.cells().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn all_positions(&self) -> impl Iterator<Item = Cell> {
        let (m, n) = (self.m, self.n);
        (1..=m).flat_map(move |r| (1..=n).map(move |c| Cell::new(r, c)))
    }

    /// The one-sided ladder `L_j` (0-based `j`): lower corner `j` and the
    /// upper corners that lie inside it.
    pub fn subladder(&self, j: usize) -> Result<Ladder> {
        if j >= self.k() {
            return Err(Error::IndexOutOfRange { index: j + 1, len: self.k() });
        }
        let upper: Vec<Cell> = self.upper.iter().copied().filter(|&u| self.in_subladder(j, u)).collect();
        if upper.is_empty() {
            return Err(Error::Degenerate(format!("subladder L_{} is empty", j + 1)));
        }
        Ladder::new(self.m, self.n, upper, vec![self.lower[j]], vec![self.t[j]])
    }

    /// Drops upper corners that no longer lie in the ladder; the cell set is
    /// unchanged.
    pub fn tidy(mut self) -> Ladder {
        let keep: Vec<Cell> = self.upper.iter().copied().filter(|&u| self.contains(u)).collect();
        if !keep.is_empty() {
            self.upper = keep;
        }
        self
    }

    /// True when some `L_j` and `L_{j+1}` share no cell.
    pub fn disconnection(&self) -> Option<usize> {
        (0..self.k().saturating_sub(1)).find(|&j| {
            let a = self.subladder_cells(j);
            self.subladder_cells(j + 1).is_disjoint(&a)
        })
    }

    /// Whether `c` lies in some `t_j`-minor of `L_j`. A submatrix lies in
    /// `L_j` iff its rows are `<= d_j`, its columns `>= c_j` and its
    /// north-east entry is under an upper corner.
    pub(crate) fn cell_in_some_minor(&self, j: usize, c: Cell) -> bool {
        if !self.in_subladder(j, c) {
            return false;
        }
        let t = self.t[j] as i32;
        let l = self.lower[j];
        let top = c.row.min(l.row - t + 1);
        let right = c.col.max(l.col + t - 1);
        top >= 1 && right <= self.n && self.under_upper(Cell::new(top, right))
    }

    pub(crate) fn has_minor(&self, j: usize) -> bool {
        let t = self.t[j] as i32;
        let l = self.lower[j];
        let ne = Cell::new(l.row - t + 1, l.col + t - 1);
        l.row <= self.m && l.col >= 1 && ne.row >= 1 && ne.col <= self.n && self.under_upper(ne)
    }

    /// Reflection in the anti-diagonal, `(r, c) -> (n + 1 - c, m + 1 - r)`.
    /// Minors map to minors (up to sign), lower corners stay lower corners,
    /// and the corner order reverses.
    pub fn antitranspose(&self) -> Ladder {
        let f = |c: &Cell| Cell::new(self.n + 1 - c.col, self.m + 1 - c.row);
        Ladder {
            m: self.n,
            n: self.m,
            upper: self.upper.iter().rev().map(f).collect(),
            lower: self.lower.iter().rev().map(f).collect(),
            t: self.t.iter().rev().copied().collect(),
        }
    }

    /// Translates the ladder into the smallest submatrix containing it.
    pub fn normalize(&self) -> Result<Ladder> {
        let cells = self.cells();
        if cells.is_empty() {
            return Err(Error::Degenerate("empty ladder".into()));
        }
        let r0 = cells.iter().map(|c| c.row).min().unwrap();
        let r1 = cells.iter().map(|c| c.row).max().unwrap();
        let c0 = cells.iter().map(|c| c.col).min().unwrap();
        let c1 = cells.iter().map(|c| c.col).max().unwrap();
        let shift = |c: &Cell| Cell::new(c.row - r0 + 1, c.col - c0 + 1);
        let out = Ladder {
            m: r1 - r0 + 1,
            n: c1 - c0 + 1,
            upper: self.upper.iter().filter(|&&u| self.contains(u)).map(shift).collect(),
            lower: self.lower.iter().map(shift).collect(),
            t: self.t.clone(),
        };
        debug_assert_eq!(out.cells().len(), cells.len());
        Ok(out)
    }

    /// Smallest index with `t >= 2`.
    pub fn first_nonlinear(&self) -> Option<usize> {
        self.t.iter().position(|&s| s >= 2)
    }

    pub fn is_linear(&self) -> bool {
        self.t.iter().all(|&s| s == 1)
    }
}

/// Upper outside corners of a ladder-shaped cell set: cells with no other
/// cell weakly north-east of them, sorted by row.
pub fn upper_corners_of(cells: &BTreeSet<Cell>) -> Vec<Cell> {
    let mut out: Vec<Cell> = cells
        .iter()
        .copied()
        .filter(|&x| !cells.iter().any(|&y| y != x && y.row <= x.row && y.col >= x.col))
        .collect();
    out.sort();
    out
}

/// Lower outside corners of a ladder-shaped cell set: cells with no other
/// cell weakly south-west of them, sorted by row.
pub fn lower_corners_of(cells: &BTreeSet<Cell>) -> Vec<Cell> {
    let mut out: Vec<Cell> = cells
        .iter()
        .copied()
        .filter(|&x| !cells.iter().any(|&y| y != x && y.row >= x.row && y.col <= x.col))
        .collect();
    out.sort();
    out
}

/// The ladder closure property: whenever the upper-right and lower-left
/// corners of a rectangle are in the set, so is the whole rectangle.
pub fn is_ladder_closed(cells: &BTreeSet<Cell>) -> bool {
    for &p in cells {
        for &q in cells {
            if p.row <= q.row && p.col >= q.col {
                for r in p.row..=q.row {
                    for c in q.col..=p.col {
                        if !cells.contains(&Cell::new(r, c)) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}
