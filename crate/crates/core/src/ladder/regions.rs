use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::Ladder;
use crate::cell::Cell;

/// Cells lying in exactly the subladders `L_i, ..., L_j` (0-based, inclusive).
/// `t` is the smallest minor size among those subladders, or 1 when the
/// region is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Region {
    pub i: usize,
    pub j: usize,
    pub cells: BTreeSet<Cell>,
    pub t: u32,
}

impl Ladder {
    /// The interval of subladders containing `c`, if any.
    pub fn region_of(&self, c: Cell) -> Option<(usize, usize)> {
        if !self.in_bounds(c) || !self.under_upper(c) {
            return None;
        }
        let hits: Vec<usize> = (0..self.k()).filter(|&j| self.above_lower(j, c)).collect();
        Some((*hits.first()?, *hits.last()?))
    }

    /// All `k(k+1)/2` regions, including empty ones.
    pub fn regions(&self) -> Vec<Region> {
        let mut by: BTreeMap<(usize, usize), BTreeSet<Cell>> = BTreeMap::new();
        for c in self.cells() {
            let key = self.region_of(c).expect("ladder cell has a region");
            by.entry(key).or_default().insert(c);
        }
        let mut out = Vec::new();
        for i in 0..self.k() {
            for j in i..self.k() {
                let cells = by.remove(&(i, j)).unwrap_or_default();
                let t = if cells.is_empty() { 1 } else { self.t[i..=j].iter().copied().min().unwrap() };
                out.push(Region { i, j, cells, t });
            }
        }
        out
    }

    /// Minor size attached to the region of each cell.
    pub(crate) fn region_t(&self, c: Cell) -> Option<u32> {
        let (i, j) = self.region_of(c)?;
        self.t[i..=j].iter().copied().min()
    }
}
