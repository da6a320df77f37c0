//! Heights, Hilbert series and the Cohen-Macaulay test.
//!
//! Four independent routes to the height of a ladder determinantal ideal:
//! the cell count of the shifted ladder `L'`, the cell count of `L \ B`, a
//! count along anti-diagonals, and a minimum vertex cover of the squarefree
//! initial ideal.

mod cover;
mod hilbert;
mod reisner;

use crate::cell::Cell;
use crate::error::Result;
use crate::exactpoly::{PrimeField, Variable};
use crate::groebner::{buchberger, MonomialIdeal};
use crate::idealgen::generator_polynomials;
use crate::ladder::Ladder;

pub use cover::{min_vertex_cover, DEFAULT_COVER_CAP};
pub use hilbert::{hilbert_series, HilbertData};
pub use reisner::{reisner_cm_check, ReisnerReport, DEFAULT_REISNER_CAP};

pub fn height_lprime(ladder: &Ladder) -> usize {
    ladder.derived_lprime().len()
}

pub fn height_b(ladder: &Ladder) -> usize {
    ladder.len() - ladder.derived_b().len()
}

/// On the anti-diagonal `r + c - 1 = u`, the cells of `L_j` form an initial
/// run from the north-east end, so an anti-diagonal of length `s` in `L_j`
/// meets `s - t_j + 1` of the cells of `L'`. The height sums the largest such
/// count over `j`.
pub fn height_antidiagonal(ladder: &Ladder) -> usize {
    let mut total = 0;
    for u in 1..ladder.m + ladder.n {
        let best = (0..ladder.k())
            .map(|j| {
                let on = (1..=ladder.m)
                    .map(|r| Cell::new(r, u + 1 - r))
                    .filter(|&c| ladder.in_subladder(j, c))
                    .count() as i64;
                (on - ladder.t[j] as i64 + 1).max(0)
            })
            .max()
            .unwrap_or(0);
        total += best as usize;
    }
    total
}

/// The polynomial ring of a ladder has one variable per cell.
pub fn ring_variables(ladder: &Ladder) -> Vec<Variable> {
    ladder.cells().into_iter().map(Variable).collect()
}

/// Initial ideal of `I_t(L)` from a Buchberger run, independent of the
/// predicted anti-diagonal basis.
pub fn ladder_initial_ideal(ladder: &Ladder, field: PrimeField, budget: u64) -> Result<MonomialIdeal> {
    let gens = generator_polynomials(ladder, field)?;
    Ok(buchberger(&gens, budget)?.initial_ideal())
}

pub fn ladder_hilbert(ladder: &Ladder, field: PrimeField, budget: u64) -> Result<HilbertData> {
    let init = ladder_initial_ideal(ladder, field, budget)?;
    Ok(hilbert_series(&init, ladder.len()))
}

pub fn height_vertex_cover(ladder: &Ladder, field: PrimeField, budget: u64, cap: usize) -> Result<usize> {
    min_vertex_cover(&ladder_initial_ideal(ladder, field, budget)?, cap)
}
