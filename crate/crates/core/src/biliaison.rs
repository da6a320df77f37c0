//! Elementary biliaison steps from a ladder down to a linear ideal.
//!
//! One step picks a corner `i` with `t_i >= 2` and builds
//! - the middle ladder `M`: corner `i` moved one step north-east, `t_i - 1`;
//! - the pivot ladder `N`: `L` without the cell at corner `i`, whose corner
//!   splits in two, `t_i` repeated.
//!
//! `I_t(L)` and `I_{t'}(M)` both contain `I_tau(N)`, with heights `c`, `c`,
//! `c - 1`. The step is certified by those heights, the containments, and
//! the cross-multiplication identity between the minors through the corner
//! cell and the minors obtained by deleting its row and column.

use serde::Serialize;

use crate::cell::Cell;
use crate::dimension::height_lprime;
use crate::error::{Error, Result};
use crate::exactpoly::{minor_determinant, Polynomial, PrimeField};
use crate::groebner::{ladder_basis, reduce, BasisSource};
use crate::idealgen::{generator_polynomials, subsets};
use crate::ladder::Ladder;

#[derive(Clone, Copy, Debug)]
pub struct StepOptions {
    pub field: PrimeField,
    pub budget: u64,
    pub verify: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "state", content = "reason", rename_all = "snake_case")]
pub enum StepStatus {
    Verified,
    Failed(String),
    /// A Gröbner basis did not fit the budget.
    Unverified(String),
    NotRequested,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeightCheck {
    pub before: usize,
    pub middle: usize,
    pub pivot: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentCheck {
    pub pivot_generators: usize,
    pub in_before: bool,
    pub in_middle: bool,
    pub basis_sources: [BasisSource; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioCheck {
    pub tuples: usize,
    pub nonzero_tuples: usize,
    pub pairs: usize,
    pub paired_vanishing: bool,
    pub identity: bool,
    pub failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StepChecks {
    pub status: StepStatus,
    pub heights: HeightCheck,
    pub containment: Option<ContainmentCheck>,
    pub ratio: Option<RatioCheck>,
    /// Violated clauses of the middle and pivot ladders after pruning;
    /// informational, the pivot may carry no minor at all.
    pub middle_violations: Vec<String>,
    pub pivot_violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiliaisonStep {
    pub before: Ladder,
    /// 0-based corner index actually used.
    pub i_used: usize,
    pub middle: Ladder,
    pub pivot: Ladder,
    pub checks: StepChecks,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BiliaisonChain {
    pub initial: Ladder,
    pub steps: Vec<BiliaisonStep>,
    pub terminal: Ladder,
    pub expected_length: usize,
    pub length_ok: bool,
    /// The terminal ladder's cells are exactly those of `L'` of the initial
    /// ladder.
    pub terminal_ok: bool,
    /// Every step verified.
    pub verified: bool,
}

pub fn build_step(ladder: &Ladder, opts: StepOptions) -> Result<BiliaisonStep> {
    let start = ladder.first_nonlinear().ok_or(Error::AlreadyLinear)?;
    let (middle, i_used) = ladder.derived_m(start)?;
    let pivot = ladder.derived_n(i_used)?;
    let mut step = BiliaisonStep {
        before: ladder.clone(),
        i_used,
        middle,
        pivot,
        checks: StepChecks {
            status: StepStatus::NotRequested,
            heights: HeightCheck { before: 0, middle: 0, pivot: 0, ok: false },
            containment: None,
            ratio: None,
            middle_violations: vec![],
            pivot_violations: vec![],
        },
    };
    step.checks = verify_step(&step, opts);
    Ok(step)
}

fn violations_after_prune(l: &Ladder) -> Vec<String> {
    match l.prune() {
        Ok(p) => p.validate().violations.iter().map(|v| format!("{}: {}", v.clause(), detail(v))).collect(),
        Err(e) => vec![format!("prune: {e}")],
    }
}

fn detail(v: &crate::ladder::Violation) -> &str {
    use crate::ladder::Violation::*;
    match v {
        Structure(s) | Corners(s) | Nondeg(s) | Assumpt(s) => s,
    }
}

/// Heights are always checked; containments and the identity only when
/// `opts.verify` is set.
pub fn verify_step(step: &BiliaisonStep, opts: StepOptions) -> StepChecks {
    let c = height_lprime(&step.before);
    let heights = HeightCheck {
        before: c,
        middle: height_lprime(&step.middle),
        pivot: height_lprime(&step.pivot),
        ok: false,
    };
    let heights = HeightCheck { ok: heights.middle == c && heights.pivot + 1 == c, ..heights };
    let mut checks = StepChecks {
        status: StepStatus::NotRequested,
        heights,
        containment: None,
        ratio: None,
        middle_violations: violations_after_prune(&step.middle),
        pivot_violations: violations_after_prune(&step.pivot),
    };
    if !checks.heights.ok {
        checks.status = StepStatus::Failed("heights".into());
    }
    if !opts.verify {
        return checks;
    }
    match algebraic_checks(step, opts) {
        Ok((cont, ratio)) => {
            if matches!(checks.status, StepStatus::NotRequested) {
                checks.status = if !(cont.in_before && cont.in_middle) {
                    StepStatus::Failed("containment".into())
                } else if !(ratio.paired_vanishing && ratio.identity) {
                    StepStatus::Failed("ratio identity".into())
                } else {
                    StepStatus::Verified
                };
            }
            checks.containment = Some(cont);
            checks.ratio = Some(ratio);
        }
        Err(Error::BudgetExceeded(why)) => {
            if matches!(checks.status, StepStatus::NotRequested) {
                checks.status = StepStatus::Unverified(why);
            }
        }
        Err(e) => checks.status = StepStatus::Failed(e.to_string()),
    }
    checks
}

fn algebraic_checks(step: &BiliaisonStep, opts: StepOptions) -> Result<(ContainmentCheck, RatioCheck)> {
    let f = opts.field;
    let (gb_before, src_before) = ladder_basis(&step.before, f, opts.budget)?;
    let (gb_middle, src_middle) = ladder_basis(&step.middle, f, opts.budget)?;
    let (gb_pivot, src_pivot) = ladder_basis(&step.pivot, f, opts.budget)?;
    let pivot_gens = generator_polynomials(&step.pivot, f)?;
    let containment = ContainmentCheck {
        pivot_generators: pivot_gens.len(),
        in_before: pivot_gens.iter().all(|g| reduce(g, &gb_before).is_zero()),
        in_middle: pivot_gens.iter().all(|g| reduce(g, &gb_middle).is_zero()),
        basis_sources: [src_before, src_middle, src_pivot],
    };
    let ratio = ratio_identity(&step.before, step.i_used, f, &gb_pivot)?;
    Ok((containment, ratio))
}

/// For row sets `I` above the corner row `d` and column sets `J` right of
/// the corner column `c`, each of size `t - 1`, let `A(I, J)` be the minor
/// on rows `I + d`, columns `c + J` and `a(I, J)` the minor on `I`, `J`,
/// either taken as 0 when it leaves the ladder. Checks that `A` and `a`
/// vanish together and that `A(I, J) a(K, M) - A(K, M) a(I, J)` reduces to
/// zero modulo the pivot basis for every two tuples.
pub fn ratio_identity(ladder: &Ladder, i: usize, field: PrimeField, pivot_basis: &[Polynomial]) -> Result<RatioCheck> {
    let corner = ladder.lower[i];
    let (d, c) = (corner.row, corner.col);
    let s = ladder.t[i] as usize - 1;
    let rows: Vec<i32> = (1..d).collect();
    let cols: Vec<i32> = (c + 1..=ladder.n).collect();
    let inside = |rs: &[i32], cs: &[i32]| rs.iter().all(|&r| cs.iter().all(|&x| ladder.contains(Cell::new(r, x))));
    let mut tuples = 0;
    let mut paired_vanishing = true;
    let mut live: Vec<(Polynomial, Polynomial, String)> = Vec::new();
    for rs in subsets(&rows, s) {
        for cs in subsets(&cols, s) {
            tuples += 1;
            let big_rows: Vec<i32> = rs.iter().copied().chain([d]).collect();
            let big_cols: Vec<i32> = [c].into_iter().chain(cs.iter().copied()).collect();
            let big_in = inside(&big_rows, &big_cols);
            let small_in = inside(&rs, &cs);
            if big_in != small_in {
                paired_vanishing = false;
            }
            if big_in && small_in {
                let big = minor_determinant(field, &big_rows, &big_cols)?;
                let small = if s == 0 { Polynomial::constant(field, 1) } else { minor_determinant(field, &rs, &cs)? };
                live.push((big, small, format!("rows {rs:?} cols {cs:?}")));
            }
        }
    }
    let mut pairs = 0;
    let mut failure = None;
    'outer: for x in 0..live.len() {
        for y in x + 1..live.len() {
            pairs += 1;
            let lhs = live[x].0.mul(&live[y].1).sub(&live[y].0.mul(&live[x].1));
            let r = reduce(&lhs, pivot_basis);
            if !r.is_zero() {
                failure = Some(format!("{} vs {}: remainder {r}", live[x].2, live[y].2));
                break 'outer;
            }
        }
    }
    Ok(RatioCheck {
        tuples,
        nonzero_tuples: live.len(),
        pairs,
        paired_vanishing,
        identity: failure.is_none(),
        failure,
    })
}

/// Repeats [`build_step`] until every minor size is 1.
pub fn build_chain(ladder: &Ladder, opts: StepOptions) -> Result<BiliaisonChain> {
    let expected_length: usize = ladder.t.iter().map(|&s| s as usize - 1).sum();
    let mut steps = Vec::new();
    let mut cur = ladder.clone();
    while !cur.is_linear() {
        if steps.len() > expected_length {
            break;
        }
        let step = build_step(&cur, opts)?;
        cur = step.middle.clone();
        steps.push(step);
    }
    let terminal_ok = cur.cells() == ladder.derived_lprime().cells();
    let verified = steps.iter().all(|s| s.checks.status == StepStatus::Verified);
    Ok(BiliaisonChain {
        initial: ladder.clone(),
        length_ok: steps.len() == expected_length,
        steps,
        terminal: cur,
        expected_length,
        terminal_ok,
        verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::DEFAULT_PRIME;
    use crate::groebner::DEFAULT_BUDGET;

    fn opts() -> StepOptions {
        StepOptions { field: PrimeField::new(DEFAULT_PRIME).unwrap(), budget: DEFAULT_BUDGET, verify: true }
    }

    #[test]
    fn two_by_two_step() {
        let step = build_step(&Ladder::matrix(2, 2, 2), opts()).unwrap();
        assert_eq!(step.i_used, 0);
        assert_eq!(step.middle.cells().into_iter().collect::<Vec<_>>(), vec![Cell::new(1, 2)]);
        assert_eq!(step.pivot.t, vec![2, 2]);
        let ch = &step.checks;
        assert_eq!((ch.heights.before, ch.heights.middle, ch.heights.pivot), (1, 1, 0));
        assert_eq!(ch.containment.as_ref().unwrap().pivot_generators, 0);
        assert_eq!(ch.status, StepStatus::Verified);
    }

    #[test]
    fn three_by_three_step() {
        let step = build_step(&Ladder::matrix(3, 3, 2), opts()).unwrap();
        let ch = &step.checks;
        assert_eq!((ch.heights.before, ch.heights.middle, ch.heights.pivot), (4, 4, 3));
        let r = ch.ratio.as_ref().unwrap();
        assert_eq!(r.tuples, 4);
        assert_eq!(r.pairs, 6);
        assert_eq!(ch.status, StepStatus::Verified, "{ch:?}");
    }

    #[test]
    fn linear_ladder_has_no_step() {
        let l = Ladder::new(3, 3, vec![Cell::new(1, 3)], vec![Cell::new(2, 1), Cell::new(3, 2)], vec![1, 1]).unwrap();
        assert_eq!(build_step(&l, opts()), Err(Error::AlreadyLinear));
        let chain = build_chain(&l, opts()).unwrap();
        assert!(chain.steps.is_empty());
        assert_eq!(chain.terminal, l);
        assert!(chain.terminal_ok && chain.length_ok && chain.verified);
    }

    #[test]
    fn chains_reach_lprime() {
        let ladders = [
            Ladder::matrix(2, 2, 2),
            Ladder::matrix(3, 3, 3),
            Ladder::new(3, 3, vec![Cell::new(1, 3)], vec![Cell::new(2, 1), Cell::new(3, 2)], vec![2, 2]).unwrap(),
            Ladder::new(4, 4, vec![Cell::new(1, 4)], vec![Cell::new(2, 1), Cell::new(4, 2)], vec![1, 2]).unwrap(),
        ];
        for l in &ladders {
            let chain = build_chain(l, opts()).unwrap();
            assert!(chain.length_ok && chain.terminal_ok, "{l:?}");
            assert!(chain.verified, "{:?}", chain.steps.iter().map(|s| &s.checks.status).collect::<Vec<_>>());
        }
    }
}
