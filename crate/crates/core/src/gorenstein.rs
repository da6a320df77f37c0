//! Gorenstein classification by corner arithmetic, with an h-vector oracle.
//!
//! A ladder is first broken into pieces whose quotient rings tensor together
//! to the original one (up to a regular sequence of linear forms), so the
//! ring is Gorenstein iff every piece is. Pieces whose ideal is generated by
//! variables are polynomial rings. The remaining pieces satisfy the
//! criterion's standing hypotheses and are tested numerically.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::cell::Cell;
use crate::dimension::ladder_hilbert;
use crate::error::{Error, Result};
use crate::exactpoly::PrimeField;
use crate::ladder::{upper_corners_of, Ladder};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub ladder: Ladder,
    /// All minor sizes are 1, or no minor survives: the quotient is a
    /// polynomial ring.
    pub linear: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    pub ladder: Ladder,
    pub linear: bool,
    /// 1-based, as in the corner arithmetic.
    pub j_set: Vec<usize>,
    pub h_set: Vec<usize>,
    pub u_list: Vec<usize>,
    pub square: bool,
    pub inside_lower: bool,
    pub inside_upper: bool,
    /// The inside-lower test with `t_1` in place of `t_{u_1}`.
    pub inside_lower_t1_reading: bool,
    pub verdict: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GorensteinReport {
    pub components: Vec<ComponentReport>,
    pub verdict: bool,
    pub oracle_verdict: Option<bool>,
    pub h_vector: Option<Vec<i64>>,
}

impl GorensteinReport {
    pub fn agrees(&self) -> Option<bool> {
        self.oracle_verdict.map(|o| o == self.verdict)
    }
}

/// Splits `ladder` until every piece is connected, admits no split at an
/// upper/lower corner pair, and has all minor sizes at least 2; linear
/// pieces are kept and flagged.
pub fn reduce_components(ladder: &Ladder) -> Result<Vec<Component>> {
    let mut work = vec![ladder.clone()];
    let mut out = Vec::new();
    let mut guard = 0;
    while let Some(l) = work.pop() {
        guard += 1;
        if guard > 64 * (ladder.len() + 1) {
            return Err(Error::Degenerate("component reduction did not terminate".into()));
        }
        let Some(l) = tighten(&l)? else {
            out.push(Component { ladder: l, linear: true });
            continue;
        };
        if l.is_linear() {
            out.push(Component { ladder: l, linear: true });
            continue;
        }
        if l.t.iter().any(|&s| s == 1) {
            match drop_linear_subladders(&l)? {
                Some(rest) => work.push(rest),
                None => out.push(Component { ladder: l, linear: true }),
            }
            continue;
        }
        if let Some(j) = l.disconnection() {
            let (a, b) = split_disconnected(&l, j)?;
            work.push(b);
            work.push(a);
            continue;
        }
        if let Some((i, j)) = split_point(&l) {
            let (a, b) = split_at(&l, i, j);
            work.push(b);
            work.push(a);
            continue;
        }
        out.push(Component { ladder: l, linear: false });
    }
    Ok(out)
}

/// Drops cells in no minor, recomputes corners and moves to the bounding
/// box. `None` when no minor is left.
fn tighten(l: &Ladder) -> Result<Option<Ladder>> {
    match l.rebuild_from_minors() {
        Ok(r) => Ok(Some(r.normalize()?)),
        Err(Error::Degenerate(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Setting the variables of an `L_j` with `t_j = 1` to zero kills every
/// other minor meeting `L_j`, since such a minor has a whole row or column
/// inside `L_j`.
fn drop_linear_subladders(l: &Ladder) -> Result<Option<Ladder>> {
    let killed: BTreeSet<Cell> = (0..l.k()).filter(|&j| l.t[j] == 1).flat_map(|j| l.subladder_cells(j)).collect();
    let rest: BTreeSet<Cell> = l.cells().difference(&killed).copied().collect();
    let keep: Vec<usize> = (0..l.k()).filter(|&j| l.t[j] >= 2).collect();
    if rest.is_empty() || keep.is_empty() {
        return Ok(None);
    }
    let out = Ladder::new(
        l.m,
        l.n,
        upper_corners_of(&rest),
        keep.iter().map(|&j| l.lower[j]).collect(),
        keep.iter().map(|&j| l.t[j]).collect(),
    )?;
    debug_assert!(out.cells().is_subset(&rest));
    Ok(Some(out))
}

fn split_disconnected(l: &Ladder, j: usize) -> Result<(Ladder, Ladder)> {
    let part = |range: std::ops::Range<usize>| -> Result<Ladder> {
        let cells: BTreeSet<Cell> = range.clone().flat_map(|x| l.subladder_cells(x)).collect();
        Ladder::new(l.m, l.n, upper_corners_of(&cells), l.lower[range.clone()].to_vec(), l.t[range].to_vec())
    };
    Ok((part(0..j + 1)?, part(j + 1..l.k())?))
}

/// First `(i, j)` (0-based, pairing upper corners `i`, `i + 1` with lower
/// corners `j`, `j + 1`) with `b_{i+1} >= d_j - t_j + 2` and
/// `a_i <= c_{j+1} + t_{j+1} - 2`.
fn split_point(l: &Ladder) -> Option<(usize, usize)> {
    for i in 0..l.h().saturating_sub(1) {
        for j in 0..l.k().saturating_sub(1) {
            let (b_next, a_i) = (l.upper[i + 1].row, l.upper[i].col);
            let (d_j, t_j) = (l.lower[j].row, l.t[j] as i32);
            let (c_next, t_next) = (l.lower[j + 1].col, l.t[j + 1] as i32);
            if b_next >= d_j - t_j + 2 && a_i <= c_next + t_next - 2 {
                return Some((i, j));
            }
        }
    }
    None
}

/// The first piece lives in rows `1..=d_j`, columns `1..=a_i`; the second in
/// rows `b_{i+1}..=m`, columns `c_{j+1}..=n`, translated to start at (1, 1),
/// which gives the overlap fresh variables.
fn split_at(l: &Ladder, i: usize, j: usize) -> (Ladder, Ladder) {
    let first = Ladder {
        m: l.lower[j].row,
        n: l.upper[i].col,
        upper: l.upper[..=i].to_vec(),
        lower: l.lower[..=j].to_vec(),
        t: l.t[..=j].to_vec(),
    };
    let dr = l.upper[i + 1].row - 1;
    let dc = l.lower[j + 1].col - 1;
    let shift = |c: &Cell| Cell::new(c.row - dr, c.col - dc);
    let second = Ladder {
        m: l.m - dr,
        n: l.n - dc,
        upper: l.upper[i + 1..].iter().map(shift).collect(),
        lower: l.lower[j + 1..].iter().map(shift).collect(),
        t: l.t[j + 1..].to_vec(),
    };
    (first, second)
}

/// The numerical criterion on one reduced component.
pub fn component_report(c: &Component) -> ComponentReport {
    let l = &c.ladder;
    if c.linear {
        return ComponentReport {
            ladder: l.clone(),
            linear: true,
            j_set: vec![],
            h_set: vec![],
            u_list: vec![],
            square: true,
            inside_lower: true,
            inside_upper: true,
            inside_lower_t1_reading: true,
            verdict: true,
        };
    }
    let k = l.k();
    let t = |j: usize| l.t[j - 1] as i32;
    let d = |j: usize| l.lower[j - 1].row;
    let cc = |j: usize| l.lower[j - 1].col;
    let j_set: Vec<usize> = (1..k).filter(|&j| cc(j) + t(j) == cc(j + 1) + t(j + 1)).collect();
    let h_set: Vec<usize> = (1..k).filter(|&j| d(j) - t(j) == d(j + 1) - t(j + 1)).map(|j| j + 1).collect();
    let u_list: Vec<usize> = (1..=k).filter(|j| !j_set.contains(j) && !h_set.contains(j)).collect();
    let square = l.m - t(k) == l.n - t(1);
    let lower_test = |base: i32| {
        u_list.windows(2).all(|w| cc(w[1]) - d(w[0]) == 2 + base - t(w[0]) - t(w[1]))
    };
    let inside_lower = u_list.first().map_or(true, |&u1| lower_test(t(u1)));
    let inside_lower_t1_reading = lower_test(t(1));
    let inside_upper = l.upper.windows(2).all(|w| w[0].col - w[1].row == t(1) - 2);
    ComponentReport {
        ladder: l.clone(),
        linear: false,
        verdict: square && inside_lower && inside_upper,
        j_set,
        h_set,
        u_list,
        square,
        inside_lower,
        inside_upper,
        inside_lower_t1_reading,
    }
}

pub fn ag_criterion(ladder: &Ladder) -> Result<GorensteinReport> {
    let components: Vec<ComponentReport> = reduce_components(ladder)?.iter().map(component_report).collect();
    Ok(GorensteinReport {
        verdict: components.iter().all(|c| c.verdict),
        components,
        oracle_verdict: None,
        h_vector: None,
    })
}

/// Stanley: a graded Cohen-Macaulay domain is Gorenstein iff its h-vector is
/// a palindrome.
pub fn symmetry_oracle(ladder: &Ladder, field: PrimeField, budget: u64) -> Result<(bool, Vec<i64>)> {
    let h = ladder_hilbert(ladder, field, budget)?;
    Ok((h.is_palindromic(), h.h_vector))
}

pub fn gorenstein_with_oracle(ladder: &Ladder, field: PrimeField, budget: u64) -> Result<GorensteinReport> {
    let mut report = ag_criterion(ladder)?;
    let (ok, h) = symmetry_oracle(ladder, field, budget)?;
    report.oracle_verdict = Some(ok);
    report.h_vector = Some(h);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::DEFAULT_PRIME;
    use crate::groebner::DEFAULT_BUDGET;

    fn c(r: i32, col: i32) -> Cell {
        Cell::new(r, col)
    }

    fn f() -> PrimeField {
        PrimeField::new(DEFAULT_PRIME).unwrap()
    }

    fn both(l: &Ladder) -> (bool, bool) {
        let r = gorenstein_with_oracle(l, f(), DEFAULT_BUDGET).unwrap();
        (r.verdict, r.oracle_verdict.unwrap())
    }

    #[test]
    fn matrices() {
        assert_eq!(both(&Ladder::matrix(3, 3, 2)), (true, true));
        assert_eq!(both(&Ladder::matrix(2, 2, 2)), (true, true));
        assert_eq!(both(&Ladder::matrix(2, 3, 2)), (false, false));
        assert_eq!(both(&Ladder::matrix(3, 4, 3)), (false, false));
    }

    #[test]
    fn two_corner_example() {
        let l = Ladder::new(3, 3, vec![c(1, 3)], vec![c(2, 1), c(3, 2)], vec![2, 2]).unwrap();
        let r = ag_criterion(&l).unwrap();
        assert_eq!(r.components.len(), 1);
        let comp = &r.components[0];
        assert!(comp.j_set.is_empty() && comp.h_set.is_empty());
        assert_eq!(comp.u_list, vec![1, 2]);
        assert!(r.verdict);
        assert_eq!(both(&l), (true, true));
    }

    #[test]
    fn disconnected_blocks_split() {
        let l = Ladder::new(4, 4, vec![c(1, 2), c(3, 4)], vec![c(2, 1), c(4, 3)], vec![2, 2]).unwrap();
        let comps = reduce_components(&l).unwrap();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|x| !x.linear && x.ladder == Ladder::matrix(2, 2, 2)));
    }

    #[test]
    fn linear_pieces_are_gorenstein() {
        let l = Ladder::matrix(3, 4, 1);
        let r = ag_criterion(&l).unwrap();
        assert!(r.verdict);
        assert!(r.components.iter().all(|x| x.linear));
        assert_eq!(both(&l), (true, true));
    }

    #[test]
    fn single_condition_violations() {
        let upper_only = Ladder::new(4, 4, vec![c(1, 3), c(2, 4)], vec![c(4, 1)], vec![2]).unwrap();
        let r = ag_criterion(&upper_only).unwrap();
        assert_eq!(r.components.len(), 1);
        let x = &r.components[0];
        assert!(x.square && x.inside_lower && !x.inside_upper, "{x:?}");
        assert_eq!(both(&upper_only), (false, false));

        let lower_only = Ladder::new(4, 4, vec![c(1, 4)], vec![c(3, 1), c(4, 2)], vec![2, 2]).unwrap();
        let r = ag_criterion(&lower_only).unwrap();
        assert_eq!(r.components.len(), 1);
        let x = &r.components[0];
        assert!(x.square && !x.inside_lower && x.inside_upper, "{x:?}");
        assert_eq!(both(&lower_only), (false, false));
    }

    #[test]
    fn antitranspose_preserves_verdict() {
        let ladders = [
            Ladder::new(4, 4, vec![c(1, 3), c(2, 4)], vec![c(4, 1)], vec![2]).unwrap(),
            Ladder::new(4, 4, vec![c(1, 4)], vec![c(2, 1), c(4, 2)], vec![1, 2]).unwrap(),
            Ladder::new(3, 3, vec![c(1, 3)], vec![c(2, 1), c(3, 2)], vec![2, 2]).unwrap(),
        ];
        for l in &ladders {
            assert_eq!(ag_criterion(l).unwrap().verdict, ag_criterion(&l.antitranspose()).unwrap().verdict);
        }
    }
}
