//! A fixed collection of small ladders exercising every code path: full
//! matrices, one-sided and two-sided ladders, mixed minor sizes, a
//! disconnected ladder, and ladders breaking exactly one Gorenstein
//! condition.

use crate::cell::Cell;
use crate::ladder::Ladder;

#[derive(Clone, Debug)]
pub struct SuiteCase {
    pub name: &'static str,
    pub ladder: Ladder,
}

fn ladder(m: i32, n: i32, upper: &[(i32, i32)], lower: &[(i32, i32)], t: &[u32]) -> Ladder {
    let cells = |v: &[(i32, i32)]| v.iter().map(|&p| Cell::from(p)).collect();
    Ladder::new(m, n, cells(upper), cells(lower), t.to_vec()).expect("suite ladder")
}

pub fn suite() -> Vec<SuiteCase> {
    let mut out = Vec::new();
    for (m, n, ts) in [(2, 2, 1..=2), (2, 3, 1..=2), (3, 3, 1..=3), (3, 4, 1..=3), (4, 4, 2..=3)] {
        for t in ts {
            let name: &'static str = Box::leak(format!("matrix-{m}x{n}-t{t}").into_boxed_str());
            out.push(SuiteCase { name, ladder: Ladder::matrix(m, n, t) });
        }
    }
    let mut push = |name: &'static str, l: Ladder| out.push(SuiteCase { name, ladder: l });
    push("one-sided-3x3-t2", ladder(3, 3, &[(1, 2), (2, 3)], &[(3, 1)], &[2]));
    push("one-sided-4x4-t2-upper-off-diagonal", ladder(4, 4, &[(1, 3), (2, 4)], &[(4, 1)], &[2]));
    push("one-sided-4x4-t2-lower", ladder(4, 4, &[(1, 4)], &[(3, 1), (4, 2)], &[2, 2]));
    push("two-corner-3x3-t22", ladder(3, 3, &[(1, 3)], &[(2, 1), (3, 2)], &[2, 2]));
    push("two-corner-4x4-t21", ladder(4, 4, &[(1, 4)], &[(2, 1), (4, 3)], &[2, 1]));
    push("mixed-4x4-t12", ladder(4, 4, &[(1, 4)], &[(2, 1), (4, 2)], &[1, 2]));
    push("two-sided-4x4-t22", ladder(4, 4, &[(1, 3), (2, 4)], &[(3, 1), (4, 2)], &[2, 2]));
    push("disconnected-4x4-t22", ladder(4, 4, &[(1, 2), (3, 4)], &[(2, 1), (4, 3)], &[2, 2]));
    push("two-sided-4x5-t23", ladder(4, 5, &[(1, 4), (2, 5)], &[(2, 1), (4, 2)], &[2, 3]));
    push("two-sided-5x5-t32", ladder(5, 5, &[(1, 4), (2, 5)], &[(3, 1), (5, 3)], &[3, 2]));
    out
}

pub fn by_name(name: &str) -> Option<Ladder> {
    suite().into_iter().find(|c| c.name == name).map(|c| c.ladder)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_case_is_valid_and_named_uniquely() {
        let s = suite();
        assert!(s.len() >= 12);
        let mut names: Vec<&str> = s.iter().map(|c| c.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), s.len());
        for c in &s {
            assert!(c.ladder.validate().is_ok(), "{}: {:?}", c.name, c.ladder.validate());
        }
    }
}
