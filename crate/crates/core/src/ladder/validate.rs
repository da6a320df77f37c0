use serde::Serialize;

use super::Ladder;
use crate::cell::Cell;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", content = "detail", rename_all = "lowercase")]
pub enum Violation {
    /// Corner orderings, bounds and minor sizes.
    Structure(String),
    /// Distinct lower corners; no two upper corners share a row or column.
    Corners(String),
    /// Every cell lies in a `t_j`-minor of some `L_j`, and every `L_j`
    /// contains a `t_j`-minor.
    Nondeg(String),
    /// `d_{j+1} - d_j > t_{j+1} - t_j` and `c_{j+1} - c_j > t_j - t_{j+1}`.
    Assumpt(String),
}

impl Violation {
    pub fn clause(&self) -> &'static str {
        match self {
            Violation::Structure(_) => "structure",
            Violation::Corners(_) => "corners",
            Violation::Nondeg(_) => "nondeg",
            Violation::Assumpt(_) => "assumpt",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, clause: &str) -> bool {
        self.violations.iter().any(|v| v.clause() == clause)
    }
}

impl Ladder {
    pub fn validate(&self) -> ValidationReport {
        let mut v = Vec::new();
        self.check_structure(&mut v);
        self.check_corners(&mut v);
        if !v.iter().any(|x| matches!(x, Violation::Structure(_))) {
            self.check_nondeg(&mut v);
        }
        self.check_assumpt(&mut v);
        ValidationReport { violations: v }
    }

    fn check_structure(&self, v: &mut Vec<Violation>) {
        if self.t.len() != self.lower.len() {
            v.push(Violation::Structure(format!("{} minor sizes for {} lower corners", self.t.len(), self.lower.len())));
        }
        if self.t.iter().any(|&s| s == 0) {
            v.push(Violation::Structure("minor sizes must be positive".into()));
        }
        if self.upper.is_empty() || self.lower.is_empty() {
            v.push(Violation::Structure("missing corners".into()));
        }
        for (name, list) in [("upper", &self.upper), ("lower", &self.lower)] {
            for x in list.iter().filter(|&&x| !self.in_bounds(x)) {
                v.push(Violation::Structure(format!("{name} corner {x} outside the {}x{} matrix", self.m, self.n)));
            }
        }
        for w in self.upper.windows(2) {
            if w[1].row < w[0].row || w[1].col < w[0].col {
                v.push(Violation::Structure(format!("upper corners {} and {} out of order", w[0], w[1])));
            }
        }
        for w in self.lower.windows(2) {
            if w[1].row < w[0].row || w[1].col < w[0].col {
                v.push(Violation::Structure(format!("lower corners {} and {} out of order", w[0], w[1])));
            }
        }
    }

    fn check_corners(&self, v: &mut Vec<Violation>) {
        for w in self.lower.windows(2) {
            if w[0] == w[1] {
                v.push(Violation::Corners(format!("lower corner {} repeated", w[0])));
            }
        }
        for w in self.upper.windows(2) {
            if w[0].row == w[1].row || w[0].col == w[1].col {
                v.push(Violation::Corners(format!("upper corners {} and {} share a line", w[0], w[1])));
            }
        }
        for &u in &self.upper {
            if self.in_bounds(u) && !self.contains(u) {
                v.push(Violation::Corners(format!("upper corner {u} is not in the ladder")));
            }
        }
    }

    fn check_nondeg(&self, v: &mut Vec<Violation>) {
        for j in 0..self.k() {
            if !self.has_minor(j) {
                v.push(Violation::Nondeg(format!(
                    "L_{} contains no {}-minor",
                    j + 1,
                    self.t[j]
                )));
            }
        }
        let stray: Vec<Cell> = self
            .cells()
            .into_iter()
            .filter(|&x| !(0..self.k()).any(|j| self.cell_in_some_minor(j, x)))
            .collect();
        if !stray.is_empty() {
            let list: Vec<String> = stray.iter().map(|x| x.to_string()).collect();
            v.push(Violation::Nondeg(format!("cells in no minor: {}", list.join(" "))));
        }
    }

    fn check_assumpt(&self, v: &mut Vec<Violation>) {
        let k = self.k().min(self.t.len());
        for j in 0..k.saturating_sub(1) {
            let (a, b) = (self.lower[j], self.lower[j + 1]);
            let (ta, tb) = (self.t[j] as i32, self.t[j + 1] as i32);
            if b.row - a.row <= tb - ta {
                v.push(Violation::Assumpt(format!(
                    "rows: d_{} - d_{} = {} is not > t_{} - t_{} = {}",
                    j + 2,
                    j + 1,
                    b.row - a.row,
                    j + 2,
                    j + 1,
                    tb - ta
                )));
            }
            if b.col - a.col <= ta - tb {
                v.push(Violation::Assumpt(format!(
                    "cols: c_{} - c_{} = {} is not > t_{} - t_{} = {}",
                    j + 2,
                    j + 1,
                    b.col - a.col,
                    j + 1,
                    j + 2,
                    ta - tb
                )));
            }
        }
    }
}
