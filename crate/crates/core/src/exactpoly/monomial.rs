use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cell::Cell;

/// A matrix entry viewed as a polynomial variable.
///
/// Variables are ordered so that a higher row is larger, and within a row a
/// larger column is larger: `x(d,c) < x(b,a)` iff `b < d`, or `b == d` and
/// `a > c`. Under the induced lexicographic order the leading term of a
/// minor is the product of its anti-diagonal entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Variable(pub Cell);

impl Variable {
    pub fn new(row: i32, col: i32) -> Self {
        Variable(Cell::new(row, col))
    }

    pub fn cell(&self) -> Cell {
        self.0
    }
}

/// Compares two variables in the skew-diagonal order.
pub fn compare_vars(u: Variable, v: Variable) -> Ordering {
    v.0.row.cmp(&u.0.row).then(u.0.col.cmp(&v.0.col))
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_vars(*self, *other)
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A monomial stored as `(variable, exponent)` pairs, largest variable first,
/// exponents strictly positive. The empty list is the unit monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Monomial {
    factors: Vec<(Variable, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Self {
        Monomial { factors: vec![(v, 1)] }
    }

    /// Builds a monomial from arbitrary factors; repeated variables are
    /// merged and zero exponents dropped.
    pub fn from_factors<I: IntoIterator<Item = (Variable, u32)>>(it: I) -> Self {
        let mut factors: Vec<(Variable, u32)> = it.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_by(|a, b| b.0.cmp(&a.0));
        let mut merged: Vec<(Variable, u32)> = Vec::with_capacity(factors.len());
        for (v, e) in factors {
            match merged.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => merged.push((v, e)),
            }
        }
        Monomial { factors: merged }
    }

    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        Self::from_factors(cells.into_iter().map(|c| (Variable(c), 1)))
    }

    pub fn factors(&self) -> &[(Variable, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.factors.iter().find(|&&(w, _)| w == v).map_or(0, |&(_, e)| e)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.factors.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.merge(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        self.merge(other, u32::max)
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            match self.factors[i].0.cmp(&other.factors[j].0) {
                Ordering::Equal => return false,
                Ordering::Greater => i += 1,
                Ordering::Less => j += 1,
            }
        }
        true
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        for &(v, e) in &self.factors {
            loop {
                if j == other.factors.len() {
                    return false;
                }
                match other.factors[j].0.cmp(&v) {
                    Ordering::Greater => j += 1,
                    Ordering::Equal => {
                        if other.factors[j].1 < e {
                            return false;
                        }
                        j += 1;
                        break;
                    }
                    Ordering::Less => return false,
                }
            }
        }
        true
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut out = Vec::with_capacity(self.factors.len());
        let mut j = 0;
        for &(v, e) in &self.factors {
            if j < other.factors.len() && other.factors[j].0 == v {
                let rest = e - other.factors[j].1;
                if rest > 0 {
                    out.push((v, rest));
                }
                j += 1;
            } else {
                out.push((v, e));
            }
        }
        Some(Monomial { factors: out })
    }

    fn merge(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        let (a, b) = (&self.factors, &other.factors);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, f(a[i].1, b[j].1)));
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial { factors: out }
    }
}

/// Lexicographic comparison induced by [`compare_vars`]: the exponents of the
/// largest variable in which the monomials differ decide.
pub fn compare_monomials(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.factors.iter().zip(&b.factors) {
        match x.0.cmp(&y.0) {
            // `a` carries a larger variable that `b` lacks at this position
            Ordering::Greater => return Ordering::Greater,
            Ordering::Less => return Ordering::Less,
            Ordering::Equal => match x.1.cmp(&y.1) {
                Ordering::Equal => {}
                o => return o,
            },
        }
    }
    a.factors.len().cmp(&b.factors.len())
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_monomials(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
