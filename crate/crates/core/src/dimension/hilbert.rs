use std::collections::HashMap;

use serde::Serialize;

use crate::exactpoly::{Monomial, Variable};
use crate::groebner::MonomialIdeal;

/// Hilbert series of `S/I` for a monomial ideal `I` in a polynomial ring
/// with `nvars` variables, as `numerator / (1 - z)^nvars` and in reduced
/// form `h(z) / (1 - z)^dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub nvars: usize,
    pub numerator: Vec<i64>,
    pub dim: usize,
    pub codim: usize,
    pub h_vector: Vec<i64>,
    pub degree: i64,
}

impl HilbertData {
    pub fn is_palindromic(&self) -> bool {
        let h = &self.h_vector;
        h.iter().eq(h.iter().rev())
    }

    /// First `len` values of the Hilbert function.
    pub fn function(&self, len: usize) -> Vec<i64> {
        let mut series = vec![0i64; len];
        for (i, &c) in self.h_vector.iter().enumerate().take(len) {
            series[i] = c;
        }
        for _ in 0..self.dim {
            for i in 1..len {
                series[i] += series[i - 1];
            }
        }
        series
    }
}

pub fn hilbert_series(ideal: &MonomialIdeal, nvars: usize) -> HilbertData {
    let mut memo = HashMap::new();
    let numerator = trim(numerator(ideal.gens().to_vec(), &mut memo));
    let mut h = numerator.clone();
    let mut cancelled = 0;
    while cancelled < nvars && !h.is_empty() && h.iter().sum::<i64>() == 0 {
        h = divide_one_minus_z(&h);
        cancelled += 1;
    }
    let h = trim(h);
    HilbertData {
        nvars,
        numerator,
        dim: nvars - cancelled,
        codim: cancelled,
        degree: h.iter().sum(),
        h_vector: h,
    }
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

fn divide_one_minus_z(p: &[i64]) -> Vec<i64> {
    let mut q = Vec::with_capacity(p.len());
    let mut acc = 0;
    for &c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc);
    }
    q
}

fn add(a: &[i64], b: &[i64], shift: usize) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len() + shift)];
    for (i, &c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i + shift] += c;
    }
    out
}

fn mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn minimize(gens: Vec<Monomial>) -> Vec<Monomial> {
    MonomialIdeal::new(gens).gens().to_vec()
}

/// `N(I) = N(I + (x)) + z N(I : x)` for a pivot variable `x`, down to
/// pairwise coprime generators where `N = prod (1 - z^deg)`.
fn numerator(gens: Vec<Monomial>, memo: &mut HashMap<Vec<Monomial>, Vec<i64>>) -> Vec<i64> {
    if let Some(v) = memo.get(&gens) {
        return v.clone();
    }
    let coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.gcd_is_one(b)));
    let out = if coprime {
        gens.iter().fold(vec![1], |acc, g| {
            let mut f = vec![0; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            mul(&acc, &f)
        })
    } else {
        let pivot = pivot(&gens);
        let xm = Monomial::var(pivot);
        let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exponent(pivot) == 0).cloned().collect();
        plus.push(xm.clone());
        let colon: Vec<Monomial> = gens.iter().map(|g| g.div(&xm).unwrap_or_else(|| g.clone())).collect();
        let a = numerator(minimize(plus), memo);
        let b = numerator(minimize(colon), memo);
        add(&a, &b, 1)
    };
    memo.insert(gens, out.clone());
    out
}

fn pivot(gens: &[Monomial]) -> Variable {
    let mut count: HashMap<Variable, usize> = HashMap::new();
    for g in gens.iter().filter(|g| g.degree() > 1) {
        for v in g.variables() {
            *count.entry(v).or_default() += 1;
        }
    }
    count.into_iter().max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0))).map(|(v, _)| v).expect("non-coprime generators share a variable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell::Cell;

    fn m(v: &[(i32, i32)]) -> Monomial {
        Monomial::from_cells(v.iter().map(|&(r, c)| Cell::new(r, c)))
    }

    #[test]
    fn zero_ideal() {
        let h = hilbert_series(&MonomialIdeal::new(vec![]), 3);
        assert_eq!(h.dim, 3);
        assert_eq!(h.h_vector, vec![1]);
        assert_eq!(h.function(4), vec![1, 3, 6, 10]);
    }

    #[test]
    fn principal_quadric() {
        let h = hilbert_series(&MonomialIdeal::new(vec![m(&[(1, 2), (2, 1)])]), 4);
        assert_eq!(h.dim, 3);
        assert_eq!(h.h_vector, vec![1, 1]);
        assert_eq!(h.degree, 2);
        assert!(h.is_palindromic());
    }

    #[test]
    fn two_by_three_minors() {
        let i = MonomialIdeal::new(vec![m(&[(1, 2), (2, 1)]), m(&[(1, 3), (2, 1)]), m(&[(1, 3), (2, 2)])]);
        let h = hilbert_series(&i, 6);
        assert_eq!(h.codim, 2);
        assert_eq!(h.h_vector, vec![1, 2]);
        assert_eq!(h.function(3), vec![1, 6, 18]);
    }

    #[test]
    fn two_skew_lines() {
        let i = MonomialIdeal::new(vec![m(&[(1, 1), (1, 3)]), m(&[(1, 1), (1, 4)]), m(&[(1, 2), (1, 3)]), m(&[(1, 2), (1, 4)])]);
        let h = hilbert_series(&i, 4);
        assert_eq!(h.dim, 2);
        assert_eq!(h.h_vector, vec![1, 2, -1]);
    }
}
