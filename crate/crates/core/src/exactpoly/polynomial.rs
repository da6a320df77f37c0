use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::cell::Cell;
use crate::error::{Error, Result};

use super::field::{FieldElem, PrimeField};
use super::monomial::{Monomial, Variable};

/// Sparse polynomial over GF(p). Terms are kept strictly descending in the
/// skew-diagonal lex order, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: PrimeField,
    terms: Vec<(Monomial, FieldElem)>,
}

impl Polynomial {
    pub fn zero(field: PrimeField) -> Self {
        Polynomial { field, terms: Vec::new() }
    }

    pub fn constant(field: PrimeField, c: i64) -> Self {
        Self::term(field, Monomial::one(), field.elem(c))
    }

    pub fn var(field: PrimeField, v: Variable) -> Self {
        Self::term(field, Monomial::var(v), field.one())
    }

    pub fn term(field: PrimeField, m: Monomial, c: FieldElem) -> Self {
        if c.0 == 0 {
            Self::zero(field)
        } else {
            Polynomial { field, terms: vec![(m, c)] }
        }
    }

    /// Canonicalizes an arbitrary term list: like terms are summed and zero
    /// coefficients dropped.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, FieldElem)>>(field: PrimeField, it: I) -> Self {
        let mut acc: BTreeMap<Monomial, FieldElem> = BTreeMap::new();
        for (m, c) in it {
            let slot = acc.entry(m).or_insert(FieldElem(0));
            *slot = field.add(*slot, FieldElem(c.0 % field.modulus()));
        }
        let terms = acc.into_iter().rev().filter(|(_, c)| c.0 != 0).collect();
        Polynomial { field, terms }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn terms(&self) -> &[(Monomial, FieldElem)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Result<(&Monomial, FieldElem)> {
        self.terms.first().map(|(m, c)| (m, *c)).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, self.field.one())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.combine(other, self.field.neg(self.field.one()))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.field.neg(self.field.one()))
    }

    pub fn scale(&self, c: FieldElem) -> Polynomial {
        if c.0 == 0 {
            return Self::zero(self.field);
        }
        let f = self.field;
        Polynomial { field: f, terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(*a, c))).collect() }
    }

    /// Multiplication by a single term; order is preserved because the
    /// monomial order is multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: FieldElem) -> Polynomial {
        if c.0 == 0 {
            return Self::zero(self.field);
        }
        let f = self.field;
        Polynomial { field: f, terms: self.terms.iter().map(|(n, a)| (n.mul(m), f.mul(*a, c))).collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut acc = Self::zero(self.field);
        for (m, c) in &other.terms {
            acc = acc.add(&self.mul_term(m, *c));
        }
        acc
    }

    /// Scales so the leading coefficient is 1. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            Some((_, c)) => self.scale(self.field.inv(*c).expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    /// `self - c * m * g`, computed by a single merge.
    pub fn sub_scaled(&self, m: &Monomial, c: FieldElem, g: &Polynomial) -> Polynomial {
        let f = self.field;
        let negc = f.neg(c);
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut rhs = g.terms.iter().map(|(n, a)| (n.mul(m), f.mul(*a, negc))).peekable();
        let mut lhs = self.terms.iter().cloned().peekable();
        loop {
            let ord = match (lhs.peek(), rhs.peek()) {
                (Some(a), Some(b)) => a.0.cmp(&b.0),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => break,
            };
            match ord {
                Ordering::Greater => out.push(lhs.next().unwrap()),
                Ordering::Less => out.push(rhs.next().unwrap()),
                Ordering::Equal => {
                    let (mono, a) = lhs.next().unwrap();
                    let (_, b) = rhs.next().unwrap();
                    let s = f.add(a, b);
                    if s.0 != 0 {
                        out.push((mono, s));
                    }
                }
            }
        }
        Polynomial { field: f, terms: out }
    }

    /// Split into leading term and the rest.
    pub(crate) fn pop_leading(mut self) -> Option<((Monomial, FieldElem), Polynomial)> {
        if self.terms.is_empty() {
            return None;
        }
        let lt = self.terms.remove(0);
        Some((lt, self))
    }

    pub(crate) fn push_smaller_term(&mut self, m: Monomial, c: FieldElem) {
        debug_assert!(self.terms.last().map_or(true, |(n, _)| *n > m));
        if c.0 != 0 {
            self.terms.push((m, c));
        }
    }

    /// Every variable that occurs in some term, sorted by the variable order
    /// (largest first) and deduplicated.
    pub fn variables(&self) -> Vec<Variable> {
        let mut vs: Vec<Variable> = self.terms.iter().flat_map(|(m, _)| m.variables()).collect();
        vs.sort_by(|a, b| b.cmp(a));
        vs.dedup();
        vs
    }

    fn combine(&self, other: &Polynomial, sign: FieldElem) -> Polynomial {
        self.sub_scaled(&Monomial::one(), self.field.neg(sign), other)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let s = self.field.signed(*c);
            let sign = if s < 0 { "-" } else if k > 0 { "+" } else { "" };
            let sep = if k > 0 { " " } else { "" };
            let mag = s.abs();
            write!(f, "{sep}{sign}")?;
            if k > 0 {
                write!(f, " ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Determinant of the submatrix of generic variables `x(r,c)` with the given
/// rows and columns, by the Leibniz expansion.
pub fn minor_determinant(field: PrimeField, rows: &[i32], cols: &[i32]) -> Result<Polynomial> {
    if rows.len() != cols.len() || rows.is_empty() {
        return Err(Error::NonSquare { rows: rows.len(), cols: cols.len() });
    }
    let increasing = |v: &[i32]| v[0] >= 1 && v.windows(2).all(|w| w[0] < w[1]);
    if !increasing(rows) || !increasing(cols) {
        return Err(Error::BadIndices);
    }
    Ok(determinant_of(field, rows, cols))
}

/// Leibniz expansion without index validation; row swaps are allowed, which
/// the alternating-property tests rely on.
pub(crate) fn determinant_of(field: PrimeField, rows: &[i32], cols: &[i32]) -> Polynomial {
    let t = rows.len();
    let mut perm: Vec<usize> = (0..t).collect();
    let mut terms = Vec::new();
    loop {
        let inversions = (0..t).flat_map(|i| (i + 1..t).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let coeff = if inversions % 2 == 0 { field.one() } else { field.elem(-1) };
        let m = Monomial::from_cells((0..t).map(|i| Cell::new(rows[i], cols[perm[i]])));
        terms.push((m, coeff));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Polynomial::from_terms(field, terms)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn x(r: i32, c: i32) -> Polynomial {
        Polynomial::var(f(), Variable::new(r, c))
    }

    fn mono(cells: &[(i32, i32)]) -> Monomial {
        Monomial::from_cells(cells.iter().map(|&c| Cell::from(c)))
    }

    #[test]
    fn leading_term_of_two_minor_is_skew_diagonal() {
        let d = x(1, 1).mul(&x(2, 2)).sub(&x(1, 2).mul(&x(2, 1)));
        let (m, c) = d.leading_term().unwrap();
        assert_eq!(*m, mono(&[(1, 2), (2, 1)]));
        assert_eq!(f().signed(c), -1);
    }

    #[test]
    fn leading_term_examples() {
        let p = Polynomial::term(f(), mono(&[(3, 1)]), f().elem(5));
        assert_eq!(p.leading_term().unwrap(), (&mono(&[(3, 1)]), f().elem(5)));
        let q = Polynomial::term(f(), mono(&[(1, 3), (2, 2), (3, 1)]), f().one())
            .add(&Polynomial::term(f(), mono(&[(1, 1), (2, 2), (3, 3)]), f().one()));
        assert_eq!(q.leading_term().unwrap(), (&mono(&[(1, 3), (2, 2), (3, 1)]), f().one()));
        assert_eq!(Polynomial::zero(f()).leading_term(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn arithmetic_examples() {
        let g = x(1, 1).add(&x(1, 2));
        assert!(g.add(&g.neg()).is_zero());
        assert_eq!(g.mul(&Polynomial::constant(f(), 1)), g);
        let h = x(1, 1).sub(&x(1, 2));
        let expected = x(1, 1).mul(&x(1, 1)).sub(&x(1, 2).mul(&x(1, 2)));
        assert_eq!(g.mul(&h), expected);
        assert_eq!(expected.len(), 2);
    }

    #[test]
    fn minor_examples() {
        assert_eq!(minor_determinant(f(), &[1], &[1]).unwrap(), x(1, 1));
        let d2 = minor_determinant(f(), &[1, 2], &[1, 2]).unwrap();
        assert_eq!(d2, x(1, 1).mul(&x(2, 2)).sub(&x(1, 2).mul(&x(2, 1))));
        let d3 = minor_determinant(f(), &[1, 2, 3], &[1, 2, 3]).unwrap();
        assert_eq!(d3.len(), 6);
        assert!(d3.is_homogeneous());
        assert_eq!(*d3.leading_term().unwrap().0, mono(&[(1, 3), (2, 2), (3, 1)]));
        assert_eq!(minor_determinant(f(), &[1, 2], &[1]), Err(Error::NonSquare { rows: 2, cols: 1 }));
        assert_eq!(minor_determinant(f(), &[2, 1], &[1, 2]), Err(Error::BadIndices));
    }

    #[test]
    fn display_uses_signed_coefficients() {
        let d2 = minor_determinant(f(), &[1, 2], &[1, 2]).unwrap();
        assert_eq!(d2.to_string(), "-x1,2*x2,1 + x1,1*x2,2");
    }

    #[test]
    fn determinant_is_alternating() {
        let a = determinant_of(f(), &[1, 2, 3], &[1, 2, 4]);
        let swapped = determinant_of(f(), &[2, 1, 3], &[1, 2, 4]);
        assert_eq!(swapped, a.neg());
        assert!(determinant_of(f(), &[1, 1, 3], &[1, 2, 4]).is_zero());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec((prop::collection::vec((1i32..3, 1i32..3), 0..3), -3i64..4), 0..5).prop_map(|ts| {
            Polynomial::from_terms(f(), ts.into_iter().map(|(cs, c)| (mono(&cs), f().elem(c))))
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert!(a.sub(&a).is_zero());
            for w in a.terms().windows(2) {
                prop_assert!(w[0].0 > w[1].0);
            }
        }

        /// Leading term of any square minor is its anti-diagonal with sign
        /// (-1)^floor(t/2).
        #[test]
        fn skew_diagonal_leads(t in 1usize..5, r0 in 1i32..3, c0 in 1i32..3, gaps in prop::collection::vec(1i32..3, 8)) {
            let mut rows = vec![r0];
            let mut cols = vec![c0];
            for k in 1..t {
                rows.push(rows[k - 1] + gaps[k]);
                cols.push(cols[k - 1] + gaps[4 + k - 1]);
            }
            let d = minor_determinant(f(), &rows, &cols).unwrap();
            let (m, c) = d.leading_term().unwrap();
            let anti = Monomial::from_cells((0..t).map(|k| Cell::new(rows[k], cols[t - 1 - k])));
            prop_assert_eq!(m, &anti);
            let sign = if (t / 2) % 2 == 0 { 1 } else { -1 };
            prop_assert_eq!(f().signed(c), sign);
        }
    }
}
