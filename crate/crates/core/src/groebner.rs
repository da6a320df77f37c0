//! Gröbner bases over GF(p) in the skew-diagonal lex order.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::{Monomial, Polynomial, PrimeField};
use crate::idealgen::{candidate_gb, generator_polynomials};
use crate::ladder::Ladder;

pub const DEFAULT_BUDGET: u64 = 100_000;

/// Full normal form of `f` modulo `basis`: no term of the result is
/// divisible by a leading monomial of `basis`. Zero members of `basis` are
/// ignored.
pub fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let field = f.field();
    let heads: Vec<(&Monomial, crate::exactpoly::FieldElem, &Polynomial)> = basis
        .iter()
        .filter_map(|g| g.leading_term().ok().map(|(m, c)| (m, field.inv(c).expect("nonzero"), g)))
        .collect();
    let mut p = f.clone();
    let mut rem = Polynomial::zero(field);
    while let Ok((m, c)) = p.leading_term() {
        let m = m.clone();
        match heads.iter().find(|(h, _, _)| h.divides(&m)) {
            Some((h, inv, g)) => {
                let q = m.div(h).expect("divisible");
                p = p.sub_scaled(&q, field.mul(c, *inv), g);
            }
            None => {
                rem.push_smaller_term(m, c);
                p = p.pop_leading().expect("nonzero").1;
            }
        }
    }
    rem
}

/// `lcm/LT(f) * f - lcm/LT(g) * g` with both leading terms made monic.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let field = f.field();
    let (mf, cf) = f.leading_term()?;
    let (mg, cg) = g.leading_term()?;
    let l = mf.lcm(mg);
    let a = f.mul_term(&l.div(mf).unwrap(), field.inv(cf).unwrap());
    Ok(a.sub_scaled(&l.div(mg).unwrap(), field.inv(cg).unwrap(), g))
}

/// A reduced Gröbner basis: monic, minimal and interreduced, sorted by
/// ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    polys: Vec<Polynomial>,
    pub pair_reductions: u64,
}

impl GroebnerBasis {
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        reduce(f, &self.polys)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|g| g.leading_monomial().unwrap().clone()).collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.leading_monomials())
    }
}

/// Buchberger's algorithm with the normal selection strategy (smallest
/// degree of the lcm first, then smallest lcm) and the product and chain
/// criteria. `budget` bounds the number of S-pair reductions.
pub fn buchberger(generators: &[Polynomial], budget: u64) -> Result<GroebnerBasis> {
    let mut g: Vec<Polynomial> = generators.iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    let mut queue: BTreeSet<(u32, Monomial, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let lm = |p: &Polynomial| p.leading_monomial().unwrap().clone();
    for j in 0..g.len() {
        for i in 0..j {
            let l = lm(&g[i]).lcm(&lm(&g[j]));
            queue.insert((l.degree(), l, i, j));
            pending.insert((i, j));
        }
    }
    let mut used = 0u64;
    while let Some(entry) = queue.pop_first() {
        let (_, l, i, j) = entry;
        pending.remove(&(i, j));
        if lm(&g[i]).gcd_is_one(&lm(&g[j])) {
            continue;
        }
        let chained = (0..g.len()).any(|k| {
            k != i
                && k != j
                && lm(&g[k]).divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }
        used += 1;
        if used > budget {
            return Err(Error::BudgetExceeded(format!("{budget} S-pair reductions")));
        }
        let r = reduce(&s_polynomial(&g[i], &g[j])?, &g);
        if !r.is_zero() {
            let r = r.monic();
            let new = g.len();
            let lr = lm(&r);
            g.push(r);
            for a in 0..new {
                let l = lm(&g[a]).lcm(&lr);
                queue.insert((l.degree(), l, a, new));
                pending.insert((a, new));
            }
        }
    }
    Ok(GroebnerBasis { polys: interreduce(g), pair_reductions: used })
}

/// Minimalizes and tail-reduces a Gröbner basis.
pub fn interreduce(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut sorted: Vec<Polynomial> = basis.into_iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    sorted.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in sorted {
        let m = p.leading_monomial().unwrap();
        if !minimal.iter().any(|q| q.leading_monomial().unwrap().divides(m)) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<Polynomial> =
            minimal.iter().enumerate().filter(|&(o, _)| o != idx).map(|(_, q)| q.clone()).collect();
        let p = &minimal[idx];
        let (m, c) = p.leading_term().unwrap();
        let head = Polynomial::term(p.field(), m.clone(), c);
        let tail = reduce(&p.sub(&head), &others);
        out.push(head.add(&tail));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GbFailure {
    /// The S-polynomial of basis elements `i`, `j` (0-based) has a nonzero
    /// normal form.
    Pair { i: usize, j: usize, remainder: String },
    /// Generator `index` does not reduce to zero, so the basis spans a
    /// smaller ideal.
    Generator { index: usize, remainder: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GbCertificate {
    pub verified: bool,
    pub basis_size: usize,
    pub pairs_checked: usize,
    pub pairs_skipped_coprime: usize,
    pub generators_checked: usize,
    pub failure: Option<GbFailure>,
}

/// Buchberger's criterion: every S-pair with non-coprime leading monomials
/// reduces to zero. Stops at the first failure.
pub fn verify_gb(basis: &[Polynomial]) -> GbCertificate {
    verify_gb_of(basis, &[])
}

/// As [`verify_gb`], and additionally checks that every generator of the
/// target ideal reduces to zero, so the basis spans that ideal.
pub fn verify_gb_of(basis: &[Polynomial], generators: &[Polynomial]) -> GbCertificate {
    let basis: Vec<Polynomial> = basis.iter().filter(|p| !p.is_zero()).cloned().collect();
    let mut cert = GbCertificate {
        verified: false,
        basis_size: basis.len(),
        pairs_checked: 0,
        pairs_skipped_coprime: 0,
        generators_checked: 0,
        failure: None,
    };
    for j in 0..basis.len() {
        for i in 0..j {
            let (a, b) = (basis[i].leading_monomial().unwrap(), basis[j].leading_monomial().unwrap());
            if a.gcd_is_one(b) {
                cert.pairs_skipped_coprime += 1;
                continue;
            }
            cert.pairs_checked += 1;
            let r = reduce(&s_polynomial(&basis[i], &basis[j]).expect("nonzero"), &basis);
            if !r.is_zero() {
                cert.failure = Some(GbFailure::Pair { i, j, remainder: r.to_string() });
                return cert;
            }
        }
    }
    for (index, f) in generators.iter().enumerate() {
        cert.generators_checked += 1;
        let r = reduce(f, &basis);
        if !r.is_zero() {
            cert.failure = Some(GbFailure::Generator { index, remainder: r.to_string() });
            return cert;
        }
    }
    cert.verified = true;
    cert
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisSource {
    /// The predicted minors, certified by [`verify_gb_of`].
    Candidate,
    /// The prediction failed verification; computed by [`buchberger`].
    Buchberger,
}

/// A Gröbner basis of `I_t(L)`: the predicted minors when they verify,
/// otherwise a Buchberger run.
pub fn ladder_basis(ladder: &Ladder, field: PrimeField, budget: u64) -> Result<(Vec<Polynomial>, BasisSource)> {
    let gens = generator_polynomials(ladder, field)?;
    let cand: Vec<Polynomial> =
        candidate_gb(ladder).iter().map(|g| g.polynomial(field)).collect::<Result<_>>()?;
    if verify_gb_of(&cand, &gens).verified {
        return Ok((cand, BasisSource::Candidate));
    }
    Ok((buchberger(&gens, budget)?.polys, BasisSource::Buchberger))
}

/// A monomial ideal kept by its minimal generators, sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new<I: IntoIterator<Item = Monomial>>(gens: I) -> Self {
        let mut all: Vec<Monomial> = gens.into_iter().collect();
        all.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.cmp(b)));
        all.dedup();
        let mut out: Vec<Monomial> = Vec::new();
        for m in all {
            if !out.iter().any(|g| g.divides(&m)) {
                out.push(m);
            }
        }
        out.sort();
        MonomialIdeal { gens: out }
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|m| m.is_squarefree())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }
}
