use mixladder::biliaison::{build_chain, StepOptions, StepStatus};
use mixladder::dimension::{
    height_antidiagonal, height_b, height_lprime, hilbert_series, min_vertex_cover, reisner_cm_check,
    ring_variables,
};
use mixladder::exactpoly::Polynomial;
use mixladder::gorenstein::{ag_criterion, symmetry_oracle};
use mixladder::groebner::{buchberger, ladder_basis, verify_gb_of, MonomialIdeal};
use mixladder::idealgen::{candidate_gb, generator_polynomials};
use mixladder::ladder::Ladder;
use mixladder::Error;
use serde_json::{json, Value};

use crate::document::Settings;

pub const OK: u8 = 0;
pub const MATH_FAILURE: u8 = 1;
pub const INPUT_ERROR: u8 = 2;
pub const BUDGET: u8 = 3;

pub struct Outcome {
    pub code: u8,
    pub report: Value,
    pub summary: String,
}

impl Outcome {
    fn new(code: u8, report: Value, summary: impl Into<String>) -> Self {
        Outcome { code, report, summary: summary.into() }
    }

    /// A library error raised mid-computation.
    pub fn from_error(command: &str, e: &Error) -> Self {
        let (code, status) = match e {
            Error::BudgetExceeded(_) => (BUDGET, "budget_exceeded"),
            _ => (MATH_FAILURE, "error"),
        };
        Outcome::new(code, json!({ "command": command, "status": status, "error": e.to_string() }), e.to_string())
    }
}

fn base(command: &str, ladder: &Ladder, s: &Settings) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("command".into(), json!(command));
    m.insert("ladder".into(), json!(ladder));
    m.insert("cells".into(), json!(ladder.len()));
    m.insert("settings".into(), json!(s));
    m
}

pub fn validate(ladder: &Ladder, s: &Settings) -> Outcome {
    let report = ladder.validate();
    let mut m = base("validate", ladder, s);
    m.insert("valid".into(), json!(report.is_ok()));
    m.insert("violations".into(), json!(report.violations));
    if report.is_ok() {
        Outcome::new(OK, Value::Object(m), "ok")
    } else {
        let clauses: Vec<&str> = report.violations.iter().map(|v| v.clause()).collect();
        Outcome::new(MATH_FAILURE, Value::Object(m), format!("invalid: {}", clauses.join(", ")))
    }
}

fn leading_terms(polys: &[Polynomial]) -> Vec<String> {
    polys.iter().filter_map(|p| p.leading_monomial()).map(|m| m.to_string()).collect()
}

pub fn gb(ladder: &Ladder, s: &Settings, verify: bool) -> Result<Outcome, Error> {
    let f = s.field();
    let gens = generator_polynomials(ladder, f)?;
    let cand: Vec<Polynomial> = candidate_gb(ladder).iter().map(|g| g.polynomial(f)).collect::<Result<_, _>>()?;
    let mut m = base("gb", ladder, s);
    m.insert("generators".into(), json!(gens.len()));
    m.insert("basis_size".into(), json!(cand.len()));
    m.insert("leading_terms".into(), json!(leading_terms(&cand)));
    if !verify {
        return Ok(Outcome::new(OK, Value::Object(m), format!("{} basis elements", cand.len())));
    }
    let cert = verify_gb_of(&cand, &gens);
    let mut code = if cert.verified { OK } else { MATH_FAILURE };
    m.insert("certificate".into(), json!(cert));
    match buchberger(&gens, s.buchberger_budget) {
        Ok(bb) => {
            let predicted = MonomialIdeal::new(cand.iter().filter_map(|p| p.leading_monomial().cloned()));
            let same = bb.initial_ideal() == predicted;
            if !same {
                code = MATH_FAILURE;
            }
            m.insert(
                "buchberger".into(),
                json!({ "status": "ok", "basis_size": bb.len(), "pair_reductions": bb.pair_reductions, "same_initial_ideal": same }),
            );
        }
        Err(Error::BudgetExceeded(why)) => {
            code = code.max(BUDGET);
            m.insert("buchberger".into(), json!({ "status": "budget_exceeded", "detail": why }));
        }
        Err(e) => return Err(e),
    }
    let summary = format!(
        "{} basis elements, {}",
        cand.len(),
        match code {
            OK => "verified",
            BUDGET => "budget exceeded",
            _ => "NOT verified",
        }
    );
    Ok(Outcome::new(code, Value::Object(m), summary))
}

pub fn height(ladder: &Ladder, s: &Settings, expect: Option<usize>) -> Result<Outcome, Error> {
    let lprime = height_lprime(ladder);
    let complement_b = height_b(ladder);
    let antidiagonal = height_antidiagonal(ladder);
    let (basis, _) = ladder_basis(ladder, s.field(), s.buchberger_budget)?;
    let init = MonomialIdeal::new(basis.iter().filter_map(|p| p.leading_monomial().cloned()));
    let hilbert = hilbert_series(&init, ladder.len());
    let cover = match min_vertex_cover(&init, s.cover_cap) {
        Ok(c) => Some(c),
        Err(Error::BudgetExceeded(_)) => None,
        Err(e) => return Err(e),
    };
    let mut values = vec![lprime, complement_b, antidiagonal, hilbert.codim];
    values.extend(cover);
    let agree = values.iter().all(|&v| v == lprime);
    let expected_ok = expect.is_none_or(|e| e == lprime);
    let mut m = base("height", ladder, s);
    m.insert(
        "heights".into(),
        json!({
            "lprime_cells": lprime,
            "complement_of_b": complement_b,
            "antidiagonal_count": antidiagonal,
            "vars_minus_krull_dim": hilbert.codim,
            "min_vertex_cover": cover,
        }),
    );
    m.insert("agree".into(), json!(agree));
    if let Some(e) = expect {
        m.insert("expected".into(), json!(e));
        m.insert("expected_matches".into(), json!(expected_ok));
    }
    let code = if agree && expected_ok { OK } else { MATH_FAILURE };
    let summary = if !agree {
        format!("height computations disagree: {values:?}")
    } else if !expected_ok {
        format!("height {lprime} does not match expected {}", expect.unwrap())
    } else {
        format!("height {lprime}")
    };
    Ok(Outcome::new(code, Value::Object(m), summary))
}

pub fn hilbert(ladder: &Ladder, s: &Settings) -> Result<Outcome, Error> {
    let (basis, source) = ladder_basis(ladder, s.field(), s.buchberger_budget)?;
    let init = MonomialIdeal::new(basis.iter().filter_map(|p| p.leading_monomial().cloned()));
    let h = hilbert_series(&init, ladder.len());
    let mut m = base("hilbert", ladder, s);
    m.insert("basis_source".into(), json!(source));
    m.insert("hilbert".into(), json!(h));
    let summary = format!("dim {}, degree {}, h-vector {:?}", h.dim, h.degree, h.h_vector);
    Ok(Outcome::new(OK, Value::Object(m), summary))
}

pub fn gorenstein(ladder: &Ladder, s: &Settings, oracle: bool) -> Result<Outcome, Error> {
    let report = ag_criterion(ladder)?;
    let mut m = base("gorenstein", ladder, s);
    let mut code = OK;
    let mut summary = format!("Gorenstein: {}", report.verdict);
    m.insert("verdict".into(), json!(report.verdict));
    m.insert("components".into(), json!(report.components));
    if oracle {
        let (ok, h) = symmetry_oracle(ladder, s.field(), s.buchberger_budget)?;
        let agree = ok == report.verdict;
        m.insert("oracle_verdict".into(), json!(ok));
        m.insert("h_vector".into(), json!(h));
        m.insert("agree".into(), json!(agree));
        if !agree {
            code = MATH_FAILURE;
            summary = format!("criterion says {} but h-vector symmetry says {ok}", report.verdict);
        } else {
            summary.push_str(" (oracle agrees)");
        }
    }
    Ok(Outcome::new(code, Value::Object(m), summary))
}

pub fn biliaison(ladder: &Ladder, s: &Settings, verify: bool) -> Result<Outcome, Error> {
    let opts = StepOptions { field: s.field(), budget: s.buchberger_budget, verify };
    let chain = build_chain(ladder, opts)?;
    let failed = chain.steps.iter().any(|st| matches!(st.checks.status, StepStatus::Failed(_)));
    let unverified = chain.steps.iter().filter(|st| matches!(st.checks.status, StepStatus::Unverified(_))).count();
    let code = if !chain.length_ok || !chain.terminal_ok || failed {
        MATH_FAILURE
    } else if unverified > 0 {
        BUDGET
    } else {
        OK
    };
    let mut m = base("biliaison", ladder, s);
    m.insert("chain".into(), json!(chain));
    let mut summary = format!(
        "{} steps (expected {}), terminal {}",
        chain.steps.len(),
        chain.expected_length,
        if chain.terminal_ok { "matches L'" } else { "DOES NOT match L'" }
    );
    if verify {
        summary.push_str(if failed { ", a step FAILED" } else if unverified > 0 { ", some steps unverified" } else { ", all steps verified" });
    }
    Ok(Outcome::new(code, Value::Object(m), summary))
}

pub fn cm_check(ladder: &Ladder, s: &Settings) -> Result<Outcome, Error> {
    let (basis, _) = ladder_basis(ladder, s.field(), s.buchberger_budget)?;
    let init = MonomialIdeal::new(basis.iter().filter_map(|p| p.leading_monomial().cloned()));
    let mut m = base("cm-check", ladder, s);
    match reisner_cm_check(&init, &ring_variables(ladder), s.field(), s.reisner_cap) {
        Ok(r) => {
            let ok = r.cohen_macaulay;
            m.insert("status".into(), json!("ok"));
            m.insert("reisner".into(), json!(r));
            let code = if ok { OK } else { MATH_FAILURE };
            Ok(Outcome::new(code, Value::Object(m), format!("Cohen-Macaulay: {ok}")))
        }
        Err(Error::BudgetExceeded(why)) => {
            m.insert("status".into(), json!("budget_exceeded"));
            m.insert("detail".into(), json!(why));
            Ok(Outcome::new(BUDGET, Value::Object(m), format!("budget exceeded: {why}")))
        }
        Err(e) => Err(e),
    }
}
