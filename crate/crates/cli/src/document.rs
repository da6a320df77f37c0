use std::path::Path;

use mixladder::dimension::{DEFAULT_COVER_CAP, DEFAULT_REISNER_CAP};
use mixladder::exactpoly::{PrimeField, DEFAULT_PRIME};
use mixladder::groebner::DEFAULT_BUDGET;
use mixladder::ladder::Ladder;
use mixladder::Cell;
use serde::{Deserialize, Serialize};

/// The on-disk ladder description.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LadderDocument {
    pub m: i32,
    pub n: i32,
    pub upper: Vec<[i32; 2]>,
    pub lower: Vec<[i32; 2]>,
    pub t: Vec<u32>,
    pub field_prime: Option<u32>,
    pub buchberger_budget: Option<u64>,
    pub cover_cap: Option<usize>,
    pub reisner_cap: Option<usize>,
}

/// Effective settings, echoed in every report.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Settings {
    pub field_prime: u32,
    pub buchberger_budget: u64,
    pub cover_cap: usize,
    pub reisner_cap: usize,
}

impl Settings {
    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.field_prime).expect("checked at load")
    }
}

pub struct Loaded {
    pub ladder: Ladder,
    pub settings: Settings,
}

pub fn load(path: &Path, prime: Option<u32>, budget: Option<u64>) -> Result<Loaded, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let doc: LadderDocument =
        serde_json::from_str(&text).map_err(|e| format!("{}: invalid ladder document: {e}", path.display()))?;
    let cells = |v: &[[i32; 2]]| v.iter().map(|p| Cell::new(p[0], p[1])).collect();
    let ladder = Ladder { m: doc.m, n: doc.n, upper: cells(&doc.upper), lower: cells(&doc.lower), t: doc.t.clone() };
    let settings = Settings {
        field_prime: prime.or(doc.field_prime).unwrap_or(DEFAULT_PRIME),
        buchberger_budget: budget.or(doc.buchberger_budget).unwrap_or(DEFAULT_BUDGET),
        cover_cap: doc.cover_cap.unwrap_or(DEFAULT_COVER_CAP),
        reisner_cap: doc.reisner_cap.unwrap_or(DEFAULT_REISNER_CAP),
    };
    PrimeField::new(settings.field_prime).map_err(|e| format!("field_prime {}: {e}", settings.field_prime))?;
    Ok(Loaded { ladder, settings })
}
