use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactpoly::{PrimeField, Variable};
use crate::groebner::MonomialIdeal;

pub const DEFAULT_REISNER_CAP: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReisnerReport {
    pub cohen_macaulay: bool,
    /// Variables appearing in no generator; the complex is a cone over them.
    pub cone_vertices: usize,
    pub vertices: usize,
    pub faces: usize,
    /// A face whose link has homology below its top dimension, as cell labels.
    pub witness: Option<Vec<String>>,
}

/// Reisner's criterion for the Stanley-Reisner complex of a squarefree
/// monomial ideal in the polynomial ring on `ring_vars`: `S/I` is
/// Cohen-Macaulay iff every link has vanishing reduced homology below its
/// dimension. Homology is computed over `field`.
pub fn reisner_cm_check(
    ideal: &MonomialIdeal,
    ring_vars: &[Variable],
    field: PrimeField,
    cap: usize,
) -> Result<ReisnerReport> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let used: BTreeSet<Variable> = ideal.gens().iter().flat_map(|g| g.variables()).collect();
    let cone_vertices = ring_vars.iter().filter(|v| !used.contains(v)).count();
    let verts: Vec<Variable> = used.into_iter().collect();
    if verts.len() > cap {
        return Err(Error::BudgetExceeded(format!("{} vertices exceed the Reisner cap {cap}", verts.len())));
    }
    let nonfaces: Vec<u32> = ideal
        .gens()
        .iter()
        .map(|g| g.variables().fold(0u32, |acc, v| acc | 1 << verts.binary_search(&v).unwrap()))
        .collect();
    if nonfaces.contains(&0) {
        return Err(Error::Degenerate("unit ideal".into()));
    }
    let faces: Vec<u32> =
        (0u32..1 << verts.len()).filter(|&s| !nonfaces.iter().any(|&e| e & s == e)).collect();
    let face_set: std::collections::HashSet<u32> = faces.iter().copied().collect();
    let mut report = ReisnerReport {
        cohen_macaulay: true,
        cone_vertices,
        vertices: verts.len(),
        faces: faces.len(),
        witness: None,
    };
    for &f in &faces {
        let link: Vec<u32> = faces.iter().copied().filter(|&g| g & f == 0 && face_set.contains(&(g | f))).collect();
        if !link_is_acyclic_below_top(&link, field) {
            report.cohen_macaulay = false;
            report.witness =
                Some((0..verts.len()).filter(|&b| f >> b & 1 == 1).map(|b| verts[b].0.to_string()).collect());
            break;
        }
    }
    Ok(report)
}

/// Reduced homology `H~_i = 0` for all `i < dim`, the empty face sitting in
/// degree -1.
fn link_is_acyclic_below_top(faces: &[u32], field: PrimeField) -> bool {
    let top = faces.iter().map(|f| f.count_ones()).max().unwrap_or(0) as usize;
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    // ranks[s] = rank of the boundary map from faces of size s to size s - 1.
    let ranks: Vec<usize> = (0..=top + 1)
        .map(|s| if s == 0 || s > top { 0 } else { boundary_rank(&by_size[s], &by_size[s - 1], field) })
        .collect();
    // Degree i homology lives on faces of size i + 1; check sizes 0..top
    // (degrees -1..dim-1).
    (0..top).all(|s| by_size[s].len() - ranks[s] - ranks[s + 1] == 0)
}

fn boundary_rank(src: &[u32], dst: &[u32], field: PrimeField) -> usize {
    if src.is_empty() || dst.is_empty() {
        return 0;
    }
    let index: std::collections::HashMap<u32, usize> = dst.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut rows: Vec<Vec<u32>> = src
        .iter()
        .map(|&f| {
            let mut row = vec![0u32; dst.len()];
            let mut sign = false;
            for b in 0..32 {
                if f >> b & 1 == 1 {
                    let e = field.elem(if sign { -1 } else { 1 });
                    row[index[&(f & !(1 << b))]] = e.0;
                    sign = !sign;
                }
            }
            row
        })
        .collect();
    rank_mod_p(&mut rows, field)
}

fn rank_mod_p(rows: &mut [Vec<u32>], field: PrimeField) -> usize {
    let p = field.modulus() as u64;
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else { continue };
        rows.swap(rank, piv);
        let inv = field.inv(crate::exactpoly::FieldElem(rows[rank][col])).unwrap().0 as u64;
        for x in rows[rank].iter_mut() {
            *x = (*x as u64 * inv % p) as u32;
        }
        let pivot_row = rows[rank].clone();
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col] as u64;
                for (x, &y) in rows[r].iter_mut().zip(&pivot_row) {
                    *x = ((*x as u64 + p * p - factor * y as u64) % p) as u32;
                }
            }
        }
        rank += 1;
    }
    rank
}
