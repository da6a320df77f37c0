use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exactpoly::Variable;
use crate::groebner::MonomialIdeal;

pub const DEFAULT_COVER_CAP: usize = 24;

/// Size of a smallest vertex cover of the hypergraph whose edges are the
/// supports of the generators. For a squarefree monomial ideal this is its
/// height.
pub fn min_vertex_cover(ideal: &MonomialIdeal, cap: usize) -> Result<usize> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let vars: Vec<Variable> =
        ideal.gens().iter().flat_map(|g| g.variables()).collect::<BTreeSet<_>>().into_iter().collect();
    if vars.len() > cap || vars.len() > 64 {
        return Err(Error::BudgetExceeded(format!("{} variables exceed the vertex cover cap {cap}", vars.len())));
    }
    let edges: Vec<u64> = ideal
        .gens()
        .iter()
        .map(|g| g.variables().fold(0u64, |acc, v| acc | 1 << vars.binary_search(&v).unwrap()))
        .collect();
    if edges.contains(&0) {
        // The unit ideal has no cover; its height is conventionally infinite.
        return Err(Error::Degenerate("unit ideal".into()));
    }
    let mut best = vars.len();
    search(&edges, 0, 0, &mut best);
    Ok(best)
}

fn search(edges: &[u64], chosen: u64, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    let open = edges.iter().filter(|&&e| e & chosen == 0).min_by_key(|e| e.count_ones());
    let Some(&edge) = open else {
        *best = size;
        return;
    };
    if size + 1 >= *best {
        return;
    }
    let mut rest = edge;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        search(edges, chosen | bit, size + 1, best);
        rest &= rest - 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell::Cell;
    use crate::exactpoly::Monomial;

    fn m(v: &[(i32, i32)]) -> Monomial {
        Monomial::from_cells(v.iter().map(|&(r, c)| Cell::new(r, c)))
    }

    #[test]
    fn path_and_triangle() {
        let path = MonomialIdeal::new(vec![m(&[(1, 1), (1, 2)]), m(&[(1, 2), (1, 3)]), m(&[(1, 3), (1, 4)])]);
        assert_eq!(min_vertex_cover(&path, DEFAULT_COVER_CAP).unwrap(), 2);
        let tri = MonomialIdeal::new(vec![m(&[(1, 1), (1, 2)]), m(&[(1, 2), (1, 3)]), m(&[(1, 1), (1, 3)])]);
        assert_eq!(min_vertex_cover(&tri, DEFAULT_COVER_CAP).unwrap(), 2);
    }

    #[test]
    fn rejects_non_squarefree_and_large() {
        let sq = MonomialIdeal::new(vec![m(&[(1, 1), (1, 1)])]);
        assert_eq!(min_vertex_cover(&sq, DEFAULT_COVER_CAP), Err(Error::NotSquarefree));
        let big = MonomialIdeal::new((1..=5).map(|c| m(&[(1, c), (2, c)])));
        assert!(matches!(min_vertex_cover(&big, 9), Err(Error::BudgetExceeded(_))));
        assert_eq!(min_vertex_cover(&big, 10).unwrap(), 5);
    }
}
