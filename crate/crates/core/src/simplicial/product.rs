//! Levelwise products of simplicial sets.

use std::collections::HashMap;

use super::delta::DeltaMap;
use super::sset::{Cell, CellRef, SimplicialSet};

/// `X × Y` truncated at the smaller dimension bound. A pair of cells is
/// degenerate exactly when both are degenerate along a common index, so
/// every pair is `s_J` of a unique nondegenerate pair.
pub fn product_sset(x: &SimplicialSet, y: &SimplicialSet) -> SimplicialSet {
    let top = x.max_dim().min(y.max_dim());
    let mut cells: Vec<Cell> = Vec::new();
    let mut ids: HashMap<(CellRef, CellRef), usize> = HashMap::new();
    for n in 0..=top {
        let ys = y.all_cells(n);
        for a in x.all_cells(n) {
            for b in &ys {
                if a.word.iter().any(|j| b.word.contains(j)) {
                    continue;
                }
                let faces = if n == 0 {
                    Vec::new()
                } else {
                    (0..=n)
                        .map(|i| normalize_pair(x, y, &ids, &x.face(&a, i).unwrap(), &y.face(b, i).unwrap()))
                        .collect()
                };
                let name = format!("({},{})", x.ref_name(&a), y.ref_name(b)).replace(' ', "");
                ids.insert((a.clone(), b.clone()), cells.len());
                cells.push(Cell { name, dim: n, faces });
            }
        }
    }
    SimplicialSet::from_cells(top, cells).expect("products satisfy the simplicial identities")
}

/// Writes a pair of cells as `s_J` of a nondegenerate pair.
fn normalize_pair(
    x: &SimplicialSet,
    y: &SimplicialSet,
    ids: &HashMap<(CellRef, CellRef), usize>,
    a: &CellRef,
    b: &CellRef,
) -> CellRef {
    let common: Vec<usize> = a.word.iter().copied().filter(|j| b.word.contains(j)).collect();
    let n = x.ref_dim(a);
    let rho = DeltaMap::collapsing(n, &common);
    // a section of ρ: first element of each fiber
    let section: Vec<usize> = (0..=rho.cod())
        .map(|v| rho.values().iter().position(|&w| w == v).unwrap())
        .collect();
    let section = DeltaMap::new_unchecked(n, section);
    let core = (x.apply(&section, a), y.apply(&section, b));
    CellRef::from_surjection(ids[&core], &rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard::standard_simplex;

    #[test]
    fn square_has_two_triangles() {
        let d1 = standard_simplex(1, 2).unwrap();
        let sq = product_sset(&d1, &d1);
        assert_eq!(sq.nondegenerate_counts(), vec![4, 5, 2]);
    }

    #[test]
    fn unit_and_vertex_counts() {
        let d0 = standard_simplex(0, 2).unwrap();
        let d2 = standard_simplex(2, 2).unwrap();
        assert_eq!(product_sset(&d2, &d0).nondegenerate_counts(), d2.nondegenerate_counts());
        let d1 = standard_simplex(1, 2).unwrap();
        assert_eq!(product_sset(&d2, &d1).nondegenerate_counts()[0], 6);
    }
}
