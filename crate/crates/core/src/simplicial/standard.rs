//! Standard simplices, boundaries, horns and ordered simplicial complexes.

use std::collections::{BTreeSet, HashMap};

use super::sset::{Cell, CellRef, SimplicialSet};
use super::SimplicialError;

/// Name of the face of `Δⁿ` spanned by `vertices`: digits run together
/// when `n < 10`, dot-separated otherwise.
pub fn simplex_cell_name(vertices: &[usize], n: usize) -> String {
    let parts: Vec<String> = vertices.iter().map(usize::to_string).collect();
    parts.join(if n < 10 { "" } else { "." })
}

/// The simplicial set of an ordered simplicial complex given by its facets
/// (vertex lists, sorted or not). Cells are all nonempty subsets of facets
/// of dimension at most `max_dim`; a cell is named by joining its vertex
/// names with `sep`.
pub fn from_complex(
    max_dim: usize,
    vertex_names: &[String],
    facets: &[Vec<usize>],
    sep: &str,
) -> Result<SimplicialSet, SimplicialError> {
    let mut simplices: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    for facet in facets {
        let mut f = facet.clone();
        f.sort_unstable();
        f.dedup();
        if f.iter().any(|&v| v >= vertex_names.len()) {
            return Err(SimplicialError::BadIndices(format!("facet {facet:?}")));
        }
        let k = f.len();
        for mask in 1u64..(1u64 << k) {
            let s: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
            if s.len() <= max_dim + 1 {
                simplices.insert((s.len() - 1, s));
            }
        }
    }
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut cells = Vec::with_capacity(simplices.len());
    for (dim, s) in simplices {
        let name = s
            .iter()
            .map(|&v| vertex_names[v].as_str())
            .collect::<Vec<_>>()
            .join(sep);
        let faces = if dim == 0 {
            Vec::new()
        } else {
            (0..=dim)
                .map(|i| {
                    let mut t = s.clone();
                    t.remove(i);
                    CellRef::nondegenerate(ids[&t])
                })
                .collect()
        };
        ids.insert(s, cells.len());
        cells.push(Cell { name, dim, faces });
    }
    SimplicialSet::from_cells(max_dim, cells)
}

fn simplex_vertex_names(n: usize) -> Vec<String> {
    (0..=n).map(|v| v.to_string()).collect()
}

fn faces_of_simplex(n: usize, keep: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
    (0..=n)
        .filter(|&i| keep(i))
        .map(|i| (0..=n).filter(|&v| v != i).collect())
        .collect()
}

fn check(n: usize, max_dim: usize) -> Result<(), SimplicialError> {
    if n > max_dim {
        return Err(SimplicialError::BadIndices(format!(
            "n = {n} exceeds max_dim = {max_dim}"
        )));
    }
    Ok(())
}

fn sep(n: usize) -> &'static str {
    if n < 10 {
        ""
    } else {
        "."
    }
}

/// `Δⁿ`: nondegenerate `j`-cells are the `(j+1)`-element subsets of `[n]`.
pub fn standard_simplex(n: usize, max_dim: usize) -> Result<SimplicialSet, SimplicialError> {
    check(n, max_dim)?;
    from_complex(max_dim, &simplex_vertex_names(n), &[(0..=n).collect()], sep(n))
}

/// `∂Δⁿ`, everything but the top cell.
pub fn boundary(n: usize, max_dim: usize) -> Result<SimplicialSet, SimplicialError> {
    if n == 0 {
        return from_complex(max_dim, &[], &[], "");
    }
    check(n - 1, max_dim)?;
    from_complex(
        max_dim,
        &simplex_vertex_names(n),
        &faces_of_simplex(n, |_| true),
        sep(n),
    )
}

/// `Λⁿ_k`, the boundary without its `k`-th face.
pub fn horn(n: usize, k: usize, max_dim: usize) -> Result<SimplicialSet, SimplicialError> {
    check(n, max_dim)?;
    if n == 0 || k > n {
        return Err(SimplicialError::BadIndices(format!("horn({n}, {k})")));
    }
    from_complex(
        max_dim,
        &simplex_vertex_names(n),
        &faces_of_simplex(n, |i| i != k),
        sep(n),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(standard_simplex(1, 2).unwrap().nondegenerate_counts(), vec![2, 1, 0]);
        assert_eq!(boundary(2, 2).unwrap().nondegenerate_counts(), vec![3, 3, 0]);
        let h = horn(2, 1, 2).unwrap();
        assert_eq!(h.nondegenerate_counts(), vec![3, 2, 0]);
        assert!(h.cell_id("01").is_some() && h.cell_id("12").is_some() && h.cell_id("02").is_none());
        assert!(horn(2, 3, 2).is_err());
        assert!(standard_simplex(3, 2).is_err());
    }

    #[test]
    fn faces_delete_vertices() {
        let d1 = standard_simplex(1, 1).unwrap();
        let e = CellRef::nondegenerate(d1.cell_id("01").unwrap());
        assert_eq!(d1.face(&e, 0).unwrap().base, d1.cell_id("1").unwrap());
        assert_eq!(d1.face(&e, 1).unwrap().base, d1.cell_id("0").unwrap());
    }
}
