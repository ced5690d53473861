//! Path components and edge-path presentations of the fundamental group.

use std::collections::VecDeque;

use super::presentation::{inverse_word, Letter, Presentation, Word};
use super::HomotopyError;
use crate::simplicial::{CellId, SimplicialSet};

/// Vertices joined by a zig-zag of 1-cells, as lists of vertex names.
/// Classes are ordered by their first vertex in cell order.
pub fn pi0(x: &SimplicialSet) -> Vec<Vec<String>> {
    let comp = component_ids(x);
    let mut classes: Vec<Vec<String>> = Vec::new();
    let mut slot: Vec<Option<usize>> = vec![None; x.num_cells()];
    for &v in x.vertices() {
        let root = comp[v];
        let k = *slot[root].get_or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[k].push(x.cell(v).name.clone());
    }
    classes
}

/// Representative vertex of the component of each vertex (other cells map
/// to themselves).
fn component_ids(x: &SimplicialSet) -> Vec<CellId> {
    let mut parent: Vec<CellId> = (0..x.num_cells()).collect();
    fn find(p: &mut [CellId], mut a: CellId) -> CellId {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    if x.max_dim() >= 1 {
        for &e in x.cells_of_dim(1) {
            let f = &x.cell(e).faces;
            let (a, b) = (find(&mut parent, f[0].base), find(&mut parent, f[1].base));
            let (lo, hi) = (a.min(b), a.max(b));
            parent[hi] = lo;
        }
    }
    (0..x.num_cells()).map(|c| find(&mut parent, c)).collect()
}

/// Order in which the spanning-tree search visits the edges at a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeOrder {
    #[default]
    Lexicographic,
    Reversed,
}

/// Edge-path presentation of `π₁(X, base)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi1 {
    pub presentation: Presentation,
    /// Edges of the spanning tree, each also a one-letter relator.
    pub tree: Vec<String>,
}

/// Generators are the nondegenerate 1-cells of the component of `base`,
/// each oriented from `∂₁` to `∂₀`. Relators are the tree edges and, for
/// each nondegenerate 2-cell, `∂₂·∂₀·∂₁⁻¹` with degenerate faces omitted.
pub fn pi1(x: &SimplicialSet, base: &str, order: EdgeOrder) -> Result<Pi1, HomotopyError> {
    let b = x
        .cell_id(base)
        .filter(|&c| x.dim(c) == 0)
        .ok_or_else(|| HomotopyError::BaseNotFound(base.to_string()))?;
    if x.max_dim() < 2 {
        return Err(HomotopyError::DimensionTooLow(x.max_dim()));
    }
    let comp = component_ids(x);
    let root = comp[b];
    let mut edges: Vec<CellId> = x
        .cells_of_dim(1)
        .iter()
        .copied()
        .filter(|&e| comp[x.cell(e).faces[0].base] == root)
        .collect();
    edges.sort_by(|&a, &b| x.cell(a).name.cmp(&x.cell(b).name));
    let gen_of = |e: CellId| edges.iter().position(|&f| f == e);
    let generators: Vec<String> = edges.iter().map(|&e| x.cell(e).name.clone()).collect();

    // spanning tree by breadth-first search from the base
    let mut scan = edges.clone();
    if order == EdgeOrder::Reversed {
        scan.reverse();
    }
    let mut seen = vec![false; x.num_cells()];
    seen[b] = true;
    let mut queue = VecDeque::from([b]);
    let mut tree: Vec<CellId> = Vec::new();
    while let Some(v) = queue.pop_front() {
        for &e in &scan {
            let f = &x.cell(e).faces;
            let (s, t) = (f[1].base, f[0].base);
            let other = if s == v {
                t
            } else if t == v {
                s
            } else {
                continue;
            };
            if !seen[other] {
                seen[other] = true;
                tree.push(e);
                queue.push_back(other);
            }
        }
    }

    let mut relators: Vec<Word> = tree.iter().map(|&e| vec![Letter::new(gen_of(e).unwrap())]).collect();
    for &t in x.cells_of_dim(2) {
        let f = &x.cell(t).faces;
        if comp[x.vertex(&f[0], 0)] != root {
            continue;
        }
        let letter = |i: usize| -> Word {
            if f[i].is_degenerate() {
                Vec::new()
            } else {
                vec![Letter::new(gen_of(f[i].base).unwrap())]
            }
        };
        let mut w = letter(2);
        w.extend(letter(0));
        w.extend(inverse_word(&letter(1)));
        relators.push(w);
    }
    let presentation = Presentation::new(generators, relators)?;
    Ok(Pi1 {
        presentation,
        tree: tree.iter().map(|&e| x.cell(e).name.clone()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homotopy::{abelian_invariants, tietze_simplify};
    use crate::simplicial::{boundary, standard_simplex};

    fn circle() -> SimplicialSet {
        SimplicialSet::builder(2)
            .vertex("v")
            .cell("a", 1, ["v", "v"])
            .build()
            .unwrap()
    }

    #[test]
    fn components() {
        let two = SimplicialSet::builder(2).vertex("p").vertex("q").build().unwrap();
        assert_eq!(pi0(&two).len(), 2);
        assert_eq!(pi0(&boundary(3, 2).unwrap()).len(), 1);
    }

    #[test]
    fn circle_group() {
        let p = pi1(&circle(), "v", EdgeOrder::Lexicographic).unwrap();
        assert_eq!(p.presentation.generators, vec!["a"]);
        assert!(p.presentation.relators.is_empty());
        assert_eq!(abelian_invariants(&p.presentation).to_string(), "Z");
    }

    #[test]
    fn boundary_of_tetrahedron_is_simply_connected() {
        let x = boundary(3, 2).unwrap();
        for order in [EdgeOrder::Lexicographic, EdgeOrder::Reversed] {
            let p = pi1(&x, "0", order).unwrap();
            assert_eq!(p.presentation.generators.len(), 6);
            assert_eq!(p.tree.len(), 3);
            assert!(abelian_invariants(&p.presentation).is_trivial());
            assert!(tietze_simplify(&p.presentation, 100).is_empty());
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(
            pi1(&circle(), "w", EdgeOrder::Lexicographic),
            Err(HomotopyError::BaseNotFound(_))
        ));
        let low = standard_simplex(1, 1).unwrap();
        assert!(matches!(
            pi1(&low, "0", EdgeOrder::Lexicographic),
            Err(HomotopyError::DimensionTooLow(1))
        ));
    }
}
