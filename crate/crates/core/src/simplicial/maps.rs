//! Simplicial maps and their exhaustive enumeration.

use std::collections::HashMap;

use super::delta::DeltaMap;
use super::sset::{CellId, CellRef, SimplicialSet};
use super::standard::simplex_cell_name;
use super::SimplicialError;
use crate::budget::Budget;

/// A map determined by the images of the nondegenerate cells of the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    pub source: SimplicialSet,
    pub target: SimplicialSet,
    pub cell_map: Vec<CellRef>,
}

impl SimplicialMap {
    pub fn new(source: SimplicialSet, target: SimplicialSet, cell_map: Vec<CellRef>) -> Result<Self, SimplicialError> {
        let f = SimplicialMap {
            source,
            target,
            cell_map,
        };
        f.validate()?;
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: SimplicialSet, target: SimplicialSet, cell_map: Vec<CellRef>) -> Self {
        SimplicialMap {
            source,
            target,
            cell_map,
        }
    }

    /// Builds a map from `(source cell, target reference)` name pairs.
    pub fn from_names<'a>(
        source: &SimplicialSet,
        target: &SimplicialSet,
        pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self, SimplicialError> {
        let mut cell_map = vec![None; source.num_cells()];
        for (a, b) in pairs {
            let id = source
                .cell_id(a)
                .ok_or_else(|| SimplicialError::UnknownCell(a.to_string()))?;
            cell_map[id] = Some(target.parse_ref(b)?);
        }
        let cell_map = cell_map
            .into_iter()
            .enumerate()
            .map(|(id, r)| {
                r.ok_or_else(|| SimplicialError::NotSimplicial(format!("no image for `{}`", source.cell(id).name)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        SimplicialMap::new(source.clone(), target.clone(), cell_map)
    }

    pub fn identity(x: &SimplicialSet) -> Self {
        SimplicialMap {
            source: x.clone(),
            target: x.clone(),
            cell_map: (0..x.num_cells()).map(CellRef::nondegenerate).collect(),
        }
    }

    pub fn validate(&self) -> Result<(), SimplicialError> {
        let (x, y) = (&self.source, &self.target);
        if self.cell_map.len() != x.num_cells() {
            return Err(SimplicialError::NotSimplicial("wrong number of images".into()));
        }
        for (id, c) in x.cells().iter().enumerate() {
            let img = &self.cell_map[id];
            if img.base >= y.num_cells() || y.ref_dim(img) != c.dim {
                return Err(SimplicialError::NotSimplicial(format!(
                    "image of `{}` has the wrong dimension",
                    c.name
                )));
            }
            let faces = y.faces(img);
            for (i, face) in c.faces.iter().enumerate() {
                if self.apply(face) != faces[i] {
                    return Err(SimplicialError::NotSimplicial(format!(
                        "face {i} of `{}` is not preserved",
                        c.name
                    )));
                }
            }
        }
        Ok(())
    }

    /// Image of any cell of the source.
    pub fn apply(&self, x: &CellRef) -> CellRef {
        let img = &self.cell_map[x.base];
        if x.word.is_empty() {
            return img.clone();
        }
        let sigma = x.surjection(self.source.dim(x.base));
        self.target.apply(&sigma, img)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap, SimplicialError> {
        if self.target != other.source {
            return Err(SimplicialError::DimensionMismatch);
        }
        Ok(SimplicialMap {
            source: self.source.clone(),
            target: other.target.clone(),
            cell_map: self.cell_map.iter().map(|r| other.apply(r)).collect(),
        })
    }

    pub fn describe(&self) -> String {
        self.source
            .cells()
            .iter()
            .zip(&self.cell_map)
            .map(|(c, r)| format!("{} -> {}\n", c.name, self.target.ref_name(r)))
            .collect()
    }
}

/// Index of the cells of `y` in each dimension by their face tuples.
pub(crate) struct FaceIndex {
    by_faces: Vec<HashMap<Vec<CellRef>, Vec<CellRef>>>,
    vertices: Vec<CellRef>,
}

impl FaceIndex {
    pub fn new(y: &SimplicialSet, top: usize) -> Self {
        let by_faces = (0..=top)
            .map(|n| {
                let mut m: HashMap<Vec<CellRef>, Vec<CellRef>> = HashMap::new();
                if n > 0 {
                    for c in y.all_cells(n) {
                        m.entry(y.faces(&c)).or_default().push(c);
                    }
                }
                m
            })
            .collect();
        FaceIndex {
            by_faces,
            vertices: y.vertices().iter().map(|&v| CellRef::nondegenerate(v)).collect(),
        }
    }

    pub fn candidates(&self, dim: usize, faces: &[CellRef]) -> &[CellRef] {
        if dim == 0 {
            return &self.vertices;
        }
        self.by_faces[dim].get(faces).map_or(&[], Vec::as_slice)
    }
}

/// Every simplicial map `x → y`, ordered lexicographically by the images
/// of the cells of `x` in their listed order.
pub fn enumerate_maps(
    x: &SimplicialSet,
    y: &SimplicialSet,
    budget: &mut Budget,
) -> Result<Vec<SimplicialMap>, SimplicialError> {
    let top = x.cells().iter().map(|c| c.dim).max().unwrap_or(0);
    let index = FaceIndex::new(y, top);
    let mut out = Vec::new();
    let mut partial: Vec<CellRef> = Vec::with_capacity(x.num_cells());
    extend_maps(x, y, &index, &mut partial, budget, &mut |m| {
        out.push(SimplicialMap::new_unchecked(x.clone(), y.clone(), m.to_vec()));
    })?;
    Ok(out)
}

/// Counts maps without materializing them.
pub fn count_maps(x: &SimplicialSet, y: &SimplicialSet, budget: &mut Budget) -> Result<usize, SimplicialError> {
    let top = x.cells().iter().map(|c| c.dim).max().unwrap_or(0);
    let index = FaceIndex::new(y, top);
    let mut n = 0;
    extend_maps(x, y, &index, &mut Vec::new(), budget, &mut |_| n += 1)?;
    Ok(n)
}

pub(crate) fn extend_maps(
    x: &SimplicialSet,
    y: &SimplicialSet,
    index: &FaceIndex,
    partial: &mut Vec<CellRef>,
    budget: &mut Budget,
    emit: &mut dyn FnMut(&[CellRef]),
) -> Result<(), SimplicialError> {
    let id = partial.len();
    if id == x.num_cells() {
        emit(partial);
        return Ok(());
    }
    let c = x.cell(id);
    let faces: Vec<CellRef> = c.faces.iter().map(|f| image_of(x, y, partial, f)).collect();
    for cand in index.candidates(c.dim, &faces) {
        budget.tick()?;
        partial.push(cand.clone());
        extend_maps(x, y, index, partial, budget, emit)?;
        partial.pop();
    }
    Ok(())
}

fn image_of(x: &SimplicialSet, y: &SimplicialSet, partial: &[CellRef], r: &CellRef) -> CellRef {
    let img = &partial[r.base];
    if r.word.is_empty() {
        img.clone()
    } else {
        y.apply(&r.surjection(x.dim(r.base)), img)
    }
}

/// Vertex list of a cell of a standard simplex built by
/// [`standard_simplex`](super::standard::standard_simplex).
pub fn simplex_vertices(dn: &SimplicialSet, x: &CellRef) -> Vec<usize> {
    (0..=dn.ref_dim(x)).map(|j| dn.vertex(x, j)).collect()
}

/// The cell of `Δⁿ` with the given monotone vertex list.
pub fn simplex_ref(dn: &SimplicialSet, n: usize, vertices: &[usize]) -> CellRef {
    let mut distinct = vertices.to_vec();
    distinct.dedup();
    let base = dn
        .cell_id(&simplex_cell_name(&distinct, n))
        .expect("cell of the standard simplex");
    let mut k = 0;
    let values = vertices
        .iter()
        .map(|&v| {
            while distinct[k] != v {
                k += 1;
            }
            k
        })
        .collect();
    CellRef::from_surjection(base, &DeltaMap::new_unchecked(distinct.len() - 1, values))
}

/// The map `Δᵏ → Δⁿ` induced by a monotone `θ: [k] → [n]`.
pub fn simplex_map(theta: &DeltaMap, dk: &SimplicialSet, dn: &SimplicialSet) -> SimplicialMap {
    let n = theta.cod();
    let cell_map = (0..dk.num_cells())
        .map(|id| {
            let verts = simplex_vertices(dk, &CellRef::nondegenerate(id));
            let img: Vec<usize> = verts.iter().map(|&v| theta.apply(v)).collect();
            simplex_ref(dn, n, &img)
        })
        .collect();
    SimplicialMap::new_unchecked(dk.clone(), dn.clone(), cell_map)
}

/// The characteristic map `Δⁿ → X` of an `n`-cell `y`.
pub fn characteristic_map(x: &SimplicialSet, y: &CellRef, dn: &SimplicialSet) -> SimplicialMap {
    let n = x.ref_dim(y);
    let cell_map = (0..dn.num_cells())
        .map(|id| {
            let verts = simplex_vertices(dn, &CellRef::nondegenerate(id));
            x.apply(&DeltaMap::new_unchecked(n, verts), y)
        })
        .collect();
    SimplicialMap::new_unchecked(dn.clone(), x.clone(), cell_map)
}

/// Nondegenerate cells of `x` of dimension `n`, as references.
pub fn nondegenerate_refs(x: &SimplicialSet, n: usize) -> Vec<CellRef> {
    x.cells_of_dim(n)
        .iter()
        .map(|&c: &CellId| CellRef::nondegenerate(c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::standard::{boundary, standard_simplex};

    fn circle() -> SimplicialSet {
        SimplicialSet::builder(2)
            .vertex("v")
            .cell("a", 1, ["v", "v"])
            .build()
            .unwrap()
    }

    #[test]
    fn small_counts() {
        let d0 = standard_simplex(0, 2).unwrap();
        let d1 = standard_simplex(1, 2).unwrap();
        let b = &mut Budget::unlimited();
        assert_eq!(enumerate_maps(&d0, &circle(), b).unwrap().len(), 1);
        assert_eq!(enumerate_maps(&d1, &d0, b).unwrap().len(), 1);
        assert_eq!(enumerate_maps(&d1, &circle(), b).unwrap().len(), 2);
    }

    #[test]
    fn maps_from_simplex_are_cells() {
        let x = boundary(3, 3).unwrap();
        for n in 0..=3 {
            let dn = standard_simplex(n, 3).unwrap();
            let maps = enumerate_maps(&dn, &x, &mut Budget::unlimited()).unwrap();
            assert_eq!(maps.len(), x.count_cells(n));
            let top = CellRef::nondegenerate(dn.num_cells() - 1);
            let mut images: Vec<CellRef> = maps.iter().map(|m| m.apply(&top)).collect();
            images.sort();
            let mut all = x.all_cells(n);
            all.sort();
            assert_eq!(images, all);
            for y in x.all_cells(n) {
                characteristic_map(&x, &y, &dn).validate().unwrap();
            }
        }
    }

    #[test]
    fn simplex_maps_are_simplicial() {
        let d1 = standard_simplex(1, 2).unwrap();
        let d2 = standard_simplex(2, 2).unwrap();
        for theta in crate::simplicial::delta::all_monotone(1, 2) {
            simplex_map(&theta, &d1, &d2).validate().unwrap();
        }
    }

    #[test]
    fn budget_is_enforced() {
        let d1 = standard_simplex(1, 1).unwrap();
        let err = enumerate_maps(&d1, &circle(), &mut Budget::new(1)).unwrap_err();
        assert!(matches!(err, SimplicialError::Budget(_)));
    }
}
