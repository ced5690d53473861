//! `Ex`, right adjoint to subdivision, and its finite iterates.

use std::collections::HashMap;

use super::sd::{sd_map, Subdivision};
use crate::budget::Budget;
use crate::simplicial::{
    characteristic_map, classify, enumerate_maps, simplex_map, standard_simplex, Cell, CellRef, ClassifyReport,
    DeltaMap, SimplicialError, SimplicialMap, SimplicialSet,
};

/// `Ex X` truncated at `max_dim X`: `n`-cells are maps `sd Δⁿ → X`.
#[derive(Debug, Clone)]
pub struct ExComplex {
    pub sset: SimplicialSet,
    pub base: SimplicialSet,
    /// `sd Δⁿ` for `n = 0, …, max_dim`.
    pub simplices: Vec<Subdivision>,
    /// Every map `sd Δⁿ → X` (as images of the cells of `sd Δⁿ`) with its
    /// normal form in `Ex X`.
    levels: Vec<HashMap<Vec<CellRef>, CellRef>>,
    /// The underlying map of each nondegenerate cell.
    maps: Vec<Vec<CellRef>>,
}

/// `φ ∘ g` for `g: sd Δᵃ → sd Δᵇ` and `φ: sd Δᵇ → X` given by images.
fn precompose(x: &SimplicialSet, dom: &SimplicialSet, phi: &[CellRef], g: &SimplicialMap) -> Vec<CellRef> {
    g.cell_map
        .iter()
        .map(|r| {
            let img = &phi[r.base];
            if r.word.is_empty() {
                img.clone()
            } else {
                x.apply(&r.surjection(dom.dim(r.base)), img)
            }
        })
        .collect()
}

impl ExComplex {
    pub fn new(x: &SimplicialSet, budget: &mut Budget) -> Result<Self, SimplicialError> {
        let top = x.max_dim();
        let deltas: Vec<SimplicialSet> = (0..=top).map(|n| standard_simplex(n, n).unwrap()).collect();
        let simplices: Vec<Subdivision> = deltas.iter().map(Subdivision::new).collect();
        // sd δ_i: sd Δⁿ⁻¹ → sd Δⁿ and sd σ_i: sd Δⁿ → sd Δⁿ⁻¹, indexed by n
        let mut face_maps: Vec<Vec<SimplicialMap>> = vec![Vec::new()];
        let mut degeneracy_maps: Vec<Vec<SimplicialMap>> = vec![Vec::new()];
        for n in 1..=top {
            let (lo, hi) = (&deltas[n - 1], &deltas[n]);
            face_maps.push(
                (0..=n)
                    .map(|i| {
                        sd_map(
                            &simplex_map(&DeltaMap::face(n, i), lo, hi),
                            &simplices[n - 1],
                            &simplices[n],
                        )
                    })
                    .collect::<Result<_, _>>()?,
            );
            degeneracy_maps.push(
                (0..n)
                    .map(|i| {
                        sd_map(
                            &simplex_map(&DeltaMap::degeneracy(n - 1, i), hi, lo),
                            &simplices[n],
                            &simplices[n - 1],
                        )
                    })
                    .collect::<Result<_, _>>()?,
            );
        }

        let mut cells: Vec<Cell> = Vec::new();
        let mut maps: Vec<Vec<CellRef>> = Vec::new();
        let mut levels: Vec<HashMap<Vec<CellRef>, CellRef>> = Vec::new();
        for n in 0..=top {
            let sdn = &simplices[n].sset;
            let mut level = HashMap::new();
            let mut count = 0;
            for phi in enumerate_maps(sdn, x, budget)? {
                let phi = phi.cell_map;
                let mut normal = None;
                for i in 0..n {
                    let face = precompose(x, sdn, &phi, &face_maps[n][i]);
                    let back = precompose(x, &simplices[n - 1].sset, &face, &degeneracy_maps[n][i]);
                    if back == phi {
                        let inner: &CellRef = &levels[n - 1][&face];
                        normal = Some(crate::simplicial::degenerate_ref(inner, i, cells[inner.base].dim));
                        break;
                    }
                }
                let r = match normal {
                    Some(r) => r,
                    None => {
                        let faces = if n == 0 {
                            Vec::new()
                        } else {
                            (0..=n)
                                .map(|i| levels[n - 1][&precompose(x, sdn, &phi, &face_maps[n][i])].clone())
                                .collect()
                        };
                        let id = cells.len();
                        cells.push(Cell {
                            name: format!("x{n}.{count}"),
                            dim: n,
                            faces,
                        });
                        maps.push(phi.clone());
                        count += 1;
                        CellRef::nondegenerate(id)
                    }
                };
                level.insert(phi, r);
            }
            levels.push(level);
        }
        let sset = SimplicialSet::from_cells(top, cells)?;
        Ok(ExComplex {
            sset,
            base: x.clone(),
            simplices,
            levels,
            maps,
        })
    }

    /// Normal form of a map `sd Δⁿ → X`, given by images.
    pub fn cell_of(&self, n: usize, phi: &[CellRef]) -> Option<&CellRef> {
        self.levels.get(n)?.get(phi)
    }

    /// The map `sd Δⁿ → X` underlying a nondegenerate cell.
    pub fn underlying(&self, cell: usize) -> SimplicialMap {
        let n = self.sset.dim(cell);
        SimplicialMap::new(
            self.simplices[n].sset.clone(),
            self.base.clone(),
            self.maps[cell].clone(),
        )
        .expect("enumerated maps are simplicial")
    }

    /// Total number of `n`-cells, i.e. of maps `sd Δⁿ → X`.
    pub fn total_cells(&self, n: usize) -> usize {
        self.levels.get(n).map_or(0, HashMap::len)
    }

    /// The unit `X → Ex X`: a cell `y` goes to its characteristic map
    /// precomposed with the last-vertex map.
    pub fn unit(&self) -> SimplicialMap {
        let x = &self.base;
        let cell_map = (0..x.num_cells())
            .map(|y| {
                let n = x.dim(y);
                let dn = standard_simplex(n, n).unwrap();
                let chi = characteristic_map(x, &CellRef::nondegenerate(y), &dn);
                let phi = self.simplices[n].last_vertex().then(&chi).unwrap().cell_map;
                self.levels[n][&phi].clone()
            })
            .collect();
        SimplicialMap::new(x.clone(), self.sset.clone(), cell_map).expect("unit is simplicial")
    }
}

/// `Ex X` up to dimension `max_dim X`; raise the bound with
/// [`SimplicialSet::with_max_dim`] to see higher cells.
pub fn ex(x: &SimplicialSet, budget: &mut Budget) -> Result<SimplicialSet, SimplicialError> {
    Ok(ExComplex::new(x, budget)?.sset)
}

pub fn ex_unit(x: &SimplicialSet, budget: &mut Budget) -> Result<SimplicialMap, SimplicialError> {
    Ok(ExComplex::new(x, budget)?.unit())
}

/// Horn report for one stage of the iteration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageReport {
    pub stage: usize,
    pub nondegenerate_counts: Vec<usize>,
    pub horns: ClassifyReport,
}

/// `Ex^k X` together with a horn report for each of the stages `0..=k`.
pub fn ex_iter(
    x: &SimplicialSet,
    k: usize,
    max_dim: usize,
    budget: &mut Budget,
) -> Result<(SimplicialSet, Vec<StageReport>), SimplicialError> {
    let mut cur = x.clone();
    let mut reports = Vec::new();
    for stage in 0..=k {
        if stage > 0 {
            cur = ex(&cur, budget)?;
        }
        reports.push(StageReport {
            stage,
            nondegenerate_counts: cur.nondegenerate_counts(),
            horns: classify(&cur, max_dim, budget)?,
        });
    }
    Ok((cur, reports))
}
