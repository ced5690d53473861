//! Horn filling and the Kan / quasi-category classification.

use std::collections::HashMap;
use std::fmt;

use super::maps::{enumerate_maps, SimplicialMap};
use super::sset::{CellRef, SimplicialSet};
use super::standard::{horn, simplex_cell_name};
use super::SimplicialError;
use crate::budget::Budget;

fn face_names(n: usize, k: usize) -> Vec<(usize, String)> {
    (0..=n)
        .filter(|&i| i != k)
        .map(|i| {
            let verts: Vec<usize> = (0..=n).filter(|&v| v != i).collect();
            (i, simplex_cell_name(&verts, n))
        })
        .collect()
}

/// All `n`-cells of `x`, degenerate ones included, whose faces other than
/// the `k`-th agree with the given horn `Λⁿ_k → x`.
pub fn horn_fillers(
    x: &SimplicialSet,
    n: usize,
    k: usize,
    assignment: &SimplicialMap,
) -> Result<Vec<CellRef>, SimplicialError> {
    let h = horn(n, k, assignment.source.max_dim())?;
    if assignment.source != h || &assignment.target != x {
        return Err(SimplicialError::InvalidAssignment(format!("not a map Λ^{n}_{k} → X")));
    }
    assignment
        .validate()
        .map_err(|e| SimplicialError::InvalidAssignment(e.to_string()))?;
    if n > x.max_dim() {
        return Err(SimplicialError::BadIndices(format!(
            "n = {n} exceeds max_dim = {}",
            x.max_dim()
        )));
    }
    let required: Vec<(usize, CellRef)> = face_names(n, k)
        .into_iter()
        .map(|(i, name)| (i, assignment.cell_map[h.cell_id(&name).unwrap()].clone()))
        .collect();
    Ok(x.all_cells(n)
        .into_iter()
        .filter(|c| required.iter().all(|(i, r)| &x.face(c, *i).unwrap() == r))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Kan,
    Quasi,
    Neither,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Kan => "kan",
            Verdict::Quasi => "quasi",
            Verdict::Neither => "neither",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HornStat {
    pub n: usize,
    pub k: usize,
    pub assignments: usize,
    pub unfilled: usize,
    /// Horns with more than one filler.
    pub ambiguous: usize,
}

impl HornStat {
    pub fn is_inner(&self) -> bool {
        0 < self.k && self.k < self.n
    }
}

/// An unfillable horn: the images of the horn's faces `∂_i`, `i ≠ k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HornWitness {
    pub n: usize,
    pub k: usize,
    pub faces: Vec<(usize, String)>,
}

impl fmt::Display for HornWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let faces: Vec<String> = self.faces.iter().map(|(i, r)| format!("d{i}={r}")).collect();
        write!(f, "Λ^{}_{} with {}", self.n, self.k, faces.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifyReport {
    pub verdict: Verdict,
    pub max_dim: usize,
    pub stats: Vec<HornStat>,
    /// First unfillable inner horn, if any.
    pub inner_witness: Option<HornWitness>,
    /// First unfillable outer horn, if any.
    pub outer_witness: Option<HornWitness>,
}

impl ClassifyReport {
    pub fn unfilled(&self) -> usize {
        self.stats.iter().map(|s| s.unfilled).sum()
    }

    pub fn unfilled_inner(&self) -> usize {
        self.stats.iter().filter(|s| s.is_inner()).map(|s| s.unfilled).sum()
    }
}

/// Enumerates every horn `Λⁿ_k → x` for `1 ≤ n ≤ min(max_dim, x.max_dim())`
/// and counts those without a filler.
pub fn classify(x: &SimplicialSet, max_dim: usize, budget: &mut Budget) -> Result<ClassifyReport, SimplicialError> {
    let top = max_dim.min(x.max_dim());
    let mut stats = Vec::new();
    let mut inner_witness = None;
    let mut outer_witness = None;
    for n in 1..=top {
        let cells = x.all_cells(n);
        let faces: Vec<Vec<CellRef>> = cells.iter().map(|c| x.faces(c)).collect();
        for k in 0..=n {
            let mut fillers: HashMap<Vec<&CellRef>, usize> = HashMap::new();
            for f in &faces {
                let key: Vec<&CellRef> = f.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, r)| r).collect();
                *fillers.entry(key).or_default() += 1;
            }
            let h = horn(n, k, n)?;
            let slots: Vec<(usize, usize)> = face_names(n, k)
                .into_iter()
                .map(|(i, name)| (i, h.cell_id(&name).unwrap()))
                .collect();
            let maps = enumerate_maps(&h, x, budget)?;
            let mut stat = HornStat {
                n,
                k,
                assignments: maps.len(),
                unfilled: 0,
                ambiguous: 0,
            };
            let inner = 0 < k && k < n;
            for m in &maps {
                let key: Vec<&CellRef> = slots.iter().map(|&(_, id)| &m.cell_map[id]).collect();
                match fillers.get(&key).copied().unwrap_or(0) {
                    0 => {
                        stat.unfilled += 1;
                        let slot = if inner { &mut inner_witness } else { &mut outer_witness };
                        if slot.is_none() {
                            *slot = Some(HornWitness {
                                n,
                                k,
                                faces: slots.iter().map(|&(i, id)| (i, x.ref_name(&m.cell_map[id]))).collect(),
                            });
                        }
                    }
                    1 => {}
                    _ => stat.ambiguous += 1,
                }
            }
            stats.push(stat);
        }
    }
    let verdict = if inner_witness.is_some() {
        Verdict::Neither
    } else if outer_witness.is_some() {
        Verdict::Quasi
    } else {
        Verdict::Kan
    };
    Ok(ClassifyReport {
        verdict,
        max_dim: top,
        stats,
        inner_witness,
        outer_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::examples::*;
    use crate::simplicial::nerve::{nerve, Nerve};

    #[test]
    fn classifications() {
        let b = &mut Budget::unlimited();
        assert_eq!(
            classify(&nerve(&cyclic_group(2), 3), 3, b).unwrap().verdict,
            Verdict::Kan
        );
        let arrow = classify(&nerve(&walking_arrow(), 2), 2, b).unwrap();
        assert_eq!(arrow.verdict, Verdict::Quasi);
        let w = arrow.outer_witness.unwrap();
        assert_eq!((w.n, w.k), (2, 0));
        let h = classify(&horn(2, 1, 2).unwrap(), 2, b).unwrap();
        assert_eq!(h.verdict, Verdict::Neither);
        assert_eq!(h.inner_witness.unwrap().k, 1);
    }

    #[test]
    fn fillers_in_the_walking_arrow() {
        let n = Nerve::new(&walking_arrow(), 2);
        let x = &n.sset;
        let h20 = horn(2, 0, 2).unwrap();
        // ∂2 = 01 ↦ f and ∂1 = 02 ↦ id_A: would need a left inverse of f
        let a = SimplicialMap::from_names(
            &h20,
            x,
            [("0", "A"), ("1", "B"), ("2", "A"), ("01", "f"), ("02", "s0 A")],
        )
        .unwrap();
        assert!(horn_fillers(x, 2, 0, &a).unwrap().is_empty());
        // both edges f: filled by (f, id_B)
        let a =
            SimplicialMap::from_names(&h20, x, [("0", "A"), ("1", "B"), ("2", "B"), ("01", "f"), ("02", "f")]).unwrap();
        assert_eq!(horn_fillers(x, 2, 0, &a).unwrap(), vec![x.parse_ref("s1 f").unwrap()]);
        let h21 = horn(2, 1, 2).unwrap();
        let a = SimplicialMap::from_names(
            &h21,
            x,
            [("0", "A"), ("1", "B"), ("2", "B"), ("01", "f"), ("12", "s0 B")],
        )
        .unwrap();
        assert_eq!(horn_fillers(x, 2, 1, &a).unwrap().len(), 1);
    }

    #[test]
    fn point_fills_with_degenerate_cell() {
        let pt = nerve(&terminal(), 3);
        let h = horn(3, 1, 3).unwrap();
        let maps = enumerate_maps(&h, &pt, &mut Budget::unlimited()).unwrap();
        assert_eq!(maps.len(), 1);
        let f = horn_fillers(&pt, 3, 1, &maps[0]).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].word.len(), 3);
    }
}
