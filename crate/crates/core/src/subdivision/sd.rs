//! Barycentric subdivision and the last-vertex map.

use std::collections::HashMap;

use crate::simplicial::{Cell, CellId, CellRef, DeltaMap, SimplicialError, SimplicialMap, SimplicialSet};

/// `sd X`, remembering for each cell the nondegenerate cell `y` of `X` it
/// lies in and the strict chain `S_0 ⊊ … ⊊ S_k = [dim y]` of vertex sets
/// (bit masks) it comes from.
#[derive(Debug, Clone)]
pub struct Subdivision {
    pub sset: SimplicialSet,
    pub base: SimplicialSet,
    cells: Vec<(CellId, Vec<u64>)>,
    index: HashMap<(CellId, Vec<u64>), CellId>,
}

fn full(m: usize) -> u64 {
    (1u64 << (m + 1)) - 1
}

fn subset_name(mask: u64, m: usize) -> String {
    let parts: Vec<String> = (0..=m).filter(|v| mask >> v & 1 == 1).map(|v| v.to_string()).collect();
    parts.join(if m < 10 { "" } else { "." })
}

/// Strict chains of nonempty subsets of `[m]` of length `len` ending at
/// `[m]`, each listed bottom first.
fn chains_to_top(m: usize, len: usize) -> Vec<Vec<u64>> {
    fn go(top: u64, remaining: usize, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if remaining == 0 {
            let mut c = acc.clone();
            c.reverse();
            out.push(c);
            return;
        }
        // proper nonempty subsets of `top`, in increasing order
        let mut s = (top - 1) & top;
        let mut subs = Vec::new();
        while s != 0 {
            subs.push(s);
            s = (s - 1) & top;
        }
        subs.reverse();
        for sub in subs {
            acc.push(sub);
            go(sub, remaining - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(full(m), len - 1, &mut vec![full(m)], &mut out);
    out
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|v| mask >> v & 1 == 1).collect()
}

impl Subdivision {
    pub fn new(x: &SimplicialSet) -> Self {
        let top = x.max_dim();
        let mut cells: Vec<(CellId, Vec<u64>)> = Vec::new();
        for k in 0..=top {
            for m in k..=top {
                let chains = chains_to_top(m, k + 1);
                for &y in x.cells_of_dim(m) {
                    for c in &chains {
                        cells.push((y, c.clone()));
                    }
                }
            }
        }
        let index = cells.iter().enumerate().map(|(id, key)| (key.clone(), id)).collect();
        let mut sd = Subdivision {
            sset: SimplicialSet::from_cells(top, Vec::new()).unwrap(),
            base: x.clone(),
            cells,
            index,
        };
        let cells = sd
            .cells
            .iter()
            .map(|(y, chain)| {
                let m = x.dim(*y);
                let parts: Vec<String> = chain.iter().map(|&s| subset_name(s, m)).collect();
                Cell {
                    name: format!("{}|{}", x.cell(*y).name, parts.join("<")),
                    dim: chain.len() - 1,
                    faces: sd.chain_faces(*y, chain),
                }
            })
            .collect();
        sd.sset = SimplicialSet::from_cells(top, cells).expect("subdivision satisfies the simplicial identities");
        sd
    }

    fn chain_faces(&self, y: CellId, chain: &[u64]) -> Vec<CellRef> {
        let k = chain.len() - 1;
        if k == 0 {
            return Vec::new();
        }
        let mut faces: Vec<CellRef> = (0..k)
            .map(|i| {
                let mut shorter = chain.to_vec();
                shorter.remove(i);
                CellRef::nondegenerate(self.index[&(y, shorter)])
            })
            .collect();
        // dropping the top passes to the face of y spanned by S_{k-1}
        let span = members(chain[k - 1]);
        let mono = DeltaMap::new(self.base.dim(y), span.clone()).unwrap();
        let r = self.base.apply(&mono, &CellRef::nondegenerate(y));
        let sigma = r.surjection(self.base.dim(r.base));
        let pushed: Vec<u64> = chain[..k]
            .iter()
            .map(|&s| {
                members(s)
                    .into_iter()
                    .map(|v| 1u64 << sigma.apply(span.iter().position(|&w| w == v).unwrap()))
                    .fold(0, |a, b| a | b)
            })
            .collect();
        faces.push(self.chain_ref(r.base, &pushed));
        faces
    }

    /// The cell of `y` for a chain of subsets that may repeat; the chain
    /// must end at all of `[dim y]`.
    pub fn chain_ref(&self, y: CellId, chain: &[u64]) -> CellRef {
        let word: Vec<usize> = (0..chain.len().saturating_sub(1))
            .rev()
            .filter(|&j| chain[j] == chain[j + 1])
            .collect();
        let mut strict = chain.to_vec();
        strict.dedup();
        CellRef {
            base: self.index[&(y, strict)],
            word,
        }
    }

    /// The cell of `X` and chain a nondegenerate cell of `sd X` comes from.
    pub fn origin(&self, cell: CellId) -> (CellId, &[u64]) {
        let (y, chain) = &self.cells[cell];
        (*y, chain)
    }

    /// The last-vertex map `sd X → X`: the chain `S_0 ⊊ … ⊊ S_k` of `y`
    /// goes to `θ^* y` with `θ(j) = max S_j`.
    pub fn last_vertex(&self) -> SimplicialMap {
        let x = &self.base;
        let cell_map = self
            .cells
            .iter()
            .map(|(y, chain)| {
                let theta = DeltaMap::new(
                    x.dim(*y),
                    chain.iter().map(|&s| 63 - s.leading_zeros() as usize).collect(),
                )
                .unwrap();
                x.apply(&theta, &CellRef::nondegenerate(*y))
            })
            .collect();
        SimplicialMap::new(self.sset.clone(), x.clone(), cell_map).expect("last vertex map is simplicial")
    }
}

pub fn sd(x: &SimplicialSet) -> SimplicialSet {
    Subdivision::new(x).sset
}

pub fn last_vertex(x: &SimplicialSet) -> SimplicialMap {
    Subdivision::new(x).last_vertex()
}

/// `sd f: sd X → sd Y`.
pub fn sd_map(f: &SimplicialMap, source: &Subdivision, target: &Subdivision) -> Result<SimplicialMap, SimplicialError> {
    if f.source != source.base || f.target != target.base {
        return Err(SimplicialError::DimensionMismatch);
    }
    let y = &target.base;
    let cell_map = source
        .cells
        .iter()
        .map(|(c, chain)| {
            let img = &f.cell_map[*c];
            let sigma = img.surjection(y.dim(img.base));
            let pushed: Vec<u64> = chain
                .iter()
                .map(|&s| {
                    members(s)
                        .into_iter()
                        .map(|v| 1u64 << sigma.apply(v))
                        .fold(0, |a, b| a | b)
                })
                .collect();
            target.chain_ref(img.base, &pushed)
        })
        .collect();
    SimplicialMap::new(source.sset.clone(), target.sset.clone(), cell_map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{boundary, standard_simplex};

    #[test]
    fn subdivision_counts() {
        assert_eq!(sd(&standard_simplex(0, 0).unwrap()).nondegenerate_counts(), vec![1]);
        assert_eq!(sd(&standard_simplex(1, 1).unwrap()).nondegenerate_counts(), vec![3, 2]);
        assert_eq!(
            sd(&standard_simplex(2, 2).unwrap()).nondegenerate_counts(),
            vec![7, 12, 6]
        );
        assert_eq!(sd(&boundary(2, 2).unwrap()).nondegenerate_counts(), vec![6, 6, 0]);
    }

    #[test]
    fn last_vertex_on_interval() {
        let d1 = standard_simplex(1, 1).unwrap();
        let s = Subdivision::new(&d1);
        let lv = s.last_vertex();
        let x = &s.sset;
        let e0 = CellRef::nondegenerate(x.cell_id("01|0<01").unwrap());
        let e1 = CellRef::nondegenerate(x.cell_id("01|1<01").unwrap());
        assert_eq!(d1.ref_name(&lv.apply(&e0)), "01");
        assert_eq!(d1.ref_name(&lv.apply(&e1)), "s0 1");
    }

    #[test]
    fn circle_subdivision() {
        let s1 = SimplicialSet::builder(1)
            .vertex("v")
            .cell("a", 1, ["v", "v"])
            .build()
            .unwrap();
        let s = sd(&s1);
        assert_eq!(s.nondegenerate_counts(), vec![2, 2]);
        let s_deg = SimplicialSet::builder(2)
            .vertex("v")
            .cell("a", 1, ["v", "v"])
            .cell("t", 2, ["a", "s0 v", "a"])
            .build();
        let sd2 = sd(&s_deg.unwrap());
        assert_eq!(sd2.nondegenerate_counts()[2], 6);
    }
}
