//! Nerves of finite categories, and the nerves of `EG` and `BG`.

use std::collections::HashMap;

use super::maps::SimplicialMap;
use super::sset::{Cell, CellId, CellRef, SimplicialSet};
use super::SimplicialError;
use crate::fincat::{FinCategory, FinFunctor, MorId, Morphism, ObjId};

/// The nerve of a category, keeping track of which chain each cell is.
/// Nondegenerate `n`-cells are chains of `n` composable non-identity
/// morphisms; a chain containing identities is a degeneracy of the chain
/// with them removed.
#[derive(Debug, Clone)]
pub struct Nerve {
    pub sset: SimplicialSet,
    pub category: FinCategory,
    /// Start object and morphisms of each cell.
    chains: Vec<(ObjId, Vec<MorId>)>,
    index: HashMap<(ObjId, Vec<MorId>), CellId>,
}

impl Nerve {
    pub fn new(c: &FinCategory, max_dim: usize) -> Self {
        let mut chains: Vec<(ObjId, Vec<MorId>)> = c.objects().map(|x| (x, Vec::new())).collect();
        let mut level: Vec<usize> = (0..chains.len()).collect();
        for _ in 1..=max_dim {
            let mut next = Vec::new();
            for &id in &level {
                let (x0, chain) = chains[id].clone();
                let end = chain.last().map_or(x0, |&f| c.dst(f));
                for g in c.non_identities().filter(|&g| c.src(g) == end) {
                    let mut longer = chain.clone();
                    longer.push(g);
                    next.push(chains.len());
                    chains.push((x0, longer));
                }
            }
            if next.is_empty() {
                break;
            }
            level = next;
        }
        let index: HashMap<(ObjId, Vec<MorId>), CellId> =
            chains.iter().enumerate().map(|(id, key)| (key.clone(), id)).collect();
        let mut nerve = Nerve {
            sset: SimplicialSet::from_cells(max_dim, Vec::new()).unwrap(),
            category: c.clone(),
            chains,
            index,
        };
        let cells = nerve
            .chains
            .iter()
            .map(|(x0, chain)| {
                let name = if chain.is_empty() {
                    c.object_name(*x0).to_string()
                } else {
                    chain.iter().map(|&f| c.morphism_name(f)).collect::<Vec<_>>().join(";")
                };
                Cell {
                    name,
                    dim: chain.len(),
                    faces: nerve.chain_faces(*x0, chain),
                }
            })
            .collect();
        nerve.sset = SimplicialSet::from_cells(max_dim, cells).expect("nerve satisfies the simplicial identities");
        nerve
    }

    fn chain_faces(&self, x0: ObjId, chain: &[MorId]) -> Vec<CellRef> {
        let c = &self.category;
        let n = chain.len();
        if n == 0 {
            return Vec::new();
        }
        (0..=n)
            .map(|i| {
                if i == 0 {
                    self.chain_ref(c.dst(chain[0]), &chain[1..])
                } else if i == n {
                    self.chain_ref(x0, &chain[..n - 1])
                } else {
                    let mut shorter = chain[..i - 1].to_vec();
                    shorter.push(c.comp(chain[i], chain[i - 1]));
                    shorter.extend_from_slice(&chain[i + 1..]);
                    self.chain_ref(x0, &shorter)
                }
            })
            .collect()
    }

    /// The cell of a composable chain starting at `x0`, identities allowed.
    pub fn chain_ref(&self, x0: ObjId, chain: &[MorId]) -> CellRef {
        let c = &self.category;
        let reduced: Vec<MorId> = chain.iter().copied().filter(|&f| !c.is_identity(f)).collect();
        let word: Vec<usize> = (0..chain.len()).rev().filter(|&k| c.is_identity(chain[k])).collect();
        let base = self.index[&(x0, reduced)];
        CellRef { base, word }
    }

    /// Start object and morphisms of a nondegenerate cell.
    pub fn chain(&self, cell: CellId) -> (ObjId, &[MorId]) {
        let (x0, chain) = &self.chains[cell];
        (*x0, chain)
    }

    /// Start object and morphisms of any cell, identities included.
    pub fn expand(&self, r: &CellRef) -> (ObjId, Vec<MorId>) {
        let (x0, reduced) = self.chain(r.base);
        let c = &self.category;
        let n = reduced.len() + r.word.len();
        let mut out = Vec::with_capacity(n);
        let mut next = reduced.iter();
        let mut at = x0;
        for k in 0..n {
            if r.word.contains(&k) {
                out.push(c.identity(at));
            } else {
                let &f = next.next().unwrap();
                out.push(f);
                at = c.dst(f);
            }
        }
        (x0, out)
    }
}

pub fn nerve(c: &FinCategory, max_dim: usize) -> SimplicialSet {
    Nerve::new(c, max_dim).sset
}

/// `N(F): N(C) → N(D)`.
pub fn nerve_map(f: &FinFunctor, source: &Nerve, target: &Nerve) -> Result<SimplicialMap, SimplicialError> {
    if source.category != f.source || target.category != f.target {
        return Err(SimplicialError::DimensionMismatch);
    }
    let cell_map = (0..source.sset.num_cells())
        .map(|id| {
            let (x0, chain) = source.chain(id);
            let image: Vec<MorId> = chain.iter().map(|&m| f.mor(m)).collect();
            target.chain_ref(f.obj(x0), &image)
        })
        .collect();
    SimplicialMap::new(source.sset.clone(), target.sset.clone(), cell_map)
}

/// The nerves of `EG` (the indiscrete category on the elements of `G`)
/// and `BG`, with the projection `p` sending `g → h` to `h g⁻¹`.
#[derive(Debug, Clone)]
pub struct ClassifyingNerves {
    pub eg: Nerve,
    pub bg: Nerve,
    pub projection: SimplicialMap,
}

/// `bg` must be a group seen as a one-object category.
pub fn nerve_eg(bg: &FinCategory, max_dim: usize) -> Result<ClassifyingNerves, SimplicialError> {
    if bg.num_objects() != 1 || !bg.is_groupoid() {
        return Err(SimplicialError::NotAGroup);
    }
    let n = bg.num_morphisms();
    let unit_name = if bg.morphisms().any(|m| bg.morphism_name(m) == "e") {
        "1"
    } else {
        "e"
    };
    let elements: Vec<String> = bg
        .morphisms()
        .map(|m| {
            if m == 0 {
                unit_name.to_string()
            } else {
                bg.morphism_name(m).to_string()
            }
        })
        .collect();
    let mut non_identity = Vec::new();
    let mut ids = HashMap::new();
    for a in 0..n {
        for b in 0..n {
            if a != b {
                ids.insert((a, b), n + non_identity.len());
                non_identity.push(Morphism {
                    name: format!("({},{})", elements[a], elements[b]),
                    src: a,
                    dst: b,
                });
            }
        }
    }
    let ends: Vec<(usize, usize)> = non_identity.iter().map(|m| (m.src, m.dst)).collect();
    let eg = FinCategory::from_parts(elements, non_identity, |g, f| {
        let (a, _) = ends[f - n];
        let (_, c) = ends[g - n];
        if a == c {
            a
        } else {
            ids[&(a, c)]
        }
    });
    let morphism_map = eg
        .morphisms()
        .map(|m| {
            let (g, h) = (eg.src(m), eg.dst(m));
            bg.comp(h, bg.inverse(g).unwrap())
        })
        .collect();
    let p =
        FinFunctor::new(eg.clone(), bg.clone(), vec![0; n], morphism_map).map_err(|_| SimplicialError::NotAGroup)?;
    let eg_nerve = Nerve::new(&eg, max_dim);
    let bg_nerve = Nerve::new(bg, max_dim);
    let projection = nerve_map(&p, &eg_nerve, &bg_nerve)?;
    Ok(ClassifyingNerves {
        eg: eg_nerve,
        bg: bg_nerve,
        projection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::examples::*;

    #[test]
    fn small_nerves() {
        assert_eq!(nerve(&terminal(), 3).nondegenerate_counts(), vec![1, 0, 0, 0]);
        let arrow = nerve(&walking_arrow(), 3);
        assert_eq!(arrow.nondegenerate_counts(), vec![2, 1, 0, 0]);
        assert_eq!(
            (0..=3).map(|n| arrow.count_cells(n)).collect::<Vec<_>>(),
            vec![2, 3, 4, 5]
        );
    }

    #[test]
    fn classifying_space_counts() {
        let z2 = cyclic_group(2);
        let nerves = nerve_eg(&z2, 3).unwrap();
        let bg: Vec<usize> = (0..=3).map(|n| nerves.bg.sset.count_cells(n)).collect();
        let eg: Vec<usize> = (0..=3).map(|n| nerves.eg.sset.count_cells(n)).collect();
        assert_eq!(bg, vec![1, 2, 4, 8]);
        assert_eq!(eg, vec![2, 4, 8, 16]);
        for n in 0..=3 {
            let mut fibers: HashMap<CellRef, usize> = HashMap::new();
            for x in nerves.eg.sset.all_cells(n) {
                *fibers.entry(nerves.projection.apply(&x)).or_default() += 1;
            }
            assert_eq!(fibers.len(), bg[n]);
            assert!(fibers.values().all(|&k| k == 2));
        }
    }

    #[test]
    fn trivial_group_nerves_are_points() {
        let nerves = nerve_eg(&terminal(), 2).unwrap();
        assert_eq!(nerves.eg.sset.nondegenerate_counts(), vec![1, 0, 0]);
        assert_eq!(nerves.bg.sset.nondegenerate_counts(), vec![1, 0, 0]);
        assert!(matches!(nerve_eg(&walking_arrow(), 2), Err(SimplicialError::NotAGroup)));
    }

    #[test]
    fn chains_expand_back() {
        let c = linear_order(3);
        let n = Nerve::new(&c, 3);
        for k in 0..=3 {
            for x in n.sset.all_cells(k) {
                let (x0, chain) = n.expand(&x);
                assert_eq!(n.chain_ref(x0, &chain), x);
            }
        }
    }

    #[test]
    fn nerve_is_functorial() {
        let (a, b, c) = (linear_order(2), linear_order(3), walking_iso());
        let b_ = &mut crate::Budget::unlimited();
        let (na, nb, nc) = (Nerve::new(&a, 2), Nerve::new(&b, 2), Nerve::new(&c, 2));
        for f in crate::fincat::enumerate_functors(&a, &b, b_).unwrap() {
            for g in crate::fincat::enumerate_functors(&b, &c, b_).unwrap() {
                let gf = f.then(&g).unwrap();
                let lhs = nerve_map(&gf, &na, &nc).unwrap();
                let rhs = nerve_map(&f, &na, &nb)
                    .unwrap()
                    .then(&nerve_map(&g, &nb, &nc).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
