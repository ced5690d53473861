use super::sets::{FinFunction, FinSet};
use super::SetError;
use crate::budget::Budget;
use crate::fincat::{FinCategory, FinFunctor, MorId, ObjId};

/// A set-valued functor on a finite shape category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub shape: FinCategory,
    sets: Vec<FinSet>,
    maps: Vec<Vec<usize>>,
}

impl Diagram {
    /// `maps[m]` is the function assigned to morphism `m`, as indices into
    /// the sets of its endpoints.
    pub fn new(shape: FinCategory, sets: Vec<FinSet>, maps: Vec<Vec<usize>>) -> Result<Self, SetError> {
        let d = Diagram { shape, sets, maps };
        d.validate()?;
        Ok(d)
    }

    /// Builds a diagram from a set per object and a function per
    /// non-identity morphism; identities are filled in.
    pub fn from_arrows(
        shape: FinCategory,
        sets: Vec<FinSet>,
        arrows: impl FnMut(MorId) -> Vec<usize>,
    ) -> Result<Self, SetError> {
        let mut arrows = arrows;
        let maps = shape
            .morphisms()
            .map(|m| {
                if shape.is_identity(m) {
                    (0..sets.get(shape.src(m)).map_or(0, FinSet::len)).collect()
                } else {
                    arrows(m)
                }
            })
            .collect();
        Diagram::new(shape, sets, maps)
    }

    pub(crate) fn new_unchecked(shape: FinCategory, sets: Vec<FinSet>, maps: Vec<Vec<usize>>) -> Self {
        let d = Diagram { shape, sets, maps };
        debug_assert_eq!(d.validate(), Ok(()));
        d
    }

    pub fn validate(&self) -> Result<(), SetError> {
        let c = &self.shape;
        if self.sets.len() != c.num_objects() {
            return Err(SetError::ShapeMismatch);
        }
        if self.maps.len() != c.num_morphisms() {
            return Err(SetError::ShapeMismatch);
        }
        for m in c.morphisms() {
            let (a, b) = (&self.sets[c.src(m)], &self.sets[c.dst(m)]);
            let map = &self.maps[m];
            if map.len() != a.len() {
                return Err(SetError::NotTotal(c.morphism_name(m).into()));
            }
            if let Some(&bad) = map.iter().find(|&&x| x >= b.len()) {
                return Err(SetError::OutOfRange {
                    set: b.name.clone(),
                    index: bad,
                });
            }
            if c.is_identity(m) && map.iter().enumerate().any(|(i, &j)| i != j) {
                return Err(SetError::NotFunctorial(format!(
                    "{} is not sent to an identity",
                    c.morphism_name(m)
                )));
            }
        }
        for f in c.morphisms() {
            for g in c.morphisms() {
                let Some(h) = c.compose(g, f) else { continue };
                let (mf, mg, mh) = (&self.maps[f], &self.maps[g], &self.maps[h]);
                if (0..mf.len()).any(|a| mg[mf[a]] != mh[a]) {
                    return Err(SetError::NotFunctorial(format!(
                        "F({}∘{}) ≠ F({})∘F({})",
                        c.morphism_name(g),
                        c.morphism_name(f),
                        c.morphism_name(g),
                        c.morphism_name(f)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn set(&self, x: ObjId) -> &FinSet {
        &self.sets[x]
    }

    pub fn sets(&self) -> &[FinSet] {
        &self.sets
    }

    pub fn map(&self, m: MorId) -> &[usize] {
        &self.maps[m]
    }

    #[inline]
    pub fn apply(&self, m: MorId, a: usize) -> usize {
        self.maps[m][a]
    }

    pub fn arrow(&self, m: MorId) -> FinFunction {
        FinFunction {
            source: self.sets[self.shape.src(m)].clone(),
            target: self.sets[self.shape.dst(m)].clone(),
            map: self.maps[m].clone(),
        }
    }

    /// `self ∘ i`.
    pub fn restrict(&self, i: &FinFunctor) -> Result<Diagram, SetError> {
        if i.target != self.shape {
            return Err(SetError::ShapeMismatch);
        }
        let sets = i.source.objects().map(|y| self.sets[i.obj(y)].clone()).collect();
        let maps = i.source.morphisms().map(|m| self.maps[i.mor(m)].clone()).collect();
        Ok(Diagram::new_unchecked(i.source.clone(), sets, maps))
    }

    pub fn total_size(&self) -> usize {
        self.sets.iter().map(FinSet::len).sum()
    }
}

/// A natural transformation between set-valued functors: one function per
/// object.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetNat {
    pub components: Vec<Vec<usize>>,
}

impl SetNat {
    pub fn is_natural(&self, f: &Diagram, g: &Diagram) -> bool {
        let c = &f.shape;
        c.morphisms().all(|m| {
            let (x, y) = (c.src(m), c.dst(m));
            (0..f.set(x).len()).all(|a| self.components[y][f.apply(m, a)] == g.apply(m, self.components[x][a]))
        })
    }

    /// Vertical composite `other ∘ self`.
    pub fn then(&self, other: &SetNat) -> SetNat {
        SetNat {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.iter().map(|&i| b[i]).collect())
                .collect(),
        }
    }
}

/// Exact enumeration of `Nat(F, G)` by constraint-propagating backtracking
/// over the element images.
pub fn enumerate_set_nat(f: &Diagram, g: &Diagram, budget: &mut Budget) -> Result<Vec<SetNat>, SetError> {
    if f.shape != g.shape {
        return Err(SetError::ShapeMismatch);
    }
    let c = &f.shape;
    // flat variable numbering: (object, element)
    let mut offset = Vec::with_capacity(c.num_objects() + 1);
    let mut acc = 0;
    for x in c.objects() {
        offset.push(acc);
        acc += f.set(x).len();
    }
    offset.push(acc);
    let mut vars = Vec::with_capacity(acc);
    for x in c.objects() {
        for a in 0..f.set(x).len() {
            vars.push((x, a));
        }
    }
    // constraints (u, v, m): value(v) = G(m)(value(u)) where v = F(m)(u)
    let mut cons: Vec<Vec<(usize, usize, MorId)>> = vec![Vec::new(); acc];
    for m in c.non_identities() {
        let (x, y) = (c.src(m), c.dst(m));
        for a in 0..f.set(x).len() {
            let u = offset[x] + a;
            let v = offset[y] + f.apply(m, a);
            let last = u.max(v);
            cons[last].push((u, v, m));
        }
    }
    let mut out = Vec::new();
    let mut values = vec![usize::MAX; acc];
    nat_search(g, &vars, &cons, 0, &mut values, budget, &mut out)?;
    Ok(out
        .into_iter()
        .map(|vals| SetNat {
            components: c.objects().map(|x| vals[offset[x]..offset[x + 1]].to_vec()).collect(),
        })
        .collect())
}

#[allow(clippy::too_many_arguments)]
fn nat_search(
    g: &Diagram,
    vars: &[(ObjId, usize)],
    cons: &[Vec<(usize, usize, MorId)>],
    i: usize,
    values: &mut Vec<usize>,
    budget: &mut Budget,
    out: &mut Vec<Vec<usize>>,
) -> Result<(), SetError> {
    if i == vars.len() {
        out.push(values.clone());
        return Ok(());
    }
    let (x, _) = vars[i];
    for b in 0..g.set(x).len() {
        budget.tick()?;
        values[i] = b;
        let ok = cons[i].iter().all(|&(u, v, m)| values[v] == g.apply(m, values[u]));
        if ok {
            nat_search(g, vars, cons, i + 1, values, budget, out)?;
        }
    }
    values[i] = usize::MAX;
    Ok(())
}

/// Every set-valued functor on `shape` whose sets are `{0..k-1}` with
/// `k ≤ max_size`, in a fixed deterministic order.
pub fn enumerate_set_functors(
    shape: &FinCategory,
    max_size: usize,
    budget: &mut Budget,
) -> Result<Vec<Diagram>, SetError> {
    let n = shape.num_objects();
    let non_id: Vec<MorId> = shape.non_identities().collect();
    let pos = |m: MorId| if shape.is_identity(m) { None } else { Some(m - n) };
    let mut checks: Vec<Vec<(MorId, MorId, MorId)>> = vec![Vec::new(); non_id.len()];
    for f in shape.morphisms() {
        for g in shape.morphisms() {
            if let Some(h) = shape.compose(g, f) {
                if let Some(last) = [pos(f), pos(g), pos(h)].into_iter().flatten().max() {
                    checks[last].push((g, f, h));
                }
            }
        }
    }
    let mut out = Vec::new();
    for sizes in super::sets::tuples(&vec![max_size + 1; n]) {
        let sets: Vec<FinSet> = shape
            .objects()
            .map(|x| FinSet::range(shape.object_name(x), sizes[x]))
            .collect();
        let mut maps: Vec<Vec<usize>> = shape
            .morphisms()
            .map(|m| {
                if shape.is_identity(m) {
                    (0..sizes[m]).collect()
                } else {
                    Vec::new()
                }
            })
            .collect();
        functor_search(shape, &sizes, &non_id, &checks, 0, &sets, &mut maps, budget, &mut out)?;
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn functor_search(
    shape: &FinCategory,
    sizes: &[usize],
    non_id: &[MorId],
    checks: &[Vec<(MorId, MorId, MorId)>],
    i: usize,
    sets: &[FinSet],
    maps: &mut Vec<Vec<usize>>,
    budget: &mut Budget,
    out: &mut Vec<Diagram>,
) -> Result<(), SetError> {
    if i == non_id.len() {
        out.push(Diagram::new_unchecked(shape.clone(), sets.to_vec(), maps.clone()));
        return Ok(());
    }
    let m = non_id[i];
    let (a, b) = (sizes[shape.src(m)], sizes[shape.dst(m)]);
    for map in super::sets::tuples(&vec![b; a]) {
        budget.tick()?;
        maps[m] = map;
        let ok = checks[i]
            .iter()
            .all(|&(g, f, h)| (0..maps[f].len()).all(|x| maps[g][maps[f][x]] == maps[h][x]));
        if ok {
            functor_search(shape, sizes, non_id, checks, i + 1, sets, maps, budget, out)?;
        }
    }
    maps[m] = Vec::new();
    Ok(())
}
