use thiserror::Error;

use super::category::{FinCategory, MorId, ObjId};
use crate::budget::{Budget, BudgetExceeded};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorError {
    #[error("object map has {got} entries, source has {expected} objects")]
    ObjectMapSize { expected: usize, got: usize },
    #[error("morphism map has {got} entries, source has {expected} morphisms")]
    MorphismMapSize { expected: usize, got: usize },
    #[error("image of `{0}` does not have the image endpoints")]
    Endpoints(String),
    #[error("identity of `{0}` is not sent to an identity")]
    Identity(String),
    #[error("F({g}∘{f}) ≠ F({g})∘F({f})")]
    Composition { g: String, f: String },
    #[error("functors do not share source and target")]
    EndpointMismatch,
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// A functor between finite categories, stored as index maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunctor {
    pub source: FinCategory,
    pub target: FinCategory,
    pub object_map: Vec<ObjId>,
    pub morphism_map: Vec<MorId>,
}

impl FinFunctor {
    pub fn new(
        source: FinCategory,
        target: FinCategory,
        object_map: Vec<ObjId>,
        morphism_map: Vec<MorId>,
    ) -> Result<Self, FunctorError> {
        let f = FinFunctor {
            source,
            target,
            object_map,
            morphism_map,
        };
        f.validate()?;
        Ok(f)
    }

    /// Builds a functor from name maps; identities may be omitted.
    pub fn from_names<'a>(
        source: &FinCategory,
        target: &FinCategory,
        objects: impl IntoIterator<Item = (&'a str, &'a str)>,
        morphisms: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self, FunctorError> {
        let unknown = |s: &str| FunctorError::UnknownName(s.to_string());
        let mut object_map = vec![usize::MAX; source.num_objects()];
        for (a, b) in objects {
            let x = source.object_id(a).ok_or_else(|| unknown(a))?;
            object_map[x] = target.object_id(b).ok_or_else(|| unknown(b))?;
        }
        if let Some(x) = object_map.iter().position(|&y| y == usize::MAX) {
            return Err(unknown(source.object_name(x)));
        }
        let mut morphism_map: Vec<MorId> = source
            .morphisms()
            .map(|f| {
                if source.is_identity(f) {
                    target.identity(object_map[f])
                } else {
                    usize::MAX
                }
            })
            .collect();
        for (a, b) in morphisms {
            let f = source.morphism_id(a).ok_or_else(|| unknown(a))?;
            morphism_map[f] = target.morphism_id(b).ok_or_else(|| unknown(b))?;
        }
        if let Some(f) = morphism_map.iter().position(|&g| g == usize::MAX) {
            return Err(unknown(source.morphism_name(f)));
        }
        FinFunctor::new(source.clone(), target.clone(), object_map, morphism_map)
    }

    pub fn identity(c: &FinCategory) -> Self {
        FinFunctor {
            source: c.clone(),
            target: c.clone(),
            object_map: c.objects().collect(),
            morphism_map: c.morphisms().collect(),
        }
    }

    /// The functor `C → D` constant at object `d`.
    pub fn constant(source: &FinCategory, target: &FinCategory, d: ObjId) -> Self {
        FinFunctor {
            source: source.clone(),
            target: target.clone(),
            object_map: vec![d; source.num_objects()],
            morphism_map: vec![target.identity(d); source.num_morphisms()],
        }
    }

    pub fn obj(&self, x: ObjId) -> ObjId {
        self.object_map[x]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.morphism_map[f]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &FinFunctor) -> Result<FinFunctor, FunctorError> {
        if self.target != other.source {
            return Err(FunctorError::EndpointMismatch);
        }
        Ok(FinFunctor {
            source: self.source.clone(),
            target: other.target.clone(),
            object_map: self.object_map.iter().map(|&x| other.obj(x)).collect(),
            morphism_map: self.morphism_map.iter().map(|&f| other.mor(f)).collect(),
        })
    }

    pub fn validate(&self) -> Result<(), FunctorError> {
        let (c, d) = (&self.source, &self.target);
        if self.object_map.len() != c.num_objects() {
            return Err(FunctorError::ObjectMapSize {
                expected: c.num_objects(),
                got: self.object_map.len(),
            });
        }
        if self.morphism_map.len() != c.num_morphisms() {
            return Err(FunctorError::MorphismMapSize {
                expected: c.num_morphisms(),
                got: self.morphism_map.len(),
            });
        }
        for f in c.morphisms() {
            let img = self.mor(f);
            if img >= d.num_morphisms() || d.src(img) != self.obj(c.src(f)) || d.dst(img) != self.obj(c.dst(f)) {
                return Err(FunctorError::Endpoints(c.morphism_name(f).into()));
            }
        }
        for x in c.objects() {
            if self.mor(c.identity(x)) != d.identity(self.obj(x)) {
                return Err(FunctorError::Identity(c.object_name(x).into()));
            }
        }
        for f in c.morphisms() {
            for g in c.morphisms() {
                if let Some(h) = c.compose(g, f) {
                    if d.comp(self.mor(g), self.mor(f)) != self.mor(h) {
                        return Err(FunctorError::Composition {
                            g: c.morphism_name(g).into(),
                            f: c.morphism_name(f).into(),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// All functors `C → D`, in lexicographic order of (object map, morphism
/// map). Each candidate image tried counts against the budget.
pub fn enumerate_functors(
    c: &FinCategory,
    d: &FinCategory,
    budget: &mut Budget,
) -> Result<Vec<FinFunctor>, FunctorError> {
    let non_id: Vec<MorId> = c.non_identities().collect();
    // position of each morphism in the assignment order (identities first)
    let pos = |f: MorId| {
        if c.is_identity(f) {
            None
        } else {
            Some(f - c.num_objects())
        }
    };
    // composition constraints grouped by the last-assigned participant
    let mut checks: Vec<Vec<(MorId, MorId, MorId)>> = vec![Vec::new(); non_id.len()];
    for f in c.morphisms() {
        for g in c.morphisms() {
            if let Some(h) = c.compose(g, f) {
                let last = [pos(f), pos(g), pos(h)].into_iter().flatten().max();
                if let Some(last) = last {
                    checks[last].push((g, f, h));
                }
            }
        }
    }

    let mut out = Vec::new();
    let mut object_map = vec![0; c.num_objects()];
    loop_objects(c, d, 0, &mut object_map, &mut |object_map| {
        let mut morphism_map: Vec<MorId> = c
            .morphisms()
            .map(|f| {
                if c.is_identity(f) {
                    d.identity(object_map[f])
                } else {
                    usize::MAX
                }
            })
            .collect();
        assign_morphisms(
            c,
            d,
            &non_id,
            &checks,
            0,
            object_map,
            &mut morphism_map,
            budget,
            &mut out,
        )
    })?;
    Ok(out)
}

fn loop_objects(
    c: &FinCategory,
    d: &FinCategory,
    i: usize,
    object_map: &mut Vec<ObjId>,
    visit: &mut dyn FnMut(&[ObjId]) -> Result<(), FunctorError>,
) -> Result<(), FunctorError> {
    if i == c.num_objects() {
        return visit(object_map);
    }
    for y in d.objects() {
        object_map[i] = y;
        loop_objects(c, d, i + 1, object_map, visit)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn assign_morphisms(
    c: &FinCategory,
    d: &FinCategory,
    non_id: &[MorId],
    checks: &[Vec<(MorId, MorId, MorId)>],
    i: usize,
    object_map: &[ObjId],
    morphism_map: &mut Vec<MorId>,
    budget: &mut Budget,
    out: &mut Vec<FinFunctor>,
) -> Result<(), FunctorError> {
    if i == non_id.len() {
        out.push(FinFunctor {
            source: c.clone(),
            target: d.clone(),
            object_map: object_map.to_vec(),
            morphism_map: morphism_map.clone(),
        });
        return Ok(());
    }
    let f = non_id[i];
    for &img in d.hom(object_map[c.src(f)], object_map[c.dst(f)]) {
        budget.tick()?;
        morphism_map[f] = img;
        let ok = checks[i]
            .iter()
            .all(|&(g, f, h)| d.comp(morphism_map[g], morphism_map[f]) == morphism_map[h]);
        if ok {
            assign_morphisms(c, d, non_id, checks, i + 1, object_map, morphism_map, budget, out)?;
        }
    }
    morphism_map[f] = usize::MAX;
    Ok(())
}

/// A natural transformation between functors with common endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTransformation {
    /// Component at each source object, a morphism of the target category.
    pub components: Vec<MorId>,
}

/// Exact enumeration of `Nat(F, G)` by backtracking over components.
pub fn enumerate_nat_trans(f: &FinFunctor, g: &FinFunctor) -> Result<Vec<NatTransformation>, FunctorError> {
    if f.source != g.source || f.target != g.target {
        return Err(FunctorError::EndpointMismatch);
    }
    let (c, d) = (&f.source, &f.target);
    let mut out = Vec::new();
    let mut comps = vec![usize::MAX; c.num_objects()];
    nat_backtrack(f, g, c, d, 0, &mut comps, &mut out);
    Ok(out)
}

fn nat_backtrack(
    f: &FinFunctor,
    g: &FinFunctor,
    c: &FinCategory,
    d: &FinCategory,
    x: ObjId,
    comps: &mut Vec<MorId>,
    out: &mut Vec<NatTransformation>,
) {
    if x == c.num_objects() {
        out.push(NatTransformation {
            components: comps.clone(),
        });
        return;
    }
    for &xi in d.hom(f.obj(x), g.obj(x)) {
        comps[x] = xi;
        // naturality squares whose both corners are now assigned
        let natural = c.morphisms().all(|m| {
            let (a, b) = (c.src(m), c.dst(m));
            if a > x || b > x {
                return true;
            }
            d.comp(comps[b], f.mor(m)) == d.comp(g.mor(m), comps[a])
        });
        if natural {
            nat_backtrack(f, g, c, d, x + 1, comps, out);
        }
    }
    comps[x] = usize::MAX;
}
