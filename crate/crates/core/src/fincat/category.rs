use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub type ObjId = usize;
pub type MorId = usize;

/// Prefix reserved for synthesized identity morphisms.
pub const IDENTITY_PREFIX: &str = "id_";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("morphism name `{0}` uses the reserved `id_` prefix")]
    ReservedName(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("bad endpoints: {0}")]
    BadEndpoints(String),
    #[error("composite {g}∘{f} is assigned twice ({first} and {second})")]
    ConflictingComposite {
        g: String,
        f: String,
        first: String,
        second: String,
    },
    #[error("composite {g}∘{f} violates the identity law (assigned {assigned})")]
    IdentityViolation { g: String, f: String, assigned: String },
    #[error("missing composite {g}∘{f}")]
    MissingComposite { g: String, f: String },
    #[error("({h}∘{g})∘{f} = {left} but {h}∘({g}∘{f}) = {right}")]
    NonAssociative {
        h: String,
        g: String,
        f: String,
        left: String,
        right: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub src: ObjId,
    pub dst: ObjId,
}

#[derive(PartialEq, Eq)]
struct CategoryData {
    objects: Vec<String>,
    // identities come first: morphism `x` is the identity on object `x`
    morphisms: Vec<Morphism>,
    compose: Vec<Option<MorId>>,
    homs: Vec<Vec<MorId>>,
    object_index: HashMap<String, ObjId>,
    morphism_index: HashMap<String, MorId>,
}

/// A finite category with an explicit total composition table.
///
/// The identity of object `x` is always the morphism with index `x`, named
/// `id_<object>`. Cloning is cheap; the data is shared.
#[derive(Clone, PartialEq, Eq)]
pub struct FinCategory {
    inner: Arc<CategoryData>,
}

impl fmt::Debug for FinCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FinCategory")
            .field("objects", &self.inner.objects)
            .field("morphisms", &self.inner.morphisms.len())
            .finish()
    }
}

pub fn identity_name(object: &str) -> String {
    format!("{IDENTITY_PREFIX}{object}")
}

impl FinCategory {
    pub fn builder() -> CategoryBuilder {
        CategoryBuilder::default()
    }

    /// Assembles a category from already consistent data. `morphisms` lists
    /// the non-identity morphisms; `compose(g, f)` is asked only for
    /// composable pairs of non-identity morphisms and must return the index
    /// (in the final numbering, identities first) of `g∘f`.
    pub(crate) fn from_parts(
        objects: Vec<String>,
        non_identity: Vec<Morphism>,
        mut compose: impl FnMut(MorId, MorId) -> MorId,
    ) -> FinCategory {
        let n = objects.len();
        let mut morphisms: Vec<Morphism> = objects
            .iter()
            .enumerate()
            .map(|(x, name)| Morphism {
                name: identity_name(name),
                src: x,
                dst: x,
            })
            .collect();
        morphisms.extend(non_identity);
        let m = morphisms.len();
        let mut table = vec![None; m * m];
        for g in 0..m {
            for f in 0..m {
                if morphisms[f].dst != morphisms[g].src {
                    continue;
                }
                table[g * m + f] = Some(if g < n {
                    f
                } else if f < n {
                    g
                } else {
                    compose(g, f)
                });
            }
        }
        Self::assemble(objects, morphisms, table)
    }

    fn assemble(objects: Vec<String>, morphisms: Vec<Morphism>, compose: Vec<Option<MorId>>) -> FinCategory {
        let n = objects.len();
        let mut homs = vec![Vec::new(); n * n];
        for (i, mor) in morphisms.iter().enumerate() {
            homs[mor.src * n + mor.dst].push(i);
        }
        let object_index = objects.iter().enumerate().map(|(i, o)| (o.clone(), i)).collect();
        let morphism_index = morphisms.iter().enumerate().map(|(i, m)| (m.name.clone(), i)).collect();
        FinCategory {
            inner: Arc::new(CategoryData {
                objects,
                morphisms,
                compose,
                homs,
                object_index,
                morphism_index,
            }),
        }
    }

    pub fn num_objects(&self) -> usize {
        self.inner.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.inner.morphisms.len()
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = ObjId> {
        0..self.num_objects()
    }

    pub fn morphisms(&self) -> impl ExactSizeIterator<Item = MorId> {
        0..self.num_morphisms()
    }

    /// Morphisms other than identities, in declaration order.
    pub fn non_identities(&self) -> impl Iterator<Item = MorId> {
        self.num_objects()..self.num_morphisms()
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.inner.objects[x]
    }

    pub fn object_names(&self) -> &[String] {
        &self.inner.objects
    }

    pub fn morphism(&self, f: MorId) -> &Morphism {
        &self.inner.morphisms[f]
    }

    pub fn morphism_name(&self, f: MorId) -> &str {
        &self.inner.morphisms[f].name
    }

    pub fn src(&self, f: MorId) -> ObjId {
        self.inner.morphisms[f].src
    }

    pub fn dst(&self, f: MorId) -> ObjId {
        self.inner.morphisms[f].dst
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        debug_assert!(x < self.num_objects());
        x
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        f < self.num_objects()
    }

    pub fn object_id(&self, name: &str) -> Option<ObjId> {
        self.inner.object_index.get(name).copied()
    }

    pub fn morphism_id(&self, name: &str) -> Option<MorId> {
        self.inner.morphism_index.get(name).copied()
    }

    /// `g∘f`, or `None` when `dst(f) != src(g)`.
    #[inline]
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.inner.compose[g * self.num_morphisms() + f]
    }

    /// `g∘f` for a pair known to be composable.
    #[inline]
    pub fn comp(&self, g: MorId, f: MorId) -> MorId {
        self.compose(g, f).unwrap_or_else(|| {
            panic!(
                "{} and {} are not composable",
                self.morphism_name(g),
                self.morphism_name(f)
            )
        })
    }

    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.inner.homs[x * self.num_objects() + y]
    }

    /// Returns the inverse of `f` if it is an isomorphism.
    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        let (x, y) = (self.src(f), self.dst(f));
        self.hom(y, x)
            .iter()
            .copied()
            .find(|&g| self.comp(g, f) == x && self.comp(f, g) == y)
    }

    pub fn is_iso(&self, f: MorId) -> bool {
        self.inverse(f).is_some()
    }

    pub fn is_groupoid(&self) -> bool {
        self.morphisms().all(|f| self.is_iso(f))
    }

    /// The category with the same objects and every morphism reversed.
    /// Morphism names are kept, so `opposite` is an involution on the nose.
    pub fn opposite(&self) -> FinCategory {
        let morphisms = self
            .inner
            .morphisms
            .iter()
            .map(|m| Morphism {
                name: m.name.clone(),
                src: m.dst,
                dst: m.src,
            })
            .collect::<Vec<_>>();
        let m = morphisms.len();
        let mut table = vec![None; m * m];
        for g in 0..m {
            for f in 0..m {
                // g^op ∘ f^op = (f ∘ g)^op
                table[g * m + f] = self.compose(f, g);
            }
        }
        Self::assemble(self.inner.objects.clone(), morphisms, table)
    }

    /// Partition of the objects into isomorphism classes, each block sorted,
    /// blocks ordered by their least object.
    pub fn iso_classes(&self) -> Vec<Vec<ObjId>> {
        let n = self.num_objects();
        let mut class: Vec<Option<usize>> = vec![None; n];
        let mut blocks: Vec<Vec<ObjId>> = Vec::new();
        for x in 0..n {
            if class[x].is_some() {
                continue;
            }
            let id = blocks.len();
            let mut block = vec![x];
            class[x] = Some(id);
            for y in x + 1..n {
                if class[y].is_none() && self.hom(x, y).iter().any(|&f| self.is_iso(f)) {
                    class[y] = Some(id);
                    block.push(y);
                }
            }
            blocks.push(block);
        }
        blocks
    }

    /// Connected components of the underlying undirected graph.
    pub fn connected_components(&self) -> Vec<Vec<ObjId>> {
        let n = self.num_objects();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut stack = vec![start];
            comp[start] = id;
            let mut members = Vec::new();
            while let Some(x) = stack.pop() {
                members.push(x);
                for y in 0..n {
                    if comp[y] == usize::MAX && (!self.hom(x, y).is_empty() || !self.hom(y, x).is_empty()) {
                        comp[y] = id;
                        stack.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// Checks identity laws, endpoints and associativity of the table.
    pub fn validate(&self) -> Result<(), CategoryError> {
        let name = |f: MorId| self.morphism_name(f).to_string();
        for f in self.morphisms() {
            for g in self.morphisms() {
                match (self.dst(f) == self.src(g), self.compose(g, f)) {
                    (true, None) => return Err(CategoryError::MissingComposite { g: name(g), f: name(f) }),
                    (false, Some(_)) => {
                        return Err(CategoryError::BadEndpoints(format!(
                            "{} and {} are not composable but a composite is recorded",
                            name(g),
                            name(f)
                        )))
                    }
                    (true, Some(h)) => {
                        if self.src(h) != self.src(f) || self.dst(h) != self.dst(g) {
                            return Err(CategoryError::BadEndpoints(format!(
                                "{}∘{} = {} has the wrong endpoints",
                                name(g),
                                name(f),
                                name(h)
                            )));
                        }
                        if (self.is_identity(g) && h != f) || (self.is_identity(f) && h != g) {
                            return Err(CategoryError::IdentityViolation {
                                g: name(g),
                                f: name(f),
                                assigned: name(h),
                            });
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        if let Some((h, g, f, left, right)) = self.associativity_witness() {
            return Err(CategoryError::NonAssociative {
                h: name(h),
                g: name(g),
                f: name(f),
                left: name(left),
                right: name(right),
            });
        }
        Ok(())
    }

    fn associativity_witness(&self) -> Option<(MorId, MorId, MorId, MorId, MorId)> {
        for f in self.morphisms() {
            for g in self.morphisms() {
                let Some(gf) = self.compose(g, f) else { continue };
                for h in self.morphisms() {
                    let Some(hg) = self.compose(h, g) else { continue };
                    let left = self.comp(hg, f);
                    let right = self.comp(h, gf);
                    if left != right {
                        return Some((h, g, f, left, right));
                    }
                }
            }
        }
        None
    }

    /// Non-identity composites `(g, f, g∘f)` in table order; identities are
    /// implied. This is the data written to category files.
    pub fn composite_triples(&self) -> Vec<(MorId, MorId, MorId)> {
        let mut out = Vec::new();
        for g in self.non_identities() {
            for f in self.non_identities() {
                if let Some(h) = self.compose(g, f) {
                    out.push((g, f, h));
                }
            }
        }
        out
    }
}

/// Collects named objects, morphisms and composites and validates them.
#[derive(Debug, Clone, Default)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<(String, String, String)>,
    composites: Vec<(String, String, String)>,
}

impl CategoryBuilder {
    pub fn object(mut self, name: impl Into<String>) -> Self {
        self.objects.push(name.into());
        self
    }

    pub fn objects<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.objects.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn morphism(mut self, name: impl Into<String>, src: impl Into<String>, dst: impl Into<String>) -> Self {
        self.morphisms.push((name.into(), src.into(), dst.into()));
        self
    }

    /// Records `g∘f = h`.
    pub fn compose(mut self, g: impl Into<String>, f: impl Into<String>, h: impl Into<String>) -> Self {
        self.composites.push((g.into(), f.into(), h.into()));
        self
    }

    pub fn build(self) -> Result<FinCategory, CategoryError> {
        let mut object_index = HashMap::new();
        for (i, o) in self.objects.iter().enumerate() {
            if object_index.insert(o.clone(), i).is_some() {
                return Err(CategoryError::DuplicateName(o.clone()));
            }
        }
        let mut morphisms: Vec<Morphism> = self
            .objects
            .iter()
            .enumerate()
            .map(|(x, o)| Morphism {
                name: identity_name(o),
                src: x,
                dst: x,
            })
            .collect();
        let mut morphism_index: HashMap<String, MorId> =
            morphisms.iter().enumerate().map(|(i, m)| (m.name.clone(), i)).collect();
        if morphism_index.len() != morphisms.len() {
            // two objects whose identity names clash cannot happen since
            // object names are distinct, but keep the table honest
            return Err(CategoryError::DuplicateName("id_".into()));
        }
        for (name, src, dst) in &self.morphisms {
            if name.starts_with(IDENTITY_PREFIX) {
                return Err(CategoryError::ReservedName(name.clone()));
            }
            let lookup = |o: &String| {
                object_index
                    .get(o)
                    .copied()
                    .ok_or_else(|| CategoryError::UnknownObject(o.clone()))
            };
            let (src, dst) = (lookup(src)?, lookup(dst)?);
            if morphism_index.insert(name.clone(), morphisms.len()).is_some() {
                return Err(CategoryError::DuplicateName(name.clone()));
            }
            morphisms.push(Morphism {
                name: name.clone(),
                src,
                dst,
            });
        }

        let n = self.objects.len();
        let m = morphisms.len();
        let mut table: Vec<Option<MorId>> = vec![None; m * m];
        for f in 0..m {
            for g in 0..m {
                if morphisms[f].dst == morphisms[g].src && (f < n || g < n) {
                    table[g * m + f] = Some(if g < n { f } else { g });
                }
            }
        }
        let lookup_m = |s: &String| {
            morphism_index
                .get(s)
                .copied()
                .ok_or_else(|| CategoryError::UnknownMorphism(s.clone()))
        };
        for (gs, fs, hs) in &self.composites {
            let (g, f, h) = (lookup_m(gs)?, lookup_m(fs)?, lookup_m(hs)?);
            if morphisms[f].dst != morphisms[g].src {
                return Err(CategoryError::BadEndpoints(format!("{gs}∘{fs} is not composable")));
            }
            if morphisms[h].src != morphisms[f].src || morphisms[h].dst != morphisms[g].dst {
                return Err(CategoryError::BadEndpoints(format!(
                    "{gs}∘{fs} = {hs} has the wrong endpoints"
                )));
            }
            let slot = &mut table[g * m + f];
            match *slot {
                Some(prev) if prev != h => {
                    if f < n || g < n {
                        return Err(CategoryError::IdentityViolation {
                            g: gs.clone(),
                            f: fs.clone(),
                            assigned: hs.clone(),
                        });
                    }
                    return Err(CategoryError::ConflictingComposite {
                        g: gs.clone(),
                        f: fs.clone(),
                        first: morphisms[prev].name.clone(),
                        second: hs.clone(),
                    });
                }
                _ => *slot = Some(h),
            }
        }
        let cat = FinCategory::assemble(self.objects, morphisms, table);
        cat.validate()?;
        Ok(cat)
    }
}

/// Standard small categories used throughout the tests and corpus.
pub mod examples {
    use super::*;

    /// One object, only its identity.
    pub fn terminal() -> FinCategory {
        FinCategory::builder().object("*").build().unwrap()
    }

    pub fn discrete<S: Into<String>>(objects: impl IntoIterator<Item = S>) -> FinCategory {
        FinCategory::builder().objects(objects).build().unwrap()
    }

    /// `A --f--> B`.
    pub fn walking_arrow() -> FinCategory {
        FinCategory::builder()
            .objects(["A", "B"])
            .morphism("f", "A", "B")
            .build()
            .unwrap()
    }

    /// `A ⇄ B` with both composites identities.
    pub fn walking_iso() -> FinCategory {
        FinCategory::builder()
            .objects(["A", "B"])
            .morphism("f", "A", "B")
            .morphism("g", "B", "A")
            .compose("g", "f", "id_A")
            .compose("f", "g", "id_B")
            .build()
            .unwrap()
    }

    /// Two parallel arrows `A ⇉ B`.
    pub fn parallel_pair() -> FinCategory {
        FinCategory::builder()
            .objects(["A", "B"])
            .morphism("f", "A", "B")
            .morphism("g", "A", "B")
            .build()
            .unwrap()
    }

    /// `A --f--> C <--g-- B`.
    pub fn cospan() -> FinCategory {
        FinCategory::builder()
            .objects(["A", "B", "C"])
            .morphism("f", "A", "C")
            .morphism("g", "B", "C")
            .build()
            .unwrap()
    }

    /// `B <--f-- A --g--> C`.
    pub fn span() -> FinCategory {
        FinCategory::builder()
            .objects(["A", "B", "C"])
            .morphism("f", "A", "B")
            .morphism("g", "A", "C")
            .build()
            .unwrap()
    }

    /// The linear order `0 ≤ 1 ≤ … ≤ n-1` as a category.
    pub fn linear_order(n: usize) -> FinCategory {
        poset((0..n).map(|i| i.to_string()).collect(), |a, b| a <= b)
    }

    /// A finite poset given by its elements and order relation; the morphism
    /// `a ≤ b` (a ≠ b) is named `a<b`.
    pub fn poset(elements: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> FinCategory {
        let n = elements.len();
        let mut non_identity = Vec::new();
        let mut index = HashMap::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && leq(a, b) {
                    index.insert((a, b), n + non_identity.len());
                    non_identity.push(Morphism {
                        name: format!("{}<{}", elements[a], elements[b]),
                        src: a,
                        dst: b,
                    });
                }
            }
        }
        let ends: Vec<(usize, usize)> = non_identity.iter().map(|m| (m.src, m.dst)).collect();
        FinCategory::from_parts(elements, non_identity, |g, f| {
            let (a, _) = ends[f - n];
            let (_, c) = ends[g - n];
            if a == c {
                a
            } else {
                index[&(a, c)]
            }
        })
    }

    /// A finite monoid viewed as a one-object category. `table[a][b]` is
    /// `a*b` (apply `b` first), element 0 must be the unit.
    pub fn monoid(names: &[&str], table: &[Vec<usize>]) -> Result<FinCategory, CategoryError> {
        let mut b = FinCategory::builder().object("*");
        for name in &names[1..] {
            b = b.morphism(*name, "*", "*");
        }
        let label = |i: usize| {
            if i == 0 {
                identity_name("*")
            } else {
                names[i].to_string()
            }
        };
        for (g, row) in table.iter().enumerate().skip(1) {
            for (f, &h) in row.iter().enumerate().skip(1) {
                b = b.compose(label(g), label(f), label(h));
            }
        }
        b.build()
    }

    /// The cyclic group of order `n` as a one-object category; generator
    /// powers are named `g1 … g{n-1}`.
    pub fn cyclic_group(n: usize) -> FinCategory {
        let names: Vec<String> = (0..n).map(|i| format!("g{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        monoid(&refs, &table).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::examples::*;
    use super::*;

    #[test]
    fn identity_only_category() {
        let c = terminal();
        assert_eq!((c.num_objects(), c.num_morphisms()), (1, 1));
        assert_eq!(c.morphism_name(0), "id_*");
    }

    #[test]
    fn walking_arrow_has_three_morphisms() {
        assert_eq!(walking_arrow().num_morphisms(), 3);
    }

    #[test]
    fn z2_and_idempotent_monoids_are_valid() {
        let z2 = monoid(&["e", "g"], &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.num_morphisms(), 2);
        let idem = monoid(&["e", "g"], &[vec![0, 1], vec![1, 1]]).unwrap();
        let g = idem.morphism_id("g").unwrap();
        assert_eq!(idem.comp(g, g), g);
    }

    #[test]
    fn missing_composite_is_reported() {
        let err = FinCategory::builder()
            .objects(["A", "B", "C"])
            .morphism("f", "A", "B")
            .morphism("g", "B", "C")
            .build()
            .unwrap_err();
        assert_eq!(
            err,
            CategoryError::MissingComposite {
                g: "g".into(),
                f: "f".into()
            }
        );
    }

    #[test]
    fn reserved_and_duplicate_names() {
        let err = FinCategory::builder()
            .object("A")
            .morphism("id_x", "A", "A")
            .build()
            .unwrap_err();
        assert!(matches!(err, CategoryError::ReservedName(_)));
        let err = FinCategory::builder().objects(["A", "A"]).build().unwrap_err();
        assert!(matches!(err, CategoryError::DuplicateName(_)));
    }

    #[test]
    fn bad_endpoints_are_rejected() {
        let err = FinCategory::builder()
            .objects(["A", "B"])
            .morphism("f", "A", "B")
            .compose("f", "f", "f")
            .build()
            .unwrap_err();
        assert!(matches!(err, CategoryError::BadEndpoints(_)));
    }

    #[test]
    fn opposite_reverses_order() {
        let p = linear_order(3);
        let op = p.opposite();
        let m = op.morphism_id("0<2").unwrap();
        assert_eq!(op.object_name(op.src(m)), "2");
        assert_eq!(op.object_name(op.dst(m)), "0");
        assert_eq!(op.opposite(), p);
        op.validate().unwrap();
    }

    #[test]
    fn iso_classes_examples() {
        assert_eq!(discrete(["A", "B"]).iso_classes(), vec![vec![0], vec![1]]);
        assert_eq!(walking_iso().iso_classes(), vec![vec![0, 1]]);
        assert_eq!(linear_order(2).iso_classes(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn inverse_in_cyclic_group() {
        let c = cyclic_group(3);
        let g1 = c.morphism_id("g1").unwrap();
        let g2 = c.morphism_id("g2").unwrap();
        assert_eq!(c.inverse(g1), Some(g2));
        assert!(c.is_groupoid());
        assert!(!walking_arrow().is_groupoid());
    }
}
