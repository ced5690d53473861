//! Ends and coends of set-valued bifunctors `C^op × C → Set`.

use std::collections::HashMap;

use super::diagram::Diagram;
use super::limits::quotient;
use super::sets::{tuple_name, tuples, FinSet};
use super::SetError;
use crate::fincat::{FinCategory, MorId, ObjId, ProductCategory};

/// A bifunctor `H: C^op × C → Set`, stored as a diagram on the product
/// category `C^op × C`.
#[derive(Debug, Clone)]
pub struct Bifunctor {
    pub base: FinCategory,
    twisted: ProductCategory,
    diagram: Diagram,
}

impl Bifunctor {
    pub fn new(base: FinCategory, diagram: Diagram) -> Result<Self, SetError> {
        let twisted = ProductCategory::new(&base.opposite(), &base);
        if diagram.shape != twisted.category {
            return Err(SetError::ShapeMismatch);
        }
        Ok(Bifunctor { base, twisted, diagram })
    }

    /// Builds `H` from its values and its action
    /// `act(f, g, e) = H(f, g)(e)` for `f: X' → X`, `g: Y → Y'` in `C`,
    /// sending `e ∈ H(X, Y)` into `H(X', Y')`. Functoriality is checked.
    pub fn from_fn(
        base: &FinCategory,
        value: impl Fn(ObjId, ObjId) -> FinSet,
        act: impl Fn(MorId, MorId, usize) -> usize,
    ) -> Result<Self, SetError> {
        let twisted = ProductCategory::new(&base.opposite(), base);
        let p = &twisted.category;
        let sets: Vec<FinSet> = p
            .objects()
            .map(|o| {
                let (x, y) = twisted.object_components(o);
                value(x, y)
            })
            .collect();
        let maps = p
            .morphisms()
            .map(|m| {
                let (f, g) = twisted.morphism_components(m);
                (0..sets[p.src(m)].len()).map(|e| act(f, g, e)).collect()
            })
            .collect();
        let diagram = Diagram::new(p.clone(), sets, maps)?;
        Ok(Bifunctor {
            base: base.clone(),
            twisted,
            diagram,
        })
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn value(&self, x: ObjId, y: ObjId) -> &FinSet {
        self.diagram.set(self.twisted.object(x, y))
    }

    /// `H(f, g): H(dst f, src g) → H(src f, dst g)` for `f, g` in `C`.
    pub fn act(&self, f: MorId, g: MorId) -> &[usize] {
        self.diagram.map(self.twisted.morphism(f, g))
    }
}

/// Elements of the end: families `(x_X ∈ H(X, X))` with
/// `H(id, f)(x_X) = H(f, id)(x_Y)` for every `f: X → Y`, obtained as the
/// equalizer of `∏_X H(X,X) ⇉ ∏_f H(dom f, cod f)`.
pub fn end_families(h: &Bifunctor) -> Vec<Vec<usize>> {
    let c = &h.base;
    let sizes: Vec<usize> = c.objects().map(|x| h.value(x, x).len()).collect();
    let left = |t: &[usize]| -> Vec<usize> {
        c.morphisms()
            .map(|f| h.act(c.identity(c.src(f)), f)[t[c.src(f)]])
            .collect()
    };
    let right = |t: &[usize]| -> Vec<usize> {
        c.morphisms()
            .map(|f| h.act(f, c.identity(c.dst(f)))[t[c.dst(f)]])
            .collect()
    };
    tuples(&sizes).into_iter().filter(|t| left(t) == right(t)).collect()
}

/// The end `∫_X H(X, X)` with elements named as tuples.
pub fn end(h: &Bifunctor) -> FinSet {
    let c = &h.base;
    let names = end_families(h)
        .into_iter()
        .map(|t| tuple_name(t.iter().enumerate().map(|(x, &e)| h.value(x, x).element(e).to_string())));
    FinSet::new(format!("end({})", c.object_names().join(",")), names).unwrap()
}

/// The coproduct `∐_X H(X, X)` with the coend class of each member.
#[derive(Debug, Clone)]
pub struct CoendClasses {
    /// `(X, e)` pairs in coproduct order.
    pub members: Vec<(ObjId, usize)>,
    pub class_of: Vec<usize>,
    pub apex: FinSet,
}

impl CoendClasses {
    pub fn class(&self, x: ObjId, e: usize) -> usize {
        let pos = self.members.partition_point(|&(y, _)| y < x);
        self.class_of[pos + e]
    }
}

/// Coend as the coequalizer of `∐_{f: X→Y} H(Y, X) ⇉ ∐_X H(X, X)`.
pub fn coend_classes(h: &Bifunctor) -> CoendClasses {
    let c = &h.base;
    let mut offset = Vec::new();
    let mut members = Vec::new();
    let mut names = Vec::new();
    for x in c.objects() {
        offset.push(members.len());
        for (e, name) in h.value(x, x).elements().iter().enumerate() {
            members.push((x, e));
            names.push(format!("{}:{}", c.object_name(x), name));
        }
    }
    let sum = FinSet::new("sum", names).unwrap();
    // for f: X → Y and u ∈ H(Y, X): H(f, id_X)(u) ~ H(id_Y, f)(u)
    let mut pairs = Vec::new();
    for f in c.non_identities() {
        let (x, y) = (c.src(f), c.dst(f));
        let to_x = h.act(f, c.identity(x));
        let to_y = h.act(c.identity(y), f);
        for u in 0..h.value(y, x).len() {
            pairs.push((offset[x] + to_x[u], offset[y] + to_y[u]));
        }
    }
    let (apex, class_of) = quotient(&sum, format!("coend({})", c.object_names().join(",")), pairs);
    CoendClasses {
        members,
        class_of,
        apex,
    }
}

/// The coend `∫^X H(X, X)`; classes are named by their least member `X:e`.
pub fn coend(h: &Bifunctor) -> FinSet {
    coend_classes(h).apex
}

/// Which factor of a product category the inner integral runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InnerFactor {
    Left,
    Right,
}

/// Computes `∫_outer ∫_inner H` for a bifunctor on a product category and
/// returns the resulting families flattened to one element of
/// `H((c,p),(c,p))` per product object, so both orders of integration can
/// be compared with the end over the product directly.
pub fn end_iterated(h: &Bifunctor, split: &ProductCategory, inner: InnerFactor) -> Result<Vec<Vec<usize>>, SetError> {
    if h.base != split.category {
        return Err(SetError::ShapeMismatch);
    }
    let (outer_cat, inner_cat) = match inner {
        InnerFactor::Right => (split.left().clone(), split.right().clone()),
        InnerFactor::Left => (split.right().clone(), split.left().clone()),
    };
    let obj = |o: ObjId, i: ObjId| match inner {
        InnerFactor::Right => split.object(o, i),
        InnerFactor::Left => split.object(i, o),
    };
    let mor = |o: MorId, i: MorId| match inner {
        InnerFactor::Right => split.morphism(o, i),
        InnerFactor::Left => split.morphism(i, o),
    };

    // E(o1, o2) = ∫_i H((o1, i), (o2, i))
    let mut inner_families: HashMap<(ObjId, ObjId), Vec<Vec<usize>>> = HashMap::new();
    for o1 in outer_cat.objects() {
        for o2 in outer_cat.objects() {
            let (id1, id2) = (outer_cat.identity(o1), outer_cat.identity(o2));
            let k = Bifunctor::from_fn(
                &inner_cat,
                |i, j| h.value(obj(o1, i), obj(o2, j)).clone(),
                |f, g, e| h.act(mor(id1, f), mor(id2, g))[e],
            )?;
            inner_families.insert((o1, o2), end_families(&k));
        }
    }
    let lookup: HashMap<(ObjId, ObjId), HashMap<Vec<usize>, usize>> = inner_families
        .iter()
        .map(|(&key, fams)| (key, fams.iter().enumerate().map(|(i, f)| (f.clone(), i)).collect()))
        .collect();
    let outer = Bifunctor::from_fn(
        &outer_cat,
        |o1, o2| FinSet::range(format!("E({o1},{o2})"), inner_families[&(o1, o2)].len()),
        |u, v, e| {
            // family over (dst u, src v) pushed to (src u, dst v)
            let fam = &inner_families[&(outer_cat.dst(u), outer_cat.src(v))];
            let moved: Vec<usize> = inner_cat
                .objects()
                .map(|i| {
                    let id = inner_cat.identity(i);
                    h.act(mor(u, id), mor(v, id))[fam[e][i]]
                })
                .collect();
            lookup[&(outer_cat.src(u), outer_cat.dst(v))][&moved]
        },
    )?;
    let mut out = Vec::new();
    for fam in end_families(&outer) {
        let mut flat = vec![0; split.category.num_objects()];
        for o in outer_cat.objects() {
            let inner_fam = &inner_families[&(o, o)][fam[o]];
            for i in inner_cat.objects() {
                flat[obj(o, i)] = inner_fam[i];
            }
        }
        out.push(flat);
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::examples::*;
    use crate::fincat::{enumerate_nat_trans, FinFunctor};

    /// `H(X, Y) = Mor_D(F X, G Y)` with `H(f, g)(u) = G(g)∘u∘F(f)`.
    fn hom_bifunctor(f: &FinFunctor, g: &FinFunctor) -> Bifunctor {
        let d = &f.target;
        let hom = |x: ObjId, y: ObjId| d.hom(f.obj(x), g.obj(y)).to_vec();
        Bifunctor::from_fn(
            &f.source,
            |x, y| FinSet::new("hom", hom(x, y).iter().map(|&m| d.morphism_name(m).to_string())).unwrap(),
            |a, b, e| {
                let c = &f.source;
                let u = hom(c.dst(a), c.src(b))[e];
                let img = d.comp(g.mor(b), d.comp(u, f.mor(a)));
                hom(c.src(a), c.dst(b)).iter().position(|&m| m == img).unwrap()
            },
        )
        .unwrap()
    }

    #[test]
    fn end_of_hom_is_nat() {
        let c = walking_arrow();
        let functors = crate::fincat::enumerate_functors(&c, &c, &mut crate::Budget::unlimited()).unwrap();
        for f in &functors {
            for g in &functors {
                let h = hom_bifunctor(f, g);
                assert_eq!(end(&h).len(), enumerate_nat_trans(f, g).unwrap().len());
            }
        }
    }

    #[test]
    fn constant_bifunctor_on_connected_category() {
        let c = linear_order(3);
        let s = FinSet::range("S", 3);
        let h = Bifunctor::from_fn(&c, |_, _| s.clone(), |_, _, e| e).unwrap();
        assert_eq!(end(&h).len(), 3);
        assert_eq!(coend(&h).len(), 3);
    }

    #[test]
    fn coend_of_hom_on_arrow() {
        // Mor(B, A) is empty, so nothing glues id_A to id_B
        let c = walking_arrow();
        let id = FinFunctor::identity(&c);
        let h = hom_bifunctor(&id, &id);
        assert_eq!(coend(&h).len(), 2);
        let z3 = cyclic_group(3);
        let id = FinFunctor::identity(&z3);
        // conjugacy classes of an abelian group
        assert_eq!(coend(&hom_bifunctor(&id, &id)).len(), 3);
    }

    #[test]
    fn fubini_on_arrow_times_z2() {
        let split = ProductCategory::new(&walking_arrow(), &cyclic_group(2));
        let id = FinFunctor::identity(&split.category);
        let h = hom_bifunctor(&id, &id);
        let mut direct = end_families(&h);
        direct.sort();
        let a = end_iterated(&h, &split, InnerFactor::Right).unwrap();
        let b = end_iterated(&h, &split, InnerFactor::Left).unwrap();
        assert_eq!(direct, a);
        assert_eq!(direct, b);
    }
}
