//! Pointwise Kan extensions of set-valued functors.

use std::collections::HashMap;

use super::diagram::{enumerate_set_nat, Diagram, SetNat};
use super::ends::{coend_classes, end_families, Bifunctor};
use super::sets::{tuple_name, tuples, FinSet};
use super::SetError;
use crate::budget::Budget;
use crate::fincat::{FinCategory, FinFunctor, MorId, ObjId};

/// A Kan extension together with its universal transformation: the unit
/// `F ⇒ L∘i` for left extensions, the counit `R∘i ⇒ F` for right ones.
#[derive(Debug, Clone)]
pub struct KanExtension {
    pub extension: Diagram,
    pub universal: SetNat,
}

/// Left Kan extension along `i: A → C`:
/// `Lan F(X) = ∫^Y Mor_C(i Y, X) · F(Y)`, one coend per object of `C`.
pub fn lan(f: &Diagram, i: &FinFunctor) -> Result<KanExtension, SetError> {
    if f.shape != i.source {
        return Err(SetError::ShapeMismatch);
    }
    let (a, c) = (&i.source, &i.target);
    // (u, e) with u: i(Y1) → X and e ∈ F(Y2)
    let pairs = |x: ObjId, y1: ObjId, y2: ObjId| -> Vec<(MorId, usize)> {
        let homs = c.hom(i.obj(y1), x);
        homs.iter()
            .flat_map(|&u| (0..f.set(y2).len()).map(move |e| (u, e)))
            .collect()
    };

    let mut values = Vec::with_capacity(c.num_objects());
    let mut class_index: Vec<HashMap<(ObjId, MorId, usize), usize>> = Vec::new();
    for x in c.objects() {
        let h = Bifunctor::from_fn(
            a,
            |y1, y2| {
                let names = pairs(x, y1, y2)
                    .into_iter()
                    .map(|(u, e)| tuple_name([c.morphism_name(u), f.set(y2).element(e)]));
                FinSet::new("hom·F", names).unwrap()
            },
            |p, q, idx| {
                // (u, e) ∈ H(dst p, src q) ↦ (u∘i(p), F(q)(e)) ∈ H(src p, dst q)
                let (u, e) = pairs(x, a.dst(p), a.src(q))[idx];
                let moved = (c.comp(u, i.mor(p)), f.apply(q, e));
                pairs(x, a.src(p), a.dst(q)).iter().position(|&t| t == moved).unwrap()
            },
        )?;
        let classes = coend_classes(&h);
        let mut index = HashMap::new();
        for (pos, &(y, k)) in classes.members.iter().enumerate() {
            let (u, e) = pairs(x, y, y)[k];
            index.insert((y, u, e), classes.class_of[pos]);
        }
        values.push(classes.apex.renamed(c.object_name(x)));
        class_index.push(index);
    }

    // a representative (Y, u, e) of every class, to push along morphisms
    let reps: Vec<Vec<(ObjId, MorId, usize)>> = class_index
        .iter()
        .zip(&values)
        .map(|(index, set)| {
            let mut reps = vec![None; set.len()];
            let mut keys: Vec<_> = index.iter().collect();
            keys.sort();
            for (&key, &cl) in keys {
                reps[cl].get_or_insert(key);
            }
            reps.into_iter().map(Option::unwrap).collect()
        })
        .collect();
    let maps = c
        .morphisms()
        .map(|h| {
            let (x, x2) = (c.src(h), c.dst(h));
            reps[x]
                .iter()
                .map(|&(y, u, e)| class_index[x2][&(y, c.comp(h, u), e)])
                .collect()
        })
        .collect();
    let extension = Diagram::new(c.clone(), values, maps)?;
    let unit = SetNat {
        components: a
            .objects()
            .map(|y| {
                let iy = i.obj(y);
                (0..f.set(y).len())
                    .map(|e| class_index[iy][&(y, c.identity(iy), e)])
                    .collect()
            })
            .collect(),
    };
    Ok(KanExtension {
        extension,
        universal: unit,
    })
}

/// Right Kan extension along `i: A → C`:
/// `Ran F(X) = ∫_Y F(Y)^{Mor_C(X, i Y)}`, one end per object of `C`.
pub fn ran(f: &Diagram, i: &FinFunctor) -> Result<KanExtension, SetError> {
    if f.shape != i.source {
        return Err(SetError::ShapeMismatch);
    }
    let (a, c) = (&i.source, &i.target);
    // functions Mor(X, i Y1) → F(Y2), as image tuples
    let functions = |x: ObjId, y1: ObjId, y2: ObjId| -> Vec<Vec<usize>> {
        tuples(&vec![f.set(y2).len(); c.hom(x, i.obj(y1)).len()])
    };

    let mut values = Vec::new();
    let mut families_per_object: Vec<Vec<Vec<Vec<usize>>>> = Vec::new();
    let mut family_index: Vec<HashMap<Vec<Vec<usize>>, usize>> = Vec::new();
    for x in c.objects() {
        let h = Bifunctor::from_fn(
            a,
            |y1, y2| {
                let names = functions(x, y1, y2)
                    .into_iter()
                    .map(|phi| tuple_name(phi.iter().map(|&e| f.set(y2).element(e))));
                FinSet::new("F^hom", names).unwrap()
            },
            |p, q, idx| {
                // φ: Mor(X, i dst p) → F(src q) ↦ (v ↦ F(q)(φ(i(p)∘v)))
                let phi = &functions(x, a.dst(p), a.src(q))[idx];
                let dom_hom = c.hom(x, i.obj(a.dst(p)));
                let new_hom = c.hom(x, i.obj(a.src(p)));
                let moved: Vec<usize> = new_hom
                    .iter()
                    .map(|&v| {
                        let w = c.comp(i.mor(p), v);
                        let k = dom_hom.iter().position(|&t| t == w).unwrap();
                        f.apply(q, phi[k])
                    })
                    .collect();
                functions(x, a.src(p), a.dst(q))
                    .iter()
                    .position(|t| *t == moved)
                    .unwrap()
            },
        )?;
        let fams: Vec<Vec<Vec<usize>>> = end_families(&h)
            .into_iter()
            .map(|t| {
                t.iter()
                    .enumerate()
                    .map(|(y, &k)| functions(x, y, y)[k].clone())
                    .collect()
            })
            .collect();
        let names = fams.iter().map(|fam| {
            tuple_name(
                fam.iter()
                    .enumerate()
                    .map(|(y, phi)| tuple_name(phi.iter().map(|&e| f.set(y).element(e)))),
            )
        });
        values.push(FinSet::new(c.object_name(x), names).unwrap());
        family_index.push(fams.iter().enumerate().map(|(k, fam)| (fam.clone(), k)).collect());
        families_per_object.push(fams);
    }

    let maps = c
        .morphisms()
        .map(|h| {
            let (x, x2) = (c.src(h), c.dst(h));
            families_per_object[x]
                .iter()
                .map(|fam| {
                    // ψ_Y(v: X2 → iY) = φ_Y(v∘h)
                    let moved: Vec<Vec<usize>> = a
                        .objects()
                        .map(|y| {
                            let old = c.hom(x, i.obj(y));
                            c.hom(x2, i.obj(y))
                                .iter()
                                .map(|&v| {
                                    let k = old.iter().position(|&t| t == c.comp(v, h)).unwrap();
                                    fam[y][k]
                                })
                                .collect()
                        })
                        .collect();
                    family_index[x2][&moved]
                })
                .collect()
        })
        .collect();
    let extension = Diagram::new(c.clone(), values, maps)?;
    let counit = SetNat {
        components: a
            .objects()
            .map(|y| {
                let iy = i.obj(y);
                let k = c.hom(iy, iy).iter().position(|&t| t == c.identity(iy)).unwrap();
                families_per_object[iy].iter().map(|fam| fam[y][k]).collect()
            })
            .collect(),
    };
    Ok(KanExtension {
        extension,
        universal: counit,
    })
}

/// Which universal property to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KanSide {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KanWitness {
    /// `(|Nat on the extension side|, |Nat on the restricted side|)` per test functor.
    pub counts: Vec<(usize, usize)>,
}

/// Checks, for every test functor `G` on `C`, that
/// `Nat(L, G) → Nat(F, G∘i)`, `σ ↦ (σ i)∘η` is a bijection (left side), or
/// that `Nat(G, R) → Nat(G∘i, F)`, `σ ↦ ε∘(σ i)` is (right side).
pub fn check_kan_universal(
    kan: &KanExtension,
    f: &Diagram,
    i: &FinFunctor,
    side: KanSide,
    tests: &[Diagram],
    budget: &mut Budget,
) -> Result<KanWitness, SetError> {
    let l = &kan.extension;
    if l.shape != i.target || f.shape != i.source {
        return Err(SetError::ShapeMismatch);
    }
    let a = &i.source;
    let mut counts = Vec::new();
    for (t, g) in tests.iter().enumerate() {
        let gi = g.restrict(i)?;
        let (ext_side, restricted): (Vec<SetNat>, Vec<SetNat>) = match side {
            KanSide::Left => (enumerate_set_nat(l, g, budget)?, enumerate_set_nat(f, &gi, budget)?),
            KanSide::Right => (enumerate_set_nat(g, l, budget)?, enumerate_set_nat(&gi, f, budget)?),
        };
        let whisker = |sigma: &SetNat| -> SetNat {
            let along: Vec<Vec<usize>> = a.objects().map(|y| sigma.components[i.obj(y)].clone()).collect();
            let along = SetNat { components: along };
            match side {
                KanSide::Left => kan.universal.then(&along),
                KanSide::Right => along.then(&kan.universal),
            }
        };
        let images: Vec<SetNat> = ext_side.iter().map(whisker).collect();
        let mut sorted = images.clone();
        sorted.sort_by(|x, y| x.components.cmp(&y.components));
        sorted.dedup();
        let injective = sorted.len() == images.len();
        let surjective = restricted
            .iter()
            .all(|r| sorted.binary_search_by(|x| x.components.cmp(&r.components)).is_ok());
        if !(injective && surjective) {
            return Err(SetError::NotUniversal {
                test: t,
                extension_side: ext_side.len(),
                restricted_side: restricted.len(),
            });
        }
        counts.push((ext_side.len(), restricted.len()));
    }
    Ok(KanWitness { counts })
}

/// Adds a fresh element to `L(x)`; only valid when every non-identity
/// morphism out of `x` can send it somewhere, so it is mapped to the image
/// of the first existing element (or the caller supplies a target object
/// without outgoing arrows).
pub fn with_extra_element(l: &Diagram, x: ObjId, name: &str) -> Result<Diagram, SetError> {
    let c: &FinCategory = &l.shape;
    let mut sets = l.sets().to_vec();
    let mut elems: Vec<String> = sets[x].elements().to_vec();
    elems.push(name.to_string());
    sets[x] = FinSet::new(sets[x].name.clone(), elems)?;
    let new_idx = sets[x].len() - 1;
    let maps = c
        .morphisms()
        .map(|m| {
            let mut map = l.map(m).to_vec();
            if c.src(m) == x {
                let img = if c.is_identity(m) || c.dst(m) == x {
                    new_idx
                } else {
                    *map.first().unwrap_or(&0)
                };
                map.push(img);
            }
            map
        })
        .collect();
    Diagram::new(c.clone(), sets, maps)
}
