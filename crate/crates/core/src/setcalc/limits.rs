//! Limits as equalizers of products, colimits as coequalizers of
//! coproducts.

use super::diagram::Diagram;
use super::sets::{tuple_name, tuples, FinFunction, FinSet, MinUnionFind};
use super::SetError;
use crate::fincat::examples::{cospan, span};

/// A cone (legs out of the apex) or cocone (legs into the apex). Legs are
/// listed in the order of the objects or input sets they refer to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    pub apex: FinSet,
    pub legs: Vec<FinFunction>,
}

impl Cone {
    /// Every leg commutes with the diagram: `F(f)∘leg(src f) = leg(dst f)`.
    pub fn is_cone_over(&self, d: &Diagram) -> bool {
        let c = &d.shape;
        self.legs.len() == c.num_objects()
            && c.morphisms().all(|f| {
                (0..self.apex.len()).all(|p| d.apply(f, self.legs[c.src(f)].apply(p)) == self.legs[c.dst(f)].apply(p))
            })
    }

    /// Every leg commutes: `leg(dst f)∘F(f) = leg(src f)`.
    pub fn is_cocone_under(&self, d: &Diagram) -> bool {
        let c = &d.shape;
        self.legs.len() == c.num_objects()
            && c.morphisms().all(|f| {
                (0..d.set(c.src(f)).len())
                    .all(|a| self.legs[c.dst(f)].apply(d.apply(f, a)) == self.legs[c.src(f)].apply(a))
            })
    }
}

/// Cartesian product with coordinate projections; the empty product is the
/// one-element set `{()}`.
pub fn product(sets: &[FinSet]) -> Cone {
    let sizes: Vec<usize> = sets.iter().map(FinSet::len).collect();
    let all = tuples(&sizes);
    let names = all
        .iter()
        .map(|t| tuple_name(t.iter().zip(sets).map(|(&i, s)| s.element(i))));
    let apex = FinSet::new(product_name(sets), names).expect("tuple names are distinct");
    let legs = sets
        .iter()
        .enumerate()
        .map(|(k, s)| FinFunction {
            source: apex.clone(),
            target: s.clone(),
            map: all.iter().map(|t| t[k]).collect(),
        })
        .collect();
    Cone { apex, legs }
}

fn product_name(sets: &[FinSet]) -> String {
    sets.iter().map(|s| s.name.as_str()).collect::<Vec<_>>().join("×")
}

/// Subset of `source` on which two keyed maps agree, with its inclusion.
pub(crate) fn equalize_by<K: PartialEq>(
    source: &FinSet,
    name: String,
    f: impl Fn(usize) -> K,
    g: impl Fn(usize) -> K,
) -> (FinSet, Vec<usize>) {
    let kept: Vec<usize> = (0..source.len()).filter(|&x| f(x) == g(x)).collect();
    let apex =
        FinSet::new(name, kept.iter().map(|&x| source.element(x).to_string())).expect("subset of distinct elements");
    (apex, kept)
}

/// `{x : f(x) = g(x)}` with its inclusion into the common source.
pub fn equalizer(f: &FinFunction, g: &FinFunction) -> Result<Cone, SetError> {
    if f.source != g.source || f.target != g.target {
        return Err(SetError::EndpointMismatch);
    }
    let (apex, kept) = equalize_by(
        &f.source,
        format!("Eq({})", f.source.name),
        |x| f.apply(x),
        |x| g.apply(x),
    );
    let leg = FinFunction {
        source: apex.clone(),
        target: f.source.clone(),
        map: kept,
    };
    Ok(Cone { apex, legs: vec![leg] })
}

/// Limit of a diagram, computed as the equalizer of the two parallel maps
/// `∏_Y F(Y) ⇉ ∏_{f: X→Y} F(Y)` given by `(x) ↦ (x_{cod f})` and
/// `(x) ↦ (F(f)(x_{dom f}))`.
pub fn limit(d: &Diagram) -> Cone {
    let c = &d.shape;
    let sets: Vec<FinSet> = d.sets().to_vec();
    let prod = product(&sets);
    let coords: Vec<Vec<usize>> = prod.legs.iter().map(|l| l.map.clone()).collect();
    let coord = |p: usize, y: usize| coords[y][p];
    let select = |p: usize| -> Vec<usize> { c.morphisms().map(|f| coord(p, c.dst(f))).collect() };
    let transport = |p: usize| -> Vec<usize> { c.morphisms().map(|f| d.apply(f, coord(p, c.src(f)))).collect() };
    let (apex, kept) = equalize_by(&prod.apex, format!("lim({})", prod.apex.name), select, transport);
    let legs = c
        .objects()
        .map(|y| FinFunction {
            source: apex.clone(),
            target: sets[y].clone(),
            map: kept.iter().map(|&p| coord(p, y)).collect(),
        })
        .collect();
    Cone { apex, legs }
}

/// Disjoint union with its injections. Elements are tagged `S:a` by the
/// name of their summand (or its position, when names collide).
pub fn coproduct(sets: &[FinSet]) -> Cone {
    let mut names: Vec<String> = sets.iter().map(|s| s.name.clone()).collect();
    let distinct = {
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        sorted.len() == names.len()
    };
    if !distinct {
        names = (0..sets.len()).map(|i| i.to_string()).collect();
    }
    let mut elements = Vec::new();
    let mut injections = Vec::new();
    for (s, tag) in sets.iter().zip(&names) {
        let start = elements.len();
        elements.extend(s.elements().iter().map(|e| format!("{tag}:{e}")));
        injections.push((start..start + s.len()).collect::<Vec<_>>());
    }
    let apex = FinSet::new(names.join("+"), elements).expect("tagged names are distinct");
    let legs = sets
        .iter()
        .zip(injections)
        .map(|(s, map)| FinFunction {
            source: s.clone(),
            target: apex.clone(),
            map,
        })
        .collect();
    Cone { apex, legs }
}

/// Quotient of `set` by the equivalence generated by `pairs`; each class is
/// named by its least member.
pub(crate) fn quotient(
    set: &FinSet,
    name: String,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> (FinSet, Vec<usize>) {
    let mut uf = MinUnionFind::new(set.len());
    for (a, b) in pairs {
        uf.union(a, b);
    }
    let (class_of, reps) = uf.classes();
    let apex =
        FinSet::new(name, reps.iter().map(|&r| set.element(r).to_string())).expect("representatives are distinct");
    (apex, class_of)
}

/// Quotient of the common target by `f(a) ~ g(a)`.
pub fn coequalizer(f: &FinFunction, g: &FinFunction) -> Result<Cone, SetError> {
    if f.source != g.source || f.target != g.target {
        return Err(SetError::EndpointMismatch);
    }
    let (apex, class_of) = quotient(
        &f.target,
        format!("Coeq({})", f.target.name),
        (0..f.source.len()).map(|a| (f.apply(a), g.apply(a))),
    );
    let leg = FinFunction {
        source: f.target.clone(),
        target: apex.clone(),
        map: class_of,
    };
    Ok(Cone { apex, legs: vec![leg] })
}

/// Colimit of a diagram: the disjoint union of its sets modulo the least
/// equivalence with `a ~ F(f)(a)`.
pub fn colimit(d: &Diagram) -> Cone {
    let c = &d.shape;
    let sum = coproduct(d.sets());
    let pairs = c.non_identities().flat_map(|f| {
        let (x, y) = (c.src(f), c.dst(f));
        let sum = &sum;
        (0..d.set(x).len()).map(move |a| (sum.legs[x].apply(a), sum.legs[y].apply(d.apply(f, a))))
    });
    let (apex, class_of) = quotient(&sum.apex, format!("colim({})", sum.apex.name), pairs);
    let legs = sum
        .legs
        .iter()
        .map(|inj| FinFunction {
            source: inj.source.clone(),
            target: apex.clone(),
            map: inj.map.iter().map(|&i| class_of[i]).collect(),
        })
        .collect();
    Cone { apex, legs }
}

/// Pullback of `f: A → C` and `g: B → C`, computed as the equalizer of
/// `f∘π₁` and `g∘π₂` on `A × B`. Legs are the projections to `A` and `B`.
pub fn pullback(f: &FinFunction, g: &FinFunction) -> Result<Cone, SetError> {
    if f.target != g.target {
        return Err(SetError::EndpointMismatch);
    }
    let prod = product(&[f.source.clone(), g.source.clone()]);
    let (p1, p2) = (&prod.legs[0], &prod.legs[1]);
    let (apex, kept) = equalize_by(
        &prod.apex,
        format!("{}×_{}{}", f.source.name, f.target.name, g.source.name),
        |p| f.apply(p1.apply(p)),
        |p| g.apply(p2.apply(p)),
    );
    let legs = [p1, p2]
        .into_iter()
        .map(|proj| FinFunction {
            source: apex.clone(),
            target: proj.target.clone(),
            map: kept.iter().map(|&p| proj.apply(p)).collect(),
        })
        .collect();
    Ok(Cone { apex, legs })
}

/// Pushout of `f: A → B` and `g: A → C`, computed as the coequalizer of
/// `inj₁∘f` and `inj₂∘g` on `B ⊔ C`. Legs are the maps from `B` and `C`.
pub fn pushout(f: &FinFunction, g: &FinFunction) -> Result<Cone, SetError> {
    if f.source != g.source {
        return Err(SetError::EndpointMismatch);
    }
    let sum = coproduct(&[f.target.clone(), g.target.clone()]);
    let (i1, i2) = (&sum.legs[0], &sum.legs[1]);
    let (apex, class_of) = quotient(
        &sum.apex,
        format!("{}+_{}{}", f.target.name, f.source.name, g.target.name),
        (0..f.source.len()).map(|a| (i1.apply(f.apply(a)), i2.apply(g.apply(a)))),
    );
    let legs = [i1, i2]
        .into_iter()
        .map(|inj| FinFunction {
            source: inj.source.clone(),
            target: apex.clone(),
            map: inj.map.iter().map(|&i| class_of[i]).collect(),
        })
        .collect();
    Ok(Cone { apex, legs })
}

/// The cospan diagram `A → C ← B` of two functions with common target.
pub fn cospan_diagram(f: &FinFunction, g: &FinFunction) -> Result<Diagram, SetError> {
    if f.target != g.target {
        return Err(SetError::EndpointMismatch);
    }
    let shape = cospan();
    let sets = vec![
        f.source.clone().renamed("A"),
        g.source.clone().renamed("B"),
        f.target.clone().renamed("C"),
    ];
    let (mf, mg) = (f.map.clone(), g.map.clone());
    let fid = shape.morphism_id("f").unwrap();
    Diagram::from_arrows(shape, sets, |m| if m == fid { mf.clone() } else { mg.clone() })
}

/// The span diagram `B ← A → C` of two functions with common source.
pub fn span_diagram(f: &FinFunction, g: &FinFunction) -> Result<Diagram, SetError> {
    if f.source != g.source {
        return Err(SetError::EndpointMismatch);
    }
    let shape = span();
    let sets = vec![
        f.source.clone().renamed("A"),
        f.target.clone().renamed("B"),
        g.target.clone().renamed("C"),
    ];
    let (mf, mg) = (f.map.clone(), g.map.clone());
    let fid = shape.morphism_id("f").unwrap();
    Diagram::from_arrows(shape, sets, |m| if m == fid { mf.clone() } else { mg.clone() })
}
