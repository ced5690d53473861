//! JSON file formats.
//!
//! Every file may carry `"v": 1`; other versions and unknown fields are
//! rejected. Written files always include the version field. Names are
//! resolved when a file is converted to engine data; unresolved names and
//! malformed files are [`IoError`]s, while data that parses but breaks a
//! law (associativity, simplicial identities, …) reports the engine error.

use std::collections::{BTreeMap, BTreeSet};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{check_action, check_monoid, FinAction, FinMonoid};
use crate::error::Error;
use crate::fincat::{CategoryError, FinCategory, FinFunctor, MorId, ProductCategory};
use crate::homotopy::{GroupHomSpec, Presentation};
use crate::modelcat::ModelData;
use crate::setcalc::{Bifunctor, Diagram, FinSet};
use crate::simplicial::SimplicialSet;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("unsupported format version {0}")]
    Version(u32),
    #[error("{0}")]
    Schema(String),
}

fn schema(msg: impl Into<String>) -> Error {
    Error::Io(IoError::Schema(msg.into()))
}

fn check_version(v: Option<u32>) -> Result<(), Error> {
    match v {
        Some(x) if x != FORMAT_VERSION => Err(IoError::Version(x).into()),
        _ => Ok(()),
    }
}

pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(|e| IoError::Json(e.to_string()).into())
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file types serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismEntry {
    pub name: String,
    pub src: String,
    pub dst: String,
}

/// `{"objects": [...], "morphisms": [{"name","src","dst"}], "compose": [[g, f, h]]}`
/// with `g∘f = h`; identities are implicit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<u32>,
    pub objects: Vec<String>,
    #[serde(default)]
    pub morphisms: Vec<MorphismEntry>,
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
}

impl CategoryFile {
    pub fn from_category(c: &FinCategory) -> Self {
        CategoryFile {
            v: Some(FORMAT_VERSION),
            objects: c.object_names().to_vec(),
            morphisms: c
                .non_identities()
                .map(|f| MorphismEntry {
                    name: c.morphism_name(f).to_string(),
                    src: c.object_name(c.src(f)).to_string(),
                    dst: c.object_name(c.dst(f)).to_string(),
                })
                .collect(),
            compose: c
                .composite_triples()
                .into_iter()
                .map(|(g, f, h)| [g, f, h].map(|m| c.morphism_name(m).to_string()))
                .collect(),
        }
    }

    pub fn to_category(&self) -> Result<FinCategory, Error> {
        check_version(self.v)?;
        let mut b = FinCategory::builder().objects(self.objects.iter().cloned());
        for m in &self.morphisms {
            b = b.morphism(&m.name, &m.src, &m.dst);
        }
        for [g, f, h] in &self.compose {
            b = b.compose(g, f, h);
        }
        b.build().map_err(|e| match e {
            CategoryError::DuplicateName(_)
            | CategoryError::ReservedName(_)
            | CategoryError::UnknownObject(_)
            | CategoryError::UnknownMorphism(_) => schema(e.to_string()),
            _ => e.into(),
        })
    }

    /// Embedded copies drop the version field.
    fn nested(c: &FinCategory) -> Self {
        CategoryFile {
            v: None,
            ..Self::from_category(c)
        }
    }
}

fn morphism_named(c: &FinCategory, name: &str) -> Result<MorId, Error> {
    c.morphism_id(name)
        .ok_or_else(|| schema(format!("unknown morphism `{name}`")))
}

fn check_keys<'a>(keys: impl Iterator<Item = &'a String>, known: &BTreeSet<&str>, what: &str) -> Result<(), Error> {
    for k in keys {
        if !known.contains(k.as_str()) {
            return Err(schema(format!("unknown {what} `{k}`")));
        }
    }
    Ok(())
}

/// Sets per object and functions per morphism of `shape`. Functions of
/// identities may be omitted; so may those of morphisms for which
/// `derive` names two factors `(first, second)` to compose.
fn build_diagram(
    shape: &FinCategory,
    sets: &BTreeMap<String, Vec<String>>,
    functions: &BTreeMap<String, BTreeMap<String, String>>,
    derive: impl Fn(MorId) -> Option<(MorId, MorId)>,
) -> Result<Diagram, Error> {
    let objects: BTreeSet<&str> = shape.object_names().iter().map(String::as_str).collect();
    check_keys(sets.keys(), &objects, "object")?;
    let morphisms: BTreeSet<&str> = shape.morphisms().map(|m| shape.morphism_name(m)).collect();
    check_keys(functions.keys(), &morphisms, "morphism")?;
    let finsets: Vec<FinSet> = shape
        .objects()
        .map(|x| {
            let name = shape.object_name(x);
            let elems = sets
                .get(name)
                .ok_or_else(|| schema(format!("no set for object `{name}`")))?;
            FinSet::new(name, elems.iter().cloned()).map_err(|e| schema(e.to_string()))
        })
        .collect::<Result<_, _>>()?;
    let mut maps: Vec<Option<Vec<usize>>> = vec![None; shape.num_morphisms()];
    for m in shape.morphisms() {
        let name = shape.morphism_name(m);
        let (src, dst) = (&finsets[shape.src(m)], &finsets[shape.dst(m)]);
        if let Some(table) = functions.get(name) {
            check_keys(
                table.keys(),
                &src.elements().iter().map(String::as_str).collect(),
                "element",
            )?;
            let map = src
                .elements()
                .iter()
                .map(|e| {
                    let img = table
                        .get(e)
                        .ok_or_else(|| schema(format!("`{name}` has no value at `{e}`")))?;
                    dst.position(img)
                        .ok_or_else(|| schema(format!("`{img}` is not in the set of `{}`", dst.name)))
                })
                .collect::<Result<Vec<_>, _>>()?;
            maps[m] = Some(map);
        } else if shape.is_identity(m) {
            maps[m] = Some((0..src.len()).collect());
        }
    }
    for m in shape.morphisms() {
        if maps[m].is_some() {
            continue;
        }
        let missing = || schema(format!("no function for morphism `{}`", shape.morphism_name(m)));
        let (first, second) = derive(m).ok_or_else(missing)?;
        let (a, b) = (
            maps[first].as_ref().ok_or_else(missing)?,
            maps[second].as_ref().ok_or_else(missing)?,
        );
        maps[m] = Some(a.iter().map(|&x| b[x]).collect());
    }
    Ok(Diagram::new(
        shape.clone(),
        finsets,
        maps.into_iter().map(Option::unwrap).collect(),
    )?)
}

/// Sets by object name and functions by morphism name.
type DiagramParts = (
    BTreeMap<String, Vec<String>>,
    BTreeMap<String, BTreeMap<String, String>>,
);

fn diagram_parts(d: &Diagram) -> DiagramParts {
    let shape = &d.shape;
    let sets = shape
        .objects()
        .map(|x| (shape.object_name(x).to_string(), d.set(x).elements().to_vec()))
        .collect();
    let functions = shape
        .non_identities()
        .map(|m| {
            let (src, dst) = (d.set(shape.src(m)), d.set(shape.dst(m)));
            let table = (0..src.len())
                .map(|e| (src.element(e).to_string(), dst.element(d.apply(m, e)).to_string()))
                .collect();
            (shape.morphism_name(m).to_string(), table)
        })
        .collect();
    (sets, functions)
}

/// `{"shape": <category>, "sets": {obj: [elems]}, "functions": {mor: {elem: elem}}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<u32>,
    pub shape: CategoryFile,
    pub sets: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub functions: BTreeMap<String, BTreeMap<String, String>>,
}

impl DiagramFile {
    pub fn from_diagram(d: &Diagram) -> Self {
        let (sets, functions) = diagram_parts(d);
        DiagramFile {
            v: Some(FORMAT_VERSION),
            shape: CategoryFile::nested(&d.shape),
            sets,
            functions,
        }
    }

    pub fn to_diagram(&self) -> Result<Diagram, Error> {
        check_version(self.v)?;
        let shape = self.shape.to_category()?;
        build_diagram(&shape, &self.sets, &self.functions, |_| None)
    }
}

/// A bifunctor `C^op × C → Set`: `{"category": <C>, "sets": {"(X,Y)": [...]},
/// "functions": {"(f,g)": {...}}}`. Pairs of non-identity morphisms may be
/// omitted; `(f,g)` is then computed as `(f,id)∘(id,g)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BifunctorFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<u32>,
    pub category: CategoryFile,
    pub sets: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub functions: BTreeMap<String, BTreeMap<String, String>>,
}

impl BifunctorFile {
    pub fn to_bifunctor(&self) -> Result<Bifunctor, Error> {
        check_version(self.v)?;
        let c = self.category.to_category()?;
        let twisted = ProductCategory::new(&c.opposite(), &c);
        let p = &twisted.category;
        let d = build_diagram(p, &self.sets, &self.functions, |m| {
            let (f, g) = twisted.morphism_components(m);
            // in C^op × C the source of (f, g) is (dst f, src g) in C terms
            let first = twisted.morphism(c.identity(c.dst(f)), g);
            let second = twisted.morphism(f, c.identity(c.dst(g)));
            Some((first, second))
        })?;
        Ok(Bifunctor::new(c, d)?)
    }

    pub fn from_bifunctor(h: &Bifunctor) -> Self {
        let (sets, functions) = diagram_parts(h.diagram());
        BifunctorFile {
            v: Some(FORMAT_VERSION),
            category: CategoryFile::nested(&h.base),
            sets,
            functions,
        }
    }
}

/// `{"source": <category>, "target": <category>, "objects": {a: b}, "morphisms": {f: g}}`;
/// identities may be omitted from `morphisms`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<u32>,
    pub source: CategoryFile,
    pub target: CategoryFile,
    pub objects: BTreeMap<String, String>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, String>,
}

impl FunctorFile {
    pub fn to_functor(&self) -> Result<FinFunctor, Error> {
        check_version(self.v)?;
        let (s, t) = (self.source.to_category()?, self.target.to_category()?);
        Ok(FinFunctor::from_names(
            &s,
            &t,
            self.objects.iter().map(|(a, b)| (a.as_str(), b.as_str())),
            self.morphisms.iter().map(|(a, b)| (a.as_str(), b.as_str())),
        )?)
    }

    pub fn from_functor(f: &FinFunctor) -> Self {
        let (s, t) = (&f.source, &f.target);
        FunctorFile {
            v: Some(FORMAT_VERSION),
            source: CategoryFile::nested(s),
            target: CategoryFile::nested(t),
            objects: s
                .objects()
                .map(|x| (s.object_name(x).to_string(), t.object_name(f.obj(x)).to_string()))
                .collect(),
            morphisms: s
                .non_identities()
                .map(|m| (s.morphism_name(m).to_string(), t.morphism_name(f.mor(m)).to_string()))
                .collect(),
        }
    }
}

/// `{"dim": N, "cells": {"0": [...], "1": [...]}, "faces": {cell: [ref, ...]}}`
/// where a ref is a cell name, optionally preceded by degeneracies
/// `"s1 s0 v"` (outermost first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplicialSetFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<u32>,
    pub dim: usize,
    pub cells: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub faces: BTreeMap<String, Vec<String>>,
}

impl SimplicialSetFile {
    pub fn to_sset(&self) -> Result<SimplicialSet, Error> {
        check_version(self.v)?;
        let mut b = SimplicialSet::builder(self.dim);
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        for (key, names) in &self.cells {
            let n: usize = key.parse().map_err(|_| schema(format!("bad dimension key `{key}`")))?;
            for name in names {
                seen.insert(name);
                if n == 0 {
                    if self.faces.contains_key(name) {
                        return Err(schema(format!("vertex `{name}` has faces")));
                    }
                    b = b.vertex(name);
                } else {
                    let faces = self
                        .faces
                        .get(name)
                        .ok_or_else(|| schema(format!("no faces for `{name}`")))?;
                    b = b.cell(name, n, faces.iter().cloned());
                }
            }
        }
        check_keys(self.faces.keys(), &seen, "cell")?;
        Ok(b.build()?)
    }

    pub fn from_sset(x: &SimplicialSet) -> Self {
        let mut cells = BTreeMap::new();
        let mut faces = BTreeMap::new();
        for n in 0..=x.max_dim() {
            let ids = x.cells_of_dim(n);
            if ids.is_empty() {
                continue;
            }
            cells.insert(n.to_string(), ids.iter().map(|&c| x.cell(c).name.clone()).collect());
            if n > 0 {
                for &c in ids {
                    let refs = x.cell(c).faces.iter().map(|r| x.ref_name(r)).collect();
                    faces.insert(x.cell(c).name.clone(), refs);
                }
            }
        }
        SimplicialSetFile {
            v: Some(FORMAT_VERSION),
            dim: x.max_dim(),
            cells,
            faces,
        }
    }
}

/// `{"gens": [...], "rels": [["a", "a", "B"], ...]}`; an all-lowercase
/// generator is inverted by writing it in uppercase, any generator by
/// appending `^-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<u32>,
    pub gens: Vec<String>,
    #[serde(default)]
    pub rels: Vec<Vec<String>>,
}

impl PresentationFile {
    pub fn to_presentation(&self) -> Result<Presentation, Error> {
        check_version(self.v)?;
        let p = Presentation::new(self.gens.clone(), Vec::new()).map_err(|e| schema(e.to_string()))?;
        let rels = self
            .rels
            .iter()
            .map(|r| p.parse_word(r))
            .collect::<Result<_, _>>()
            .map_err(|e| schema(e.to_string()))?;
        Ok(Presentation::new(p.generators, rels)?)
    }

    pub fn from_presentation(p: &Presentation) -> Self {
        PresentationFile {
            v: Some(FORMAT_VERSION),
            gens: p.generators.clone(),
            rels: p.relators.iter().map(|r| p.word_tokens(r)).collect(),
        }
    }
}

/// Span data for an amalgamated pushout: presentations `p0`, `p1`, `p2`
/// and the images of the generators of `p0` in `p1` and `p2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SvkFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<u32>,
    pub p0: PresentationFile,
    pub p1: PresentationFile,
    pub p2: PresentationFile,
    #[serde(default)]
    pub phi1: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub phi2: BTreeMap<String, Vec<String>>,
}

impl SvkFile {
    pub fn to_homs(&self) -> Result<(GroupHomSpec, GroupHomSpec), Error> {
        check_version(self.v)?;
        let p0 = self.p0.to_presentation()?;
        let hom = |target: &PresentationFile, images: &BTreeMap<String, Vec<String>>| -> Result<GroupHomSpec, Error> {
            let target = target.to_presentation()?;
            check_keys(
                images.keys(),
                &p0.generators.iter().map(String::as_str).collect(),
                "generator",
            )?;
            let words = p0
                .generators
                .iter()
                .map(|g| {
                    let img = images
                        .get(g)
                        .ok_or_else(|| schema(format!("no image for generator `{g}`")))?;
                    target.parse_word(img).map_err(|e| schema(e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(GroupHomSpec::new(p0.clone(), target, words)?)
        };
        Ok((hom(&self.p1, &self.phi1)?, hom(&self.p2, &self.phi2)?))
    }
}

/// `{"category": <category>, "weq": [...], "fib": [...], "cof": [...]}`.
/// Identities belong to every class whether listed or not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<u32>,
    pub category: CategoryFile,
    #[serde(default)]
    pub weq: Vec<String>,
    #[serde(default)]
    pub fib: Vec<String>,
    #[serde(default)]
    pub cof: Vec<String>,
}

impl ModelFile {
    pub fn to_model(&self) -> Result<ModelData, Error> {
        check_version(self.v)?;
        let c = self.category.to_category()?;
        let class = |names: &[String]| -> Result<Vec<bool>, Error> {
            let mut v: Vec<bool> = c.morphisms().map(|f| c.is_identity(f)).collect();
            for n in names {
                v[morphism_named(&c, n)?] = true;
            }
            Ok(v)
        };
        let (weq, fib, cof) = (class(&self.weq)?, class(&self.fib)?, class(&self.cof)?);
        Ok(ModelData::new(c, weq, fib, cof)?)
    }
}

/// Resolves a comma-separated list of morphism names.
pub fn morphism_list(c: &FinCategory, list: &str) -> Result<Vec<MorId>, Error> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| morphism_named(c, s))
        .collect()
}

/// `{"elements": [...], "table": [[...]]}` with `table[a][b] = a * b`,
/// rows and columns in element order, entries by name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<u32>,
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
}

fn resolve_table(set: &FinSet, rows: usize, table: &[Vec<String>], what: &str) -> Result<Vec<Vec<usize>>, Error> {
    if table.len() != rows || table.iter().any(|r| r.len() != set.len()) {
        return Err(schema(format!("{what} must be {rows}×{}", set.len())));
    }
    table
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| {
                    set.position(e)
                        .ok_or_else(|| schema(format!("unknown element `{e}` in {what}")))
                })
                .collect()
        })
        .collect()
}

impl MonoidFile {
    pub fn to_monoid(&self) -> Result<FinMonoid, Error> {
        check_version(self.v)?;
        let set = FinSet::new("M", self.elements.iter().cloned()).map_err(|e| schema(e.to_string()))?;
        let table = resolve_table(&set, set.len(), &self.table, "monoid table")?;
        Ok(check_monoid(set, table)?)
    }
}

/// `{"monoid": <monoid>, "space": [...], "act": [[...]]}` with
/// `act[x][y] = x · y`, one row per monoid element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<u32>,
    pub monoid: MonoidFile,
    pub space: Vec<String>,
    pub act: Vec<Vec<String>>,
}

impl ActionFile {
    pub fn to_action(&self) -> Result<FinAction, Error> {
        check_version(self.v)?;
        let m = self.monoid.to_monoid()?;
        let space = FinSet::new("Y", self.space.iter().cloned()).map_err(|e| schema(e.to_string()))?;
        let act = resolve_table(&space, m.len(), &self.act, "action table")?;
        Ok(check_action(m, space, act)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::examples;
    use crate::simplicial::boundary;

    #[test]
    fn category_round_trip() {
        let c = examples::walking_iso();
        let text = to_json(&CategoryFile::from_category(&c));
        let back = parse_json::<CategoryFile>(&text).unwrap().to_category().unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn version_and_unknown_fields() {
        let bad = r#"{"v": 2, "objects": ["A"]}"#;
        assert_eq!(
            parse_json::<CategoryFile>(bad).unwrap().to_category(),
            Err(Error::Io(IoError::Version(2)))
        );
        let extra = r#"{"objects": ["A"], "colour": 3}"#;
        assert!(matches!(
            parse_json::<CategoryFile>(extra),
            Err(Error::Io(IoError::Json(_)))
        ));
    }

    #[test]
    fn sset_round_trip() {
        let x = boundary(3, 2).unwrap();
        let text = to_json(&SimplicialSetFile::from_sset(&x));
        let y = parse_json::<SimplicialSetFile>(&text).unwrap().to_sset().unwrap();
        assert_eq!(y.nondegenerate_counts(), x.nondegenerate_counts());
        let circle = r#"{"dim": 2, "cells": {"0": ["v"], "1": ["a"]}, "faces": {"a": ["v", "v"]}}"#;
        let s = parse_json::<SimplicialSetFile>(circle).unwrap().to_sset().unwrap();
        assert_eq!(s.nondegenerate_counts(), vec![1, 1, 0]);
    }

    #[test]
    fn bifunctor_fills_mixed_pairs() {
        let text = r#"{
            "category": {"objects": ["A", "B"], "morphisms": [{"name": "f", "src": "A", "dst": "B"}]},
            "sets": {"(A,A)": ["x"], "(A,B)": ["x"], "(B,A)": [], "(B,B)": ["x"]},
            "functions": {"(f,id_A)": {}, "(f,id_B)": {"x": "x"}, "(id_A,f)": {"x": "x"}, "(id_B,f)": {}}
        }"#;
        let h = parse_json::<BifunctorFile>(text).unwrap().to_bifunctor().unwrap();
        assert_eq!(h.value(0, 1).len(), 1);
    }

    #[test]
    fn presentation_tokens() {
        let text = r#"{"gens": ["a", "b"], "rels": [["a", "b", "A", "B"]]}"#;
        let p = parse_json::<PresentationFile>(text).unwrap().to_presentation().unwrap();
        assert_eq!(p.relators[0].len(), 4);
        assert_eq!(
            PresentationFile::from_presentation(&p).rels[0],
            vec!["a", "b", "A", "B"]
        );
        let bad = r#"{"gens": ["a"], "rels": [["c"]]}"#;
        assert!(parse_json::<PresentationFile>(bad)
            .unwrap()
            .to_presentation()
            .unwrap_err()
            .is_input_error());
    }
}
