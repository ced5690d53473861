//! Lifting properties and the axioms of a model structure on a finite
//! category.

use std::fmt;

use super::marked::{members, two_of_three_violation};
use super::ModelError;
use crate::fincat::{FinCategory, MorId};

/// A commuting square `p∘top = bottom∘i` with no diagonal filler.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareWitness {
    pub i: MorId,
    pub p: MorId,
    pub top: MorId,
    pub bottom: MorId,
}

impl SquareWitness {
    pub fn describe(&self, c: &FinCategory) -> String {
        format!(
            "square {} → {} with top {} and bottom {} has no lift",
            c.morphism_name(self.i),
            c.morphism_name(self.p),
            c.morphism_name(self.top),
            c.morphism_name(self.bottom)
        )
    }
}

/// Whether `i` has the left lifting property against `p`: every commuting
/// square `p∘top = bottom∘i` has some `h` with `h∘i = top` and `p∘h = bottom`.
pub fn square_lifts(c: &FinCategory, i: MorId, p: MorId) -> Result<(), SquareWitness> {
    let (a, b) = (c.src(i), c.dst(i));
    let (x, y) = (c.src(p), c.dst(p));
    for &top in c.hom(a, x) {
        for &bottom in c.hom(b, y) {
            if c.comp(p, top) != c.comp(bottom, i) {
                continue;
            }
            let lifted = c
                .hom(b, x)
                .iter()
                .any(|&h| c.comp(h, i) == top && c.comp(p, h) == bottom);
            if !lifted {
                return Err(SquareWitness { i, p, top, bottom });
            }
        }
    }
    Ok(())
}

/// Classes of weak equivalences, fibrations and cofibrations, as
/// membership flags per morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelData {
    pub base: FinCategory,
    pub weq: Vec<bool>,
    pub fib: Vec<bool>,
    pub cof: Vec<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModelClass {
    Weq,
    Fib,
    Cof,
}

impl ModelClass {
    pub const ALL: [ModelClass; 3] = [ModelClass::Weq, ModelClass::Fib, ModelClass::Cof];

    pub fn name(self) -> &'static str {
        match self {
            ModelClass::Weq => "weq",
            ModelClass::Fib => "fib",
            ModelClass::Cof => "cof",
        }
    }
}

impl ModelData {
    pub fn new(base: FinCategory, weq: Vec<bool>, fib: Vec<bool>, cof: Vec<bool>) -> Result<Self, ModelError> {
        for v in [&weq, &fib, &cof] {
            if v.len() != base.num_morphisms() {
                return Err(ModelError::ClassSize {
                    expected: base.num_morphisms(),
                    found: v.len(),
                });
            }
        }
        Ok(ModelData { base, weq, fib, cof })
    }

    /// Isomorphisms are weak equivalences; everything is a fibration and a
    /// cofibration.
    pub fn trivial(c: &FinCategory) -> Self {
        let all = vec![true; c.num_morphisms()];
        ModelData {
            base: c.clone(),
            weq: c.morphisms().map(|f| c.is_iso(f)).collect(),
            fib: all.clone(),
            cof: all,
        }
    }

    pub fn class(&self, k: ModelClass) -> &[bool] {
        match k {
            ModelClass::Weq => &self.weq,
            ModelClass::Fib => &self.fib,
            ModelClass::Cof => &self.cof,
        }
    }

    pub fn class_mut(&mut self, k: ModelClass) -> &mut Vec<bool> {
        match k {
            ModelClass::Weq => &mut self.weq,
            ModelClass::Fib => &mut self.fib,
            ModelClass::Cof => &mut self.cof,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// Weak equivalences contain the isomorphisms and satisfy 2-out-of-3.
    TwoOfThree,
    /// Every class contains the identities.
    Identities,
    Retracts,
    Lifting,
    Factorization,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::TwoOfThree => "two-of-three",
            Axiom::Identities => "identities",
            Axiom::Retracts => "retracts",
            Axiom::Lifting => "lifting",
            Axiom::Factorization => "factorization",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: Axiom,
    /// First counterexample found, if any.
    pub witness: Option<String>,
}

impl AxiomResult {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelReport {
    pub results: Vec<AxiomResult>,
    /// Factorizations are only checked to exist morphism by morphism;
    /// whether they can be chosen functorially is not decided.
    pub functoriality_checked: bool,
}

impl ModelReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(AxiomResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.passed())
    }
}

impl fmt::Display for ModelReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.results {
            match &r.witness {
                None => writeln!(f, "{}: pass", r.axiom)?,
                Some(w) => writeln!(f, "{}: FAIL ({w})", r.axiom)?,
            }
        }
        write!(
            f,
            "factorization functoriality: {}",
            if self.functoriality_checked {
                "checked"
            } else {
                "unchecked"
            }
        )
    }
}

/// Retract data exhibiting `g` as a retract of `f` in the arrow category:
/// `(s0, s1, r0, r1)` with `f∘s0 = s1∘g`, `g∘r0 = r1∘f`, `r0∘s0 = id`,
/// `r1∘s1 = id`.
pub fn find_retraction(c: &FinCategory, g: MorId, f: MorId) -> Option<(MorId, MorId, MorId, MorId)> {
    let (a, b) = (c.src(g), c.dst(g));
    let (x, y) = (c.src(f), c.dst(f));
    for &s0 in c.hom(a, x) {
        for &r0 in c.hom(x, a) {
            if c.comp(r0, s0) != a {
                continue;
            }
            for &s1 in c.hom(b, y) {
                if c.comp(f, s0) != c.comp(s1, g) {
                    continue;
                }
                for &r1 in c.hom(y, b) {
                    if c.comp(r1, s1) == b && c.comp(g, r0) == c.comp(r1, f) {
                        return Some((s0, s1, r0, r1));
                    }
                }
            }
        }
    }
    None
}

/// Checks the model category axioms, stopping each axiom at its first
/// counterexample.
pub fn check_model(m: &ModelData) -> ModelReport {
    let c = &m.base;
    let name = |f: MorId| c.morphism_name(f).to_string();
    let mut results = Vec::new();

    results.push(AxiomResult {
        axiom: Axiom::TwoOfThree,
        witness: two_of_three_violation(c, &m.weq),
    });

    let missing_identity = ModelClass::ALL.iter().find_map(|&k| {
        c.objects()
            .map(|x| c.identity(x))
            .find(|&i| !m.class(k)[i])
            .map(|i| format!("{} is not in {}", name(i), k.name()))
    });
    results.push(AxiomResult {
        axiom: Axiom::Identities,
        witness: missing_identity,
    });

    let retract = ModelClass::ALL.iter().find_map(|&k| {
        let class = m.class(k);
        for f in members(class) {
            for g in c.morphisms().filter(|&g| !class[g]) {
                if let Some((s0, s1, r0, r1)) = find_retraction(c, g, f) {
                    return Some(format!(
                        "{} is a retract of {} in {} via ({}, {}, {}, {}) but is not in it",
                        name(g),
                        name(f),
                        k.name(),
                        name(s0),
                        name(s1),
                        name(r0),
                        name(r1)
                    ));
                }
            }
        }
        None
    });
    results.push(AxiomResult {
        axiom: Axiom::Retracts,
        witness: retract,
    });

    let both = |a: &[bool], b: &[bool]| -> Vec<MorId> { c.morphisms().filter(|&f| a[f] && b[f]).collect() };
    let acyclic_fib = both(&m.weq, &m.fib);
    let acyclic_cof = both(&m.weq, &m.cof);
    let cofs = members(&m.cof);
    let fibs = members(&m.fib);
    let mut lifting = None;
    'pairs: for (lefts, rights) in [(&cofs, &acyclic_fib), (&acyclic_cof, &fibs)] {
        for &i in lefts.iter() {
            for &p in rights.iter() {
                if let Err(w) = square_lifts(c, i, p) {
                    lifting = Some(w.describe(c));
                    break 'pairs;
                }
            }
        }
    }
    results.push(AxiomResult {
        axiom: Axiom::Lifting,
        witness: lifting,
    });

    let factors = |f: MorId, left: &[bool], right: &[bool]| {
        c.morphisms()
            .filter(|&i| c.src(i) == c.src(f) && left[i])
            .any(|i| c.hom(c.dst(i), c.dst(f)).iter().any(|&p| right[p] && c.comp(p, i) == f))
    };
    let acyclic = |a: &[bool]| -> Vec<bool> { c.morphisms().map(|f| a[f] && m.weq[f]).collect() };
    let (afib, acof) = (acyclic(&m.fib), acyclic(&m.cof));
    let factorization = c.morphisms().find_map(|f| {
        if !factors(f, &m.cof, &afib) {
            Some(format!(
                "{} has no factorization as a cofibration then an acyclic fibration",
                name(f)
            ))
        } else if !factors(f, &acof, &m.fib) {
            Some(format!(
                "{} has no factorization as an acyclic cofibration then a fibration",
                name(f)
            ))
        } else {
            None
        }
    });
    results.push(AxiomResult {
        axiom: Axiom::Factorization,
        witness: factorization,
    });

    ModelReport {
        results,
        functoriality_checked: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::examples;

    #[test]
    fn lifting_against_identities() {
        let c = examples::linear_order(3);
        for i in c.morphisms() {
            for x in c.objects() {
                assert!(square_lifts(&c, i, c.identity(x)).is_ok());
                assert!(square_lifts(&c, c.identity(x), i).is_ok());
            }
        }
        let a = examples::walking_arrow();
        let f = a.morphism_id("f").unwrap();
        let w = square_lifts(&a, f, f).unwrap_err();
        assert_eq!((w.top, w.bottom), (0, 1));
    }

    #[test]
    fn trivial_models_pass() {
        for c in [
            examples::walking_arrow(),
            examples::walking_iso(),
            examples::linear_order(3),
            examples::cyclic_group(3),
            examples::parallel_pair(),
        ] {
            let report = check_model(&ModelData::trivial(&c));
            assert!(report.passed(), "{report}");
            assert!(!report.functoriality_checked);
        }
    }

    #[test]
    fn single_mutations_fail() {
        for c in [
            examples::walking_arrow(),
            examples::walking_iso(),
            examples::linear_order(3),
        ] {
            let base = ModelData::trivial(&c);
            for k in ModelClass::ALL {
                for f in c.morphisms() {
                    let mut m = base.clone();
                    m.class_mut(k)[f] ^= true;
                    let report = check_model(&m);
                    assert!(!report.passed(), "{} toggled in {}", c.morphism_name(f), k.name());
                    assert!(report.failures().all(|r| r.witness.is_some()));
                }
            }
        }
    }

    #[test]
    fn retract_witness() {
        // a split idempotent: id_A is a retract of id_B
        let c = FinCategory::builder()
            .objects(["A", "B"])
            .morphism("s", "A", "B")
            .morphism("r", "B", "A")
            .morphism("e", "B", "B")
            .compose("r", "s", "id_A")
            .compose("s", "r", "e")
            .compose("e", "e", "e")
            .compose("e", "s", "s")
            .compose("r", "e", "r")
            .build()
            .unwrap();
        let (id_a, id_b) = (c.identity(0), c.identity(1));
        assert!(find_retraction(&c, id_a, id_b).is_some());
        assert!(find_retraction(&c, id_b, id_a).is_none());
        let mut m = ModelData::trivial(&c);
        m.cof[id_a] = false;
        let report = check_model(&m);
        let r = report.results.iter().find(|r| r.axiom == Axiom::Retracts).unwrap();
        assert!(r.witness.as_ref().unwrap().contains("retract"));
    }
}
