//! Localization at a class of weak equivalences by coset enumeration.
//!
//! Morphisms out of each object `x` of `C[W⁻¹]` are enumerated as the
//! classes of a right congruence on paths starting at `x`, generated by the
//! arrows of `C` and formal inverses of the weak equivalences, subject to
//! the composition table of `C` and `w·w⁻¹ = id = w⁻¹·w`.

use super::marked::MarkedCategory;
use super::ModelError;
use crate::budget::Budget;
use crate::fincat::{enumerate_functors, FinCategory, FinFunctor, MorId, Morphism, ObjId};

#[derive(Debug, Clone)]
struct Generator {
    src: ObjId,
    dst: ObjId,
    name: String,
}

/// Paths are sequences of generators in the order they are traversed.
type Path = Vec<usize>;

/// `C[W⁻¹]` with its localization functor `p: C → C[W⁻¹]`.
#[derive(Debug, Clone)]
pub struct Localization {
    pub category: FinCategory,
    pub functor: FinFunctor,
}

/// Right congruence enumeration for paths starting at one object.
struct CosetTable<'a> {
    gens: &'a [Generator],
    object: Vec<ObjId>,
    next: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    live: usize,
}

impl<'a> CosetTable<'a> {
    fn new(gens: &'a [Generator], start: ObjId) -> Self {
        CosetTable {
            gens,
            object: vec![start],
            next: vec![vec![None; gens.len()]],
            parent: vec![0],
            live: 1,
        }
    }

    fn find(&mut self, mut e: usize) -> usize {
        while self.parent[e] != e {
            self.parent[e] = self.parent[self.parent[e]];
            e = self.parent[e];
        }
        e
    }

    fn define(&mut self, e: usize, a: usize) -> usize {
        let n = self.object.len();
        self.object.push(self.gens[a].dst);
        self.next.push(vec![None; self.gens.len()]);
        self.parent.push(n);
        self.next[e][a] = Some(n);
        self.live += 1;
        n
    }

    fn step(&mut self, e: usize, a: usize, define: bool) -> Option<usize> {
        let e = self.find(e);
        match self.next[e][a] {
            Some(t) => Some(self.find(t)),
            None if define => Some(self.define(e, a)),
            None => None,
        }
    }

    fn trace(&mut self, e: usize, path: &[usize], define: bool) -> Option<usize> {
        let mut cur = self.find(e);
        for &a in path {
            cur = self.step(cur, a, define)?;
        }
        Some(cur)
    }

    fn coincide(&mut self, a: usize, b: usize) {
        let mut queue = vec![(a, b)];
        while let Some((a, b)) = queue.pop() {
            let (a, b) = (self.find(a), self.find(b));
            if a == b {
                continue;
            }
            let (keep, drop) = (a.min(b), a.max(b));
            self.parent[drop] = keep;
            self.live -= 1;
            for g in 0..self.gens.len() {
                if let Some(t) = self.next[drop][g] {
                    match self.next[keep][g] {
                        Some(s) => queue.push((s, t)),
                        None => self.next[keep][g] = Some(t),
                    }
                }
            }
        }
    }

    /// Runs until every live coset has all its arrows defined and every
    /// relation holds at it, or the cap is exceeded.
    fn enumerate(&mut self, relations: &[(ObjId, Path, Path)], cap: usize) -> Result<(), ModelError> {
        let hard_limit = cap.saturating_mul(64).saturating_add(1024);
        loop {
            let mut k = 0;
            while k < self.object.len() {
                for (src, u, v) in relations {
                    if self.find(k) != k {
                        break;
                    }
                    if *src != self.object[k] {
                        continue;
                    }
                    let a = self.trace(k, u, true).unwrap();
                    let b = self.trace(k, v, true).unwrap();
                    self.coincide(a, b);
                }
                if self.find(k) == k {
                    for g in 0..self.gens.len() {
                        if self.gens[g].src == self.object[k] && self.next[k][g].is_none() {
                            self.define(k, g);
                        }
                    }
                }
                if self.live > cap || self.object.len() > hard_limit {
                    return Err(ModelError::CapExceeded { cap });
                }
                k += 1;
            }
            if self.consistent(relations) {
                return Ok(());
            }
        }
    }

    fn consistent(&mut self, relations: &[(ObjId, Path, Path)]) -> bool {
        for e in 0..self.object.len() {
            if self.find(e) != e {
                continue;
            }
            for g in 0..self.gens.len() {
                if self.gens[g].src == self.object[e] && self.next[e][g].is_none() {
                    return false;
                }
            }
            for (src, u, v) in relations {
                if *src == self.object[e] && self.trace(e, u, false) != self.trace(e, v, false) {
                    return false;
                }
            }
        }
        true
    }
}

/// Computes `C[W⁻¹]`. Fails with [`ModelError::CapExceeded`] when more
/// than `cap` classes of paths out of some object are alive at once.
///
/// A class containing a morphism of `C` is named after it (the first in
/// declaration order), a class containing a formal inverse after
/// `w^-1`, and any other class after a shortest path, written in order of
/// traversal and joined by `;`.
pub fn localize(m: &MarkedCategory, cap: usize) -> Result<Localization, ModelError> {
    let c = &m.base;
    let mut gens: Vec<Generator> = Vec::new();
    let mut gen_of: Vec<Option<usize>> = vec![None; c.num_morphisms()];
    for f in c.non_identities() {
        gen_of[f] = Some(gens.len());
        gens.push(Generator {
            src: c.src(f),
            dst: c.dst(f),
            name: c.morphism_name(f).to_string(),
        });
    }
    let mut relations: Vec<(ObjId, Path, Path)> = Vec::new();
    for w in c.non_identities().filter(|&w| m.weq[w]) {
        let inv = gens.len();
        gens.push(Generator {
            src: c.dst(w),
            dst: c.src(w),
            name: format!("{}^-1", c.morphism_name(w)),
        });
        let g = gen_of[w].unwrap();
        relations.push((c.src(w), vec![g, inv], Vec::new()));
        relations.push((c.dst(w), vec![inv, g], Vec::new()));
    }
    let path_of = |f: MorId| -> Path { gen_of[f].into_iter().collect() };
    for f in c.non_identities() {
        for g in c.non_identities() {
            if let Some(h) = c.compose(g, f) {
                relations.push((c.src(f), vec![gen_of[f].unwrap(), gen_of[g].unwrap()], path_of(h)));
            }
        }
    }

    let n = c.num_objects();
    let mut tables = Vec::with_capacity(n);
    for x in c.objects() {
        let mut t = CosetTable::new(&gens, x);
        t.enumerate(&relations, cap)?;
        tables.push(t);
    }

    // number the classes: identities first, then the rest by source
    let mut global: Vec<Vec<Option<usize>>> = Vec::with_capacity(n);
    let mut words: Vec<Vec<Path>> = Vec::with_capacity(n);
    let mut non_identity: Vec<Morphism> = Vec::new();
    let mut owner: Vec<(ObjId, usize)> = (0..n).map(|x| (x, 0)).collect();
    for (x, t) in tables.iter_mut().enumerate() {
        let size = t.object.len();
        let mut word: Vec<Option<Path>> = vec![None; size];
        let mut order = vec![0];
        word[0] = Some(Vec::new());
        let mut i = 0;
        while i < order.len() {
            let e = order[i];
            for g in 0..gens.len() {
                if gens[g].src != t.object[e] {
                    continue;
                }
                let d = t.step(e, g, false).unwrap();
                if word[d].is_none() {
                    let mut w = word[e].clone().unwrap();
                    w.push(g);
                    word[d] = Some(w);
                    order.push(d);
                }
            }
            i += 1;
        }
        let mut ids = vec![None; size];
        ids[0] = Some(x);
        let mut names: Vec<Option<String>> = vec![None; size];
        // single generators first, so classes of C's arrows keep their names
        for (g, gen) in gens.iter().enumerate() {
            if gen.src == x {
                let d = t.step(0, g, false).unwrap();
                if d != 0 && names[d].is_none() {
                    names[d] = Some(gen.name.clone());
                }
            }
        }
        for &e in &order[1..] {
            let name = names[e].take().unwrap_or_else(|| {
                let parts: Vec<&str> = word[e]
                    .as_ref()
                    .unwrap()
                    .iter()
                    .map(|&g| gens[g].name.as_str())
                    .collect();
                parts.join(";")
            });
            ids[e] = Some(n + non_identity.len());
            owner.push((x, e));
            non_identity.push(Morphism {
                name,
                src: x,
                dst: t.object[e],
            });
        }
        global.push(ids);
        words.push(word.into_iter().map(Option::unwrap_or_default).collect());
    }

    let category = FinCategory::from_parts(c.object_names().to_vec(), non_identity, |g, f| {
        let (x, ef) = owner[f];
        let (y, eg) = owner[g];
        let e = tables[x].trace(ef, &words[y][eg], false).unwrap();
        global[x][e].unwrap()
    });
    let morphism_map = c
        .morphisms()
        .map(|f| {
            if c.is_identity(f) {
                c.src(f)
            } else {
                let x = c.src(f);
                let e = tables[x].step(0, gen_of[f].unwrap(), false).unwrap();
                global[x][e].unwrap()
            }
        })
        .collect();
    let functor = FinFunctor::new(c.clone(), category.clone(), c.objects().collect(), morphism_map)?;
    Ok(Localization { category, functor })
}

/// Result of the universality check against one test category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalityReport {
    /// Functors `C → D` inverting the weak equivalences.
    pub inverting: usize,
    /// Functors `C[W⁻¹] → D`.
    pub extensions: usize,
}

/// Checks that every functor `C → D` sending weak equivalences to
/// isomorphisms factors through `p` in exactly one way, and that every
/// functor out of `C[W⁻¹]` restricts to such a functor.
pub fn check_localization_universal(
    m: &MarkedCategory,
    loc: &Localization,
    d: &FinCategory,
    budget: &mut Budget,
) -> Result<UniversalityReport, ModelError> {
    let c = &m.base;
    let inverting: Vec<FinFunctor> = enumerate_functors(c, d, budget)?
        .into_iter()
        .filter(|f| c.morphisms().all(|w| !m.weq[w] || d.is_iso(f.mor(w))))
        .collect();
    let extensions = enumerate_functors(&loc.category, d, budget)?;
    let mut hits = vec![0usize; inverting.len()];
    for g in &extensions {
        let restricted = loc.functor.then(g)?;
        match inverting.iter().position(|f| *f == restricted) {
            Some(i) => hits[i] += 1,
            None => {
                return Err(ModelError::NotUniversal(
                    "an extension restricts to a non-inverting functor".into(),
                ))
            }
        }
    }
    if let Some(i) = hits.iter().position(|&h| h != 1) {
        let f = &inverting[i];
        let images: Vec<String> = c
            .non_identities()
            .map(|g| format!("{}↦{}", c.morphism_name(g), d.morphism_name(f.mor(g))))
            .collect();
        return Err(ModelError::NotUniversal(format!(
            "functor [{}] has {} factorizations",
            images.join(", "),
            hits[i]
        )));
    }
    Ok(UniversalityReport {
        inverting: inverting.len(),
        extensions: extensions.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::examples;
    use crate::modelcat::saturate_two_of_three;

    #[test]
    fn inverting_isomorphisms_changes_nothing() {
        for c in [
            examples::walking_arrow(),
            examples::walking_iso(),
            examples::linear_order(3),
            examples::cyclic_group(3),
        ] {
            let m = saturate_two_of_three(&c, &[]);
            let loc = localize(&m, 100).unwrap();
            assert_eq!(loc.category.num_morphisms(), c.num_morphisms());
            let mut names: Vec<&str> = c.morphisms().map(|f| c.morphism_name(f)).collect();
            let mut loc_names: Vec<&str> = loc
                .category
                .morphisms()
                .map(|f| loc.category.morphism_name(f))
                .collect();
            names.sort_unstable();
            loc_names.sort_unstable();
            assert_eq!(names, loc_names);
        }
    }

    #[test]
    fn walking_weak_equivalence() {
        let c = examples::walking_arrow();
        let f = c.morphism_id("f").unwrap();
        let m = saturate_two_of_three(&c, &[f]);
        let loc = localize(&m, 100).unwrap();
        assert_eq!(loc.category.num_morphisms(), 4);
        assert!(loc.category.is_iso(loc.functor.mor(f)));
        assert!(loc.category.morphism_id("f^-1").is_some());
        for d in [examples::walking_arrow(), examples::walking_iso()] {
            let r = check_localization_universal(&m, &loc, &d, &mut Budget::unlimited()).unwrap();
            assert_eq!(r.inverting, r.extensions);
        }
    }

    #[test]
    fn terminal_and_cap() {
        let t = examples::terminal();
        let loc = localize(&saturate_two_of_three(&t, &[]), 1).unwrap();
        assert_eq!(loc.category.num_morphisms(), 1);
        let c = examples::walking_arrow();
        let f = c.morphism_id("f").unwrap();
        assert!(matches!(
            localize(&saturate_two_of_three(&c, &[f]), 1),
            Err(ModelError::CapExceeded { cap: 1 })
        ));
    }

    #[test]
    fn inverting_an_idempotent() {
        // monoid {1, e} with e² = e: inverting e collapses it to 1
        let c = examples::monoid(&["1", "e"], &[vec![0, 1], vec![1, 1]]).unwrap();
        let e = c.morphism_id("e").unwrap();
        let loc = localize(&saturate_two_of_three(&c, &[e]), 10).unwrap();
        assert_eq!(loc.category.num_morphisms(), 1);
    }
}
