//! Homomorphisms between presentations and amalgamated pushouts.

use super::presentation::{exponent_vector, inverse_word, Letter, Presentation, Word};
use super::smith::in_row_lattice;
use super::HomotopyError;

/// A homomorphism given by the image word of each source generator.
///
/// Construction checks that every source relator maps into the relator
/// lattice of the target's abelianization. This is necessary but not
/// sufficient for the assignment to define a homomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHomSpec {
    pub source: Presentation,
    pub target: Presentation,
    pub images: Vec<Word>,
}

impl GroupHomSpec {
    pub fn new(source: Presentation, target: Presentation, images: Vec<Word>) -> Result<Self, HomotopyError> {
        if images.len() != source.generators.len() {
            return Err(HomotopyError::ImageCount {
                expected: source.generators.len(),
                found: images.len(),
            });
        }
        let n = target.generators.len();
        if images.iter().flatten().any(|l| l.gen >= n) {
            return Err(HomotopyError::BadWord("image letter out of range".into()));
        }
        let lattice = target.relation_matrix();
        for (i, r) in source.relators.iter().enumerate() {
            let v = exponent_vector(&substitute(r, &images), n);
            if !in_row_lattice(&lattice, &v) {
                return Err(HomotopyError::RelatorNotPreserved(i));
            }
        }
        Ok(GroupHomSpec { source, target, images })
    }

    /// Images given as token lists, one per source generator, in order.
    pub fn from_tokens<S: AsRef<str>>(
        source: Presentation,
        target: Presentation,
        images: &[Vec<S>],
    ) -> Result<Self, HomotopyError> {
        let images = images.iter().map(|w| target.parse_word(w)).collect::<Result<_, _>>()?;
        Self::new(source, target, images)
    }

    pub fn identity(p: &Presentation) -> Self {
        let images = (0..p.generators.len()).map(|g| vec![Letter::new(g)]).collect();
        GroupHomSpec {
            source: p.clone(),
            target: p.clone(),
            images,
        }
    }

    pub fn apply(&self, w: &[Letter]) -> Word {
        substitute(w, &self.images)
    }
}

fn substitute(w: &[Letter], images: &[Word]) -> Word {
    let mut out = Vec::new();
    for l in w {
        let img = &images[l.gen];
        if l.inverse {
            out.extend(inverse_word(img));
        } else {
            out.extend_from_slice(img);
        }
    }
    out
}

/// The pushout `P₁ *_{P₀} P₂`. Generators of `P₂` whose names clash with
/// `P₁` get primes appended.
pub fn svk_pushout(phi1: &GroupHomSpec, phi2: &GroupHomSpec) -> Result<Presentation, HomotopyError> {
    if phi1.source != phi2.source {
        return Err(HomotopyError::SourceMismatch);
    }
    let (p1, p2) = (&phi1.target, &phi2.target);
    let offset = p1.generators.len();
    let mut generators = p1.generators.clone();
    for g in &p2.generators {
        let mut name = g.clone();
        while generators.contains(&name) || (name != *g && p2.generators.contains(&name)) {
            name.push('\'');
        }
        generators.push(name);
    }
    let shift = |w: &[Letter]| -> Word {
        w.iter()
            .map(|l| Letter {
                gen: l.gen + offset,
                inverse: l.inverse,
            })
            .collect()
    };
    let mut relators: Vec<Word> = p1.relators.clone();
    relators.extend(p2.relators.iter().map(|r| shift(r)));
    for g in 0..phi1.source.generators.len() {
        let mut w = phi1.images[g].clone();
        w.extend(inverse_word(&shift(&phi2.images[g])));
        relators.push(w);
    }
    Presentation::new(generators, relators)
}
