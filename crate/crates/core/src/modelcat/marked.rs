//! Classes of weak equivalences and the 2-out-of-3 closure.

use super::ModelError;
use crate::fincat::{FinCategory, MorId};

/// A finite category with a class of weak equivalences that contains every
/// isomorphism and is closed under 2-out-of-3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedCategory {
    pub base: FinCategory,
    /// Membership flag per morphism.
    pub weq: Vec<bool>,
}

impl MarkedCategory {
    /// Checks the invariants; use [`saturate_two_of_three`] to produce them.
    pub fn new(base: FinCategory, weq: Vec<bool>) -> Result<Self, ModelError> {
        if weq.len() != base.num_morphisms() {
            return Err(ModelError::ClassSize {
                expected: base.num_morphisms(),
                found: weq.len(),
            });
        }
        if let Some(w) = two_of_three_violation(&base, &weq) {
            return Err(ModelError::NotSaturated(w));
        }
        Ok(MarkedCategory { base, weq })
    }

    pub fn weak_equivalences(&self) -> Vec<MorId> {
        members(&self.weq)
    }

    pub fn is_weq(&self, f: MorId) -> bool {
        self.weq[f]
    }
}

pub(crate) fn members(class: &[bool]) -> Vec<MorId> {
    (0..class.len()).filter(|&f| class[f]).collect()
}

/// Describes a missing isomorphism or a 2-out-of-3 triple with exactly
/// two members in the class, if there is one.
pub(crate) fn two_of_three_violation(c: &FinCategory, class: &[bool]) -> Option<String> {
    if let Some(f) = c.morphisms().find(|&f| c.is_iso(f) && !class[f]) {
        return Some(format!("isomorphism {} is not a weak equivalence", c.morphism_name(f)));
    }
    for f in c.morphisms() {
        for g in c.morphisms() {
            if let Some(h) = c.compose(g, f) {
                if usize::from(class[f]) + usize::from(class[g]) + usize::from(class[h]) == 2 {
                    return Some(format!(
                        "2-out-of-3 fails for {} ∘ {} = {}",
                        c.morphism_name(g),
                        c.morphism_name(f),
                        c.morphism_name(h)
                    ));
                }
            }
        }
    }
    None
}

/// The least class containing `seed` and all isomorphisms and closed under
/// 2-out-of-3.
pub fn saturate_two_of_three(c: &FinCategory, seed: &[MorId]) -> MarkedCategory {
    let mut weq: Vec<bool> = c.morphisms().map(|f| c.is_iso(f)).collect();
    for &f in seed {
        weq[f] = true;
    }
    let mut triples = Vec::new();
    for f in c.morphisms() {
        for g in c.morphisms() {
            if let Some(h) = c.compose(g, f) {
                triples.push((f, g, h));
            }
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for &(f, g, h) in &triples {
            let count = usize::from(weq[f]) + usize::from(weq[g]) + usize::from(weq[h]);
            if count == 2 {
                weq[f] = true;
                weq[g] = true;
                weq[h] = true;
                changed = true;
            }
        }
    }
    MarkedCategory { base: c.clone(), weq }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::examples;

    #[test]
    fn empty_seed_gives_isomorphisms() {
        let c = examples::walking_iso();
        let m = saturate_two_of_three(&c, &[]);
        assert!(m.weq.iter().all(|&b| b));
        let a = examples::walking_arrow();
        assert_eq!(saturate_two_of_three(&a, &[]).weak_equivalences(), vec![0, 1]);
    }

    #[test]
    fn closure_adds_third_morphism() {
        let c = examples::linear_order(3);
        let name = |f: MorId| c.morphism_name(f).to_string();
        let f = c.morphisms().find(|&f| c.src(f) == 0 && c.dst(f) == 1).unwrap();
        let gf = c.morphisms().find(|&f| c.src(f) == 0 && c.dst(f) == 2).unwrap();
        let g = c.morphisms().find(|&f| c.src(f) == 1 && c.dst(f) == 2).unwrap();
        let m = saturate_two_of_three(&c, &[f, gf]);
        assert!(m.is_weq(g), "{} missing", name(g));
        assert_eq!(saturate_two_of_three(&c, &m.weak_equivalences()), m);
        assert!(MarkedCategory::new(c.clone(), m.weq.clone()).is_ok());
        let mut partial = m.weq.clone();
        partial[g] = false;
        assert!(matches!(
            MarkedCategory::new(c, partial),
            Err(ModelError::NotSaturated(_))
        ));
    }
}
