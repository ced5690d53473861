//! Monoid actions on finite sets and their orbits.

use std::collections::VecDeque;

use super::monoid::{check_group, FinMonoid};
use super::AlgebraError;
use crate::setcalc::{product, pushout, FinFunction, FinSet};

/// A left action; `act[x][y]` is `x · y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinAction {
    pub actor: FinMonoid,
    pub space: FinSet,
    pub act: Vec<Vec<usize>>,
}

/// Checks `e · y = y` and `(x * x') · y = x · (x' · y)`.
pub fn check_action(actor: FinMonoid, space: FinSet, act: Vec<Vec<usize>>) -> Result<FinAction, AlgebraError> {
    let (m, n) = (actor.len(), space.len());
    if act.len() != m || act.iter().any(|row| row.len() != n || row.iter().any(|&y| y >= n)) {
        return Err(AlgebraError::NotTotal("action table".into()));
    }
    if let Some(y) = (0..n).find(|&y| act[actor.unit][y] != y) {
        return Err(AlgebraError::UnitAxiomFailed(space.element(y).to_string()));
    }
    for x in 0..m {
        for x2 in 0..m {
            for y in 0..n {
                if act[actor.mul(x, x2)][y] != act[x][act[x2][y]] {
                    return Err(AlgebraError::AssocAxiomFailed {
                        x: actor.carrier.element(x).to_string(),
                        x2: actor.carrier.element(x2).to_string(),
                        y: space.element(y).to_string(),
                    });
                }
            }
        }
    }
    Ok(FinAction { actor, space, act })
}

impl FinAction {
    /// `M` acting on any set by the identity.
    pub fn trivial(actor: FinMonoid, space: FinSet) -> Self {
        let act = vec![(0..space.len()).collect(); actor.len()];
        FinAction { actor, space, act }
    }
}

/// The homomorphism `G → Aut(Y)`, one permutation per group element.
pub fn action_to_aut_hom(a: &FinAction) -> Result<Vec<Vec<usize>>, AlgebraError> {
    check_group(&a.actor)?;
    Ok(a.act.clone())
}

/// Orbits as the pushout of `Y ← M × Y → Y` (projection and action): each
/// `y` goes to the class of its image in the first copy of `Y`.
pub fn orbits_by_pushout(a: &FinAction) -> Result<Vec<Vec<usize>>, AlgebraError> {
    let p = product(&[a.actor.carrier.clone(), a.space.clone()]);
    let (pm, py) = (&p.legs[0], &p.legs[1]);
    let acting = FinFunction::new(
        p.apex.clone(),
        a.space.clone(),
        (0..p.apex.len()).map(|t| a.act[pm.apply(t)][py.apply(t)]).collect(),
    )?;
    let cocone = pushout(py, &acting)?;
    let class_of: Vec<usize> = (0..a.space.len()).map(|y| cocone.legs[0].apply(y)).collect();
    Ok(partition(&class_of))
}

/// Orbits by breadth-first closure of `y ~ x · y`, symmetrized.
pub fn orbits_by_closure(a: &FinAction) -> Vec<Vec<usize>> {
    let n = a.space.len();
    let mut adjacent = vec![Vec::new(); n];
    for row in &a.act {
        for (y, &z) in row.iter().enumerate() {
            adjacent[y].push(z);
            adjacent[z].push(y);
        }
    }
    let mut label = vec![usize::MAX; n];
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        label[start] = start;
        let mut queue = VecDeque::from([start]);
        while let Some(y) = queue.pop_front() {
            for &z in &adjacent[y] {
                if label[z] == usize::MAX {
                    label[z] = start;
                    queue.push_back(z);
                }
            }
        }
    }
    partition(&label)
}

/// Classes of a labelling, each sorted, ordered by least member.
fn partition(label: &[usize]) -> Vec<Vec<usize>> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut slot: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    for (y, &l) in label.iter().enumerate() {
        let k = *slot.entry(l).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[k].push(y);
    }
    classes
}

/// Orbits, computed both ways; disagreement is an error.
pub fn orbit(a: &FinAction) -> Result<Vec<Vec<String>>, AlgebraError> {
    let by_pushout = orbits_by_pushout(a)?;
    if by_pushout != orbits_by_closure(a) {
        return Err(AlgebraError::OrbitMismatch);
    }
    Ok(by_pushout
        .into_iter()
        .map(|c| c.into_iter().map(|y| a.space.element(y).to_string()).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_monoid;

    fn swap_on(n: usize) -> FinAction {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let space = FinSet::new("Y", (1..=n).map(|i| i.to_string())).unwrap();
        check_action(FinMonoid::cyclic(2), space, vec![(0..n).collect(), swap]).unwrap()
    }

    #[test]
    fn orbits() {
        let t = FinAction::trivial(FinMonoid::cyclic(3), FinSet::range("Y", 3));
        assert_eq!(orbit(&t).unwrap().len(), 3);
        assert_eq!(orbit(&swap_on(2)).unwrap(), vec![vec!["1", "2"]]);
        assert_eq!(orbit(&swap_on(3)).unwrap(), vec![vec!["1", "2"], vec!["3"]]);
    }

    #[test]
    fn aut_hom() {
        let a = swap_on(2);
        let perms = action_to_aut_hom(&a).unwrap();
        assert_eq!(perms, vec![vec![0, 1], vec![1, 0]]);
        let max = check_monoid(FinSet::range("B", 2), vec![vec![0, 1], vec![1, 1]]).unwrap();
        let t = FinAction::trivial(max, FinSet::range("Y", 1));
        assert!(matches!(action_to_aut_hom(&t), Err(AlgebraError::NotAGroup(_))));
    }

    #[test]
    fn axiom_failures() {
        let space = FinSet::range("Y", 2);
        assert!(matches!(
            check_action(FinMonoid::cyclic(2), space.clone(), vec![vec![1, 0], vec![1, 0]]),
            Err(AlgebraError::UnitAxiomFailed(_))
        ));
        assert!(matches!(
            check_action(FinMonoid::cyclic(2), space, vec![vec![0, 1], vec![0, 0]]),
            Err(AlgebraError::AssocAxiomFailed { .. })
        ));
    }
}
