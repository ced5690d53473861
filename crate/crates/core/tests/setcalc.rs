mod common;

use catsimp::setcalc::{coequalizer, colimit, coproduct, limit, pullback, pushout, Diagram};
use catsimp::{FinFunction, FinSet};
use common::*;

/// Elements of the disjoint union as `(object, element)` pairs.
fn union_members(d: &Diagram) -> Vec<(usize, usize)> {
    d.shape
        .objects()
        .flat_map(|x| (0..d.set(x).len()).map(move |a| (x, a)))
        .collect()
}

/// Cocones into a `k`-point set, by trying every function on the disjoint union.
fn cocones_into(d: &Diagram, k: usize) -> Vec<Vec<usize>> {
    let members = union_members(d);
    let pos = |x: usize, a: usize| members.iter().position(|&m| m == (x, a)).unwrap();
    all_functions(members.len(), k)
        .into_iter()
        .filter(|h| {
            d.shape.morphisms().all(|m| {
                let (x, y) = (d.shape.src(m), d.shape.dst(m));
                (0..d.set(x).len()).all(|a| h[pos(x, a)] == h[pos(y, d.apply(m, a))])
            })
        })
        .collect()
}

#[test]
fn colimit_is_universal_against_small_cocones() {
    let mut r = rng(101);
    for _ in 0..150 {
        let shape = random_shape(&mut r);
        let d = random_diagram(&mut r, &shape, 3);
        let cocone = colimit(&d);
        assert!(cocone.is_cocone_under(&d));
        let members = union_members(&d);
        let to_apex: Vec<usize> = members.iter().map(|&(x, a)| cocone.legs[x].apply(a)).collect();
        // jointly surjective legs
        assert!((0..cocone.apex.len()).all(|c| to_apex.contains(&c)));
        for k in 0..=2 {
            for h in cocones_into(&d, k) {
                let factorizations = all_functions(cocone.apex.len(), k)
                    .into_iter()
                    .filter(|u| to_apex.iter().zip(&h).all(|(&c, &t)| u[c] == t))
                    .count();
                assert_eq!(factorizations, 1);
            }
        }
    }
}

#[test]
fn limit_apex_matches_compatible_families() {
    let mut r = rng(102);
    for _ in 0..150 {
        let shape = random_shape(&mut r);
        let d = random_diagram(&mut r, &shape, 3);
        assert_eq!(limit(&d).apex.len(), compatible_families(&d).len());
    }
}

fn set(name: &str, elems: &[&str]) -> FinSet {
    FinSet::new(name, elems.iter().copied()).unwrap()
}

#[test]
fn pullback_and_pushout_sizes() {
    let a = set("A", &["a1", "a2"]);
    let b = set("B", &["b1", "b2", "b3"]);
    let c = set("C", &["c1", "c2"]);
    let f = FinFunction::new(a.clone(), c.clone(), vec![0, 1]).unwrap();
    let g = FinFunction::new(b.clone(), c.clone(), vec![0, 0, 1]).unwrap();
    // pairs over c1: 1 × 2, over c2: 1 × 1
    assert_eq!(pullback(&f, &g).unwrap().apex.len(), 3);

    let s = set("S", &["s"]);
    let i = FinFunction::new(s.clone(), a.clone(), vec![0]).unwrap();
    let j = FinFunction::new(s, b.clone(), vec![2]).unwrap();
    assert_eq!(pushout(&i, &j).unwrap().apex.len(), 4);
    assert_eq!(coproduct(&[a, b]).apex.len(), 5);
}

#[test]
fn coequalizer_of_identity_and_swap_has_one_class() {
    let x = set("X", &["a", "b"]);
    let id = FinFunction::identity(&x);
    let swap = FinFunction::new(x.clone(), x, vec![1, 0]).unwrap();
    assert_eq!(coequalizer(&id, &swap).unwrap().apex.len(), 1);
}
