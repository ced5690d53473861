mod common;

use catsimp::algebra::{
    check_group, eckmann_hilton_scan, interchange, orbit, orbits_by_closure, unital_operations, FinMonoid,
};
use catsimp::simplicial::{classify, nerve, Verdict};
use catsimp::Budget;
use common::*;

#[test]
fn orbit_reports_agree_with_oracle() {
    let mut r = rng(401);
    for _ in 0..200 {
        let a = random_action(&mut r);
        let named = orbit(&a).unwrap();
        let mut oracle: Vec<Vec<String>> = orbit_oracle(&a)
            .into_iter()
            .map(|o| o.into_iter().map(|y| a.space.element(y).to_string()).collect())
            .collect();
        let mut got = named.clone();
        for o in got.iter_mut().chain(oracle.iter_mut()) {
            o.sort();
        }
        got.sort();
        oracle.sort();
        assert_eq!(got, oracle);
        assert_eq!(orbits_by_closure(&a).len(), named.len());
    }
}

#[test]
fn cyclic_groups_are_groups_with_kan_deloopings() {
    for n in 1..=4 {
        let m = FinMonoid::cyclic(n);
        let inv = check_group(&m).unwrap();
        assert!((0..n).all(|a| m.mul(a, inv[a]) == m.unit));
        let bg = m.delooping();
        let r = classify(&nerve(&bg, 2), 2, &mut Budget::new(1_000_000)).unwrap();
        assert_eq!(r.verdict, Verdict::Kan);
    }
}

#[test]
fn interchange_pairs_are_equal_commutative_operations() {
    for n in 1..=2 {
        let ops = unital_operations(n);
        for (a, _) in &ops {
            for (b, _) in &ops {
                if interchange(a, b) {
                    assert_eq!(a, b);
                    assert!((0..n).all(|x| (0..n).all(|y| a[x][y] == a[y][x])));
                }
            }
        }
    }
}

#[test]
fn scan_respects_budget_and_size_limit() {
    assert!(eckmann_hilton_scan(3, &mut Budget::new(10)).is_err());
    assert!(eckmann_hilton_scan(5, &mut Budget::new(1_000)).is_err());
    let reports = eckmann_hilton_scan(2, &mut Budget::new(1_000)).unwrap();
    assert_eq!(
        reports.iter().map(|r| r.unital_operations).collect::<Vec<_>>(),
        vec![1, 4]
    );
}
