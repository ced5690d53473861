//! Shared generators and brute-force oracles for the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::path::PathBuf;

use catsimp::algebra::{check_action, check_monoid, FinAction};
use catsimp::fincat::examples;
use catsimp::io::{parse_json, CategoryFile, SimplicialSetFile};
use catsimp::{Diagram, FinCategory, FinSet, SimplicialSet};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DEFAULT_SEED: u64 = 0x5EED_CA75;

/// Seed for every randomized test; override with `CATSIMP_SEED`.
pub fn seed() -> u64 {
    std::env::var("CATSIMP_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

/// Independent stream per test, derived from the global seed.
pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed());
    r.set_stream(stream);
    r
}

pub fn proptest_runner(cases: u32) -> TestRunner {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed().to_le_bytes());
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &bytes))
}

pub fn data_path(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect()
}

pub fn load_category(name: &str) -> FinCategory {
    let text = std::fs::read_to_string(data_path(name)).unwrap();
    parse_json::<CategoryFile>(&text).unwrap().to_category().unwrap()
}

pub fn load_sset(name: &str) -> SimplicialSet {
    let text = std::fs::read_to_string(data_path(name)).unwrap();
    parse_json::<SimplicialSetFile>(&text).unwrap().to_sset().unwrap()
}

pub const CORPUS_CATEGORIES: &[&str] = &[
    "walking_arrow.json",
    "walking_iso.json",
    "z2.json",
    "linear3.json",
    "parallel_pair.json",
    "cospan.json",
    "span.json",
    "zigzag.json",
];

fn random_poset(rng: &mut ChaCha8Rng) -> FinCategory {
    let n = rng.gen_range(1..=3);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let rank: Vec<usize> = (0..n).map(|a| order.iter().position(|&b| b == a).unwrap()).collect();
    let mut rel = vec![vec![false; n]; n];
    for a in 0..n {
        rel[a][a] = true;
        for b in 0..n {
            if rank[a] < rank[b] && rng.gen_bool(0.5) {
                rel[a][b] = true;
            }
        }
    }
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                if rel[a][k] && rel[k][b] {
                    rel[a][b] = true;
                }
            }
        }
    }
    let names: Vec<String> = ["P", "Q", "R"][..n].iter().map(|s| s.to_string()).collect();
    examples::poset(names, |a, b| rel[a][b])
}

fn small_monoid(k: usize) -> FinCategory {
    match k {
        0 => examples::cyclic_group(2),
        1 => examples::cyclic_group(3),
        // {1, e} with e idempotent
        2 => examples::monoid(&["1", "e"], &[vec![0, 1], vec![1, 1]]).unwrap(),
        // {1, a, b} with xy = x for x, y ∈ {a, b}
        _ => examples::monoid(&["1", "a", "b"], &[vec![0, 1, 2], vec![1, 1, 1], vec![2, 2, 2]]).unwrap(),
    }
}

fn fork(coequalized: bool) -> FinCategory {
    let mut b = FinCategory::builder()
        .objects(["A", "B", "C"])
        .morphism("f", "A", "B")
        .morphism("g", "A", "B")
        .morphism("h", "B", "C")
        .morphism("hf", "A", "C");
    if coequalized {
        b = b.compose("h", "f", "hf").compose("h", "g", "hf");
    } else {
        b = b
            .morphism("hg", "A", "C")
            .compose("h", "f", "hf")
            .compose("h", "g", "hg");
    }
    b.build().unwrap()
}

fn retract_arrow() -> FinCategory {
    FinCategory::builder()
        .objects(["A", "B"])
        .morphism("e", "A", "A")
        .morphism("f", "A", "B")
        .compose("e", "e", "e")
        .compose("f", "e", "f")
        .build()
        .unwrap()
}

/// A random shape with at most 3 objects and 5 non-identity morphisms.
pub fn random_shape(rng: &mut ChaCha8Rng) -> FinCategory {
    match rng.gen_range(0..10) {
        0..=3 => random_poset(rng),
        4 => small_monoid(rng.gen_range(0..4)),
        5 => examples::parallel_pair(),
        6 => examples::walking_iso(),
        7 => fork(rng.gen_bool(0.5)),
        8 => retract_arrow(),
        _ => [examples::cospan(), examples::span()].choose(rng).unwrap().clone(),
    }
}

/// A random set-valued functor with sets of size at most `max_size`.
/// Images of non-identity morphisms are drawn at random and then forced
/// along composites; inconsistent draws are rejected.
pub fn random_diagram(rng: &mut ChaCha8Rng, shape: &FinCategory, max_size: usize) -> Diagram {
    let triples = shape.composite_triples();
    loop {
        let sizes: Vec<usize> = shape.objects().map(|_| rng.gen_range(0..=max_size)).collect();
        if shape
            .morphisms()
            .any(|m| sizes[shape.src(m)] > 0 && sizes[shape.dst(m)] == 0)
        {
            continue;
        }
        let mut maps: Vec<Vec<usize>> = shape
            .morphisms()
            .map(|m| {
                let (s, t) = (sizes[shape.src(m)], sizes[shape.dst(m)]);
                if shape.is_identity(m) {
                    (0..s).collect()
                } else {
                    (0..s).map(|_| rng.gen_range(0..t)).collect()
                }
            })
            .collect();
        for _ in 0..3 {
            for &(g, f, h) in &triples {
                if !shape.is_identity(h) {
                    let composed: Vec<usize> = maps[f].iter().map(|&a| maps[g][a]).collect();
                    maps[h] = composed;
                }
            }
        }
        let sets: Vec<FinSet> = shape
            .objects()
            .map(|x| {
                let name = shape.object_name(x).to_lowercase();
                FinSet::new(shape.object_name(x), (0..sizes[x]).map(|i| format!("{name}{i}"))).unwrap()
            })
            .collect();
        if let Ok(d) = Diagram::new(shape.clone(), sets, maps) {
            return d;
        }
    }
}

/// All tuples `(a_x)_x` in the product of the diagram's sets, in
/// lexicographic order.
fn all_tuples(d: &Diagram) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for x in d.shape.objects() {
        let n = d.set(x).len();
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |a| {
                    let mut t = t.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    out
}

/// Compatible families, i.e. cones from a point, by brute force.
pub fn compatible_families(d: &Diagram) -> Vec<Vec<usize>> {
    all_tuples(d)
        .into_iter()
        .filter(|t| {
            d.shape
                .morphisms()
                .all(|m| d.apply(m, t[d.shape.src(m)]) == t[d.shape.dst(m)])
        })
        .collect()
}

/// Every cone with apex `{0..k-1}`, given as `k` compatible families.
pub fn cones_with_apex(d: &Diagram, k: usize) -> Vec<Vec<Vec<usize>>> {
    let fams = compatible_families(d);
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|c| {
                fams.iter().map(move |f| {
                    let mut c = c.clone();
                    c.push(f.clone());
                    c
                })
            })
            .collect();
    }
    out
}

/// Number of natural transformations `f ⇒ g`, by trying every family of
/// functions.
pub fn count_nat_brute(f: &Diagram, g: &Diagram) -> usize {
    let c = &f.shape;
    let mut families: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for x in c.objects() {
        let (s, t) = (f.set(x).len(), g.set(x).len());
        let functions = all_functions(s, t);
        families = families
            .into_iter()
            .flat_map(|fam| {
                functions.iter().map(move |h| {
                    let mut fam = fam.clone();
                    fam.push(h.clone());
                    fam
                })
            })
            .collect();
    }
    families
        .iter()
        .filter(|alpha| {
            c.morphisms().all(|m| {
                let (x, y) = (c.src(m), c.dst(m));
                (0..f.set(x).len()).all(|a| alpha[y][f.apply(m, a)] == g.apply(m, alpha[x][a]))
            })
        })
        .count()
}

pub fn all_functions(s: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..s {
        out = out
            .into_iter()
            .flat_map(|h| {
                (0..t).map(move |b| {
                    let mut h = h.clone();
                    h.push(b);
                    h
                })
            })
            .collect();
    }
    out
}

/// A random action: a transformation monoid generated by one or two random
/// self-maps of a set of up to 4 points, acting by evaluation.
pub fn random_action(rng: &mut ChaCha8Rng) -> FinAction {
    let n = rng.gen_range(1..=4);
    let permutations_only = n == 4 || rng.gen_bool(0.3);
    let gens: Vec<Vec<usize>> = (0..rng.gen_range(1..=2))
        .map(|_| {
            if permutations_only {
                let mut p: Vec<usize> = (0..n).collect();
                p.shuffle(rng);
                p
            } else {
                (0..n).map(|_| rng.gen_range(0..n)).collect()
            }
        })
        .collect();
    let identity: Vec<usize> = (0..n).collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let next: Vec<usize> = elements[i].iter().map(|&y| g[y]).collect();
            if !index.contains_key(&next) {
                index.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }
    // (a * b)(y) = a(b(y))
    let table: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| {
            elements
                .iter()
                .map(|b| index[&b.iter().map(|&y| a[y]).collect::<Vec<_>>()])
                .collect()
        })
        .collect();
    let carrier = FinSet::new("M", (0..elements.len()).map(|i| format!("m{i}"))).unwrap();
    let monoid = check_monoid(carrier, table).unwrap();
    let space = FinSet::new("Y", (0..n).map(|i| format!("y{i}"))).unwrap();
    let act = elements.clone();
    check_action(monoid, space, act).unwrap()
}

/// Orbits as the classes of the equivalence generated by `y ~ m·y`, each
/// sorted, ordered by least member.
pub fn orbit_oracle(a: &FinAction) -> Vec<Vec<usize>> {
    let n = a.space.len();
    let mut class: Vec<usize> = (0..n).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for row in &a.act {
            for y in 0..n {
                let (p, q) = (class[y], class[row[y]]);
                if p != q {
                    let (lo, hi) = (p.min(q), p.max(q));
                    class.iter_mut().filter(|c| **c == hi).for_each(|c| *c = lo);
                    changed = true;
                }
            }
        }
    }
    let reps: BTreeSet<usize> = class.iter().copied().collect();
    reps.into_iter()
        .map(|r| (0..n).filter(|&y| class[y] == r).collect())
        .collect()
}
