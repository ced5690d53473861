//! Exhaustive search for pairs of unital operations satisfying the
//! interchange law.

use super::AlgebraError;
use crate::budget::Budget;

type Table = Vec<Vec<usize>>;

/// Every unital binary operation on `{0, …, n-1}` with its unit.
pub fn unital_operations(n: usize) -> Vec<(Table, usize)> {
    let mut out = Vec::new();
    for e in 0..n {
        let free: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != e && b != e)
            .collect();
        let total = n.pow(free.len() as u32);
        for code in 0..total {
            let mut t: Table = (0..n)
                .map(|a| {
                    (0..n)
                        .map(|b| {
                            if a == e {
                                b
                            } else if b == e {
                                a
                            } else {
                                0
                            }
                        })
                        .collect()
                })
                .collect();
            let mut c = code;
            for &(a, b) in &free {
                t[a][b] = c % n;
                c /= n;
            }
            out.push((t, e));
        }
    }
    out
}

/// `(a ⋆ b) ∘ (c ⋆ d) = (a ∘ c) ⋆ (b ∘ d)` for all `a, b, c, d`.
pub fn interchange(circ: &Table, star: &Table) -> bool {
    let n = circ.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if circ[star[a][b]][star[c][d]] != star[circ[a][c]][circ[b][d]] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn associative(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
}

fn commutative(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| t[a][b] == t[b][a]))
}

/// A pair satisfying interchange for which the conclusion fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterchangeCounterexample {
    pub circ: Table,
    pub star: Table,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeReport {
    pub size: usize,
    pub unital_operations: usize,
    /// Ordered pairs `(∘, ⋆)` satisfying interchange.
    pub interchange_pairs: usize,
    /// Pairs among those with distinct units (always zero if the principle
    /// holds).
    pub distinct_units: usize,
    pub counterexamples: Vec<InterchangeCounterexample>,
}

/// Checks every ordered pair of unital operations on sets of size
/// `1..=max_size`: if interchange holds, the operations must coincide and
/// be associative and commutative. Each pair costs one budget unit.
pub fn eckmann_hilton_scan(max_size: usize, budget: &mut Budget) -> Result<Vec<SizeReport>, AlgebraError> {
    if max_size > 4 {
        return Err(AlgebraError::TooLarge(max_size));
    }
    let mut reports = Vec::new();
    for n in 1..=max_size {
        let ops = unital_operations(n);
        let mut report = SizeReport {
            size: n,
            unital_operations: ops.len(),
            interchange_pairs: 0,
            distinct_units: 0,
            counterexamples: Vec::new(),
        };
        for (circ, e1) in &ops {
            for (star, e2) in &ops {
                budget.tick()?;
                if !interchange(circ, star) {
                    continue;
                }
                report.interchange_pairs += 1;
                if e1 != e2 {
                    report.distinct_units += 1;
                }
                let reason = if circ != star {
                    Some("operations differ")
                } else if !associative(circ) {
                    Some("not associative")
                } else if !commutative(circ) {
                    Some("not commutative")
                } else {
                    None
                };
                if let Some(r) = reason {
                    report.counterexamples.push(InterchangeCounterexample {
                        circ: circ.clone(),
                        star: star.clone(),
                        reason: r.to_string(),
                    });
                }
            }
        }
        reports.push(report);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sizes_have_no_counterexamples() {
        let reports = eckmann_hilton_scan(2, &mut Budget::unlimited()).unwrap();
        assert_eq!(reports[0].unital_operations, 1);
        assert_eq!(reports[0].interchange_pairs, 1);
        assert_eq!(reports[1].unital_operations, 4);
        assert!(reports
            .iter()
            .all(|r| r.counterexamples.is_empty() && r.distinct_units == 0));
        // on two elements: Z/2 and ({0,1}, max) for either unit
        assert_eq!(reports[1].interchange_pairs, 4);
    }

    #[test]
    fn budget_and_size_guard() {
        assert!(matches!(
            eckmann_hilton_scan(5, &mut Budget::unlimited()),
            Err(AlgebraError::TooLarge(5))
        ));
        assert!(matches!(
            eckmann_hilton_scan(3, &mut Budget::new(10)),
            Err(AlgebraError::Budget(_))
        ));
    }
}
