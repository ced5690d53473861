//! Monoids and groups in finite sets.

use super::AlgebraError;
use crate::fincat::{examples, FinCategory};
use crate::setcalc::FinSet;

/// A finite monoid; `table[a][b]` is `a * b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinMonoid {
    pub carrier: FinSet,
    pub table: Vec<Vec<usize>>,
    pub unit: usize,
}

pub(crate) fn check_square(n: usize, table: &[Vec<usize>], what: &str) -> Result<(), AlgebraError> {
    if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
        return Err(AlgebraError::NotTotal(what.to_string()));
    }
    Ok(())
}

/// Checks associativity and finds the unit.
pub fn check_monoid(carrier: FinSet, table: Vec<Vec<usize>>) -> Result<FinMonoid, AlgebraError> {
    let n = carrier.len();
    check_square(n, &table, "multiplication table")?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(AlgebraError::NotAssociative {
                        a: carrier.element(a).to_string(),
                        b: carrier.element(b).to_string(),
                        c: carrier.element(c).to_string(),
                    });
                }
            }
        }
    }
    let unit = (0..n)
        .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
        .ok_or(AlgebraError::NoUnit)?;
    Ok(FinMonoid { carrier, table, unit })
}

impl FinMonoid {
    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    /// `ℤ/n` under addition, elements named `0 … n-1`.
    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        check_monoid(FinSet::range("Z/n", n), table).expect("cyclic groups are monoids")
    }

    /// The one-object category with a morphism per element; the unit
    /// becomes `id_*` and the other elements keep their names.
    pub fn delooping(&self) -> FinCategory {
        let n = self.len();
        let mut order = vec![self.unit];
        order.extend((0..n).filter(|&x| x != self.unit));
        let mut pos = vec![0; n];
        for (i, &x) in order.iter().enumerate() {
            pos[x] = i;
        }
        let names: Vec<&str> = order.iter().map(|&x| self.carrier.element(x)).collect();
        let table: Vec<Vec<usize>> = order
            .iter()
            .map(|&a| order.iter().map(|&b| pos[self.mul(a, b)]).collect())
            .collect();
        examples::monoid(&names, &table).expect("monoid tables give categories")
    }
}

/// The inversion table, or the first element without a two-sided inverse.
pub fn check_group(m: &FinMonoid) -> Result<Vec<usize>, AlgebraError> {
    (0..m.len())
        .map(|x| {
            (0..m.len())
                .find(|&y| m.mul(x, y) == m.unit && m.mul(y, x) == m.unit)
                .ok_or_else(|| AlgebraError::NotAGroup(m.carrier.element(x).to_string()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_and_monoids() {
        let trivial = check_monoid(FinSet::range("1", 1), vec![vec![0]]).unwrap();
        assert_eq!(check_group(&trivial).unwrap(), vec![0]);
        let z3 = FinMonoid::cyclic(3);
        assert_eq!(check_group(&z3).unwrap()[1], 2);
        let max = check_monoid(FinSet::range("B", 2), vec![vec![0, 1], vec![1, 1]]).unwrap();
        assert_eq!(max.unit, 0);
        assert_eq!(check_group(&max), Err(AlgebraError::NotAGroup("1".into())));
    }

    #[test]
    fn bad_tables() {
        let s = FinSet::range("S", 2);
        assert!(matches!(
            check_monoid(s.clone(), vec![vec![0, 0], vec![0, 0]]),
            Err(AlgebraError::NoUnit)
        ));
        // left projection is associative but has no unit; x*y = 1 - x is not associative
        assert!(matches!(
            check_monoid(s.clone(), vec![vec![1, 1], vec![0, 0]]),
            Err(AlgebraError::NotAssociative { .. })
        ));
        assert!(matches!(
            check_monoid(s, vec![vec![0, 2], vec![0, 0]]),
            Err(AlgebraError::NotTotal(_))
        ));
    }

    #[test]
    fn delooping_moves_unit_first() {
        let m = check_monoid(FinSet::new("M", ["a", "u"]).unwrap(), vec![vec![0, 0], vec![0, 1]]).unwrap();
        let c = m.delooping();
        assert_eq!(c.num_morphisms(), 2);
        let a = c.morphism_id("a").unwrap();
        assert_eq!(c.comp(a, a), a);
    }
}
