//! Smith normal form over the integers and abelian invariants.

use std::fmt;

use super::presentation::Presentation;

/// Diagonal of the Smith normal form of an integer matrix with `cols`
/// columns: the nonzero invariant factors, each dividing the next.
pub fn smith_diagonal(matrix: &[Vec<i64>], cols: usize) -> Vec<i64> {
    let mut a: Vec<Vec<i64>> = matrix.to_vec();
    let rows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the remaining block
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| (a[i][j].abs(), i, j));
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            for i in t + 1..rows {
                let q = a[i][t] / a[t][t];
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                if a[i][t] != 0 {
                    done = false;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j] / a[t][t];
                if q != 0 {
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if a[t][j] != 0 {
                    done = false;
                }
            }
            if done {
                // the pivot must divide the rest of the block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % a[t][t] != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            a[t][j] += a[i][j];
                        }
                        continue;
                    }
                }
            }
            // move the smallest nonzero entry of row/column t to the pivot
            let mut best = (a[t][t].abs(), t, t);
            for i in t + 1..rows {
                if a[i][t] != 0 && a[i][t].abs() < best.0 {
                    best = (a[i][t].abs(), i, t);
                }
            }
            for j in t + 1..cols {
                if a[t][j] != 0 && a[t][j].abs() < best.0 {
                    best = (a[t][j].abs(), t, j);
                }
            }
            let (_, bi, bj) = best;
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

/// `ℤ^rank ⊕ ⊕ ℤ/t` with torsion factors in divisibility order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub fn abelian_invariants(p: &Presentation) -> AbelianInvariants {
    let n = p.generators.len();
    let diag = smith_diagonal(&p.relation_matrix(), n);
    AbelianInvariants {
        rank: n - diag.len(),
        torsion: diag.into_iter().filter(|&d| d > 1).collect(),
    }
}

/// Whether `v` lies in the integer row span of `matrix`.
pub fn in_row_lattice(matrix: &[Vec<i64>], v: &[i64]) -> bool {
    let cols = v.len();
    let mut rows: Vec<Vec<i64>> = matrix.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
    let mut echelon: Vec<(usize, Vec<i64>)> = Vec::new();
    for c in 0..cols {
        // gcd-eliminate column c among the remaining rows
        loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][c] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let &p = nz.iter().min_by_key(|&&i| rows[i][c].abs()).unwrap();
            for &i in &nz {
                if i != p {
                    let q = rows[i][c] / rows[p][c];
                    let pr = rows[p].clone();
                    for (x, y) in rows[i].iter_mut().zip(&pr) {
                        *x -= q * y;
                    }
                }
            }
        }
        if let Some(i) = rows.iter().position(|r| r[c] != 0) {
            let mut r = rows.remove(i);
            if r[c] < 0 {
                r.iter_mut().for_each(|x| *x = -*x);
            }
            echelon.push((c, r));
        }
    }
    let mut v = v.to_vec();
    for (c, r) in &echelon {
        if v[..*c].iter().any(|&x| x != 0) || v[*c] % r[*c] != 0 {
            return false;
        }
        let q = v[*c] / r[*c];
        for (x, y) in v.iter_mut().zip(r) {
            *x -= q * y;
        }
    }
    v.iter().all(|&x| x == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homotopy::presentation::Letter;

    fn inv(gens: usize, rels: Vec<Vec<(usize, bool)>>) -> AbelianInvariants {
        let p = Presentation::new(
            (0..gens).map(|i| format!("g{i}")).collect(),
            rels.into_iter()
                .map(|r| r.into_iter().map(|(gen, inverse)| Letter { gen, inverse }).collect())
                .collect(),
        )
        .unwrap();
        abelian_invariants(&p)
    }

    #[test]
    fn invariants() {
        assert_eq!(inv(1, vec![]).to_string(), "Z");
        assert_eq!(inv(1, vec![vec![(0, false); 2]]).to_string(), "Z/2");
        let comm = vec![(0, false), (1, false), (0, true), (1, true)];
        assert_eq!(inv(2, vec![comm]).to_string(), "Z^2");
        assert_eq!(smith_diagonal(&[vec![2, 0], vec![0, 3]], 2), vec![1, 6]);
        assert_eq!(smith_diagonal(&[vec![4, 6]], 2), vec![2]);
        assert_eq!(
            inv(2, vec![vec![(0, false); 4], vec![(1, false); 6]]).torsion,
            vec![2, 12]
        );
    }

    #[test]
    fn lattice_membership() {
        let m = vec![vec![2, 0], vec![0, 3]];
        assert!(in_row_lattice(&m, &[4, -3]));
        assert!(!in_row_lattice(&m, &[1, 0]));
        assert!(in_row_lattice(&[vec![4, 6], vec![6, 9]], &[2, 3]));
        assert!(in_row_lattice(&[], &[0, 0]));
        assert!(!in_row_lattice(&[], &[0, 1]));
    }
}
