//! Monotone maps between the ordinals `[n] = {0, …, n}`.

use super::SimplicialError;

/// A monotone map `[dom] → [cod]`, given by its values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaMap {
    cod: usize,
    values: Vec<usize>,
}

impl DeltaMap {
    pub fn new(cod: usize, values: Vec<usize>) -> Result<Self, SimplicialError> {
        if values.is_empty() || values.iter().any(|&v| v > cod) || values.windows(2).any(|w| w[0] > w[1]) {
            return Err(SimplicialError::NotMonotone(values));
        }
        Ok(DeltaMap { cod, values })
    }

    pub(crate) fn new_unchecked(cod: usize, values: Vec<usize>) -> Self {
        debug_assert!(DeltaMap::new(cod, values.clone()).is_ok());
        DeltaMap { cod, values }
    }

    pub fn identity(n: usize) -> Self {
        DeltaMap {
            cod: n,
            values: (0..=n).collect(),
        }
    }

    /// `δ_i: [n-1] → [n]`, skipping `i`.
    pub fn face(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n);
        DeltaMap {
            cod: n,
            values: (0..n).map(|j| if j < i { j } else { j + 1 }).collect(),
        }
    }

    /// `σ_i: [n+1] → [n]`, hitting `i` twice.
    pub fn degeneracy(n: usize, i: usize) -> Self {
        assert!(i <= n);
        DeltaMap {
            cod: n,
            values: (0..=n + 1).map(|j| if j <= i { j } else { j - 1 }).collect(),
        }
    }

    /// The surjection `[n] → [n - |J|]` collapsing `j` and `j+1` for `j ∈ J`.
    pub fn collapsing(n: usize, word: &[usize]) -> Self {
        let mut values = Vec::with_capacity(n + 1);
        let mut v = 0;
        values.push(0);
        for j in 0..n {
            if !word.contains(&j) {
                v += 1;
            }
            values.push(v);
        }
        DeltaMap { cod: v, values }
    }

    /// Indices `j` with `f(j) = f(j+1)`, in decreasing order; for a
    /// surjection this is its degeneracy word, outermost operator first.
    pub fn repeats(&self) -> Vec<usize> {
        (0..self.dom())
            .rev()
            .filter(|&j| self.values[j] == self.values[j + 1])
            .collect()
    }

    pub fn dom(&self) -> usize {
        self.values.len() - 1
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &DeltaMap) -> DeltaMap {
        assert_eq!(self.cod, other.dom());
        DeltaMap {
            cod: other.cod,
            values: self.values.iter().map(|&v| other.values[v]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.cod == self.dom() && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values[0] == 0 && self.values[self.dom()] == self.cod && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// Image of the map as a sorted vertex list.
    pub fn image(&self) -> Vec<usize> {
        let mut im = self.values.clone();
        im.dedup();
        im
    }

    /// Unique factorization `self = mono ∘ epi`.
    pub fn factor(&self) -> (DeltaMap, DeltaMap) {
        let image = self.image();
        let mut epi = Vec::with_capacity(self.values.len());
        let mut k = 0;
        for &v in &self.values {
            while image[k] != v {
                k += 1;
            }
            epi.push(k);
        }
        (
            DeltaMap {
                cod: image.len() - 1,
                values: epi,
            },
            DeltaMap {
                cod: self.cod,
                values: image,
            },
        )
    }
}

/// Every monotone map `[n] → [m]`, in lexicographic order of values.
pub fn all_monotone(n: usize, m: usize) -> Vec<DeltaMap> {
    let mut out = Vec::new();
    let mut cur = vec![0; n + 1];
    fn go(pos: usize, lo: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<DeltaMap>) {
        if pos == cur.len() {
            out.push(DeltaMap {
                cod: m,
                values: cur.clone(),
            });
            return;
        }
        for v in lo..=m {
            cur[pos] = v;
            go(pos + 1, v, m, cur, out);
        }
    }
    go(0, 0, m, &mut cur, &mut out);
    out
}

/// Every surjection `[n] → [m]`.
pub fn all_surjections(n: usize, m: usize) -> Vec<DeltaMap> {
    all_monotone(n, m).into_iter().filter(DeltaMap::is_surjective).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_examples() {
        let id = DeltaMap::identity(2);
        assert_eq!(id.factor(), (id.clone(), id.clone()));
        let c = DeltaMap::new(1, vec![0, 0]).unwrap();
        let (e, m) = c.factor();
        assert_eq!(e, DeltaMap::new(0, vec![0, 0]).unwrap());
        assert_eq!(m, DeltaMap::new(1, vec![0]).unwrap());
        let inj = DeltaMap::new(3, vec![0, 2, 3]).unwrap();
        assert_eq!(inj.factor(), (DeltaMap::identity(2), inj.clone()));
        assert!(DeltaMap::new(2, vec![1, 0]).is_err());
    }

    #[test]
    fn factorization_recomposes() {
        for f in all_monotone(3, 3) {
            let (e, m) = f.factor();
            assert!(e.is_surjective() && m.is_injective());
            assert_eq!(e.then(&m), f);
        }
    }

    #[test]
    fn collapsing_and_repeats_agree() {
        for s in all_surjections(4, 2) {
            assert_eq!(DeltaMap::collapsing(4, &s.repeats()), s);
        }
        assert_eq!(DeltaMap::degeneracy(1, 0).values(), &[0, 0, 1]);
        assert_eq!(DeltaMap::face(2, 1).values(), &[0, 2]);
    }

    #[test]
    fn cosimplicial_identities() {
        for n in 2..5 {
            for j in 0..=n {
                for i in 0..j {
                    // δ_j δ_i = δ_i δ_{j-1}
                    assert_eq!(
                        DeltaMap::face(n - 1, i).then(&DeltaMap::face(n, j)),
                        DeltaMap::face(n - 1, j - 1).then(&DeltaMap::face(n, i))
                    );
                }
            }
        }
    }
}
