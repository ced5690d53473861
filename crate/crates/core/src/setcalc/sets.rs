use std::collections::HashMap;

use super::SetError;

/// A finite set with ordered, named elements.
#[derive(Debug, Clone)]
pub struct FinSet {
    pub name: String,
    elements: Vec<String>,
    index: HashMap<String, usize>,
}

impl PartialEq for FinSet {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.elements == other.elements
    }
}

impl Eq for FinSet {}

impl FinSet {
    pub fn new<S: Into<String>>(
        name: impl Into<String>,
        elements: impl IntoIterator<Item = S>,
    ) -> Result<Self, SetError> {
        let name = name.into();
        let elements: Vec<String> = elements.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(SetError::DuplicateElement {
                    set: name,
                    element: e.clone(),
                });
            }
        }
        Ok(FinSet { name, elements, index })
    }

    /// `{0, 1, …, n-1}`.
    pub fn range(name: impl Into<String>, n: usize) -> Self {
        FinSet::new(name, (0..n).map(|i| i.to_string())).unwrap()
    }

    pub fn empty(name: impl Into<String>) -> Self {
        FinSet::range(name, 0)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn position(&self, element: &str) -> Option<usize> {
        self.index.get(element).copied()
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// A total function between finite sets, stored as an index map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFunction {
    pub source: FinSet,
    pub target: FinSet,
    pub map: Vec<usize>,
}

impl FinFunction {
    pub fn new(source: FinSet, target: FinSet, map: Vec<usize>) -> Result<Self, SetError> {
        if map.len() != source.len() {
            return Err(SetError::NotTotal(source.name.clone()));
        }
        if let Some(&bad) = map.iter().find(|&&b| b >= target.len()) {
            return Err(SetError::OutOfRange {
                set: target.name.clone(),
                index: bad,
            });
        }
        Ok(FinFunction { source, target, map })
    }

    /// Builds a function from element-name pairs.
    pub fn from_pairs<'a>(
        source: &FinSet,
        target: &FinSet,
        pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self, SetError> {
        let mut map = vec![usize::MAX; source.len()];
        for (a, b) in pairs {
            let i = source.position(a).ok_or_else(|| SetError::UnknownElement {
                set: source.name.clone(),
                element: a.to_string(),
            })?;
            map[i] = target.position(b).ok_or_else(|| SetError::UnknownElement {
                set: target.name.clone(),
                element: b.to_string(),
            })?;
        }
        if map.contains(&usize::MAX) {
            return Err(SetError::NotTotal(source.name.clone()));
        }
        FinFunction::new(source.clone(), target.clone(), map)
    }

    pub fn identity(set: &FinSet) -> Self {
        FinFunction {
            source: set.clone(),
            target: set.clone(),
            map: (0..set.len()).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &FinFunction) -> Result<FinFunction, SetError> {
        if self.target.len() != other.source.len() {
            return Err(SetError::EndpointMismatch);
        }
        Ok(FinFunction {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&i| other.map[i]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        self.map.iter().all(|&b| !std::mem::replace(&mut seen[b], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.len()];
        for &b in &self.map {
            seen[b] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.len() == self.target.len() && self.is_injective()
    }
}

/// Name for a tuple element: `(a,b,c)`.
pub(crate) fn tuple_name<S: AsRef<str>>(parts: impl IntoIterator<Item = S>) -> String {
    let mut s = String::from("(");
    for (i, p) in parts.into_iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(p.as_ref());
    }
    s.push(')');
    s
}

/// All tuples `(i_0, …, i_{k-1})` with `i_j < sizes[j]`, first coordinate
/// varying slowest.
pub(crate) fn tuples(sizes: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = sizes.iter().product();
    let mut out = Vec::with_capacity(total);
    if total == 0 {
        return out;
    }
    let mut cur = vec![0; sizes.len()];
    loop {
        out.push(cur.clone());
        let mut k = sizes.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < sizes[k] {
                break;
            }
            cur[k] = 0;
        }
    }
}

/// Union-find whose class representative is always the least member.
#[derive(Debug, Clone)]
pub(crate) struct MinUnionFind {
    parent: Vec<usize>,
}

impl MinUnionFind {
    pub fn new(n: usize) -> Self {
        MinUnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    /// Class index of every member, classes numbered by least member.
    pub fn classes(&mut self) -> (Vec<usize>, Vec<usize>) {
        let n = self.parent.len();
        let mut reps = Vec::new();
        let mut rep_class = vec![usize::MAX; n];
        let mut class_of = vec![0; n];
        for x in 0..n {
            let r = self.find(x);
            if rep_class[r] == usize::MAX {
                rep_class[r] = reps.len();
                reps.push(r);
            }
            class_of[x] = rep_class[r];
        }
        (class_of, reps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_enumerate_in_order() {
        assert_eq!(tuples(&[]), vec![Vec::<usize>::new()]);
        assert_eq!(tuples(&[2, 0]).len(), 0);
        assert_eq!(tuples(&[2, 2]), vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn union_find_least_representative() {
        let mut uf = MinUnionFind::new(5);
        uf.union(4, 2);
        uf.union(3, 4);
        let (class_of, reps) = uf.classes();
        assert_eq!(reps, vec![0, 1, 2]);
        assert_eq!(class_of, vec![0, 1, 2, 2, 2]);
    }

    #[test]
    fn duplicate_elements_rejected() {
        assert!(FinSet::new("X", ["a", "a"]).is_err());
    }

    #[test]
    fn function_properties() {
        let x = FinSet::new("X", ["a", "b"]).unwrap();
        let y = FinSet::range("Y", 2);
        let f = FinFunction::from_pairs(&x, &y, [("a", "1"), ("b", "0")]).unwrap();
        assert!(f.is_bijective());
        let g = FinFunction::from_pairs(&x, &y, [("a", "1"), ("b", "1")]).unwrap();
        assert!(!g.is_injective() && !g.is_surjective());
    }
}
