//! Simplicial sets presented by nondegenerate cells and their faces.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::delta::{all_surjections, DeltaMap};
use super::SimplicialError;

pub type CellId = usize;

/// A cell `s_{w_0} ⋯ s_{w_{k-1}} y` with `y` nondegenerate. The word is
/// strictly decreasing, outermost operator first; the empty word denotes
/// `y` itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellRef {
    pub base: CellId,
    pub word: Vec<usize>,
}

impl CellRef {
    pub fn nondegenerate(base: CellId) -> Self {
        CellRef { base, word: Vec::new() }
    }

    pub fn is_degenerate(&self) -> bool {
        !self.word.is_empty()
    }

    /// The surjection `[dim] → [base_dim]` presenting this cell.
    pub fn surjection(&self, base_dim: usize) -> DeltaMap {
        DeltaMap::collapsing(base_dim + self.word.len(), &self.word)
    }

    /// `ρ^* y` for a surjection `ρ` onto the dimension of `y`.
    pub fn from_surjection(base: CellId, rho: &DeltaMap) -> Self {
        debug_assert!(rho.is_surjective());
        CellRef {
            base,
            word: rho.repeats(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub name: String,
    pub dim: usize,
    /// `∂_0, …, ∂_dim`; empty for vertices.
    pub faces: Vec<CellRef>,
}

#[derive(Debug, PartialEq, Eq)]
struct Data {
    max_dim: usize,
    cells: Vec<Cell>,
    by_dim: Vec<Vec<CellId>>,
    index: HashMap<String, CellId>,
}

/// A simplicial set truncated at `max_dim`: the nondegenerate cells of
/// dimension at most `max_dim` with their faces. Degenerate cells are
/// represented symbolically by [`CellRef`]s.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialSet {
    inner: Arc<Data>,
}

impl fmt::Debug for SimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialSet")
            .field("max_dim", &self.inner.max_dim)
            .field("counts", &self.nondegenerate_counts())
            .finish()
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(char::is_whitespace)
}

impl SimplicialSet {
    pub fn builder(max_dim: usize) -> SimplicialSetBuilder {
        SimplicialSetBuilder {
            max_dim,
            cells: Vec::new(),
        }
    }

    /// Cells must be listed with non-decreasing dimension and faces may
    /// only refer to earlier cells.
    pub(crate) fn from_cells(max_dim: usize, cells: Vec<Cell>) -> Result<Self, SimplicialError> {
        let mut index = HashMap::with_capacity(cells.len());
        let mut by_dim = vec![Vec::new(); max_dim + 1];
        for (id, c) in cells.iter().enumerate() {
            if !valid_name(&c.name) {
                return Err(SimplicialError::BadCellName(c.name.clone()));
            }
            if index.insert(c.name.clone(), id).is_some() {
                return Err(SimplicialError::DuplicateCell(c.name.clone()));
            }
            if c.dim > max_dim {
                return Err(SimplicialError::DimensionTooHigh {
                    cell: c.name.clone(),
                    dim: c.dim,
                    max_dim,
                });
            }
            by_dim[c.dim].push(id);
        }
        let set = SimplicialSet {
            inner: Arc::new(Data {
                max_dim,
                cells,
                by_dim,
                index,
            }),
        };
        set.validate()?;
        Ok(set)
    }

    /// Checks face counts and dimensions and `∂_i ∂_j = ∂_{j-1} ∂_i` for
    /// `i < j` on every nondegenerate cell.
    pub fn validate(&self) -> Result<(), SimplicialError> {
        for (id, c) in self.inner.cells.iter().enumerate() {
            let expected = if c.dim == 0 { 0 } else { c.dim + 1 };
            if c.faces.len() != expected {
                return Err(SimplicialError::FaceCount {
                    cell: c.name.clone(),
                    expected,
                    found: c.faces.len(),
                });
            }
            for (i, r) in c.faces.iter().enumerate() {
                if r.base >= id || self.ref_dim(r) + 1 != c.dim || r.word.windows(2).any(|w| w[0] <= w[1]) {
                    return Err(SimplicialError::FaceDimension {
                        cell: c.name.clone(),
                        index: i,
                    });
                }
                if r.word.iter().enumerate().any(|(k, &w)| w >= self.ref_dim(r) - k) {
                    return Err(SimplicialError::FaceDimension {
                        cell: c.name.clone(),
                        index: i,
                    });
                }
            }
            if c.dim >= 2 {
                for j in 1..=c.dim {
                    for i in 0..j {
                        let a = self.face_unchecked(&c.faces[j], i);
                        let b = self.face_unchecked(&c.faces[i], j - 1);
                        if a != b {
                            return Err(SimplicialError::FaceIdentity {
                                cell: c.name.clone(),
                                i,
                                j,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn max_dim(&self) -> usize {
        self.inner.max_dim
    }

    pub fn num_cells(&self) -> usize {
        self.inner.cells.len()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.inner.cells
    }

    pub fn cell(&self, id: CellId) -> &Cell {
        &self.inner.cells[id]
    }

    pub fn cell_id(&self, name: &str) -> Option<CellId> {
        self.inner.index.get(name).copied()
    }

    pub fn dim(&self, id: CellId) -> usize {
        self.inner.cells[id].dim
    }

    pub fn ref_dim(&self, r: &CellRef) -> usize {
        self.dim(r.base) + r.word.len()
    }

    /// Nondegenerate cells of dimension `n`.
    pub fn cells_of_dim(&self, n: usize) -> &[CellId] {
        self.inner.by_dim.get(n).map_or(&[], Vec::as_slice)
    }

    pub fn nondegenerate_counts(&self) -> Vec<usize> {
        self.inner.by_dim.iter().map(Vec::len).collect()
    }

    /// Number of all `n`-cells, degenerate ones included.
    pub fn count_cells(&self, n: usize) -> usize {
        (0..=n.min(self.max_dim()))
            .map(|m| self.cells_of_dim(m).len() * binomial(n, m))
            .sum()
    }

    /// All `n`-cells: every nondegenerate cell of dimension `m ≤ n` pulled
    /// back along every surjection `[n] → [m]`.
    pub fn all_cells(&self, n: usize) -> Vec<CellRef> {
        let mut out = Vec::with_capacity(self.count_cells(n));
        for m in 0..=n.min(self.max_dim()) {
            let surj = all_surjections(n, m);
            for &y in self.cells_of_dim(m) {
                for s in &surj {
                    out.push(CellRef::from_surjection(y, s));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> &[CellId] {
        self.cells_of_dim(0)
    }

    /// `θ^* x` for a monotone `θ: [k] → [dim x]`.
    pub fn apply(&self, theta: &DeltaMap, x: &CellRef) -> CellRef {
        let m = self.dim(x.base);
        let sigma = x.surjection(m);
        assert_eq!(theta.cod(), sigma.dom(), "operator does not match cell dimension");
        let (epi, mono) = theta.then(&sigma).factor();
        let r = self.restrict(x.base, &mono);
        let rho = r.surjection(self.dim(r.base));
        CellRef::from_surjection(r.base, &epi.then(&rho))
    }

    /// `μ^* y` for an injective `μ` into the dimension of a nondegenerate `y`.
    fn restrict(&self, y: CellId, mono: &DeltaMap) -> CellRef {
        if mono.is_identity() {
            return CellRef::nondegenerate(y);
        }
        let m = mono.cod();
        let missing = (0..=m).rev().find(|v| !mono.values().contains(v)).unwrap();
        // μ = δ_missing ∘ μ'
        let reduced = DeltaMap::new_unchecked(
            m - 1,
            mono.values()
                .iter()
                .map(|&v| if v < missing { v } else { v - 1 })
                .collect(),
        );
        let face = &self.inner.cells[y].faces[missing];
        self.apply(&reduced, face)
    }

    fn face_unchecked(&self, x: &CellRef, i: usize) -> CellRef {
        self.apply(&DeltaMap::face(self.ref_dim(x), i), x)
    }

    pub fn face(&self, x: &CellRef, i: usize) -> Result<CellRef, SimplicialError> {
        let n = self.ref_dim(x);
        if n == 0 || i > n {
            return Err(SimplicialError::IndexOutOfRange { index: i, dim: n });
        }
        Ok(self.face_unchecked(x, i))
    }

    pub fn degeneracy(&self, x: &CellRef, i: usize) -> Result<CellRef, SimplicialError> {
        let n = self.ref_dim(x);
        if i > n {
            return Err(SimplicialError::IndexOutOfRange { index: i, dim: n });
        }
        if n + 1 > self.max_dim() {
            return Err(SimplicialError::DegeneracyAboveMax {
                dim: n + 1,
                max_dim: self.max_dim(),
            });
        }
        Ok(degenerate(x, i, self.dim(x.base)))
    }

    /// All faces of `x`, or none for a vertex.
    pub fn faces(&self, x: &CellRef) -> Vec<CellRef> {
        let n = self.ref_dim(x);
        if n == 0 {
            return Vec::new();
        }
        (0..=n).map(|i| self.face_unchecked(x, i)).collect()
    }

    /// The `j`-th vertex of `x`.
    pub fn vertex(&self, x: &CellRef, j: usize) -> CellId {
        let n = self.ref_dim(x);
        self.apply(&DeltaMap::new_unchecked(n, vec![j]), x).base
    }

    pub fn ref_name(&self, r: &CellRef) -> String {
        let mut s = String::new();
        for w in &r.word {
            s.push_str(&format!("s{w} "));
        }
        s.push_str(&self.inner.cells[r.base].name);
        s
    }

    /// Parses `"s1 s0 name"` (outermost operator first) into normal form;
    /// the word need not be admissible.
    pub fn parse_ref(&self, text: &str) -> Result<CellRef, SimplicialError> {
        parse_ref_with(text, |name| self.cell_id(name).map(|id| (id, self.dim(id))))
    }

    /// Renders the set as a readable multi-line listing.
    pub fn describe(&self) -> String {
        let mut out = String::new();
        for c in &self.inner.cells {
            if c.dim == 0 {
                out.push_str(&format!("{} (0)\n", c.name));
            } else {
                let faces: Vec<String> = c.faces.iter().map(|r| self.ref_name(r)).collect();
                out.push_str(&format!("{} ({}): [{}]\n", c.name, c.dim, faces.join(", ")));
            }
        }
        out
    }

    /// Restriction to cells of dimension at most `n`.
    pub fn truncate(&self, n: usize) -> SimplicialSet {
        let cells = self.inner.cells.iter().filter(|c| c.dim <= n).cloned().collect();
        SimplicialSet::from_cells(n.min(self.max_dim()), cells).expect("truncation keeps identities")
    }

    /// The same cells with a different dimension bound (at least the
    /// largest cell dimension).
    pub fn with_max_dim(&self, n: usize) -> Result<SimplicialSet, SimplicialError> {
        SimplicialSet::from_cells(n, self.inner.cells.clone())
    }
}

/// `s_i x`, computed on the presentation alone.
pub(crate) fn degenerate(x: &CellRef, i: usize, base_dim: usize) -> CellRef {
    let n = base_dim + x.word.len();
    let sigma = x.surjection(base_dim);
    CellRef::from_surjection(x.base, &DeltaMap::degeneracy(n, i).then(&sigma))
}

pub(crate) fn parse_ref_with(
    text: &str,
    lookup: impl Fn(&str) -> Option<(CellId, usize)>,
) -> Result<CellRef, SimplicialError> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    let Some((&name, ops)) = tokens.split_last() else {
        return Err(SimplicialError::BadRef(text.to_string()));
    };
    let (base, base_dim) = lookup(name).ok_or_else(|| SimplicialError::UnknownCell(name.to_string()))?;
    let mut r = CellRef::nondegenerate(base);
    for op in ops.iter().rev() {
        let i: usize = op
            .strip_prefix('s')
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| SimplicialError::BadRef(text.to_string()))?;
        if i > base_dim + r.word.len() {
            return Err(SimplicialError::BadRef(text.to_string()));
        }
        r = degenerate(&r, i, base_dim);
    }
    Ok(r)
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Collects cells by name, in any order; faces are given as reference
/// strings like `"s0 v"`.
#[derive(Debug, Clone)]
pub struct SimplicialSetBuilder {
    max_dim: usize,
    cells: Vec<(String, usize, Vec<String>)>,
}

impl SimplicialSetBuilder {
    pub fn vertex(mut self, name: impl Into<String>) -> Self {
        self.cells.push((name.into(), 0, Vec::new()));
        self
    }

    pub fn cell<S: Into<String>>(
        mut self,
        name: impl Into<String>,
        dim: usize,
        faces: impl IntoIterator<Item = S>,
    ) -> Self {
        self.cells
            .push((name.into(), dim, faces.into_iter().map(Into::into).collect()));
        self
    }

    pub fn build(mut self) -> Result<SimplicialSet, SimplicialError> {
        self.cells.sort_by_key(|c| c.1);
        let ids: HashMap<&str, (CellId, usize)> = self
            .cells
            .iter()
            .enumerate()
            .map(|(id, c)| (c.0.as_str(), (id, c.1)))
            .collect();
        let mut cells = Vec::with_capacity(self.cells.len());
        for (name, dim, faces) in &self.cells {
            let faces = faces
                .iter()
                .map(|f| parse_ref_with(f, |n| ids.get(n).copied()))
                .collect::<Result<Vec<_>, _>>()?;
            cells.push(Cell {
                name: name.clone(),
                dim: *dim,
                faces,
            });
        }
        SimplicialSet::from_cells(self.max_dim, cells)
    }
}
