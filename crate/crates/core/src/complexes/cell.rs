use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{id_cmp, UnionFind};
use crate::{Error, Report, Result, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub id: String,
    pub dim: usize,
}

impl Cell {
    pub fn new(id: impl Into<String>, dim: usize) -> Self {
        Cell { id: id.into(), dim }
    }
}

/// An ordered pair of cells, the terminal cell being a proper face of the
/// initial one. Cells are referred to by their index in the owning complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub initial: usize,
    pub terminal: usize,
}

impl Arrow {
    pub fn new(initial: usize, terminal: usize) -> Self {
        Arrow { initial, terminal }
    }

    /// `self ∘ b` (first `b`, then `self`); defined iff `t(b) = i(self)`.
    pub fn compose(self, b: Arrow) -> Option<Arrow> {
        (b.terminal == self.initial).then_some(Arrow::new(b.initial, self.terminal))
    }
}

/// A finite cell complex recorded as its face poset.
///
/// Cells are kept sorted by `(dim, id)` with ids compared naturally; every
/// index-based accessor refers to that order. The face relation is whatever
/// was supplied; [`CellComplex::closure`] completes it and
/// [`CellComplex::validate`] reports whether it needed completing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComplex {
    cells: Vec<Cell>,
    index: BTreeMap<String, usize>,
    faces: Vec<BTreeSet<usize>>,
    cofaces: Vec<BTreeSet<usize>>,
}

impl CellComplex {
    /// Builds a complex from cells and `(bigger, face)` pairs. Fails on
    /// duplicate or unknown ids; does not close the face relation.
    pub fn new(mut cells: Vec<Cell>, pairs: &[(String, String)]) -> Result<Self> {
        cells.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| id_cmp(&a.id, &b.id)));
        let mut index = BTreeMap::new();
        for (i, c) in cells.iter().enumerate() {
            if index.insert(c.id.clone(), i).is_some() {
                return Err(Error::invalid(format!("duplicate cell id {:?}", c.id)));
            }
        }
        let n = cells.len();
        let mut faces = vec![BTreeSet::new(); n];
        let mut cofaces = vec![BTreeSet::new(); n];
        for (big, small) in pairs {
            let b = *index
                .get(big)
                .ok_or_else(|| Error::invalid(format!("face pair names unknown cell {big:?}")))?;
            let s = *index
                .get(small)
                .ok_or_else(|| Error::invalid(format!("face pair names unknown cell {small:?}")))?;
            faces[b].insert(s);
            cofaces[s].insert(b);
        }
        Ok(CellComplex {
            cells,
            index,
            faces,
            cofaces,
        })
    }

    pub(crate) fn from_indexed(cells: Vec<Cell>, faces: Vec<BTreeSet<usize>>) -> Self {
        let n = cells.len();
        let index = cells
            .iter()
            .enumerate()
            .map(|(i, c)| (c.id.clone(), i))
            .collect();
        let mut cofaces = vec![BTreeSet::new(); n];
        for (b, fs) in faces.iter().enumerate() {
            for &s in fs {
                cofaces[s].insert(b);
            }
        }
        CellComplex {
            cells,
            index,
            faces,
            cofaces,
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &Cell {
        &self.cells[i]
    }

    pub fn id(&self, i: usize) -> &str {
        &self.cells[i].id
    }

    pub fn dim_of(&self, i: usize) -> usize {
        self.cells[i].dim
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn require(&self, id: &str) -> Result<usize> {
        self.index_of(id)
            .ok_or_else(|| Error::invalid(format!("unknown cell {id:?}")))
    }

    /// Dimension of the complex; `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.cells.last().map(|c| c.dim)
    }

    /// Recorded proper faces of cell `i`.
    pub fn faces(&self, i: usize) -> &BTreeSet<usize> {
        &self.faces[i]
    }

    pub fn cofaces(&self, i: usize) -> &BTreeSet<usize> {
        &self.cofaces[i]
    }

    pub fn is_face(&self, big: usize, small: usize) -> bool {
        self.faces[big].contains(&small)
    }

    /// All recorded `(bigger, face)` pairs as ids, in cell order.
    pub fn face_pairs(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for (b, fs) in self.faces.iter().enumerate() {
            for &s in fs {
                out.push((self.cells[b].id.clone(), self.cells[s].id.clone()));
            }
        }
        out
    }

    /// True when the recorded face relation is transitively closed.
    pub fn is_closed(&self) -> bool {
        self.first_unclosed().is_none()
    }

    fn first_unclosed(&self) -> Option<(usize, usize, usize)> {
        for (a, fa) in self.faces.iter().enumerate() {
            for &b in fa {
                for &c in &self.faces[b] {
                    if !fa.contains(&c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// Transitive closure of the face relation.
    pub fn closure(&self) -> CellComplex {
        let n = self.len();
        let mut faces = self.faces.clone();
        // Cells are in dimension order; when the relation is strictly
        // dimension-decreasing, one ascending pass suffices. A second pass
        // guards against malformed input.
        loop {
            let mut changed = false;
            for a in 0..n {
                let direct: Vec<usize> = faces[a].iter().copied().collect();
                for b in direct {
                    if b == a {
                        continue;
                    }
                    let extra: Vec<usize> = faces[b].difference(&faces[a]).copied().collect();
                    if !extra.is_empty() {
                        changed = true;
                        faces[a].extend(extra);
                    }
                }
            }
            if !changed {
                break;
            }
        }
        CellComplex::from_indexed(self.cells.clone(), faces)
    }

    /// Checks the cell-complex invariants, listing each violation.
    pub fn validate(&self) -> Report {
        let mut report = Report::ok();
        for (b, fs) in self.faces.iter().enumerate() {
            for &s in fs {
                if self.cells[s].dim >= self.cells[b].dim {
                    report.push(Violation::new(
                        "dimension not decreasing",
                        vec![self.id(b).to_string(), self.id(s).to_string()],
                    ));
                }
            }
        }
        for (a, fa) in self.faces.iter().enumerate() {
            for &b in fa {
                for &c in &self.faces[b] {
                    if !fa.contains(&c) {
                        report.push(
                            Violation::new(
                                "face relation not closed",
                                vec![self.id(a).to_string(), self.id(c).to_string()],
                            )
                            .with_witness(vec![self.id(b).to_string()]),
                        );
                    }
                }
            }
        }
        report
    }

    /// All arrows, sorted by (dim of initial, initial, terminal) in cell order.
    pub fn arrows(&self) -> Vec<Arrow> {
        let mut out = Vec::new();
        for (b, fs) in self.faces.iter().enumerate() {
            for &s in fs {
                out.push(Arrow::new(b, s));
            }
        }
        out
    }

    /// Composable pairs `(a, b)` with `t(b) = i(a)`, in arrow order of `b` then `a`.
    pub fn composable_pairs(&self) -> Vec<(Arrow, Arrow)> {
        let mut out = Vec::new();
        for b in self.arrows() {
            for &t in &self.faces[b.terminal] {
                out.push((Arrow::new(b.terminal, t), b));
            }
        }
        out
    }

    /// Composable triples `(a, b, c)`: `t(c) = i(b)`, `t(b) = i(a)`.
    pub fn composable_triples(&self) -> Vec<(Arrow, Arrow, Arrow)> {
        let mut out = Vec::new();
        for c in self.arrows() {
            for &y in &self.faces[c.terminal] {
                for &z in &self.faces[y] {
                    out.push((Arrow::new(y, z), Arrow::new(c.terminal, y), c));
                }
            }
        }
        out
    }

    /// Primitive arrows: not a composition of two arrows.
    pub fn is_primitive(&self, a: Arrow) -> bool {
        !self.faces[a.initial]
            .iter()
            .any(|&m| self.faces[m].contains(&a.terminal))
    }

    /// Indices of the cells whose interiors make up the open star of `s`:
    /// `s` together with every cell having `s` as a face. Ascending.
    pub fn star_idx(&self, s: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.cofaces[s].iter().copied().collect();
        out.push(s);
        out.sort_unstable();
        out
    }

    pub fn star(&self, s: &str) -> Result<Vec<String>> {
        let i = self.require(s)?;
        Ok(self
            .star_idx(i)
            .into_iter()
            .map(|j| self.id(j).to_string())
            .collect())
    }

    /// Sub-complex on the given (face-closed) cell set, relation restricted.
    pub fn restrict(&self, keep: &[usize]) -> CellComplex {
        let mut keep: Vec<usize> = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut new_index = vec![usize::MAX; self.len()];
        for (k, &i) in keep.iter().enumerate() {
            new_index[i] = k;
        }
        let cells = keep.iter().map(|&i| self.cells[i].clone()).collect();
        let faces = keep
            .iter()
            .map(|&i| {
                self.faces[i]
                    .iter()
                    .filter(|&&s| new_index[s] != usize::MAX)
                    .map(|&s| new_index[s])
                    .collect()
            })
            .collect();
        CellComplex::from_indexed(cells, faces)
    }

    /// Cells of dimension at most `n`, with the restricted face relation.
    pub fn skeleton(&self, n: usize) -> CellComplex {
        let keep: Vec<usize> = (0..self.len()).filter(|&i| self.cells[i].dim <= n).collect();
        self.restrict(&keep)
    }

    /// Connected components under the face adjacency, ordered by least cell.
    pub fn components_idx(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.len());
        for (b, fs) in self.faces.iter().enumerate() {
            for &s in fs {
                uf.union(b, s);
            }
        }
        uf.classes()
    }

    pub fn components(&self) -> Vec<Vec<String>> {
        self.components_idx()
            .into_iter()
            .map(|c| c.into_iter().map(|i| self.id(i).to_string()).collect())
            .collect()
    }

    /// Alternating count of cells by dimension.
    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .map(|c| if c.dim % 2 == 0 { 1 } else { -1 })
            .sum()
    }

    /// Whether `cells` (indices) is connected as a sub-poset.
    pub fn is_connected_subset(&self, cells: &[usize]) -> bool {
        if cells.is_empty() {
            return true;
        }
        let pos: BTreeMap<usize, usize> = cells.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut uf = UnionFind::new(cells.len());
        for (k, &i) in cells.iter().enumerate() {
            for s in &self.faces[i] {
                if let Some(&l) = pos.get(s) {
                    uf.union(k, l);
                }
            }
        }
        uf.classes().len() == 1
    }
}
