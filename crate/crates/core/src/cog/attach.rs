use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use super::{ComplexOfGroups, Pair};
use crate::complexes::{Arrow, Cell, CellComplex};
use crate::groups::{FiniteGroup, GroupHom};
use crate::{Error, Result, Violation};

/// A cell to be attached: its id, dimension and the (face-closed) set of
/// existing cells making up its boundary closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewCell {
    pub id: String,
    pub dim: usize,
    pub faces: Vec<String>,
}

/// Extends `c` by a new top cell `e` with group `G_e`.
///
/// `homs` supplies `ψ_d: G_e → G_σ` for every new arrow `d = (e, σ)`, keyed
/// by the face id `σ`. `twists` supplies `g_{a,d}` for every new composable
/// pair, keyed by `(σ, τ)` with `d = (e, σ)` and `a = (σ, τ)`. The result is
/// validated; the first failing pair or triple is returned as
/// [`Error::ValidationFailed`].
pub fn attach_cell(
    c: &ComplexOfGroups,
    cell: &NewCell,
    group: Arc<FiniteGroup>,
    homs: &BTreeMap<String, GroupHom>,
    twists: &BTreeMap<(String, String), usize>,
) -> Result<ComplexOfGroups> {
    let old = c.base();
    if old.index_of(&cell.id).is_some() {
        return Err(Error::invalid(format!("cell {:?} already exists", cell.id)));
    }
    let mut face_idx = BTreeSet::new();
    for f in &cell.faces {
        let i = old.require(f)?;
        if old.dim_of(i) >= cell.dim {
            return Err(Error::invalid(format!("face {f:?} is not of lower dimension")));
        }
        face_idx.insert(i);
    }
    for &i in &face_idx {
        if let Some(&missing) = old.faces(i).iter().find(|j| !face_idx.contains(j)) {
            return Err(Error::invalid(format!(
                "faces of the new cell are not a closed subcomplex: {:?} lacks its face {:?}",
                old.id(i),
                old.id(missing)
            )));
        }
    }
    for f in &cell.faces {
        let h = homs
            .get(f)
            .ok_or_else(|| Error::invalid(format!("missing hom for new arrow {}>{f}", cell.id)))?;
        let target = c.group(old.require(f)?);
        if h.source().as_ref() != group.as_ref() || h.target().as_ref() != target.as_ref() {
            return Err(Error::invalid(format!("hom {}>{f} has the wrong source or target", cell.id)));
        }
        if !h.is_injective() {
            return Err(Error::ValidationFailed(Violation::new(
                "hom not injective",
                vec![cell.id.clone(), f.clone()],
            )));
        }
    }
    if let Some(extra) = homs.keys().find(|k| !cell.faces.contains(k)) {
        return Err(Error::invalid(format!("hom given for non-face {extra:?}")));
    }

    // Rebuild the base with the new cell.
    let mut cells: Vec<Cell> = old.cells().to_vec();
    cells.push(Cell::new(cell.id.clone(), cell.dim));
    let mut pairs = old.face_pairs();
    pairs.extend(cell.faces.iter().map(|f| (cell.id.clone(), f.clone())));
    let base = CellComplex::new(cells, &pairs)?;
    let remap: Vec<usize> = (0..old.len()).map(|i| base.index_of(old.id(i)).unwrap()).collect();
    let re = |a: Arrow| Arrow::new(remap[a.initial], remap[a.terminal]);
    let e = base.index_of(&cell.id).unwrap();

    let mut groups: Vec<Arc<FiniteGroup>> = vec![group.clone(); base.len()];
    for i in 0..old.len() {
        groups[remap[i]] = c.group(i).clone();
    }
    let mut new_homs: BTreeMap<Arrow, GroupHom> = c.homs().iter().map(|(&a, h)| (re(a), h.clone())).collect();
    for (f, h) in homs {
        new_homs.insert(Arrow::new(e, base.index_of(f).unwrap()), h.clone());
    }
    let mut new_twists: BTreeMap<Pair, usize> = c.twists().iter().map(|(&(a, b), &x)| ((re(a), re(b)), x)).collect();
    for f in &cell.faces {
        let s = base.index_of(f).unwrap();
        for &t in base.faces(s) {
            let key = (f.clone(), base.id(t).to_string());
            let x = *twists.get(&key).ok_or_else(|| {
                Error::invalid(format!("missing twist for new pair {}>{}>{}", cell.id, key.0, key.1))
            })?;
            new_twists.insert((Arrow::new(s, t), Arrow::new(e, s)), x);
        }
    }
    for (s, t) in twists.keys() {
        let ok = cell.faces.contains(s) && old.index_of(s).zip(old.index_of(t)).is_some_and(|(i, j)| old.is_face(i, j));
        if !ok {
            return Err(Error::invalid(format!("twist given for non-pair {}>{s}>{t}", cell.id)));
        }
    }
    let out = ComplexOfGroups::new(base, groups, new_homs, new_twists)?;
    out.validate().into_result()?;
    Ok(out)
}
