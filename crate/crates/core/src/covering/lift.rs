use serde::Serialize;

use super::cover::CoverData;
use crate::complexes::{CellComplex, EdgePath, SimplicialComplex};
use crate::gaction::{GComplex, QuotientData};
use crate::{Error, Result};

/// A lifted path with the number of steps at which more than one lift of
/// the step was available before a choice rule applied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lift {
    pub path: Vec<usize>,
    pub ambiguous_steps: usize,
}

impl Lift {
    pub fn edge_path(&self) -> EdgePath {
        EdgePath::unchecked(self.path.clone())
    }
}

/// Lifts a base edge path through a vertex projection, one neighbour per
/// step. Unique lifting (no ambiguous step) is what covers guarantee.
pub fn lift_in_cover(cd: &CoverData, path: &EdgePath, start: usize) -> Result<Lift> {
    lift_vertex_path(&cd.total, &cd.projection, path.vertices(), start)
}

pub(crate) fn lift_vertex_path(total: &SimplicialComplex, projection: &[usize], path: &[usize], start: usize) -> Result<Lift> {
    if start >= total.num_vertices() || projection[start] != path[0] {
        return Err(Error::invalid("start does not lie over the path's base"));
    }
    let adj = total.adjacency();
    let mut out = vec![start];
    let mut ambiguous_steps = 0;
    for &next in &path[1..] {
        let x = *out.last().unwrap();
        let cands: Vec<usize> = adj[x].iter().copied().filter(|&y| projection[y] == next).collect();
        match cands.as_slice() {
            [] => return Err(Error::invalid(format!("no lift of the step into {next}"))),
            [y] => out.push(*y),
            [y, ..] => {
                ambiguous_steps += 1;
                out.push(*y);
            }
        }
    }
    Ok(Lift { path: out, ambiguous_steps })
}

/// Parses a path in the quotient given by cell ids. Vertex cells may be
/// listed alone when a unique edge cell joins consecutive ones; edge cells
/// may be interleaved to pick among parallel edges.
pub fn parse_quotient_path(q: &CellComplex, ids: &[&str]) -> Result<Vec<usize>> {
    let cells: Vec<usize> = ids.iter().map(|id| q.require(id.trim())).collect::<Result<_>>()?;
    let mut out: Vec<usize> = Vec::new();
    let mut i = 0;
    while i < cells.len() {
        let c = cells[i];
        match q.dim_of(c) {
            0 => {
                if let Some(&prev) = out.last() {
                    let joins: Vec<usize> = q
                        .cofaces(prev)
                        .iter()
                        .copied()
                        .filter(|&e| q.dim_of(e) == 1 && q.is_face(e, c))
                        .collect();
                    match joins.as_slice() {
                        [e] => out.push(*e),
                        [] => return Err(Error::invalid(format!("no edge joins {} and {}", q.id(prev), q.id(c)))),
                        _ => {
                            return Err(Error::invalid(format!(
                                "several edges join {} and {}; name the edge",
                                q.id(prev),
                                q.id(c)
                            )))
                        }
                    }
                }
                out.push(c);
                i += 1;
            }
            1 => {
                let (Some(&prev), Some(&next)) = (out.last(), cells.get(i + 1)) else {
                    return Err(Error::invalid("an edge cell must sit between two vertex cells"));
                };
                if q.dim_of(next) != 0 || !q.is_face(c, prev) || !q.is_face(c, next) {
                    return Err(Error::invalid(format!("{} does not join its neighbours", q.id(c))));
                }
                out.push(c);
                out.push(next);
                i += 2;
            }
            _ => return Err(Error::invalid(format!("{} is not a vertex or edge", q.id(c)))),
        }
    }
    if out.is_empty() {
        return Err(Error::invalid("empty path"));
    }
    Ok(out)
}

/// Lifts an alternating vertex/edge cell path of `Y/Γ` to an edge path in
/// `Y` from `start`. Each edge step goes along `g·ê` for the least `g ∈ Γ`
/// with `g·ê` leaving the current vertex, where `ê` is the chosen lift of
/// the edge cell; steps with several distinct such edges are counted.
pub fn lift_edge_path(gc: &GComplex, q: &QuotientData, cells: &[usize], start: usize) -> Result<Lift> {
    let y = gc.space();
    let start_cell = y
        .simplex_index(&[start])
        .map(|i| q.orbit_of[i])
        .ok_or_else(|| Error::invalid("start is not a vertex"))?;
    if cells.is_empty() || start_cell != cells[0] {
        return Err(Error::invalid("start does not lie over the path's base"));
    }
    let mut out = vec![start];
    let mut ambiguous_steps = 0;
    for pair in cells[1..].chunks(2) {
        let [e, _] = pair else {
            return Err(Error::invalid("path must end at a vertex cell"));
        };
        let x = *out.last().unwrap();
        let lift = &y.simplices()[q.lift[*e]];
        if lift.len() != 2 {
            return Err(Error::invalid("expected an edge cell"));
        }
        let mut chosen = None;
        let mut distinct: Vec<usize> = Vec::new();
        for g in gc.group().elements() {
            let (a, b) = (gc.act(g, lift[0]), gc.act(g, lift[1]));
            let other = if a == x {
                b
            } else if b == x {
                a
            } else {
                continue;
            };
            let far = y.simplex_index(&[other]).map(|i| q.orbit_of[i]);
            if far != Some(pair[1]) {
                continue;
            }
            chosen.get_or_insert(other);
            if !distinct.contains(&other) {
                distinct.push(other);
            }
        }
        let Some(next) = chosen else {
            return Err(Error::InternalError(format!(
                "no lift of {} from {}",
                q.quotient.id(*e),
                y.vertex_name(x)
            )));
        };
        if distinct.len() > 1 {
            ambiguous_steps += 1;
        }
        out.push(next);
    }
    Ok(Lift { path: out, ambiguous_steps })
}
