use std::collections::BTreeSet;

use super::{Extraction, GComplex};
use crate::cog::ComplexOfGroups;
use crate::complexes::{Arrow, Cell, CellComplex};
use crate::{Error, Result};

/// The `G_s`-complex lying over the star of `s`: one cell `τ@i` per left
/// coset `x·ψ_d(G_τ)` in `G_s`, `d = (τ, s)`, cosets numbered by least
/// element. `G_s` acts by left translation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalDevelopment {
    pub complex: CellComplex,
    /// Base cell under each development cell.
    pub over: Vec<usize>,
    /// Least element of the coset labelling each development cell.
    pub coset_rep: Vec<usize>,
    /// For each element of `G_s`, the induced permutation of cells.
    pub action: Vec<Vec<usize>>,
}

/// Builds the local development at `s`.
///
/// The face over `τ′` of the cell `x·ψ_{ab}(G_τ)` (with `b = (τ, τ′)`,
/// `a = (τ′, s)`) is `x·g_{a,b}⁻¹·ψ_a(G_τ′)`; the compatibility identity makes
/// this independent of `x` within its coset and the cocycle identity makes
/// the relation transitive.
pub fn local_development(c: &ComplexOfGroups, s: usize) -> Result<LocalDevelopment> {
    if let Some(v) = c.validate().violations.first() {
        return Err(Error::invalid(format!("complex of groups is not valid: {v}")));
    }
    let k = c.base();
    if s >= k.len() {
        return Err(Error::invalid(format!("no cell with index {s}")));
    }
    let gs = c.group(s);
    let star = k.star_idx(s);

    // coset_of[τ][x] = coset number of x in G_s / ψ_d(G_τ)
    let mut coset_of: Vec<Vec<usize>> = vec![Vec::new(); k.len()];
    let mut reps: Vec<Vec<usize>> = vec![Vec::new(); k.len()];
    for &t in &star {
        let sub: Vec<usize> = if t == s {
            gs.elements().collect()
        } else {
            c.hom(Arrow::new(t, s)).image()
        };
        let mut label = vec![usize::MAX; gs.order()];
        for x in gs.elements() {
            if label[x] == usize::MAX {
                let n = reps[t].len();
                reps[t].push(x);
                for &h in &sub {
                    label[gs.mul(x, h)] = n;
                }
            }
        }
        coset_of[t] = label;
    }

    let mut cells = Vec::new();
    let mut over = Vec::new();
    let mut coset_rep = Vec::new();
    let mut first = vec![0; k.len()];
    for &t in &star {
        first[t] = cells.len();
        for (i, &x) in reps[t].iter().enumerate() {
            cells.push(Cell::new(format!("{}@{i}", k.id(t)), k.dim_of(t)));
            over.push(t);
            coset_rep.push(x);
        }
    }
    let cell_of = |t: usize, x: usize| first[t] + coset_of[t][x];

    let mut pairs = Vec::new();
    for &t in &star {
        for &tp in k.faces(t).iter().filter(|&&f| star.contains(&f)) {
            for &x in &reps[t] {
                let y = if tp == s {
                    0
                } else {
                    let (a, b) = (Arrow::new(tp, s), Arrow::new(t, tp));
                    gs.mul(x, gs.inv(c.twist(a, b)))
                };
                pairs.push((cells[cell_of(t, x)].id.clone(), cells[cell_of(tp, y)].id.clone()));
            }
        }
    }
    let ids: Vec<String> = cells.iter().map(|c| c.id.clone()).collect();
    let complex = CellComplex::new(cells, &pairs)?;
    if let Some(v) = complex.validate().violations.first() {
        return Err(Error::InternalError(format!("development is not a cell complex: {v}")));
    }
    // CellComplex orders cells by (dim, id); carry the side tables along.
    let pos: Vec<usize> = ids.iter().map(|id| complex.index_of(id).unwrap()).collect();
    let mut over_sorted = vec![0; ids.len()];
    let mut rep_sorted = vec![0; ids.len()];
    for i in 0..ids.len() {
        over_sorted[pos[i]] = over[i];
        rep_sorted[pos[i]] = coset_rep[i];
    }
    let action = gs
        .elements()
        .map(|g| {
            let mut perm = vec![0; ids.len()];
            for i in 0..ids.len() {
                perm[pos[i]] = pos[cell_of(over[i], gs.mul(g, coset_rep[i]))];
            }
            perm
        })
        .collect();

    let centre: Vec<usize> = (0..ids.len()).filter(|&i| over_sorted[i] == s).collect();
    if centre.len() != 1 || complex.star_idx(centre[0]).len() != complex.len() {
        return Err(Error::InternalError("development is not the star of its central cell".into()));
    }
    Ok(LocalDevelopment {
        complex,
        over: over_sorted,
        coset_rep: rep_sorted,
        action,
    })
}

/// Searches for a `G_σ`-equivariant isomorphism, over the base, from the
/// local development at `cell` to the star of the chosen lift in `Y`.
/// Returns the map (development cell to simplex index of `Y`) if one exists.
///
/// Cells over one base cell form a single coset orbit, so choosing the image
/// of the identity coset fixes all of them; the search backtracks over those
/// choices in order of increasing dimension.
pub fn development_matches_star(gc: &GComplex, ex: &Extraction, cell: usize) -> Result<Option<Vec<usize>>> {
    let dev = local_development(&ex.cog, cell)?;
    let y = gc.space();
    let star = y.star(&y.simplices()[ex.quotient.lift[cell]]);
    if star.len() != dev.complex.len() {
        return Ok(None);
    }
    let mut order: Vec<usize> = dev.over.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    order.sort_by_key(|&t| ex.cog.base().dim_of(t));
    let search = RoundTrip {
        dev: &dev,
        star: &star,
        orbit_of: &ex.quotient.orbit_of,
        emb: &ex.embeddings[cell],
        perms: gc.simplex_permutations(),
        space: y,
        order,
    };
    let mut map = vec![usize::MAX; dev.complex.len()];
    Ok(search.assign(0, &mut map).then_some(map))
}

struct RoundTrip<'a> {
    dev: &'a LocalDevelopment,
    star: &'a [usize],
    orbit_of: &'a [usize],
    emb: &'a [usize],
    perms: Vec<Vec<usize>>,
    space: &'a crate::complexes::SimplicialComplex,
    order: Vec<usize>,
}

impl RoundTrip<'_> {
    fn contains(&self, big: usize, small: usize) -> bool {
        let (b, s) = (&self.space.simplices()[big], &self.space.simplices()[small]);
        b.len() > s.len() && s.iter().all(|v| b.binary_search(v).is_ok())
    }

    fn assign(&self, depth: usize, map: &mut Vec<usize>) -> bool {
        let Some(&t) = self.order.get(depth) else {
            return true;
        };
        let dev = self.dev;
        let cells: Vec<usize> = (0..dev.over.len()).filter(|&i| dev.over[i] == t).collect();
        let identity_cell = *cells.iter().find(|&&i| dev.coset_rep[i] == 0).unwrap();
        for &mu in self.star.iter().filter(|&&mu| self.orbit_of[mu] == t) {
            // the stabilizer of the identity coset must fix its image
            let well_defined = (0..self.emb.len())
                .all(|g| dev.action[g][identity_cell] != identity_cell || self.perms[self.emb[g]][mu] == mu);
            if !well_defined {
                continue;
            }
            let images: Vec<usize> = cells.iter().map(|&i| self.perms[self.emb[dev.coset_rep[i]]][mu]).collect();
            let distinct: BTreeSet<usize> = images.iter().copied().collect();
            if distinct.len() != images.len() || images.iter().any(|m| map.contains(m)) {
                continue;
            }
            for (&i, &m) in cells.iter().zip(&images) {
                map[i] = m;
            }
            let consistent = cells.iter().all(|&i| {
                (0..map.len()).filter(|&j| map[j] != usize::MAX && j != i).all(|j| {
                    dev.complex.is_face(i, j) == self.contains(map[i], map[j])
                        && dev.complex.is_face(j, i) == self.contains(map[j], map[i])
                })
            });
            if consistent && self.assign(depth + 1, map) {
                return true;
            }
            for &i in &cells {
                map[i] = usize::MAX;
            }
        }
        false
    }
}
