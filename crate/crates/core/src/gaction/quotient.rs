use std::collections::BTreeSet;

use super::GComplex;
use crate::complexes::{Cell, CellComplex};
use crate::groups::Subgroup;
use crate::{Error, Result};

/// The orbit poset `Y/Γ` together with the chosen lifts.
///
/// Quotient cells are named after their lift (vertex names joined by `+`).
/// The lift of each orbit is its lexicographically least simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientData {
    pub quotient: CellComplex,
    /// Simplex index in `Y` to quotient cell index.
    pub orbit_of: Vec<usize>,
    /// Quotient cell index to the simplex index of its lift.
    pub lift: Vec<usize>,
    /// Stabilizer of the lift, per quotient cell.
    pub stabilizers: Vec<Subgroup>,
}

impl QuotientData {
    /// Index `[Γ : G_σ]`, i.e. the orbit size, per quotient cell.
    pub fn orbit_sizes(&self, group_order: usize) -> Vec<usize> {
        self.stabilizers.iter().map(|s| group_order / s.order()).collect()
    }
}

pub fn quotient(gc: &GComplex) -> Result<QuotientData> {
    if let Some(v) = gc.validate().violations.into_iter().next() {
        return Err(Error::ValidationFailed(v));
    }
    let y = gc.space();
    let perms = gc.simplex_permutations();
    // Simplices are stored in (dim, lex) order, so the first unvisited
    // simplex of an orbit is its least member.
    let mut orbit_of = vec![usize::MAX; y.len()];
    let mut lifts: Vec<usize> = Vec::new();
    for s in 0..y.len() {
        if orbit_of[s] != usize::MAX {
            continue;
        }
        lifts.push(s);
        let k = lifts.len() - 1;
        for p in &perms {
            orbit_of[p[s]] = k;
        }
    }
    let cells: Vec<Cell> = lifts
        .iter()
        .map(|&s| Cell::new(y.simplex_name(&y.simplices()[s]), y.simplices()[s].len() - 1))
        .collect();
    let mut pairs = BTreeSet::new();
    for (k, &s) in lifts.iter().enumerate() {
        let simplex = &y.simplices()[s];
        for f in crate::complexes::proper_faces(simplex) {
            let o = orbit_of[y.simplex_index(&f).unwrap()];
            pairs.insert((cells[k].id.clone(), cells[o].id.clone()));
        }
    }
    let pairs: Vec<(String, String)> = pairs.into_iter().collect();
    let quotient = CellComplex::new(cells, &pairs)?;
    // CellComplex sorts its cells; reorder the lift table to match.
    let renum: Vec<usize> = lifts
        .iter()
        .map(|&s| quotient.index_of(&y.simplex_name(&y.simplices()[s])).unwrap())
        .collect();
    let mut lift = vec![0; lifts.len()];
    for (k, &s) in lifts.iter().enumerate() {
        lift[renum[k]] = s;
    }
    let orbit_of = orbit_of.into_iter().map(|k| renum[k]).collect();
    let stabilizers = lift.iter().map(|&s| gc.stabilizer(&y.simplices()[s])).collect();
    Ok(QuotientData {
        quotient,
        orbit_of,
        lift,
        stabilizers,
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::{hexagon, path5};
    use super::*;
    use crate::complexes::SimplicialComplex;
    use crate::groups::library::cyclic;
    use std::sync::Arc;

    /// Orbits by brute force: group simplices by their image sets.
    fn orbit_count(gc: &GComplex) -> usize {
        let y = gc.space();
        let orbits: BTreeSet<BTreeSet<Vec<usize>>> = y
            .simplices()
            .iter()
            .map(|s| gc.group().elements().map(|g| gc.act_simplex(g, s)).collect())
            .collect();
        orbits.len()
    }

    #[test]
    fn trivial_action_quotient_is_the_space() {
        let y = SimplicialComplex::new(&["a", "b", "c"], &[vec!["a", "b", "c"]]).unwrap();
        let gc = GComplex::trivial(y.clone(), Arc::new(cyclic(2)));
        let q = quotient(&gc).unwrap();
        assert_eq!(q.quotient, y.to_cell_complex());
        assert!(q.stabilizers.iter().all(|s| s.order() == 2));
    }

    #[test]
    fn hexagon_quotient() {
        let gc = hexagon();
        let q = quotient(&gc).unwrap();
        let ids: Vec<&str> = q.quotient.cells().iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids, ["v0", "v1", "v0+v1", "v0+v5"]);
        assert!(q.stabilizers.iter().all(|s| s.order() == 1));
        assert_eq!(q.quotient.len(), orbit_count(&gc));
    }

    #[test]
    fn reflection_quotient() {
        let gc = path5();
        let q = quotient(&gc).unwrap();
        let ids: Vec<&str> = q.quotient.cells().iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids, ["v0", "v1", "v2", "v0+v1", "v1+v2"]);
        let orders: Vec<usize> = q.stabilizers.iter().map(|s| s.order()).collect();
        assert_eq!(orders, [1, 1, 2, 1, 1]);
    }

    #[test]
    fn orbit_counting_identity() {
        for gc in [hexagon(), path5()] {
            let q = quotient(&gc).unwrap();
            let total: usize = q.orbit_sizes(gc.group().order()).iter().sum();
            assert_eq!(total, gc.space().len());
            for &o in &q.orbit_of {
                assert_eq!(q.orbit_of[q.lift[o]], o);
            }
        }
    }
}
