//! Seeded generator of small admissible actions for property tests.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::GComplex;
use crate::complexes::SimplicialComplex;
use crate::config::Budgets;
use crate::groups::{all_subgroups, library, FiniteGroup};

/// Groups of order 2, 3, 4, 6, 8 and 12.
pub const GROUP_NAMES: [&str; 12] = [
    "Z2", "Z3", "Z4", "V4", "Z6", "S3", "Z8", "D4", "Q8", "Z12", "D6", "A4",
];

const MAX_SIMPLICES: usize = 40;
const MAX_VERTICES: usize = 18;

/// A random action with at most 40 simplices, dimension at most 2, whose
/// simplices have their vertices in distinct orbits (hence admissible).
///
/// Vertices form up to three orbits `Γ/H_i` (named `a0, a1, …`, `b0, …`),
/// and simplices are added one `Γ`-orbit at a time. Byte-stable per seed.
pub fn random_gcomplex(seed: u64) -> GComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let name = GROUP_NAMES.choose(&mut rng).unwrap();
    let group = Arc::new(library::by_name(name).expect("library group"));
    let subgroups = all_subgroups(&group, &Budgets::default()).expect("small group");

    // orbits: each a list of cosets, each coset a sorted member list
    let mut orbits: Vec<Vec<Vec<usize>>> = Vec::new();
    let want = rng.gen_range(1..=3);
    let mut total = 0;
    for _ in 0..20 {
        if orbits.len() == want {
            break;
        }
        let h = subgroups.choose(&mut rng).unwrap();
        let cosets = left_cosets(&group, h.members());
        if total + cosets.len() <= MAX_VERTICES {
            total += cosets.len();
            orbits.push(cosets);
        }
    }
    if orbits.is_empty() {
        orbits.push(vec![group.elements().collect()]);
    }

    let letters = ["a", "b", "c"];
    let mut names = Vec::new();
    let mut coset_of = Vec::new(); // vertex -> (orbit, coset index)
    for (i, cosets) in orbits.iter().enumerate() {
        for j in 0..cosets.len() {
            names.push(format!("{}{j}", letters[i]));
            coset_of.push((i, j));
        }
    }
    let vertex = |i: usize, j: usize| coset_of.iter().position(|&c| c == (i, j)).unwrap();
    let action: Vec<Vec<usize>> = group
        .elements()
        .map(|g| {
            coset_of
                .iter()
                .map(|&(i, j)| {
                    let x = group.mul(g, orbits[i][j][0]);
                    let jj = orbits[i].iter().position(|c| c.binary_search(&x).is_ok()).unwrap();
                    vertex(i, jj)
                })
                .collect()
        })
        .collect();

    // Vertex names sort naturally in the same order as they were created.
    let mut gens: Vec<Vec<usize>> = Vec::new();
    let mut space = SimplicialComplex::from_generators(names.clone(), Vec::new());
    for _ in 0..12 {
        let dim = rng.gen_range(1..=2usize).min(orbits.len() - 1);
        if dim == 0 {
            break;
        }
        let mut which: Vec<usize> = (0..orbits.len()).collect();
        which.shuffle(&mut rng);
        let seed_simplex: Vec<usize> = which[..=dim]
            .iter()
            .map(|&i| vertex(i, rng.gen_range(0..orbits[i].len())))
            .collect();
        let mut candidate = gens.clone();
        for g in group.elements() {
            candidate.push(SimplicialComplex::image(&seed_simplex, &action[g]));
        }
        let trial = SimplicialComplex::from_generators(names.clone(), candidate.clone());
        if trial.len() <= MAX_SIMPLICES {
            gens = candidate;
            space = trial;
        }
    }
    GComplex::new(space, group, action).expect("coset actions are bijective")
}

/// Left cosets `xH`, each sorted, ordered by least element.
pub(crate) fn left_cosets(g: &FiniteGroup, h: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for x in g.elements() {
        if seen[x] {
            continue;
        }
        let mut c: Vec<usize> = h.iter().map(|&y| g.mul(x, y)).collect();
        c.sort_unstable();
        for &y in &c {
            seen[y] = true;
        }
        out.push(c);
    }
    out
}
