use std::collections::BTreeMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{quotient, GComplex, QuotientData};
use crate::cog::ComplexOfGroups;
use crate::complexes::{proper_faces, Arrow};
use crate::groups::GroupHom;
use crate::{Error, Result};

/// The complex of groups of a global quotient and the choices behind it.
#[derive(Debug, Clone)]
pub struct Extraction {
    pub cog: ComplexOfGroups,
    pub quotient: QuotientData,
    /// Per quotient cell, local element index of `G_σ` to element of `Γ`.
    pub embeddings: Vec<Vec<usize>>,
    /// `k_a ∈ Γ` carrying the face over `t(a)` of the lift of `i(a)` onto
    /// the lift of `t(a)`.
    pub transporters: BTreeMap<Arrow, usize>,
}

/// Builds the complex of groups on `Y/Γ`: `G_σ` is the stabilizer of the
/// chosen lift `σ̂`, `ψ_a = Ad(k_a)` and `g_{a,b} = k_a·k_b·k_{ab}⁻¹`.
///
/// Seed 0 takes the least transporter for every arrow; any other seed picks
/// a pseudo-random one from the same coset. Lifts do not depend on the seed,
/// so runs with different seeds carry identical groups and differ by a gauge.
pub fn extract_cog(gc: &GComplex, seed: u64) -> Result<Extraction> {
    let q = quotient(gc)?;
    let y = gc.space();
    let gamma = gc.group();
    let k = &q.quotient;
    let simplex = |cell: usize| &y.simplices()[q.lift[cell]];

    let mut groups = Vec::with_capacity(k.len());
    let mut embeddings = Vec::with_capacity(k.len());
    for stab in &q.stabilizers {
        let (g, emb) = gamma.subgroup_group(stab.members());
        groups.push(Arc::new(g));
        embeddings.push(emb);
    }
    let local = |cell: usize, x: usize| embeddings[cell].binary_search(&x).ok();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut transporters = BTreeMap::new();
    for a in k.arrows() {
        let top = simplex(a.initial);
        let target = simplex(a.terminal);
        let face = proper_faces(top)
            .into_iter()
            .find(|f| q.orbit_of[y.simplex_index(f).unwrap()] == a.terminal)
            .ok_or_else(|| Error::InternalError("arrow without a face over its terminal cell".into()))?;
        let candidates: Vec<usize> = gamma
            .elements()
            .filter(|&g| &gc.act_simplex(g, &face) == target)
            .collect();
        let chosen = if seed == 0 {
            candidates[0]
        } else {
            *candidates.choose(&mut rng).unwrap()
        };
        transporters.insert(a, chosen);
    }

    let mut homs = BTreeMap::new();
    for (&a, &ka) in &transporters {
        let images = embeddings[a.initial]
            .iter()
            .map(|&x| {
                local(a.terminal, gamma.conj(ka, x))
                    .ok_or_else(|| Error::InternalError(format!("Ad(k_a) leaves G_{}", k.id(a.terminal))))
            })
            .collect::<Result<Vec<usize>>>()?;
        let h = GroupHom::new(groups[a.initial].clone(), groups[a.terminal].clone(), images)?;
        if !h.is_injective() {
            return Err(Error::InternalError("ψ_a not injective".into()));
        }
        homs.insert(a, h);
    }

    let mut twists = BTreeMap::new();
    for (a, b) in k.composable_pairs() {
        let ab = a.compose(b).unwrap();
        let x = gamma.mul_all(&[transporters[&a], transporters[&b], gamma.inv(transporters[&ab])]);
        let x = local(a.terminal, x).ok_or_else(|| {
            Error::InternalError(format!("twist outside G_{} at {}", k.id(a.terminal), k.id(b.initial)))
        })?;
        twists.insert((a, b), x);
    }

    let cog = ComplexOfGroups::new(k.clone(), groups, homs, twists)?;
    if let Some(v) = cog.validate().violations.first() {
        return Err(Error::InternalError(format!("extracted structure fails: {v}")));
    }
    Ok(Extraction {
        cog,
        quotient: q,
        embeddings,
        transporters,
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::{hexagon, path5};
    use super::*;
    use crate::cog::{are_equivalent, Equivalence};
    use crate::complexes::SimplicialComplex;
    use crate::groups::library::symmetric;
    use crate::groups::FiniteGroup;

    #[test]
    fn trivial_action_gives_constant_structure() {
        let y = SimplicialComplex::new(&["a", "b", "c"], &[vec!["a", "b", "c"]]).unwrap();
        let s3 = Arc::new(symmetric(3));
        let gc = GComplex::trivial(y.clone(), s3.clone());
        let ex = extract_cog(&gc, 0).unwrap();
        assert_eq!(ex.cog, ComplexOfGroups::constant(y.to_cell_complex(), s3).unwrap());
    }

    #[test]
    fn reflection_path_structure() {
        let ex = extract_cog(&path5(), 0).unwrap();
        let orders: Vec<usize> = ex.cog.groups().iter().map(|g| g.order()).collect();
        assert_eq!(orders, [1, 1, 2, 1, 1]);
        let k = ex.cog.base();
        let a = Arrow::new(k.index_of("v1+v2").unwrap(), k.index_of("v2").unwrap());
        assert_eq!(ex.cog.hom(a).images(), &[0]);
        assert!(ex.cog.twists().values().all(|&x| x == 0));
    }

    #[test]
    fn free_action_is_trivial_structure() {
        let ex = extract_cog(&hexagon(), 0).unwrap();
        assert!(ex.cog.groups().iter().all(|g| g.order() == 1));
        assert!(ex.cog.twists().values().all(|&x| x == 0));
        // the transporter on one of the two edges must rotate
        assert!(ex.transporters.values().any(|&x| x != 0));
    }

    #[test]
    fn seeds_give_equivalent_structures() {
        // S3 acting on a subdivided triangle: nontrivial stabilizers everywhere
        let y = SimplicialComplex::new(&["a", "b", "c"], &[vec!["a", "b", "c"]]).unwrap();
        let (s3, action) = FiniteGroup::permutation_closure(&[vec![1, 2, 0], vec![1, 0, 2]], 3).unwrap();
        let gc = GComplex::new(y, Arc::new(s3), action).unwrap().subdivide();
        let e0 = extract_cog(&gc, 0).unwrap();
        for seed in 1..6 {
            let e1 = extract_cog(&gc, seed).unwrap();
            match are_equivalent(&e0.cog, &e1.cog, 1_000_000).unwrap() {
                Equivalence::Equivalent(w) => assert_eq!(e0.cog.apply_gauge(&w).unwrap(), e1.cog),
                other => panic!("seed {seed}: {other:?}"),
            }
        }
    }
}
