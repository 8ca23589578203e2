use std::collections::BTreeMap;

use super::{ComplexOfGroups, Gauge};
use crate::complexes::Arrow;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    /// `c1.apply_gauge(witness) == c2`.
    Equivalent(Gauge),
    /// The whole gauge space was ruled out.
    Inequivalent,
    /// The node budget ran out first.
    Exhausted,
}

/// Decides whether `c2` is a gauge transform of `c1` by depth-first search.
///
/// Only gauges on primitive arrows are branched on; a composite arrow `ab`
/// has its gauge forced by `g_{ab} = g′_{a,b}⁻¹ · g_a · ψ_a(g_b) · g_{a,b}`.
/// Candidates for each `g_a` are restricted up front to elements with
/// `Ad(g_a)∘ψ_a = ψ′_a`. Primitive arrows are visited in arrow order and
/// candidates ascending, so the first witness found is the lexicographically
/// least one. `budget` bounds the number of search nodes.
pub fn are_equivalent(c1: &ComplexOfGroups, c2: &ComplexOfGroups, budget: u64) -> Result<Equivalence> {
    if c1.base() != c2.base() {
        return Err(Error::invalid("complexes of groups live on different bases"));
    }
    if c1.groups() != c2.groups() {
        return Err(Error::invalid("complexes of groups assign different groups"));
    }
    let base = c1.base();
    let arrows = base.arrows();
    let mut candidates: BTreeMap<Arrow, Vec<usize>> = BTreeMap::new();
    for &a in &arrows {
        let g = c1.group(a.terminal);
        let (h1, h2) = (c1.hom(a), c2.hom(a));
        let cands: Vec<usize> = g
            .elements()
            .filter(|&x| h1.images().iter().zip(h2.images()).all(|(&y, &z)| g.conj(x, y) == z))
            .collect();
        if cands.is_empty() {
            return Ok(Equivalence::Inequivalent);
        }
        candidates.insert(a, cands);
    }
    let primitive: Vec<Arrow> = arrows.iter().copied().filter(|&a| base.is_primitive(a)).collect();
    // Composite arrows in order of increasing dimension gap, each with one
    // factorisation through a primitive first step.
    let mut composite: Vec<(Arrow, Arrow, Arrow)> = arrows
        .iter()
        .copied()
        .filter(|&d| !base.is_primitive(d))
        .map(|d| {
            let m = base
                .faces(d.initial)
                .iter()
                .copied()
                .find(|&m| base.is_face(m, d.terminal) && base.is_primitive(Arrow::new(m, d.terminal)))
                .expect("a composite arrow factors through a primitive last step");
            (d, Arrow::new(m, d.terminal), Arrow::new(d.initial, m))
        })
        .collect();
    composite.sort_by_key(|&(d, _, _)| (base.dim_of(d.initial) - base.dim_of(d.terminal), d));

    let mut search = Search {
        c1,
        c2,
        candidates: &candidates,
        primitive: &primitive,
        composite: &composite,
        nodes: 0,
        budget,
    };
    let mut assigned = BTreeMap::new();
    Ok(match search.dfs(0, &mut assigned) {
        Step::Found(g) => Equivalence::Equivalent(g),
        Step::NotFound => Equivalence::Inequivalent,
        Step::OutOfBudget => Equivalence::Exhausted,
    })
}

enum Step {
    Found(Gauge),
    NotFound,
    OutOfBudget,
}

struct Search<'a> {
    c1: &'a ComplexOfGroups,
    c2: &'a ComplexOfGroups,
    candidates: &'a BTreeMap<Arrow, Vec<usize>>,
    primitive: &'a [Arrow],
    composite: &'a [(Arrow, Arrow, Arrow)],
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn dfs(&mut self, depth: usize, assigned: &mut BTreeMap<Arrow, usize>) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        let Some(full) = self.propagate(assigned) else {
            return Step::NotFound;
        };
        if depth == self.primitive.len() {
            return Step::Found(Gauge::from_map(full));
        }
        let a = self.primitive[depth];
        for &x in &self.candidates[&a] {
            assigned.insert(a, x);
            match self.dfs(depth + 1, assigned) {
                Step::NotFound => {}
                other => {
                    assigned.remove(&a);
                    return other;
                }
            }
        }
        assigned.remove(&a);
        Step::NotFound
    }

    /// Forces composite gauges from the assigned primitive ones and checks
    /// every twist equation whose three arrows are known.
    fn propagate(&self, assigned: &BTreeMap<Arrow, usize>) -> Option<BTreeMap<Arrow, usize>> {
        let (c1, c2) = (self.c1, self.c2);
        let mut known = assigned.clone();
        for &(d, a, b) in self.composite {
            if let (Some(&ga), Some(&gb)) = (known.get(&a), known.get(&b)) {
                let g = c1.group(a.terminal);
                let x = g.mul_all(&[
                    g.inv(c2.twist(a, b)),
                    ga,
                    c1.hom(a).apply(gb),
                    c1.twist(a, b),
                ]);
                if !self.candidates[&d].contains(&x) {
                    return None;
                }
                known.insert(d, x);
            }
        }
        for (&(a, b), &t1) in c1.twists() {
            let ab = a.compose(b).unwrap();
            if let (Some(&ga), Some(&gb), Some(&gab)) = (known.get(&a), known.get(&b), known.get(&ab)) {
                let g = c1.group(a.terminal);
                let x = g.mul_all(&[ga, c1.hom(a).apply(gb), t1, g.inv(gab)]);
                if x != c2.twist(a, b) {
                    return None;
                }
            }
        }
        Some(known)
    }
}
