//! Finite groups acting on finite simplicial complexes, and the complex of
//! groups such an action induces on its quotient.

mod develop;
mod extract;
mod quotient;
pub mod random;

pub use develop::{development_matches_star, local_development, LocalDevelopment};
pub use extract::{extract_cog, Extraction};
pub use quotient::{quotient, QuotientData};

use std::sync::Arc;

use crate::complexes::SimplicialComplex;
use crate::groups::{FiniteGroup, Subgroup};
use crate::{Error, Report, Result, Violation};

/// `Γ` acting on `Y` by vertex permutations, one per group element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GComplex {
    space: SimplicialComplex,
    group: Arc<FiniteGroup>,
    action: Vec<Vec<usize>>,
}

impl GComplex {
    /// Checks shapes and that every element acts bijectively on vertices.
    /// The remaining invariants are checked by [`GComplex::validate`].
    pub fn new(space: SimplicialComplex, group: Arc<FiniteGroup>, action: Vec<Vec<usize>>) -> Result<Self> {
        if action.len() != group.order() {
            return Err(Error::invalid(format!(
                "action lists {} elements, group has order {}",
                action.len(),
                group.order()
            )));
        }
        let n = space.num_vertices();
        for (g, perm) in action.iter().enumerate() {
            let mut seen = vec![false; n];
            if perm.len() != n || perm.iter().any(|&w| w >= n || std::mem::replace(&mut seen[w], true)) {
                return Err(Error::invalid(format!("element {g} does not act bijectively on vertices")));
            }
        }
        Ok(GComplex { space, group, action })
    }

    /// The trivial action of `group` on `space`.
    pub fn trivial(space: SimplicialComplex, group: Arc<FiniteGroup>) -> Self {
        let id: Vec<usize> = (0..space.num_vertices()).collect();
        let action = vec![id; group.order()];
        GComplex { space, group, action }
    }

    pub fn space(&self) -> &SimplicialComplex {
        &self.space
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn action(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn act(&self, g: usize, v: usize) -> usize {
        self.action[g][v]
    }

    /// `g·s` as a sorted vertex list.
    pub fn act_simplex(&self, g: usize, s: &[usize]) -> Vec<usize> {
        SimplicialComplex::image(s, &self.action[g])
    }

    /// Group law, simpliciality, admissibility and closure injectivity (the
    /// vertices of every simplex lie in distinct orbits). The last implies
    /// admissibility and is what makes the quotient a cell complex whose
    /// arrows lift uniquely; both are restored by barycentric subdivision.
    pub fn validate(&self) -> Report {
        let mut report = Report::ok();
        let g = &self.group;
        let y = &self.space;
        let name = |v: usize| y.vertex_name(v).to_string();
        if self.action[0].iter().enumerate().any(|(v, &w)| v != w) {
            report.push(Violation::new("identity acts nontrivially", vec![g.label(0)]));
        }
        'law: for a in g.elements() {
            for b in g.elements() {
                let ab = g.mul(a, b);
                if let Some(v) = (0..y.num_vertices()).find(|&v| self.act(ab, v) != self.act(a, self.act(b, v))) {
                    report.push(
                        Violation::new("group law", vec![name(v)]).with_witness(vec![g.label(a), g.label(b)]),
                    );
                    break 'law;
                }
            }
        }
        for a in g.elements() {
            for s in y.simplices() {
                let img = self.act_simplex(a, s);
                if !y.contains(&img) {
                    report.push(
                        Violation::new("image is not a simplex", vec![y.simplex_name(s)]).with_witness(vec![g.label(a)]),
                    );
                } else if &img == s && s.iter().any(|&v| self.act(a, v) != v) {
                    report.push(
                        Violation::new("not admissible", vec![y.simplex_name(s)])
                            .with_witness(vec![g.label(a), "try barycentric subdivision".into()]),
                    );
                }
            }
        }
        let orbit = self.vertex_orbit_ids();
        for s in y.simplices() {
            let mut o: Vec<usize> = s.iter().map(|&v| orbit[v]).collect();
            o.sort_unstable();
            if o.windows(2).any(|w| w[0] == w[1]) {
                report.push(
                    Violation::new("vertices in a common orbit", vec![y.simplex_name(s)])
                        .with_witness(vec!["try barycentric subdivision".into()]),
                );
            }
        }
        report
    }

    /// Orbit id per vertex: the least vertex index in its orbit.
    pub fn vertex_orbit_ids(&self) -> Vec<usize> {
        (0..self.space.num_vertices())
            .map(|v| self.group.elements().map(|g| self.act(g, v)).min().unwrap())
            .collect()
    }

    /// Simplex indices of `g·s` for all simplices, per group element.
    pub(crate) fn simplex_permutations(&self) -> Vec<Vec<usize>> {
        let y = &self.space;
        self.group
            .elements()
            .map(|g| {
                y.simplices()
                    .iter()
                    .map(|s| y.simplex_index(&self.act_simplex(g, s)).expect("action is simplicial"))
                    .collect()
            })
            .collect()
    }

    /// `Y^H`: simplices all of whose vertices are fixed by every element of `h`.
    pub fn fixed_subcomplex(&self, h: &Subgroup) -> SimplicialComplex {
        let fixed: Vec<bool> = (0..self.space.num_vertices())
            .map(|v| h.members().iter().all(|&g| self.act(g, v) == v))
            .collect();
        self.space.subcomplex(|s| s.iter().all(|&v| fixed[v]))
    }

    /// Setwise stabilizer of a simplex.
    pub fn stabilizer(&self, s: &[usize]) -> Subgroup {
        let members = self
            .group
            .elements()
            .filter(|&g| self.act_simplex(g, s) == s)
            .collect();
        Subgroup::from_sorted(members)
    }

    /// The same action restricted to the `n`-skeleton.
    pub fn skeleton(&self, n: usize) -> GComplex {
        GComplex {
            space: self.space.skeleton(n),
            group: self.group.clone(),
            action: self.action.clone(),
        }
    }

    /// Induced action on the barycentric subdivision.
    pub fn subdivide(&self) -> GComplex {
        let sd = self.space.barycentric_subdivision();
        let y = &self.space;
        let action = self
            .group
            .elements()
            .map(|g| {
                (0..sd.num_vertices())
                    .map(|b| {
                        let s: Vec<usize> = sd
                            .vertex_name(b)
                            .split('+')
                            .map(|v| y.vertex_index(v).unwrap())
                            .collect();
                        let s = SimplicialComplex::image(&s, &self.action[g]);
                        sd.vertex_index(&y.simplex_name(&s)).unwrap()
                    })
                    .collect()
            })
            .collect();
        GComplex {
            space: sd,
            group: self.group.clone(),
            action,
        }
    }

    /// True when every vertex stabilizer is trivial.
    pub fn is_free(&self) -> bool {
        (0..self.space.num_vertices()).all(|v| self.group.elements().skip(1).all(|g| self.act(g, v) != v))
    }

    /// Elements acting as the identity on `Y`.
    pub fn kernel(&self) -> Subgroup {
        let members = self
            .group
            .elements()
            .filter(|&g| self.action[g].iter().enumerate().all(|(v, &w)| v == w))
            .collect();
        Subgroup::from_sorted(members)
    }
}
