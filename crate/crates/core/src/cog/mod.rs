//! CW-complexes of groups: a face poset `K`, a group `G_σ` on every cell,
//! an injective hom `ψ_a: G_{i(a)} → G_{t(a)}` on every arrow and a twisting
//! element `g_{a,b} ∈ G_{t(a)}` on every composable pair, subject to
//!
//! * compatibility `Ad(g_{a,b}) ∘ ψ_{ab} = ψ_a ∘ ψ_b`, and
//! * the cocycle identity `ψ_a(g_{b,c}) · g_{a,bc} = g_{a,b} · g_{ab,c}`.

mod attach;
mod equiv;

pub use attach::{attach_cell, NewCell};
pub use equiv::{are_equivalent, Equivalence};

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::complexes::{Arrow, CellComplex};
use crate::groups::{FiniteGroup, GroupHom};
use crate::{Error, Report, Result, Violation};

pub type Pair = (Arrow, Arrow);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexOfGroups {
    base: CellComplex,
    groups: Vec<Arc<FiniteGroup>>,
    homs: BTreeMap<Arrow, GroupHom>,
    twists: BTreeMap<Pair, usize>,
}

/// A family `{g_a ∈ G_{t(a)}}`; arrows not listed carry the identity.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Gauge {
    elements: BTreeMap<Arrow, usize>,
}

impl Gauge {
    pub fn identity() -> Self {
        Gauge::default()
    }

    pub fn from_map(elements: BTreeMap<Arrow, usize>) -> Self {
        let elements = elements.into_iter().filter(|&(_, x)| x != 0).collect();
        Gauge { elements }
    }

    pub fn get(&self, a: Arrow) -> usize {
        self.elements.get(&a).copied().unwrap_or(0)
    }

    pub fn set(&mut self, a: Arrow, x: usize) {
        if x == 0 {
            self.elements.remove(&a);
        } else {
            self.elements.insert(a, x);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (Arrow, usize)> + '_ {
        self.elements.iter().map(|(&a, &x)| (a, x))
    }

    pub fn is_identity(&self) -> bool {
        self.elements.is_empty()
    }

    /// Gauge of applying `first` and then `self`: pointwise `self_a · first_a`.
    pub fn after(&self, first: &Gauge, c: &ComplexOfGroups) -> Gauge {
        let mut out = Gauge::identity();
        for a in c.base.arrows() {
            let g = c.group(a.terminal);
            out.set(a, g.mul(self.get(a), first.get(a)));
        }
        out
    }

    /// Pointwise inverse; `inverse.after(self)` is the identity.
    pub fn inverse(&self, c: &ComplexOfGroups) -> Gauge {
        let mut out = Gauge::identity();
        for (a, x) in self.entries() {
            out.set(a, c.group(a.terminal).inv(x));
        }
        out
    }

    /// Restriction to the arrows surviving in `sub` (a sub-poset of `full`).
    pub fn restrict(&self, full: &CellComplex, sub: &CellComplex) -> Gauge {
        let mut out = Gauge::identity();
        for (a, x) in self.entries() {
            if let (Some(i), Some(t)) = (sub.index_of(full.id(a.initial)), sub.index_of(full.id(a.terminal))) {
                out.set(Arrow::new(i, t), x);
            }
        }
        out
    }
}

pub fn arrow_name(base: &CellComplex, a: Arrow) -> String {
    format!("{}>{}", base.id(a.initial), base.id(a.terminal))
}

/// `big>mid>small` for the pair `(a, b)` with `b = (big, mid)`, `a = (mid, small)`.
pub fn pair_name(base: &CellComplex, (a, b): Pair) -> String {
    format!("{}>{}>{}", base.id(b.initial), base.id(b.terminal), base.id(a.terminal))
}

impl ComplexOfGroups {
    /// Assembles a complex of groups, checking that the data is structurally
    /// complete and well-typed. Does not check the axioms; see [`Self::validate`].
    pub fn new(
        base: CellComplex,
        groups: Vec<Arc<FiniteGroup>>,
        homs: BTreeMap<Arrow, GroupHom>,
        twists: BTreeMap<Pair, usize>,
    ) -> Result<Self> {
        let report = base.validate();
        if let Some(v) = report.violations.first() {
            return Err(Error::invalid(format!("base complex: {v}")));
        }
        if groups.len() != base.len() {
            return Err(Error::invalid("one group per cell required"));
        }
        for a in base.arrows() {
            let h = homs
                .get(&a)
                .ok_or_else(|| Error::invalid(format!("missing hom for arrow {}", arrow_name(&base, a))))?;
            if h.source().as_ref() != groups[a.initial].as_ref() || h.target().as_ref() != groups[a.terminal].as_ref() {
                return Err(Error::invalid(format!(
                    "hom on arrow {} has the wrong source or target",
                    arrow_name(&base, a)
                )));
            }
        }
        if homs.len() != base.arrows().len() {
            return Err(Error::invalid("hom given for a non-arrow"));
        }
        let pairs = base.composable_pairs();
        for &p in &pairs {
            let x = *twists
                .get(&p)
                .ok_or_else(|| Error::invalid(format!("missing twist for pair {}", pair_name(&base, p))))?;
            if x >= groups[p.0.terminal].order() {
                return Err(Error::invalid(format!(
                    "twist {x} on pair {} lies outside its group",
                    pair_name(&base, p)
                )));
            }
        }
        if twists.len() != pairs.len() {
            return Err(Error::invalid("twist given for a non-composable pair"));
        }
        Ok(ComplexOfGroups {
            base,
            groups,
            homs,
            twists,
        })
    }

    /// As [`Self::new`], filling omitted twists with the identity.
    pub fn with_default_twists(
        base: CellComplex,
        groups: Vec<Arc<FiniteGroup>>,
        homs: BTreeMap<Arrow, GroupHom>,
        mut twists: BTreeMap<Pair, usize>,
    ) -> Result<Self> {
        for p in base.composable_pairs() {
            twists.entry(p).or_insert(0);
        }
        Self::new(base, groups, homs, twists)
    }

    /// Constant coefficients: the same group on every cell, identity homs and
    /// twists.
    pub fn constant(base: CellComplex, g: Arc<FiniteGroup>) -> Result<Self> {
        let groups = vec![g.clone(); base.len()];
        let homs = base
            .arrows()
            .into_iter()
            .map(|a| (a, GroupHom::identity(g.clone())))
            .collect();
        Self::with_default_twists(base, groups, homs, BTreeMap::new())
    }

    pub fn base(&self) -> &CellComplex {
        &self.base
    }

    pub fn group(&self, cell: usize) -> &Arc<FiniteGroup> {
        &self.groups[cell]
    }

    pub fn groups(&self) -> &[Arc<FiniteGroup>] {
        &self.groups
    }

    pub fn hom(&self, a: Arrow) -> &GroupHom {
        &self.homs[&a]
    }

    pub fn homs(&self) -> &BTreeMap<Arrow, GroupHom> {
        &self.homs
    }

    pub fn twist(&self, a: Arrow, b: Arrow) -> usize {
        self.twists[&(a, b)]
    }

    pub fn twists(&self) -> &BTreeMap<Pair, usize> {
        &self.twists
    }

    /// Replaces one twist; the result may violate the axioms.
    pub fn with_twist(&self, pair: Pair, x: usize) -> Result<Self> {
        if !self.twists.contains_key(&pair) {
            return Err(Error::invalid("not a composable pair"));
        }
        if x >= self.groups[pair.0.terminal].order() {
            return Err(Error::invalid("twist outside its group"));
        }
        let mut out = self.clone();
        out.twists.insert(pair, x);
        Ok(out)
    }

    /// Checks injectivity, compatibility and the cocycle identity,
    /// reporting every failure with element witnesses.
    pub fn validate(&self) -> Report {
        let mut report = Report::ok();
        let base = &self.base;
        for (&a, h) in &self.homs {
            if !h.is_injective() {
                report.push(Violation::new(
                    "hom not injective",
                    vec![base.id(a.initial).to_string(), base.id(a.terminal).to_string()],
                ));
            }
        }
        for (&(a, b), &g) in &self.twists {
            let ab = a.compose(b).expect("stored pairs are composable");
            let target = self.group(a.terminal);
            let (pa, pb, pab) = (self.hom(a), self.hom(b), self.hom(ab));
            for x in self.group(b.initial).elements() {
                let lhs = target.conj(g, pab.apply(x));
                let rhs = pa.apply(pb.apply(x));
                if lhs != rhs {
                    report.push(
                        Violation::new(
                            "compatibility",
                            vec![
                                base.id(b.initial).to_string(),
                                base.id(b.terminal).to_string(),
                                base.id(a.terminal).to_string(),
                            ],
                        )
                        .with_witness(vec![x.to_string(), lhs.to_string(), rhs.to_string()]),
                    );
                    break;
                }
            }
        }
        for (a, b, c) in base.composable_triples() {
            let (lhs, rhs) = self.cocycle_sides(a, b, c);
            if lhs != rhs {
                report.push(
                    Violation::new(
                        "cocycle",
                        vec![
                            base.id(c.initial).to_string(),
                            base.id(c.terminal).to_string(),
                            base.id(b.terminal).to_string(),
                            base.id(a.terminal).to_string(),
                        ],
                    )
                    .with_witness(vec![lhs.to_string(), rhs.to_string()]),
                );
            }
        }
        report
    }

    /// `(ψ_a(g_{b,c})·g_{a,bc}, g_{a,b}·g_{ab,c})`
    pub(crate) fn cocycle_sides(&self, a: Arrow, b: Arrow, c: Arrow) -> (usize, usize) {
        let g = self.group(a.terminal);
        let bc = b.compose(c).unwrap();
        let ab = a.compose(b).unwrap();
        let lhs = g.mul(self.hom(a).apply(self.twist(b, c)), self.twist(a, bc));
        let rhs = g.mul(self.twist(a, b), self.twist(ab, c));
        (lhs, rhs)
    }

    /// `ψ′_a = Ad(g_a)∘ψ_a`, `g′_{a,b} = g_a ψ_a(g_b) g_{a,b} g_{ab}⁻¹`.
    ///
    /// Gauge transforms preserve the axioms; for valid input the output is
    /// re-validated and a failure is reported as an internal error.
    pub fn apply_gauge(&self, gauge: &Gauge) -> Result<ComplexOfGroups> {
        for (a, x) in gauge.entries() {
            if !self.homs.contains_key(&a) {
                return Err(Error::invalid("gauge names a non-arrow"));
            }
            if x >= self.group(a.terminal).order() {
                return Err(Error::invalid(format!(
                    "gauge element {x} outside G_{}",
                    self.base.id(a.terminal)
                )));
            }
        }
        let homs = self
            .homs
            .iter()
            .map(|(&a, h)| (a, h.conjugated(gauge.get(a))))
            .collect();
        let twists = self
            .twists
            .iter()
            .map(|(&(a, b), &g)| {
                let ab = a.compose(b).unwrap();
                let grp = self.group(a.terminal);
                let x = grp.mul_all(&[
                    gauge.get(a),
                    self.hom(a).apply(gauge.get(b)),
                    g,
                    grp.inv(gauge.get(ab)),
                ]);
                ((a, b), x)
            })
            .collect();
        let out = ComplexOfGroups {
            base: self.base.clone(),
            groups: self.groups.clone(),
            homs,
            twists,
        };
        if self.validate().is_ok() {
            if let Some(v) = out.validate().violations.first() {
                return Err(Error::InternalError(format!("gauge transform broke {v}")));
            }
        }
        Ok(out)
    }

    /// The induced structure on the `n`-skeleton.
    pub fn restrict_to_skeleton(&self, n: usize) -> ComplexOfGroups {
        let sub = self.base.skeleton(n);
        let map: Vec<Option<usize>> = (0..self.base.len())
            .map(|i| sub.index_of(self.base.id(i)))
            .collect();
        let re = |a: Arrow| Some(Arrow::new(map[a.initial]?, map[a.terminal]?));
        let groups = (0..self.base.len())
            .filter(|&i| map[i].is_some())
            .map(|i| self.groups[i].clone())
            .collect();
        let homs = self
            .homs
            .iter()
            .filter_map(|(&a, h)| Some((re(a)?, h.clone())))
            .collect();
        let twists = self
            .twists
            .iter()
            .filter_map(|(&(a, b), &g)| Some(((re(a)?, re(b)?), g)))
            .collect();
        ComplexOfGroups {
            base: sub,
            groups,
            homs,
            twists,
        }
    }

    /// Size of the full gauge space, `Π_a |G_{t(a)}|`, saturating.
    pub fn gauge_space_size(&self) -> u128 {
        self.base
            .arrows()
            .iter()
            .fold(1u128, |acc, a| acc.saturating_mul(self.group(a.terminal).order() as u128))
    }
}
