use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::fp::{self, AbelianInvariants};
use super::guided::guided_pi1;
use crate::complexes::UnionFind;
use crate::config::Budgets;
use crate::gaction::GComplex;
use crate::groups::{injective_homs, FiniteGroup, Subgroup};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
    /// The certificate available at this level cannot decide the claim.
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Junction {
    pub verdict: Verdict,
    pub witnesses: Vec<String>,
}

impl Junction {
    fn new(holds: bool, witnesses: Vec<String>) -> Self {
        Junction {
            verdict: if holds { Verdict::Holds } else { Verdict::Fails },
            witnesses,
        }
    }
}

/// Verdicts for `1 → π₁(Y^H,ô) → π₁^{(H)}(X,ô) → C(H) → π₀(Y^H) → π₀^{(H)}`
/// at one subgroup and basepoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceReport {
    pub subgroup: Vec<String>,
    pub basepoint: String,
    pub centralizer: Vec<String>,
    /// `C(H)_ô`: centralizer elements moving `ô` inside its component.
    pub reachable: Vec<String>,
    pub fiber: AbelianInvariants,
    pub guided: AbelianInvariants,
    pub generators: usize,
    pub relators: usize,
    /// Components of `Y^H` by representative vertex.
    pub pi0_fixed: Vec<String>,
    /// `π₀(Y^H)/C(H)`, each class listed by its component representatives.
    pub pi0_h: Vec<Vec<String>>,
    pub junctions: BTreeMap<String, Junction>,
}

impl SequenceReport {
    /// True when no junction fails (inconclusive ones are tolerated).
    pub fn holds(&self) -> bool {
        self.junctions.values().all(|j| j.verdict != Verdict::Fails)
    }

    pub fn verdict(&self, junction: &str) -> Option<Verdict> {
        self.junctions.get(junction).map(|j| j.verdict)
    }
}

pub fn sequence_check(gc: &GComplex, h: &Subgroup, base: usize, budgets: &Budgets) -> Result<SequenceReport> {
    let gp = guided_pi1(gc, h, base)?;
    let gamma = gp.group().clone();
    let label = |x: usize| gamma.label(x);
    let labels = |xs: &[usize]| xs.iter().map(|&x| gamma.label(x)).collect::<Vec<_>>();
    let y = gc.space();
    let fixed = &gp.fixed;
    let o = gp.fixed_basepoint();

    // Components of Y^H, labelled independently of the fiber presentation.
    let comps = fixed.components();
    let mut comp_of = vec![0; fixed.num_vertices()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let fixed_index = |v: usize| gp.fixed_index(v).expect("C(H) preserves Y^H");
    let move_comp = |g: usize, c: usize| comp_of[fixed_index(gc.act(g, gp.fixed_to_y[comps[c][0]]))];

    let mut junctions = BTreeMap::new();

    let bad: Vec<String> = gp
        .presentation
        .relators()
        .iter()
        .filter(|r| gp.project(r) != 0)
        .map(|r| fp::format_word(r))
        .collect();
    junctions.insert("projection_well_defined".into(), Junction::new(bad.is_empty(), bad));

    // π₁(Y^H) → π₁^{(H)} → C(H) composes to the identity element.
    let nf = gp.fiber.group.num_generators();
    let moved: Vec<String> = (0..nf)
        .filter(|&x| gp.proj[x] != 0)
        .map(|x| format!("{} -> {}", gp.presentation.generators()[x], label(gp.proj[x])))
        .collect();
    junctions.insert("abelianized_composite_zero".into(), Junction::new(moved.is_empty(), moved));

    // Exactness at π₁^{(H)}: killing the fiber leaves exactly |C(H)_ô| elements.
    let mut quotient_rels = gp.presentation.relators().to_vec();
    quotient_rels.extend((0..nf).map(|x| vec![fp::gen(x)]));
    let quotient = fp::FpGroup::new(gp.presentation.generators().to_vec(), quotient_rels)?;
    junctions.insert(
        "exact_at_guided".into(),
        match crate::covering::enumerate_cosets(&quotient, &[], budgets.coset_steps) {
            Ok(t) => Junction::new(
                t.num_cosets() == gp.reachable.len(),
                vec![format!("cosets of fiber closure: {}", t.num_cosets()), format!("|C(H)_o|: {}", gp.reachable.len())],
            ),
            Err(Error::ResourceLimit(m)) => Junction {
                verdict: Verdict::Inconclusive,
                witnesses: vec![m],
            },
            Err(e) => return Err(e),
        },
    );

    // (i) image of the projection against the pointed kernel of g ↦ [g·ô].
    let gens: Vec<usize> = gp.proj.clone();
    let image = gamma.generated(&gens);
    let kernel: Vec<usize> = gp
        .centralizer
        .members()
        .iter()
        .copied()
        .filter(|&g| comp_of[fixed_index(gc.act(g, base))] == comp_of[o])
        .collect();
    junctions.insert(
        "exact_at_centralizer".into(),
        Junction::new(
            image == kernel,
            vec![format!("image: {{{}}}", labels(&image).join(",")), format!("kernel: {{{}}}", labels(&kernel).join(","))],
        ),
    );

    // (ii) and π₀^{(H)}: C(H) acting on the components of Y^H.
    let mut uf = UnionFind::new(comps.len());
    for &g in gp.centralizer.members() {
        for c in 0..comps.len() {
            uf.union(c, move_comp(g, c));
        }
    }
    let classes = uf.classes();
    let base_class: Vec<usize> = classes.iter().find(|cl| cl.contains(&comp_of[o])).cloned().unwrap_or_default();
    let mut orbit: Vec<usize> = gp
        .centralizer
        .members()
        .iter()
        .map(|&g| comp_of[fixed_index(gc.act(g, base))])
        .collect();
    orbit.sort_unstable();
    orbit.dedup();
    let rep = |c: usize| y.vertex_name(gp.fixed_to_y[comps[c][0]]).to_string();
    junctions.insert(
        "exact_at_pi0".into(),
        Junction::new(
            orbit == base_class,
            vec![
                format!("orbit of [o]: {{{}}}", orbit.iter().map(|&c| rep(c)).collect::<Vec<_>>().join(",")),
                format!("preimage of base class: {{{}}}", base_class.iter().map(|&c| rep(c)).collect::<Vec<_>>().join(",")),
            ],
        ),
    );

    // (iii) injectivity of the fiber inclusion, abelianized only.
    let incl: Vec<fp::Word> = (0..nf).map(|x| vec![fp::gen(x)]).collect();
    let ab = fp::abelian_map(&gp.fiber.group, &gp.presentation, &incl);
    junctions.insert(
        "fiber_injective_abelianized".into(),
        Junction {
            verdict: if ab.injective { Verdict::Holds } else { Verdict::Inconclusive },
            witnesses: vec![
                format!("source: {}", ab.source),
                format!("target: {}", ab.target),
                format!("index: {}", ab.index.map_or("infinite".into(), |i| i.to_string())),
            ],
        },
    );

    Ok(SequenceReport {
        subgroup: labels(gp.subgroup.members()),
        basepoint: y.vertex_name(base).to_string(),
        centralizer: labels(gp.centralizer.members()),
        reachable: labels(&gp.reachable),
        fiber: ab.source,
        guided: ab.target,
        generators: gp.presentation.num_generators(),
        relators: gp.presentation.relators().len(),
        pi0_fixed: (0..comps.len()).map(rep).collect(),
        pi0_h: classes.iter().map(|cl| cl.iter().map(|&c| rep(c)).collect()).collect(),
        junctions,
    })
}

/// Reports for every subgroup up to conjugacy and every basepoint it fixes.
/// Independent checks run through [`crate::par`].
pub fn sequence_check_all(
    gc: &GComplex,
    budgets: &Budgets,
    exec: crate::par::Exec,
) -> Result<Vec<SequenceReport>> {
    let subgroups = crate::groups::subgroups_up_to_conjugacy(gc.group(), budgets)?;
    let mut jobs = Vec::new();
    for h in &subgroups {
        let fixed = gc.fixed_subcomplex(h);
        for v in fixed.vertices() {
            jobs.push((h.clone(), gc.space().vertex_index(v).unwrap()));
        }
    }
    crate::par::map(exec, &jobs, |(h, v)| sequence_check(gc, h, *v, budgets))
        .into_iter()
        .collect()
}

/// One class of the isotropy-decorated `π₀` model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsotropyClass {
    /// Images of the elements of `g` under the representative injection.
    pub hom: Vec<String>,
    /// Representative vertex of the component of `Y^{ρ(g)}`.
    pub component: String,
    /// Number of `(ρ, component)` pairs in the class.
    pub size: usize,
}

/// Pairs `(ρ, [y])` with `ρ: g ↪ Γ` injective and `[y]` a component of
/// `Y^{ρ(g)}`, modulo `γ·(ρ, [y]) = (Ad(γ)∘ρ, [γ·y])`. This is a model of
/// `π₀^g` for a global quotient, built from pair data rather than a formula.
pub fn pi0_isotropy(gc: &GComplex, g: &Arc<FiniteGroup>, budgets: &Budgets) -> Result<Vec<IsotropyClass>> {
    let gamma = gc.group();
    let homs = injective_homs(g, gamma, budgets)?;
    let index_of: BTreeMap<Vec<usize>, usize> =
        homs.iter().enumerate().map(|(i, r)| (r.images().to_vec(), i)).collect();
    let y = gc.space();
    // (hom, component) pairs, with a Y-vertex to pair lookup per hom.
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut pair_of_vertex: Vec<BTreeMap<usize, usize>> = Vec::new();
    let mut reps: Vec<Vec<usize>> = Vec::new();
    for (i, rho) in homs.iter().enumerate() {
        let k = Subgroup::new(gamma, &rho.image())?;
        let fixed = gc.fixed_subcomplex(&k);
        let mut lookup = BTreeMap::new();
        let mut r = Vec::new();
        for comp in fixed.components() {
            let id = pairs.len();
            pairs.push((i, r.len()));
            r.push(y.vertex_index(fixed.vertex_name(comp[0])).unwrap());
            for v in comp {
                lookup.insert(y.vertex_index(fixed.vertex_name(v)).unwrap(), id);
            }
        }
        pair_of_vertex.push(lookup);
        reps.push(r);
    }
    let mut uf = UnionFind::new(pairs.len());
    for (id, &(i, c)) in pairs.iter().enumerate() {
        for x in gamma.elements() {
            let j = index_of[homs[i].conjugated(x).images()];
            let w = gc.act(x, reps[i][c]);
            uf.union(id, pair_of_vertex[j][&w]);
        }
    }
    Ok(uf
        .classes()
        .into_iter()
        .map(|cl| {
            let (i, c) = pairs[cl[0]];
            IsotropyClass {
                hom: homs[i].images().iter().map(|&x| gamma.label(x)).collect(),
                component: y.vertex_name(reps[i][c]).to_string(),
                size: cl.len(),
            }
        })
        .collect())
}
