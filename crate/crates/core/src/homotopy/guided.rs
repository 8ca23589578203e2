use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use super::fp::{self, FpGroup, Word};
use super::pi1::{generator_name, pi1_presentation, Pi1Presentation};
use crate::complexes::{EdgePath, SimplicialComplex};
use crate::gaction::GComplex;
use crate::groups::{centralizer, FiniteGroup, Subgroup};
use crate::{Error, Result};

/// `π₁^{(H,ρ)}(Y/Γ, ô)` modelled as homotopy classes of pairs `(γ, g)` with
/// `g ∈ C(H)` and `γ` a path in `Y^H` from `ô` to `g·ô`, multiplied by
/// `(p, g)·(q, g′) = (p # g·q, gg′)`.
///
/// The presentation has the fiber generators of `π₁(Y^H, ô)` first, then one
/// `t_g = (γ_g, g)` per non-identity `g ∈ C(H)_ô`, where `C(H)_ô` is the set
/// of `g ∈ C(H)` with `g·ô` in the component of `ô`. Relators: the fiber
/// relators, `t_g t_g′ = w·t_gg′`, and `t_g x t_g⁻¹ = w′` for fiber
/// generators `x`, with `w`, `w′` read off the concrete paths.
#[derive(Debug, Clone)]
pub struct GuidedPi1 {
    pub presentation: FpGroup,
    /// Image in `Γ` of each generator (the projection to `C(H)`).
    pub proj: Vec<usize>,
    pub fiber: Pi1Presentation,
    /// `Y^H`, with vertex indices of its own.
    pub fixed: SimplicialComplex,
    /// `Y^H` vertex index to `Y` vertex index.
    pub fixed_to_y: Vec<usize>,
    pub basepoint: usize,
    pub subgroup: Subgroup,
    pub centralizer: Subgroup,
    /// `C(H)_ô`, ascending.
    pub reachable: Vec<usize>,
    /// `t`-generator index per non-identity element of `C(H)_ô`.
    pub t_generator: BTreeMap<usize, usize>,
    /// `γ_g` in `Y^H` indices, per element of `C(H)_ô` (constant at `e`).
    pub paths: BTreeMap<usize, EdgePath>,
    group: Arc<FiniteGroup>,
    /// Action of each element of `C(H)` on `Y^H` vertices.
    fixed_action: BTreeMap<usize, Vec<usize>>,
}

pub fn guided_pi1(gc: &GComplex, h: &Subgroup, base: usize) -> Result<GuidedPi1> {
    let gamma = gc.group();
    let h = Subgroup::new(gamma, h.members())?;
    if base >= gc.space().num_vertices() {
        return Err(Error::invalid(format!("basepoint {base} is not a vertex")));
    }
    let fixed = gc.fixed_subcomplex(&h);
    if fixed.is_empty() {
        return Err(Error::EmptyFixedSet);
    }
    let y = gc.space();
    let fixed_to_y: Vec<usize> = fixed.vertices().iter().map(|v| y.vertex_index(v).unwrap()).collect();
    let o = fixed_to_y.iter().position(|&v| v == base).ok_or_else(|| {
        Error::invalid(format!("basepoint {} is not fixed by the subgroup", y.vertex_name(base)))
    })?;
    let fiber = pi1_presentation(&fixed, o)?;
    let c = centralizer(gamma, &h)?;
    let fixed_action: BTreeMap<usize, Vec<usize>> = c
        .members()
        .iter()
        .map(|&g| {
            let perm = fixed_to_y
                .iter()
                .map(|&v| fixed_to_y.binary_search(&gc.act(g, v)).expect("C(H) preserves Y^H"))
                .collect();
            (g, perm)
        })
        .collect();
    let reachable: Vec<usize> = c
        .members()
        .iter()
        .copied()
        .filter(|g| fiber.contains(fixed_action[g][o]))
        .collect();
    let bfs = bfs_parents(&fixed, o);
    let paths: BTreeMap<usize, EdgePath> = reachable
        .iter()
        .map(|&g| (g, path_from_parents(&bfs, fixed_action[&g][o])))
        .collect();

    let nf = fiber.group.num_generators();
    let mut names: Vec<String> = (0..nf).map(generator_name).collect();
    let mut proj = vec![0; nf];
    let mut t_generator = BTreeMap::new();
    for &g in reachable.iter().filter(|&&g| g != 0) {
        t_generator.insert(g, names.len());
        names.push(format!("t{g}"));
        proj.push(g);
    }
    let mut gp = GuidedPi1 {
        presentation: FpGroup::new(names.clone(), Vec::new())?,
        proj,
        fiber,
        fixed,
        fixed_to_y,
        basepoint: base,
        subgroup: h,
        centralizer: c,
        reachable,
        t_generator,
        paths,
        group: gamma.clone(),
        fixed_action,
    };

    let mut relators: Vec<Word> = gp.fiber.group.relators().to_vec();
    let t: Vec<(usize, usize)> = gp.t_generator.iter().map(|(&g, &i)| (g, i)).collect();
    for &(g, tg) in &t {
        for &(g2, tg2) in &t {
            let prod = gp.multiply((&gp.paths[&g], g), (&gp.paths[&g2], g2));
            let w = gp.word_of_element(&prod.0, prod.1)?;
            relators.push(fp::concat(&[&[fp::gen(tg), fp::gen(tg2)], &fp::inverse(&w)]));
        }
        for x in 0..nf {
            let lx = gp.fiber.generator_loop(x);
            let prod = gp.multiply((&gp.paths[&g], g), (&lx, 0));
            let prod = gp.multiply((&prod.0, prod.1), (&gp.paths[&g].reverse().map(&gp.fixed_action[&gp.group.inv(g)]), gp.group.inv(g)));
            let w = gp.word_of_element(&prod.0, prod.1)?;
            relators.push(fp::concat(&[&[fp::gen(tg), fp::gen(x), -fp::gen(tg)], &fp::inverse(&w)]));
        }
    }
    gp.presentation = FpGroup::new(names, relators)?;
    if let Some(r) = gp.presentation.relators().iter().find(|r| gp.project(r) != 0) {
        return Err(Error::InternalError(format!(
            "relator {} does not project to the identity",
            fp::format_word(r)
        )));
    }
    Ok(gp)
}

fn bfs_parents(s: &SimplicialComplex, root: usize) -> Vec<Option<usize>> {
    let adj = s.adjacency();
    let mut parent = vec![None; s.num_vertices()];
    let mut seen = vec![false; s.num_vertices()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                parent[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    parent
}

fn path_from_parents(parent: &[Option<usize>], v: usize) -> EdgePath {
    let mut vs = vec![v];
    let mut x = v;
    while let Some(p) = parent[x] {
        vs.push(p);
        x = p;
    }
    vs.reverse();
    EdgePath::unchecked(vs)
}

impl GuidedPi1 {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Basepoint as a `Y^H` vertex index.
    pub fn fixed_basepoint(&self) -> usize {
        self.fiber.base
    }

    /// Image of a word under the projection to `C(H)`.
    pub fn project(&self, w: &[i32]) -> usize {
        w.iter().fold(0, |acc, &l| {
            let x = self.proj[fp::letter_index(l)];
            let x = if l > 0 { x } else { self.group.inv(x) };
            self.group.mul(acc, x)
        })
    }

    /// `(p, g)·(q, g′) = (p # g·q, gg′)`.
    pub fn multiply(&self, (p, g): (&EdgePath, usize), (q, g2): (&EdgePath, usize)) -> (EdgePath, usize) {
        let moved = q.map(&self.fixed_action[&g]);
        let path = p.concat(&moved).expect("endpoints match by construction");
        (path, self.group.mul(g, g2))
    }

    /// Word of the class `(p, g)`: `word(p # γ_g⁻¹)·t_g`.
    pub fn word_of_element(&self, p: &EdgePath, g: usize) -> Result<Word> {
        let gamma = self
            .paths
            .get(&g)
            .ok_or_else(|| Error::invalid(format!("element {g} is not in C(H)_ô")))?;
        if p.base() != self.fixed_basepoint() || p.end() != gamma.end() {
            return Err(Error::invalid("path does not run from ô to g·ô"));
        }
        let mut w = self.fiber.word_of_path(&p.concat(&gamma.reverse())?)?;
        if let Some(&t) = self.t_generator.get(&g) {
            w.push(fp::gen(t));
        }
        Ok(fp::reduce(&w))
    }

    /// `C(z)`: every generator `w` goes to `z·w·z⁻¹`, freely reduced.
    pub fn conj_action(&self, z: &[i32]) -> Vec<Word> {
        conj_action(&self.presentation, z)
    }

    /// Group order by coset enumeration over the trivial subgroup.
    pub fn order(&self, max_steps: usize) -> Result<usize> {
        let t = crate::covering::enumerate_cosets(&self.presentation, &[], max_steps)?;
        Ok(t.num_cosets())
    }

    /// The `Y^H` vertex index of a `Y` vertex, if fixed.
    pub fn fixed_index(&self, v: usize) -> Option<usize> {
        self.fixed_to_y.binary_search(&v).ok()
    }
}

/// `w ↦ z·w·z⁻¹` on each generator of `g`.
pub fn conj_action(g: &FpGroup, z: &[i32]) -> Vec<Word> {
    (0..g.num_generators())
        .map(|i| fp::concat(&[z, &[fp::gen(i)], &fp::inverse(z)]))
        .collect()
}

/// Generator-level data of the isomorphism `u_*` between the presentation at
/// `ô₂ = u(1)` and the one at `ô₁ = u(0)`.
#[derive(Debug, Clone)]
pub struct BasepointChange {
    pub target: GuidedPi1,
    /// Image, as a word of the `ô₁` presentation, of each `ô₂` generator.
    pub images: Vec<Word>,
}

/// Sends `(q, g)` at `ô₂` to `(u # q # g·u⁻¹, g)` at `ô₁`. The path `u` is
/// given in `Y` vertex indices and must lie in `Y^H`.
pub fn change_basepoint(gc: &GComplex, gp1: &GuidedPi1, u: &EdgePath) -> Result<BasepointChange> {
    if u.base() != gp1.basepoint {
        return Err(Error::invalid("path does not start at the basepoint"));
    }
    let verts: Vec<usize> = u
        .vertices()
        .iter()
        .map(|&v| gp1.fixed_index(v).ok_or_else(|| Error::invalid("path leaves the fixed subcomplex")))
        .collect::<Result<_>>()?;
    let uf = EdgePath::new(&gp1.fixed, verts)?;
    let gp2 = guided_pi1(gc, &gp1.subgroup, u.end())?;
    let mut images = Vec::new();
    for x in 0..gp2.fiber.group.num_generators() {
        let l = gp2.fiber.generator_loop(x);
        let p = uf.concat(&l)?.concat(&uf.reverse())?;
        images.push(gp1.word_of_element(&p, 0)?);
    }
    for &g in gp2.t_generator.keys() {
        let back = uf.reverse().map(&gp1.fixed_action[&g]);
        let p = uf.concat(&gp2.paths[&g])?.concat(&back)?;
        images.push(gp1.word_of_element(&p, g)?);
    }
    Ok(BasepointChange { target: gp2, images })
}
