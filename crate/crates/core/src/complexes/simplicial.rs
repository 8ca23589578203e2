use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::{id_cmp, Cell, CellComplex, UnionFind};
use crate::{Error, Result};

/// An abstract simplicial complex on named vertices.
///
/// Vertices are sorted naturally by id and referred to by index. Simplices
/// are sorted vertex-index lists, closed under taking non-empty subsets, and
/// stored in `(dimension, lexicographic)` order. Vertices appear as
/// singleton simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    simplices: Vec<Vec<usize>>,
    lookup: HashMap<Vec<usize>, usize>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `simplices` on `vertices`, closing
    /// under subsets. Every simplex vertex must be listed.
    pub fn new<S: AsRef<str>>(vertices: &[S], simplices: &[Vec<S>]) -> Result<Self> {
        let mut names: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        names.sort_by(|a, b| id_cmp(a, b));
        for w in names.windows(2) {
            if w[0] == w[1] {
                return Err(Error::invalid(format!("duplicate vertex {:?}", w[0])));
            }
        }
        let pos: HashMap<&str, usize> = names.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut gens = Vec::with_capacity(simplices.len());
        for s in simplices {
            let mut idx = Vec::with_capacity(s.len());
            for v in s {
                idx.push(
                    *pos.get(v.as_ref())
                        .ok_or_else(|| Error::invalid(format!("simplex uses unknown vertex {:?}", v.as_ref())))?,
                );
            }
            gens.push(idx);
        }
        Ok(Self::from_generators(names, gens))
    }

    /// Builds from vertex names (already in natural order) and generating
    /// simplices given as vertex indices.
    pub(crate) fn from_generators(vertices: Vec<String>, gens: Vec<Vec<usize>>) -> Self {
        let mut all: BTreeSet<Vec<usize>> = (0..vertices.len()).map(|v| vec![v]).collect();
        for mut g in gens {
            g.sort_unstable();
            g.dedup();
            if g.is_empty() || all.contains(&g) {
                continue;
            }
            let k = g.len();
            for mask in 1u64..(1u64 << k) {
                let sub: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| g[i]).collect();
                all.insert(sub);
            }
        }
        Self::from_closed(vertices, all)
    }

    fn from_closed(vertices: Vec<String>, all: BTreeSet<Vec<usize>>) -> Self {
        let mut simplices: Vec<Vec<usize>> = all.into_iter().collect();
        simplices.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let lookup = simplices.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        SimplicialComplex {
            vertices,
            simplices,
            lookup,
        }
    }

    pub fn empty() -> Self {
        Self::from_closed(Vec::new(), BTreeSet::new())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        // Vertex lists are short; a scan keeps the type free of a second map.
        self.vertices.iter().position(|v| v == name)
    }

    pub fn require_vertex(&self, name: &str) -> Result<usize> {
        self.vertex_index(name)
            .ok_or_else(|| Error::invalid(format!("unknown vertex {name:?}")))
    }

    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn simplex_index(&self, s: &[usize]) -> Option<usize> {
        self.lookup.get(s).copied()
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.lookup.contains_key(s)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = if u < v { [u, v] } else { [v, u] };
        self.lookup.contains_key(&e[..])
    }

    pub fn dim(&self) -> Option<usize> {
        self.simplices.last().map(|s| s.len() - 1)
    }

    pub fn simplices_of_dim(&self, d: usize) -> impl Iterator<Item = &Vec<usize>> {
        self.simplices.iter().filter(move |s| s.len() == d + 1)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.simplices_of_dim(1).map(|e| (e[0], e[1])).collect()
    }

    /// Neighbours of each vertex along edges, ascending.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices()];
        for (u, v) in self.edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Name of a simplex: vertex ids joined with `+`.
    pub fn simplex_name(&self, s: &[usize]) -> String {
        s.iter()
            .map(|&v| self.vertices[v].as_str())
            .collect::<Vec<_>>()
            .join("+")
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .map(|s| if s.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    /// Vertex partition into connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.num_vertices());
        for (u, v) in self.edges() {
            uf.union(u, v);
        }
        uf.classes()
    }

    pub fn component_names(&self) -> Vec<Vec<String>> {
        self.components()
            .into_iter()
            .map(|c| c.into_iter().map(|v| self.vertices[v].clone()).collect())
            .collect()
    }

    /// Sub-complex of the simplices accepted by `keep`; `keep` must be
    /// closed under faces. Vertices not kept are dropped.
    pub fn subcomplex(&self, keep: impl Fn(&[usize]) -> bool) -> SimplicialComplex {
        let kept: Vec<&Vec<usize>> = self.simplices.iter().filter(|s| keep(s)).collect();
        let verts: Vec<usize> = kept.iter().filter(|s| s.len() == 1).map(|s| s[0]).collect();
        let mut renum = vec![usize::MAX; self.num_vertices()];
        for (k, &v) in verts.iter().enumerate() {
            renum[v] = k;
        }
        let names = verts.iter().map(|&v| self.vertices[v].clone()).collect();
        let all = kept
            .into_iter()
            .map(|s| s.iter().map(|&v| renum[v]).collect())
            .collect();
        Self::from_closed(names, all)
    }

    /// Simplices of dimension at most `n`.
    pub fn skeleton(&self, n: usize) -> SimplicialComplex {
        self.subcomplex(|s| s.len() <= n + 1)
    }

    /// The face poset as a cell complex; cell ids are simplex names.
    pub fn to_cell_complex(&self) -> CellComplex {
        let cells: Vec<Cell> = self
            .simplices
            .iter()
            .map(|s| Cell::new(self.simplex_name(s), s.len() - 1))
            .collect();
        let pairs: Vec<(String, String)> = self
            .simplices
            .iter()
            .flat_map(|s| {
                proper_faces(s)
                    .into_iter()
                    .map(move |f| (self.simplex_name(s), self.simplex_name(&f)))
            })
            .collect();
        CellComplex::new(cells, &pairs).expect("simplex names are unique")
    }

    /// Barycentric subdivision: one vertex per simplex (named after it), one
    /// simplex per chain under inclusion.
    pub fn barycentric_subdivision(&self) -> SimplicialComplex {
        let names: Vec<String> = self.simplices.iter().map(|s| self.simplex_name(s)).collect();
        let mut order: Vec<usize> = (0..names.len()).collect();
        order.sort_by(|&a, &b| id_cmp(&names[a], &names[b]));
        let mut renum = vec![0; names.len()];
        for (k, &i) in order.iter().enumerate() {
            renum[i] = k;
        }
        let sorted_names: Vec<String> = order.iter().map(|&i| names[i].clone()).collect();
        // Maximal chains suffice as generators: extend downwards from every
        // simplex through all proper faces.
        let mut chains: Vec<Vec<usize>> = Vec::new();
        for (i, s) in self.simplices.iter().enumerate() {
            let mut stack = vec![(s.clone(), vec![i])];
            while let Some((top, chain)) = stack.pop() {
                if top.len() == 1 {
                    chains.push(chain.iter().map(|&c| renum[c]).collect());
                    continue;
                }
                for k in 0..top.len() {
                    let mut f = top.clone();
                    f.remove(k);
                    let fi = self.lookup[&f];
                    let mut c = chain.clone();
                    c.push(fi);
                    stack.push((f, c));
                }
            }
        }
        Self::from_generators(sorted_names, chains)
    }

    /// Image of a simplex under a vertex map, sorted.
    pub fn image(s: &[usize], map: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = s.iter().map(|&v| map[v]).collect();
        out.sort_unstable();
        out
    }

    /// Simplices containing `s` (its open star), in storage order.
    pub fn star(&self, s: &[usize]) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| {
                let t = &self.simplices[i];
                s.iter().all(|v| t.binary_search(v).is_ok())
            })
            .collect()
    }

    /// Vertex names by simplex, for serialization.
    pub fn named_simplices(&self) -> Vec<Vec<String>> {
        self.simplices
            .iter()
            .map(|s| s.iter().map(|&v| self.vertices[v].clone()).collect())
            .collect()
    }

    /// Maximal simplices only.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        let mut cover: BTreeMap<&Vec<usize>, bool> = self.simplices.iter().map(|s| (s, true)).collect();
        for s in &self.simplices {
            for f in proper_faces(s) {
                if let Some(m) = cover.get_mut(&f) {
                    *m = false;
                }
            }
        }
        let mut out: Vec<Vec<usize>> = cover.into_iter().filter(|(_, m)| *m).map(|(s, _)| s.clone()).collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }
}

/// Codimension-one faces of a simplex (empty for vertices).
pub(crate) fn proper_faces(s: &[usize]) -> Vec<Vec<usize>> {
    if s.len() <= 1 {
        return Vec::new();
    }
    let k = s.len();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << k) - 1 {
        out.push((0..k).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect());
    }
    out
}
