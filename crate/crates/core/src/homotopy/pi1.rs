use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::fp::{self, FpGroup, Word};
use crate::complexes::{EdgePath, SimplicialComplex};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub representative: String,
    pub vertices: Vec<String>,
}

/// Path components, each represented by its least vertex.
pub fn pi0(s: &SimplicialComplex) -> Vec<Component> {
    s.component_names()
        .into_iter()
        .map(|vs| Component {
            representative: vs[0].clone(),
            vertices: vs,
        })
        .collect()
}

/// Generator name for index `i`: `a`…`z`, then `x26`, `x27`, ….
pub fn generator_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("x{i}")
    }
}

/// The edge-path group of the component of `base`, presented through a
/// breadth-first spanning tree (neighbours visited in vertex order).
///
/// Generators are the non-tree edges `u < v` in edge order, oriented from
/// `u` to `v`; relators are the boundaries `[u,v] [v,w] [w,u]` of the
/// 2-simplices, read through the tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pi1Presentation {
    pub group: FpGroup,
    pub base: usize,
    /// Vertices of the component of `base`, ascending.
    pub component: Vec<usize>,
    /// Tree parent of each component vertex (`None` at the base and
    /// outside the component).
    pub parent: Vec<Option<usize>>,
    /// The oriented edge `u → v` behind each generator.
    pub generator_edges: Vec<(usize, usize)>,
    edge_letter: HashMap<(usize, usize), i32>,
}

pub fn pi1_presentation(s: &SimplicialComplex, base: usize) -> Result<Pi1Presentation> {
    if base >= s.num_vertices() {
        return Err(Error::invalid(format!("base {base} is not a vertex")));
    }
    let adj = s.adjacency();
    let mut parent = vec![None; s.num_vertices()];
    let mut seen = vec![false; s.num_vertices()];
    seen[base] = true;
    let mut queue = VecDeque::from([base]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                parent[v] = Some(u);
                queue.push_back(v);
            }
        }
    }
    let component: Vec<usize> = (0..s.num_vertices()).filter(|&v| seen[v]).collect();
    let mut generator_edges = Vec::new();
    let mut edge_letter = HashMap::new();
    for (u, v) in s.edges() {
        if !seen[u] || parent[v] == Some(u) || parent[u] == Some(v) {
            continue;
        }
        let l = fp::gen(generator_edges.len());
        generator_edges.push((u, v));
        edge_letter.insert((u, v), l);
        edge_letter.insert((v, u), -l);
    }
    let word = |u: usize, v: usize| edge_letter.get(&(u, v)).copied().into_iter();
    let relators: Vec<Word> = s
        .simplices_of_dim(2)
        .filter(|t| seen[t[0]])
        .map(|t| {
            word(t[0], t[1])
                .chain(word(t[1], t[2]))
                .chain(word(t[2], t[0]))
                .collect()
        })
        .collect();
    let names = (0..generator_edges.len()).map(generator_name).collect();
    Ok(Pi1Presentation {
        group: FpGroup::new(names, relators)?,
        base,
        component,
        parent,
        generator_edges,
        edge_letter,
    })
}

impl Pi1Presentation {
    pub fn contains(&self, v: usize) -> bool {
        self.component.binary_search(&v).is_ok()
    }

    /// Word of an edge path lying in the component (not necessarily a loop).
    pub fn word_of_path(&self, p: &EdgePath) -> Result<Word> {
        if !self.contains(p.base()) {
            return Err(Error::invalid("path leaves the component of the base"));
        }
        let w: Word = p
            .steps()
            .filter_map(|(u, v)| self.edge_letter.get(&(u, v)).copied())
            .collect();
        Ok(fp::reduce(&w))
    }

    /// Letter read along the oriented edge `u → v`; `None` on tree edges.
    pub fn edge_letter(&self, u: usize, v: usize) -> Option<i32> {
        self.edge_letter.get(&(u, v)).copied()
    }

    /// Tree path from the base to `v`.
    pub fn tree_path(&self, v: usize) -> EdgePath {
        let mut vs = vec![v];
        let mut x = v;
        while let Some(p) = self.parent[x] {
            vs.push(p);
            x = p;
        }
        vs.reverse();
        EdgePath::unchecked(vs)
    }

    /// The loop at the base represented by generator `i`.
    pub fn generator_loop(&self, i: usize) -> EdgePath {
        let (u, v) = self.generator_edges[i];
        let mut vs = self.tree_path(u).vertices().to_vec();
        let back = self.tree_path(v);
        vs.extend(back.vertices().iter().rev());
        EdgePath::unchecked(vs)
    }

    /// Number of 2-simplices in the component, i.e. relators before any
    /// simplification.
    pub fn num_relators(&self) -> usize {
        self.group.relators().len()
    }
}
