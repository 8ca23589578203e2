use super::SimplicialComplex;
use crate::{Error, Result};

/// An edge path in a simplicial complex, stored as its vertex sequence.
/// Consecutive vertices span an edge; a single vertex is the constant path.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgePath {
    vertices: Vec<usize>,
}

impl EdgePath {
    pub fn constant(v: usize) -> Self {
        EdgePath { vertices: vec![v] }
    }

    pub fn new(space: &SimplicialComplex, vertices: Vec<usize>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::invalid("edge path needs a base vertex"));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= space.num_vertices()) {
            return Err(Error::invalid(format!("vertex index {v} out of range")));
        }
        for w in vertices.windows(2) {
            if !space.has_edge(w[0], w[1]) {
                return Err(Error::invalid(format!(
                    "no edge between {} and {}",
                    space.vertex_name(w[0]),
                    space.vertex_name(w[1])
                )));
            }
        }
        Ok(EdgePath { vertices })
    }

    pub fn from_names(space: &SimplicialComplex, names: &[&str]) -> Result<Self> {
        let vs = names
            .iter()
            .map(|n| space.require_vertex(n))
            .collect::<Result<Vec<_>>>()?;
        Self::new(space, vs)
    }

    pub(crate) fn unchecked(vertices: Vec<usize>) -> Self {
        debug_assert!(!vertices.is_empty());
        EdgePath { vertices }
    }

    pub fn base(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_constant(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn steps(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn concat(&self, other: &EdgePath) -> Result<EdgePath> {
        if self.end() != other.base() {
            return Err(Error::invalid("paths do not meet"));
        }
        let mut vs = self.vertices.clone();
        vs.extend_from_slice(&other.vertices[1..]);
        Ok(EdgePath { vertices: vs })
    }

    pub fn reverse(&self) -> EdgePath {
        let mut vs = self.vertices.clone();
        vs.reverse();
        EdgePath { vertices: vs }
    }

    /// Image under a simplicial vertex map.
    pub fn map(&self, f: &[usize]) -> EdgePath {
        EdgePath {
            vertices: self.vertices.iter().map(|&v| f[v]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concat_and_reverse() {
        let k = SimplicialComplex::new(&["a", "b", "c"], &[vec!["a", "b"], vec!["b", "c"]]).unwrap();
        let p = EdgePath::from_names(&k, &["a", "b"]).unwrap();
        let q = EdgePath::from_names(&k, &["b", "c"]).unwrap();
        let pq = p.concat(&q).unwrap();
        assert_eq!(pq.len(), 2);
        assert_eq!(pq.reverse().base(), 2);
        assert!(q.concat(&p).is_err());
        assert!(EdgePath::from_names(&k, &["a", "c"]).is_err());
        assert!(EdgePath::constant(0).is_constant());
    }
}
