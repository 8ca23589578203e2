use std::collections::BTreeSet;

use super::cosets::{enumerate_cosets, CosetTable};
use crate::complexes::SimplicialComplex;
use crate::config::Budgets;
use crate::homotopy::fp::{self, FpGroup, Word};
use crate::homotopy::pi1_presentation;
use crate::report::{Report, Violation};
use crate::{Error, Result};

/// A finite cover of a connected simplicial complex, built from the right
/// coset action of `π₁(base, base_vertex)` on a finite-index subgroup.
///
/// Total vertices are pairs `(v, c)` named `"{v}.{c}"`; vertex `(v, c)`
/// stands for the path classes `H·g` ending at `v`, with `g` read through
/// the spanning tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverData {
    pub total: SimplicialComplex,
    pub base: SimplicialComplex,
    /// Base vertex of each total vertex.
    pub projection: Vec<usize>,
    /// Coset (sheet) of each total vertex.
    pub sheet: Vec<usize>,
    pub base_vertex: usize,
    /// The total vertex `(base_vertex, 0)`.
    pub base_lift: usize,
    pub presentation: FpGroup,
    pub subgroup: Vec<Word>,
    pub coset_table: CosetTable,
}

/// `(v, c)` vertex name.
pub fn sheet_name(v: &str, c: usize) -> String {
    format!("{v}.{c}")
}

pub fn cover_from_subgroup(
    s: &SimplicialComplex,
    base: usize,
    subgroup: &[Word],
    max_index: usize,
    budgets: &Budgets,
) -> Result<CoverData> {
    if base >= s.num_vertices() {
        return Err(Error::invalid(format!("base {base} is not a vertex")));
    }
    if s.components().len() != 1 {
        return Err(Error::invalid("covers are built over connected complexes only"));
    }
    let p = pi1_presentation(s, base)?;
    let ngen = p.group.num_generators();
    if let Some(w) = subgroup.iter().find(|w| w.iter().any(|&l| l == 0 || fp::letter_index(l) >= ngen)) {
        return Err(Error::invalid(format!(
            "subgroup word {w:?} leaves the {ngen}-generator alphabet"
        )));
    }
    let subgroup: Vec<Word> = subgroup.iter().map(|w| fp::reduce(w)).collect();
    let table = enumerate_cosets(&p.group, &subgroup, budgets.coset_steps)?;
    let n = table.num_cosets();
    if n > max_index {
        return Err(Error::ResourceLimit(format!("index {n} exceeds the bound {max_index}")));
    }
    let step = |c: usize, u: usize, v: usize| match p.edge_letter(u, v) {
        Some(l) => table.act(c, l),
        None => c,
    };
    let names: Vec<String> = (0..n)
        .flat_map(|c| s.vertices().iter().map(move |v| sheet_name(v, c)))
        .collect();
    let mut simplices = Vec::new();
    for sigma in s.simplices().iter().filter(|x| x.len() > 1) {
        for c in 0..n {
            simplices.push(
                sigma
                    .iter()
                    .map(|&v| sheet_name(s.vertex_name(v), step(c, sigma[0], v)))
                    .collect::<Vec<_>>(),
            );
        }
    }
    let total = SimplicialComplex::new(&names, &simplices)?;
    let mut projection = vec![0; total.num_vertices()];
    let mut sheet = vec![0; total.num_vertices()];
    for c in 0..n {
        for v in 0..s.num_vertices() {
            let x = total.vertex_index(&sheet_name(s.vertex_name(v), c)).unwrap();
            projection[x] = v;
            sheet[x] = c;
        }
    }
    let base_lift = total.vertex_index(&sheet_name(s.vertex_name(base), 0)).unwrap();
    let cd = CoverData {
        total,
        base: s.clone(),
        projection,
        sheet,
        base_vertex: base,
        base_lift,
        presentation: p.group,
        subgroup,
        coset_table: table,
    };
    cd.validate().into_result().map_err(|e| Error::InternalError(e.to_string()))?;
    Ok(cd)
}

impl CoverData {
    pub fn index(&self) -> usize {
        self.coset_table.num_cosets()
    }

    /// Image of a total simplex in the base (sorted).
    pub fn project(&self, s: &[usize]) -> Vec<usize> {
        SimplicialComplex::image(s, &self.projection)
    }

    /// Base simplex index of every total simplex.
    pub fn simplex_labels(&self) -> Vec<usize> {
        self.total
            .simplices()
            .iter()
            .map(|s| self.base.simplex_index(&self.project(s)).expect("projection is simplicial"))
            .collect()
    }

    /// Total vertices over `v`, ascending.
    pub fn fiber(&self, v: usize) -> Vec<usize> {
        (0..self.total.num_vertices()).filter(|&x| self.projection[x] == v).collect()
    }

    /// Checks the covering conditions combinatorially: the projection is
    /// simplicial and dimension preserving, every fiber has `index`
    /// simplices, and each vertex star maps bijectively onto the star below.
    pub fn validate(&self) -> Report {
        let mut r = Report::ok();
        let n = self.index();
        let t = &self.total;
        let mut count = vec![0usize; self.base.len()];
        for s in t.simplices() {
            let img = self.project(s);
            match self.base.simplex_index(&img) {
                Some(i) if img.len() == s.len() => count[i] += 1,
                _ => r.push(Violation::new("projection not simplicial", vec![t.simplex_name(s)])),
            }
        }
        for (i, &k) in count.iter().enumerate() {
            if k != n {
                r.push(
                    Violation::new("fiber size", vec![self.base.simplex_name(&self.base.simplices()[i])])
                        .with_witness(vec![k.to_string(), n.to_string()]),
                );
            }
        }
        for x in 0..t.num_vertices() {
            let up: BTreeSet<Vec<usize>> = t.star(&[x]).iter().map(|&i| self.project(&t.simplices()[i])).collect();
            let down = self.base.star(&[self.projection[x]]);
            let down: BTreeSet<Vec<usize>> = down.iter().map(|&i| self.base.simplices()[i].clone()).collect();
            if up != down || t.star(&[x]).len() != down.len() {
                r.push(Violation::new("star not mapped bijectively", vec![t.vertex_name(x).to_string()]));
            }
        }
        r
    }
}

/// Schreier generators of every index-2 subgroup of `π₁` with `n`
/// generators, one subgroup per nonzero map to `Z/2` (in binary order).
pub fn index_two_subgroups(n: usize) -> Vec<Vec<Word>> {
    (1u64..(1 << n))
        .map(|mask| {
            let odd = |i: usize| mask >> i & 1 == 1;
            let t = fp::gen((0..n).find(|&i| odd(i)).unwrap());
            let mut words: Vec<Word> = Vec::new();
            for i in 0..n {
                let x = fp::gen(i);
                if odd(i) {
                    words.push(fp::reduce(&[x, -t]));
                    words.push(fp::reduce(&[t, x]));
                } else {
                    words.push(vec![x]);
                    words.push(vec![t, x, -t]);
                }
            }
            words.retain(|w| !w.is_empty());
            words.sort();
            words.dedup();
            words
        })
        .collect()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::homotopy::fp::parse_word;

    pub(crate) fn circle(n: usize) -> SimplicialComplex {
        let vs: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
        let es: Vec<Vec<String>> = (0..n).map(|i| vec![vs[i].clone(), vs[(i + 1) % n].clone()]).collect();
        SimplicialComplex::new(&vs, &es).unwrap()
    }

    pub(crate) fn wedge() -> SimplicialComplex {
        let vs = ["o", "a", "b", "c", "d"];
        let es = [["o", "a"], ["a", "b"], ["b", "o"], ["o", "c"], ["c", "d"], ["d", "o"]];
        let es: Vec<Vec<&str>> = es.iter().map(|e| e.to_vec()).collect();
        SimplicialComplex::new(&vs, &es).unwrap()
    }

    fn words(n: usize, ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|w| parse_word(w, n).unwrap()).collect()
    }

    #[test]
    fn whole_group_gives_the_identity_cover() {
        let s = wedge();
        let cd = cover_from_subgroup(&s, 0, &words(2, &["a", "b"]), 5, &Budgets::default()).unwrap();
        assert_eq!(cd.index(), 1);
        assert_eq!(cd.total.len(), s.len());
    }

    #[test]
    fn hexagon_triple_cover_is_an_18_cycle() {
        let s = circle(6);
        let cd = cover_from_subgroup(&s, 0, &words(1, &["aaa"]), 5, &Budgets::default()).unwrap();
        assert_eq!(cd.index(), 3);
        assert_eq!(cd.total.edges().len(), 18);
        assert_eq!(cd.total.components().len(), 1);
        assert!(cd.total.adjacency().iter().all(|a| a.len() == 2));
        assert_eq!(cd.total.euler_characteristic(), 0);
    }

    #[test]
    fn wedge_double_covers() {
        let s = wedge();
        let subs = index_two_subgroups(2);
        assert_eq!(subs.len(), 3);
        for h in subs {
            let cd = cover_from_subgroup(&s, 0, &h, 2, &Budgets::default()).unwrap();
            assert_eq!(cd.index(), 2);
            assert_eq!(cd.total.euler_characteristic(), 2 * s.euler_characteristic());
            assert_eq!(cd.total.components().len(), 1);
            assert!((0..s.num_vertices()).all(|v| cd.fiber(v).len() == 2));
        }
    }

    #[test]
    fn bounds_and_alphabet() {
        let s = wedge();
        let b = Budgets::default();
        assert!(matches!(
            cover_from_subgroup(&s, 0, &words(2, &["aaa", "b"]), 2, &b),
            Err(Error::ResourceLimit(_))
        ));
        assert!(matches!(cover_from_subgroup(&s, 0, &[vec![3]], 2, &b), Err(Error::InvalidInput(_))));
        let tight = Budgets {
            coset_steps: 50,
            ..b
        };
        assert!(matches!(
            cover_from_subgroup(&s, 0, &words(2, &["a"]), 100, &tight),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn filled_disk_has_only_the_trivial_cover() {
        let s = SimplicialComplex::new(&["x", "y", "z"], &[vec!["x", "y", "z"]]).unwrap();
        let cd = cover_from_subgroup(&s, 0, &[], 4, &Budgets::default()).unwrap();
        assert_eq!(cd.index(), 1);
    }
}
