use std::collections::VecDeque;

use serde::Serialize;

use super::cover::CoverData;
use crate::complexes::SimplicialComplex;
use crate::gaction::{quotient, GComplex};
use crate::par::{self, Exec};
use crate::{Error, Result};

/// A group of vertex permutations of a complex, sorted lexicographically
/// (so the identity comes first), with its composition table
/// `table[i][j] = index of elements[i] ∘ elements[j]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeckGroup {
    pub elements: Vec<Vec<usize>>,
    pub table: Vec<Vec<usize>>,
}

impl DeckGroup {
    /// Closes nothing: the permutations must already form a group.
    pub fn from_permutations(mut elements: Vec<Vec<usize>>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let find = |p: &Vec<usize>| elements.binary_search(p).ok();
        let mut table = Vec::with_capacity(elements.len());
        for f in &elements {
            let mut row = Vec::with_capacity(elements.len());
            for g in &elements {
                let fg: Vec<usize> = g.iter().map(|&x| f[x]).collect();
                row.push(find(&fg).ok_or_else(|| Error::InternalError("deck set not closed under composition".into()))?);
            }
            table.push(row);
        }
        Ok(DeckGroup { elements, table })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|i| (0..i).all(|j| self.table[i][j] == self.table[j][i]))
    }
}

/// A simplicial map to be respected: every simplex of `space` carries the
/// label of its image (a base simplex or an orbit).
pub(crate) struct Labelled<'a> {
    pub space: &'a SimplicialComplex,
    pub label: &'a [usize],
}

impl Labelled<'_> {
    fn label_of(&self, s: &[usize]) -> Option<usize> {
        let mut s = s.to_vec();
        s.sort_unstable();
        self.space.simplex_index(&s).map(|i| self.label[i])
    }

    /// The unique automorphism over the labels sending `start` to `image`,
    /// found by propagating along edges; `None` if it does not exist.
    pub fn propagate(&self, adj: &[Vec<usize>], start: usize, image: usize) -> Option<Vec<usize>> {
        let n = self.space.num_vertices();
        if self.label_of(&[start]) != self.label_of(&[image]) {
            return None;
        }
        let mut f = vec![usize::MAX; n];
        f[start] = image;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &x2 in &adj[x] {
                let want = (self.label_of(&[x, x2]), self.label_of(&[x2]));
                let mut cands = adj[f[x]].iter().filter(|&&y2| (self.label_of(&[f[x], y2]), self.label_of(&[y2])) == want);
                let y2 = *cands.next()?;
                if cands.next().is_some() {
                    return None;
                }
                if f[x2] == usize::MAX {
                    f[x2] = y2;
                    queue.push_back(x2);
                } else if f[x2] != y2 {
                    return None;
                }
            }
        }
        if f.contains(&usize::MAX) {
            return None;
        }
        let mut seen = vec![false; n];
        for &y in &f {
            if std::mem::replace(&mut seen[y], true) {
                return None;
            }
        }
        let preserves = self.space.simplices().iter().enumerate().all(|(i, s)| {
            let img: Vec<usize> = s.iter().map(|&v| f[v]).collect();
            self.label_of(&img) == Some(self.label[i])
        });
        preserves.then_some(f)
    }

    /// All automorphisms over the labels, seeded at `start` (whose
    /// component must be everything).
    pub fn automorphisms(&self, start: usize, exec: Exec) -> Result<DeckGroup> {
        let adj = self.space.adjacency();
        let cands: Vec<usize> = (0..self.space.num_vertices())
            .filter(|&y| self.label_of(&[y]) == self.label_of(&[start]))
            .collect();
        let found: Vec<Vec<usize>> = par::map(exec, &cands, |&y| self.propagate(&adj, start, y))
            .into_iter()
            .flatten()
            .collect();
        DeckGroup::from_permutations(found)
    }
}

/// Deck transformations of a cover, by propagation from each point over the
/// base vertex.
pub fn deck_group(cd: &CoverData, exec: Exec) -> Result<DeckGroup> {
    let labels = cd.simplex_labels();
    Labelled {
        space: &cd.total,
        label: &labels,
    }
    .automorphisms(cd.base_lift, exec)
}

/// `|N(H)/H|` read off the coset table.
pub fn normalizer_quotient_order(cd: &CoverData) -> usize {
    cd.coset_table.normalizer_cosets(&cd.subgroup).len()
}

/// Sheet of the base lift's image under each deck element, in element order.
pub fn deck_sheets(cd: &CoverData, deck: &DeckGroup) -> Vec<usize> {
    deck.elements.iter().map(|f| cd.sheet[f[cd.base_lift]]).collect()
}

/// The deck group of the orbit map `Y → Y/Γ`, computed by brute force over
/// `Γ` and, for free actions, again by propagation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalDeck {
    /// Elements of `Γ` acting trivially (the noneffective part).
    pub kernel: Vec<String>,
    pub effective_order: usize,
    pub brute_force: DeckGroup,
    pub propagated: Option<DeckGroup>,
    pub free: bool,
    /// Whether (a) has `|Γ|/|ker|` elements, every one commuting with the
    /// orbit map, and (b), when computed, equals (a).
    pub agrees: bool,
    pub flags: Vec<String>,
}

pub fn canonical_cover_deck(gc: &GComplex, exec: Exec) -> Result<CanonicalDeck> {
    let y = gc.space();
    if y.components().len() != 1 {
        return Err(Error::invalid("the canonical cover needs a connected complex"));
    }
    let q = quotient(gc)?;
    let gamma = gc.group();
    let kernel = gc.kernel();
    let space = Labelled {
        space: y,
        label: &q.orbit_of,
    };
    let perms: Vec<Vec<usize>> = gamma.elements().map(|g| gc.action()[g].clone()).collect();
    let over_quotient = perms.iter().all(|f| {
        y.simplices().iter().enumerate().all(|(i, s)| {
            let img: Vec<usize> = s.iter().map(|&v| f[v]).collect();
            space.label_of(&img) == Some(q.orbit_of[i])
        })
    });
    let brute_force = DeckGroup::from_permutations(perms)?;
    let effective_order = gamma.order() / kernel.order();
    let free = gc.is_free();
    let mut flags = Vec::new();
    let mut agrees = over_quotient && brute_force.order() == effective_order;
    let propagated = if free {
        let d = space.automorphisms(0, exec)?;
        agrees &= d == brute_force;
        Some(d)
    } else {
        flags.push("not a trivial-isotropy cover".to_string());
        None
    };
    if kernel.order() > 1 {
        flags.push("noneffective action".to_string());
    }
    Ok(CanonicalDeck {
        kernel: kernel.members().iter().map(|&g| gamma.label(g)).collect(),
        effective_order,
        brute_force,
        propagated,
        free,
        agrees,
        flags,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::config::Budgets;
    use crate::covering::cover::tests::{circle, wedge};
    use crate::covering::{cover_from_subgroup, index_two_subgroups};
    use crate::gaction::tests::{hexagon, path5};
    use crate::groups::library::cyclic;
    use crate::homotopy::fp::parse_word;

    fn words(n: usize, ws: &[&str]) -> Vec<Vec<i32>> {
        ws.iter().map(|w| parse_word(w, n).unwrap()).collect()
    }

    #[test]
    fn identity_cover_has_trivial_deck() {
        let cd = cover_from_subgroup(&wedge(), 0, &words(2, &["a", "b"]), 1, &Budgets::default()).unwrap();
        assert_eq!(deck_group(&cd, Exec::Sequential).unwrap().order(), 1);
    }

    #[test]
    fn normal_covers() {
        let b = Budgets::default();
        let cd = cover_from_subgroup(&circle(6), 0, &words(1, &["aaa"]), 3, &b).unwrap();
        let d = deck_group(&cd, Exec::Parallel).unwrap();
        assert_eq!(d.order(), 3);
        assert!(d.is_abelian());
        assert_eq!(deck_sheets(&cd, &d), vec![0, 1, 2]);
        assert_eq!(normalizer_quotient_order(&cd), 3);
        for h in index_two_subgroups(2) {
            let cd = cover_from_subgroup(&wedge(), 0, &h, 2, &b).unwrap();
            assert_eq!(deck_group(&cd, Exec::Sequential).unwrap().order(), 2);
            assert_eq!(normalizer_quotient_order(&cd), 2);
        }
    }

    #[test]
    fn non_normal_cover_has_fewer_deck_transformations() {
        let h = words(2, &["a", "baBB", "bbaB", "bbb"]);
        let cd = cover_from_subgroup(&wedge(), 0, &h, 3, &Budgets::default()).unwrap();
        assert_eq!(cd.index(), 3);
        let seq = deck_group(&cd, Exec::Sequential).unwrap();
        assert_eq!(seq, deck_group(&cd, Exec::Parallel).unwrap());
        assert_eq!(seq.order(), normalizer_quotient_order(&cd));
        assert!(seq.order() < 3);
    }

    #[test]
    fn canonical_decks() {
        let d = canonical_cover_deck(&hexagon(), Exec::Parallel).unwrap();
        assert!(d.free && d.agrees);
        assert_eq!(d.brute_force.order(), 3);

        let tri = crate::complexes::SimplicialComplex::new(&["x", "y", "z"], &[vec!["x", "y", "z"]]).unwrap();
        let d = canonical_cover_deck(&GComplex::trivial(tri, Arc::new(cyclic(2))), Exec::Sequential).unwrap();
        assert_eq!(d.brute_force.order(), 1);
        assert_eq!(d.kernel.len(), 2);
        assert!(d.agrees);

        let d = canonical_cover_deck(&path5(), Exec::Sequential).unwrap();
        assert_eq!(d.effective_order, 2);
        assert!(d.propagated.is_none());
        assert!(d.flags.contains(&"not a trivial-isotropy cover".to_string()));
    }
}
