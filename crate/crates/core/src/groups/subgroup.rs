use std::collections::BTreeSet;

use super::{FiniteGroup, HARD_ORDER_LIMIT};
use crate::config::Budgets;
use crate::{Error, Result};

/// A subgroup of some [`FiniteGroup`], as an ascending member list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// Checks closure under product and inverse.
    pub fn new(g: &FiniteGroup, members: &[usize]) -> Result<Self> {
        let mut m = members.to_vec();
        m.sort_unstable();
        m.dedup();
        if let Some(&x) = m.iter().find(|&&x| x >= g.order()) {
            return Err(Error::invalid(format!("element {x} not in group")));
        }
        if m.first() != Some(&0) {
            return Err(Error::invalid("subgroup must contain the identity"));
        }
        let set: BTreeSet<usize> = m.iter().copied().collect();
        for &x in &m {
            if !set.contains(&g.inv(x)) {
                return Err(Error::invalid(format!("not closed under inverse at {x}")));
            }
            for &y in &m {
                if !set.contains(&g.mul(x, y)) {
                    return Err(Error::invalid(format!("not closed under product at {x}*{y}")));
                }
            }
        }
        Ok(Subgroup { members: m })
    }

    pub(crate) fn from_sorted(members: Vec<usize>) -> Self {
        Subgroup { members }
    }

    pub fn trivial() -> Self {
        Subgroup { members: vec![0] }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup {
            members: g.elements().collect(),
        }
    }

    pub fn generated(g: &FiniteGroup, gens: &[usize]) -> Self {
        Subgroup {
            members: g.generated(gens),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// `x·H·x⁻¹`
    pub fn conjugate(&self, g: &FiniteGroup, x: usize) -> Subgroup {
        let mut m: Vec<usize> = self.members.iter().map(|&y| g.conj(x, y)).collect();
        m.sort_unstable();
        Subgroup { members: m }
    }

    pub fn is_normal(&self, g: &FiniteGroup) -> bool {
        g.elements().all(|x| &self.conjugate(g, x) == self)
    }
}

/// `{x : xy = yx for all y in h}`.
pub fn centralizer(g: &FiniteGroup, h: &Subgroup) -> Result<Subgroup> {
    let h = Subgroup::new(g, h.members())?;
    let members = g
        .elements()
        .filter(|&x| h.members().iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
        .collect();
    Ok(Subgroup::from_sorted(members))
}

type Mask = u128;

fn mask_of(members: &[usize]) -> Mask {
    members.iter().fold(0, |m, &x| m | (1 << x))
}

fn members_of(mask: Mask) -> Vec<usize> {
    (0..128).filter(|&i| mask >> i & 1 == 1).collect()
}

/// Every subgroup of `g`, ordered by (order, member list).
pub fn all_subgroups(g: &FiniteGroup, budgets: &Budgets) -> Result<Vec<Subgroup>> {
    let n = g.order();
    if n > budgets.max_group_order || n > HARD_ORDER_LIMIT {
        return Err(Error::ResourceLimit(format!(
            "group order {n} exceeds bound {}",
            budgets.max_group_order.min(HARD_ORDER_LIMIT)
        )));
    }
    let cyclic: BTreeSet<Mask> = g.elements().map(|x| mask_of(&g.generated(&[x]))).collect();
    // Every subgroup is a join of cyclic subgroups; grow joins until stable.
    let mut found: BTreeSet<Mask> = cyclic.clone();
    let mut frontier: Vec<Mask> = cyclic.iter().copied().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &s in &frontier {
            for &c in &cyclic {
                if s & c == c {
                    continue;
                }
                let gens = members_of(s | c);
                let joined = mask_of(&g.generated(&gens));
                if found.insert(joined) {
                    next.push(joined);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subgroup> = found.into_iter().map(|m| Subgroup::from_sorted(members_of(m))).collect();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
    Ok(out)
}

/// One subgroup per conjugacy class; the representative is the class member
/// with the lexicographically least member list. Ordered by (order, members).
pub fn subgroups_up_to_conjugacy(g: &FiniteGroup, budgets: &Budgets) -> Result<Vec<Subgroup>> {
    let all = all_subgroups(g, budgets)?;
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut reps = Vec::new();
    for h in &all {
        if seen.contains(&h.members) {
            continue;
        }
        let class: BTreeSet<Vec<usize>> = g.elements().map(|x| h.conjugate(g, x).members).collect();
        let rep = class.iter().next().unwrap().clone();
        seen.extend(class);
        reps.push(Subgroup::from_sorted(rep));
    }
    reps.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.cmp(&b.members)));
    Ok(reps)
}

/// Canonical representative of the conjugacy class of `h`.
pub fn conjugacy_representative(g: &FiniteGroup, h: &Subgroup) -> Subgroup {
    g.elements()
        .map(|x| h.conjugate(g, x))
        .min_by(|a, b| a.members.cmp(&b.members))
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::library::{cyclic, dihedral, symmetric};

    #[test]
    fn centralizer_examples() {
        let s3 = symmetric(3);
        assert_eq!(centralizer(&s3, &Subgroup::trivial()).unwrap(), Subgroup::whole(&s3));
        assert_eq!(centralizer(&s3, &Subgroup::whole(&s3)).unwrap().members(), &[0]);
        let z6 = cyclic(6);
        for h in all_subgroups(&z6, &Budgets::default()).unwrap() {
            assert_eq!(centralizer(&z6, &h).unwrap(), Subgroup::whole(&z6));
        }
        let c3 = s3.elements().find(|&x| s3.element_order(x) == 3).unwrap();
        assert!(centralizer(&s3, &Subgroup::from_sorted(vec![0, c3])).is_err());
    }

    #[test]
    fn rejects_non_subgroups() {
        let z4 = cyclic(4);
        assert!(Subgroup::new(&z4, &[0, 1]).is_err());
        assert!(Subgroup::new(&z4, &[1, 3]).is_err());
        assert!(Subgroup::new(&z4, &[0, 2]).is_ok());
    }

    /// Brute force: all subsets of S3 closed under multiplication.
    #[test]
    fn s3_subgroups_brute_force() {
        let s3 = symmetric(3);
        let mut brute = 0;
        for mask in 0u32..64 {
            let m: Vec<usize> = (0..6).filter(|i| mask >> i & 1 == 1).collect();
            if Subgroup::new(&s3, &m).is_ok() {
                brute += 1;
            }
        }
        let all = all_subgroups(&s3, &Budgets::default()).unwrap();
        assert_eq!(brute, 6);
        assert_eq!(all.len(), brute);
        let classes = subgroups_up_to_conjugacy(&s3, &Budgets::default()).unwrap();
        let orders: Vec<usize> = classes.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn cyclic_subgroup_classes() {
        let b = Budgets::default();
        assert_eq!(subgroups_up_to_conjugacy(&cyclic(2), &b).unwrap().len(), 2);
        assert_eq!(subgroups_up_to_conjugacy(&cyclic(4), &b).unwrap().len(), 3);
        // D4 (order 8): 10 subgroups in 8 classes
        assert_eq!(all_subgroups(&dihedral(4), &b).unwrap().len(), 10);
        assert_eq!(subgroups_up_to_conjugacy(&dihedral(4), &b).unwrap().len(), 8);
    }

    #[test]
    fn representative_is_conjugation_invariant() {
        let g = symmetric(4);
        let b = Budgets::default();
        for h in all_subgroups(&g, &b).unwrap() {
            let rep = conjugacy_representative(&g, &h);
            for x in g.elements() {
                assert_eq!(conjugacy_representative(&g, &h.conjugate(&g, x)), rep);
            }
        }
    }

    #[test]
    fn order_bound() {
        let b = Budgets {
            max_group_order: 5,
            ..Budgets::default()
        };
        assert!(matches!(subgroups_up_to_conjugacy(&cyclic(6), &b), Err(Error::ResourceLimit(_))));
    }
}
