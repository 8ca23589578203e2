use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::{Error, Report, Result, Violation};

/// A finite group given by its multiplication table. Elements are
/// `0..order`, element `0` is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates and wraps a multiplication table.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let report = validate_table(&table);
        if let Some(v) = report.violations.into_iter().next() {
            return Err(Error::invalid(format!("group table: {v}")));
        }
        let n = table.len();
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::invalid("label count differs from group order"));
            }
        }
        let flat: Vec<usize> = table.into_iter().flatten().collect();
        Ok(Self::from_flat(n, flat, labels))
    }

    fn from_flat(order: usize, table: Vec<usize>, labels: Option<Vec<String>>) -> Self {
        let mut inverse = vec![0; order];
        for x in 0..order {
            inverse[x] = (0..order).find(|&y| table[x * order + y] == 0).unwrap();
        }
        FiniteGroup {
            order,
            table,
            inverse,
            labels,
        }
    }

    /// Closure of permutation generators on `0..degree` under composition
    /// `(p·q)(i) = p(q(i))`. Elements are numbered in breadth-first order
    /// from the identity.
    pub fn from_permutations(gens: &[Vec<usize>], degree: usize) -> Result<Self> {
        Ok(Self::permutation_closure(gens, degree)?.0)
    }

    /// As [`FiniteGroup::from_permutations`], also returning the permutation
    /// realizing each element.
    pub fn permutation_closure(gens: &[Vec<usize>], degree: usize) -> Result<(Self, Vec<Vec<usize>>)> {
        for g in gens {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&i| i >= degree || std::mem::replace(&mut seen[i], true)) {
                return Err(Error::invalid("generator is not a permutation of the stated degree"));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut pos: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let p: Vec<usize> = (0..degree).map(|k| elems[i][g[k]]).collect();
                if !pos.contains_key(&p) {
                    pos.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
                if elems.len() > super::HARD_ORDER_LIMIT {
                    return Err(Error::ResourceLimit(format!(
                        "permutation group exceeds order {}",
                        super::HARD_ORDER_LIMIT
                    )));
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let p: Vec<usize> = (0..degree).map(|k| elems[a][elems[b][k]]).collect();
                table[a * n + b] = pos[&p];
            }
        }
        let labels = elems
            .iter()
            .map(|p| p.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" "))
            .map(|s| format!("({s})"))
            .collect();
        Ok((Self::from_flat(n, table, Some(labels)), elems))
    }

    pub fn trivial() -> Self {
        Self::from_flat(1, vec![0], None)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.order
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y]
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverse[x]
    }

    /// `x·y·x⁻¹`
    #[inline]
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(x, y), self.inverse[x])
    }

    pub fn mul_all(&self, xs: &[usize]) -> usize {
        xs.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    pub fn pow(&self, x: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(x) } else { x };
        (0..k.unsigned_abs()).fold(0, |acc, _| self.mul(acc, base))
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    /// Subgroup generated by `gens`, as an ascending member list.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut members = vec![0];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    /// Canonical generating set: repeatedly take the least element outside
    /// the subgroup generated so far.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current: BTreeSet<usize> = BTreeSet::from([0]);
        while let Some(x) = (0..self.order).find(|x| !current.contains(x)) {
            gens.push(x);
            current = self.generated(&gens).into_iter().collect();
        }
        gens
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.order)
            .filter(|&x| (0..self.order).all(|y| self.mul(x, y) == self.mul(y, x)))
            .collect()
    }

    /// The subgroup on `members` (must be a subgroup) as a group in its own
    /// right, elements renumbered by ascending parent index. Returns the
    /// group and the embedding `new index -> parent element`.
    pub fn subgroup_group(&self, members: &[usize]) -> (FiniteGroup, Vec<usize>) {
        let mut m = members.to_vec();
        m.sort_unstable();
        m.dedup();
        debug_assert_eq!(m.first(), Some(&0));
        let n = m.len();
        let pos: HashMap<usize, usize> = m.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = pos[&self.mul(m[a], m[b])];
            }
        }
        let labels = self.labels.as_ref().map(|l| m.iter().map(|&x| l[x].clone()).collect());
        (Self::from_flat(n, table, labels), m)
    }

    /// Direct product; element `(a, b)` is numbered `a·|other| + b`.
    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order, other.order);
        let mut table = vec![0; n * m * n * m];
        for x in 0..n * m {
            for y in 0..n * m {
                let (xa, xb) = (x / m, x % m);
                let (ya, yb) = (y / m, y % m);
                table[x * n * m + y] = self.mul(xa, ya) * m + other.mul(xb, yb);
            }
        }
        Self::from_flat(n * m, table, None)
    }
}

/// Checks a candidate multiplication table, listing each problem found.
pub fn validate_table(table: &[Vec<usize>]) -> Report {
    let mut report = Report::ok();
    let n = table.len();
    if n == 0 {
        report.push(Violation::new("empty group", vec![]));
        return report;
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            report.push(Violation::new("row length", vec![i.to_string()]));
            return report;
        }
        if let Some(&x) = row.iter().find(|&&x| x >= n) {
            report.push(Violation::new("entry out of range", vec![i.to_string()]).with_witness(vec![x.to_string()]));
            return report;
        }
    }
    for x in 0..n {
        if table[0][x] != x || table[x][0] != x {
            report.push(Violation::new("identity law", vec![x.to_string()]));
        }
    }
    for x in 0..n {
        let left = (0..n).any(|y| table[y][x] == 0);
        let right = (0..n).any(|y| table[x][y] == 0);
        if !left || !right {
            report.push(Violation::new("missing inverse", vec![x.to_string()]));
        }
    }
    'assoc: for x in 0..n {
        for y in 0..n {
            let xy = table[x][y];
            for z in 0..n {
                if table[xy][z] != table[x][table[y][z]] {
                    report.push(Violation::new(
                        "associativity",
                        vec![x.to_string(), y.to_string(), z.to_string()],
                    ));
                    break 'assoc;
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::library;

    #[test]
    fn s3_from_permutations() {
        let s3 = library::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.center(), vec![0]);
        assert_eq!(s3.generated(&s3.generators()).len(), 6);
    }

    #[test]
    fn cyclic_basics() {
        let z6 = library::cyclic(6);
        assert!(z6.is_abelian());
        assert_eq!(z6.element_order(1), 6);
        assert_eq!(z6.element_order(2), 3);
        assert_eq!(z6.pow(1, -1), 5);
        assert_eq!(z6.generated(&[2]), vec![0, 2, 4]);
        let (sub, emb) = z6.subgroup_group(&[0, 2, 4]);
        assert_eq!(sub.order(), 3);
        assert_eq!(emb, vec![0, 2, 4]);
    }

    #[test]
    fn corrupted_tables_are_rejected() {
        let good = library::cyclic(4).table_rows();
        assert!(validate_table(&good).is_ok());
        let mut bad = good.clone();
        bad[2][3] = 2;
        assert!(!validate_table(&bad).is_ok());
        assert!(FiniteGroup::from_table(bad, None).is_err());
    }

    #[test]
    fn non_permutation_generator() {
        assert!(FiniteGroup::from_permutations(&[vec![0, 0]], 2).is_err());
    }
}
