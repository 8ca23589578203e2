use serde::Serialize;

use crate::homotopy::fp::{letter_index, FpGroup, Word};
use crate::{Error, Result};

/// A complete coset table: `table[c][col]` is `c·x` where column `2i` is
/// generator `i` and `2i+1` its inverse. Coset 0 is the subgroup itself and
/// cosets are numbered in breadth-first order over the columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    pub table: Vec<Vec<usize>>,
}

fn column(l: i32) -> usize {
    2 * letter_index(l) + usize::from(l < 0)
}

impl CosetTable {
    pub fn num_cosets(&self) -> usize {
        self.table.len()
    }

    pub fn act(&self, c: usize, letter: i32) -> usize {
        self.table[c][column(letter)]
    }

    pub fn apply(&self, c: usize, w: &[i32]) -> usize {
        w.iter().fold(c, |c, &l| self.act(c, l))
    }

    /// Cosets `Hg` with `Hg·w = Hg` for every subgroup generator `w`; these
    /// are exactly the cosets of `N(H)/H` when the index is finite.
    pub fn normalizer_cosets(&self, subgroup: &[Word]) -> Vec<usize> {
        (0..self.num_cosets())
            .filter(|&c| subgroup.iter().all(|w| self.apply(c, w) == c))
            .collect()
    }

    /// Whether the generators act transitively (always true for a table
    /// produced by enumeration; useful for externally supplied tables).
    pub fn is_transitive(&self) -> bool {
        let mut seen = vec![false; self.num_cosets()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for &d in &self.table[c] {
                if !std::mem::replace(&mut seen[d], true) {
                    stack.push(d);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Todd–Coxeter enumeration (HLT strategy with coincidence processing) of
/// the cosets of the subgroup generated by `subgroup` in `g`.
///
/// `max_steps` bounds the number of coset definitions; running out gives
/// [`Error::ResourceLimit`] (the index may be infinite).
pub fn enumerate_cosets(g: &FpGroup, subgroup: &[Word], max_steps: usize) -> Result<CosetTable> {
    let ngen = g.num_generators();
    for w in subgroup {
        if w.iter().any(|&l| l == 0 || letter_index(l) >= ngen) {
            return Err(Error::invalid("subgroup word uses an unknown generator"));
        }
    }
    let mut e = Enumerator {
        cols: 2 * ngen,
        table: vec![vec![None; 2 * ngen]],
        parent: vec![0],
        defined: 1,
        max_steps,
    };
    for w in subgroup {
        e.scan_and_fill(0, w)?;
    }
    let relators: Vec<Word> = g.relators().iter().filter(|r| !r.is_empty()).cloned().collect();
    let mut c = 0;
    while c < e.table.len() {
        if e.live(c) {
            for r in &relators {
                e.scan_and_fill(c, r)?;
                if !e.live(c) {
                    break;
                }
            }
            for x in 0..e.cols {
                if e.live(c) && e.table[c][x].is_none() {
                    e.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    Ok(e.standardize())
}

struct Enumerator {
    cols: usize,
    table: Vec<Vec<Option<usize>>>,
    parent: Vec<usize>,
    defined: usize,
    max_steps: usize,
}

fn inv_col(x: usize) -> usize {
    x ^ 1
}

impl Enumerator {
    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<()> {
        if self.defined >= self.max_steps {
            return Err(Error::ResourceLimit(format!(
                "coset enumeration exceeded {} definitions",
                self.max_steps
            )));
        }
        self.defined += 1;
        let d = self.table.len();
        self.table.push(vec![None; self.cols]);
        self.parent.push(d);
        self.table[c][x] = Some(d);
        self.table[d][inv_col(x)] = Some(c);
        Ok(())
    }

    fn scan_and_fill(&mut self, alpha: usize, w: &[i32]) -> Result<()> {
        let cols: Vec<usize> = w.iter().map(|&l| column(l)).collect();
        if cols.is_empty() {
            return Ok(());
        }
        let mut f = alpha;
        let mut b = alpha;
        let mut i = 0usize;
        let mut j = cols.len() as isize - 1;
        loop {
            while (i as isize) <= j {
                match self.table[f][cols[i]] {
                    Some(n) => {
                        f = n;
                        i += 1;
                    }
                    None => break,
                }
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize {
                match self.table[b][inv_col(cols[j as usize])] {
                    Some(n) => {
                        b = n;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.table[f][cols[i]] = Some(b);
                self.table[b][inv_col(cols[i])] = Some(f);
                return Ok(());
            }
            self.define(f, cols[i])?;
        }
    }

    fn rep(&mut self, mut k: usize) -> usize {
        let mut root = k;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[k] != root {
            let next = self.parent[k];
            self.parent[k] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, k: usize, l: usize, queue: &mut Vec<usize>) {
        let (k, l) = (self.rep(k), self.rep(l));
        if k == l {
            return;
        }
        let (mu, nu) = (k.min(l), k.max(l));
        self.parent[nu] = mu;
        queue.push(nu);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let gamma = queue[i];
            i += 1;
            for x in 0..self.cols {
                let Some(delta) = self.table[gamma][x] else {
                    continue;
                };
                if self.table[delta][inv_col(x)] == Some(gamma) {
                    self.table[delta][inv_col(x)] = None;
                }
                let mu = self.rep(gamma);
                let nu = self.rep(delta);
                if let Some(m) = self.table[mu][x] {
                    self.merge(nu, m, &mut queue);
                } else if let Some(n) = self.table[nu][inv_col(x)] {
                    self.merge(mu, n, &mut queue);
                } else {
                    self.table[mu][x] = Some(nu);
                    self.table[nu][inv_col(x)] = Some(mu);
                }
            }
        }
    }

    /// Renumbers live cosets in breadth-first order from coset 0.
    fn standardize(mut self) -> CosetTable {
        let n = self.table.len();
        let mut number = vec![usize::MAX; n];
        let mut order = vec![0];
        number[0] = 0;
        let mut i = 0;
        while i < order.len() {
            let c = order[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.rep(self.table[c][x].expect("complete table"));
                if number[d] == usize::MAX {
                    number[d] = order.len();
                    order.push(d);
                }
            }
        }
        let table = order
            .iter()
            .map(|&c| {
                (0..self.cols)
                    .map(|x| {
                        let d = self.table[c][x].unwrap();
                        number[self.rep(d)]
                    })
                    .collect()
            })
            .collect();
        CosetTable { table }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homotopy::fp::parse_word;

    fn group(n: usize, rels: &[&str]) -> FpGroup {
        let gens = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        FpGroup::new(gens, rels.iter().map(|r| parse_word(r, n).unwrap()).collect()).unwrap()
    }

    fn words(n: usize, ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|w| parse_word(w, n).unwrap()).collect()
    }

    #[test]
    fn finite_group_orders() {
        assert_eq!(enumerate_cosets(&group(1, &["aaaaa"]), &[], 1000).unwrap().num_cosets(), 5);
        // S3 = <a, b | a^2, b^3, (ab)^2>
        let s3 = group(2, &["aa", "bbb", "abab"]);
        assert_eq!(enumerate_cosets(&s3, &[], 1000).unwrap().num_cosets(), 6);
        assert_eq!(enumerate_cosets(&s3, &words(2, &["a"]), 1000).unwrap().num_cosets(), 3);
        // Q8 = <a, b | a^4, a^2 b^-2, a b a B^... > via b a B = A
        let q8 = group(2, &["aaaa", "aaBB", "baBa"]);
        assert_eq!(enumerate_cosets(&q8, &[], 1000).unwrap().num_cosets(), 8);
        // A5 = <a, b | a^2, b^3, (ab)^5>
        let a5 = group(2, &["aa", "bbb", "ababababab"]);
        assert_eq!(enumerate_cosets(&a5, &[], 10_000).unwrap().num_cosets(), 60);
    }

    #[test]
    fn free_group_subgroups() {
        let f2 = group(2, &[]);
        let t = enumerate_cosets(&f2, &words(2, &["bA", "aa", "ab"]), 1000).unwrap();
        assert_eq!(t.num_cosets(), 2);
        assert_eq!(t.normalizer_cosets(&words(2, &["bA", "aa", "ab"])).len(), 2);
        let h = words(2, &["a", "baBB", "bbaB", "bbb"]);
        let t = enumerate_cosets(&f2, &h, 1000).unwrap();
        assert_eq!(t.num_cosets(), 3);
        assert_eq!(t.normalizer_cosets(&h), vec![0]);
        assert!(t.is_transitive());
    }

    #[test]
    fn infinite_index_hits_the_budget() {
        let f2 = group(2, &[]);
        assert!(matches!(
            enumerate_cosets(&f2, &words(2, &["a"]), 500),
            Err(Error::ResourceLimit(_))
        ));
    }
}
