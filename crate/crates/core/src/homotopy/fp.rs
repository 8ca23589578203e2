use serde::Serialize;

use super::intmat;
use crate::{Error, Result};

/// A word in the free group: `g+1` for generator `g`, `-(g+1)` for its inverse.
pub type Word = Vec<i32>;

pub fn gen(g: usize) -> i32 {
    g as i32 + 1
}

pub fn letter_index(l: i32) -> usize {
    l.unsigned_abs() as usize - 1
}

pub fn inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

/// Free reduction (cancels adjacent `x x⁻¹`).
pub fn reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn concat(parts: &[&[i32]]) -> Word {
    reduce(&parts.concat())
}

/// Parses the letter syntax: `a`, `b`, … name generators 0, 1, …, and the
/// upper-case letter is the inverse. An empty string is the empty word.
pub fn parse_word(s: &str, num_gens: usize) -> Result<Word> {
    s.trim()
        .chars()
        .map(|c| {
            let (idx, sign) = if c.is_ascii_lowercase() {
                (c as usize - 'a' as usize, 1)
            } else if c.is_ascii_uppercase() {
                (c as usize - 'A' as usize, -1)
            } else {
                return Err(Error::invalid(format!("bad letter {c:?} in word {s:?}")));
            };
            if idx >= num_gens {
                return Err(Error::invalid(format!(
                    "letter {c:?} is outside the {num_gens}-generator alphabet"
                )));
            }
            Ok(sign * gen(idx))
        })
        .collect()
}

/// Inverse of [`parse_word`]; generators beyond `z` are not representable.
pub fn format_word(w: &[i32]) -> String {
    w.iter()
        .map(|&l| {
            let c = (b'a' + letter_index(l) as u8) as char;
            if l > 0 {
                c
            } else {
                c.to_ascii_uppercase()
            }
        })
        .collect()
}

/// Abelian group `Z^rank ⊕ ⊕ Z/t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianInvariants {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// `None` when infinite.
    pub fn order(&self) -> Option<i64> {
        (self.rank == 0).then(|| self.torsion.iter().product())
    }
}

impl std::fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|t| format!("Z/{t}")).collect();
        parts.extend(std::iter::repeat_n("Z".to_string(), self.rank));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A finitely presented group. Relators are kept freely reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpGroup {
    generators: Vec<String>,
    relators: Vec<Word>,
}

impl FpGroup {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if let Some(&l) = r.iter().find(|&&l| l == 0 || letter_index(l) >= generators.len()) {
                return Err(Error::invalid(format!("relator letter {l} names no generator")));
            }
        }
        let relators = relators.iter().map(|r| reduce(r)).collect();
        Ok(FpGroup { generators, relators })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Exponent-sum vector of a word.
    pub fn exponent_sums(&self, w: &[i32]) -> Vec<i64> {
        let mut v = vec![0; self.generators.len()];
        for &l in w {
            v[letter_index(l)] += l.signum() as i64;
        }
        v
    }

    /// Rows are the exponent sums of the relators.
    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        self.relators.iter().map(|r| self.exponent_sums(r)).collect()
    }

    pub fn abelianization(&self) -> AbelianInvariants {
        let d = intmat::smith_diagonal(&self.relation_matrix(), self.generators.len());
        AbelianInvariants {
            rank: self.generators.len() - d.len(),
            torsion: d.into_iter().filter(|&x| x != 1).collect(),
        }
    }
}

/// The homomorphism `A_ab → B_ab` induced by sending generator `i` of `a`
/// to the word `images[i]` of `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbelianMapReport {
    pub source: AbelianInvariants,
    pub target: AbelianInvariants,
    pub injective: bool,
    /// Index of the image, `None` when infinite.
    pub index: Option<i64>,
}

pub fn abelian_map(a: &FpGroup, b: &FpGroup, images: &[Word]) -> AbelianMapReport {
    let f: Vec<Vec<i64>> = images.iter().map(|w| b.exponent_sums(w)).collect();
    let r = b.relation_matrix();
    let s = a.relation_matrix();
    let n = b.num_generators();
    let m = a.num_generators();
    // x ∈ Z^m maps into the relation lattice of b iff (x, y)·[F; R] = 0 for some y.
    let mut stacked = f.clone();
    stacked.extend(r.iter().cloned());
    let kernel = intmat::left_kernel(&stacked, n);
    let s_lattice = intmat::Lattice::new(&s, m);
    let injective = kernel.iter().all(|v| s_lattice.contains(&v[..m]));
    let mut image = r.clone();
    image.extend(f.iter().cloned());
    let index = intmat::lattice_index(&image, n);
    AbelianMapReport {
        source: a.abelianization(),
        target: b.abelianization(),
        injective,
        index,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(n: usize, rels: &[&str]) -> FpGroup {
        let gens = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
        FpGroup::new(gens, rels.iter().map(|r| parse_word(r, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn word_syntax_round_trips() {
        let w = parse_word("abAB", 2).unwrap();
        assert_eq!(w, vec![1, 2, -1, -2]);
        assert_eq!(format_word(&w), "abAB");
        assert!(parse_word("c", 2).is_err());
        assert_eq!(reduce(&parse_word("abBA", 2).unwrap()), Vec::<i32>::new());
    }

    #[test]
    fn abelianizations() {
        assert_eq!(group(1, &[]).abelianization().rank, 1);
        assert_eq!(group(1, &["aaa"]).abelianization().torsion, vec![3]);
        let t = group(2, &["abAB"]).abelianization();
        assert_eq!((t.rank, t.torsion.len()), (2, 0));
        // Z/2 x Z/4
        let g = group(2, &["aa", "bbbb", "abAB"]).abelianization();
        assert_eq!(g.torsion, vec![2, 4]);
        assert_eq!(g.order(), Some(8));
        assert!(group(1, &["a"]).abelianization().is_trivial());
    }

    #[test]
    fn triple_of_z_in_z() {
        let z = group(1, &[]);
        let r = abelian_map(&z, &z, &[parse_word("aaa", 1).unwrap()]);
        assert!(r.injective);
        assert_eq!(r.index, Some(3));
        // Z -> Z/3 by a -> a kills 3a
        let z3 = group(1, &["aaa"]);
        let r = abelian_map(&z, &z3, &[parse_word("a", 1).unwrap()]);
        assert!(!r.injective);
        assert_eq!(r.index, Some(1));
    }
}
