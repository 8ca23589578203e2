//! Small named groups.

use super::FiniteGroup;
use crate::{Error, Result};

pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n > 0);
    let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    FiniteGroup::from_table(table, None).expect("cyclic table is valid")
}

/// Dihedral group of order `2n` (symmetries of an `n`-gon; `n ≥ 3`).
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 3);
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    FiniteGroup::from_permutations(&[rot, refl], n).expect("valid generators")
}

pub fn symmetric(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    if n == 1 {
        return FiniteGroup::trivial();
    }
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    FiniteGroup::from_permutations(&[cycle, swap], n).expect("valid generators")
}

/// Alternating group on 4 points (order 12).
pub fn alternating4() -> FiniteGroup {
    FiniteGroup::from_permutations(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], 4).expect("valid generators")
}

/// Quaternion group of order 8, as permutations of its own elements.
pub fn quaternion() -> FiniteGroup {
    // elements ±1, ±i, ±j, ±k indexed 0..8 as (sign, unit) with unit 0..4
    let mul_unit = |a: usize, b: usize| -> (bool, usize) {
        // returns (negate, unit) for unit_a * unit_b
        match (a, b) {
            (0, x) | (x, 0) => (false, x),
            (x, y) if x == y => (true, 0),
            (1, 2) => (false, 3),
            (2, 3) => (false, 1),
            (3, 1) => (false, 2),
            (2, 1) => (true, 3),
            (3, 2) => (true, 1),
            (1, 3) => (true, 2),
            _ => unreachable!(),
        }
    };
    let left = |g: usize| -> Vec<usize> {
        (0..8)
            .map(|h| {
                let (sg, ug) = (g / 4, g % 4);
                let (sh, uh) = (h / 4, h % 4);
                let (neg, u) = mul_unit(ug, uh);
                let s = (sg + sh + neg as usize) % 2;
                s * 4 + u
            })
            .collect()
    };
    FiniteGroup::from_permutations(&[left(1), left(2)], 8).expect("valid generators")
}

/// Parses names such as `trivial`, `Z6`, `D4` (order 8), `S3`, `A4`, `Q8`,
/// `V4`, and products `Z2xZ2`.
pub fn by_name(name: &str) -> Result<FiniteGroup> {
    let name = name.trim();
    if let Some((a, b)) = name.split_once('x') {
        return Ok(by_name(a)?.product(&by_name(b)?));
    }
    let num = |s: &str| -> Result<usize> {
        s.parse::<usize>()
            .map_err(|_| Error::invalid(format!("unknown group name {name:?}")))
    };
    match name {
        "trivial" | "1" => Ok(FiniteGroup::trivial()),
        "A4" => Ok(alternating4()),
        "Q8" => Ok(quaternion()),
        "V4" => Ok(cyclic(2).product(&cyclic(2))),
        _ => match name.split_at(1) {
            ("Z", n) => {
                let n = num(n)?;
                if n == 0 {
                    return Err(Error::invalid("Z0 is not finite"));
                }
                Ok(cyclic(n))
            }
            ("D", n) => {
                let n = num(n)?;
                if n < 3 {
                    return Err(Error::invalid("dihedral groups need n >= 3"));
                }
                Ok(dihedral(n))
            }
            ("S", n) => {
                let n = num(n)?;
                if !(1..=5).contains(&n) {
                    return Err(Error::invalid("symmetric groups limited to S1..S5"));
                }
                Ok(symmetric(n))
            }
            _ => Err(Error::invalid(format!("unknown group name {name:?}"))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(dihedral(6).order(), 12);
        assert_eq!(alternating4().order(), 12);
        assert_eq!(quaternion().order(), 8);
        assert_eq!(quaternion().center().len(), 2);
        assert_eq!(symmetric(4).order(), 24);
        assert_eq!(by_name("Z2xZ2xZ2").unwrap().order(), 8);
        assert!(by_name("Z2xZ2").unwrap().is_abelian());
        assert!(by_name("W3").is_err());
    }
}
