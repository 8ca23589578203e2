//! The worked examples behind the acceptance suite, as in-memory values and
//! as byte-stable JSON files.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cog::{ComplexOfGroups, NewCell};
use crate::complexes::{CellComplex, SimplicialComplex};
use crate::gaction::{random::random_gcomplex, GComplex};
use crate::groups::library::cyclic;
use crate::groups::GroupHom;
use crate::io::{self, AttachSpec};
use crate::{Error, Result};

pub const NAMES: [&str; 5] = ["reflection-path", "hexagon-z3", "wedge2", "z2-disk", "random-gcomplex"];

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn cycle(vs: &[String]) -> Vec<Vec<String>> {
    (0..vs.len()).map(|i| vec![vs[i].clone(), vs[(i + 1) % vs.len()].clone()]).collect()
}

/// The path `v0 – … – v4` with `Z/2` reversing it; base vertex `v2`.
pub fn reflection_path() -> (GComplex, usize) {
    let vs = names(5);
    let es: Vec<Vec<String>> = vs.windows(2).map(|w| w.to_vec()).collect();
    let y = SimplicialComplex::new(&vs, &es).expect("path");
    let flip = (0..5).rev().collect();
    let gc = GComplex::new(y, Arc::new(cyclic(2)), vec![(0..5).collect(), flip]).expect("reflection");
    (gc, 2)
}

/// The hexagon with `Z/3` rotating it by two steps; base vertex `v0`.
pub fn hexagon_z3() -> (GComplex, usize) {
    let vs = names(6);
    let y = SimplicialComplex::new(&vs, &cycle(&vs)).expect("hexagon");
    let action = (0..3).map(|k| (0..6).map(|v| (v + 2 * k) % 6).collect()).collect();
    (GComplex::new(y, Arc::new(cyclic(3)), action).expect("rotation"), 0)
}

/// Two triangles glued at `o`; `π₁` is free on two generators.
pub fn wedge2() -> (SimplicialComplex, usize) {
    let es = [["o", "a"], ["a", "b"], ["b", "o"], ["o", "c"], ["c", "d"], ["d", "o"]];
    let es: Vec<Vec<&str>> = es.iter().map(|e| e.to_vec()).collect();
    let s = SimplicialComplex::new(&["o", "a", "b", "c", "d"], &es).expect("wedge");
    let o = s.vertex_index("o").unwrap();
    (s, o)
}

/// A square circle carrying `Z/2` on every cell with identity maps, and
/// the data attaching a `Z/2` disk along all of it with trivial twists.
pub fn z2_disk() -> (ComplexOfGroups, AttachSpec) {
    let vs = names(4);
    let k: CellComplex = SimplicialComplex::new(&vs, &cycle(&vs)).expect("square").to_cell_complex();
    let z2 = Arc::new(cyclic(2));
    let cog = ComplexOfGroups::constant(k.clone(), z2.clone()).expect("constant");
    let homs = k.cells().iter().map(|c| (c.id.clone(), GroupHom::identity(z2.clone()))).collect();
    let twists: BTreeMap<(String, String), usize> = k.face_pairs().into_iter().map(|p| (p, 0)).collect();
    let spec = AttachSpec {
        cell: NewCell {
            id: "disk".into(),
            dim: 2,
            faces: k.cells().iter().map(|c| c.id.clone()).collect(),
        },
        group: z2,
        homs,
        twists,
    };
    (cog, spec)
}

/// File name and contents of every file making up an example. `seed` is
/// required by, and only used for, `random-gcomplex`.
pub fn files(name: &str, seed: Option<u64>) -> Result<Vec<(String, String)>> {
    if seed.is_some() && name != "random-gcomplex" {
        return Err(Error::invalid(format!("example {name:?} takes no seed")));
    }
    let one = |v| Ok(vec![(format!("{name}.json"), io::render(&v))]);
    match name {
        "reflection-path" => {
            let (gc, b) = reflection_path();
            one(io::gcomplex_json(&gc, Some(b)))
        }
        "hexagon-z3" => {
            let (gc, b) = hexagon_z3();
            one(io::gcomplex_json(&gc, Some(b)))
        }
        "wedge2" => one(io::simplicial_json(&wedge2().0)),
        "z2-disk" => {
            let (cog, spec) = z2_disk();
            Ok(vec![
                ("z2-disk.cog.json".into(), io::render(&io::cog_json(&cog))),
                ("z2-disk.attach.json".into(), io::render(&io::attach_spec_json(&spec))),
            ])
        }
        "random-gcomplex" => {
            let seed = seed.ok_or_else(|| Error::invalid("random-gcomplex needs a seed"))?;
            let gc = random_gcomplex(seed);
            Ok(vec![(format!("random-gcomplex-{seed}.json"), io::render(&io::gcomplex_json(&gc, None)))])
        }
        _ => Err(Error::invalid(format!("unknown example {name:?}; known: {}", NAMES.join(", ")))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cog::attach_cell;
    use crate::config::Budgets;

    #[test]
    fn examples_load_back() {
        let b = Budgets::default();
        for name in ["reflection-path", "hexagon-z3"] {
            let (_, text) = files(name, None).unwrap().remove(0);
            let g = io::load_gcomplex(&text, &b).unwrap();
            assert!(g.gc.validate().is_ok());
            assert!(g.base_vertex.is_some());
        }
        let (_, text) = files("hexagon-z3", None).unwrap().remove(0);
        let g = io::load_gcomplex(&text, &b).unwrap().gc;
        assert_eq!(g.space().num_vertices(), 6);
        assert_eq!(g.group().order(), 3);
        assert_eq!(g.action(), hexagon_z3().0.action());
        let (_, text) = files("wedge2", None).unwrap().remove(0);
        assert_eq!(io::load_simplicial(&text).unwrap(), wedge2().0);
    }

    #[test]
    fn z2_disk_attaches() {
        let b = Budgets::default();
        let f = files("z2-disk", None).unwrap();
        let cog = io::load_cog(&f[0].1, &b).unwrap();
        let spec = io::load_attach_spec(&f[1].1, &cog, &b).unwrap();
        let out = attach_cell(&cog, &spec.cell, spec.group, &spec.homs, &spec.twists).unwrap();
        assert_eq!(out.base().len(), 9);
    }

    #[test]
    fn random_is_byte_stable_and_names_are_checked() {
        assert_eq!(files("random-gcomplex", Some(7)).unwrap(), files("random-gcomplex", Some(7)).unwrap());
        assert!(files("random-gcomplex", None).is_err());
        assert!(files("wedge2", Some(1)).is_err());
        assert!(files("torus", None).is_err());
    }
}
