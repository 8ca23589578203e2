use proptest::prelude::*;

use orbicell::complexes::EdgePath;
use orbicell::config::Budgets;
use orbicell::covering::{cover_from_subgroup, deck_group, lift_in_cover, normalizer_quotient_order};
use orbicell::examples::wedge2;
use orbicell::gaction::random::random_gcomplex;
use orbicell::gaction::{extract_cog, quotient};
use orbicell::io;
use orbicell::par::Exec;

fn perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Two permutations of up to five points, standing for `a` and `b`.
fn perm_pair() -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    (1usize..=5).prop_flat_map(|n| (perm(n), perm(n)))
}

/// Schreier generators of the stabilizer of point 0 under the right action
/// `x·a = pa[x]`, together with the orbit size (the index).
fn stabilizer_words(pa: &[usize], pb: &[usize]) -> (Vec<Vec<i32>>, usize) {
    let inv = |p: &[usize]| {
        let mut q = vec![0; p.len()];
        for (i, &x) in p.iter().enumerate() {
            q[x] = i;
        }
        q
    };
    let acts = [(1, pa.to_vec()), (-1, inv(pa)), (2, pb.to_vec()), (-2, inv(pb))];
    let mut rep: Vec<Option<Vec<i32>>> = vec![None; pa.len()];
    rep[0] = Some(Vec::new());
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        for (l, p) in &acts {
            if rep[p[x]].is_none() {
                let mut w = rep[x].clone().unwrap();
                w.push(*l);
                rep[p[x]] = Some(w);
                queue.push_back(p[x]);
            }
        }
    }
    let mut words = Vec::new();
    for x in 0..pa.len() {
        let Some(t) = &rep[x] else { continue };
        for (l, p) in &acts[..] {
            if *l < 0 {
                continue;
            }
            let mut w = t.clone();
            w.push(*l);
            w.extend(rep[p[x]].as_ref().unwrap().iter().rev().map(|&k| -k));
            words.push(w);
        }
    }
    (words, rep.iter().filter(|r| r.is_some()).count())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn extraction_is_valid_and_orbits_partition(seed in any::<u64>()) {
        let gc = random_gcomplex(seed);
        prop_assert!(gc.validate().is_ok());
        let ex = extract_cog(&gc, seed).unwrap();
        prop_assert!(ex.cog.validate().is_ok());
        let q = quotient(&gc).unwrap();
        let sizes = q.orbit_sizes(gc.group().order());
        prop_assert_eq!(sizes.iter().sum::<usize>(), gc.space().len());
    }

    #[test]
    fn action_files_round_trip(seed in any::<u64>()) {
        let gc = random_gcomplex(seed);
        let text = io::render(&io::gcomplex_json(&gc, None));
        let back = io::load_gcomplex(&text, &Budgets::default()).unwrap().gc;
        prop_assert_eq!(back.space(), gc.space());
        prop_assert_eq!(back.action(), gc.action());
        prop_assert_eq!(io::render(&io::gcomplex_json(&back, None)), text);
    }

    #[test]
    fn finite_covers_of_the_wedge((pa, pb) in perm_pair(), steps in prop::collection::vec(0usize..4, 0..10)) {
        let (w, o) = wedge2();
        let (ws, orbit) = stabilizer_words(&pa, &pb);
        let cd = cover_from_subgroup(&w, o, &ws, 5, &Budgets::default()).unwrap();
        let n = cd.index();
        prop_assert_eq!(n, orbit);
        prop_assert!(cd.validate().is_ok());
        prop_assert_eq!(cd.total.euler_characteristic(), n as i64 * w.euler_characteristic());
        prop_assert_eq!(cd.total.components().len(), 1);
        let d = deck_group(&cd, Exec::Sequential).unwrap();
        prop_assert_eq!(d.order(), normalizer_quotient_order(&cd));
        prop_assert_eq!(n % d.order(), 0);

        // a walk in the base lifts uniquely from every point of the fiber
        let adj = w.adjacency();
        let mut p = vec![o];
        for s in steps {
            let nb = &adj[*p.last().unwrap()];
            p.push(nb[s % nb.len()]);
        }
        let path = EdgePath::new(&w, p.clone()).unwrap();
        let mut ends = Vec::new();
        for x in cd.fiber(o) {
            let l = lift_in_cover(&cd, &path, x).unwrap();
            prop_assert_eq!(l.ambiguous_steps, 0);
            prop_assert!(l.path.iter().map(|&y| cd.projection[y]).eq(p.iter().copied()));
            ends.push(*l.path.last().unwrap());
        }
        ends.sort_unstable();
        ends.dedup();
        prop_assert_eq!(ends.len(), n);
    }
}
