//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! Two criteria cannot be met by a correct validator: some single-entry
//! twist mutations produce structures that satisfy every axiom. Those
//! criteria still report FAIL with the measured rate. The process exit
//! status ignores such a shortfall only when an independent check, written
//! here from the axioms, confirms that every missed mutant really is a valid
//! complex of groups; any other failure fails the run.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orbicell::cog::{are_equivalent, attach_cell, ComplexOfGroups, Equivalence};
use orbicell::complexes::{EdgePath, SimplicialComplex};
use orbicell::config::Budgets;
use orbicell::covering::{
    cover_from_subgroup, deck_group, index_two_subgroups, lift_edge_path, lift_in_cover, normalizer_quotient_order,
    CoverData,
};
use orbicell::examples::{hexagon_z3, reflection_path, wedge2, z2_disk};
use orbicell::gaction::random::random_gcomplex;
use orbicell::gaction::{development_matches_star, extract_cog, quotient, GComplex};
use orbicell::groups::Subgroup;
use orbicell::homotopy::fp::{self, abelian_map, parse_word};
use orbicell::homotopy::{guided_pi1, sequence_check_all, Verdict};
use orbicell::par::{self, Exec};
use orbicell::Error;

const INSTANCES: u64 = 200;
const GAUGE_BUDGET: u64 = 1_000_000;

struct Verdict9 {
    pass: bool,
    /// The failure is the known shortfall, confirmed by the axiom check.
    confirmed_shortfall: bool,
    detail: String,
}

impl Verdict9 {
    fn new(pass: bool, detail: String) -> Self {
        Verdict9 {
            pass,
            confirmed_shortfall: false,
            detail,
        }
    }
}

fn instances() -> Vec<GComplex> {
    (0..INSTANCES).map(random_gcomplex).collect()
}

/// Compatibility and cocycle identities checked straight from the group
/// tables: `g·ψ_ab(x)·g⁻¹ = ψ_a(ψ_b(x))` and
/// `ψ_a(g_{b,c})·g_{a,bc} = g_{a,b}·g_{ab,c}`.
fn satisfies_axioms(c: &ComplexOfGroups) -> bool {
    let base = c.base();
    let injective = c.homs().values().all(|h| h.images().iter().collect::<BTreeSet<_>>().len() == h.images().len());
    let compatible = base.composable_pairs().into_iter().all(|(a, b)| {
        let ab = a.compose(b).unwrap();
        let t = c.group(a.terminal);
        let g = c.twist(a, b);
        c.group(b.initial).elements().all(|x| {
            let lhs = t.mul(t.mul(g, c.hom(ab).images()[x]), t.inv(g));
            lhs == c.hom(a).images()[c.hom(b).images()[x]]
        })
    });
    let cocycle = base.composable_triples().into_iter().all(|(a, b, cc)| {
        let t = c.group(a.terminal);
        let (ab, bc) = (a.compose(b).unwrap(), b.compose(cc).unwrap());
        t.mul(c.hom(a).images()[c.twist(b, cc)], c.twist(a, bc)) == t.mul(c.twist(a, b), c.twist(ab, cc))
    });
    injective && compatible && cocycle
}

fn ac1(inst: &[GComplex]) -> Verdict9 {
    let shape_ok = inst.iter().all(|gc| {
        [2, 3, 4, 6, 8, 12].contains(&gc.group().order())
            && gc.space().len() <= 40
            && gc.space().dim().is_some_and(|d| d <= 2)
            && gc.validate().is_ok()
    });
    let per: Vec<(bool, usize, usize, bool)> = par::map(Exec::default(), inst, |gc| {
        let Ok(ex) = extract_cog(gc, 0) else {
            return (false, 0, 0, true);
        };
        let valid = ex.cog.validate().is_ok() && satisfies_axioms(&ex.cog);
        let mut rng = ChaCha8Rng::seed_from_u64(gc.space().len() as u64 * 7919 + gc.group().order() as u64);
        let (mut trials, mut caught, mut misses_valid) = (0, 0, true);
        for (&pair, &x) in ex.cog.twists() {
            let n = ex.cog.group(pair.0.terminal).order();
            if n < 2 {
                continue;
            }
            let y = (x + rng.gen_range(1..n)) % n;
            let m = ex.cog.with_twist(pair, y).unwrap();
            trials += 1;
            if !m.validate().is_ok() {
                caught += 1;
            } else {
                misses_valid &= satisfies_axioms(&m);
            }
        }
        (valid, trials, caught, misses_valid)
    });
    let bad = per.iter().filter(|p| !p.0).count();
    let trials: usize = per.iter().map(|p| p.1).sum();
    let caught: usize = per.iter().map(|p| p.2).sum();
    let misses_valid = per.iter().all(|p| p.3);
    let rate = if trials == 0 { 1.0 } else { caught as f64 / trials as f64 };
    let base_ok = shape_ok && bad == 0;
    let mut v = Verdict9::new(
        base_ok && rate >= 0.99,
        format!(
            "{} instances, {bad} extraction failures; mutations caught {caught}/{trials} ({:.1}%), every missed mutant satisfies the axioms: {misses_valid}",
            inst.len(),
            rate * 100.0
        ),
    );
    v.confirmed_shortfall = base_ok && misses_valid;
    v
}

fn equivalent_verified(c1: &ComplexOfGroups, c2: &ComplexOfGroups) -> Result<bool, &'static str> {
    match are_equivalent(c1, c2, GAUGE_BUDGET) {
        Ok(Equivalence::Equivalent(w)) => Ok(c1.apply_gauge(&w).is_ok_and(|c| &c == c2)),
        Ok(Equivalence::Inequivalent) => Ok(false),
        Ok(Equivalence::Exhausted) => Err("exhausted"),
        Err(_) => Ok(false),
    }
}

fn ac2(inst: &[GComplex]) -> Verdict9 {
    let picked: Vec<&GComplex> = inst
        .iter()
        .filter(|gc| extract_cog(gc, 0).is_ok_and(|e| e.cog.gauge_space_size() <= 1_000_000))
        .take(50)
        .collect();
    let res: Vec<(Result<bool, &str>, bool)> = par::map(Exec::default(), &picked, |gc| {
        let (e0, e1) = (extract_cog(gc, 0).unwrap(), extract_cog(gc, 1).unwrap());
        (equivalent_verified(&e0.cog, &e1.cog), e0.cog != e1.cog)
    });
    let verified = res.iter().filter(|r| r.0 == Ok(true)).count();
    let exhausted = res.iter().filter(|r| r.0.is_err()).count();
    let differ = res.iter().filter(|r| r.1).count();
    Verdict9::new(
        picked.len() == 50 && verified == 50 && exhausted == 0,
        format!("{verified}/{} verified witness gauges ({differ} with differing twists), {exhausted} exhausted", picked.len()),
    )
}

fn ac3(inst: &[GComplex]) -> Verdict9 {
    let jobs: Vec<(&GComplex, usize)> = inst.iter().flat_map(|gc| [(gc, 0), (gc, 1)]).collect();
    let res: Vec<Result<bool, &str>> = par::map(Exec::default(), &jobs, |&(gc, n)| {
        let full = extract_cog(gc, 0).map_err(|_| "extract")?.cog.restrict_to_skeleton(n);
        let sk = extract_cog(&gc.skeleton(n), 0).map_err(|_| "extract")?.cog;
        equivalent_verified(&full, &sk)
    });
    let ok = res.iter().filter(|r| **r == Ok(true)).count();
    let exhausted = res.iter().filter(|r| **r == Err("exhausted")).count();
    Verdict9::new(
        ok == jobs.len(),
        format!("{ok}/{} (instance, n) pairs equivalent, {exhausted} exhausted", jobs.len()),
    )
}

fn ac4(inst: &[GComplex]) -> Verdict9 {
    let res: Vec<(usize, usize)> = par::map(Exec::default(), inst, |gc| {
        let Ok(ex) = extract_cog(gc, 0) else { return (0, 1) };
        let n = ex.quotient.quotient.len();
        let good = (0..n)
            .filter(|&c| matches!(development_matches_star(gc, &ex, c), Ok(Some(_))))
            .count();
        (n, n - good)
    });
    let cells: usize = res.iter().map(|r| r.0).sum();
    let failures: usize = res.iter().map(|r| r.1).sum();
    Verdict9::new(failures == 0, format!("{cells} quotient cells, {failures} failures"))
}

fn ac5(inst: &[GComplex]) -> Verdict9 {
    let b = Budgets::default();
    let res: Vec<(usize, usize, usize)> = par::map(Exec::default(), inst, |gc| match sequence_check_all(gc, &b, Exec::Sequential) {
        Ok(reports) => {
            let good = reports
                .iter()
                .filter(|r| {
                    r.verdict("exact_at_centralizer") == Some(Verdict::Holds)
                        && r.verdict("exact_at_pi0") == Some(Verdict::Holds)
                })
                .count();
            let failing = reports.iter().filter(|r| !r.holds()).count();
            (reports.len(), reports.len() - good, failing)
        }
        Err(_) => (0, 1, 0),
    });
    let triples: usize = res.iter().map(|r| r.0).sum();
    let bad: usize = res.iter().map(|r| r.1).sum();
    let other: usize = res.iter().map(|r| r.2).sum();

    // hexagon: the circle covers the quotient circle with degree
    // |edges of Y| / |edges of Y/Γ|
    let (hex, o) = hexagon_z3();
    let gp = guided_pi1(&hex, &Subgroup::trivial(), o).unwrap();
    let images: Vec<Vec<i32>> = (0..gp.fiber.group.num_generators()).map(|i| vec![fp::gen(i)]).collect();
    let m = abelian_map(&gp.fiber.group, &gp.presentation, &images);
    let q = quotient(&hex).unwrap();
    let degree = hex.space().edges().len() / q.quotient.cells().iter().filter(|c| c.dim == 1).count();
    let hex_ok = m.source.rank == 1
        && m.source.torsion.is_empty()
        && m.target.rank == 1
        && m.target.torsion.is_empty()
        && m.injective
        && m.index == Some(degree as i64)
        && degree == 3;

    // reflection: Y^H is one point, so the order is |C(H)_ô|
    let (refl, c) = reflection_path();
    let z2 = Subgroup::whole(refl.group());
    let gp = guided_pi1(&refl, &z2, c).unwrap();
    let order = gp.order(b.coset_steps).unwrap();
    let refl_ok = order == 2 && order == gp.reachable.len() && gp.fiber.group.num_generators() == 0;

    Verdict9::new(
        bad == 0 && hex_ok && refl_ok,
        format!(
            "{triples} (instance, subgroup, basepoint) triples, {bad} failing (i)/(ii), {other} failing any junction; hexagon index {:?} (expected {degree}); reflection order {order}",
            m.index
        ),
    )
}

/// Deck order by trying every fiber-preserving vertex bijection.
fn brute_force_deck_order(cd: &CoverData) -> usize {
    let t = &cd.total;
    let fibers: Vec<Vec<usize>> = (0..cd.base.num_vertices()).map(|v| cd.fiber(v)).collect();
    let perms: Vec<Vec<Vec<usize>>> = fibers.iter().map(|f| permutations(f)).collect();
    let mut count = 0;
    let mut choice = vec![0usize; fibers.len()];
    loop {
        let mut f = vec![0usize; t.num_vertices()];
        for (v, fib) in fibers.iter().enumerate() {
            for (i, &x) in fib.iter().enumerate() {
                f[x] = perms[v][choice[v]][i];
            }
        }
        if t.simplices().iter().all(|s| {
            let mut img: Vec<usize> = s.iter().map(|&x| f[x]).collect();
            img.sort_unstable();
            t.contains(&img)
        }) {
            count += 1;
        }
        let mut k = 0;
        while k < choice.len() {
            choice[k] += 1;
            if choice[k] < perms[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
        if k == choice.len() {
            return count;
        }
    }
}

fn permutations(xs: &[usize]) -> Vec<Vec<usize>> {
    if xs.len() <= 1 {
        return vec![xs.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn words(n: usize, ws: &[&str]) -> Vec<Vec<i32>> {
    ws.iter().map(|w| parse_word(w, n).unwrap()).collect()
}

fn non_normal_words() -> Vec<Vec<i32>> {
    words(2, &["a", "baBB", "bbaB", "bbb"])
}

fn ac6() -> Verdict9 {
    let b = Budgets::default();
    let mut notes = Vec::new();
    let (w, o) = wedge2();
    let mut ok = true;
    for h in index_two_subgroups(2) {
        let cd = cover_from_subgroup(&w, o, &h, 2, &b).unwrap();
        let d = deck_group(&cd, Exec::default()).unwrap();
        ok &= cd.index() == 2
            && cd.total.euler_characteristic() == 2 * w.euler_characteristic()
            && (0..w.num_vertices()).all(|v| cd.fiber(v).len() == 2)
            && cd.total.components().len() == 1
            && d.order() == 2
            && brute_force_deck_order(&cd) == 2;
    }
    notes.push(format!("wedge2 index-2 covers ok: {ok}"));

    let (hex, v0) = hexagon_z3();
    let cd = cover_from_subgroup(hex.space(), v0, &words(1, &["aaa"]), 3, &b).unwrap();
    let d = deck_group(&cd, Exec::default()).unwrap();
    let circle = cd.total.components().len() == 1 && cd.total.adjacency().iter().all(|a| a.len() == 2);
    let hex_ok = cd.index() == 3 && circle && d.order() == 3 && brute_force_deck_order(&cd) == 3;
    notes.push(format!("hexagon <a^3>: index {}, deck {}", cd.index(), d.order()));

    let cd = cover_from_subgroup(&w, o, &non_normal_words(), 3, &b).unwrap();
    let seq = deck_group(&cd, Exec::Sequential).unwrap();
    let parl = deck_group(&cd, Exec::Parallel).unwrap();
    let nq = normalizer_quotient_order(&cd);
    let brute = brute_force_deck_order(&cd);
    let nn_ok = cd.index() == 3 && seq == parl && seq.order() == nq && nq == brute && nq < 3;
    notes.push(format!("non-normal index 3: |Deck| {}, |N(H)/H| {nq}, brute force {brute}", seq.order()));
    Verdict9::new(ok && hex_ok && nn_ok, notes.join("; "))
}

/// Vertex paths with at most `max` steps starting anywhere.
fn vertex_paths(s: &SimplicialComplex, max: usize) -> Vec<Vec<usize>> {
    let adj = s.adjacency();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..s.num_vertices()).map(|v| vec![v]).collect();
    while let Some(p) = stack.pop() {
        if p.len() <= max {
            for &n in &adj[*p.last().unwrap()] {
                let mut q = p.clone();
                q.push(n);
                stack.push(q);
            }
        }
        out.push(p);
    }
    out.sort();
    out
}

/// Number of vertex sequences upstairs over `path` starting at `x`.
fn count_lifts(total: &SimplicialComplex, proj: &[usize], path: &[usize], x: usize) -> usize {
    if proj[x] != path[0] {
        return 0;
    }
    if path.len() == 1 {
        return 1;
    }
    total.adjacency()[x]
        .iter()
        .filter(|&&y| proj[y] == path[1])
        .map(|&y| count_lifts(total, proj, &path[1..], y))
        .sum()
}

fn ac7() -> Verdict9 {
    let b = Budgets::default();
    let (w, o) = wedge2();
    let (hex, v0) = hexagon_z3();
    let mut covers: Vec<CoverData> = index_two_subgroups(2)
        .iter()
        .map(|h| cover_from_subgroup(&w, o, h, 2, &b).unwrap())
        .collect();
    covers.push(cover_from_subgroup(&w, o, &non_normal_words(), 3, &b).unwrap());
    covers.push(cover_from_subgroup(hex.space(), v0, &words(1, &["aaa"]), 3, &b).unwrap());

    let (mut lifts, mut failures, mut ambiguity) = (0usize, 0usize, 0usize);
    for cd in &covers {
        let paths = vertex_paths(&cd.base, 8);
        let res: Vec<(usize, usize, usize)> = par::map(Exec::default(), &paths, |p| {
            let path = EdgePath::new(&cd.base, p.clone()).unwrap();
            let (mut n, mut bad, mut amb) = (0, 0, 0);
            for x in cd.fiber(p[0]) {
                n += 1;
                match lift_in_cover(cd, &path, x) {
                    Ok(l) => {
                        amb += l.ambiguous_steps;
                        let projects = l.path.iter().map(|&y| cd.projection[y]).eq(p.iter().copied());
                        let is_path = EdgePath::new(&cd.total, l.path.clone()).is_ok();
                        if !projects || !is_path || count_lifts(&cd.total, &cd.projection, p, x) != 1 {
                            bad += 1;
                        }
                    }
                    Err(_) => bad += 1,
                }
            }
            (n, bad, amb)
        });
        for r in res {
            lifts += r.0;
            failures += r.1;
            ambiguity += r.2;
        }
    }

    // quotient paths of the hexagon action, lifted through the orbit map
    let q = quotient(&hex).unwrap();
    let k = &q.quotient;
    let y = hex.space();
    let vertex_orbit = |v: usize| q.orbit_of[y.simplex_index(&[v]).unwrap()];
    let mut qpaths: Vec<Vec<usize>> = (0..k.len()).filter(|&c| k.dim_of(c) == 0).map(|c| vec![c]).collect();
    let mut frontier = qpaths.clone();
    for _ in 0..8 {
        let mut next = Vec::new();
        for p in &frontier {
            let last = *p.last().unwrap();
            for &e in k.cofaces(last) {
                for &u in k.faces(e) {
                    if u != last || k.faces(e).len() == 1 {
                        let mut p2 = p.clone();
                        p2.extend([e, u]);
                        next.push(p2);
                    }
                }
            }
        }
        qpaths.extend(next.iter().cloned());
        frontier = next;
    }
    for p in &qpaths {
        for x in (0..y.num_vertices()).filter(|&x| vertex_orbit(x) == p[0]) {
            lifts += 1;
            match lift_edge_path(&hex, &q, p, x) {
                Ok(l) => {
                    ambiguity += l.ambiguous_steps;
                    let over = l.path.windows(2).zip(p[1..].chunks(2)).all(|(st, ev)| {
                        let mut e = vec![st[0], st[1]];
                        e.sort_unstable();
                        y.simplex_index(&e).is_some_and(|i| q.orbit_of[i] == ev[0]) && vertex_orbit(st[1]) == ev[1]
                    });
                    // every upstairs sequence over the cell path, counted directly
                    let mut ends = vec![x];
                    for ev in p[1..].chunks(2) {
                        let mut nxt = Vec::new();
                        for &a in &ends {
                            for &c in &y.adjacency()[a] {
                                let mut e = vec![a, c];
                                e.sort_unstable();
                                if q.orbit_of[y.simplex_index(&e).unwrap()] == ev[0] && vertex_orbit(c) == ev[1] {
                                    nxt.push(c);
                                }
                            }
                        }
                        ends = nxt;
                    }
                    if !over || ends.len() != 1 {
                        failures += 1;
                    }
                }
                Err(_) => failures += 1,
            }
        }
    }
    Verdict9::new(
        failures == 0 && ambiguity == 0,
        format!("{lifts} (path, start) lifts over {} covers and the hexagon quotient, {failures} failures, {ambiguity} ambiguity events", covers.len()),
    )
}

fn ac8() -> Verdict9 {
    let (cog, spec) = z2_disk();
    let accepted = attach_cell(&cog, &spec.cell, spec.group.clone(), &spec.homs, &spec.twists);
    let accepts = accepted.is_ok();
    let keys: Vec<(String, String)> = spec.twists.keys().cloned().collect();
    let n = spec.group.order();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut rejected, mut misses_valid) = (0, true);
    let mut distinct = BTreeSet::new();
    for _ in 0..50 {
        let key = &keys[rng.gen_range(0..keys.len())];
        let mut twists = spec.twists.clone();
        let old = twists[key];
        let new = (old + rng.gen_range(1..n)) % n;
        twists.insert(key.clone(), new);
        distinct.insert((key.clone(), new));
        match attach_cell(&cog, &spec.cell, spec.group.clone(), &spec.homs, &twists) {
            Err(Error::ValidationFailed(v)) if v.cells.len() >= 3 => rejected += 1,
            Ok(c) => misses_valid &= satisfies_axioms(&c),
            Err(_) => misses_valid = false,
        }
    }
    let mut v = Verdict9::new(
        accepts && rejected == 50,
        format!(
            "original accepted: {accepts}; {rejected}/50 corruptions rejected ({} distinct), every accepted corruption satisfies the axioms: {misses_valid}",
            distinct.len()
        ),
    );
    v.confirmed_shortfall = accepts && misses_valid;
    v
}

fn run_cli(args: &[&str]) -> (Vec<u8>, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_orbicell"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.stdout, out.status.code())
}

fn ac9() -> Verdict9 {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let p = |f: &str| d.join(f).to_string_lossy().into_owned();
    let gen_twice = |name: &[&str]| {
        let (a, b) = (d.join("first"), d.join("second"));
        let mut args = vec!["gen-examples", "--json"];
        args.extend_from_slice(name);
        let r1 = run_cli(&[args.as_slice(), &["--out", a.to_str().unwrap()]].concat());
        let r2 = run_cli(&[args.as_slice(), &["--out", b.to_str().unwrap()]].concat());
        let same_files = std::fs::read_dir(&a).unwrap().all(|e| {
            let f = e.unwrap().file_name();
            std::fs::read(a.join(&f)).ok() == std::fs::read(b.join(&f)).ok()
        });
        r1 == r2 && r1.1 == Some(0) && same_files
    };
    let mut gen_ok = true;
    for name in [&["reflection-path"][..], &["hexagon-z3"], &["wedge2"], &["z2-disk"], &["random-gcomplex", "7"]] {
        gen_ok &= gen_twice(name);
        let mut args = vec!["gen-examples"];
        args.extend_from_slice(name);
        run_cli(&[args.as_slice(), &["--out", d.to_str().unwrap()]].concat());
    }
    let cover = run_cli(&["cover", "--json", &p("wedge2.json"), "--base", "o", "--words", "aa,b,aBA", "--max-index", "2"]).0;
    std::fs::write(d.join("cover.json"), cover).unwrap();

    let (refl, hexf, wedge, random) = (p("reflection-path.json"), p("hexagon-z3.json"), p("wedge2.json"), p("random-gcomplex-7.json"));
    let (cog, spec, coverf) = (p("z2-disk.cog.json"), p("z2-disk.attach.json"), p("cover.json"));
    let runs: Vec<Vec<&str>> = vec![
        vec!["validate", &hexf],
        vec!["validate", &cog],
        vec!["validate", &coverf],
        vec!["equiv", &cog, &cog, "--budget", "1000"],
        vec!["skeleton", &cog, "-n", "0"],
        vec!["attach", &cog, "--spec", &spec],
        vec!["extract", &random, "--seed", "1"],
        vec!["quotient", &random],
        vec!["fixed", &refl, "--subgroup", "1"],
        vec!["develop", &refl, "--cell", "v2"],
        vec!["pi1", &wedge, "--base", "o"],
        vec!["guided-pi1", &hexf],
        vec!["seqcheck", &refl, "--subgroup", "1"],
        vec!["seqcheck", &random, "--all-subgroups"],
        vec!["pi0g", &refl, "--group", "Z2"],
        vec!["cover", &hexf, "--base", "v0", "--words", "aaa", "--max-index", "3"],
        vec!["deck", &coverf],
        vec!["deck", &hexf],
        vec!["lift", &coverf, "--path", "o,a,b,o", "--start", "o.0"],
        vec!["lift", &hexf, "--path", "v0,v0+v1,v1", "--start", "v2"],
        vec!["bogus-subcommand"],
    ];
    let mut differing = Vec::new();
    let mut unversioned = Vec::new();
    for args in &runs {
        let mut a = args.clone();
        a.push("--json");
        let (r1, r2) = (run_cli(&a), run_cli(&a));
        if r1 != r2 {
            differing.push(args[0]);
        }
        let schema = serde_json::from_slice::<serde_json::Value>(&r1.0)
            .ok()
            .and_then(|v| v.get("schema").cloned());
        if args[0] != "bogus-subcommand" && schema != Some(serde_json::json!("orbicell/1")) {
            unversioned.push(args[0]);
        }
    }
    let commands: BTreeSet<&str> = runs.iter().map(|r| r[0]).collect();
    Verdict9::new(
        gen_ok && differing.is_empty() && unversioned.is_empty(),
        format!(
            "{} runs over {} subcommands plus gen-examples byte-stable: {gen_ok}; differing: {differing:?}; missing schema: {unversioned:?}",
            runs.len(),
            commands.len() - 1
        ),
    )
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict9 + 'a>);

fn main() {
    let inst = instances();
    let criteria: Vec<Criterion> = vec![
        ("AC1 cocycle soundness", Box::new(|| ac1(&inst))),
        ("AC2 choice independence", Box::new(|| ac2(&inst))),
        ("AC3 skeleton coherence", Box::new(|| ac3(&inst))),
        ("AC4 local development round trip", Box::new(|| ac4(&inst))),
        ("AC5 exact sequence", Box::new(|| ac5(&inst))),
        ("AC6 covering arithmetic", Box::new(ac6)),
        ("AC7 path lifting", Box::new(ac7)),
        ("AC8 attachment validation", Box::new(ac8)),
        ("AC9 determinism", Box::new(ac9)),
    ];
    let mut hard_failure = false;
    for (name, f) in &criteria {
        let t = Instant::now();
        let v = f();
        let tag = if v.pass { "PASS" } else { "FAIL" };
        println!("{tag} {name}: {} [{:.1}s]", v.detail, t.elapsed().as_secs_f64());
        if !v.pass && v.confirmed_shortfall {
            println!("     shortfall confirmed: the missed mutants are valid complexes of groups");
        }
        hard_failure |= !v.pass && !v.confirmed_shortfall;
    }
    if hard_failure {
        std::process::exit(1);
    }
}
