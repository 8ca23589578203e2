//! JSON formats. Every loader validates structure and reports problems as
//! [`Error::InvalidInput`]; writers emit keys in a fixed order so that equal
//! values serialize to identical bytes.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::cog::{arrow_name, pair_name, ComplexOfGroups, NewCell, Pair};
use crate::complexes::{Arrow, Cell, CellComplex, SimplicialComplex};
use crate::covering::{cover_from_subgroup, CoverData};
use crate::config::Budgets;
use crate::gaction::GComplex;
use crate::groups::{library, FiniteGroup, GroupHom};
use crate::homotopy::fp;
use crate::{Error, Result};

pub const SCHEMA: &str = "orbicell/1";

fn parse<'a, T: Deserialize<'a>>(text: &'a str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::invalid(format!("{what}: {e}")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CellJson {
    id: String,
    dim: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    cells: Vec<CellJson>,
    #[serde(default)]
    faces: Vec<(String, String)>,
}

/// A loaded cell complex and whether its face relation had to be closed.
pub struct LoadedComplex {
    pub complex: CellComplex,
    pub closure_needed: bool,
}

fn complex_from(c: ComplexJson) -> Result<LoadedComplex> {
    let cells = c.cells.into_iter().map(|c| Cell::new(c.id, c.dim)).collect();
    let raw = CellComplex::new(cells, &c.faces)?;
    let complex = raw.closure();
    Ok(LoadedComplex {
        closure_needed: complex != raw,
        complex,
    })
}

pub fn load_complex(text: &str) -> Result<LoadedComplex> {
    complex_from(parse(text, "cell complex")?)
}

pub fn complex_json(c: &CellComplex) -> Value {
    json!({
        "cells": c.cells().iter().map(|x| json!({"id": x.id, "dim": x.dim})).collect::<Vec<_>>(),
        "faces": c.face_pairs().into_iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SimplicialJson {
    vertices: Vec<String>,
    #[serde(default)]
    simplices: Vec<Vec<String>>,
}

fn simplicial_from(s: SimplicialJson) -> Result<SimplicialComplex> {
    SimplicialComplex::new(&s.vertices, &s.simplices)
}

pub fn load_simplicial(text: &str) -> Result<SimplicialComplex> {
    simplicial_from(parse(text, "simplicial complex")?)
}

/// Vertices plus facets; loading closes under subsets.
pub fn simplicial_json(s: &SimplicialComplex) -> Value {
    json!({
        "vertices": s.vertices(),
        "simplices": s
            .facets()
            .iter()
            .filter(|f| f.len() > 1)
            .map(|f| f.iter().map(|&v| s.vertex_name(v)).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GroupJson {
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default)]
        labels: Option<Vec<String>>,
    },
    Perms {
        perm_gens: Vec<Vec<usize>>,
        degree: usize,
    },
    Name(String),
}

fn group_from(g: GroupJson, budgets: &Budgets) -> Result<FiniteGroup> {
    let g = match g {
        GroupJson::Table { order, table, labels } => {
            if table.len() != order {
                return Err(Error::invalid(format!("group table has {} rows, order {order}", table.len())));
            }
            FiniteGroup::from_table(table, labels)?
        }
        GroupJson::Perms { perm_gens, degree } => FiniteGroup::from_permutations(&perm_gens, degree)?,
        GroupJson::Name(n) => library::by_name(&n)?,
    };
    if g.order() > budgets.max_group_order {
        return Err(Error::ResourceLimit(format!(
            "group order {} exceeds bound {}",
            g.order(),
            budgets.max_group_order
        )));
    }
    Ok(g)
}

pub fn load_group(text: &str, budgets: &Budgets) -> Result<FiniteGroup> {
    group_from(parse(text, "group")?, budgets)
}

pub fn group_json(g: &FiniteGroup) -> Value {
    let mut m = Map::new();
    m.insert("order".into(), json!(g.order()));
    m.insert("table".into(), json!(g.table_rows()));
    if let Some(l) = g.labels() {
        m.insert("labels".into(), json!(l));
    }
    Value::Object(m)
}

/// Homomorphism from a list of generator images or of all element images.
fn hom_from(src: &Arc<FiniteGroup>, dst: &Arc<FiniteGroup>, images: Vec<usize>) -> Result<GroupHom> {
    if images.len() == src.order() && src.generators().len() != src.order() {
        GroupHom::new(src.clone(), dst.clone(), images)
    } else {
        GroupHom::from_generator_images(src.clone(), dst.clone(), &images)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CogJson {
    complex: ComplexJson,
    groups: BTreeMap<String, GroupJson>,
    #[serde(default)]
    homs: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    twists: BTreeMap<String, usize>,
}

fn split_key(key: &str, parts: usize) -> Result<Vec<&str>> {
    let v: Vec<&str> = key.split('>').collect();
    if v.len() != parts {
        return Err(Error::invalid(format!("key {key:?} should have {parts} '>'-separated ids")));
    }
    Ok(v)
}

pub fn load_cog(text: &str, budgets: &Budgets) -> Result<ComplexOfGroups> {
    let c: CogJson = parse(text, "complex of groups")?;
    let base = complex_from(c.complex)?.complex;
    let mut groups: Vec<Option<Arc<FiniteGroup>>> = vec![None; base.len()];
    for (id, g) in c.groups {
        let i = base.require(&id)?;
        groups[i] = Some(Arc::new(group_from(g, budgets)?));
    }
    let groups: Vec<Arc<FiniteGroup>> = groups
        .into_iter()
        .enumerate()
        .map(|(i, g)| g.ok_or_else(|| Error::invalid(format!("no group on cell {}", base.id(i)))))
        .collect::<Result<_>>()?;
    let mut homs = BTreeMap::new();
    for (key, images) in c.homs {
        let k = split_key(&key, 2)?;
        let a = Arrow::new(base.require(k[0])?, base.require(k[1])?);
        if !base.is_face(a.initial, a.terminal) {
            return Err(Error::invalid(format!("{key:?} is not an arrow")));
        }
        homs.insert(a, hom_from(&groups[a.initial], &groups[a.terminal], images)?);
    }
    let mut twists: BTreeMap<Pair, usize> = BTreeMap::new();
    for (key, x) in c.twists {
        let k = split_key(&key, 3)?;
        let (big, mid, small) = (base.require(k[0])?, base.require(k[1])?, base.require(k[2])?);
        twists.insert((Arrow::new(mid, small), Arrow::new(big, mid)), x);
    }
    ComplexOfGroups::with_default_twists(base, groups, homs, twists)
}

/// Writes every group as a table, every hom as full image arrays and every
/// twist (identities included).
pub fn cog_json(c: &ComplexOfGroups) -> Value {
    let base = c.base();
    let mut groups = Map::new();
    for i in 0..base.len() {
        groups.insert(base.id(i).to_string(), group_json(c.group(i)));
    }
    let mut homs = Map::new();
    for (&a, h) in c.homs() {
        homs.insert(arrow_name(base, a), json!(h.images()));
    }
    let mut twists = Map::new();
    for (&p, &x) in c.twists() {
        twists.insert(pair_name(base, p), json!(x));
    }
    json!({
        "complex": complex_json(base),
        "groups": groups,
        "homs": homs,
        "twists": twists,
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GComplexJson {
    space: SimplicialJson,
    group: GroupJson,
    #[serde(default)]
    action: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    base_vertex: Option<String>,
}

/// A loaded action together with its optional marked base vertex.
pub struct LoadedGComplex {
    pub gc: GComplex,
    pub base_vertex: Option<usize>,
}

/// Elements absent from `action` must be the identity; vertices absent from
/// an element's map are fixed by it.
pub fn load_gcomplex(text: &str, budgets: &Budgets) -> Result<LoadedGComplex> {
    let g: GComplexJson = parse(text, "group action")?;
    let space = simplicial_from(g.space)?;
    let group = Arc::new(group_from(g.group, budgets)?);
    let n = space.num_vertices();
    let mut action: Vec<Option<Vec<usize>>> = vec![None; group.order()];
    action[0] = Some((0..n).collect());
    for (key, map) in g.action {
        let x: usize = key
            .parse()
            .ok()
            .filter(|&x| x < group.order())
            .ok_or_else(|| Error::invalid(format!("action key {key:?} is not a group element index")))?;
        let mut perm: Vec<usize> = (0..n).collect();
        for (v, w) in map {
            perm[space.require_vertex(&v)?] = space.require_vertex(&w)?;
        }
        action[x] = Some(perm);
    }
    let action: Vec<Vec<usize>> = action
        .into_iter()
        .enumerate()
        .map(|(x, p)| p.ok_or_else(|| Error::invalid(format!("no action given for element {x}"))))
        .collect::<Result<_>>()?;
    let base_vertex = g.base_vertex.map(|v| space.require_vertex(&v)).transpose()?;
    Ok(LoadedGComplex {
        gc: GComplex::new(space, group, action)?,
        base_vertex,
    })
}

/// Non-identity elements only, each listing the vertices it moves.
pub fn gcomplex_json(gc: &GComplex, base_vertex: Option<usize>) -> Value {
    let y = gc.space();
    let mut action = Map::new();
    for x in gc.group().elements().skip(1) {
        let mut m = Map::new();
        for v in 0..y.num_vertices() {
            let w = gc.act(x, v);
            if w != v {
                m.insert(y.vertex_name(v).to_string(), json!(y.vertex_name(w)));
            }
        }
        action.insert(x.to_string(), Value::Object(m));
    }
    let mut out = Map::new();
    out.insert("space".into(), simplicial_json(y));
    out.insert("group".into(), group_json(gc.group()));
    out.insert("action".into(), Value::Object(action));
    if let Some(b) = base_vertex {
        out.insert("base_vertex".into(), json!(y.vertex_name(b)));
    }
    Value::Object(out)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AttachJson {
    id: String,
    dim: usize,
    faces: Vec<String>,
    group: GroupJson,
    #[serde(default)]
    homs: BTreeMap<String, Vec<usize>>,
    #[serde(default)]
    twists: BTreeMap<String, usize>,
}

/// Data for [`crate::cog::attach_cell`].
pub struct AttachSpec {
    pub cell: NewCell,
    pub group: Arc<FiniteGroup>,
    pub homs: BTreeMap<String, GroupHom>,
    pub twists: BTreeMap<(String, String), usize>,
}

/// `{"id","dim","faces","group","homs":{"e>σ":[..]},"twists":{"e>σ>τ":x}}`.
/// Hom targets are looked up in `c`; nothing is defaulted.
pub fn load_attach_spec(text: &str, c: &ComplexOfGroups, budgets: &Budgets) -> Result<AttachSpec> {
    let a: AttachJson = parse(text, "attach spec")?;
    let group = Arc::new(group_from(a.group, budgets)?);
    let base = c.base();
    let mut homs = BTreeMap::new();
    for (key, images) in a.homs {
        let k = split_key(&key, 2)?;
        if k[0] != a.id {
            return Err(Error::invalid(format!("hom {key:?} does not start at the new cell")));
        }
        let target = c.group(base.require(k[1])?);
        homs.insert(k[1].to_string(), hom_from(&group, target, images)?);
    }
    let mut twists = BTreeMap::new();
    for (key, x) in a.twists {
        let k = split_key(&key, 3)?;
        if k[0] != a.id {
            return Err(Error::invalid(format!("twist {key:?} does not start at the new cell")));
        }
        twists.insert((k[1].to_string(), k[2].to_string()), x);
    }
    Ok(AttachSpec {
        cell: NewCell {
            id: a.id,
            dim: a.dim,
            faces: a.faces,
        },
        group,
        homs,
        twists,
    })
}

pub fn attach_spec_json(s: &AttachSpec) -> Value {
    let id = &s.cell.id;
    let homs: Map<String, Value> = s.homs.iter().map(|(k, h)| (format!("{id}>{k}"), json!(h.images()))).collect();
    let twists: Map<String, Value> = s.twists.iter().map(|((a, b), x)| (format!("{id}>{a}>{b}"), json!(x))).collect();
    json!({
        "id": id,
        "dim": s.cell.dim,
        "faces": s.cell.faces,
        "group": group_json(&s.group),
        "homs": homs,
        "twists": twists,
    })
}

/// The cover with enough data to rebuild and re-check it: base, words,
/// coset table, total complex and projection.
pub fn cover_json(cd: &CoverData) -> Value {
    let t = &cd.total;
    let projection: Map<String, Value> = (0..t.num_vertices())
        .map(|x| (t.vertex_name(x).to_string(), json!(cd.base.vertex_name(cd.projection[x]))))
        .collect();
    json!({
        "base": simplicial_json(&cd.base),
        "base_vertex": cd.base.vertex_name(cd.base_vertex),
        "generators": cd.presentation.generators(),
        "words": cd.subgroup.iter().map(|w| word_string(w)).collect::<Vec<_>>(),
        "index": cd.index(),
        "coset_table": cd.coset_table.table,
        "total": simplicial_json(t),
        "projection": projection,
    })
}

/// Letter syntax when the alphabet allows it, else signed indices.
pub fn word_string(w: &[i32]) -> String {
    if w.iter().all(|&l| fp::letter_index(l) < 26) {
        fp::format_word(w)
    } else {
        w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
    }
}

pub fn parse_words(s: &str, num_gens: usize) -> Result<Vec<fp::Word>> {
    s.split(',')
        .map(str::trim)
        .filter(|w| !w.is_empty())
        .map(|w| {
            if w.chars().all(|c| c.is_ascii_alphabetic()) {
                fp::parse_word(w, num_gens)
            } else {
                w.split_whitespace()
                    .map(|t| {
                        t.parse::<i32>()
                            .ok()
                            .filter(|&l| l != 0 && fp::letter_index(l) < num_gens)
                            .ok_or_else(|| Error::invalid(format!("bad letter {t:?}")))
                    })
                    .collect()
            }
        })
        .collect()
}

#[derive(Deserialize)]
struct CoverJson {
    base: SimplicialJson,
    base_vertex: String,
    words: Vec<String>,
    index: usize,
    coset_table: Vec<Vec<usize>>,
    total: SimplicialJson,
    projection: BTreeMap<String, String>,
}

/// Rebuilds the cover from its base and words and checks it against the
/// stored table, total complex and projection.
pub fn load_cover(text: &str, budgets: &Budgets) -> Result<CoverData> {
    let c: CoverJson = parse(text, "cover")?;
    let base = simplicial_from(c.base)?;
    let v = base.require_vertex(&c.base_vertex)?;
    let ngen = crate::homotopy::pi1_presentation(&base, v)?.group.num_generators();
    let words = parse_words(&c.words.join(","), ngen)?;
    let cd = cover_from_subgroup(&base, v, &words, c.index, budgets)?;
    let total = simplicial_from(c.total)?;
    let projection_ok = c.projection.len() == total.num_vertices()
        && (0..cd.total.num_vertices()).all(|x| {
            c.projection.get(cd.total.vertex_name(x)).map(String::as_str) == Some(cd.base.vertex_name(cd.projection[x]))
        });
    if cd.coset_table.table != c.coset_table || cd.total != total || cd.index() != c.index || !projection_ok {
        return Err(Error::invalid("cover file does not match the cover its words define"));
    }
    Ok(cd)
}

/// Wraps a report body with the schema tag and command name.
pub fn envelope(command: &str, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    match body {
        Value::Object(b) => m.extend(b),
        other => {
            m.insert("result".into(), other);
        }
    }
    Value::Object(m)
}

/// Pretty-printed with a trailing newline; the byte form of every file and
/// report the crate writes.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaction::tests::{hexagon, path5};

    #[test]
    fn complex_closure_is_recorded() {
        let text = r#"{"cells":[{"id":"t","dim":2},{"id":"e","dim":1},{"id":"v","dim":0},{"id":"w","dim":0}],
            "faces":[["t","e"],["e","v"],["e","w"]]}"#;
        let l = load_complex(text).unwrap();
        assert!(l.closure_needed);
        assert!(l.complex.is_face(l.complex.require("t").unwrap(), l.complex.require("v").unwrap()));
        let again = load_complex(&complex_json(&l.complex).to_string()).unwrap();
        assert!(!again.closure_needed);
        assert_eq!(again.complex, l.complex);
    }

    #[test]
    fn group_formats() {
        let b = Budgets::default();
        let g = load_group(r#"{"perm_gens":[[1,0,2],[1,2,0]],"degree":3}"#, &b).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(load_group(&group_json(&g).to_string(), &b).unwrap(), g);
        assert_eq!(load_group(r#""Z4""#, &b).unwrap().order(), 4);
        assert!(load_group(r#"{"order":2,"table":[[0,1],[1,1]]}"#, &b).is_err());
        assert!(matches!(load_group(r#""Z60""#, &b), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn gcomplex_round_trip() {
        let b = Budgets::default();
        for gc in [path5(), hexagon()] {
            let text = gcomplex_json(&gc, Some(0)).to_string();
            let l = load_gcomplex(&text, &b).unwrap();
            assert_eq!(l.gc.action(), gc.action());
            assert_eq!(l.base_vertex, Some(0));
            assert_eq!(gcomplex_json(&l.gc, Some(0)).to_string(), text);
        }
        let missing = r#"{"space":{"vertices":["a","b"],"simplices":[]},"group":"Z2","action":{}}"#;
        assert!(load_gcomplex(missing, &b).is_err());
    }

    #[test]
    fn cog_round_trip() {
        let gc = path5().subdivide();
        let ex = crate::gaction::extract_cog(&gc, 0).unwrap();
        let text = cog_json(&ex.cog).to_string();
        let back = load_cog(&text, &Budgets::default()).unwrap();
        assert_eq!(back, ex.cog);
        assert_eq!(cog_json(&back).to_string(), text);
    }

    #[test]
    fn cover_round_trip_and_tamper() {
        let vs: Vec<String> = (0..6).map(|i| format!("v{i}")).collect();
        let es: Vec<Vec<String>> = (0..6).map(|i| vec![vs[i].clone(), vs[(i + 1) % 6].clone()]).collect();
        let s = SimplicialComplex::new(&vs, &es).unwrap();
        let b = Budgets::default();
        let cd = cover_from_subgroup(&s, 0, &[vec![1, 1, 1]], 3, &b).unwrap();
        let text = cover_json(&cd).to_string();
        assert_eq!(load_cover(&text, &b).unwrap(), cd);
        let bad = text.replacen("\"index\":3", "\"index\":2", 1);
        assert!(load_cover(&bad, &b).is_err());
    }

    #[test]
    fn word_lists() {
        assert_eq!(parse_words("aab, abA", 2).unwrap(), vec![vec![1, 1, 2], vec![1, 2, -1]]);
        assert_eq!(parse_words("", 2).unwrap(), Vec::<fp::Word>::new());
        assert_eq!(parse_words("1 -2", 2).unwrap(), vec![vec![1, -2]]);
        assert!(parse_words("c", 2).is_err());
    }
}
