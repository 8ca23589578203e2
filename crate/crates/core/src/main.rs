use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use orbicell::cog::{are_equivalent, arrow_name, attach_cell, ComplexOfGroups, Equivalence};
use orbicell::complexes::{EdgePath, SimplicialComplex};
use orbicell::config::{OutputMode, RunConfig};
use orbicell::covering::{
    canonical_cover_deck, cover_from_subgroup, deck_group, deck_sheets, lift_edge_path, lift_in_cover,
    normalizer_quotient_order, parse_quotient_path, Lift,
};
use orbicell::gaction::{development_matches_star, extract_cog, local_development, quotient, GComplex};
use orbicell::groups::{library, FiniteGroup, Subgroup};
use orbicell::homotopy::{guided_pi1, pi0, pi0_isotropy, pi1_presentation, sequence_check, sequence_check_all};
use orbicell::io::{self, LoadedGComplex};
use orbicell::par::Exec;
use orbicell::{examples, Error, Result};

#[derive(Parser)]
#[command(name = "orbicell", version, about = "Complexes of groups, group actions, guided loop groups and covers")]
struct Cli {
    /// JSON file with budgets, seed and output mode.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Emit the JSON report regardless of the configured output mode.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a cell complex, simplicial complex, group, complex of groups, action or cover file.
    Validate { file: PathBuf },
    /// Decide gauge equivalence of two complexes of groups.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        /// Search node bound (defaults to the configured gauge budget).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Restrict a complex of groups to its n-skeleton.
    Skeleton {
        file: PathBuf,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Attach a cell to a complex of groups.
    Attach {
        file: PathBuf,
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
    },
    /// The complex of groups of a global quotient.
    Extract {
        file: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Orbit complex, lifts and stabilizers of an action.
    Quotient { file: PathBuf },
    /// Fixed subcomplex of the subgroup generated by the given elements.
    Fixed {
        file: PathBuf,
        #[arg(long, default_value = "")]
        subgroup: String,
    },
    /// Local development at a cell of a complex of groups (or of an action's quotient).
    Develop {
        file: PathBuf,
        #[arg(long)]
        cell: String,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Edge-path group presentation of a simplicial complex.
    Pi1 {
        file: PathBuf,
        #[arg(long)]
        base: String,
    },
    /// Presentation of the guided loop group of an action.
    GuidedPi1 {
        file: PathBuf,
        #[arg(long, default_value = "")]
        subgroup: String,
        #[arg(long)]
        base: Option<String>,
    },
    /// Check the exact sequence of guided loop groups.
    Seqcheck {
        file: PathBuf,
        #[arg(long, conflicts_with = "all_subgroups")]
        subgroup: Option<String>,
        #[arg(long)]
        base: Option<String>,
        /// Every subgroup up to conjugacy and every fixed basepoint.
        #[arg(long)]
        all_subgroups: bool,
    },
    /// Isotropy-decorated components for a test group (file or library name).
    Pi0g {
        file: PathBuf,
        #[arg(long)]
        group: String,
    },
    /// Finite cover of a connected simplicial complex from subgroup words.
    Cover {
        file: PathBuf,
        #[arg(long)]
        base: String,
        #[arg(long, default_value = "")]
        words: String,
        #[arg(long)]
        max_index: usize,
    },
    /// Deck group of a cover file, or of the orbit map of an action.
    Deck { file: PathBuf },
    /// Lift a path of a cover's base, or of an action's quotient.
    Lift {
        file: PathBuf,
        #[arg(long)]
        path: String,
        #[arg(long)]
        start: String,
    },
    /// Write an example to disk.
    GenExamples {
        name: String,
        seed: Option<u64>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Equiv { .. } => "equiv",
            Command::Skeleton { .. } => "skeleton",
            Command::Attach { .. } => "attach",
            Command::Extract { .. } => "extract",
            Command::Quotient { .. } => "quotient",
            Command::Fixed { .. } => "fixed",
            Command::Develop { .. } => "develop",
            Command::Pi1 { .. } => "pi1",
            Command::GuidedPi1 { .. } => "guided-pi1",
            Command::Seqcheck { .. } => "seqcheck",
            Command::Pi0g { .. } => "pi0g",
            Command::Cover { .. } => "cover",
            Command::Deck { .. } => "deck",
            Command::Lift { .. } => "lift",
            Command::GenExamples { .. } => "gen-examples",
        }
    }
}

const OK: u8 = 0;
const MALFORMED: u8 = 1;
const FAILED: u8 = 2;
const EXHAUSTED: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) => MALFORMED,
        Error::ResourceLimit(_) => EXHAUSTED,
        Error::ValidationFailed(_) | Error::EmptyFixedSet | Error::InternalError(_) => FAILED,
    }
}

fn error_body(e: &Error) -> Value {
    let kind = match e {
        Error::InvalidInput(_) => "invalid_input",
        Error::ValidationFailed(_) => "validation_failed",
        Error::ResourceLimit(_) => "resource_limit",
        Error::EmptyFixedSet => "empty_fixed_set",
        Error::InternalError(_) => "internal_error",
    };
    let mut err = Map::new();
    err.insert("kind".into(), json!(kind));
    err.insert("message".into(), json!(e.to_string()));
    if let Error::ValidationFailed(v) = e {
        err.insert("violation".into(), json!(v));
    }
    json!({ "status": "error", "error": err })
}

/// A report body and the exit code it warrants.
struct Outcome {
    body: Value,
    code: u8,
}

impl Outcome {
    fn ok(body: Value) -> Self {
        Outcome { body, code: OK }
    }

    fn check(body: Value, passed: bool) -> Self {
        Outcome {
            body,
            code: if passed { OK } else { FAILED },
        }
    }
}

struct Ctx {
    cfg: RunConfig,
    exec: Exec,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { MALFORMED } else { OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let cfg = match &cli.config {
        Some(p) => read(p).and_then(|t| RunConfig::from_json(&t)),
        None => Ok(RunConfig::default()),
    };
    let command = cli.command.name();
    let (mode, result) = match cfg {
        Ok(cfg) => {
            let mode = if cli.json { OutputMode::Json } else { cfg.output };
            let ctx = Ctx {
                cfg,
                exec: Exec::default(),
            };
            (mode, run(&ctx, cli.command))
        }
        Err(e) => (if cli.json { OutputMode::Json } else { OutputMode::Human }, Err(e)),
    };
    let (body, code) = match result {
        Ok(o) => (o.body, o.code),
        Err(e) => {
            if mode == OutputMode::Human {
                eprintln!("orbicell {command}: {e}");
            }
            (error_body(&e), exit_code(&e))
        }
    };
    let report = io::envelope(command, body);
    match mode {
        OutputMode::Json => emit(&io::render(&report)),
        OutputMode::Human if report.get("error").is_none() => emit(&human(&report)),
        OutputMode::Human => {}
    }
    ExitCode::from(code)
}

/// A closed pipe downstream is not an error of ours.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

/// `key: value` per top-level entry; nested values as compact JSON.
fn human(report: &Value) -> String {
    let Value::Object(m) = report else { return String::new() };
    let mut out = String::new();
    for (k, v) in m.iter().filter(|(k, _)| k.as_str() != "schema") {
        let v = match v {
            Value::String(s) => s.clone(),
            Value::Array(_) | Value::Object(_) => serde_json::to_string(v).unwrap_or_default(),
            _ => v.to_string(),
        };
        out.push_str(&format!("{k}: {v}\n"));
    }
    out
}

fn read(p: &Path) -> Result<String> {
    std::fs::read_to_string(p).map_err(|e| Error::invalid(format!("{}: {e}", p.display())))
}

fn read_json(p: &Path) -> Result<(String, Value)> {
    let text = read(p)?;
    let v = serde_json::from_str(&text).map_err(|e| Error::invalid(format!("{}: {e}", p.display())))?;
    Ok((text, v))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Complex,
    Simplicial,
    Group,
    Cog,
    GComplex,
    Cover,
}

fn kind_of(v: &Value) -> Result<Kind> {
    let has = |k: &str| v.get(k).is_some();
    Ok(if v.is_string() || has("order") || has("perm_gens") {
        Kind::Group
    } else if has("coset_table") {
        Kind::Cover
    } else if has("space") && has("group") {
        Kind::GComplex
    } else if has("complex") && has("groups") {
        Kind::Cog
    } else if has("cells") {
        Kind::Complex
    } else if has("vertices") {
        Kind::Simplicial
    } else {
        return Err(Error::invalid("unrecognised file: expected a complex, group, complex of groups, action or cover"));
    })
}

fn load_gcomplex(ctx: &Ctx, p: &Path) -> Result<LoadedGComplex> {
    io::load_gcomplex(&read(p)?, &ctx.cfg.budgets)
}

fn load_cog(ctx: &Ctx, p: &Path) -> Result<ComplexOfGroups> {
    io::load_cog(&read(p)?, &ctx.cfg.budgets)
}

/// A simplicial complex from a simplicial file or the space of an action.
fn load_space(ctx: &Ctx, p: &Path) -> Result<SimplicialComplex> {
    let (text, v) = read_json(p)?;
    match kind_of(&v)? {
        Kind::Simplicial => io::load_simplicial(&text),
        Kind::GComplex => Ok(io::load_gcomplex(&text, &ctx.cfg.budgets)?.gc.space().clone()),
        _ => Err(Error::invalid("expected a simplicial complex or an action")),
    }
}

/// Elements given by index or label; the subgroup they generate.
fn parse_subgroup(g: &FiniteGroup, s: &str) -> Result<Subgroup> {
    let mut gens = Vec::new();
    for t in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let x = match t.parse::<usize>() {
            Ok(x) if x < g.order() => x,
            _ => g
                .elements()
                .find(|&x| g.label(x) == t)
                .ok_or_else(|| Error::invalid(format!("{t:?} is not an element")))?,
        };
        gens.push(x);
    }
    Ok(Subgroup::generated(g, &gens))
}

fn labels(g: &FiniteGroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| g.label(x)).collect()
}

fn base_of(gc: &GComplex, flag: Option<&str>, marked: Option<usize>) -> Result<usize> {
    match (flag, marked) {
        (Some(v), _) => gc.space().require_vertex(v),
        (None, Some(b)) => Ok(b),
        (None, None) => Err(Error::invalid("no --base given and the file marks no base vertex")),
    }
}

fn words_json(w: &[Vec<i32>]) -> Vec<String> {
    w.iter().map(|w| io::word_string(w)).collect()
}

fn run(ctx: &Ctx, cmd: Command) -> Result<Outcome> {
    let b = &ctx.cfg.budgets;
    match cmd {
        Command::Validate { file } => validate(ctx, &file),
        Command::Equiv { first, second, budget } => {
            let (c1, c2) = (load_cog(ctx, &first)?, load_cog(ctx, &second)?);
            match are_equivalent(&c1, &c2, budget.unwrap_or(b.gauge_nodes))? {
                Equivalence::Equivalent(w) => {
                    let verified = c1.apply_gauge(&w)? == c2;
                    let gauge: Map<String, Value> =
                        w.entries().map(|(a, x)| (arrow_name(c1.base(), a), json!(x))).collect();
                    Ok(Outcome::check(json!({"verdict": "equivalent", "witness": gauge, "verified": verified}), verified))
                }
                Equivalence::Inequivalent => Ok(Outcome {
                    body: json!({"verdict": "inequivalent"}),
                    code: FAILED,
                }),
                Equivalence::Exhausted => Ok(Outcome {
                    body: json!({"verdict": "exhausted"}),
                    code: EXHAUSTED,
                }),
            }
        }
        Command::Skeleton { file, n } => {
            let c = load_cog(ctx, &file)?.restrict_to_skeleton(n);
            Ok(Outcome::ok(json!({ "n": n, "cog": io::cog_json(&c) })))
        }
        Command::Attach { file, spec } => {
            let c = load_cog(ctx, &file)?;
            let s = io::load_attach_spec(&read(&spec)?, &c, b)?;
            let out = attach_cell(&c, &s.cell, s.group, &s.homs, &s.twists)?;
            Ok(Outcome::ok(json!({ "cell": s.cell.id, "cog": io::cog_json(&out) })))
        }
        Command::Extract { file, seed } => {
            let gc = load_gcomplex(ctx, &file)?.gc;
            let seed = seed.unwrap_or(ctx.cfg.seed);
            let ex = extract_cog(&gc, seed)?;
            let k = &ex.quotient.quotient;
            let y = gc.space();
            let lifts: Map<String, Value> = (0..k.len())
                .map(|c| (k.id(c).to_string(), json!(y.simplex_name(&y.simplices()[ex.quotient.lift[c]]))))
                .collect();
            let transporters: Map<String, Value> = ex
                .transporters
                .iter()
                .map(|(&a, &x)| (arrow_name(k, a), json!(gc.group().label(x))))
                .collect();
            let report = ex.cog.validate();
            let valid = report.is_ok();
            Ok(Outcome::check(
                json!({
                    "seed": seed,
                    "valid": valid,
                    "violations": report.violations,
                    "lifts": lifts,
                    "transporters": transporters,
                    "cog": io::cog_json(&ex.cog),
                }),
                valid,
            ))
        }
        Command::Quotient { file } => {
            let gc = load_gcomplex(ctx, &file)?.gc;
            let q = quotient(&gc)?;
            let (k, y, g) = (&q.quotient, gc.space(), gc.group());
            let sizes = q.orbit_sizes(g.order());
            let cells: Vec<Value> = (0..k.len())
                .map(|c| {
                    json!({
                        "id": k.id(c),
                        "lift": y.simplex_name(&y.simplices()[q.lift[c]]),
                        "stabilizer": labels(g, q.stabilizers[c].members()),
                        "orbit_size": sizes[c],
                    })
                })
                .collect();
            Ok(Outcome::ok(json!({ "quotient": io::complex_json(k), "cells": cells })))
        }
        Command::Fixed { file, subgroup } => {
            let gc = load_gcomplex(ctx, &file)?.gc;
            let h = parse_subgroup(gc.group(), &subgroup)?;
            let f = gc.fixed_subcomplex(&h);
            let comps: Vec<String> = pi0(&f).into_iter().map(|c| c.representative).collect();
            Ok(Outcome::ok(json!({
                "subgroup": labels(gc.group(), h.members()),
                "empty": f.num_vertices() == 0,
                "components": comps,
                "fixed": io::simplicial_json(&f),
            })))
        }
        Command::Develop { file, cell, seed } => develop(ctx, &file, &cell, seed),
        Command::Pi1 { file, base } => {
            let s = load_space(ctx, &file)?;
            let p = pi1_presentation(&s, s.require_vertex(&base)?)?;
            let edges: Vec<Value> = p
                .generator_edges
                .iter()
                .map(|&(u, v)| json!([s.vertex_name(u), s.vertex_name(v)]))
                .collect();
            Ok(Outcome::ok(json!({
                "base": base,
                "component": p.component.iter().map(|&v| s.vertex_name(v)).collect::<Vec<_>>(),
                "generators": p.group.generators(),
                "generator_edges": edges,
                "relators": words_json(p.group.relators()),
                "abelianization": p.group.abelianization(),
            })))
        }
        Command::GuidedPi1 { file, subgroup, base } => {
            let LoadedGComplex { gc, base_vertex } = load_gcomplex(ctx, &file)?;
            let h = parse_subgroup(gc.group(), &subgroup)?;
            let o = base_of(&gc, base.as_deref(), base_vertex)?;
            let gp = guided_pi1(&gc, &h, o)?;
            let g = gc.group();
            let ab = gp.presentation.abelianization();
            let order = if ab.rank == 0 {
                match gp.order(b.coset_steps) {
                    Ok(n) => json!(n),
                    Err(Error::ResourceLimit(_)) => Value::Null,
                    Err(e) => return Err(e),
                }
            } else {
                Value::Null
            };
            Ok(Outcome::ok(json!({
                "subgroup": labels(g, h.members()),
                "basepoint": gc.space().vertex_name(o),
                "centralizer": labels(g, gp.centralizer.members()),
                "reachable": labels(g, &gp.reachable),
                "generators": gp.presentation.generators(),
                "relators": words_json(gp.presentation.relators()),
                "projection": labels(g, &gp.proj),
                "fiber": {
                    "generators": gp.fiber.group.generators(),
                    "relators": words_json(gp.fiber.group.relators()),
                    "abelianization": gp.fiber.group.abelianization(),
                },
                "abelianization": ab,
                "order": order,
            })))
        }
        Command::Seqcheck {
            file,
            subgroup,
            base,
            all_subgroups,
        } => {
            let LoadedGComplex { gc, base_vertex } = load_gcomplex(ctx, &file)?;
            let reports = if all_subgroups {
                sequence_check_all(&gc, b, ctx.exec)?
            } else {
                let h = parse_subgroup(gc.group(), subgroup.as_deref().unwrap_or(""))?;
                let o = base_of(&gc, base.as_deref(), base_vertex)?;
                vec![sequence_check(&gc, &h, o, b)?]
            };
            let holds = reports.iter().all(|r| r.holds());
            Ok(Outcome::check(json!({ "holds": holds, "reports": reports }), holds))
        }
        Command::Pi0g { file, group } => {
            let gc = load_gcomplex(ctx, &file)?.gc;
            let g = if Path::new(&group).is_file() {
                io::load_group(&read(Path::new(&group))?, b)?
            } else {
                library::by_name(&group)?
            };
            let classes = pi0_isotropy(&gc, &Arc::new(g), b)?;
            Ok(Outcome::ok(json!({ "group": group, "classes": classes })))
        }
        Command::Cover {
            file,
            base,
            words,
            max_index,
        } => {
            let s = load_space(ctx, &file)?;
            let v = s.require_vertex(&base)?;
            let ngen = pi1_presentation(&s, v)?.group.num_generators();
            let words = io::parse_words(&words, ngen)?;
            let cd = cover_from_subgroup(&s, v, &words, max_index, b)?;
            Ok(Outcome::ok(io::cover_json(&cd)))
        }
        Command::Deck { file } => deck(ctx, &file),
        Command::Lift { file, path, start } => lift(ctx, &file, &path, &start),
        Command::GenExamples { name, seed, out } => {
            let files = examples::files(&name, seed)?;
            std::fs::create_dir_all(&out).map_err(|e| Error::invalid(format!("{}: {e}", out.display())))?;
            let mut written = Vec::new();
            for (f, text) in files {
                let p = out.join(&f);
                std::fs::write(&p, text).map_err(|e| Error::invalid(format!("{}: {e}", p.display())))?;
                written.push(f);
            }
            Ok(Outcome::ok(json!({ "example": name, "files": written })))
        }
    }
}

fn validate(ctx: &Ctx, file: &Path) -> Result<Outcome> {
    let b = &ctx.cfg.budgets;
    let (text, v) = read_json(file)?;
    let kind = kind_of(&v)?;
    let (name, report, extra) = match kind {
        Kind::Complex => {
            let l = io::load_complex(&text)?;
            let extra = json!({ "closure_needed": l.closure_needed, "euler_characteristic": l.complex.euler_characteristic() });
            ("complex", l.complex.validate(), extra)
        }
        Kind::Simplicial => {
            let s = io::load_simplicial(&text)?;
            let extra = json!({ "components": s.components().len(), "euler_characteristic": s.euler_characteristic() });
            ("simplicial", Default::default(), extra)
        }
        Kind::Group => {
            let g = io::load_group(&text, b)?;
            ("group", Default::default(), json!({ "order": g.order(), "abelian": g.is_abelian() }))
        }
        Kind::Cog => ("cog", io::load_cog(&text, b)?.validate(), json!({})),
        Kind::GComplex => {
            let gc = io::load_gcomplex(&text, b)?.gc;
            ("gcomplex", gc.validate(), json!({ "free": gc.is_free() }))
        }
        Kind::Cover => {
            let cd = io::load_cover(&text, b)?;
            ("cover", cd.validate(), json!({ "index": cd.index() }))
        }
    };
    let valid = report.is_ok();
    let mut body = json!({ "kind": name, "valid": valid, "violations": report.violations });
    if let (Value::Object(m), Value::Object(e)) = (&mut body, extra) {
        m.extend(e);
    }
    Ok(Outcome::check(body, valid))
}

fn develop(ctx: &Ctx, file: &Path, cell: &str, seed: Option<u64>) -> Result<Outcome> {
    let b = &ctx.cfg.budgets;
    let (text, v) = read_json(file)?;
    let (cog, matches) = match kind_of(&v)? {
        Kind::Cog => (io::load_cog(&text, b)?, None),
        Kind::GComplex => {
            let gc = io::load_gcomplex(&text, b)?.gc;
            let ex = extract_cog(&gc, seed.unwrap_or(ctx.cfg.seed))?;
            let s = ex.cog.base().require(cell)?;
            let m = development_matches_star(&gc, &ex, s)?.is_some();
            (ex.cog, Some(m))
        }
        _ => return Err(Error::invalid("expected a complex of groups or an action")),
    };
    let s = cog.base().require(cell)?;
    let dev = local_development(&cog, s)?;
    let (k, g) = (&dev.complex, cog.group(s));
    let cells: Vec<Value> = (0..k.len())
        .map(|c| {
            json!({
                "id": k.id(c),
                "dim": k.dim_of(c),
                "over": cog.base().id(dev.over[c]),
                "coset": g.label(dev.coset_rep[c]),
            })
        })
        .collect();
    let action: Map<String, Value> = dev
        .action
        .iter()
        .enumerate()
        .map(|(x, p)| (g.label(x), json!(p.iter().map(|&c| k.id(c)).collect::<Vec<_>>())))
        .collect();
    let mut body = json!({
        "cell": cell,
        "group": io::group_json(g),
        "cells": cells,
        "faces": k.face_pairs().into_iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
        "action": action,
    });
    if let (Some(m), Value::Object(o)) = (matches, &mut body) {
        o.insert("matches_star".into(), json!(m));
    }
    Ok(Outcome::check(body, matches.unwrap_or(true)))
}

fn deck(ctx: &Ctx, file: &Path) -> Result<Outcome> {
    let b = &ctx.cfg.budgets;
    let (text, v) = read_json(file)?;
    match kind_of(&v)? {
        Kind::Cover => {
            let cd = io::load_cover(&text, b)?;
            let d = deck_group(&cd, ctx.exec)?;
            let t = &cd.total;
            let elements: Vec<BTreeMap<&str, &str>> = d
                .elements
                .iter()
                .map(|f| (0..t.num_vertices()).map(|x| (t.vertex_name(x), t.vertex_name(f[x]))).collect())
                .collect();
            let nq = normalizer_quotient_order(&cd);
            let agrees = d.order() == nq;
            Ok(Outcome::check(
                json!({
                    "index": cd.index(),
                    "order": d.order(),
                    "normalizer_quotient_order": nq,
                    "normal": nq == cd.index(),
                    "abelian": d.is_abelian(),
                    "agrees": agrees,
                    "sheets": deck_sheets(&cd, &d),
                    "table": d.table,
                    "elements": elements,
                }),
                agrees,
            ))
        }
        Kind::GComplex => {
            let gc = io::load_gcomplex(&text, b)?.gc;
            let d = canonical_cover_deck(&gc, ctx.exec)?;
            let agrees = d.agrees;
            Ok(Outcome::check(json!({ "canonical": d }), agrees))
        }
        _ => Err(Error::invalid("expected a cover or an action")),
    }
}

fn lift(ctx: &Ctx, file: &Path, path: &str, start: &str) -> Result<Outcome> {
    let b = &ctx.cfg.budgets;
    let (text, v) = read_json(file)?;
    let ids: Vec<&str> = path.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if ids.len() > b.max_path_length + 1 {
        return Err(Error::ResourceLimit(format!(
            "path has {} steps, bound {}",
            ids.len() - 1,
            b.max_path_length
        )));
    }
    let (space, l): (SimplicialComplex, Lift) = match kind_of(&v)? {
        Kind::Cover => {
            let cd = io::load_cover(&text, b)?;
            let p = EdgePath::from_names(&cd.base, &ids)?;
            let x = cd.total.require_vertex(start)?;
            let l = lift_in_cover(&cd, &p, x)?;
            (cd.total, l)
        }
        Kind::GComplex => {
            let gc = io::load_gcomplex(&text, b)?.gc;
            let q = quotient(&gc)?;
            let cells = parse_quotient_path(&q.quotient, &ids)?;
            let x = gc.space().require_vertex(start)?;
            let l = lift_edge_path(&gc, &q, &cells, x)?;
            (gc.space().clone(), l)
        }
        _ => return Err(Error::invalid("expected a cover or an action")),
    };
    let names: Vec<&str> = l.path.iter().map(|&x| space.vertex_name(x)).collect();
    Ok(Outcome::ok(json!({
        "path": names,
        "closed": l.path.first() == l.path.last(),
        "ambiguous_steps": l.ambiguous_steps,
    })))
}
