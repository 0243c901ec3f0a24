//! The `hecke-wgraph` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cellular::CellularDatum;
use crate::coxeter::{CoxeterGroup, CoxeterSpec, GenSet, GroupElement, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::hecke::HeckeVector;
use crate::kl::{KlTable, CACHE_DIR_ENV};
use crate::laurent::LaurentInt;
use crate::linalg::{rank, sparse_from_hecke, LMatrix};
use crate::parabolic::{EjClass, ParabolicSystem};
use crate::specht::SpechtModule;
use crate::typea::{Partition, ShapeData, Tableau, TypeAContext};
use crate::verify::{self, Level};
use crate::wgraph::{full_group_cells, WGraph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hecke-wgraph",
    version,
    about = "Kazhdan-Lusztig bases, generic Specht modules and W-graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GroupSource {
    /// Named type such as A3, B4, D4, H3, F4 or I2(7).
    #[arg(long = "type", value_name = "NAME")]
    type_name: Option<String>,
    /// File holding the rank followed by the Coxeter matrix entries (0 for infinity).
    #[arg(long, value_name = "FILE")]
    matrix: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[command(flatten)]
    source: GroupSource,
    /// Largest group order to enumerate.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Args, Debug)]
struct CacheArgs {
    /// Directory for cached KL tables.
    #[arg(long, env = CACHE_DIR_ENV)]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate the group; print its order and length generating function.
    Group(GroupArgs),
    /// Dump the table of p_{y,w} and mu(y,w).
    Klpoly {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Dump D_J, maximal representatives, E_J and the classes of E_J.
    Ej {
        #[command(flatten)]
        group: GroupArgs,
        /// Comma-separated 1-based generators; empty for the empty set.
        #[arg(long, value_name = "LIST")]
        j: String,
    },
    /// The W-graph of the generic Specht module S^J.
    Wgraph {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_name = "LIST")]
        j: String,
    },
    /// Left cells of the whole group.
    Cells {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        cache: CacheArgs,
    },
    /// Action matrices: of S^lambda in the Murphy basis, or of S^J with --type/--matrix and --j.
    Specht {
        #[arg(long, value_name = "PARTS", conflicts_with_all = ["type_name", "matrix", "j"])]
        lambda: Option<String>,
        #[arg(long = "type", value_name = "NAME", requires = "j", conflicts_with = "matrix")]
        type_name: Option<String>,
        #[arg(long, value_name = "FILE", requires = "j")]
        matrix: Option<PathBuf>,
        #[arg(long, value_name = "LIST")]
        j: Option<String>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// The Murphy basis of the Hecke algebra of S_n and its rank.
    Murphy {
        #[arg(long)]
        n: usize,
        /// Largest basis size (n!) to build.
        #[arg(long, default_value_t = 720)]
        cap: usize,
    },
    /// Matrices between the Murphy basis and the KL basis of S^lambda.
    Transition {
        #[arg(long, value_name = "PARTS")]
        lambda: String,
    },
    /// Run the invariant suites; exit 1 if any assertive suite fails.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        cache: CacheArgs,
        #[arg(long, value_enum, default_value_t = Level::Fast)]
        level: Level,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
    },
    /// Compare |W|, sum |E_J|^2 and the rank of all m_uv.
    Rankdiag {
        #[command(flatten)]
        group: GroupArgs,
        /// Largest group order for the exact rank computation.
        #[arg(long = "rank-cap", default_value_t = 1200)]
        rank_cap: usize,
    },
}

struct Output {
    body: String,
    code: i32,
}

impl Output {
    fn ok(body: String) -> Self {
        Self { body, code: EXIT_OK }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let written = match &cli.output {
                Some(path) => std::fs::write(path, &out.body).map_err(Error::from),
                None => stdout.write_all(out.body.as_bytes()).map_err(Error::from),
            };
            match written {
                Ok(()) => out.code,
                Err(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn load_group(args: &GroupArgs) -> Result<Arc<CoxeterGroup>> {
    load_group_from(args.source.type_name.as_deref(), args.source.matrix.as_ref(), args.cap)
}

fn load_group_from(type_name: Option<&str>, matrix: Option<&PathBuf>, cap: usize) -> Result<Arc<CoxeterGroup>> {
    let spec = match (type_name, matrix) {
        (Some(name), _) => CoxeterSpec::named(name)?,
        (None, Some(path)) => CoxeterSpec::parse_matrix_text(&std::fs::read_to_string(path)?)?,
        (None, None) => return Err(Error::Parse("one of --type or --matrix is required".into())),
    };
    Ok(Arc::new(CoxeterGroup::build(spec, cap)?))
}

fn parse_j(text: &str, group: &CoxeterGroup) -> Result<GenSet> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    GenSet::parse_one_based(inner, group.rank())
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn require_format(format: Format, allowed: &[Format], command: &str) -> Result<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Error::Parse(
            format!("--format {format:?} is not available for `{command}`").to_lowercase(),
        ))
    }
}

fn words(g: &CoxeterGroup, elements: &[GroupElement]) -> Vec<String> {
    elements.iter().map(|&w| g.format(w)).collect()
}

fn hecke_json(h: &HeckeVector) -> Value {
    let g = h.group();
    Value::Array(
        h.terms()
            .map(|(w, c)| json!({ "w": g.format(w), "coeff": c }))
            .collect(),
    )
}

fn length_polynomial(dist: &[usize]) -> String {
    LaurentInt::from_terms(dist.iter().enumerate().map(|(e, &c)| (e as i32, c as i64))).to_string()
}

fn execute(cli: &Cli) -> Result<Output> {
    let format = cli.format;
    match &cli.command {
        Command::Group(args) => {
            require_format(format, &[Format::Json, Format::Text], "group")?;
            let g = load_group(args)?;
            let dist = g.length_distribution();
            Ok(Output::ok(match format {
                Format::Json => to_json(&json!({
                    "group": g.spec().label(),
                    "rank": g.rank(),
                    "order": g.order(),
                    "matrix": g.spec().matrix(),
                    "longestLength": dist.len() - 1,
                    "lengthDistribution": dist,
                })),
                _ => format!(
                    "group {}\nrank {}\norder {}\nlength generating function {}\n",
                    g.spec().label(),
                    g.rank(),
                    g.order(),
                    length_polynomial(&dist)
                ),
            }))
        }
        Command::Klpoly { group, cache } => {
            require_format(format, &[Format::Json, Format::Text], "klpoly")?;
            let g = load_group(group)?;
            let kl = KlTable::load_or_compute(&g, cache.cache_dir.as_deref())?;
            let mut rows = Vec::new();
            let mut text = String::new();
            for w in g.elements() {
                for (&y, p) in kl.column(w) {
                    if y == w {
                        continue;
                    }
                    let mu = kl.mu(y, w);
                    text += &format!("p({}, {}) = {p}    mu = {mu}\n", g.format(y), g.format(w));
                    rows.push(json!({ "y": g.format(y), "w": g.format(w), "p": p, "mu": mu }));
                }
            }
            Ok(Output::ok(match format {
                Format::Json => to_json(&json!({ "group": g.spec().label(), "order": g.order(), "entries": rows })),
                _ => text,
            }))
        }
        Command::Ej { group, j } => {
            require_format(format, &[Format::Json, Format::Text], "ej")?;
            let g = load_group(group)?;
            let j = parse_j(j, &g)?;
            let sys = ParabolicSystem::new(&g, j)?;
            let mut classes = Vec::new();
            let mut class_text = String::new();
            for &x in sys.ej() {
                for s in 0..g.rank() {
                    let c = sys.classify_ej(s, x)?;
                    let label = match c {
                        EjClass::Minus => "minus".to_string(),
                        EjClass::Plus => "plus".to_string(),
                        EjClass::ZeroMinus(t) => format!("zeroMinus, s x = x s{}", t + 1),
                        EjClass::ZeroPlus(t) => format!("zeroPlus, s x = x s{}", t + 1),
                    };
                    class_text += &format!("  s{} on {}: {label}\n", s + 1, g.format(x));
                    let mut v = serde_json::to_value(c).expect("serializable");
                    if let Some(w) = v.get_mut("witness") {
                        *w = json!(w.as_u64().unwrap_or(0) + 1);
                    }
                    classes.push(json!({ "x": g.format(x), "s": s + 1, "class": v }));
                }
            }
            Ok(Output::ok(match format {
                Format::Json => to_json(&json!({
                    "group": g.spec().label(),
                    "J": j.one_based(),
                    "wJ": g.format(sys.w_j()),
                    "DJ": words(&g, sys.dj()),
                    "DJbar": words(&g, sys.djbar()),
                    "EJ": words(&g, sys.ej()),
                    "classes": classes,
                })),
                _ => format!(
                    "J = {j}\nw_J = {}\nD_J: {}\nmaximal representatives: {}\nE_J: {}\nclasses:\n{class_text}",
                    g.format(sys.w_j()),
                    words(&g, sys.dj()).join(" "),
                    words(&g, sys.djbar()).join(" "),
                    words(&g, sys.ej()).join(" "),
                ),
            }))
        }
        Command::Wgraph { group, j } => {
            let g = load_group(group)?;
            let j = parse_j(j, &g)?;
            let module = SpechtModule::build(&g, j)?;
            let graph = WGraph::from_specht(&module, &module.relative_kl()?);
            Ok(Output::ok(match format {
                Format::Json => to_json(&graph.to_json()),
                Format::Dot => graph.to_dot(),
                Format::Text => wgraph_text(&graph),
            }))
        }
        Command::Cells { group, cache } => {
            require_format(format, &[Format::Json, Format::Text], "cells")?;
            let g = load_group(group)?;
            let kl = KlTable::load_or_compute(&g, cache.cache_dir.as_deref())?;
            let cells = full_group_cells(&kl);
            Ok(Output::ok(match format {
                Format::Json => to_json(&json!({
                    "group": g.spec().label(),
                    "cells": cells.iter().map(|c| words(&g, c)).collect::<Vec<_>>(),
                })),
                _ => {
                    let mut s = format!("{} left cells\n", cells.len());
                    for c in &cells {
                        s += &format!("{}\n", words(&g, c).join(" "));
                    }
                    s
                }
            }))
        }
        Command::Specht {
            lambda,
            type_name,
            matrix,
            j,
            cap,
        } => {
            require_format(format, &[Format::Json, Format::Text], "specht")?;
            if let Some(lambda) = lambda {
                let lambda: Partition = lambda.parse()?;
                let ctx = TypeAContext::new(lambda.n())?;
                let shape = ctx.shape(&lambda)?;
                let specht = ctx.specht(&shape)?;
                Ok(Output::ok(specht_output(format, &shape, specht.actions())))
            } else {
                let g = load_group_from(type_name.as_deref(), matrix.as_ref(), *cap)?;
                let j = parse_j(j.as_deref().unwrap_or_default(), &g)?;
                let module = SpechtModule::build(&g, j)?;
                let basis = words(&g, module.basis());
                Ok(Output::ok(match format {
                    Format::Json => to_json(&json!({
                        "group": g.spec().label(),
                        "J": j.one_based(),
                        "basis": basis,
                        "actions": module.actions().iter().enumerate()
                            .map(|(s, m)| json!({ "generator": s + 1, "matrix": m }))
                            .collect::<Vec<_>>(),
                    })),
                    _ => {
                        let mut s = format!("S^J for J = {j}, basis {}\n", basis.join(" "));
                        for (i, m) in module.actions().iter().enumerate() {
                            s += &format!("T_{}:\n{m}", i + 1);
                        }
                        s
                    }
                }))
            }
        }
        Command::Murphy { n, cap } => {
            require_format(format, &[Format::Json, Format::Text], "murphy")?;
            let ctx = TypeAContext::new(*n)?;
            let basis = ctx.murphy_basis(*cap)?;
            let r = rank(basis.iter().map(|m| sparse_from_hecke(&m.element)));
            let order = ctx.group().order();
            Ok(Output::ok(match format {
                Format::Json => to_json(&json!({
                    "n": n,
                    "count": basis.len(),
                    "rank": r,
                    "groupOrder": order,
                    "elements": basis.iter().map(|m| json!({
                        "lambda": m.lambda, "s": m.s, "t": m.t, "element": hecke_json(&m.element),
                    })).collect::<Vec<_>>(),
                })),
                _ => {
                    let mut s = format!(
                        "Murphy basis for S_{n}: {} elements, rank {r}, algebra dimension {order}\n",
                        basis.len()
                    );
                    for m in &basis {
                        s += &format!("m[{} | {} | {}] = {}\n", m.lambda, m.s, m.t, m.element);
                    }
                    s
                }
            }))
        }
        Command::Transition { lambda } => {
            require_format(format, &[Format::Json, Format::Text], "transition")?;
            let lambda: Partition = lambda.parse()?;
            let ctx = TypeAContext::new(lambda.n())?;
            let shape = ctx.shape(&lambda)?;
            let specht = ctx.specht(&shape)?;
            let (p, inv) = ctx.transition(&shape, &specht)?;
            let small = ShapeData::lowered(&p);
            let k = shape.dim();
            let mu: Vec<Vec<i64>> = (0..k)
                .map(|a| (0..k).map(|b| small[(a, b)].coeff_i64(0)).collect())
                .collect();
            Ok(Output::ok(match format {
                Format::Json => to_json(&json!({
                    "lambda": lambda,
                    "J": shape.j.one_based(),
                    "tableaux": shape.tableaux,
                    "cell": words(ctx.group(), &shape.cell),
                    "P": p,
                    "inverse": inv,
                    "p": small,
                    "mu": mu,
                })),
                _ => format!(
                    "lambda = {lambda}\ntableaux: {}\nC in terms of m (columns):\n{p}inverse:\n{inv}p = -P/q:\n{small}",
                    tableau_list(&shape.tableaux)
                ),
            }))
        }
        Command::Verify {
            group,
            cache,
            level,
            seed,
        } => {
            require_format(format, &[Format::Json, Format::Text], "verify")?;
            let g = load_group(group)?;
            let kl = KlTable::load_or_compute(&g, cache.cache_dir.as_deref())?;
            let report = verify::run(&g, &kl, *level, *seed)?;
            let body = match format {
                Format::Json => to_json(&serde_json::to_value(&report).expect("serializable")),
                _ => report.to_text(),
            };
            Ok(Output {
                body,
                code: if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED },
            })
        }
        Command::Rankdiag { group, rank_cap } => {
            require_format(format, &[Format::Json, Format::Text], "rankdiag")?;
            let g = load_group(group)?;
            let report = CellularDatum::new(&g)?.rank_report(*rank_cap)?;
            Ok(Output::ok(match format {
                Format::Json => to_json(&serde_json::to_value(&report).expect("serializable")),
                _ => {
                    let mut s = format!(
                        "groupOrder {}\nsumOfSquares {}\nrank {}\n",
                        report.group_order, report.sum_of_squares, report.rank
                    );
                    for l in &report.per_layer {
                        s += &format!("  |E_J| = {} for J = {:?}\n", l.size_ej, l.j);
                    }
                    s += &format!("note: {}\n", report.note);
                    s
                }
            }))
        }
    }
}

fn tableau_list(tabs: &[Tableau]) -> String {
    tabs.iter().map(Tableau::to_string).collect::<Vec<_>>().join(" ")
}

fn specht_output(format: Format, shape: &ShapeData, actions: &[LMatrix]) -> String {
    match format {
        Format::Json => to_json(&json!({
            "lambda": shape.lambda,
            "J": shape.j.one_based(),
            "tableaux": shape.tableaux,
            "actions": actions.iter().enumerate()
                .map(|(s, m)| json!({ "generator": s + 1, "matrix": m }))
                .collect::<Vec<_>>(),
        })),
        _ => {
            let mut s = format!(
                "S^{} in the Murphy basis m_t, t in {}\n",
                shape.lambda,
                tableau_list(&shape.tableaux)
            );
            for (i, m) in actions.iter().enumerate() {
                s += &format!("T_{}:\n{m}", i + 1);
            }
            s
        }
    }
}

fn wgraph_text(graph: &WGraph) -> String {
    let mut s = String::new();
    if let Some(j) = graph.j() {
        s += &format!("W-graph of S^J, J = {j}, {} vertices\n", graph.len());
    }
    for (i, v) in graph.vertices().iter().enumerate() {
        s += &format!("{i}: {} descents {}\n", v.label(), v.descents);
    }
    for ((a, b), mu) in graph.edges() {
        s += &format!("{a} -- {b} mu {mu}\n");
    }
    let cells = graph.cells();
    s += &format!("cells {:?}\n", cells.cells);
    s
}
