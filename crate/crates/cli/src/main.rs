//! `hk`: command-line front end for the Hecke-Kiselman monoid toolkit.
//!
//! Exit codes: 0 on success, 1 on a domain error (input violates an
//! operation's precondition), 2 on a usage error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_traits::Zero;
use serde_json::json;

use hk_core::catalog::{catalog, CatalogReport, RepDescriptor};
use hk_core::cycle::{affine_action, all_idempotents, classify_level, Level};
use hk_core::graph::{ComponentKind, OrientedGraph};
use hk_core::matrix::Rational;
use hk_core::rep::{
    verify_homomorphism, ExtendedRep, MatrixTypeData, MatrixTypeElement, Representation,
    SandwichEntry,
};
use hk_core::rewrite::{
    are_equal, idempotents_acyclic, normalize, DistinctWitness, EqualityVerdict, DEFAULT_BUDGET,
};
use hk_core::word::Word;

#[derive(Parser)]
#[command(name = "hk", version, about = "Hecke-Kiselman monoid toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args)]
struct GraphSource {
    /// Graph file in edge-list format (`n`, then `u -> v` lines).
    #[arg(value_name = "GRAPH")]
    graph: Option<PathBuf>,
    /// Use the built-in oriented cycle on N vertices.
    #[arg(long, value_name = "N", conflicts_with = "graph")]
    cycle: Option<usize>,
    /// Use the built-in oriented path on N vertices.
    #[arg(long, value_name = "N", conflicts_with_all = ["graph", "cycle"])]
    path: Option<usize>,
}

#[derive(Args)]
struct DataSource {
    /// Built-in sandwich data for the 3-cycle: M0 or M1.
    #[arg(long, value_name = "M0|M1")]
    builtin: Option<String>,
    /// Sandwich-data file.
    #[arg(long, value_name = "FILE", conflicts_with = "builtin")]
    data: Option<PathBuf>,
}

fn parse_nonzero_rational(s: &str) -> Result<Rational, String> {
    let r = Rational::from_str(s).map_err(|e| format!("not a rational `{s}`: {e}"))?;
    if r.is_zero() {
        return Err("lambda must be nonzero: evaluating at 0 collapses every image to the zero map"
            .to_string());
    }
    Ok(r)
}

fn parse_budget(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(b) if b >= 1 => Ok(b),
        _ => Err(format!("budget must be a positive integer, got `{s}`")),
    }
}

fn parse_kmax(s: &str) -> Result<u32, String> {
    match s.parse::<u32>() {
        Ok(k) if k >= 1 => Ok(k),
        _ => Err(format!("kmax must be a positive integer, got `{s}`")),
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether the monoid algebra satisfies a polynomial identity.
    PiCheck {
        #[command(flatten)]
        src: GraphSource,
    },
    /// Print the cyclic core (arrows lying on oriented cycles).
    Core {
        #[command(flatten)]
        src: GraphSource,
    },
    /// List the weakly connected components with their kinds.
    Components {
        #[command(flatten)]
        src: GraphSource,
    },
    /// Enumerate idempotents (canonical words) of the monoid.
    Idempotents {
        #[command(flatten)]
        src: GraphSource,
    },
    /// Normalize a word within the length-bounded saturation class.
    Normalize {
        #[command(flatten)]
        src: GraphSource,
        #[arg(long, value_name = "WORD")]
        word: String,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_BUDGET, value_parser = parse_budget)]
        budget: usize,
    },
    /// Decide equality of two words (bounded oracle).
    Equal {
        #[command(flatten)]
        src: GraphSource,
        #[arg(long, value_name = "WORD")]
        left: String,
        #[arg(long, value_name = "WORD")]
        right: String,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_BUDGET, value_parser = parse_budget)]
        budget: usize,
    },
    /// Print the exact affine map representing a word of the cycle monoid.
    Fmap {
        #[command(flatten)]
        src: GraphSource,
        #[arg(long, value_name = "WORD")]
        word: String,
    },
    /// Print the input coordinates the word's affine map depends on.
    Support {
        #[command(flatten)]
        src: GraphSource,
        #[arg(long, value_name = "WORD")]
        word: String,
    },
    /// Classify a cycle-monoid word by its certified ideal-chain level.
    Classify {
        #[command(flatten)]
        src: GraphSource,
        #[arg(long, value_name = "WORD")]
        word: String,
    },
    /// Print sandwich data, optionally evaluated at a parameter.
    Sandwich {
        #[command(flatten)]
        data: DataSource,
        #[arg(long, value_name = "P/Q", value_parser = parse_nonzero_rational, allow_hyphen_values = true)]
        lambda: Option<Rational>,
    },
    /// Build the matrix representation at a parameter.
    Rep {
        #[command(flatten)]
        data: DataSource,
        #[arg(long, value_name = "P/Q", value_parser = parse_nonzero_rational, allow_hyphen_values = true)]
        lambda: Rational,
    },
    /// Verify multiplicativity of the representation exhaustively.
    Verify {
        #[command(flatten)]
        data: DataSource,
        #[arg(long, value_name = "P/Q", value_parser = parse_nonzero_rational, allow_hyphen_values = true)]
        lambda: Rational,
        #[arg(long, value_name = "N", default_value_t = 5, value_parser = parse_kmax)]
        kmax: u32,
    },
    /// Extend the representation to all integer exponents and check it.
    Extend {
        #[command(flatten)]
        data: DataSource,
        #[arg(long, value_name = "P/Q", value_parser = parse_nonzero_rational, allow_hyphen_values = true)]
        lambda: Rational,
        /// Print the image at one closure element (s^EXP; A, B).
        #[arg(long, value_name = "EXP", allow_hyphen_values = true, requires_all = ["a", "b"])]
        exp: Option<i64>,
        #[arg(long, value_name = "A", requires = "exp")]
        a: Option<usize>,
        #[arg(long, value_name = "B", requires = "exp")]
        b: Option<usize>,
    },
    /// Emit the catalog of irreducible-representation descriptors.
    Catalog {
        #[command(flatten)]
        src: GraphSource,
        /// Sandwich-data files, one per level of the unique cycle component.
        #[arg(long, value_name = "FILE")]
        data: Vec<PathBuf>,
    },
}

enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
    fn domain(msg: impl Into<String>) -> Self {
        CliError::Domain(msg.into())
    }
}

fn load_graph(src: &GraphSource) -> Result<OrientedGraph, CliError> {
    match (&src.graph, src.cycle, src.path) {
        (Some(path), None, None) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::usage(format!("cannot read graph file {}: {e}", path.display()))
            })?;
            OrientedGraph::parse(&text).map_err(|e| CliError::domain(format!("bad graph: {e}")))
        }
        (None, Some(n), None) => {
            if n < 3 {
                return Err(CliError::usage("--cycle needs at least 3 vertices"));
            }
            Ok(OrientedGraph::cycle(n))
        }
        (None, None, Some(n)) => {
            if n < 1 {
                return Err(CliError::usage("--path needs at least 1 vertex"));
            }
            Ok(OrientedGraph::path(n))
        }
        _ => Err(CliError::usage("provide exactly one of: a graph file, --cycle N, --path N")),
    }
}

fn load_data(src: &DataSource) -> Result<MatrixTypeData, CliError> {
    match (&src.builtin, &src.data) {
        (Some(name), None) => match name.as_str() {
            "M0" | "m0" => Ok(MatrixTypeData::c3_level(0).expect("builtin")),
            "M1" | "m1" => Ok(MatrixTypeData::c3_level(1).expect("builtin")),
            other => Err(CliError::usage(format!("unknown builtin `{other}` (want M0 or M1)"))),
        },
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::usage(format!("cannot read data file {}: {e}", path.display()))
            })?;
            MatrixTypeData::load(&text)
                .map_err(|e| CliError::domain(format!("bad sandwich data: {e}")))
        }
        _ => Err(CliError::usage("provide exactly one of --builtin or --data")),
    }
}

fn parse_word(s: &str) -> Result<Word, CliError> {
    Word::from_str(s).map_err(|e| CliError::usage(e.to_string()))
}

fn check_letters(w: &Word, g: &OrientedGraph) -> Result<(), CliError> {
    if w.max_letter() > g.n() {
        return Err(CliError::domain(format!(
            "word mentions generator {} but the graph has only {} vertices",
            w.max_letter(),
            g.n()
        )));
    }
    Ok(())
}

fn require_standard_cycle(g: &OrientedGraph) -> Result<usize, CliError> {
    if !g.is_standard_cycle() {
        return Err(CliError::domain(
            "this operation is defined for the standard oriented cycle (use --cycle N)",
        ));
    }
    Ok(g.n())
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("valid JSON"));
}

fn kind_json(kind: &ComponentKind) -> serde_json::Value {
    match kind {
        ComponentKind::Singleton => json!({"kind": "singleton"}),
        ComponentKind::Cycle(j) => json!({"kind": "cycle", "length": j}),
        ComponentKind::Other => json!({"kind": "other"}),
    }
}

fn entry_string(e: SandwichEntry) -> String {
    match e {
        SandwichEntry::Theta => "theta".to_string(),
        SandwichEntry::Power(0) => "1".to_string(),
        SandwichEntry::Power(k) => format!("s^{k}"),
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.cmd {
        Cmd::PiCheck { src } => {
            let g = load_graph(&src)?;
            let pi = g.is_pi();
            if cli.json {
                print_json(&json!({"pi": pi}));
            } else {
                println!("PI: {}", if pi { "yes" } else { "no" });
            }
            Ok(0)
        }
        Cmd::Core { src } => {
            let g = load_graph(&src)?;
            let core = g.cyclic_core();
            if cli.json {
                let arrows: Vec<[usize; 2]> = core.arrows().map(|(u, v)| [u, v]).collect();
                print_json(&json!({"n": core.n(), "arrows": arrows}));
            } else {
                print!("{}", core.to_edge_list());
            }
            Ok(0)
        }
        Cmd::Components { src } => {
            let g = load_graph(&src)?;
            let comps = g.components();
            if cli.json {
                let items: Vec<serde_json::Value> = comps
                    .iter()
                    .map(|c| {
                        let mut v = kind_json(&c.kind);
                        v["vertices"] = json!(c.vertices);
                        v
                    })
                    .collect();
                print_json(&json!(items));
            } else {
                for c in comps {
                    let verts: Vec<String> = c.vertices.iter().map(|v| v.to_string()).collect();
                    println!("{}: {}", verts.join(" "), c.kind);
                }
            }
            Ok(0)
        }
        Cmd::Idempotents { src } => {
            let g = load_graph(&src)?;
            let items: Vec<(Vec<usize>, Word)> = if g.is_standard_cycle() {
                all_idempotents(g.n())
                    .expect("cycle length >= 3")
                    .into_iter()
                    .map(|e| (e.subset.into_iter().collect(), e.word))
                    .collect()
            } else if g.is_acyclic() {
                idempotents_acyclic(&g)
                    .expect("graph checked acyclic")
                    .into_iter()
                    .map(|w| {
                        let mut subset: Vec<usize> = w.letters().to_vec();
                        subset.sort_unstable();
                        (subset, w)
                    })
                    .collect()
            } else {
                return Err(CliError::domain(
                    "idempotent enumeration needs an acyclic graph or the standard cycle",
                ));
            };
            if cli.json {
                let list: Vec<serde_json::Value> = items
                    .iter()
                    .map(|(subset, w)| json!({"subset": subset, "word": w.to_string()}))
                    .collect();
                print_json(&json!({"count": items.len(), "idempotents": list}));
            } else {
                for (_, w) in &items {
                    println!("{w}");
                }
            }
            Ok(0)
        }
        Cmd::Normalize { src, word, budget } => {
            let g = load_graph(&src)?;
            let w = parse_word(&word)?;
            check_letters(&w, &g)?;
            let out = normalize(&w, &g, budget);
            if cli.json {
                print_json(&json!({
                    "word": w.to_string(),
                    "normal_form": out.word.to_string(),
                    "saturated": out.saturated,
                }));
            } else {
                println!("{}", out.word);
                if !out.saturated {
                    println!("saturation: incomplete (budget exhausted)");
                }
            }
            Ok(0)
        }
        Cmd::Equal { src, left, right, budget } => {
            let g = load_graph(&src)?;
            let u = parse_word(&left)?;
            let v = parse_word(&right)?;
            check_letters(&u, &g)?;
            check_letters(&v, &g)?;
            let verdict = are_equal(&u, &v, &g, budget);
            if cli.json {
                let value = match &verdict {
                    EqualityVerdict::Equal => json!({"verdict": "equal"}),
                    EqualityVerdict::Unknown => json!({"verdict": "unknown"}),
                    EqualityVerdict::Distinct(w) => match w {
                        DistinctWitness::AffineImages { left, right } => json!({
                            "verdict": "distinct",
                            "witness": {"kind": "affine", "left": left.to_string(), "right": right.to_string()},
                        }),
                        DistinctWitness::CanonicalForms { left, right } => json!({
                            "verdict": "distinct",
                            "witness": {"kind": "canonical", "left": left.to_string(), "right": right.to_string()},
                        }),
                    },
                };
                print_json(&value);
            } else {
                match &verdict {
                    EqualityVerdict::Equal => println!("equal"),
                    EqualityVerdict::Unknown => println!("unknown (budget exhausted)"),
                    EqualityVerdict::Distinct(w) => {
                        println!("distinct");
                        match w {
                            DistinctWitness::AffineImages { left, right } => {
                                println!("  left  = {left}");
                                println!("  right = {right}");
                            }
                            DistinctWitness::CanonicalForms { left, right } => {
                                println!("  left  = {left}");
                                println!("  right = {right}");
                            }
                        }
                    }
                }
            }
            Ok(0)
        }
        Cmd::Fmap { src, word } => {
            let g = load_graph(&src)?;
            let n = require_standard_cycle(&g)?;
            let w = parse_word(&word)?;
            check_letters(&w, &g)?;
            let map = affine_action(&w, n).expect("letters checked");
            if cli.json {
                print_json(&json!({
                    "n": n,
                    "word": w.to_string(),
                    "src": map.source_indices(),
                    "off": map.offsets(),
                }));
            } else {
                println!("{map}");
            }
            Ok(0)
        }
        Cmd::Support { src, word } => {
            let g = load_graph(&src)?;
            let n = require_standard_cycle(&g)?;
            let w = parse_word(&word)?;
            check_letters(&w, &g)?;
            let supp: Vec<usize> = affine_action(&w, n)
                .expect("letters checked")
                .support()
                .into_iter()
                .collect();
            if cli.json {
                print_json(&json!({"support": supp, "size": supp.len()}));
            } else {
                let items: Vec<String> = supp.iter().map(|v| v.to_string()).collect();
                println!("{}", items.join(" "));
            }
            Ok(0)
        }
        Cmd::Classify { src, word } => {
            let g = load_graph(&src)?;
            let n = require_standard_cycle(&g)?;
            let w = parse_word(&word)?;
            check_letters(&w, &g)?;
            let out = classify_level(&w, n).expect("letters checked");
            let level = match out.level {
                Level::Top => "top".to_string(),
                Level::At(i) => i.to_string(),
            };
            if cli.json {
                let supp: Vec<usize> = out.support.iter().copied().collect();
                print_json(&json!({
                    "level": level,
                    "support": supp,
                    "support_size": out.support.len(),
                }));
            } else if out.level == Level::Top {
                println!("top (support size {})", out.support.len());
            } else {
                println!("level {level} (support size {})", out.support.len());
            }
            Ok(0)
        }
        Cmd::Sandwich { data, lambda } => {
            let d = load_data(&data)?;
            match lambda {
                None => {
                    if cli.json {
                        let entries: Vec<Vec<String>> = (1..=d.size())
                            .map(|b| (1..=d.size()).map(|a| entry_string(d.entry(b, a))).collect())
                            .collect();
                        let rows: Vec<String> =
                            d.row_labels().iter().map(|w| w.to_string()).collect();
                        let cols: Vec<String> =
                            d.col_labels().iter().map(|w| w.to_string()).collect();
                        print_json(&json!({
                            "size": d.size(),
                            "row_labels": rows,
                            "col_labels": cols,
                            "entries": entries,
                        }));
                    } else {
                        print!("{}", d.save());
                    }
                }
                Some(lam) => {
                    let m = d.evaluate(&lam).map_err(|e| CliError::domain(e.to_string()))?;
                    if cli.json {
                        print_json(&json!({
                            "lambda": lam.to_string(),
                            "matrix": m.row_strings(),
                            "rank": m.rank(),
                            "det": m.det().to_string(),
                        }));
                    } else {
                        print!("{m}");
                        println!("rank {}", m.rank());
                        println!("det {}", m.det());
                    }
                }
            }
            Ok(0)
        }
        Cmd::Rep { data, lambda } => {
            let d = load_data(&data)?;
            let rep =
                Representation::build(&d, &lambda).map_err(|e| CliError::domain(e.to_string()))?;
            if cli.json {
                print_json(&rep.export_json(&d));
            } else {
                println!("lambda = {lambda}");
                println!("dim = {}", rep.dim());
                for a in 1..=d.size() {
                    for b in 1..=d.size() {
                        let el = MatrixTypeElement::elem(1, a, b);
                        println!("{} ->", d.format_element(&el));
                        let img = rep.image(&el);
                        for line in img.to_string().lines() {
                            println!("  {line}");
                        }
                    }
                }
            }
            Ok(0)
        }
        Cmd::Verify { data, lambda, kmax } => {
            let d = load_data(&data)?;
            let rep =
                Representation::build(&d, &lambda).map_err(|e| CliError::domain(e.to_string()))?;
            let ok = verify_homomorphism(&rep, &d, kmax);
            if cli.json {
                print_json(&json!({"verified": ok, "kmax": kmax, "dim": rep.dim()}));
            } else if ok {
                println!("homomorphism: ok (kmax={kmax}, dim={})", rep.dim());
            } else {
                println!("homomorphism: FAILED (kmax={kmax})");
            }
            Ok(if ok { 0 } else { 1 })
        }
        Cmd::Extend { data, lambda, exp, a, b } => {
            let d = load_data(&data)?;
            let rep =
                Representation::build(&d, &lambda).map_err(|e| CliError::domain(e.to_string()))?;
            let ext =
                ExtendedRep::new(rep.clone(), &d).map_err(|e| CliError::domain(e.to_string()))?;
            if let (Some(p), Some(a), Some(b)) = (exp, a, b) {
                if a == 0 || a > d.size() || b == 0 || b > d.size() {
                    return Err(CliError::domain(format!("indices must lie in 1..={}", d.size())));
                }
                let img = ext.image_at(p, a, b);
                if cli.json {
                    print_json(&json!({
                        "lambda": lambda.to_string(),
                        "exp": p,
                        "a": a,
                        "b": b,
                        "matrix": img.row_strings(),
                    }));
                } else {
                    print!("{img}");
                }
                return Ok(0);
            }
            // Consistency report over a symmetric exponent window.
            let size = d.size();
            let mut agree = true;
            for p in 1..=3i64 {
                for a in 1..=size {
                    for b in 1..=size {
                        if ext.image_at(p, a, b)
                            != rep.image(&MatrixTypeElement::elem(p as u32, a, b))
                        {
                            agree = false;
                        }
                    }
                }
            }
            let mut multiplicative = true;
            'outer: for p in -3..=3i64 {
                for q in -3..=3i64 {
                    for a in 1..=size {
                        for b in 1..=size {
                            for a2 in 1..=size {
                                for b2 in 1..=size {
                                    let lhs =
                                        ext.image_at(p, a, b).mul(&ext.image_at(q, a2, b2));
                                    let rhs = match d.entry(b, a2) {
                                        SandwichEntry::Theta => ext.zero_image(),
                                        SandwichEntry::Power(k) => {
                                            ext.image_at(p + q + k as i64, a, b2)
                                        }
                                    };
                                    if lhs != rhs {
                                        multiplicative = false;
                                        break 'outer;
                                    }
                                }
                            }
                        }
                    }
                }
            }
            let e = ext.idempotent();
            if cli.json {
                print_json(&json!({
                    "lambda": lambda.to_string(),
                    "dim": rep.dim(),
                    "idempotent": e.row_strings(),
                    "idempotent_rank": e.rank(),
                    "agrees_with_rep": agree,
                    "multiplicative": multiplicative,
                }));
            } else {
                println!("dim = {}", rep.dim());
                println!("e =");
                for line in e.to_string().lines() {
                    println!("  {line}");
                }
                println!("rank(e) = {}", e.rank());
                println!(
                    "agreement on positive exponents: {}",
                    if agree { "ok" } else { "FAILED" }
                );
                println!(
                    "extension multiplicativity (p,q in -3..=3): {}",
                    if multiplicative { "ok" } else { "FAILED" }
                );
            }
            Ok(if agree && multiplicative { 0 } else { 1 })
        }
        Cmd::Catalog { src, data } => {
            let g = load_graph(&src)?;
            let loaded: Vec<MatrixTypeData> = data
                .iter()
                .map(|path| {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        CliError::usage(format!("cannot read data file {}: {e}", path.display()))
                    })?;
                    MatrixTypeData::load(&text)
                        .map_err(|e| CliError::domain(format!("bad sandwich data: {e}")))
                })
                .collect::<Result<_, _>>()?;
            let data_arg = if loaded.is_empty() { None } else { Some(loaded.as_slice()) };
            let report = catalog(&g, data_arg).map_err(|e| CliError::domain(e.to_string()))?;
            if cli.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", render_catalog_text(&report));
            }
            Ok(0)
        }
    }
}

fn render_catalog_text(report: &CatalogReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "PI: {}", if report.pi { "yes" } else { "no" });
    let Some(components) = &report.components else {
        return out;
    };
    if let Some(arrows) = &report.theta_prime {
        let _ = writeln!(out, "cyclic core: {} arrows", arrows.len());
    }
    for (k, c) in components.iter().enumerate() {
        let verts: Vec<String> = c.vertices.iter().map(|v| v.to_string()).collect();
        let kind = match c.length {
            Some(j) => format!("cycle of length {j}"),
            None => c.kind.clone(),
        };
        let _ = writeln!(out, "component {}: vertices {} ({kind})", k + 1, verts.join(" "));
        let idem = c
            .descriptors
            .iter()
            .filter(|d| matches!(d, RepDescriptor::Idempotent(_)))
            .count();
        let _ = writeln!(out, "  one-dimensional descriptors: {idem}");
        for d in &c.descriptors {
            if let RepDescriptor::MatrixFamily(f) = d {
                let generic = match f.generic_dim {
                    Some(d) => d.to_string(),
                    None => "?".to_string(),
                };
                let exc: Vec<String> = f
                    .exceptional
                    .iter()
                    .map(|e| format!("{} -> {}", e.lambda, e.dim))
                    .collect();
                let exc = if exc.is_empty() { "none".to_string() } else { exc.join(", ") };
                let _ = writeln!(
                    out,
                    "  family level {}: size {}, generic dim {generic}, exceptional: {exc} [{}]",
                    f.level, f.size, f.data
                );
            }
        }
    }
    if let Some(count) = report.one_dim_count {
        let _ = writeln!(out, "one-dimensional maximal ideals: {count}");
    }
    if let Some(structure) = &report.maximal_ideal_structure {
        let _ = writeln!(out, "maximal ideal structure: {structure}");
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
