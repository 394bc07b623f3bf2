//! Command-line front end for the monopos library.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a search budget was
//! exceeded (for `check`: instances were skipped), 3 `check` found failures.

mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use monopos::{
    cartesian_product, classify_mp_set, find_bad_path, gp_number, invariants, lex_mp,
    lexicographic_product, load_corpus, monophonic_interval, mp_independent, mp_lower, mp_number,
    run_checks, serialize_graph, Budget, CanonicalTag, CheckId, CheckReport, CheckerConfig,
    CorpusSource, CorpusSpec, Error, GraphFormat, ProductGraph, Result, Shortcut, SolveResult,
    VertexSet,
};
use serde_json::json;

use crate::input::{display_name, load_graph};

/// Exact monophonic position computations on graphs and graph products.
///
/// Graph arguments accept a family descriptor such as `path:4`, `gear:5` or
/// `complete_bipartite:2,3`, the name of a graph6 or edge-list file, or `-`
/// for graph6 on standard input.
#[derive(Parser)]
#[command(name = "monopos", version)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Cap on search nodes per solver call
    #[arg(long, global = true, env = "MONOPOS_BUDGET", value_name = "NODES")]
    budget: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, size, clique number and related structural invariants
    Invariants { graph: String },
    /// Largest monophonic position set
    Mp { graph: String },
    /// Largest general (geodesic) position set
    Gp { graph: String },
    /// Smallest maximal monophonic position set
    MpLower { graph: String },
    /// Largest independent monophonic position set
    MpI { graph: String },
    /// All vertices on induced paths between two vertices
    Interval { graph: String, u: usize, v: usize },
    /// Induced path through three members of a set, if one exists
    BadPath {
        graph: String,
        /// Comma-separated vertex indices
        #[arg(long, value_delimiter = ',', required = true, value_name = "V,V,...")]
        set: Vec<usize>,
    },
    /// Build a product graph and print it as graph6
    Product {
        #[arg(long, value_enum, default_value_t = Kind::Cartesian)]
        kind: Kind,
        g: String,
        h: String,
    },
    /// Classify a position set of a Cartesian product
    Classify {
        #[arg(long, value_enum, default_value_t = Kind::Cartesian)]
        kind: Kind,
        g: String,
        h: String,
        /// Comma-separated flat product vertex indices
        #[arg(long, value_delimiter = ',', required = true, value_name = "V,V,...")]
        set: Vec<usize>,
    },
    /// Position number of a lexicographic product by closed formula
    LexMp { g: String, h: String },
    /// Verify structural claims against exhaustive small-graph corpora
    Check {
        /// Comma-separated check ids or names; all when omitted
        #[arg(long, value_delimiter = ',', value_name = "C1,C5,...")]
        checks: Option<Vec<String>>,
        /// Largest order in the single-graph corpus
        #[arg(long, default_value_t = 6)]
        max_order: usize,
        /// Largest factor order in the Cartesian pair corpus
        #[arg(long, default_value_t = 4)]
        cart_max_order: usize,
        /// Largest first-factor order in the lexicographic pair corpus
        #[arg(long, default_value_t = 4)]
        lex_max_g: usize,
        /// Largest second-factor order in the lexicographic pair corpus
        #[arg(long, default_value_t = 3)]
        lex_max_h: usize,
        /// Deduplicate corpora up to isomorphism
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        dedup: bool,
        /// Read corpora from a graph6 file instead of generating them
        #[arg(long, value_name = "PATH")]
        corpus_file: Option<PathBuf>,
    },
    /// Print a connected-graph corpus as graph6, one per line
    Generate {
        /// Largest order to enumerate
        #[arg(long)]
        max_order: usize,
        /// Smallest order to enumerate
        #[arg(long, default_value_t = 1)]
        min_order: usize,
        /// One representative per isomorphism class
        #[arg(long, default_value_t = true, action = ArgAction::Set)]
        dedup: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Cartesian,
    #[value(alias = "lexicographic")]
    Lex,
}

fn main() -> ExitCode {
    // Restore the default SIGPIPE disposition so `monopos ... | head` dies
    // quietly instead of panicking when the reader closes the pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let budget = cli.budget.map(Budget::nodes).unwrap_or(Budget::UNLIMITED);
    let json = cli.json;
    match cli.command {
        Command::Invariants { graph } => {
            let g = load_graph(&graph)?;
            let inv = invariants(&g);
            let name = display_name(&g);
            if json {
                println!("{}", json!({ "graph": name, "invariants": inv }));
            } else {
                println!("graph: {name}");
                println!("order: {}", inv.order);
                println!("size: {}", inv.size);
                println!("clique number: {}", inv.omega);
                println!("independence number: {}", inv.alpha);
                println!("max degree: {}", inv.max_degree);
                println!("max leaf neighbours: {}", inv.delta1);
                println!("simplicial vertices: {}", inv.simplicials);
                println!("sigma: {}", inv.sigma);
                println!("triangle-free: {}", yes_no(inv.triangle_free));
                println!("connected: {}", yes_no(inv.connected));
            }
            Ok(0)
        }
        Command::Mp { graph } => solve(&graph, "mp", budget, json, mp_number),
        Command::Gp { graph } => solve(&graph, "gp", budget, json, gp_number),
        Command::MpLower { graph } => solve(&graph, "mp⁻", budget, json, mp_lower),
        Command::MpI { graph } => solve(&graph, "mp_i", budget, json, mp_independent),
        Command::Interval { graph, u, v } => {
            let g = load_graph(&graph)?;
            let interval = monophonic_interval(&g, u, v, budget)?;
            if json {
                println!(
                    "{}",
                    json!({ "graph": display_name(&g), "u": u, "v": v, "interval": interval })
                );
            } else {
                println!("{interval}");
            }
            Ok(0)
        }
        Command::BadPath { graph, set } => {
            let g = load_graph(&graph)?;
            let s = VertexSet::from_indices(g.n(), set)?;
            let found = find_bad_path(&g, &s, budget)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "graph": display_name(&g),
                        "set": s,
                        "bad_path": found.as_ref().map(|p| p.vertices()),
                    })
                );
            } else {
                match found {
                    Some(p) => println!("bad path: {}", join(p.vertices(), " ")),
                    None => println!("no bad path: the set is in monophonic position"),
                }
            }
            Ok(0)
        }
        Command::Product { kind, g, h } => {
            let (g, h) = (load_graph(&g)?, load_graph(&h)?);
            let p = build_product(kind, &g, &h)?;
            let graph6 = serialize_graph(p.graph(), GraphFormat::Graph6);
            if json {
                println!(
                    "{}",
                    json!({
                        "kind": kind_name(kind),
                        "g": display_name(&g),
                        "h": display_name(&h),
                        "order": p.graph().n(),
                        "graph6": graph6,
                    })
                );
            } else {
                println!("{graph6}");
            }
            Ok(0)
        }
        Command::Classify { kind, g, h, set } => {
            let (g, h) = (load_graph(&g)?, load_graph(&h)?);
            let p = build_product(kind, &g, &h)?;
            let s = VertexSet::from_indices(p.graph().n(), set)?;
            let class = classify_mp_set(&p, &s, budget)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "g": display_name(&g),
                        "h": display_name(&h),
                        "set_flat": s,
                        "set_pairs": p.pairs_of(&s),
                        "class": class,
                    })
                );
            } else {
                println!("set: {}", pair_list(&p, &s));
                println!("classification: {}", tag_name(class.tag));
                if let Some(layer) = class.layer {
                    println!(
                        "layer: copies factor {:?}, fixed coordinate {}",
                        layer.factor, layer.fixed_coordinate
                    );
                }
                if let Some(f) = class.clique_factor {
                    println!("clique factor: {f:?}");
                }
            }
            Ok(0)
        }
        Command::LexMp { g, h } => {
            let (g, h) = (load_graph(&g)?, load_graph(&h)?);
            let r = lex_mp(&g, &h, budget)?;
            let p = lexicographic_product(&g, &h)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "g": display_name(&g),
                        "h": display_name(&h),
                        "value": r.value,
                        "profile": r.best_profile,
                        "shortcut": shortcut_name(r.shortcut_used),
                        "witness_flat": r.witness,
                        "witness_pairs": p.pairs_of(&r.witness),
                    })
                );
            } else {
                println!("mp({} ∘ {}) = {}", display_name(&g), display_name(&h), r.value);
                println!(
                    "profile: n_M = {}, r_M = {}",
                    r.best_profile.n_m, r.best_profile.r_m
                );
                println!("shortcut: {}", shortcut_name(r.shortcut_used));
                println!("witness: {}", pair_list(&p, &r.witness));
            }
            Ok(0)
        }
        Command::Check {
            checks,
            max_order,
            cart_max_order,
            lex_max_g,
            lex_max_h,
            dedup,
            corpus_file,
        } => {
            let ids: Vec<CheckId> = match checks {
                Some(names) => names.iter().map(|s| s.parse()).collect::<Result<_>>()?,
                None => CheckId::ALL.to_vec(),
            };
            let spec = |min_order: usize, max_order: usize| CorpusSpec {
                source: match &corpus_file {
                    Some(path) => CorpusSource::Graph6File(path.clone()),
                    None => CorpusSource::Generator,
                },
                min_order,
                max_order,
                connected_only: true,
                dedup,
            };
            let cfg = CheckerConfig {
                singles: spec(1, max_order),
                cart_factors: spec(1, cart_max_order),
                lex_g: spec(2, lex_max_g),
                lex_h: spec(2, lex_max_h),
                budget,
            };
            let reports = run_checks(&cfg, &ids)?;
            let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
            let skipped: u64 = reports.iter().map(|r| r.skipped).sum();
            if json {
                println!("{}", json!(reports));
            } else {
                for r in &reports {
                    print_report(r);
                }
                println!(
                    "{} checks: {} failures, {} skipped instances",
                    reports.len(),
                    failures,
                    skipped
                );
            }
            Ok(if failures > 0 {
                3
            } else if skipped > 0 {
                2
            } else {
                0
            })
        }
        Command::Generate { max_order, min_order, dedup } => {
            let spec = CorpusSpec {
                source: CorpusSource::Generator,
                min_order,
                max_order,
                connected_only: true,
                dedup,
            };
            let graphs = load_corpus(&spec)?;
            let lines: Vec<String> =
                graphs.iter().map(|g| serialize_graph(g, GraphFormat::Graph6)).collect();
            if json {
                println!("{}", json!(lines));
            } else {
                for line in lines {
                    println!("{line}");
                }
            }
            Ok(0)
        }
    }
}

fn solve(
    graph: &str,
    label: &str,
    budget: Budget,
    json: bool,
    solver: fn(&monopos::Graph, Budget) -> Result<SolveResult>,
) -> Result<u8> {
    let g = load_graph(graph)?;
    let r = solver(&g, budget)?;
    let name = display_name(&g);
    if json {
        println!(
            "{}",
            json!({ "graph": name, "value": r.value, "witness": r.witness, "nodes": r.nodes })
        );
    } else {
        println!("{label}({name}) = {}", r.value);
        println!("witness: {}", r.witness);
        println!("nodes: {}", r.nodes);
    }
    Ok(0)
}

fn build_product(kind: Kind, g: &monopos::Graph, h: &monopos::Graph) -> Result<ProductGraph> {
    match kind {
        Kind::Cartesian => cartesian_product(g, h),
        Kind::Lex => lexicographic_product(g, h),
    }
}

fn print_report(r: &CheckReport) {
    let status = if !r.failures.is_empty() {
        "FAIL"
    } else if r.skipped > 0 {
        "skip"
    } else {
        "ok"
    };
    let mut line = format!(
        "{:<4} {:<26} {:<5} tested {:<6} n/a {:<5} skipped {}",
        r.check_id.to_string(),
        r.name,
        status,
        r.tested,
        r.not_applicable,
        r.skipped
    );
    if !r.found.is_empty() {
        line.push_str(&format!("  found {}", r.found.len()));
    }
    println!("{line}");
    for f in &r.failures {
        if !f.graphs.is_empty() {
            println!("     graphs: {}", f.graphs.join(" "));
        }
        if let Some(w) = &f.witness {
            println!("     witness: {w}");
        }
        println!("     expected: {}", f.expected);
        println!("     actual: {}", f.actual);
    }
}

fn pair_list(p: &ProductGraph, s: &VertexSet) -> String {
    let pairs: Vec<String> =
        p.pairs_of(s).iter().map(|(a, b)| format!("({a},{b})")).collect();
    pairs.join(" ")
}

fn join(xs: &[usize], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Cartesian => "cartesian",
        Kind::Lex => "lexicographic",
    }
}

fn tag_name(tag: CanonicalTag) -> &'static str {
    match tag {
        CanonicalTag::Small => "small",
        CanonicalTag::Layered => "layered",
        CanonicalTag::Cliquey => "cliquey",
        CanonicalTag::Varied => "varied",
    }
}

fn shortcut_name(s: Shortcut) -> &'static str {
    match s {
        Shortcut::None => "none",
        Shortcut::TriangleFree => "triangle-free",
        Shortcut::CompleteG => "complete-first-factor",
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
