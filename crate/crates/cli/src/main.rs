//! `arborep` — recognition, split trees, and minimum word-representants for
//! arborescence-like graphs from the command line.
//!
//! Exit codes: 0 success, 1 semantic negative (the graph/word merely fails a
//! property), 2 unusable input, 3 precondition violated (wrong graph class,
//! tripped safety guard).

use arborep::error::Error;
use arborep::graph::Graph;
use arborep::lab::{
    crosscheck, enumerate_connected_graphs, gen_arborescence, gen_double_arborescence,
    gen_path_of_double_arborescences, GenConfig,
};
use arborep::orientation::{arborescence_orientation, double_arborescence_orientation};
use arborep::splitdec::{
    build_clique_star_tree, classify_via_tree, AlternatedPath, CliqueStarTree, CompKind,
    GraphClass, RecognitionReport, TreelikeObstruction,
};
use arborep::wordrep::{brute_force_min_length, double_arb_minword, represents, Word};
use arborep::VertexSet;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "arborep",
    version,
    about = "Recognition and minimum word-representants for arborescence-like graphs",
    after_help = "Graphs are edge lists: a vertex count, then one 'u v' pair per line;\n\
                  '#' starts a comment and '-' reads from standard input."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Comparability graph of one rooted tree.
    Arb,
    /// Two rooted trees glued at a shared root.
    DoubleArb,
    /// k strict double-arborescences with their roots on a path.
    Path,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a graph (arborescence / double-arborescence / treelike /
    /// distance-hereditary / none) with witnesses.
    #[command(after_help = "Example:\n  printf '4\\n0 1\\n0 2\\n0 3\\n' | arborep recognize -")]
    Recognize {
        /// Edge-list file, or '-' for standard input.
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the clique-star split-decomposition tree.
    #[command(after_help = "Example:\n  arborep tree graph.txt --format dot | dot -Tsvg > tree.svg")]
    Tree {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Construct a verified minimum word-representant (length 2n − k).
    #[command(after_help = "Example:\n  printf '3\\n0 1\\n0 2\\n1 2\\n' | arborep minword -")]
    Minword {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check whether a word represents a graph.
    #[command(after_help = "Example:\n  printf '2\\n0 1\\n' | arborep verify - '0 1 0 1'")]
    Verify {
        input: String,
        /// The word, space-separated vertex labels.
        word: String,
    },
    /// Generate a random instance (deterministic per seed).
    #[command(after_help = "Example:\n  arborep generate --kind double-arb --n 30 --seed 7 --strict")]
    Generate {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Total vertex count.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Soft cap on children per node.
        #[arg(long, default_value_t = 3)]
        branching: usize,
        /// Force both sides of each double-arborescence to be nontrivial.
        #[arg(long)]
        strict: bool,
        /// Number of blocks (path kind only).
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Cross-check every characterization on one graph, or exhaustively on
    /// all connected graphs up to --exhaustive vertices.
    #[command(after_help = "Example:\n  arborep crosscheck --exhaustive 5")]
    Crosscheck {
        /// Edge-list file or '-'; omit when using --exhaustive.
        input: Option<String>,
        /// Sweep all connected labeled graphs on 1..=N vertices (N ≤ 7).
        #[arg(long)]
        exhaustive: Option<usize>,
    },
    /// Brute-force the exact minimum representant length.
    #[command(after_help = "Example:\n  printf '4\\n0 1\\n1 2\\n2 3\\n' | arborep oracle - --cap 8")]
    Oracle {
        input: String,
        /// Longest word length to try (default 2n).
        #[arg(long)]
        cap: Option<usize>,
        /// Run even past the built-in size guard.
        #[arg(long)]
        force: bool,
    },
}

// ---- failure plumbing -------------------------------------------------------

struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure { code: 2, msg: msg.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::OracleGuard { .. } => 3,
            _ => 2,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn read_graph(input: &str) -> Result<Graph, Failure> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::usage(format!("cannot read standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(input)
            .map_err(|e| Failure::usage(format!("cannot read {input}: {e}")))?
    };
    Ok(Graph::parse(&text)?)
}

fn no_dot(format: Format) -> Result<(), Failure> {
    if format == Format::Dot {
        Err(Failure::usage("dot output is only available for the tree subcommand"))
    } else {
        Ok(())
    }
}

fn names(g: &Graph, vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter().map(|v| g.name(v)).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.cmd {
        Cmd::Recognize { input, format } => {
            no_dot(format)?;
            let g = read_graph(&input)?;
            let report = classify_via_tree(&g)?;
            match format {
                Format::Text => println!("{}", recognize_text(&g, &report)?),
                Format::Json => println!("{}", recognize_json(&g, &report)?),
                Format::Dot => unreachable!(),
            }
            Ok(0)
        }
        Cmd::Tree { input, format } => {
            let g = read_graph(&input)?;
            match build_clique_star_tree(&g)? {
                None => {
                    println!("not distance-hereditary: no clique-star tree exists");
                    Ok(1)
                }
                Some(tree) => {
                    match format {
                        Format::Text => print!("{}", tree_text(&tree)),
                        Format::Json => println!("{}", tree.to_json()),
                        Format::Dot => print!("{}", tree.to_dot()),
                    }
                    Ok(0)
                }
            }
        }
        Cmd::Minword { input, format } => {
            no_dot(format)?;
            let g = read_graph(&input)?;
            let Some(o) = double_arborescence_orientation(&g)? else {
                eprintln!("{}", minword_refusal(&g)?);
                return Ok(3);
            };
            let w = double_arb_minword(&o);
            let check = represents(&w, &g)?;
            assert!(check.ok, "construction must self-verify before printing");
            let chain = o.longest_chain();
            let (n, k) = (g.n(), chain.len());
            match format {
                Format::Text => {
                    println!("word: {}", w.display_with(&g));
                    println!("n: {n}");
                    println!("k: {k}");
                    println!("length: {} (= 2n − k)", w.len());
                    println!("chain: {}", names(&g, chain));
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "word": w.letters().iter().map(|&l| g.name(l)).collect::<Vec<_>>(),
                        "n": n,
                        "k": k,
                        "length": w.len(),
                        "chain": chain.iter().map(|&v| g.name(v)).collect::<Vec<_>>(),
                        "verified": true,
                    })
                ),
                Format::Dot => unreachable!(),
            }
            Ok(0)
        }
        Cmd::Verify { input, word } => {
            let g = read_graph(&input)?;
            let w = Word::parse(&word, &g)?;
            match represents(&w, &g) {
                Ok(check) if check.ok => {
                    println!("word represents the graph (length {})", w.len());
                    Ok(0)
                }
                Ok(check) => {
                    let f = check.failure.expect("failing check carries a witness");
                    let pair = VertexSet::from_iter(g.n(), [f.a, f.b]);
                    let sub = w.restrict(&pair);
                    println!(
                        "pair ({}, {}): {}; restriction: {}",
                        g.name(f.a),
                        g.name(f.b),
                        f.reason(),
                        sub.display_with(&g)
                    );
                    Ok(1)
                }
                Err(e @ Error::WordMissingVertex(_)) => {
                    // Not covering a vertex is a failing verification, not
                    // unusable input.
                    println!("{e}");
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
        Cmd::Generate { kind, n, seed, branching, strict, k, format } => {
            no_dot(format)?;
            let cfg = GenConfig { n, seed, branching, strict };
            let (g, orientation): (Graph, Option<Value>) = match kind {
                Kind::Arb => {
                    let (g, p) = gen_arborescence(&cfg)?;
                    let js = p.to_json();
                    (g, Some(js))
                }
                Kind::DoubleArb => {
                    let (g, o) = gen_double_arborescence(&cfg)?;
                    let js = o.to_json();
                    (g, Some(js))
                }
                Kind::Path => (gen_path_of_double_arborescences(k, &cfg)?, None),
            };
            match format {
                Format::Text => print!("{}", g.to_edge_list()),
                Format::Json => println!(
                    "{}",
                    json!({ "graph": g.to_edge_list(), "orientation": orientation })
                ),
                Format::Dot => unreachable!(),
            }
            Ok(0)
        }
        Cmd::Crosscheck { input, exhaustive } => match (input, exhaustive) {
            (Some(_), Some(_)) => {
                Err(Failure::usage("pass either a graph or --exhaustive, not both"))
            }
            (None, None) => Err(Failure::usage("pass a graph file ('-' for stdin) or --exhaustive N")),
            (Some(path), None) => {
                let g = read_graph(&path)?;
                let report = crosscheck(&g)?;
                println!("{}", report.to_json(&g));
                Ok(u8::from(!report.ok()))
            }
            (None, Some(cap)) => {
                let mut graphs = 0u64;
                let mut bad = 0u64;
                for n in 1..=cap {
                    for g in enumerate_connected_graphs(n)? {
                        let report = crosscheck(&g).expect("enumerated graphs are connected");
                        graphs += 1;
                        if !report.ok() {
                            bad += 1;
                            println!("{}", report.to_json(&g));
                        }
                    }
                }
                println!("checked {graphs} connected graphs on n ≤ {cap}: {bad} mismatches");
                Ok(u8::from(bad > 0))
            }
        },
        Cmd::Oracle { input, cap, force } => {
            let g = read_graph(&input)?;
            let cap = cap.unwrap_or(2 * g.n());
            match brute_force_min_length(&g, cap, force)? {
                Some((len, w)) => {
                    println!("minimum length: {len}");
                    println!("word: {}", w.display_with(&g));
                    Ok(0)
                }
                None => {
                    println!("no representing word within length {cap}");
                    Ok(1)
                }
            }
        }
    }
}

// ---- rendering ---------------------------------------------------------------

fn class_root(g: &Graph, report: &RecognitionReport) -> Result<Option<usize>, Error> {
    Ok(match report.class() {
        GraphClass::Arborescence => arborescence_orientation(g)?.map(|p| p.root()),
        GraphClass::StrictDoubleArborescence => {
            double_arborescence_orientation(g)?.map(|o| o.root())
        }
        _ => None,
    })
}

fn path_text(tree: &CliqueStarTree, path: &AlternatedPath) -> String {
    path.describe(tree)
}

fn recognize_text(g: &Graph, report: &RecognitionReport) -> Result<String, Error> {
    let mut out = String::new();
    match report.class() {
        GraphClass::Arborescence => {
            let root = class_root(g, report)?.expect("class guarantees an orientation");
            write!(out, "arborescence (root {})", g.name(root)).unwrap();
        }
        GraphClass::StrictDoubleArborescence => {
            let root = class_root(g, report)?.expect("class guarantees an orientation");
            write!(out, "double-arborescence (strict; root {})", g.name(root)).unwrap();
            if let (Some(tree), Some(p)) = (&report.tree, &report.center_center_path) {
                write!(out, "\n  center-center path: {}", path_text(tree, p)).unwrap();
            }
        }
        GraphClass::TreelikeComparability => {
            write!(out, "treelike comparability; not double-arborescence").unwrap();
            if let (Some(tree), Some(p)) = (&report.tree, &report.s_leaf_path) {
                write!(out, " (s-leaf path: {})", path_text(tree, p)).unwrap();
            }
        }
        GraphClass::DistanceHereditary => {
            write!(out, "distance-hereditary; not treelike comparability").unwrap();
            match (&report.tree, &report.treelike_obstruction) {
                (Some(tree), Some(TreelikeObstruction::CliqueMarks { component, marked })) => {
                    let labels: Vec<String> =
                        marked.iter().map(|&m| tree.node_label(m)).collect();
                    write!(
                        out,
                        " (clique component {component} carries {} marked vertices: {})",
                        marked.len(),
                        labels.join(" ")
                    )
                    .unwrap();
                }
                (Some(tree), Some(TreelikeObstruction::CenterCenterEdge { a, b })) => {
                    write!(
                        out,
                        " (marked edge joins star centers {} and {})",
                        tree.node_label(*a),
                        tree.node_label(*b)
                    )
                    .unwrap();
                }
                _ => {}
            }
        }
        GraphClass::NotDistanceHereditary => {
            write!(out, "not distance-hereditary").unwrap();
            if let Some(core) = &report.dh_obstruction {
                write!(out, " (irreducible core: {})", names(g, core.iter())).unwrap();
            }
        }
    }
    Ok(out)
}

fn recognize_json(g: &Graph, report: &RecognitionReport) -> Result<Value, Error> {
    let witness = match report.class() {
        GraphClass::NotDistanceHereditary => report.dh_obstruction.as_ref().map(|core| {
            json!({
                "kind": "irreducible-core",
                "vertices": core.iter().map(|v| g.name(v)).collect::<Vec<_>>(),
            })
        }),
        GraphClass::DistanceHereditary => {
            match (&report.tree, &report.treelike_obstruction) {
                (Some(tree), Some(TreelikeObstruction::CliqueMarks { component, marked })) => {
                    Some(json!({
                        "kind": "clique-marks",
                        "component": component,
                        "marked": marked.iter().map(|&m| tree.node_label(m)).collect::<Vec<_>>(),
                    }))
                }
                (Some(tree), Some(TreelikeObstruction::CenterCenterEdge { a, b })) => {
                    Some(json!({
                        "kind": "center-center-edge",
                        "a": tree.node_label(*a),
                        "b": tree.node_label(*b),
                    }))
                }
                _ => None,
            }
        }
        GraphClass::TreelikeComparability => {
            match (&report.tree, &report.s_leaf_path) {
                (Some(tree), Some(p)) => Some(json!({
                    "kind": "s-leaf-path",
                    "path": path_text(tree, p),
                })),
                _ => None,
            }
        }
        GraphClass::StrictDoubleArborescence => {
            match (&report.tree, &report.center_center_path) {
                (Some(tree), Some(p)) => Some(json!({
                    "kind": "center-center-path",
                    "path": path_text(tree, p),
                })),
                _ => None,
            }
        }
        GraphClass::Arborescence => None,
    };
    Ok(json!({
        "class": report.class().as_str(),
        "is_dh": report.is_dh,
        "is_treelike": report.is_treelike,
        "is_double_arb": report.is_double_arb,
        "is_arb": report.is_arb,
        "root": class_root(g, report)?.map(|r| g.name(r)),
        "witness": witness,
    }))
}

fn tree_text(tree: &CliqueStarTree) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "nodes: {} ({} pendants)",
        tree.node_count(),
        tree.n()
    )
    .unwrap();
    if tree.is_degenerate() {
        writeln!(out, "degenerate tree: no components").unwrap();
    }
    for (ci, comp) in tree.components().iter().enumerate() {
        let members: Vec<String> = comp.members.iter().map(|&m| tree.node_label(m)).collect();
        match comp.kind {
            CompKind::Clique => {
                writeln!(out, "component {ci} (clique): {}", members.join(" ")).unwrap()
            }
            CompKind::Star => writeln!(
                out,
                "component {ci} (star, center {}): {}",
                tree.node_label(comp.center.expect("stars have centers")),
                members.join(" ")
            )
            .unwrap(),
        }
    }
    let edges: Vec<String> = tree
        .t_edges()
        .iter()
        .map(|&(a, b)| format!("{}-{}", tree.node_label(a), tree.node_label(b)))
        .collect();
    writeln!(out, "tree edges: {}", edges.join(" ")).unwrap();
    out
}

fn minword_refusal(g: &Graph) -> Result<String, Error> {
    if let Some(p4) = g.find_induced_copy(&Graph::path(4))? {
        return Ok(format!(
            "not a double-arborescence (induced P4: {})",
            names(g, p4)
        ));
    }
    if let Some(c4) = g.find_induced_copy(&Graph::cycle(4))? {
        return Ok(format!(
            "not a double-arborescence (induced C4 without a dominating root: {})",
            names(g, c4)
        ));
    }
    Ok("not a double-arborescence".to_string())
}
