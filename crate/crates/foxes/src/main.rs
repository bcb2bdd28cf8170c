//! Command-line front end. Payload goes to stdout as one JSON object (or
//! graph6 line) per input graph so commands compose in pipelines;
//! diagnostics go to stderr. Exit codes: 0 success, 1 a verified
//! statement was violated, 2 usage or format errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use foxes::connectivity::{contractible_edges, smallest_separating_sets, vertex_connectivity};
use foxes::constructions::{cycle_lex_apex, prism, prism_plus, triangle_expand, wheel};
use foxes::format::{emit_edge_list, emit_graph6, parse_edge_list, to_dot};
use foxes::fragments::{
    build_r_family, classify_fragment, color_tree_edges, s_atoms, s_ends, s_fragments, SFragment,
    SetFamily,
};
use foxes::harness::{
    connected_classes_up_to, cubic_classes_up_to, fox_census, parse_graph6_corpus, verify,
    TheoremId, VerifyParams, MAX_CLASS_ORDER, MAX_CUBIC_ORDER,
};
use foxes::trees::{
    count_spanning_trees, find_fox_certificate, min_contractible_over, visit_dfs_trees, RootedTree,
    TreeMode, DEFAULT_TREE_CAP,
};
use foxes::{Edge, Error, Graph};
use serde::Serialize;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "foxes",
    version,
    about = "Contractible edges, fragments, and spanning-tree statements of k-connected graphs"
)]
struct Cli {
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

/// Graph input: an inline graph6 string, a file of graph6 lines, or (when
/// both are absent) graph6 lines on standard input.
#[derive(Args)]
struct Input {
    /// graph6 string (reads standard input when omitted and --file unset).
    graph6: Option<String>,

    /// File with one graph6 line per graph.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl Input {
    fn read(&self) -> Result<Vec<Graph>, Error> {
        let text = match (&self.graph6, &self.file) {
            (Some(_), Some(_)) => {
                return Err(Error::Precondition(
                    "give the graph inline or with --file, not both".to_string(),
                ))
            }
            (Some(lit), None) => lit.clone(),
            (None, Some(path)) => std::fs::read_to_string(path)
                .map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?,
            (None, None) => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| Error::Precondition(format!("stdin: {e}")))?;
                buf
            }
        };
        let graphs = parse_graph6_corpus(&text)?;
        if graphs.is_empty() {
            return Err(Error::Precondition("no input graphs".to_string()));
        }
        Ok(graphs)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Connectivity, smallest separating sets, and contractible edges.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Connectivity parameter (default: the graph's connectivity).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Emit a named construction as graph6.
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Decide foxhood: is there a spanning tree without k-contractible
    /// edges?
    Fox {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Count spanning or DFS trees; optionally minimize contractible
    /// tree edges over them.
    Trees {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = ModeArg::Spanning)]
        mode: ModeArg,
        #[arg(long)]
        k: usize,
        /// Also report the minimum contractible-edge count and a witness.
        #[arg(long)]
        min: bool,
        /// Abort when the enumeration exceeds this many trees.
        #[arg(long, default_value_t = DEFAULT_TREE_CAP)]
        cap: u64,
    },
    /// Fragment systems of one spanning tree: fragments, ends, atoms, the
    /// derived edge family, tree-edge colors, and classifications.
    Fragments {
        #[command(flatten)]
        input: Input,
        /// Tree edges as U-V pairs, e.g. "0-1,0-2,3-4".
        #[arg(long)]
        tree: String,
        /// Optional root for the tree.
        #[arg(long)]
        root: Option<usize>,
        #[arg(long)]
        k: usize,
    },
    /// Sweep one statement over a corpus and emit a JSON report.
    Verify {
        /// Statement to check: T1..T7i/T7ii, C1, C2, L1, L2,
        /// MaderGeneral, MaderSpecial.
        #[arg(long)]
        theorem: String,
        /// Largest order to check (default depends on the statement).
        #[arg(long)]
        max_n: Option<usize>,
        /// Connectivity range, e.g. "3..5" or a single "4".
        #[arg(long)]
        k: Option<String>,
        /// graph6 corpus file (default: the built-in class enumeration).
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Drop the hypothesis filter (negative control; a healthy arm
        /// must then report violations).
        #[arg(long)]
        weaken: bool,
        #[arg(long, default_value_t = DEFAULT_TREE_CAP)]
        tree_cap: u64,
    },
    /// Fox census over a corpus: one verdict line per k-connected graph.
    Census {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
    },
    /// Convert between graph6, edge-list, and DOT formats.
    Convert {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = FormatArg::G6)]
        from: FormatArg,
        #[arg(long, value_enum)]
        to: FormatArg,
        /// With --to dot: dash the k-contractible edges.
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Cycle of the given length plus a hub joined to every rim vertex.
    Wheel { rim: usize },
    /// Two triangles joined by a perfect matching.
    Prism,
    /// The prism plus one extra edge.
    PrismPlus,
    /// Cycle of blobs of (k-1)/2 vertices plus an apex (odd k >= 3).
    LexApex { n: usize, k: usize },
    /// Replace every vertex of a cubic graph by a triangle.
    Expand {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Spanning,
    Dfs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    G6,
    Edges,
    Dot,
}

#[derive(Serialize)]
struct AnalyzeOut {
    graph6: String,
    order: usize,
    size: usize,
    kappa: usize,
    k: usize,
    separating_sets: usize,
    contractible: Vec<[usize; 2]>,
    non_contractible: Vec<[usize; 2]>,
}

#[derive(Serialize)]
struct FoxOut {
    graph6: String,
    k: usize,
    is_fox: bool,
    certificate: Option<Vec<[usize; 2]>>,
}

#[derive(Serialize)]
struct TreesOut {
    graph6: String,
    k: usize,
    mode: &'static str,
    count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    min: Option<MinOut>,
}

#[derive(Serialize)]
struct MinOut {
    contractible: usize,
    tree: Vec<[usize; 2]>,
    root: Option<usize>,
}

#[derive(Serialize)]
struct FragOut {
    body: Vec<usize>,
    boundary: Vec<usize>,
    witness: Vec<usize>,
}

#[derive(Serialize)]
struct ColorOut {
    edge: [usize; 2],
    color: String,
}

#[derive(Serialize)]
struct ClassOut {
    body: Vec<usize>,
    size_class: String,
    good: bool,
    very_good: bool,
    threshold: String,
}

#[derive(Serialize)]
struct FragmentsOut {
    graph6: String,
    k: usize,
    tree: Vec<[usize; 2]>,
    s_fragments: Vec<FragOut>,
    ends: Vec<FragOut>,
    atoms: Vec<FragOut>,
    r_family: Vec<[usize; 2]>,
    colors: Vec<ColorOut>,
    classifications: Vec<ClassOut>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let build = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
        if let Err(e) = build {
            eprintln!("error: could not size the worker pool: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Analyze { input, k } => {
            for g in input.read()? {
                let kappa = vertex_connectivity(&g);
                let k = k.unwrap_or(kappa);
                let contractible = if k == 0 {
                    Vec::new()
                } else {
                    contractible_edges(&g, k)?
                };
                let non_contractible: Vec<[usize; 2]> = g
                    .edges()
                    .iter()
                    .filter(|e| !contractible.contains(e))
                    .map(|e| [e.u(), e.v()])
                    .collect();
                emit(&AnalyzeOut {
                    graph6: emit_graph6(&g),
                    order: g.order(),
                    size: g.edge_count(),
                    kappa,
                    k,
                    separating_sets: smallest_separating_sets(&g).len(),
                    contractible: pairs(&contractible),
                    non_contractible,
                });
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { what } => {
            for g in generate(what)? {
                println!("{}", emit_graph6(&g));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fox { input, k } => {
            for g in input.read()? {
                let cert = find_fox_certificate(&g, k)?;
                emit(&FoxOut {
                    graph6: emit_graph6(&g),
                    k,
                    is_fox: cert.is_some(),
                    certificate: cert.map(|c| pairs(c.tree.edges())),
                });
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Trees {
            input,
            mode,
            k,
            min,
            cap,
        } => {
            for g in input.read()? {
                let (mode_name, tree_mode) = match mode {
                    ModeArg::Spanning => ("spanning", TreeMode::Spanning),
                    ModeArg::Dfs => ("dfs", TreeMode::Dfs),
                };
                let count = match tree_mode {
                    TreeMode::Spanning => count_spanning_trees(&g, cap)?,
                    TreeMode::Dfs => visit_dfs_trees(&g, cap, |_| {})?,
                };
                let min = if min {
                    let (c, witness) = min_contractible_over(&g, k, tree_mode, cap)?;
                    Some(MinOut {
                        contractible: c,
                        tree: pairs(witness.edges()),
                        root: witness.root(),
                    })
                } else {
                    None
                };
                emit(&TreesOut {
                    graph6: emit_graph6(&g),
                    k,
                    mode: mode_name,
                    count,
                    min,
                });
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fragments {
            input,
            tree,
            root,
            k,
        } => {
            let edges = parse_tree_arg(&tree)?;
            for g in input.read()? {
                let q = RootedTree::new(edges.clone(), root);
                let family = SetFamily::tree_edges(&q);
                let frags = s_fragments(&g, &family);
                let classifications = frags
                    .iter()
                    .map(|f| {
                        let c = classify_fragment(&g, &q, &f.fragment, k)?;
                        Ok(ClassOut {
                            body: f.body().iter().collect(),
                            size_class: format!("{:?}", c.size).to_ascii_lowercase(),
                            good: c.good,
                            very_good: c.very_good,
                            threshold: c.threshold.to_string(),
                        })
                    })
                    .collect::<Result<Vec<_>, Error>>()?;
                emit(&FragmentsOut {
                    graph6: emit_graph6(&g),
                    k,
                    tree: pairs(q.edges()),
                    s_fragments: frag_out(&frags),
                    ends: frag_out(&s_ends(&g, &family)),
                    atoms: frag_out(&s_atoms(&g, &family)),
                    r_family: build_r_family(&g, &q, k)?
                        .sets()
                        .iter()
                        .map(|s| {
                            let mut it = s.iter();
                            [it.next().unwrap(), it.next().unwrap()]
                        })
                        .collect(),
                    colors: color_tree_edges(&g, &q, k)?
                        .into_iter()
                        .map(|(e, c)| ColorOut {
                            edge: [e.u(), e.v()],
                            color: c.to_string(),
                        })
                        .collect(),
                    classifications,
                });
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            theorem,
            max_n,
            k,
            corpus,
            out,
            weaken,
            tree_cap,
        } => {
            let theorem: TheoremId = theorem.parse()?;
            let mut params = VerifyParams::for_theorem(theorem);
            if let Some(n) = max_n {
                params.max_n = n;
            }
            if let Some(spec) = k {
                let (lo, hi) = parse_k_range(&spec)?;
                params = params.with_k(lo, hi);
            }
            params.tree_cap = tree_cap;
            params.weaken_hypothesis = weaken;
            let corpus = match corpus {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?;
                    parse_graph6_corpus(&text)?
                }
                None => builtin_corpus(theorem, params.max_n)?,
            };
            let report = verify(theorem, &corpus, &params);
            eprintln!(
                "{theorem}: {} graphs, {} checked, {} skipped, {} inconclusive, {} violations",
                report.corpus_size,
                report.checked,
                report.skipped,
                report.inconclusive.len(),
                report.violations.len()
            );
            let json = report.to_json();
            match out {
                Some(path) => std::fs::write(&path, &json)
                    .map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?,
                None => print!("{json}"),
            }
            Ok(if report.violations.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Census { input, k } => {
            let corpus = input.read()?;
            for entry in fox_census(&corpus, k) {
                emit(&entry);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { input, from, to, k } => {
            let graphs = match from {
                FormatArg::G6 => input.read()?,
                FormatArg::Edges => {
                    let text = match (&input.graph6, &input.file) {
                        (Some(lit), None) => lit.clone(),
                        (None, Some(path)) => std::fs::read_to_string(path)
                            .map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?,
                        (None, None) => {
                            let mut buf = String::new();
                            std::io::stdin()
                                .read_to_string(&mut buf)
                                .map_err(|e| Error::Precondition(format!("stdin: {e}")))?;
                            buf
                        }
                        (Some(_), Some(_)) => {
                            return Err(Error::Precondition(
                                "give the graph inline or with --file, not both".to_string(),
                            ))
                        }
                    };
                    vec![parse_edge_list(&text)?]
                }
                FormatArg::Dot => {
                    return Err(Error::Precondition(
                        "DOT is an output format only".to_string(),
                    ))
                }
            };
            for g in graphs {
                match to {
                    FormatArg::G6 => println!("{}", emit_graph6(&g)),
                    FormatArg::Edges => print!("{}", emit_edge_list(&g)),
                    FormatArg::Dot => {
                        let dashed = match k {
                            Some(k) => contractible_edges(&g, k)?,
                            None => Vec::new(),
                        };
                        print!("{}", to_dot(&g, &dashed, &[]));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn generate(what: GenCommand) -> Result<Vec<Graph>, Error> {
    Ok(match what {
        GenCommand::Wheel { rim } => vec![wheel(rim)?],
        GenCommand::Prism => vec![prism()],
        GenCommand::PrismPlus => vec![prism_plus()],
        GenCommand::LexApex { n, k } => vec![cycle_lex_apex(n, k)?],
        GenCommand::Expand { input } => input
            .read()?
            .iter()
            .map(triangle_expand)
            .collect::<Result<_, _>>()?,
    })
}

fn builtin_corpus(theorem: TheoremId, max_n: usize) -> Result<Vec<Graph>, Error> {
    match theorem {
        TheoremId::T4 | TheoremId::C2 => {
            if max_n > MAX_CUBIC_ORDER {
                eprintln!(
                    "note: built-in cubic corpus stops at {MAX_CUBIC_ORDER} vertices; larger \
                     graphs need --corpus"
                );
            }
            cubic_classes_up_to(max_n.min(MAX_CUBIC_ORDER))
        }
        _ => {
            if max_n > MAX_CLASS_ORDER {
                eprintln!(
                    "note: built-in corpus stops at {MAX_CLASS_ORDER} vertices; larger graphs \
                     need --corpus"
                );
            }
            connected_classes_up_to(max_n.min(MAX_CLASS_ORDER))
        }
    }
}

fn parse_k_range(spec: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::Precondition(format!("bad k range '{spec}', expected K or LO..HI"));
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo = lo.trim().parse().map_err(|_| bad())?;
        let hi = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok((lo, hi))
    } else {
        let k = spec.trim().parse().map_err(|_| bad())?;
        Ok((k, k))
    }
}

fn parse_tree_arg(s: &str) -> Result<Vec<Edge>, Error> {
    s.split(',')
        .map(|pair| {
            let bad = || Error::Precondition(format!("bad tree edge '{pair}', expected U-V"));
            let (a, b) = pair.trim().split_once('-').ok_or_else(bad)?;
            Edge::new(
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            )
        })
        .collect()
}

fn pairs(edges: &[Edge]) -> Vec<[usize; 2]> {
    edges.iter().map(|e| [e.u(), e.v()]).collect()
}

fn frag_out(frags: &[SFragment]) -> Vec<FragOut> {
    frags
        .iter()
        .map(|f| FragOut {
            body: f.body().iter().collect(),
            boundary: f.boundary().iter().collect(),
            witness: f.witness.iter().collect(),
        })
        .collect()
}

fn emit<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("payload serializes")
    );
}
