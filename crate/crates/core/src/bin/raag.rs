//! Command-line front end: parse graphs and words, run the recognizers,
//! grow approximations, decide embeddability, verify certificates.
//!
//! Exit codes: 0 = Yes/success, 1 = No/invalid, 2 = Unknown, 3 = budget
//! exceeded, 4 = usage error, 5 = other error.

use clap::{Args, Parser, Subcommand};
use raag_core::embed::{self, Verdict};
use raag_core::error::Error;
use raag_core::ext::{self, GrowStrategy, SearchBudget};
use raag_core::graph::{self, Graph, StandardKind};
use raag_core::io;
use raag_core::words;
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "raag",
    about = "Decide, certify and refute embeddings between right-angled Artin groups",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graph construction and recognizers
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// Word algebra in A(Γ)
    Word {
        #[command(subcommand)]
        cmd: WordCmd,
    },
    /// Extension-graph approximations
    Ext {
        #[command(subcommand)]
        cmd: ExtCmd,
    },
    /// Decide whether A(source) embeds into A(target)
    Embed(EmbedArgs),
    /// Re-check a certificate or approximation JSON file
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Run every recognizer on a graph
    Classify {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        json: bool,
    },
    /// Apply a transform and print the result
    Transform {
        #[arg(long)]
        graph: String,
        /// complement | mycielskian | clique-graph | double:<t> |
        /// cocontract:<v1,v2,...> | join:<spec> | union:<spec> |
        /// induced:<v1,v2,...>
        #[arg(long)]
        op: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        dot: Option<std::path::PathBuf>,
    },
}

#[derive(Subcommand)]
enum WordCmd {
    /// Canonical normal form of a word
    Normalize {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        json: bool,
        /// Word tokens, e.g. `b a b^-1`
        word: Vec<String>,
    },
    /// Pure factor decomposition
    PureFactors {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        json: bool,
        word: Vec<String>,
    },
    /// Generators of the centralizer
    Centralizer {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        json: bool,
        word: Vec<String>,
    },
}

#[derive(Subcommand)]
enum ExtCmd {
    /// Grow a finite approximation of the extension graph
    Grow(GrowArgs),
    /// Grow and report geometric diagnostics
    Diagnose(GrowArgs),
}

#[derive(Args)]
struct GrowArgs {
    #[arg(long)]
    graph: String,
    #[arg(long)]
    radius: Option<usize>,
    /// Comma-separated doubling vertices, e.g. `v0,v2` or `v0,c^(a)`
    #[arg(long)]
    doubling: Option<String>,
    #[arg(long, default_value_t = 2000)]
    budget: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    dot: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct EmbedArgs {
    #[arg(long)]
    source: String,
    #[arg(long)]
    target: String,
    /// Vertex cap for grown approximations
    #[arg(long, default_value_t = 1500)]
    budget: usize,
    /// Largest representative length the search will grow to
    #[arg(long, default_value_t = 3)]
    radius: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Path to a certificate or approximation JSON file
    path: std::path::PathBuf,
    #[arg(long, default_value_t = 5000)]
    budget: usize,
    #[arg(long)]
    json: bool,
}

/// Inline builders `kind:params`, `file:<path>`, and the nested `opp:` /
/// `mycielskian:` wrappers.
fn parse_graph_spec(spec: &str) -> Result<Graph, Error> {
    if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path)?;
        return io::graph_from_edge_list(&text);
    }
    if let Some(inner) = spec.strip_prefix("opp:") {
        return Ok(graph::complement(&parse_graph_spec(inner)?));
    }
    if let Some(inner) = spec.strip_prefix("mycielskian:") {
        return Ok(graph::mycielskian(&parse_graph_spec(inner)?));
    }
    let (kind, params) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("bad graph spec `{spec}`; expected kind:params")))?;
    let nums: Vec<usize> = params
        .split([',', 'x'])
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad parameter `{p}` in `{spec}`")))
        })
        .collect::<Result<_, _>>()?;
    let kind = match kind {
        "path" | "p" => StandardKind::Path,
        "cycle" | "c" => StandardKind::Cycle,
        "complete" | "k" => StandardKind::Complete,
        "complete_bipartite" | "kb" => StandardKind::CompleteBipartite,
        "discrete" | "d" => StandardKind::Discrete,
        other => return Err(Error::Parse(format!("unknown graph kind `{other}`"))),
    };
    graph::standard_graph(kind, &nums)
}

fn strategy_from(args: &GrowArgs) -> Result<GrowStrategy, Error> {
    match (&args.radius, &args.doubling) {
        (Some(r), None) => Ok(GrowStrategy::Radius(*r)),
        (None, Some(list)) => Ok(GrowStrategy::Doubling(
            list.split(',').map(|s| s.trim().to_string()).collect(),
        )),
        _ => Err(Error::Parse(
            "exactly one of --radius or --doubling is required".into(),
        )),
    }
}

fn print_graph(g: &Graph, as_json: bool) {
    if as_json {
        println!(
            "{}",
            serde_json::to_string_pretty(&io::GraphData::from(g)).unwrap()
        );
    } else {
        print!("{}", io::graph_to_edge_list(g));
    }
}

fn run() -> Result<u8, Error> {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's own help/version output is a success, not a usage error
            let kind = e.kind();
            e.print().ok();
            use clap::error::ErrorKind::*;
            return Ok(if matches!(kind, DisplayHelp | DisplayVersion) {
                0
            } else {
                4
            });
        }
    };
    match cli.command {
        Command::Graph { cmd } => run_graph(cmd),
        Command::Word { cmd } => run_word(cmd),
        Command::Ext { cmd } => run_ext(cmd),
        Command::Embed(args) => run_embed(args),
        Command::Verify(args) => run_verify(args),
    }
}

fn run_graph(cmd: GraphCmd) -> Result<u8, Error> {
    match cmd {
        GraphCmd::Classify { graph: spec, json } => {
            let g = parse_graph_spec(&spec)?;
            let r = graph::classify(&g);
            if json {
                let payload = json!({
                    "triangle_free": r.triangle_free,
                    "square_free": r.square_free,
                    "forest": r.forest,
                    "bipartite": r.bipartite,
                    "complete": r.complete,
                    "cograph": r.cograph,
                    "weakly_chordal": r.weakly_chordal,
                    "clique_number": r.clique_number,
                    "chromatic_number": r.chromatic_number,
                    "join_factors": r.join_factors.iter().map(io::GraphData::from).collect::<Vec<_>>(),
                    "complete_bipartite_params": r.complete_bipartite_params,
                });
                println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            } else {
                println!("vertices: {}  edges: {}", g.n(), g.edge_count());
                println!("triangle_free: {}", r.triangle_free);
                println!("square_free: {}", r.square_free);
                println!("forest: {}", r.forest);
                println!("bipartite: {}", r.bipartite);
                println!("complete: {}", r.complete);
                println!("cograph: {}", r.cograph);
                println!("weakly_chordal: {}", r.weakly_chordal);
                println!("clique_number: {}", r.clique_number);
                println!("chromatic_number: {}", r.chromatic_number);
                println!("join_factors: {}", r.join_factors.len());
                match r.complete_bipartite_params {
                    Some((p, q)) => println!("complete_bipartite: K_{{{p},{q}}}"),
                    None => println!("complete_bipartite: no"),
                }
            }
            Ok(0)
        }
        GraphCmd::Transform {
            graph: spec,
            op,
            json,
            dot,
        } => {
            let g = parse_graph_spec(&spec)?;
            let out = apply_transform(&g, &op)?;
            if let Some(path) = dot {
                std::fs::write(&path, io::graph_to_dot(&out, "G"))?;
            }
            print_graph(&out, json);
            Ok(0)
        }
    }
}

fn apply_transform(g: &Graph, op: &str) -> Result<Graph, Error> {
    match op {
        "complement" | "opp" => Ok(graph::complement(g)),
        "mycielskian" => Ok(graph::mycielskian(g)),
        "clique-graph" => Ok(graph::clique_graph(g)),
        _ => {
            let (name, arg) = op
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("unknown transform `{op}`")))?;
            match name {
                "double" => graph::double_along_star(g, arg),
                "cocontract" => {
                    let vs: Vec<&str> = arg.split(',').map(str::trim).collect();
                    graph::cocontract(g, &vs)
                }
                "join" => Ok(graph::combine(
                    graph::CombineMode::Join,
                    g,
                    &parse_graph_spec(arg)?,
                )),
                "union" => Ok(graph::combine(
                    graph::CombineMode::DisjointUnion,
                    g,
                    &parse_graph_spec(arg)?,
                )),
                "induced" => {
                    let vs: Vec<&str> = arg.split(',').map(str::trim).collect();
                    graph::induced_subgraph(g, &vs)
                }
                other => Err(Error::Parse(format!("unknown transform `{other}`"))),
            }
        }
    }
}

fn run_word(cmd: WordCmd) -> Result<u8, Error> {
    let (spec, tokens, json, which) = match cmd {
        WordCmd::Normalize { graph, json, word } => (graph, word, json, 0u8),
        WordCmd::PureFactors { graph, json, word } => (graph, word, json, 1),
        WordCmd::Centralizer { graph, json, word } => (graph, word, json, 2),
    };
    let g = parse_graph_spec(&spec)?;
    let text = tokens.join(" ");
    let w = words::normalize_str(&g, &text)?;
    match which {
        0 => {
            if json {
                let support: Vec<&str> = w.support().into_iter().map(|v| g.label(v)).collect();
                let payload = json!({
                    "normal_form": w.render(&g),
                    "length": w.len(),
                    "support": support,
                });
                println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            } else {
                println!("{}", w.render(&g));
            }
        }
        1 => {
            let d = words::pure_factor_decomposition(&g, &w)?;
            if json {
                let payload = json!({
                    "conjugator": d.conjugator.render(&g),
                    "factors": d.factors.iter()
                        .map(|(f, e)| json!({"factor": f.render(&g), "exponent": e}))
                        .collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            } else {
                println!("conjugator: {}", d.conjugator.render(&g));
                for (f, e) in &d.factors {
                    println!("factor: ({})^{}", f.render(&g), e);
                }
            }
        }
        _ => {
            let gens = words::centralizer_generators(&g, &w)?;
            if json {
                let payload = json!({
                    "generators": gens.iter().map(|x| x.render(&g)).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            } else {
                for x in &gens {
                    println!("{}", x.render(&g));
                }
            }
        }
    }
    Ok(0)
}

fn run_ext(cmd: ExtCmd) -> Result<u8, Error> {
    match cmd {
        ExtCmd::Grow(args) => {
            let g = parse_graph_spec(&args.graph)?;
            let strategy = strategy_from(&args)?;
            let approx = ext::grow(&g, strategy, args.budget)?;
            if let Some(path) = &args.dot {
                std::fs::write(path, io::graph_to_dot(&approx.graph, "ext"))?;
            }
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&io::approx_to_json(&approx)).unwrap()
                );
            } else {
                println!(
                    "approximation: {} vertices, {} edges",
                    approx.vertices.len(),
                    approx.graph.edge_count()
                );
                for v in &approx.vertices {
                    println!("{}", v.label(&g));
                }
            }
            Ok(0)
        }
        ExtCmd::Diagnose(args) => {
            let g = parse_graph_spec(&args.graph)?;
            let strategy = strategy_from(&args)?;
            let approx = ext::grow(&g, strategy, args.budget)?;
            let report = ext::diagnostics(&approx, args.seed);
            if args.json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                println!("vertices: {}", report.vertex_count);
                println!("edges: {}", report.edge_count);
                println!("components: {}", report.component_count);
                println!("diameter: {}", report.diameter);
                println!("chromatic_number: {}", report.chromatic_number);
                let separated = report
                    .star_separation_checks
                    .iter()
                    .filter(|c| c.separator.is_some())
                    .count();
                println!(
                    "star_separation: {}/{} sampled cross-copy pairs separated",
                    separated,
                    report.star_separation_checks.len()
                );
                println!(
                    "thin_bigon_violations: {}",
                    report.thin_bigon_violations.len()
                );
            }
            Ok(0)
        }
    }
}

fn run_embed(args: EmbedArgs) -> Result<u8, Error> {
    let lambda = parse_graph_spec(&args.source)?;
    let gamma = parse_graph_spec(&args.target)?;
    let budget = SearchBudget {
        max_vertices: args.budget,
        max_radius: args.radius,
        node_budget: 50_000_000,
    };
    let verdict = embed::decide(&lambda, &gamma, &budget)?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&io::verdict_to_json(&verdict)).unwrap()
        );
    } else {
        match &verdict {
            Verdict::Yes(cert) => {
                println!("YES ({:?})", cert.note);
                for (i, v) in cert.assignment.iter().enumerate() {
                    println!("  {} -> {}", cert.source.label(i), v.label(&cert.target));
                }
            }
            Verdict::No(obs) => {
                println!("NO ({:?})", obs.kind);
                println!("  {}", obs.detail);
                if !obs.witness.is_empty() {
                    println!("  witness: {}", obs.witness.join(" "));
                }
            }
            Verdict::Unknown(report) => {
                println!("UNKNOWN");
                for s in &report.strategies_tried {
                    println!("  {s}");
                }
                println!("  {}", report.note);
            }
        }
    }
    Ok(match verdict {
        Verdict::Yes(_) => 0,
        Verdict::No(_) => 1,
        Verdict::Unknown(_) => 2,
    })
}

fn run_verify(args: VerifyArgs) -> Result<u8, Error> {
    let text = std::fs::read_to_string(&args.path)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("not valid JSON: {e}")))?;
    let kind = value.get("type").and_then(|v| v.as_str()).unwrap_or("");
    let ok = match kind {
        "certificate" => {
            let parsed: io::CertificateJson = serde_json::from_value(value)
                .map_err(|e| Error::Parse(format!("malformed certificate: {e}")))?;
            let cert = io::certificate_from_json(&parsed)?;
            embed::verify_certificate(&cert)?
        }
        "approximation" => {
            let parsed: io::ApproxJson = serde_json::from_value(value)
                .map_err(|e| Error::Parse(format!("malformed approximation: {e}")))?;
            io::verify_approx_json(&parsed)?
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown payload type `{other}`; expected certificate or approximation"
            )))
        }
    };
    if args.json {
        println!("{}", json!({ "valid": ok }));
    } else {
        println!("{}", if ok { "VALID" } else { "INVALID" });
    }
    Ok(if ok { 0 } else { 1 })
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(Error::BudgetExceeded(msg)) => {
            eprintln!("budget exceeded: {msg}");
            ExitCode::from(3)
        }
        Err(Error::Parse(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(4)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(5)
        }
    }
}
