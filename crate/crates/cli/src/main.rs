use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use cyclespan::circuits::{enumerate_circuits, non_separating_circuits, Circuit};
use cyclespan::cocircuits::{bonds, cocircuit_families};
use cyclespan::corpus::gen_corpus;
use cyclespan::cycle_space::{cyclomatic_number, fundamental_basis};
use cyclespan::decompose::{ear_sequence, theta_pair_with_cap, Decomposer};
use cyclespan::format::{parse_edge_list, to_edge_list};
use cyclespan::graph::{
    blocks, is_connected, is_k_connected, is_top_3_connected, is_top_k4, threads, EdgeSet, Graph,
    Thread,
};
use cyclespan::verify::{verify_all, VerifyOptions};
use cyclespan::Error;

/// Non-separating circuits, thread reductions and cocircuits of small graphs.
#[derive(Parser)]
#[command(name = "cyclespan", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Options,
}

#[derive(Args)]
struct Options {
    /// Edge-list file: a line `n m`, then `m` lines `u v`.
    #[arg(long, global = true, value_name = "FILE", conflicts_with = "gen")]
    input: Option<PathBuf>,
    /// Corpus graph: k4, k5, k6, k33, wheel-N, prism, petersen, random3c-N.
    #[arg(long, global = true, value_name = "NAME")]
    gen: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Upper bound on enumerated circuits.
    #[arg(long, global = true, default_value_t = 100_000)]
    cap: usize,
    /// Comma-separated edge ids of the target (decompose).
    #[arg(long, global = true, value_name = "E1,E2,...", value_delimiter = ',')]
    circuit: Option<Vec<usize>>,
    /// Comma-separated edge ids of a thread (theta).
    #[arg(long, global = true, value_name = "E1,E2,...", value_delimiter = ',')]
    thread: Option<Vec<usize>>,
    /// Print JSON (the default).
    #[arg(long, global = true, conflicts_with = "quiet")]
    json: bool,
    /// Print nothing; report through the exit code only.
    #[arg(long, global = true)]
    quiet: bool,
    /// Record wall-clock time in verification reports.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Sizes, connectivity and fingerprint.
    Info,
    /// Blocks and cut vertices.
    Blocks,
    /// Maximal paths with degree-2 inner vertices.
    Threads,
    /// Every circuit.
    Circuits,
    /// Non-separating circuits.
    Nc,
    /// Fundamental cycle basis.
    Basis,
    /// Write `--circuit` as a sum of non-separating circuits.
    Decompose,
    /// Two non-separating circuits meeting exactly in `--thread`, or in every thread.
    Theta,
    /// Thread removals down to a subdivided K4.
    Ears,
    /// Minimal edge cuts.
    Bonds,
    /// Compare bonds with the minimal sets meeting no non-separating circuit once.
    Whitney,
    /// Run every self-check and print a report.
    VerifyAll,
    /// Print a corpus graph.
    Gen {
        /// Print the edge-list text instead of JSON.
        #[arg(long)]
        edge_list: bool,
    },
}

/// A failure after argument parsing.
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

/// What a command produced: a JSON value or raw text, and whether it passed.
struct Output {
    body: Body,
    pass: bool,
}

enum Body {
    Json(String),
    Text(String),
}

fn json_out<T: Serialize>(value: &T) -> Output {
    Output {
        body: Body::Json(serde_json::to_string_pretty(value).expect("serializable output")),
        pass: true,
    }
}

fn load(opts: &Options) -> Result<(String, Graph), Failure> {
    match (&opts.input, &opts.gen) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Runtime(format!("cannot read {}: {e}", path.display())))?;
            Ok((path.display().to_string(), parse_edge_list(&text)?))
        }
        (None, Some(name)) => Ok((name.clone(), gen_corpus(name, opts.seed)?)),
        _ => Err(Failure::Usage(
            "exactly one of --input or --gen is required".into(),
        )),
    }
}

fn edge_ids(g: &Graph, ids: &[usize]) -> Result<EdgeSet, Failure> {
    if let Some(&bad) = ids.iter().find(|&&e| !g.has_edge(e)) {
        return Err(Error::UnknownEdge(bad).into());
    }
    Ok(EdgeSet::from_ids(g.universe(), ids.iter().copied())?)
}

fn edge_lists(sets: impl IntoIterator<Item = EdgeSet>) -> Vec<Vec<usize>> {
    sets.into_iter().map(|s| s.ids()).collect()
}

fn info(name: &str, g: &Graph) -> Result<Output, Failure> {
    let connected = is_connected(g);
    let top3 = is_top_3_connected(g);
    Ok(json_out(&json!({
        "graph": name,
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "fingerprint": g.fingerprint(),
        "connected": connected,
        "three_connected": is_k_connected(g, 3),
        "top_3_connected": top3,
        "top_k4": is_top_k4(g),
        "cyclomatic_number": if connected { Some(cyclomatic_number(g)?) } else { None },
        "blocks": blocks(g).block_count(),
        "threads": threads(g).map(|t| t.len()).ok(),
    })))
}

fn decompose(g: &Graph, opts: &Options) -> Result<Output, Failure> {
    let ids = opts
        .circuit
        .as_deref()
        .ok_or_else(|| Failure::Usage("decompose needs --circuit e1,e2,...".into()))?;
    let target = edge_ids(g, ids)?;
    let mut engine = Decomposer::with_cap(g, opts.cap)?;
    let cert = match Circuit::from_edges(g, target.clone()) {
        Ok(c) => engine.decompose_circuit(&c)?,
        Err(_) => engine.decompose_cs_element(&target)?,
    };
    let mut out = json_out(&cert);
    out.pass = cert.verify(g)?;
    Ok(out)
}

fn theta(g: &Graph, opts: &Options) -> Result<Output, Failure> {
    match opts.thread.as_deref() {
        Some(ids) => {
            let t = Thread::from_edges(g, ids)?;
            Ok(json_out(&theta_pair_with_cap(g, &t, opts.cap)?))
        }
        None => {
            let pairs = threads(g)?
                .iter()
                .map(|t| theta_pair_with_cap(g, t, opts.cap))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(json_out(&pairs))
        }
    }
}

fn whitney(g: &Graph, opts: &Options) -> Result<Output, Failure> {
    let nc = non_separating_circuits(g, opts.cap)?;
    let (recovered, cuts) = cocircuit_families(g, &nc)?;
    let equal = recovered == cuts;
    let mut out = json_out(&json!({
        "equal": equal,
        "minimal": edge_lists(recovered),
        "bonds": edge_lists(cuts),
    }));
    out.pass = equal;
    Ok(out)
}

fn gen(name: &str, g: &Graph, seed: u64, edge_list: bool) -> Output {
    if edge_list {
        return Output {
            body: Body::Text(to_edge_list(g)),
            pass: true,
        };
    }
    let edges: Vec<[usize; 2]> = g.edges().map(|(_, (u, v))| [u, v]).collect();
    json_out(&json!({
        "name": name,
        "seed": seed,
        "vertices": g.vertex_count(),
        "edges": edges,
        "fingerprint": g.fingerprint(),
    }))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let opts = &cli.opts;
    let (name, g) = load(opts)?;
    match &cli.command {
        Command::Info => info(&name, &g),
        Command::Blocks => {
            let b = blocks(&g);
            Ok(json_out(&json!({
                "blocks": edge_lists(b.blocks),
                "cut_vertices": b.cut_vertices,
            })))
        }
        Command::Threads => Ok(json_out(&threads(&g)?)),
        Command::Circuits => Ok(json_out(&enumerate_circuits(&g, opts.cap)?)),
        Command::Nc => Ok(json_out(&non_separating_circuits(&g, opts.cap)?)),
        Command::Basis => Ok(json_out(&fundamental_basis(&g)?)),
        Command::Decompose => decompose(&g, opts),
        Command::Theta => theta(&g, opts),
        Command::Ears => Ok(json_out(&ear_sequence(&g)?)),
        Command::Bonds => Ok(json_out(&bonds(&g)?)),
        Command::Whitney => whitney(&g, opts),
        Command::VerifyAll => {
            let report = verify_all(
                &name,
                &g,
                VerifyOptions {
                    seed: opts.seed,
                    cap: opts.cap,
                    timing: opts.timing,
                },
            );
            let mut out = json_out(&report);
            out.pass = report.all_pass();
            Ok(out)
        }
        Command::Gen { edge_list } => Ok(gen(&name, &g, opts.seed, *edge_list)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if !cli.opts.quiet {
                match out.body {
                    Body::Json(j) => println!("{j}"),
                    Body::Text(t) => print!("{t}"),
                }
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
