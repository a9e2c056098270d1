//! Batch command-line front end: solving, decomposition validation, claw
//! detection, oracle runs, and instance generation over the graph text
//! format.
//!
//! Exit codes are a stable contract: 0 success, 1 negative answer (pattern
//! not found, decomposition invalid), 2 graph file problems, 3
//! decomposition file problems, 4 configuration errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use sha2::{Digest, Sha256};

use stripmis::esd::{self, RungBudget, StripMode};
use stripmis::graph::{parse_graph, write_graph, Graph, Ratio, VertexSet};
use stripmis::pattern;
use stripmis::solver::{self, ProviderSpec, SolverConfig};
use stripmis::testkit;

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_GRAPH: u8 = 2;
const EXIT_ESD: u8 = 3;
const EXIT_CONFIG: u8 = 4;

#[derive(Parser)]
#[command(
    name = "stripmis",
    version,
    about = "Exact MWIS via strip decompositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve maximum-weight independent set on a graph file.
    Solve(SolveArgs),
    /// Validate an extended strip decomposition against a graph.
    ValidateEsd(ValidateArgs),
    /// Search for an induced subdivided claw S_{a,b,c}.
    Detect(DetectArgs),
    /// Run the brute-force oracle (exact, small graphs only).
    Oracle(OracleArgs),
    /// Generate instances in the graph text format.
    Gen(GenArgs),
    /// Scaling smoke test over a family of subdivided instances.
    Bench(BenchArgs),
}

#[derive(Args)]
struct SolveArgs {
    graph: PathBuf,
    /// Claw parameter the run targets (documentation only).
    #[arg(long, default_value_t = 2)]
    t: usize,
    /// Degree bound; defaults to the input's maximum degree.
    #[arg(long)]
    delta: Option<usize>,
    /// Balance threshold as NUM/DEN in [1/2, 1); default 1 - 1/(10*delta).
    #[arg(long)]
    c: Option<String>,
    #[arg(long, default_value_t = 3)]
    d_max: usize,
    #[arg(long, default_value_t = 4)]
    z_max: usize,
    #[arg(long, default_value_t = 10)]
    base_case: usize,
    /// Comma list of providers: line-graph, exhaustive:CAP, file:PATH.
    #[arg(long, default_value = "line-graph,exhaustive:6")]
    providers: String,
    /// Decomposition file tried first (shorthand for a file provider).
    #[arg(long)]
    esd: Option<PathBuf>,
    /// Memoization cache entries (0 disables).
    #[arg(long, default_value_t = 0)]
    memo: usize,
    #[arg(long)]
    trace: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ValidateArgs {
    graph: PathBuf,
    esd: PathBuf,
    /// Accept patterns with fewer than two edges.
    #[arg(long)]
    relaxed: bool,
    /// Also report semi-tameness and tameness (may be indeterminate).
    #[arg(long)]
    tame_check: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DetectArgs {
    graph: PathBuf,
    a: usize,
    b: usize,
    c: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct OracleArgs {
    graph: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    kind: GenKind,
}

#[derive(Subcommand)]
enum GenKind {
    /// Random graph with a hard maximum-degree bound.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 0.5)]
        prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Uniform random weights lo..=hi instead of unit weights.
        #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
        weights: Option<Vec<u64>>,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// The subdivided claw S_{a,b,c}.
    Claw {
        a: usize,
        b: usize,
        c: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Subdivide every edge of a base graph 2p times.
    Poljak {
        #[arg(long)]
        base: PathBuf,
        #[arg(short, long)]
        p: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    Path {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    Cycle {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct BenchArgs {
    /// Base graph to subdivide; defaults to K_3.
    #[arg(long)]
    base: Option<PathBuf>,
    #[arg(long, default_value_t = 6)]
    p_max: usize,
    #[arg(long, default_value_t = 1 << 20)]
    memo: usize,
    #[arg(long)]
    json: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn graph(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_GRAPH,
            message: msg.into(),
        }
    }
    fn esd(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_ESD,
            message: msg.into(),
        }
    }
    fn config(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_CONFIG,
            message: msg.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::ValidateEsd(args) => cmd_validate_esd(args),
        Command::Detect(args) => cmd_detect(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Gen(args) => cmd_gen(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn load_graph(path: &Path) -> Result<(Graph, String), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::graph(format!("{}: {e}", path.display())))?;
    let digest = hex_digest(&text);
    let graph = parse_graph(&text).map_err(|e| Failure::graph(e.to_string()))?;
    Ok((graph, digest))
}

fn hex_digest(text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

fn parse_ratio(text: &str) -> Result<Ratio, Failure> {
    let (num, den) = text
        .split_once('/')
        .ok_or_else(|| Failure::config(format!("expected NUM/DEN, got {text:?}")))?;
    let num = num
        .parse()
        .map_err(|_| Failure::config("bad ratio numerator"))?;
    let den: u64 = den
        .parse()
        .map_err(|_| Failure::config("bad ratio denominator"))?;
    if den == 0 {
        return Err(Failure::config("ratio denominator must be positive"));
    }
    Ok(Ratio::new(num, den))
}

fn parse_providers(spec: &str, esd: Option<&Path>) -> Result<Vec<ProviderSpec>, Failure> {
    let mut out = Vec::new();
    if let Some(path) = esd {
        out.push(ProviderSpec::File(path.to_path_buf()));
    }
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if part == "line-graph" {
            out.push(ProviderSpec::LineGraph);
        } else if part == "exhaustive" {
            out.push(ProviderSpec::Exhaustive { n_cap: 6 });
        } else if let Some(cap) = part.strip_prefix("exhaustive:") {
            let n_cap = cap
                .parse()
                .map_err(|_| Failure::config(format!("bad exhaustive cap {cap:?}")))?;
            out.push(ProviderSpec::Exhaustive { n_cap });
        } else if let Some(path) = part.strip_prefix("file:") {
            out.push(ProviderSpec::File(PathBuf::from(path)));
        } else {
            return Err(Failure::config(format!("unknown provider {part:?}")));
        }
    }
    Ok(out)
}

fn vertices_json(set: &VertexSet) -> serde_json::Value {
    serde_json::Value::Array(
        set.iter()
            .map(|v| serde_json::Value::Number(v.into()))
            .collect(),
    )
}

fn cmd_solve(args: SolveArgs) -> Result<u8, Failure> {
    let (graph, digest) = load_graph(&args.graph)?;
    let c = args.c.as_deref().map(parse_ratio).transpose()?;
    let trace = args.trace || std::env::var("STRIPMIS_TRACE").as_deref() == Ok("1");
    // The decomposition file, when given, must at least be readable and
    // well-formed against this graph; a file that fails definitional
    // validation later merely makes the provider fall through.
    let mut esd_digest = None;
    if let Some(path) = &args.esd {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::esd(format!("{}: {e}", path.display())))?;
        esd::io::read_esd(&text, &graph).map_err(|e| Failure::esd(e.to_string()))?;
        esd_digest = Some(hex_digest(&text));
    }
    let cfg = SolverConfig {
        t: args.t,
        delta: args.delta,
        c,
        d_max: args.d_max,
        z_max: args.z_max,
        base_case_n: args.base_case,
        providers: parse_providers(&args.providers, args.esd.as_deref())?,
        seed: args.seed,
        memo_capacity: args.memo,
        collect_trace: trace,
        threads: args.threads,
    };
    let started = Instant::now();
    let solution = solver::solve_mwis(&graph, &cfg).map_err(|e| match e {
        solver::SolverError::EsdFile(msg) => Failure::esd(msg),
        other => Failure::config(other.to_string()),
    })?;
    let elapsed = started.elapsed().as_millis();
    if args.json {
        let report = serde_json::json!({
            "command": "solve",
            "inputs": { "graph": { "path": args.graph.display().to_string(), "sha256": digest },
                        "esd": esd_digest },
            "seed": args.seed,
            "result": { "weight": solution.weight, "vertices": vertices_json(&solution.set) },
            "stats": {
                "nodes": solution.stats.nodes,
                "base_cases": solution.stats.base_cases,
                "case1": solution.stats.case1,
                "case2": solution.stats.case2,
                "fallbacks": solution.stats.fallbacks,
                "memo_hits": solution.stats.memo_hits,
            },
            "trace": solution.trace.as_ref().map(|t| t.to_string()),
            "timing_ms": elapsed,
            "exit": 0,
        });
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("weight: {}", solution.weight);
        println!("independent set: {}", solution.set);
        println!(
            "nodes: {} (base {}, case1 {}, case2 {}, fallback {}, memo hits {})",
            solution.stats.nodes,
            solution.stats.base_cases,
            solution.stats.case1,
            solution.stats.case2,
            solution.stats.fallbacks,
            solution.stats.memo_hits
        );
        if let Some(t) = &solution.trace {
            print!("{t}");
        }
        println!("time: {elapsed} ms");
    }
    Ok(EXIT_OK)
}

fn cmd_validate_esd(args: ValidateArgs) -> Result<u8, Failure> {
    let (graph, _) = load_graph(&args.graph)?;
    let text = std::fs::read_to_string(&args.esd)
        .map_err(|e| Failure::esd(format!("{}: {e}", args.esd.display())))?;
    let esd = esd::io::read_esd(&text, &graph).map_err(|e| Failure::esd(e.to_string()))?;
    let mode = if args.relaxed {
        StripMode::Relaxed
    } else {
        StripMode::Strict
    };
    let report = esd.validate(mode);
    let tameness = if args.tame_check {
        let budget = RungBudget::default();
        let semi = match esd::check_semi_tame(&esd, budget) {
            Ok(r) => Some(r.is_ok()),
            Err(_) => None, // rung budget exhausted
        };
        let tame = match esd::check_tame(&esd, budget) {
            Ok(r) => Some(r.is_ok()),
            Err(_) => None,
        };
        Some((semi, tame))
    } else {
        None
    };
    let verdict = |b: Option<bool>| match b {
        Some(true) => "yes",
        Some(false) => "no",
        None => "indeterminate",
    };
    if args.json {
        let out = serde_json::json!({
            "command": "validate-esd",
            "valid": report.is_ok(),
            "violations": report.violations.iter()
                .map(|v| serde_json::json!({ "kind": v.kind(), "detail": v.to_string() }))
                .collect::<Vec<_>>(),
            "semi_tame": tameness.map(|(s, _)| s),
            "tame": tameness.map(|(_, t)| t),
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else if report.is_ok() {
        println!("valid");
        if let Some((semi, tame)) = tameness {
            println!("semi-tame: {}", verdict(semi));
            println!("tame: {}", verdict(tame));
        }
    } else {
        println!("invalid ({} violation(s)):", report.violations.len());
        for v in &report.violations {
            println!("  [{}] {v}", v.kind());
        }
    }
    Ok(if report.is_ok() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

fn cmd_detect(args: DetectArgs) -> Result<u8, Failure> {
    if args.b == 0 || args.c == 0 {
        return Err(Failure::config("leg lengths b and c must be at least 1"));
    }
    let (graph, _) = load_graph(&args.graph)?;
    let found = pattern::find_induced_subdivided_claw(&graph, args.a, args.b, args.c);
    if args.json {
        let out = serde_json::json!({
            "command": "detect",
            "lengths": [args.a, args.b, args.c],
            "found": found.as_ref().map(|e| serde_json::json!({
                "root": e.root,
                "legs": e.legs,
            })),
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        match &found {
            Some(e) => println!("found: root {} legs {:?}", e.root, e.legs),
            None => println!("not found"),
        }
    }
    Ok(if found.is_some() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

fn cmd_oracle(args: OracleArgs) -> Result<u8, Failure> {
    let (graph, _) = load_graph(&args.graph)?;
    let result = testkit::brute_force_mwis(&graph).map_err(|e| Failure::config(e.to_string()))?;
    if args.json {
        let out = serde_json::json!({
            "command": "oracle",
            "result": { "weight": result.weight, "vertices": vertices_json(&result.set) },
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("weight: {}", result.weight);
        println!("independent set: {}", result.set);
    }
    Ok(EXIT_OK)
}

fn cmd_gen(args: GenArgs) -> Result<u8, Failure> {
    let (graph, out) = match args.kind {
        GenKind::Random {
            n,
            delta,
            prob,
            seed,
            weights,
            out,
        } => {
            if !(0.0..=1.0).contains(&prob) {
                return Err(Failure::config("edge probability must be in [0, 1]"));
            }
            let mut g = testkit::gen_random_bounded_degree(n, delta, prob, seed);
            if let Some(range) = weights {
                let (lo, hi) = (range[0], range[1]);
                if lo > hi {
                    return Err(Failure::config("weight range is empty"));
                }
                g = g.reweighted(testkit::gen_random_weights(n, lo, hi, seed ^ 0x5eed));
            }
            (g, out)
        }
        GenKind::Claw { a, b, c, out } => {
            if b == 0 || c == 0 {
                return Err(Failure::config("leg lengths b and c must be at least 1"));
            }
            (testkit::gen_subdivided_claw(a, b, c), out)
        }
        GenKind::Poljak { base, p, out } => {
            let (g, _) = load_graph(&base)?;
            (testkit::poljak_subdivide(&g, p).subdivided, out)
        }
        GenKind::Path { n, out } => (testkit::path_graph(n), out),
        GenKind::Cycle { n, out } => {
            if n < 3 {
                return Err(Failure::config("cycles need at least three vertices"));
            }
            (testkit::cycle_graph(n), out)
        }
        GenKind::Complete { n, out } => (testkit::complete_graph(n), out),
    };
    std::fs::write(&out, write_graph(&graph))
        .map_err(|e| Failure::config(format!("{}: {e}", out.display())))?;
    println!(
        "wrote {} ({} vertices, {} edges)",
        out.display(),
        graph.n(),
        graph.m()
    );
    Ok(EXIT_OK)
}

fn cmd_bench(args: BenchArgs) -> Result<u8, Failure> {
    let base = match &args.base {
        Some(path) => load_graph(path)?.0,
        None => testkit::complete_graph(3),
    };
    let mut rows = Vec::new();
    for p in 1..=args.p_max {
        let inst = testkit::poljak_subdivide(&base, p);
        let cfg = SolverConfig {
            memo_capacity: args.memo,
            base_case_n: 8,
            ..SolverConfig::default()
        };
        let started = Instant::now();
        let sol = solver::solve_mwis(&inst.subdivided, &cfg)
            .map_err(|e| Failure::config(e.to_string()))?;
        rows.push((
            p,
            inst.subdivided.n(),
            sol.weight,
            sol.stats.nodes,
            started.elapsed(),
        ));
    }
    // Log-log slope of nodes against n.
    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|&(_, n, _, nodes, _)| ((n as f64).ln(), (nodes.max(1) as f64).ln()))
        .collect();
    let slope = least_squares_slope(&points);
    if args.json {
        let out = serde_json::json!({
            "command": "bench",
            "rows": rows.iter().map(|&(p, n, w, nodes, d)| serde_json::json!({
                "p": p, "n": n, "weight": w, "nodes": nodes, "ms": d.as_millis(),
            })).collect::<Vec<_>>(),
            "loglog_slope": slope,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!(
            "{:>3} {:>5} {:>8} {:>10} {:>8}",
            "p", "n", "weight", "nodes", "ms"
        );
        for (p, n, w, nodes, d) in &rows {
            println!("{p:>3} {n:>5} {w:>8} {nodes:>10} {:>8}", d.as_millis());
        }
        println!("log-log slope of node growth: {slope:.2}");
    }
    Ok(EXIT_OK)
}

fn least_squares_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let sx: f64 = points.iter().map(|p| p.0).sum();
    let sy: f64 = points.iter().map(|p| p.1).sum();
    let sxx: f64 = points.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = points.iter().map(|p| p.0 * p.1).sum();
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-12 {
        0.0
    } else {
        (n * sxy - sx * sy) / denom
    }
}
