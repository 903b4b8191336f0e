use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ecckit::cli::{
    classify_report, cover_report, format_graph, load_graph, run_verify, save_graph, Checks, GraphFormat,
    Method, ReportOptions, VerifyOptions,
};
use ecckit::{
    exact_ecc, gen_alpha_two, gen_theorem1_instance, gen_theorem8_instance, EccError, ExactConfig, GenKind,
    GenSpec,
};

#[derive(Parser)]
#[command(name = "ecckit", version, about = "Edge clique covers of graphs with independence number two")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Graph file format.
    #[arg(long, value_enum, default_value_t = FormatArg::Edgelist, global = true)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Dimacs,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => GraphFormat::Edgelist,
            FormatArg::Dimacs => GraphFormat::Dimacs,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    NoDominating,
    Diam3,
    Theorem1,
    Theorem8,
    Fallback,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::NoDominating => Method::NoDominating,
            MethodArg::Diam3 => Method::Diam3,
            MethodArg::Theorem1 => Method::Theorem1,
            MethodArg::Theorem8 => Method::Theorem8,
            MethodArg::Fallback => Method::Fallback,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Alpha2,
    Theorem1,
    Theorem8Eligible,
}

#[derive(Subcommand)]
enum Command {
    /// Report independence number, dominating edges and the cover route.
    Classify {
        graph: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Build an edge clique cover.
    Cover {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Dominating edge for the theorem1 method, as `u,v`.
        #[arg(long, value_parser = parse_edge)]
        edge: Option<(usize, usize)>,
        /// Also compute the exact minimum when n is within the oracle cap.
        #[arg(long)]
        oracle: bool,
        /// Leave elapsed_ms at 0 so output is byte-for-byte reproducible.
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Exact minimum edge clique cover by branch and bound.
    Exact {
        graph: PathBuf,
        #[arg(long)]
        max_n: Option<usize>,
        /// Search node budget.
        #[arg(long)]
        budget: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Generate a seeded random instance.
    Gen {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Check every construction on all alpha-2 graphs up to a given order.
    Verify {
        #[arg(long, value_name = "N_MAX")]
        enumerate: usize,
        #[arg(long, default_value = "bounds,oracle")]
        checks: String,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Where to write the first failing graph.
        #[arg(long)]
        dump: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected u,v")?;
    let a = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((a, b))
}

fn emit<T: Serialize + std::fmt::Display>(value: &T, json: bool) -> Result<(), EccError> {
    if json {
        let s = serde_json::to_string_pretty(value).map_err(|e| EccError::Io(e.to_string()))?;
        println!("{s}");
    } else {
        print!("{value}");
    }
    Ok(())
}

#[derive(Serialize)]
struct ExactOut {
    version: &'static str,
    n: usize,
    ecc: usize,
    nodes_explored: u64,
    witness: Vec<ecckit::Clique>,
}

impl std::fmt::Display for ExactOut {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "exact ecc: {} ({} nodes)", self.ecc, self.nodes_explored)?;
        for c in &self.witness {
            writeln!(f, "  {:?}", c.vertices())?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct GenOut {
    version: &'static str,
    spec: GenSpec,
    n: usize,
    edge_count: usize,
    dominating_edge: Option<(usize, usize)>,
    #[serde(skip)]
    text: String,
}

impl std::fmt::Display for GenOut {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.text)
    }
}

fn run(cli: Cli) -> Result<ExitCode, EccError> {
    match cli.command {
        Command::Classify { graph, common } => {
            let g = load_graph(&graph, common.format.into())?;
            emit(&classify_report(&g)?, common.json)?;
        }
        Command::Cover { graph, method, edge, oracle, no_timing, common } => {
            let g = load_graph(&graph, common.format.into())?;
            let opts = ReportOptions { oracle: oracle.then(ExactConfig::from_env), timing: !no_timing };
            let r = cover_report(&g, method.into(), edge, opts)?;
            emit(&r, common.json)?;
            if !r.valid {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Exact { graph, max_n, budget, common } => {
            let g = load_graph(&graph, common.format.into())?;
            let mut cfg = ExactConfig::from_env();
            if let Some(m) = max_n {
                cfg.max_n = m;
            }
            if let Some(b) = budget {
                cfg.node_budget = b;
            }
            let r = exact_ecc(&g, cfg)?;
            let out = ExactOut {
                version: ecckit::VERSION,
                n: g.n(),
                ecc: r.ecc,
                nodes_explored: r.nodes_explored,
                witness: r.witness.cliques,
            };
            emit(&out, common.json)?;
        }
        Command::Gen { kind, n, density, seed, output, common } => {
            let format: GraphFormat = common.format.into();
            let (g, dominating_edge, spec) = match kind {
                KindArg::Alpha2 => {
                    let spec = GenSpec::new(GenKind::Alpha2, n, density, seed);
                    (gen_alpha_two(&spec)?, None, spec)
                }
                KindArg::Theorem1 => {
                    let spec = GenSpec::new(GenKind::Theorem1, n, density, seed);
                    let (g, e) = gen_theorem1_instance(&spec)?;
                    (g, Some(e), spec)
                }
                KindArg::Theorem8Eligible => {
                    let spec = GenSpec::new(GenKind::Theorem8Eligible, n, density, seed);
                    (gen_theorem8_instance(&spec)?, None, spec)
                }
            };
            let text = format_graph(&g, format);
            match output {
                Some(path) => {
                    save_graph(&path, &g, format)?;
                    if common.json {
                        let out = GenOut {
                            version: ecckit::VERSION,
                            spec,
                            n: g.n(),
                            edge_count: g.edge_count(),
                            dominating_edge,
                            text,
                        };
                        emit(&out, true)?;
                    }
                }
                None => print!("{text}"),
            }
        }
        Command::Verify { enumerate, checks, jobs, dump, common } => {
            let opts = VerifyOptions { n_max: enumerate, checks: Checks::parse(&checks)?, jobs, dump };
            let s = run_verify(&opts)?;
            if common.json {
                let out = serde_json::to_string_pretty(&s).map_err(|e| EccError::Io(e.to_string()))?;
                println!("{out}");
            } else {
                println!("checked {} graphs (n <= {})", s.graphs_checked, s.n_max);
                for (route, count) in &s.per_route {
                    println!("  {route}: {count}");
                }
                for v in s.violations.iter().take(20) {
                    println!("violation n={} #{} {}: {}", v.n, v.index, v.kind, v.detail);
                }
                if let Some(f) = &s.counterexample_file {
                    println!("first counterexample written to {f}");
                }
            }
            if !s.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("ecckit: {e}");
            ExitCode::from(2)
        }
    }
}
