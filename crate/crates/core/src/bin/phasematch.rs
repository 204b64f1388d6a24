//! `phasematch` command line: generate instances, run and verify phases,
//! compute parameters, apply replacers and run the bench suites.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or IO error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use phasematch::bench::{run_suite, write_csv, write_json, BenchRow, Suite, SuiteConfig};
use phasematch::families::{
    gen_chain, gen_cograph_lb, gen_path_lb, gen_random, gen_structured, Density, FamilyInstance, StructuredParams,
};
use phasematch::graph::{validate_replacement, Graph};
use phasematch::io::{format_graph, format_path, read_graph, read_json, read_matching, read_path};
use phasematch::params::{param_report, GraphClass};
use phasematch::phase::{phase_bound_report, run_hopcroft_karp, Engine, EngineConfig, PhaseTrace, Plan, Strategy};
use phasematch::replace::{replace_with, Method};

#[derive(Parser)]
#[command(name = "phasematch", version, about = "Maximum matching by shortest augmenting path phases")]
struct Cli {
    /// Seed for generators and random strategies.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest instance to accept: bench skips bigger ones, run and verify
    /// use it as the exhaustive-search limit for general graphs.
    #[arg(long, global = true)]
    limit_n: Option<usize>,
    /// Output file; standard output when absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a generated graph, and its plan for the lower-bound families.
    Gen(GenArgs),
    /// Run the phase framework and write the trace as JSON.
    Run(RunArgs),
    /// Replay a trace and report every violation.
    Verify {
        graph: PathBuf,
        trace: PathBuf,
    },
    /// Parameters, class flags and deletion distances of a graph.
    Params {
        graph: PathBuf,
        /// Classes for the deletion distance (cluster, star-forest, splex:S,
        /// chain, cograph, trivially-perfect).
        #[arg(long = "class", value_delimiter = ',', default_value = "cluster,cograph,star-forest")]
        classes: Vec<String>,
        /// Search limit for the deletion distance.
        #[arg(long, default_value_t = 4)]
        k_max: usize,
    },
    /// Shorten an alternating path with one of the replacers.
    Replace {
        graph: PathBuf,
        matching: PathBuf,
        path: PathBuf,
        /// independence:K, splex:K, nd or modular.
        #[arg(long)]
        method: String,
    },
    /// Run a suite and emit one row per instance and strategy.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Chain,
    Pathlb,
    Cographlb,
    Structured,
    Random,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// chain: k; pathlb: j; structured: number of planted apexes.
    #[arg(long)]
    k: Option<usize>,
    /// cographlb and random: vertex count.
    #[arg(long)]
    n: Option<usize>,
    /// structured: cluster, splex:S, nd:T or star-forest.
    #[arg(long)]
    class: Option<String>,
    /// Where to write the plan (chain, pathlb, cographlb).
    #[arg(long)]
    plan: Option<PathBuf>,
    /// structured: number of components.
    #[arg(long)]
    components: Option<usize>,
    #[arg(long)]
    min_size: Option<usize>,
    #[arg(long)]
    max_size: Option<usize>,
    /// structured: apex edge probability; random: edge probability.
    #[arg(long)]
    p: Option<f64>,
    /// random: exact edge count instead of a probability.
    #[arg(long)]
    edges: Option<usize>,
    /// random: draw edges across a fixed bipartition only.
    #[arg(long)]
    bipartite: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    GreedyLex,
    Random,
    Scripted,
    HopcroftKarp,
}

#[derive(Args)]
struct RunArgs {
    graph: PathBuf,
    #[arg(long, value_enum, default_value_t = StrategyArg::GreedyLex)]
    strategy: StrategyArg,
    /// Plan file for the scripted strategy.
    #[arg(long)]
    plan: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    /// lowerbounds, upperbounds or oracle-sweep.
    suite: String,
    /// Seeded-random runs per upper-bound instance.
    #[arg(long)]
    runs: Option<usize>,
    /// Planted modulator sizes for upperbounds.
    #[arg(long, value_delimiter = ',')]
    k: Option<Vec<usize>>,
    /// Largest chain k in lowerbounds.
    #[arg(long)]
    chain_max: Option<usize>,
    /// Largest path j in lowerbounds.
    #[arg(long)]
    path_max: Option<usize>,
    /// Number of cograph sizes in lowerbounds.
    #[arg(long)]
    cograph_max: Option<usize>,
    /// Largest n of oracle-sweep.
    #[arg(long)]
    oracle_n: Option<usize>,
}

enum Failure {
    /// Exit 1.
    Check(String),
    /// Exit 2.
    Usage(String),
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Gen(a) => cmd_gen(&cli, a),
        Cmd::Run(a) => cmd_run(&cli, a),
        Cmd::Verify { graph, trace } => cmd_verify(&cli, graph, trace),
        Cmd::Params { graph, classes, k_max } => cmd_params(&cli, graph, classes, *k_max),
        Cmd::Replace {
            graph,
            matching,
            path,
            method,
        } => cmd_replace(&cli, graph, matching, path, method),
        Cmd::Bench(a) => cmd_bench(&cli, a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("phasematch: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("phasematch: {msg}");
            ExitCode::from(2)
        }
    }
}

/// `--out` file or standard output.
fn output(cli: &Cli) -> Result<Box<dyn Write>, Failure> {
    match &cli.out {
        Some(p) => {
            let f = File::create(p).map_err(|e| usage(format!("{}: {e}", p.display())))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(io::stdout().lock())),
    }
}

fn emit_json<T: Serialize>(w: &mut dyn Write, value: &T) -> CmdResult {
    serde_json::to_writer_pretty(&mut *w, value).map_err(usage)?;
    writeln!(w).map_err(usage)
}

/// Summary lines go to stdout unless stdout carries the main output.
fn summary(cli: &Cli, line: &str) {
    if cli.out.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn engine_config(cli: &Cli) -> EngineConfig {
    let mut cfg = EngineConfig::default();
    if let Some(l) = cli.limit_n {
        cfg.exhaustive_limit = l;
    }
    cfg
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    read_graph(path).map_err(usage)
}

fn cmd_gen(cli: &Cli, a: &GenArgs) -> CmdResult {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| usage(format!("--family needs --{flag}")));
    let inst: FamilyInstance = match a.family {
        Family::Chain => gen_chain(need(a.k, "k")?),
        Family::Pathlb => gen_path_lb(need(a.k, "k")?),
        Family::Cographlb => gen_cograph_lb(need(a.n, "n")?),
        Family::Structured => {
            let class = a
                .class
                .as_deref()
                .ok_or_else(|| usage("structured needs --class"))?
                .parse()
                .map_err(usage)?;
            let d = StructuredParams::default();
            let min_size = a.min_size.unwrap_or(d.min_size);
            let params = StructuredParams {
                components: a.components.unwrap_or(d.components),
                min_size,
                max_size: a.max_size.unwrap_or(min_size.max(d.max_size)),
                apex_p: a.p.unwrap_or(d.apex_p),
            };
            gen_structured(class, &params, a.k.unwrap_or(0), cli.seed)
        }
        Family::Random => {
            let density = match (a.edges, a.p) {
                (Some(m), _) => Density::M(m),
                (None, p) => Density::P(p.unwrap_or(0.5)),
            };
            gen_random(need(a.n, "n")?, density, cli.seed, a.bipartite)
        }
    }
    .map_err(usage)?;
    if let Some(limit) = cli.limit_n {
        if inst.graph.n() > limit {
            return Err(usage(format!("instance has {} vertices, over --limit-n {limit}", inst.graph.n())));
        }
    }
    let mut w = output(cli)?;
    w.write_all(format_graph(&inst.graph).as_bytes()).map_err(usage)?;
    w.flush().map_err(usage)?;
    match (&a.plan, &inst.plan) {
        (Some(path), Some(plan)) => phasematch::io::write_json(plan, path).map_err(usage)?,
        (Some(_), None) => return Err(usage("this family has no plan")),
        _ => {}
    }
    let meta = serde_json::to_string(&inst.meta).map_err(usage)?;
    summary(cli, &meta);
    Ok(())
}

#[derive(Serialize)]
struct RunSummary {
    strategy: String,
    phases: usize,
    final_size: usize,
    bounds_ok: bool,
}

fn cmd_run(cli: &Cli, a: &RunArgs) -> CmdResult {
    let g = load_graph(&a.graph)?;
    let engine = Engine::new(&g, engine_config(cli));
    let run = |s: Strategy| engine.run(&s);
    let result = match a.strategy {
        StrategyArg::GreedyLex => run(Strategy::GreedyLex),
        StrategyArg::Random => run(Strategy::SeededRandom(cli.seed)),
        StrategyArg::Scripted => {
            let path = a.plan.as_ref().ok_or_else(|| usage("--strategy scripted needs --plan"))?;
            let plan: Plan = read_json(path).map_err(usage)?;
            run(Strategy::Scripted(plan))
        }
        StrategyArg::HopcroftKarp => {
            let g = if g.is_bipartite_marked() {
                g.clone()
            } else {
                g.clone()
                    .with_detected_bipartition()
                    .ok_or_else(|| usage("hopcroft-karp needs a bipartite graph"))?
            };
            run_hopcroft_karp(&g)
        }
    };
    let (_, trace) = result.map_err(|e| Failure::Check(e.to_string()))?;
    let mut w = output(cli)?;
    emit_json(&mut *w, &trace)?;
    w.flush().map_err(usage)?;
    let s = RunSummary {
        strategy: trace.strategy.clone(),
        phases: trace.phase_count(),
        final_size: trace.final_size,
        bounds_ok: phase_bound_report(&g, &trace).all_satisfied(),
    };
    summary(
        cli,
        &format!(
            "strategy={} phases={} final_size={} bounds_ok={}",
            s.strategy, s.phases, s.final_size, s.bounds_ok
        ),
    );
    Ok(())
}

fn cmd_verify(cli: &Cli, graph: &Path, trace: &Path) -> CmdResult {
    let g = load_graph(graph)?;
    let t: PhaseTrace = read_json(trace).map_err(usage)?;
    let report = Engine::new(&g, engine_config(cli)).verify_trace(&t);
    let bounds = phase_bound_report(&g, &t);
    let mut w = output(cli)?;
    match cli.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Out<'a> {
                legal: bool,
                report: &'a phasematch::phase::TraceReport,
                bounds: &'a phasematch::phase::BoundReport,
            }
            emit_json(
                &mut *w,
                &Out {
                    legal: report.legal(),
                    report: &report,
                    bounds: &bounds,
                },
            )?;
        }
        Format::Csv => {
            let verdict = if report.legal() { "legal" } else { "illegal" };
            writeln!(w, "{verdict} phases={} final_size={}", report.phases, report.final_size).map_err(usage)?;
            for v in &report.violations {
                let at = v.phase.map_or("trace".to_string(), |p| format!("phase {p}"));
                writeln!(w, "violation {at}: {}", v.reason).map_err(usage)?;
            }
            for b in &bounds.bounds {
                writeln!(w, "bound {} = {} {}", b.name, b.value, if b.satisfied { "ok" } else { "FAIL" })
                    .map_err(usage)?;
            }
        }
    }
    w.flush().map_err(usage)?;
    if report.legal() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} violation(s)", report.violations.len())))
    }
}

fn cmd_params(cli: &Cli, graph: &Path, classes: &[String], k_max: usize) -> CmdResult {
    let g = load_graph(graph)?;
    let targets: Vec<GraphClass> = classes.iter().map(|c| c.parse()).collect::<Result<_, _>>().map_err(usage)?;
    let report = param_report(&g, &targets, k_max);
    let mut w = output(cli)?;
    emit_json(&mut *w, &report)?;
    w.flush().map_err(usage)
}

#[derive(Serialize)]
struct ReplaceReport {
    method: String,
    valid: bool,
    within_bound: bool,
    input_length: usize,
    length: usize,
    bound: u64,
    steps: usize,
    lengths: Vec<usize>,
    path: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    modular: Option<phasematch::replace::ModularStats>,
}

fn cmd_replace(cli: &Cli, graph: &Path, matching: &Path, path: &Path, method: &str) -> CmdResult {
    let g = load_graph(graph)?;
    let m = read_matching(matching, g.n()).map_err(usage)?;
    let p = read_path(path).map_err(usage)?;
    let meth: Method = method.parse().map_err(usage)?;
    let res = replace_with(&g, &m, &p, meth).map_err(|e| Failure::Check(e.to_string()))?;
    let report = ReplaceReport {
        method: method.to_string(),
        valid: validate_replacement(&g, &m, &p, &res.path),
        within_bound: res.within_bound(),
        input_length: p.len(),
        length: res.path.len(),
        bound: res.bound,
        steps: res.steps,
        lengths: res.lengths.clone(),
        path: res.path.vertices().to_vec(),
        modular: res.modular.clone(),
    };
    let mut w = output(cli)?;
    match cli.format {
        Format::Json => emit_json(&mut *w, &report)?,
        Format::Csv => {
            writeln!(w, "{}", format_path(&res.path)).map_err(usage)?;
            writeln!(
                w,
                "valid={} length={} input_length={} bound={} within_bound={} steps={}",
                report.valid, report.length, report.input_length, report.bound, report.within_bound, report.steps
            )
            .map_err(usage)?;
        }
    }
    w.flush().map_err(usage)?;
    if report.valid && report.within_bound {
        Ok(())
    } else {
        Err(Failure::Check("replacement failed validation or exceeds its bound".into()))
    }
}

fn cmd_bench(cli: &Cli, a: &BenchArgs) -> CmdResult {
    let suite: Suite = a.suite.parse().map_err(usage)?;
    let d = SuiteConfig::default();
    let upto = |max: Option<usize>, from: usize, dflt: Vec<usize>| max.map_or(dflt, |m| (from..=m).collect());
    let cfg = SuiteConfig {
        seed: cli.seed,
        limit_n: cli.limit_n,
        chain_k: upto(a.chain_max, 2, d.chain_k.clone()),
        path_j: upto(a.path_max, 2, d.path_j.clone()),
        cograph_s: upto(a.cograph_max, 1, d.cograph_s.clone()),
        upper_k: a.k.clone().unwrap_or(d.upper_k.clone()),
        random_runs: a.runs.unwrap_or(d.random_runs),
        oracle_n: a.oracle_n.unwrap_or(d.oracle_n),
        ..d
    };
    let rows = run_suite(suite, &cfg).map_err(|e| Failure::Check(e.to_string()))?;
    let mut w = output(cli)?;
    match cli.format {
        Format::Csv => write_csv(&rows, &mut *w),
        Format::Json => write_json(&rows, &mut *w),
    }
    .map_err(usage)?;
    w.flush().map_err(usage)?;
    let failing: Vec<&BenchRow> = rows.iter().filter(|r| !r.ok()).collect();
    for r in &failing {
        eprintln!("FAIL {} {} strategy={} phases={}", r.family, r.params, r.strategy, r.phases_observed);
    }
    if failing.is_empty() {
        Ok(())
    } else {
        Err(Failure::Check(format!("{} of {} rows failed", failing.len(), rows.len())))
    }
}
