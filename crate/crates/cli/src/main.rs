//! Command-line front end: solve, verify, generate, bench.
//!
//! Exit codes: 0 yes/success, 1 no/invalid, 2 usage or parse error,
//! 3 algorithm inapplicable, 4 timeout.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use nws_core::io::{
    parse_instance, parse_solution, write_instance, write_no, write_solution, SolutionFile,
};
use nws_core::oracle::{self, Mode, OracleResult, DEFAULT_RELEVANT_EDGE_CAP};
use nws_core::reductions::{self, CnfFormula, HittingSetInstance, Metadata, RandomParams};
use nws_core::select::{auto_select, Algorithm};
use nws_core::stars_fitting::{solve_stars_fitting, solve_stars_fitting_with_t};
use nws_core::stars_twins::solve_stars_twins;
use nws_core::tree_support::solve_forest_support;
use nws_core::{Instance, Property, SearchOptions, SolveError, Stop};

const EXIT_YES: i32 = 0;
const EXIT_NO: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_INAPPLICABLE: i32 = 3;
const EXIT_TIMEOUT: i32 = 4;

#[derive(Parser)]
#[command(
    name = "nws",
    about = "Exact solvers for community-aware network sparsification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file.
    Solve(SolveArgs),
    /// Check a solution file against its instance.
    Verify(VerifyArgs),
    /// Generate an instance from a source problem or at random.
    Generate(GenerateArgs),
    /// Solve many instances and emit a CSV of results.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    Auto,
    Oracle,
    Deletion,
    #[value(name = "branch-ell")]
    BranchEll,
    #[value(name = "tree-support")]
    TreeSupport,
    #[value(name = "stars-xp")]
    StarsXp,
    #[value(name = "stars-fpt-c")]
    StarsFptC,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Decide,
    Optimize,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Decide => Mode::Decide,
            ModeArg::Optimize => Mode::Optimize,
        }
    }
}

#[derive(Args, Clone)]
struct SolverFlags {
    /// Algorithm to run; auto picks from the instance shape.
    #[arg(long, value_enum, default_value = "auto")]
    algo: AlgoArg,
    /// Decide feasibility or optimize (weight, edge count).
    #[arg(long, value_enum, default_value = "decide")]
    mode: ModeArg,
    /// Relevant-edge cap for the subset-enumeration oracle.
    #[arg(long, default_value_t = DEFAULT_RELEVANT_EDGE_CAP)]
    cap: usize,
    /// Override the feedback-edge parameter used by stars-xp.
    #[arg(long)]
    t_override: Option<i64>,
    /// Worker threads for the embarrassingly parallel layers.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Cooperative timeout in seconds.
    #[arg(long)]
    timeout: Option<f64>,
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file.
    #[arg(long, short)]
    input: PathBuf,
    #[command(flatten)]
    flags: SolverFlags,
    /// Also write the solution to this file.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Instance file.
    #[arg(long)]
    instance: PathBuf,
    /// Solution file produced by solve.
    #[arg(long)]
    solution: PathBuf,
}

#[derive(Args)]
struct GenerateArgs {
    /// Kind of instance to generate.
    #[arg(long, value_parser = ["3sat-stars", "3sat-conn", "hamcycle", "hitting-set", "mcc", "vc-clique", "random"])]
    kind: String,
    /// DIMACS CNF input for the SAT kinds.
    #[arg(long)]
    dimacs_cnf: Option<PathBuf>,
    /// Source graph (an instance file; only its graph is used) for
    /// hamcycle, mcc, and vc-clique.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Seed for the random kind.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Output instance file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Sidecar metadata file (defaults to OUT.meta when --out is given).
    #[arg(long)]
    meta: Option<PathBuf>,

    // random parameters
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 0.5)]
    edge_prob: f64,
    #[arg(long, default_value_t = 3)]
    communities: usize,
    #[arg(long, default_value_t = 2)]
    size_min: usize,
    #[arg(long, default_value_t = 4)]
    size_max: usize,
    #[arg(long, default_value_t = 1)]
    weight_min: u32,
    #[arg(long, default_value_t = 1)]
    weight_max: u32,
    #[arg(long, value_parser = ["stars", "conn"], default_value = "conn")]
    property: String,

    /// Independent-set target for vc-clique.
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Color classes for mcc: semicolon-separated, comma-separated 1-based
    /// vertices, e.g. "1,2;3,4".
    #[arg(long)]
    colors: Option<String>,
    /// Padding-set size override for mcc (default n^3).
    #[arg(long)]
    padding: Option<usize>,
    /// Universe size for hitting-set.
    #[arg(long)]
    universe: Option<usize>,
    /// A family set for hitting-set (repeatable), comma-separated 1-based
    /// elements.
    #[arg(long = "set")]
    sets: Vec<String>,
}

#[derive(Args)]
struct BenchArgs {
    /// Instance files to solve.
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    #[command(flatten)]
    flags: SolverFlags,
    /// Output CSV (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("NWS_LOG")).init();
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    };
    std::process::exit(code);
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Solve(args) => cmd_solve(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Bench(args) => cmd_bench(args),
    }
}

fn read_instance(path: &Path) -> Result<Instance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_instance(&text).with_context(|| format!("parsing {}", path.display()))
}

fn resolve_algo(instance: &Instance, arg: AlgoArg) -> Algorithm {
    match arg {
        AlgoArg::Auto => {
            let (algo, why) = auto_select(instance);
            log::info!("auto-selected {}: {}", algo.name(), why);
            algo
        }
        AlgoArg::Oracle => Algorithm::Oracle,
        AlgoArg::Deletion => Algorithm::Deletion,
        AlgoArg::BranchEll => Algorithm::BranchEll,
        AlgoArg::TreeSupport => Algorithm::TreeSupport,
        AlgoArg::StarsXp => Algorithm::StarsXp,
        AlgoArg::StarsFptC => Algorithm::StarsFptC,
    }
}

fn dispatch(
    instance: &Instance,
    algo: Algorithm,
    flags: &SolverFlags,
) -> Result<OracleResult, SolveError> {
    let stop = match flags.timeout {
        Some(secs) => Stop::after(Duration::from_secs_f64(secs)),
        None => Stop::none(),
    };
    let opts = SearchOptions {
        stop,
        jobs: flags.jobs,
    };
    if flags.jobs > 1 {
        // rayon's global pool; repeated bench calls reuse it.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(flags.jobs)
            .build_global();
    }
    let mode: Mode = flags.mode.into();
    match algo {
        Algorithm::Oracle => oracle::solve_subset_enumeration(instance, mode, flags.cap, &opts),
        Algorithm::Deletion => {
            let m = instance.graph().edge_count();
            let k = m.saturating_sub(instance.ell());
            oracle::solve_by_deletion(instance, k, flags.cap, &opts)
        }
        Algorithm::BranchEll => oracle::solve_branching(instance, &opts),
        Algorithm::TreeSupport => solve_forest_support(instance),
        Algorithm::StarsXp => match flags.t_override {
            Some(t) => solve_stars_fitting_with_t(instance, mode, t, &opts),
            None => solve_stars_fitting(instance, mode, &opts),
        },
        Algorithm::StarsFptC => solve_stars_twins(instance, &opts),
    }
}

fn solve_error_exit(e: &SolveError) -> i32 {
    match e {
        SolveError::Interrupted => EXIT_TIMEOUT,
        _ => EXIT_INAPPLICABLE,
    }
}

fn cmd_solve(args: SolveArgs) -> Result<i32> {
    let instance = read_instance(&args.input)?;
    let trivially_bad = instance.unsatisfiable_communities();
    if !trivially_bad.is_empty() {
        log::info!(
            "communities {trivially_bad:?} cannot satisfy the property even in the full graph"
        );
    }
    let algo = resolve_algo(&instance, args.flags.algo);
    match dispatch(&instance, algo, &args.flags) {
        Ok(result) => {
            let text = match result.solution() {
                Some(solution) => write_solution(&instance, solution),
                None => write_no(),
            };
            print!("{text}");
            if let Some(path) = &args.output {
                fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(if result.is_yes() { EXIT_YES } else { EXIT_NO })
        }
        Err(e) => {
            eprintln!("error: {e}");
            Ok(solve_error_exit(&e))
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<i32> {
    let instance = read_instance(&args.instance)?;
    let text = fs::read_to_string(&args.solution)
        .with_context(|| format!("reading {}", args.solution.display()))?;
    let parsed = parse_solution(&text, &instance)
        .with_context(|| format!("parsing {}", args.solution.display()))?;
    match parsed {
        SolutionFile::No => {
            println!("solution file declares NO; nothing to verify");
            Ok(EXIT_YES)
        }
        SolutionFile::Solution {
            edges,
            stated_edge_count,
            stated_weight,
        } => {
            let report = nws_core::verify_solution(&instance, &edges);
            let mut ok = report.valid;
            if stated_edge_count != report.edge_count {
                println!(
                    "header edge count {stated_edge_count} differs from actual {}",
                    report.edge_count
                );
                ok = false;
            }
            if stated_weight != report.total_weight {
                println!(
                    "header weight {stated_weight} differs from actual {}",
                    report.total_weight
                );
                ok = false;
            }
            for v in &report.violations {
                println!("violation: {v}");
            }
            if ok {
                println!(
                    "valid: {} edges, total weight {}",
                    report.edge_count, report.total_weight
                );
                Ok(EXIT_YES)
            } else {
                Ok(EXIT_NO)
            }
        }
    }
}

fn parse_index_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|t| {
            let v: usize = t.trim().parse().context("bad index")?;
            if v == 0 {
                return Err(anyhow!("indices are 1-based"));
            }
            Ok(v - 1)
        })
        .collect()
}

fn cmd_generate(args: GenerateArgs) -> Result<i32> {
    let mut meta: Metadata = vec![("kind".to_string(), args.kind.clone())];
    let instance = match args.kind.as_str() {
        "3sat-stars" | "3sat-conn" => {
            let path = args
                .dimacs_cnf
                .as_ref()
                .ok_or_else(|| anyhow!("--dimacs-cnf is required for SAT kinds"))?;
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let formula = CnfFormula::parse_dimacs(&text)?;
            let reduction = if args.kind == "3sat-stars" {
                reductions::from_3sat_stars(&formula)?
            } else {
                reductions::from_3sat_connectivity(&formula)?
            };
            meta.extend(reduction.metadata());
            reduction.instance
        }
        "hamcycle" => {
            let source = source_graph(&args)?;
            meta.push(("source_n".to_string(), source.vertex_count().to_string()));
            reductions::from_hamiltonian_cycle(&source)?
        }
        "hitting-set" => {
            let universe = args
                .universe
                .ok_or_else(|| anyhow!("--universe is required for hitting-set"))?;
            let mut sets = Vec::new();
            for s in &args.sets {
                sets.push(parse_index_list(s)?.into_iter().collect::<BTreeSet<_>>());
            }
            let hs = HittingSetInstance::new(universe, sets, args.k)?;
            meta.push(("universe".to_string(), universe.to_string()));
            meta.push(("k".to_string(), args.k.to_string()));
            reductions::from_hitting_set(&hs)?
        }
        "mcc" => {
            let source = source_graph(&args)?;
            let colors_text = args
                .colors
                .as_ref()
                .ok_or_else(|| anyhow!("--colors is required for mcc"))?;
            let colors = colors_text
                .split(';')
                .map(parse_index_list)
                .collect::<Result<Vec<_>>>()?;
            let reduction = reductions::from_multicolored_clique(&source, &colors, args.padding)?;
            meta.extend(reduction.metadata());
            reduction.instance
        }
        "vc-clique" => {
            let source = source_graph(&args)?;
            meta.push(("k".to_string(), args.k.to_string()));
            reductions::from_vertex_cover_clique(&source, args.k)?
        }
        "random" => {
            let params = RandomParams {
                n: args.n,
                edge_prob: args.edge_prob,
                community_count: args.communities,
                size_range: (args.size_min, args.size_max),
                weight_range: (args.weight_min, args.weight_max),
                property: if args.property == "stars" {
                    Property::Stars
                } else {
                    Property::Connectivity
                },
            };
            meta.push(("seed".to_string(), args.seed.to_string()));
            eprintln!("seed: {}", args.seed);
            reductions::random_instance(&params, args.seed)?
        }
        other => return Err(anyhow!("unknown kind {other:?}")),
    };

    let text = write_instance(&instance);
    match &args.out {
        Some(path) => {
            fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            let meta_path = args
                .meta
                .clone()
                .unwrap_or_else(|| PathBuf::from(format!("{}.meta", path.display())));
            fs::write(&meta_path, metadata_json(&meta))
                .with_context(|| format!("writing {}", meta_path.display()))?;
        }
        None => {
            print!("{text}");
            if let Some(meta_path) = &args.meta {
                fs::write(meta_path, metadata_json(&meta))
                    .with_context(|| format!("writing {}", meta_path.display()))?;
            }
        }
    }
    Ok(EXIT_YES)
}

fn source_graph(args: &GenerateArgs) -> Result<nws_core::WeightedGraph> {
    let path = args
        .input
        .as_ref()
        .ok_or_else(|| anyhow!("--input (source graph) is required for this kind"))?;
    let instance = read_instance(path)?;
    Ok(instance.graph().clone())
}

fn metadata_json(meta: &Metadata) -> String {
    let map: serde_json::Map<String, serde_json::Value> = meta
        .iter()
        .map(|(k, v)| (k.clone(), serde_json::Value::String(v.clone())))
        .collect();
    let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(map))
        .expect("string map serializes");
    text.push('\n');
    text
}

fn cmd_bench(args: BenchArgs) -> Result<i32> {
    let run_one = |path: &PathBuf| -> Vec<String> {
        let name = path.display().to_string();
        let instance = match read_instance(path) {
            Ok(i) => i,
            Err(e) => {
                return vec![
                    name,
                    "-".into(),
                    format!("error: {e}"),
                    String::new(),
                    String::new(),
                    "0".into(),
                ]
            }
        };
        let algo = resolve_algo(&instance, args.flags.algo);
        let started = Instant::now();
        let outcome = dispatch(&instance, algo, &args.flags);
        let millis = started.elapsed().as_millis().to_string();
        match outcome {
            Ok(result) => match result.solution() {
                Some(solution) => vec![
                    name,
                    algo.name().into(),
                    "yes".into(),
                    solution.edge_count().to_string(),
                    solution.total_weight(&instance).to_string(),
                    millis,
                ],
                None => vec![
                    name,
                    algo.name().into(),
                    "no".into(),
                    String::new(),
                    String::new(),
                    millis,
                ],
            },
            Err(e) => vec![
                name,
                algo.name().into(),
                format!("error: {e}"),
                String::new(),
                String::new(),
                millis,
            ],
        }
    };

    let rows: Vec<Vec<String>> = if args.flags.jobs > 1 {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(args.flags.jobs)
            .build_global();
        args.inputs.par_iter().map(run_one).collect()
    } else {
        args.inputs.iter().map(run_one).collect()
    };

    let mut writer: csv::Writer<Box<dyn std::io::Write>> = match &args.out {
        Some(path) => csv::Writer::from_writer(Box::new(
            fs::File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => csv::Writer::from_writer(Box::new(std::io::stdout())),
    };
    writer.write_record(["instance", "algo", "answer", "edges", "weight", "millis"])?;
    for row in rows {
        writer.write_record(&row)?;
    }
    writer.flush()?;
    Ok(EXIT_YES)
}
