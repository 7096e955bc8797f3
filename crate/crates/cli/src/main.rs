use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ngbounds_core::bounds::{Catalog, CheckOptions, SLACK_TOLERANCE};
use ngbounds_core::chromatic::DEFAULT_CHROMATIC_CAP;
use ngbounds_core::family::FamilySpec;
use ngbounds_core::graph6::parse_graph6;
use ngbounds_core::invariants::{collect_invariants, InvariantOptions};
use ngbounds_core::report::{write_report, Format};
use ngbounds_core::scan::{
    exit_code_for, run_scan, subgraph_monotonicity_scan, ScanMetadata, ScanOptions, ScanReport, SubgraphMode,
};
use ngbounds_core::search::{optimize, Objective, SearchConfig};
use ngbounds_core::stream::{enumerate_labeled_capped, GraphStream, DEFAULT_ENUMERATION_CAP};
use ngbounds_core::Result;

#[derive(Parser)]
#[command(name = "ngbounds", version, about = "Spectral Nordhaus-Gaddum bound verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a stream of graphs against catalog bounds.
    Scan(ScanArgs),
    /// Print a family member's graph6 and invariants.
    Family(FamilyArgs),
    /// Check one graph.
    Check(CheckArgs),
    /// Search for graphs maximising an objective.
    Search(SearchArgs),
    /// Find one-step subgraphs with larger s+.
    SubgraphScan(SubgraphArgs),
}

#[derive(Args)]
#[group(id = "source", required = true, multiple = false)]
struct Source {
    /// Every labelled graph on K vertices.
    #[arg(long, group = "source")]
    n: Option<usize>,
    /// graph6 file, one graph per line.
    #[arg(long, group = "source")]
    input: Option<PathBuf>,
    /// Read graph6 from standard input.
    #[arg(long, group = "source")]
    stdin: bool,
    /// Family member, e.g. `paley(13)` or `complete_split:5,3`; repeatable.
    #[arg(long = "family", group = "source")]
    families: Vec<FamilySpec>,
}

#[derive(Args)]
struct Tuning {
    /// Slack tolerance; negative values demand a margin.
    #[arg(long, default_value_t = SLACK_TOLERANCE, allow_negative_numbers = true)]
    tol: f64,
    /// Largest order for exact chromatic numbers.
    #[arg(long, default_value_t = DEFAULT_CHROMATIC_CAP)]
    chromatic_cap: usize,
}

impl Tuning {
    fn check_options(&self) -> CheckOptions {
        CheckOptions {
            invariants: InvariantOptions {
                chromatic_cap: self.chromatic_cap,
                ..Default::default()
            },
            slack_tolerance: self.tol,
        }
    }
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    source: Source,
    /// `all` or comma-separated bound ids.
    #[arg(long, default_value = "all", value_delimiter = ',')]
    bounds: Vec<String>,
    #[command(flatten)]
    tuning: Tuning,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Largest order accepted by `--n`.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    enumeration_cap: usize,
    /// Report destination; standard output when absent.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long, default_value = "summary")]
    format: Format,
    /// Report every row instead of violations only.
    #[arg(long)]
    all_rows: bool,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long)]
    kind: String,
    #[arg(long, value_delimiter = ',')]
    params: Vec<usize>,
    #[arg(long, default_value_t = DEFAULT_CHROMATIC_CAP)]
    chromatic_cap: usize,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long)]
    g6: String,
    #[arg(long, default_value = "all", value_delimiter = ',')]
    bounds: Vec<String>,
    #[command(flatten)]
    tuning: Tuning,
    #[arg(long, default_value = "jsonl")]
    format: Format,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    objective: Objective,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    restarts: Option<usize>,
    #[arg(long)]
    steps: Option<usize>,
    /// Sideways moves allowed per restart.
    #[arg(long)]
    plateau: Option<usize>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct SubgraphArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value = "edge")]
    mode: SubgraphMode,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

fn stream_from(source: &Source, enumeration_cap: usize) -> Result<GraphStream> {
    if let Some(n) = source.n {
        enumerate_labeled_capped(n, enumeration_cap)
    } else if let Some(path) = &source.input {
        GraphStream::from_graph6_file(path)
    } else if source.stdin {
        GraphStream::from_reader(io::stdin().lock(), "<stdin>")
    } else {
        GraphStream::from_families(source.families.clone())
    }
}

/// The invocation without flags that cannot affect results.
fn normalised_command() -> String {
    let mut out = Vec::new();
    let mut args = std::env::args().skip(1);
    while let Some(a) = args.next() {
        if a == "--jobs" || a == "--report" {
            args.next();
        } else if !a.starts_with("--jobs=") && !a.starts_with("--report=") {
            out.push(a);
        }
    }
    format!("ngbounds {}", out.join(" "))
}

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn select(bounds: &[String]) -> Result<Catalog> {
    let ids: Vec<&str> = bounds.iter().map(String::as_str).collect();
    Catalog::standard().select(&ids)
}

fn scan(args: ScanArgs) -> Result<i32> {
    let catalog = select(&args.bounds)?;
    let stream = stream_from(&args.source, args.enumeration_cap)?;
    let opts = ScanOptions {
        jobs: args.jobs,
        check: args.tuning.check_options(),
        all_rows: args.all_rows,
    };
    let mut report = run_scan(&stream, &catalog, &opts)?;
    report.metadata.command = Some(normalised_command());
    let mut out = open_output(args.report.as_ref())?;
    write_report(&report, args.format, &mut out)?;
    out.flush()?;
    Ok(report.exit_code)
}

fn family(args: FamilyArgs) -> Result<i32> {
    let spec = FamilySpec::from_parts(&args.kind, &args.params)?;
    let g = spec.build()?;
    let opts = InvariantOptions {
        chromatic_cap: args.chromatic_cap,
        ..Default::default()
    };
    let inv = collect_invariants(&g, &opts)?;
    let mut out = io::stdout().lock();
    writeln!(out, "{}", inv.graph6)?;
    writeln!(out, "{}", serde_json::to_string(&inv)?)?;
    Ok(0)
}

fn check(args: CheckArgs) -> Result<i32> {
    let catalog = select(&args.bounds)?;
    let g = parse_graph6(&args.g6)?;
    let rows = catalog.check_graph(&g, &args.tuning.check_options());
    let code = exit_code_for(&rows);
    let report = ScanReport {
        metadata: ScanMetadata {
            command: Some(normalised_command()),
            source: format!("graph6({})", args.g6),
            bounds: catalog.ids().iter().map(|s| s.to_string()).collect(),
            tolerance: args.tuning.tol,
            seed: None,
            graphs: 1,
        },
        aggregates: Vec::new(),
        rows,
        exit_code: code,
    };
    let mut out = open_output(None)?;
    write_report(&report, args.format, &mut out)?;
    out.flush()?;
    Ok(code)
}

fn search(args: SearchArgs) -> Result<i32> {
    let mut cfg = SearchConfig::new(args.n, args.seed);
    if let Some(r) = args.restarts {
        cfg.restarts = r;
    }
    if let Some(s) = args.steps {
        cfg.steps = s;
    }
    if let Some(p) = args.plateau {
        cfg.plateau = p;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()
        .map_err(|e| ngbounds_core::Error::InvalidConfig(e.to_string()))?;
    let result = pool.install(|| optimize(&args.objective, &cfg))?;
    writeln!(io::stdout().lock(), "{}", serde_json::to_string_pretty(&result)?)?;
    Ok(0)
}

fn subgraph_scan(args: SubgraphArgs) -> Result<i32> {
    let stream = GraphStream::from_graph6_file(&args.input)?;
    let pairs = subgraph_monotonicity_scan(&stream, args.mode, args.jobs)?;
    let mut out = BufWriter::new(io::stdout().lock());
    for p in &pairs {
        writeln!(out, "{}", serde_json::to_string(p)?)?;
    }
    out.flush()?;
    eprintln!("{} graphs, mode {}, {} pairs", stream.len(), args.mode, pairs.len());
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Scan(a) => scan(a),
        Command::Family(a) => family(a),
        Command::Check(a) => check(a),
        Command::Search(a) => search(a),
        Command::SubgraphScan(a) => subgraph_scan(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
