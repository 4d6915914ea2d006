//! Command-line surface.
//!
//! Every subcommand embeds a [`RunManifest`] in its output (a JSON field, or
//! `# manifest:` comment lines in text formats) so a result file records how
//! it was produced. Exit codes: 0 success, 1 a verification suite failed,
//! 2 usage error, 3 internal fault.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::analysis::{
    exact_expected_capture, optimal_capture_values, run_suite_with, AnalysisError, LemmaReport,
    LemmaSuite, SuiteBounds, ValueTable,
};
use crate::engine::{
    monte_carlo, run_trials, summarize, GameConfig, PolicySpec, SimulationReport,
};
use crate::generators::FamilySpec;
use crate::graph::Graph;
use crate::io::{read_graph_path, write_edge_list};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_FAULT: u8 = 3;

/// How an error should terminate the process.
#[derive(Debug, thiserror::Error, PartialEq)]
pub enum CliError {
    /// The request itself was wrong: exit 2.
    #[error("{0}")]
    Usage(String),
    /// The request was fine but could not be completed: exit 3.
    #[error("{0}")]
    Fault(String),
}

fn usage(msg: impl ToString) -> CliError {
    CliError::Usage(msg.to_string())
}

fn fault(msg: impl ToString) -> CliError {
    CliError::Fault(msg.to_string())
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> CliError {
        match e {
            AnalysisError::NonConvergence { .. } => fault(e),
            _ => usage(e),
        }
    }
}

/// Provenance block embedded in every output document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    /// Tool name and version.
    pub tool: String,
    pub subcommand: String,
    /// Raw arguments after the program name.
    pub args: Vec<String>,
    /// Master seed, for the seeded subcommands.
    pub master_seed: Option<u64>,
    pub workers: usize,
    pub duration_secs: f64,
}

impl RunManifest {
    fn new(subcommand: &str, argv: &[String], seed: Option<u64>, workers: usize, t0: Instant) -> Self {
        RunManifest {
            tool: format!("copchase {}", env!("CARGO_PKG_VERSION")),
            subcommand: subcommand.to_string(),
            args: argv.to_vec(),
            master_seed: seed,
            workers,
            duration_secs: t0.elapsed().as_secs_f64(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "copchase",
    version,
    about = "Pursuit of a random walker by a cop on finite connected graphs"
)]
struct Cli {
    /// Worker threads for simulation batches (0 = one per core).
    #[arg(long, global = true, default_value_t = 0, env = "COPCHASE_WORKERS")]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named graph and write it as an edge list or JSON.
    Gen(GenArgs),
    /// Estimate the expected capture time by seeded Monte Carlo.
    Simulate(SimulateArgs),
    /// Solve expected capture times exactly for a memoryless policy.
    Exact(ExactArgs),
    /// Solve expected capture times under optimal cop play.
    Optimal(OptimalArgs),
    /// Run the bound-check suites.
    Verify(VerifyArgs),
    /// Sweep graph families against policies into a CSV table.
    Bench(BenchArgs),
}

/// Graphs are named by family spec (`path:100`, `lollipop:64,c=1.5`,
/// `heawood`, `random_connected:n=30,p=0.2,seed=7`) or by a file path to an
/// edge list / JSON document. Specs take precedence over files.
#[derive(Args, Debug)]
struct GenArgs {
    /// Family spec to build.
    spec: String,
    /// Output file; `.json` selects JSON, anything else an edge list.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Emit JSON (the default when the output path ends in .json).
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct SimulateArgs {
    /// Family spec or graph file.
    graph: String,
    /// One of: oscillate, random, greedy:lex, greedy:random, greedy:history,
    /// hitting, smart.
    #[arg(long, default_value = "smart")]
    policy: String,
    /// Cop start vertex (default chosen per family, else 0).
    #[arg(long)]
    cop: Option<usize>,
    /// Drunk start vertex (default chosen per family, else n-1).
    #[arg(long)]
    drunk: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Abandon a trial after this many moves.
    #[arg(long, default_value_t = 10_000_000)]
    move_cap: u64,
    /// Also write one CSV row per trial (trial,capture_time; the time is
    /// blank for trials the move cap truncated).
    #[arg(long)]
    per_trial: Option<PathBuf>,
    /// Output file (stdout if absent).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ExactArgs {
    /// Family spec or graph file.
    graph: String,
    /// A memoryless policy: oscillate, random, greedy:lex, greedy:random,
    /// hitting.
    #[arg(long, default_value = "greedy:lex")]
    policy: String,
    /// With --drunk: report this single start pair instead of the table.
    #[arg(long)]
    cop: Option<usize>,
    #[arg(long)]
    drunk: Option<usize>,
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
    /// Output file (stdout if absent). Tables are CSV, single values JSON.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OptimalArgs {
    /// Family spec or graph file.
    graph: String,
    /// With --drunk: report this single start pair instead of the table.
    #[arg(long)]
    cop: Option<usize>,
    #[arg(long)]
    drunk: Option<usize>,
    /// Let the cop stay put for a move (fixes parity on bipartite graphs).
    #[arg(long)]
    cop_may_idle: bool,
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
    /// Output file (stdout if absent). Tables are CSV, single values JSON.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name (vc, keylemma, four-lemma, three-step, diam-delta,
    /// regular-bound, tree-bound) or "all".
    #[arg(default_value = "all")]
    suite: String,
    /// Cap the enumerated or swept vertex count (suite-specific guards).
    #[arg(long)]
    max_n: Option<usize>,
    /// Walk horizon for the walk-based suites.
    #[arg(long)]
    t_max: Option<usize>,
    /// Base seed for the random-graph portions.
    #[arg(long)]
    seed: Option<u64>,
    /// Also write the reports as JSON.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BenchArgs {
    /// Family to sweep: a bare name (`ladder`) or a name with fixed extra
    /// parameters (`lollipop:c=2`); each size is spliced in as `n`.
    family: String,
    /// Comma-separated sizes.
    #[arg(long, value_delimiter = ',', default_value = "40,80")]
    sizes: Vec<usize>,
    /// Comma-separated policies.
    #[arg(long, value_delimiter = ',', default_value = "greedy:lex,smart")]
    policies: Vec<String>,
    #[arg(long, default_value_t = 400)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000_000)]
    move_cap: u64,
    /// Output CSV file (stdout if absent).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// Entry point for the binary: parses `std::env::args`.
pub fn run() -> u8 {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let mut out = std::io::stdout();
    let mut err = std::io::stderr();
    run_from(&argv, &mut out, &mut err)
}

/// Run the CLI against explicit arguments and streams.
pub fn run_from(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let full = std::iter::once("copchase".to_string()).chain(argv.iter().cloned());
    let cli = match Cli::try_parse_from(full) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let _ = write!(err, "{e}");
            return EXIT_USAGE;
        }
    };
    let t0 = Instant::now();
    let result = match cli.command {
        Command::Gen(a) => gen(a, argv, t0, out),
        Command::Simulate(a) => simulate(a, cli.workers, argv, t0, out),
        Command::Exact(a) => exact(a, argv, t0, out),
        Command::Optimal(a) => optimal(a, argv, t0, out),
        Command::Verify(a) => verify(a, argv, t0, out),
        Command::Bench(a) => bench(a, cli.workers, argv, t0, out, err),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                CliError::Usage(_) => EXIT_USAGE,
                CliError::Fault(_) => EXIT_FAULT,
            }
        }
    }
}

/// Resolve a graph argument: family spec first, then a file on disk.
/// Returns the graph, a display name, and default starting vertices.
fn load_graph(arg: &str) -> Result<(Graph, String, (usize, usize)), CliError> {
    match FamilySpec::parse(arg) {
        Ok(spec) => {
            let g = spec.build().map_err(usage)?;
            let starts = spec.default_starts(&g);
            Ok((g, spec.to_string(), starts))
        }
        Err(spec_err) => {
            let path = Path::new(arg);
            if path.exists() {
                let g = read_graph_path(path).map_err(usage)?;
                let starts = (0, g.n().saturating_sub(1));
                Ok((g, arg.to_string(), starts))
            } else {
                Err(usage(format!(
                    "{arg:?} is not a family spec ({spec_err}) and no such file exists"
                )))
            }
        }
    }
}

fn resolve_starts(
    g: &Graph,
    defaults: (usize, usize),
    cop: Option<usize>,
    drunk: Option<usize>,
) -> Result<(usize, usize), CliError> {
    let cop = cop.unwrap_or(defaults.0);
    let drunk = drunk.unwrap_or(defaults.1);
    for v in [cop, drunk] {
        if v >= g.n() {
            return Err(usage(format!(
                "start vertex {v} out of range for a graph on {} vertices",
                g.n()
            )));
        }
    }
    Ok((cop, drunk))
}

fn emit(path: Option<&Path>, out: &mut dyn Write, body: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, body)
            .map_err(|e| fault(format!("writing {}: {e}", p.display()))),
        None => out
            .write_all(body.as_bytes())
            .map_err(|e| fault(format!("writing output: {e}"))),
    }
}

fn manifest_comment(manifest: &RunManifest) -> String {
    format!(
        "# manifest: {}\n",
        serde_json::to_string(manifest).expect("manifest serializes")
    )
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct GenDoc<'a> {
    n: usize,
    edges: Vec<(usize, usize)>,
    manifest: &'a RunManifest,
}

fn gen(a: GenArgs, argv: &[String], t0: Instant, out: &mut dyn Write) -> Result<u8, CliError> {
    let spec = FamilySpec::parse(&a.spec).map_err(usage)?;
    let g = spec.build().map_err(usage)?;
    let manifest = RunManifest::new("gen", argv, None, 0, t0);
    let as_json = a.json
        || a.output
            .as_deref()
            .and_then(Path::extension)
            .is_some_and(|e| e.eq_ignore_ascii_case("json"));
    let body = if as_json {
        let doc = GenDoc {
            n: g.n(),
            edges: g.edges().collect(),
            manifest: &manifest,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("graph serializes");
        s.push('\n');
        s
    } else {
        let mut buf = Vec::new();
        buf.extend_from_slice(format!("# {}\n", spec).as_bytes());
        buf.extend_from_slice(manifest_comment(&manifest).as_bytes());
        write_edge_list(&g, &mut buf).map_err(fault)?;
        String::from_utf8(buf).expect("edge lists are ascii")
    };
    emit(a.output.as_deref(), out, &body)?;
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct GraphBlock {
    spec: String,
    n: usize,
    cop: usize,
    drunk: usize,
}

/// Simulation document: the `report` block depends only on the graph,
/// policy, starts, trials and master seed, never on worker count.
#[derive(Serialize, Deserialize)]
pub struct SimulateDoc {
    pub manifest: RunManifest,
    graph: GraphBlock,
    pub report: SimulationReport,
}

fn simulate(
    a: SimulateArgs,
    workers: usize,
    argv: &[String],
    t0: Instant,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let (g, name, defaults) = load_graph(&a.graph)?;
    let (cop, drunk) = resolve_starts(&g, defaults, a.cop, a.drunk)?;
    let spec = PolicySpec::parse(&a.policy).map_err(usage)?;
    if a.trials == 0 {
        return Err(usage("need at least one trial"));
    }
    let config = GameConfig::new(cop, drunk).with_move_cap(a.move_cap);
    let outcomes = run_trials(&g, spec, &config, a.trials, a.seed, workers).map_err(fault)?;
    if let Some(path) = a.per_trial.as_deref() {
        let mut csv = String::from("trial,capture_time\n");
        for o in &outcomes {
            let trial = o.stream.expect("batch trials are labeled");
            match o.capture_time {
                Some(t) => csv.push_str(&format!("{trial},{t}\n")),
                None => csv.push_str(&format!("{trial},\n")),
            }
        }
        std::fs::write(path, csv)
            .map_err(|e| fault(format!("writing {}: {e}", path.display())))?;
    }
    let report = summarize(spec, &config, a.seed, &outcomes);
    let doc = SimulateDoc {
        manifest: RunManifest::new("simulate", argv, Some(a.seed), workers, t0),
        graph: GraphBlock {
            spec: name,
            n: g.n(),
            cop,
            drunk,
        },
        report,
    };
    let mut body = serde_json::to_string_pretty(&doc).expect("report serializes");
    body.push('\n');
    emit(a.output.as_deref(), out, &body)?;
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// exact / optimal
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct ValueDoc {
    pub manifest: RunManifest,
    pub graph: String,
    pub n: usize,
    pub policy: String,
    pub cop: usize,
    pub drunk: usize,
    pub value: f64,
    pub sweeps: u64,
    pub residual: f64,
}

/// Render a full table as CSV with manifest comments, or a single entry as
/// JSON when starts were given.
fn table_output(
    table: &ValueTable,
    policy_label: &str,
    graph_name: &str,
    starts: (Option<usize>, Option<usize>),
    manifest: RunManifest,
) -> Result<String, CliError> {
    match starts {
        (Some(cop), Some(drunk)) => {
            let doc = ValueDoc {
                manifest,
                graph: graph_name.to_string(),
                n: table.n(),
                policy: policy_label.to_string(),
                cop,
                drunk,
                value: table.value(cop, drunk),
                sweeps: table.sweeps,
                residual: table.residual,
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("value serializes");
            s.push('\n');
            Ok(s)
        }
        (None, None) => {
            let mut s = String::new();
            s.push_str(&format!("# graph: {graph_name} n={}\n", table.n()));
            s.push_str(&format!(
                "# policy: {policy_label} sweeps={} residual={:e}\n",
                table.sweeps, table.residual
            ));
            s.push_str(&manifest_comment(&manifest));
            s.push_str("cop,drunk,value\n");
            for (c, d, v) in table.entries() {
                s.push_str(&format!("{c},{d},{v}\n"));
            }
            Ok(s)
        }
        _ => Err(usage("give both --cop and --drunk, or neither for the full table")),
    }
}

fn exact(a: ExactArgs, argv: &[String], t0: Instant, out: &mut dyn Write) -> Result<u8, CliError> {
    let (g, name, _) = load_graph(&a.graph)?;
    let spec = PolicySpec::parse(&a.policy).map_err(usage)?;
    let mem = spec.as_memoryless().ok_or_else(|| {
        usage(format!(
            "policy {} keeps history; exact tables exist for oscillate, random, greedy:lex, greedy:random, hitting",
            spec.name()
        ))
    })?;
    if let (Some(c), Some(d)) = (a.cop, a.drunk) {
        resolve_starts(&g, (c, d), None, None)?;
    }
    let table = exact_expected_capture(&g, mem, a.tolerance, false)?;
    let manifest = RunManifest::new("exact", argv, None, 0, t0);
    let body = table_output(&table, spec.name(), &name, (a.cop, a.drunk), manifest)?;
    emit(a.output.as_deref(), out, &body)?;
    Ok(EXIT_OK)
}

fn optimal(
    a: OptimalArgs,
    argv: &[String],
    t0: Instant,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let (g, name, _) = load_graph(&a.graph)?;
    if let (Some(c), Some(d)) = (a.cop, a.drunk) {
        resolve_starts(&g, (c, d), None, None)?;
    }
    let table = optimal_capture_values(&g, a.tolerance, a.cop_may_idle)?;
    let label = if a.cop_may_idle {
        "optimal(idle allowed)"
    } else {
        "optimal"
    };
    let manifest = RunManifest::new("optimal", argv, None, 0, t0);
    let body = table_output(&table, label, &name, (a.cop, a.drunk), manifest)?;
    emit(a.output.as_deref(), out, &body)?;
    Ok(EXIT_OK)
}

/// Parse a value-table CSV produced by `exact` or `optimal`.
pub fn parse_value_table_csv(text: &str) -> Result<Vec<(usize, usize, f64)>, CliError> {
    let mut rows = Vec::new();
    let mut saw_header = false;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !saw_header {
            if line != "cop,drunk,value" {
                return Err(usage(format!(
                    "line {}: expected header cop,drunk,value, got {line:?}",
                    i + 1
                )));
            }
            saw_header = true;
            continue;
        }
        let bad = || usage(format!("line {}: bad value row {line:?}", i + 1));
        let mut parts = line.split(',');
        let mut next = || parts.next().ok_or_else(bad);
        let c = next()?.parse::<usize>().map_err(|_| bad())?;
        let d = next()?.parse::<usize>().map_err(|_| bad())?;
        let v = next()?.parse::<f64>().map_err(|_| bad())?;
        if parts.next().is_some() {
            return Err(bad());
        }
        rows.push((c, d, v));
    }
    if !saw_header {
        return Err(usage("no cop,drunk,value header found"));
    }
    Ok(rows)
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct VerifyDoc {
    manifest: RunManifest,
    reports: Vec<LemmaReport>,
}

fn verify(a: VerifyArgs, argv: &[String], t0: Instant, out: &mut dyn Write) -> Result<u8, CliError> {
    let suites: Vec<LemmaSuite> = if a.suite == "all" {
        LemmaSuite::ALL.to_vec()
    } else {
        vec![LemmaSuite::parse(&a.suite).ok_or_else(|| {
            usage(format!(
                "unknown suite {:?}; expected all, vc, keylemma, four-lemma, three-step, diam-delta, regular-bound, tree-bound",
                a.suite
            ))
        })?]
    };
    let bounds = SuiteBounds {
        max_n: a.max_n,
        t_max: a.t_max,
        seed: a.seed,
    };
    let mut reports = Vec::new();
    let mut all_pass = true;
    for suite in suites {
        let r = run_suite_with(suite, bounds)?;
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{verdict} {}: {} checks, worst margin {:.3e} ({})",
            r.lemma, r.checks, r.worst_margin, r.domain
        )
        .map_err(fault)?;
        if let Some(c) = &r.counterexample {
            writeln!(out, "  counterexample: n={} edges={:?} {}", c.n, c.edges, c.witness)
                .map_err(fault)?;
        }
        all_pass &= r.pass;
        reports.push(r);
    }
    writeln!(out, "verify: {}", if all_pass { "PASS" } else { "FAIL" })
        .map_err(fault)?;
    if let Some(path) = a.output.as_deref() {
        let doc = VerifyDoc {
            manifest: RunManifest::new("verify", argv, None, 0, t0),
            reports,
        };
        let mut body = serde_json::to_string_pretty(&doc).expect("reports serialize");
        body.push('\n');
        emit(Some(path), out, &body)?;
    }
    Ok(if all_pass { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

/// One row of a bench CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub family: String,
    pub n: usize,
    pub policy: String,
    pub trials: u64,
    pub mean: f64,
    pub stderr: f64,
    pub min: u64,
    pub max: u64,
}

fn bench(
    a: BenchArgs,
    workers: usize,
    argv: &[String],
    t0: Instant,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8, CliError> {
    if a.trials == 0 {
        return Err(usage("need at least one trial"));
    }
    if a.sizes.is_empty() || a.policies.is_empty() {
        return Err(usage("need at least one size and one policy"));
    }
    // Validate the whole grid before running anything.
    let sized = |n: usize| {
        if a.family.contains(':') {
            format!("{},n={n}", a.family)
        } else {
            format!("{}:n={n}", a.family)
        }
    };
    let mut grid = Vec::new();
    for &n in &a.sizes {
        let spec = FamilySpec::parse(&sized(n)).map_err(usage)?;
        let g = spec.build().map_err(usage)?;
        grid.push((spec, g));
    }
    let policies: Vec<PolicySpec> = a
        .policies
        .iter()
        .map(|p| PolicySpec::parse(p).map_err(usage))
        .collect::<Result<_, _>>()?;

    let mut failed = false;
    let mut rows = Vec::new();
    for (spec, g) in &grid {
        let (cop, drunk) = spec.default_starts(g);
        let config = GameConfig::new(cop, drunk).with_move_cap(a.move_cap);
        for &policy in &policies {
            match monte_carlo(g, policy, &config, a.trials, a.seed, workers) {
                Ok(r) => rows.push(BenchRow {
                    family: a.family.clone(),
                    n: g.n(),
                    policy: r.policy,
                    trials: r.trials,
                    mean: r.mean,
                    stderr: r.stderr,
                    min: r.min,
                    max: r.max,
                }),
                Err(e) => {
                    failed = true;
                    let _ = writeln!(err, "bench {spec} {}: {e}", policy.name());
                }
            }
        }
    }

    let manifest = RunManifest::new("bench", argv, Some(a.seed), workers, t0);
    let mut body = manifest_comment(&manifest);
    body.push_str("family,n,policy,trials,mean,stderr,min,max\n");
    for r in &rows {
        body.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.family, r.n, r.policy, r.trials, r.mean, r.stderr, r.min, r.max
        ));
    }
    emit(a.output.as_deref(), out, &body)?;
    Ok(if failed { EXIT_FAULT } else { EXIT_OK })
}

/// Parse a bench CSV back into rows.
pub fn parse_bench_csv(text: &str) -> Result<Vec<BenchRow>, CliError> {
    const HEADER: &str = "family,n,policy,trials,mean,stderr,min,max";
    let mut rows = Vec::new();
    let mut saw_header = false;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !saw_header {
            if line != HEADER {
                return Err(usage(format!("line {}: expected header {HEADER}", i + 1)));
            }
            saw_header = true;
            continue;
        }
        let parts: Vec<&str> = line.split(',').collect();
        // Family specs themselves contain commas (lollipop:64,c=2), so split
        // from the right: the final six fields are numeric, the second group
        // is the policy, and the rest re-joins into the family name.
        if parts.len() < 8 {
            return Err(usage(format!("line {}: bad bench row {line:?}", i + 1)));
        }
        let k = parts.len();
        let bad = || usage(format!("line {}: bad bench row {line:?}", i + 1));
        rows.push(BenchRow {
            family: parts[..k - 7].join(","),
            n: parts[k - 7].parse().map_err(|_| bad())?,
            policy: parts[k - 6].to_string(),
            trials: parts[k - 5].parse().map_err(|_| bad())?,
            mean: parts[k - 4].parse().map_err(|_| bad())?,
            stderr: parts[k - 3].parse().map_err(|_| bad())?,
            min: parts[k - 2].parse().map_err(|_| bad())?,
            max: parts[k - 1].parse().map_err(|_| bad())?,
        });
    }
    if !saw_header {
        return Err(usage("no bench header found"));
    }
    Ok(rows)
}
