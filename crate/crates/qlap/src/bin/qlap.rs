//! Command-line front end for the `qlap` library.
//!
//! Thin by design: every subcommand parses arguments, calls one library
//! entry point, and formats the result as TSV (default) or JSON. Detected
//! violations of a mathematical invariant exit with status 2 so that a CI
//! pipeline can falsify claims mechanically; usage and input errors exit 1.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qlap::bipartite::{mt_report, CutStrategy, MtReport, RatioSupremum, MAX_EXACT_ORDER};
use qlap::bounds::{check_graph_against_bounds, qmin_bounds, turan_qmin_check, TuranCheck};
use qlap::graph::{labeled_graphs, Graph};
use qlap::graph6::{from_edge_list_text, from_graph6, to_edge_list_text, to_graph6};
use qlap::search::{
    conjecture2_probe, exhaustive_search, local_search, Anneal, ProbeReport, SearchConfig,
    SearchResult, StartPoint, MAX_EXHAUSTIVE_ORDER,
};
use qlap::spectral::{
    blowup_complement_spectrum_closed, blowup_spectrum_closed, spectrum, MatrixKind,
};
use qlap::srg::{higman_sims, srg_violation, HIGMAN_SIMS_PARAMS};
use qlap::{Error, MAX_ORDER};

// ----------------------------------------------------------------------
// Argument surface
// ----------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "qlap",
    version,
    about = "Smallest signless-Laplacian eigenvalue of clique-bounded graphs: \
             constructions, spectra, bounds, and extremal search",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value = "tsv")]
    format: Format,

    /// Numeric tolerance for verification subcommands.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Omit the timestamp field from JSON search records.
    #[arg(long, global = true)]
    no_timestamp: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph and print it as graph6 (or an edge list).
    Construct(ConstructArgs),
    /// Print the spectrum of a graph's adjacency, Laplacian, or signless
    /// Laplacian matrix.
    Spectrum(SpectrumArgs),
    /// Check the closed-form blowup spectra against direct eigensolves.
    BlowupVerify(BlowupVerifyArgs),
    /// Compare the bipartization cost of a graph with its q_min lower bound.
    MtCheck(MtCheckArgs),
    /// Tabulate the known bounds on the maximum q_min of K_{r+1}-free graphs.
    Bounds(BoundsArgs),
    /// Evaluate the Turán graph T_r(n) against its closed-form benchmarks.
    TuranCheck(PairArgs),
    /// Verify the 100-vertex strongly regular graph and its q_min value.
    HsVerify(HsVerifyArgs),
    /// Search for K_{r+1}-free graphs with large q_min.
    Search(SearchArgs),
    /// Compare the best graph found at order n with the Turán graph.
    ProbeConjecture2(ProbeArgs),
    /// Scan small graphs for the worst bipartization-cost ratio.
    RatioScan(RatioScanArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructKind {
    Turan,
    Complete,
    Cycle,
    Empty,
    Petersen,
    HigmanSims,
    Blowup,
    Complement,
}

#[derive(Args)]
struct ConstructArgs {
    /// Which construction to build.
    #[arg(long, value_enum)]
    kind: ConstructKind,

    /// Number of vertices (turan, complete, cycle, empty).
    #[arg(long)]
    n: Option<usize>,

    /// Number of parts for the Turán graph.
    #[arg(long)]
    r: Option<usize>,

    /// Blowup factor (each vertex becomes an independent set of t copies).
    #[arg(long)]
    t: Option<usize>,

    /// Base graph for blowup/complement: a graph6 string, or a path to an
    /// edge-list file.
    #[arg(long)]
    graph: Option<String>,

    /// Print an edge list (one "u v" pair per line) instead of graph6.
    #[arg(long)]
    edge_list: bool,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Input graph: a graph6 string, or a path to an edge-list file.
    #[arg(long)]
    graph: String,

    /// Matrix to diagonalize: A, L, or Q.
    #[arg(long, default_value = "Q")]
    kind: String,
}

#[derive(Args)]
struct BlowupVerifyArgs {
    /// Base graph: a graph6 string, or a path to an edge-list file.
    #[arg(long)]
    graph: String,

    /// Blowup factor.
    #[arg(long)]
    t: usize,
}

#[derive(Args)]
struct MtCheckArgs {
    /// Input graph: a graph6 string, or a path to an edge-list file.
    #[arg(long)]
    graph: String,

    /// Cut method; exact is limited to 26 vertices.
    #[arg(long, value_enum, default_value = "exact")]
    method: CutChoice,

    /// Seed for the heuristic cut.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Random restarts for the heuristic cut.
    #[arg(long, default_value_t = 8)]
    restarts: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CutChoice {
    Exact,
    Heuristic,
}

#[derive(Args)]
struct PairArgs {
    /// Number of vertices.
    #[arg(long)]
    n: usize,

    /// Clique parameter: the graphs considered contain no K_{r+1}.
    #[arg(long)]
    r: usize,
}

#[derive(Args)]
struct BoundsArgs {
    /// Number of vertices.
    #[arg(long)]
    n: usize,

    /// Clique parameter: the graphs considered contain no K_{r+1}.
    #[arg(long)]
    r: usize,

    /// Optional graph (graph6 string or edge-list file) to check against
    /// every applicable bound; its order must equal --n.
    #[arg(long)]
    graph: Option<String>,
}

#[derive(Args)]
struct HsVerifyArgs {}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StartChoice {
    Turan,
    Random,
    Given,
}

#[derive(Args)]
struct SearchArgs {
    /// Number of vertices.
    #[arg(long)]
    n: usize,

    /// Clique parameter: candidate graphs must stay K_{r+1}-free.
    #[arg(long)]
    r: usize,

    /// Enumerate every labeled graph instead of local search (n <= 7).
    #[arg(long)]
    exhaustive: bool,

    /// Seed for the local search.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Independent restarts of the local search.
    #[arg(long, default_value_t = 8)]
    restarts: usize,

    /// Toggle steps per restart.
    #[arg(long, default_value_t = 1500)]
    steps: usize,

    /// Accept some worsening moves under a geometric cooling schedule.
    #[arg(long)]
    anneal: bool,

    /// Initial temperature for --anneal.
    #[arg(long, default_value_t = 0.5)]
    t0: f64,

    /// Geometric cooling factor in (0,1) for --anneal.
    #[arg(long, default_value_t = 0.995)]
    cooling: f64,

    /// Starting point for each restart.
    #[arg(long, value_enum, default_value = "random")]
    start: StartChoice,

    /// Start graph for --start given: a graph6 string or edge-list file.
    #[arg(long)]
    graph: Option<String>,

    /// Restrict moves to degree-preserving two-edge swaps.
    #[arg(long)]
    regular: bool,

    /// Run restarts on multiple threads (same result, same order).
    #[arg(long)]
    parallel: bool,
}

#[derive(Args)]
struct ProbeArgs {
    /// Number of vertices.
    #[arg(long)]
    n: usize,

    /// Clique parameter; the probe compares against T_r(n), so r >= 3.
    #[arg(long)]
    r: usize,

    /// Seed for the local-search branch (n > 7).
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Restarts for the local-search branch.
    #[arg(long, default_value_t = 8)]
    restarts: usize,

    /// Steps per restart for the local-search branch.
    #[arg(long, default_value_t = 1500)]
    steps: usize,
}

#[derive(Args)]
struct RatioScanArgs {
    /// Scan every labeled graph on 1..=max_n vertices (max 7).
    #[arg(long, default_value_t = 5)]
    max_n: usize,
}

// ----------------------------------------------------------------------
// Exit discipline
// ----------------------------------------------------------------------

/// Reasons the CLI terminates unsuccessfully. Usage and input problems exit
/// with 1; a detected violation of a mathematical claim exits with 2, after
/// the violating witness has been printed.
enum Failure {
    Usage(String),
    Violation(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Violation(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Violation(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            // A failed internal self-check means a mathematical claim did
            // not survive contact with the computation.
            Error::ConstructionCheck(_) => Failure::Violation(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn violation(msg: impl Into<String>) -> Failure {
    Failure::Violation(msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; everything else is a
            // usage error (exit 1, not clap's default 2, which is reserved
            // for falsified invariants here).
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("qlap: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Construct(a) => construct(cli, a),
        Command::Spectrum(a) => spectrum_cmd(cli, a),
        Command::BlowupVerify(a) => blowup_verify(cli, a),
        Command::MtCheck(a) => mt_check(cli, a),
        Command::Bounds(a) => bounds_cmd(cli, a),
        Command::TuranCheck(a) => turan_check_cmd(cli, a),
        Command::HsVerify(_) => hs_verify(cli),
        Command::Search(a) => search_cmd(cli, a),
        Command::ProbeConjecture2(a) => probe_cmd(cli, a),
        Command::RatioScan(a) => ratio_scan(cli, a),
    }
}

// ----------------------------------------------------------------------
// Shared plumbing
// ----------------------------------------------------------------------

/// The size cap on constructed graphs: 1000 vertices, lowered (never
/// raised) by the QLAP_MAX_N environment variable.
fn effective_cap() -> Result<usize, Failure> {
    match std::env::var("QLAP_MAX_N") {
        Err(_) => Ok(MAX_ORDER),
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(v) if v >= 1 => Ok(v.min(MAX_ORDER)),
            _ => Err(usage(format!(
                "QLAP_MAX_N must be a positive integer, got {raw:?}"
            ))),
        },
    }
}

fn check_cap(order: usize, cap: usize) -> CliResult {
    if order > cap {
        return Err(usage(format!(
            "order {order} exceeds the active cap of {cap} vertices \
             (QLAP_MAX_N lowers the built-in limit of {MAX_ORDER})"
        )));
    }
    Ok(())
}

/// Load a graph from a graph6 string, or from an edge-list file when the
/// argument names an existing file.
fn load_graph(spec: &str, cap: usize) -> Result<Graph, Failure> {
    let path = std::path::Path::new(spec);
    let g = if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        from_edge_list_text(&text)?
    } else {
        from_graph6(spec)?
    };
    check_cap(g.order(), cap)?;
    Ok(g)
}

/// Print a report to stdout or to --out.
fn emit(cli: &Cli, text: &str) -> CliResult {
    let mut body = text.to_string();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &cli.out {
        None => {
            print!("{body}");
            Ok(())
        }
        Some(path) => std::fs::write(path, body)
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
    }
}

/// Render an eigenvalue with up to nine decimals, trimming trailing zeros
/// so that exact integers print as integers.
fn fmt_value(v: f64) -> String {
    let rounded = (v * 1e9).round() / 1e9;
    // Avoid the "-0" artifact for tiny negative values.
    let rounded = if rounded == 0.0 { 0.0 } else { rounded };
    format!("{rounded}")
}

fn unix_timestamp() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

// ----------------------------------------------------------------------
// Subcommands
// ----------------------------------------------------------------------

fn construct(cli: &Cli, a: &ConstructArgs) -> CliResult {
    let cap = effective_cap()?;
    let need_n = |what: &str| {
        a.n.ok_or_else(|| usage(format!("--n is required for --kind {what}")))
    };
    let g = match a.kind {
        ConstructKind::Turan => {
            let n = need_n("turan")?;
            let r = a.r.ok_or_else(|| usage("--r is required for --kind turan"))?;
            check_cap(n, cap)?;
            Graph::turan(n, r)?
        }
        ConstructKind::Complete => {
            let n = need_n("complete")?;
            check_cap(n, cap)?;
            Graph::complete(n)?
        }
        ConstructKind::Cycle => {
            let n = need_n("cycle")?;
            check_cap(n, cap)?;
            Graph::cycle(n)?
        }
        ConstructKind::Empty => {
            let n = need_n("empty")?;
            check_cap(n, cap)?;
            Graph::empty(n)?
        }
        ConstructKind::Petersen => {
            check_cap(10, cap)?;
            Graph::petersen()
        }
        ConstructKind::HigmanSims => {
            check_cap(100, cap)?;
            higman_sims()?
        }
        ConstructKind::Blowup => {
            let base = a
                .graph
                .as_deref()
                .ok_or_else(|| usage("--graph is required for --kind blowup"))?;
            let t = a.t.ok_or_else(|| usage("--t is required for --kind blowup"))?;
            let base = load_graph(base, cap)?;
            check_cap(base.order().saturating_mul(t), cap)?;
            base.blowup(t)?
        }
        ConstructKind::Complement => {
            let base = a
                .graph
                .as_deref()
                .ok_or_else(|| usage("--graph is required for --kind complement"))?;
            load_graph(base, cap)?.complement()
        }
    };

    if a.edge_list {
        return emit(cli, &to_edge_list_text(&g));
    }
    let g6 = to_graph6(&g);
    match cli.format {
        Format::Tsv => emit(
            cli,
            &format!("graph6\tn\tm\n{}\t{}\t{}", g6, g.order(), g.edge_count()),
        ),
        Format::Json => emit(
            cli,
            &serde_json::json!({"graph6": g6, "n": g.order(), "m": g.edge_count()}).to_string(),
        ),
    }
}

fn spectrum_cmd(cli: &Cli, a: &SpectrumArgs) -> CliResult {
    let cap = effective_cap()?;
    let g = load_graph(&a.graph, cap)?;
    let kind: MatrixKind = a.kind.parse()?;
    let spec = spectrum(&g, kind)?;
    match cli.format {
        Format::Tsv => {
            let line = spec
                .values()
                .iter()
                .map(|&v| fmt_value(v))
                .collect::<Vec<_>>()
                .join(" ");
            emit(cli, &line)
        }
        Format::Json => {
            let mults: Vec<serde_json::Value> = spec
                .multiplicities()
                .into_iter()
                .map(|(v, k)| serde_json::json!([v, k]))
                .collect();
            emit(
                cli,
                &serde_json::json!({
                    "kind": kind.letter().to_string(),
                    "n": g.order(),
                    "values": spec.values(),
                    "multiplicities": mults,
                })
                .to_string(),
            )
        }
    }
}

fn blowup_verify(cli: &Cli, a: &BlowupVerifyArgs) -> CliResult {
    let cap = effective_cap()?;
    let base = load_graph(&a.graph, cap)?;
    check_cap(base.order().saturating_mul(a.t), cap)?;

    let blown = base.blowup(a.t)?;
    let co_blown = blown.complement();

    let mut rows: Vec<(String, String, f64)> = Vec::new();
    for kind in MatrixKind::ALL {
        let closed = blowup_spectrum_closed(&base, a.t, kind)?;
        let direct = spectrum(&blown, kind)?;
        rows.push(("blowup".into(), kind.letter().to_string(), closed.max_abs_difference(&direct)?));

        let closed = blowup_complement_spectrum_closed(&base, a.t, kind)?;
        let direct = spectrum(&co_blown, kind)?;
        rows.push((
            "complement-blowup".into(),
            kind.letter().to_string(),
            closed.max_abs_difference(&direct)?,
        ));
    }

    let worst = rows.iter().map(|r| r.2).fold(0.0, f64::max);
    let render_status = |d: f64| if d <= cli.tol { "ok" } else { "MISMATCH" };
    match cli.format {
        Format::Tsv => {
            let mut out = String::from("variant\tmatrix\tmax_abs_difference\tstatus");
            for (variant, kind, diff) in &rows {
                out.push_str(&format!(
                    "\n{variant}\t{kind}\t{:e}\t{}",
                    diff,
                    render_status(*diff)
                ));
            }
            emit(cli, &out)?;
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(variant, kind, diff)| {
                    serde_json::json!({
                        "variant": variant,
                        "matrix": kind,
                        "max_abs_difference": diff,
                        "ok": *diff <= cli.tol,
                    })
                })
                .collect();
            emit(cli, &serde_json::Value::Array(items).to_string())?;
        }
    }
    if worst > cli.tol {
        return Err(violation(format!(
            "closed-form spectrum mismatch: max |difference| = {worst:e} exceeds tol {:e} \
             for base graph {} with t = {}",
            cli.tol,
            to_graph6(&base),
            a.t
        )));
    }
    Ok(())
}

fn render_mt(cli: &Cli, rep: &MtReport) -> CliResult {
    match cli.format {
        Format::Tsv => emit(cli, &format!("{}\n{}", MtReport::TSV_HEADER, rep.tsv_row())),
        Format::Json => emit(cli, &serde_json::to_string(rep).expect("report serializes")),
    }
}

fn mt_check(cli: &Cli, a: &MtCheckArgs) -> CliResult {
    let cap = effective_cap()?;
    let g = load_graph(&a.graph, cap)?;
    let strategy = match a.method {
        CutChoice::Exact => {
            if g.order() > MAX_EXACT_ORDER {
                return Err(usage(format!(
                    "exact max-cut is limited to {MAX_EXACT_ORDER} vertices (got {}); \
                     use --method heuristic",
                    g.order()
                )));
            }
            CutStrategy::Exact
        }
        CutChoice::Heuristic => CutStrategy::Heuristic {
            seed: a.seed,
            restarts: a.restarts,
        },
    };
    let rep = mt_report(&g, strategy)?;
    render_mt(cli, &rep)?;
    if rep.gap < -cli.tol {
        return Err(violation(format!(
            "bipartization bound violated: cost {} < q_min*n/4 = {} on {} (gap {})",
            rep.bipartization_cost,
            rep.bound,
            to_graph6(&g),
            rep.gap
        )));
    }
    Ok(())
}

fn bounds_cmd(cli: &Cli, a: &BoundsArgs) -> CliResult {
    let rep = qmin_bounds(a.n, a.r)?;

    let violations = match a.graph.as_deref() {
        None => None,
        Some(spec) => {
            let cap = effective_cap()?;
            let g = load_graph(spec, cap)?;
            if g.order() != a.n {
                return Err(usage(format!(
                    "--graph has {} vertices but --n is {}",
                    g.order(),
                    a.n
                )));
            }
            Some((check_graph_against_bounds(&g, a.r)?, to_graph6(&g)))
        }
    };

    match cli.format {
        Format::Tsv => {
            let mut out = rep.tsv();
            out.push_str(&format!("\n# c_r in {}", rep.c_r_interval));
            if let Some((list, _)) = &violations {
                if list.is_empty() {
                    out.push_str("\ngraph-check\tok");
                } else {
                    for v in list {
                        out.push_str(&format!("\ngraph-check\tVIOLATION: {v}"));
                    }
                }
            }
            emit(cli, &out)?;
        }
        Format::Json => {
            let mut value = serde_json::to_value(&rep).expect("report serializes");
            if let Some((list, _)) = &violations {
                value["graph_violations"] = serde_json::json!(list);
            }
            emit(cli, &value.to_string())?;
        }
    }

    if let Some((list, g6)) = violations {
        if !list.is_empty() {
            return Err(violation(format!(
                "{} bound violation(s) on {g6}: {}",
                list.len(),
                list.join("; ")
            )));
        }
    }
    Ok(())
}

fn render_turan(cli: &Cli, t: &TuranCheck) -> CliResult {
    match cli.format {
        Format::Tsv => emit(cli, &format!("{}\n{}", TuranCheck::TSV_HEADER, t.tsv_row())),
        Format::Json => emit(cli, &serde_json::to_string(t).expect("report serializes")),
    }
}

fn turan_check_cmd(cli: &Cli, a: &PairArgs) -> CliResult {
    check_cap(a.n, effective_cap()?)?;
    let t = turan_qmin_check(a.n, a.r)?;
    render_turan(cli, &t)?;
    if !t.lower_holds {
        return Err(violation(format!(
            "classical floor falsified: q_min(T_{}({})) = {} < (r-2)*floor(n/r) = {} \
             (this happens exactly when n = 1 mod r)",
            a.r, a.n, t.qmin, t.lower
        )));
    }
    Ok(())
}

fn hs_verify(cli: &Cli) -> CliResult {
    let cap = effective_cap()?;
    check_cap(100, cap)?;
    let g = higman_sims()?;

    let mut rows: Vec<(String, String, String, bool)> = Vec::new();
    let mut record = |name: &str, got: String, want: String, ok: bool| {
        rows.push((name.to_string(), got, want, ok));
    };

    record("order", g.order().to_string(), "100".into(), g.order() == 100);
    let deg_ok = (0..g.order()).all(|v| g.degree(v) == 22);
    record("degree", if deg_ok { "22".into() } else { "mixed".into() }, "22".into(), deg_ok);

    let srg = srg_violation(&g, HIGMAN_SIMS_PARAMS);
    record(
        "srg(100,22,0,6)",
        srg.clone().unwrap_or_else(|| "ok".into()),
        "ok".into(),
        srg.is_none(),
    );

    let adj = spectrum(&g, MatrixKind::Adjacency)?;
    let mults = adj.multiplicities();
    let spec_str = mults
        .iter()
        .map(|(v, k)| format!("{} x{k}", fmt_value(*v)))
        .collect::<Vec<_>>()
        .join(", ");
    let spec_ok = mults.len() == 3
        && (mults[0].0 - 22.0).abs() <= 1e-6
        && mults[0].1 == 1
        && (mults[1].0 - 2.0).abs() <= 1e-6
        && mults[1].1 == 77
        && (mults[2].0 + 8.0).abs() <= 1e-6
        && mults[2].1 == 22;
    record("adjacency spectrum", spec_str, "22 x1, 2 x77, -8 x22".into(), spec_ok);

    let qmin = qlap::spectral::q_min(&g)?;
    record("q_min", fmt_value(qmin), "14".into(), (qmin - 14.0).abs() <= 1e-7);

    let all_ok = rows.iter().all(|r| r.3);
    match cli.format {
        Format::Tsv => {
            let mut out = String::from("property\tvalue\texpected\tstatus");
            for (name, got, want, ok) in &rows {
                out.push_str(&format!(
                    "\n{name}\t{got}\t{want}\t{}",
                    if *ok { "ok" } else { "FAIL" }
                ));
            }
            emit(cli, &out)?;
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(name, got, want, ok)| {
                    serde_json::json!({"property": name, "value": got, "expected": want, "ok": ok})
                })
                .collect();
            emit(cli, &serde_json::Value::Array(items).to_string())?;
        }
    }
    if !all_ok {
        return Err(violation(
            "the 100-vertex strongly regular graph failed verification (see report)",
        ));
    }
    Ok(())
}

fn search_tsv(res: &SearchResult, method: &str) -> String {
    let seed = res.seed.map_or_else(|| "-".into(), |s: u64| s.to_string());
    format!(
        "n\tr\tmethod\tseed\tbest_qmin\tgraph6\tevaluations\tupper_bound\tsource\tgap\n\
         {}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        res.n,
        res.r,
        method,
        seed,
        res.best_qmin,
        res.best_graph6,
        res.evaluations,
        res.upper_bound_used.0,
        res.upper_bound_used.1,
        res.gap_to_upper
    )
}

fn render_search(cli: &Cli, res: &SearchResult, method: &str) -> CliResult {
    match cli.format {
        Format::Tsv => emit(cli, &search_tsv(res, method)),
        Format::Json => {
            let ts = (!cli.no_timestamp).then(unix_timestamp);
            emit(cli, &res.json_record(ts))
        }
    }
}

/// The exit-2 falsification hook shared by the search-style subcommands: a
/// best value above the applicable proven upper bound would disprove a
/// published theorem, so it must be loudly visible.
fn check_search_result(res: &SearchResult, tol: f64) -> CliResult {
    if res.best_qmin > res.upper_bound_used.0 + tol {
        return Err(violation(format!(
            "upper bound falsified: q_min = {} exceeds the {} bound {} at n = {}, r = {} \
             (witness {})",
            res.best_qmin,
            res.upper_bound_used.1,
            res.upper_bound_used.0,
            res.n,
            res.r,
            res.best_graph6
        )));
    }
    Ok(())
}

fn search_cmd(cli: &Cli, a: &SearchArgs) -> CliResult {
    let cap = effective_cap()?;
    check_cap(a.n, cap)?;

    let result = if a.exhaustive {
        if a.n > MAX_EXHAUSTIVE_ORDER {
            return Err(usage(format!(
                "--exhaustive is limited to {MAX_EXHAUSTIVE_ORDER} vertices (got {})",
                a.n
            )));
        }
        exhaustive_search(a.n, a.r)?
    } else {
        let mut cfg = SearchConfig::new(a.n, a.r);
        cfg.seed = a.seed;
        cfg.restarts = a.restarts;
        cfg.steps_per_restart = a.steps;
        cfg.parallel = a.parallel;
        cfg.regular_only = a.regular;
        if a.anneal {
            cfg.anneal = Some(Anneal {
                initial_temperature: a.t0,
                cooling: a.cooling,
            });
        }
        cfg.start = match a.start {
            StartChoice::Turan => StartPoint::Turan,
            StartChoice::Random => StartPoint::Random,
            StartChoice::Given => {
                let spec = a.graph.as_deref().ok_or_else(|| {
                    usage("--start given requires --graph with the start graph")
                })?;
                StartPoint::Given(load_graph(spec, cap)?)
            }
        };
        local_search(&cfg)?
    };

    let method = if a.exhaustive { "exhaustive" } else { "local" };
    render_search(cli, &result, method)?;

    // When the report goes to a file, drop the winning graph next to it so
    // downstream tools can re-verify the result without re-parsing the log.
    if let Some(out) = &cli.out {
        let mut g6_path = out.as_os_str().to_owned();
        g6_path.push(".g6");
        std::fs::write(&g6_path, format!("{}\n", result.best_graph6))
            .map_err(|e| usage(format!("cannot write witness file: {e}")))?;
    }
    check_search_result(&result, cli.tol)
}

fn probe_tsv(rep: &ProbeReport) -> String {
    let method = match rep.method {
        qlap::search::ProbeMethod::Exhaustive => "exhaustive",
        qlap::search::ProbeMethod::LocalSearch => "local-search",
    };
    let non_turan = rep
        .non_turan_attainer
        .map_or_else(|| "-".into(), |b: bool| b.to_string());
    let seed = rep.seed.map_or_else(|| "-".into(), |s: u64| s.to_string());
    format!(
        "n\tr\tmethod\tturan_qmin\tbest_qmin\tgraph6\tdifference\treaches\texceeds\t\
         non_turan_attainer\tconjectured_c_r\tbest_ratio\tupper_bound\tseed\tevaluations\n\
         {}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        rep.n,
        rep.r,
        method,
        rep.turan_qmin,
        rep.best_qmin,
        rep.best_graph6,
        rep.difference,
        rep.reaches_turan,
        rep.exceeds_turan,
        non_turan,
        rep.conjectured_c_r,
        rep.best_ratio,
        rep.upper_bound,
        seed,
        rep.evaluations
    )
}

fn probe_cmd(cli: &Cli, a: &ProbeArgs) -> CliResult {
    let cap = effective_cap()?;
    check_cap(a.n, cap)?;
    let mut budget = SearchConfig::new(a.n, a.r);
    budget.seed = a.seed;
    budget.restarts = a.restarts;
    budget.steps_per_restart = a.steps;
    let rep = conjecture2_probe(a.n, a.r, &budget)?;
    match cli.format {
        Format::Tsv => emit(cli, &probe_tsv(&rep))?,
        Format::Json => emit(cli, &serde_json::to_string(&rep).expect("report serializes"))?,
    }
    if rep.best_qmin > rep.upper_bound + cli.tol {
        return Err(violation(format!(
            "upper bound falsified: q_min = {} exceeds {} at n = {}, r = {} (witness {})",
            rep.best_qmin, rep.upper_bound, rep.n, rep.r, rep.best_graph6
        )));
    }
    Ok(())
}

fn ratio_scan(cli: &Cli, a: &RatioScanArgs) -> CliResult {
    if a.max_n > MAX_EXHAUSTIVE_ORDER {
        return Err(usage(format!(
            "--max-n is limited to {MAX_EXHAUSTIVE_ORDER} (got {}): the scan enumerates \
             every labeled graph",
            a.max_n
        )));
    }
    if a.max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }

    let mut out_rows: Vec<(usize, RatioSupremum)> = Vec::new();
    let mut worst_gap: Option<(f64, Graph)> = None;
    for n in 1..=a.max_n {
        let mut sup = RatioSupremum::new();
        for g in labeled_graphs(n)? {
            let rep = mt_report(&g, CutStrategy::Exact)?;
            if rep.gap < -cli.tol {
                let replace = worst_gap.as_ref().is_none_or(|(w, _)| rep.gap < *w);
                if replace {
                    worst_gap = Some((rep.gap, g.clone()));
                }
            }
            sup.observe(&g, &rep);
        }
        out_rows.push((n, sup));
    }

    match cli.format {
        Format::Tsv => {
            let mut out = String::from("n\tscanned\tdefined\tsup_ratio\twitness");
            for (n, sup) in &out_rows {
                match &sup.best {
                    Some((ratio, g)) => out.push_str(&format!(
                        "\n{n}\t{}\t{}\t{}\t{}",
                        sup.scanned,
                        sup.defined,
                        ratio,
                        to_graph6(g)
                    )),
                    None => {
                        out.push_str(&format!("\n{n}\t{}\t{}\t-\t-", sup.scanned, sup.defined))
                    }
                }
            }
            emit(cli, &out)?;
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = out_rows
                .iter()
                .map(|(n, sup)| {
                    serde_json::json!({
                        "n": n,
                        "scanned": sup.scanned,
                        "defined": sup.defined,
                        "sup_ratio": sup.best.as_ref().map(|(r, _)| *r),
                        "witness": sup.best.as_ref().map(|(_, g)| to_graph6(g)),
                    })
                })
                .collect();
            emit(cli, &serde_json::Value::Array(items).to_string())?;
        }
    }

    if let Some((gap, g)) = worst_gap {
        return Err(violation(format!(
            "bipartization bound violated during scan: gap {} on {}",
            gap,
            to_graph6(&g)
        )));
    }
    Ok(())
}
