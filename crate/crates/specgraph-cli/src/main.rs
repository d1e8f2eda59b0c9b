//! `specgraph` command line: analyze one graph, scan a graph6 corpus,
//! enumerate small connected graphs, and run Jacobi/star truncation
//! convergence studies.
//!
//! Exit codes: 0 success, 2 invalid family or parameters, 3 input parse
//! failure, 4 internal tolerance failure (the report is still written,
//! with its failure flag set).

mod family;

use clap::{Parser, Subcommand};
use specgraph::dominance::{dominance_report_with, scan_corpus, DominancePattern, ScanAggregate};
use specgraph::graph::{
    enumerate_connected, parse_graph6_file, write_graph6, Graph, MAX_ENUM_VERTICES,
};
use specgraph::jacobi::{ja_convergence, star_block_diagonalize, star_convergence, ConvergenceRow};
use specgraph::spectral;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID_SPEC: i32 = 2;
pub const EXIT_PARSE_FAILURE: i32 = 3;
pub const EXIT_TOLERANCE_FAILURE: i32 = 4;

#[derive(Parser)]
#[command(
    name = "specgraph",
    version,
    about = "Dominant-vertex analysis for finite graphs"
)]
struct Cli {
    /// Worker threads for scans and eigenvalue sweeps (the
    /// SPECGRAPH_THREADS environment variable overrides this flag)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Jacobi sweep tolerance (default: 1e-12 * max entry * n)
    #[arg(long, global = true)]
    eig_tol: Option<f64>,
    /// Weight threshold for the floating dominance cross-check
    #[arg(long, global = true, default_value_t = spectral::DEFAULT_DOM_TOL)]
    dom_tol: f64,
    /// Relative gap scale for eigenvalue clustering
    #[arg(long, global = true, default_value_t = spectral::DEFAULT_CLUSTER_SCALE)]
    cluster_tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph (a named family or a graph6 file) and write its
    /// dominance report as JSON
    Analyze {
        /// Family name; see `specgraph families`
        #[arg(long, conflicts_with = "g6")]
        family: Option<String>,
        /// graph6 file to read instead of a family
        #[arg(long)]
        g6: Option<PathBuf>,
        /// Which graph of the file to analyze (0-based line position)
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[command(flatten)]
        params: family::FamilyParams,
        /// Report destination
        #[arg(long, default_value = "dominance-report.json")]
        out: PathBuf,
        /// Also write the projection-weight table as CSV
        #[arg(long)]
        weights: Option<PathBuf>,
        /// Also write the counting and vertex spectral measures as JSON
        #[arg(long)]
        measures: Option<PathBuf>,
    },
    /// Scan a graph6 corpus (one graph per line) for a dominance pattern
    Scan {
        #[arg(long)]
        g6: PathBuf,
        /// no-dominant | all-dominant | exactly-k
        #[arg(long, default_value = "no-dominant")]
        pattern: String,
        /// K for the exactly-k pattern
        #[arg(long)]
        k: Option<usize>,
        /// Reject graphs with more vertices than this
        #[arg(long, default_value_t = 12)]
        cap: usize,
        #[arg(long, default_value = "scan-aggregate.json")]
        out: PathBuf,
        /// json | csv
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Enumerate connected graphs on n <= 7 vertices, one graph6 line per
    /// isomorphism class
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Truncation convergence of the perturbed Jacobi matrix: one CSV row
    /// per size with the top eigenvalue, the predicted limit, and the gap
    Jacobi {
        #[arg(long)]
        a: f64,
        /// Truncation sizes, comma separated
        #[arg(long = "N", value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Truncated-star convergence toward k/sqrt(k-1), plus optional
    /// block-diagonalization residual reports
    Star {
        #[arg(long)]
        k: usize,
        #[arg(long = "N", value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write block-diagonalization residuals for each size as JSON
        #[arg(long)]
        block_residuals: Option<PathBuf>,
    },
    /// List the available graph families and their parameter domains
    Families,
}

fn main() {
    reset_sigpipe();
    let cli = Cli::parse();
    configure_threads(cli.threads);
    std::process::exit(run(cli));
}

// die quietly when a downstream pipe closes instead of panicking mid-print
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

#[cfg(feature = "parallel")]
fn configure_threads(flag: Option<usize>) {
    let threads = std::env::var("SPECGRAPH_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .or(flag);
    if let Some(t) = threads {
        let t = t.max(1);
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("warning: could not configure thread pool: {e}");
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_threads(_flag: Option<usize>) {}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Analyze {
            family,
            g6,
            index,
            params,
            out,
            weights,
            measures,
        } => cmd_analyze(
            family,
            g6,
            index,
            &params,
            &out,
            weights,
            measures,
            cli.eig_tol,
            cli.dom_tol,
            cli.cluster_tol,
        ),
        Command::Scan {
            g6,
            pattern,
            k,
            cap,
            out,
            format,
        } => cmd_scan(&g6, &pattern, k, cap, &out, &format),
        Command::Enumerate { n, out } => cmd_enumerate(n, out.as_deref()),
        Command::Jacobi { a, sizes, out } => cmd_jacobi(a, &sizes, out.as_deref()),
        Command::Star {
            k,
            sizes,
            out,
            block_residuals,
        } => cmd_star(k, &sizes, out.as_deref(), block_residuals.as_deref()),
        Command::Families => {
            print!("{}", family::describe_families());
            EXIT_OK
        }
    }
}

fn write_file(path: &Path, content: &str) -> Result<(), i32> {
    std::fs::write(path, content).map_err(|e| {
        eprintln!("error: cannot write {}: {e}", path.display());
        EXIT_PARSE_FAILURE
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_analyze(
    family: Option<String>,
    g6: Option<PathBuf>,
    index: usize,
    params: &family::FamilyParams,
    out: &Path,
    weights: Option<PathBuf>,
    measures: Option<PathBuf>,
    eig_tol: Option<f64>,
    dom_tol: f64,
    cluster_tol: f64,
) -> i32 {
    let (graph, name): (Graph, String) = match (family, g6) {
        (Some(name), None) => match family::build(&name, params) {
            Ok((g, display)) => (g, display),
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_INVALID_SPEC;
            }
        },
        (None, Some(path)) => {
            let content = match std::fs::read(&path) {
                Ok(c) => c,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", path.display());
                    return EXIT_PARSE_FAILURE;
                }
            };
            let parsed = parse_graph6_file(&content);
            match parsed.into_iter().nth(index) {
                Some((_, Ok(g))) => (g, format!("{}#{index}", path.display())),
                Some((line, Err(e))) => {
                    eprintln!("error: {} line {line}: {e}", path.display());
                    return EXIT_PARSE_FAILURE;
                }
                None => {
                    eprintln!("error: {} has no graph at index {index}", path.display());
                    return EXIT_PARSE_FAILURE;
                }
            }
        }
        _ => {
            eprintln!("error: exactly one of --family or --g6 is required");
            return EXIT_INVALID_SPEC;
        }
    };

    if graph.vertex_count() == 0 {
        eprintln!("error: graph has no vertices");
        return EXIT_INVALID_SPEC;
    }

    let spectrum = spectral::eigendecompose_with(
        &graph,
        eig_tol.unwrap_or_else(|| spectral::default_eig_tol(&graph)),
        cluster_tol,
    );
    let report = dominance_report_with(&graph, Some(name), dom_tol, Some(&spectrum));

    if let Err(code) = write_file(out, &report.to_json()) {
        return code;
    }
    if let Some(path) = weights {
        let csv = spectrum.weight_table().to_csv(graph.labels());
        if let Err(code) = write_file(&path, &csv) {
            return code;
        }
    }
    if let Some(path) = measures {
        let vertex_measures: Vec<_> = (0..graph.vertex_count())
            .map(|v| spectrum.vertex_measure(v))
            .collect();
        let doc = serde_json::json!({
            "schema": "measures/1",
            "counting_measure": spectrum.counting_measure(),
            "vertex_measures": vertex_measures,
        });
        if let Err(code) = write_file(&path, &serde_json::to_string_pretty(&doc).unwrap()) {
            return code;
        }
    }

    print!("{}", report.text_summary());
    println!("report written to {}", out.display());
    if report.tolerance_failure {
        EXIT_TOLERANCE_FAILURE
    } else {
        EXIT_OK
    }
}

fn cmd_scan(
    g6: &Path,
    pattern: &str,
    k: Option<usize>,
    cap: usize,
    out: &Path,
    format: &str,
) -> i32 {
    let pattern = match (pattern, k) {
        ("no-dominant", _) => DominancePattern::NoDominant,
        ("all-dominant", _) => DominancePattern::AllDominant,
        ("exactly-k", Some(k)) => DominancePattern::ExactlyKDominant(k),
        ("exactly-k", None) => {
            eprintln!("error: pattern exactly-k needs --k");
            return EXIT_INVALID_SPEC;
        }
        (other, _) => {
            eprintln!("error: unknown pattern '{other}'");
            return EXIT_INVALID_SPEC;
        }
    };
    let content = match std::fs::read(g6) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", g6.display());
            return EXIT_PARSE_FAILURE;
        }
    };
    let inputs: Vec<Result<Graph, String>> = parse_graph6_file(&content)
        .into_iter()
        .map(|(line, r)| r.map_err(|e| format!("line {line}: {e}")))
        .collect();
    if !inputs.iter().any(Result::is_ok) {
        eprintln!("error: no graph in {} parsed", g6.display());
        return EXIT_PARSE_FAILURE;
    }

    let aggregate: ScanAggregate = scan_corpus(inputs, pattern, cap);
    let rendered = match format {
        "json" => aggregate.to_json(),
        "csv" => aggregate.to_csv(),
        other => {
            eprintln!("error: unknown format '{other}'");
            return EXIT_INVALID_SPEC;
        }
    };
    if let Err(code) = write_file(out, &rendered) {
        return code;
    }
    println!(
        "{} graphs, {} analyzed, {} failed, {} matched pattern {}",
        aggregate.total, aggregate.analyzed, aggregate.failed, aggregate.matched, aggregate.pattern
    );
    EXIT_OK
}

fn cmd_enumerate(n: usize, out: Option<&Path>) -> i32 {
    if n == 0 || n > MAX_ENUM_VERTICES {
        eprintln!("error: enumeration supports 1 <= n <= {MAX_ENUM_VERTICES}");
        return EXIT_INVALID_SPEC;
    }
    let graphs = enumerate_connected(n).expect("bounds checked");
    let mut body = String::new();
    for g in &graphs {
        body.push_str(&String::from_utf8(write_graph6(g)).expect("graph6 is ASCII"));
        body.push('\n');
    }
    match out {
        Some(path) => {
            if let Err(code) = write_file(path, &body) {
                return code;
            }
            println!("{} graphs written to {}", graphs.len(), path.display());
        }
        None => print!("{body}"),
    }
    EXIT_OK
}

fn render_rows(label: (&str, f64), rows: &[ConvergenceRow]) -> String {
    let mut csv = format!("{},N,top_eigenvalue,predicted,gap\n", label.0);
    for row in rows {
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            label.1, row.size, row.top_eigenvalue, row.predicted, row.gap
        ));
    }
    csv
}

fn cmd_jacobi(a: f64, sizes: &[usize], out: Option<&Path>) -> i32 {
    let a_ok = a.partial_cmp(&0.0) == Some(std::cmp::Ordering::Greater);
    if !a_ok || sizes.is_empty() || sizes.iter().any(|&n| n == 0 || n > 100_000) {
        eprintln!("error: need a > 0 and sizes in 1..=100000");
        return EXIT_INVALID_SPEC;
    }
    let rows = match ja_convergence(a, sizes, 1e-12) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INVALID_SPEC;
        }
    };
    emit_csv(render_rows(("a", a), &rows), out)
}

fn cmd_star(k: usize, sizes: &[usize], out: Option<&Path>, blocks: Option<&Path>) -> i32 {
    if k < 3 || sizes.is_empty() || sizes.iter().any(|&n| n == 0 || n > 100_000) {
        eprintln!("error: need k >= 3 and sizes in 1..=100000");
        return EXIT_INVALID_SPEC;
    }
    let rows = match star_convergence(k, sizes, 1e-10) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INVALID_SPEC;
        }
    };
    if let Some(path) = blocks {
        // the residual check conjugates a dense (k*depth+1)^2 matrix;
        // verifying the block structure only makes sense at small depth
        if let Some(&too_big) = sizes.iter().find(|&&d| d > 128) {
            eprintln!("error: block residuals are limited to depth <= 128, got {too_big}");
            return EXIT_INVALID_SPEC;
        }
        let mut reports = Vec::new();
        for &depth in sizes {
            match star_block_diagonalize(k, depth) {
                Ok(r) => reports.push(serde_json::json!({
                    "arms": r.arms,
                    "depth": r.depth,
                    "off_block_residual": r.off_block_residual,
                    "in_block_residual": r.in_block_residual,
                })),
                Err(e) => {
                    eprintln!("error: block residuals at depth {depth}: {e}");
                    return EXIT_INVALID_SPEC;
                }
            }
        }
        let doc = serde_json::json!({ "schema": "star-blocks/1", "reports": reports });
        if let Err(code) = write_file(path, &serde_json::to_string_pretty(&doc).unwrap()) {
            return code;
        }
    }
    emit_csv(render_rows(("k", k as f64), &rows), out)
}

fn emit_csv(csv: String, out: Option<&Path>) -> i32 {
    match out {
        Some(path) => match write_file(path, &csv) {
            Ok(()) => {
                println!("written to {}", path.display());
                EXIT_OK
            }
            Err(code) => code,
        },
        None => {
            print!("{csv}");
            EXIT_OK
        }
    }
}
