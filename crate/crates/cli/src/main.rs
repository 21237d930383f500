//! `bispec`: analyze graphs for regularity, biregularity, walk-regularity,
//! and distance-regularity; batch-process graph6 corpora; and run the
//! exhaustive oracle cross-validation sweep.

use bispec_core::catalog;
use bispec_core::characterize::{classify, ClassificationReport, ClassifyError, Verdict};
use bispec_core::edgelist::parse_edge_list;
use bispec_core::enumerate::{sweep_shapes, BipartiteEnumerator, DEFAULT_MAX_CELLS, MAX_CELLS};
use bispec_core::graph::{Graph, GraphError};
use bispec_core::graph6::{encode_graph6, parse_graph6};
use bispec_core::oracle::cross_validate;
use bispec_core::spectral::Tolerances;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::process::ExitCode;

const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(name = "bispec", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Full classification report for one graph.
    Analyze {
        /// Path to the input file, or the literal graph with --inline.
        input: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        /// Treat INPUT as the graph text itself instead of a path.
        #[arg(long)]
        inline: bool,
        /// Uniform tolerance override (also via BS_TOL).
        #[arg(long)]
        tol: Option<f64>,
        /// Emit JSON instead of the text report.
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
    },
    /// Run a single named check; exit 0 pass, 1 fail, 4 not-applicable.
    Check {
        check_id: String,
        input: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        #[arg(long)]
        inline: bool,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Process a file with one graph6 string per line; one JSON record per line.
    Batch {
        input: String,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Print a catalog graph as graph6.
    Catalog {
        name: String,
        params: Vec<usize>,
    },
    /// Exhaustive cross-validation of all spectral verdicts against the
    /// combinatorial oracle over connected bipartite graphs.
    Sweep {
        /// Maximum part sizes n1 n2.
        #[arg(long, num_args = 2, value_names = ["N1", "N2"])]
        max_part: Vec<usize>,
        /// Raise the enumeration cap from 16 to 20 biadjacency cells.
        #[arg(long)]
        allow_large: bool,
        #[arg(long)]
        tol: Option<f64>,
    },
}

fn tolerances(flag: Option<f64>) -> Tolerances {
    let env = std::env::var("BS_TOL").ok().and_then(|s| s.parse().ok());
    match flag.or(env) {
        Some(t) => Tolerances::uniform(t),
        None => Tolerances::default(),
    }
}

fn read_input(input: &str, inline: bool) -> Result<String, String> {
    if inline {
        Ok(input.to_string())
    } else {
        std::fs::read_to_string(input).map_err(|e| format!("cannot read {input}: {e}"))
    }
}

fn load_graph(input: &str, format: Format, inline: bool) -> Result<Graph, String> {
    let text = read_input(input, inline)?;
    match format {
        Format::Graph6 => parse_graph6(text.trim()).map_err(|e| e.to_string()),
        Format::Edgelist => parse_edge_list(&text).map_err(|e| e.to_string()),
    }
}

const EXIT_PARSE: u8 = 2;
const EXIT_DISCONNECTED: u8 = 3;
const EXIT_NOT_APPLICABLE: u8 = 4;
const EXIT_UNKNOWN_CHECK: u8 = 5;

fn classify_or_exit(g: &Graph, tols: &Tolerances) -> Result<ClassificationReport, ExitCode> {
    match classify(g, tols) {
        Ok(r) => Ok(r),
        Err(ClassifyError::Graph(GraphError::Disconnected)) => {
            eprintln!("error: graph is disconnected");
            Err(ExitCode::from(EXIT_DISCONNECTED))
        }
        Err(e) => {
            eprintln!("error: {e}");
            Err(ExitCode::from(EXIT_PARSE))
        }
    }
}

#[derive(Serialize)]
struct ReportDocument {
    schema: &'static str,
    input_graph6: String,
    tolerance: f64,
    report: ClassificationReport,
}

fn fmt_f(x: f64) -> String {
    let x = if x.abs() < 5e-10 { 0.0 } else { x };
    let s = format!("{x:.9}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_text(doc: &ReportDocument) -> String {
    let r = &doc.report;
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("schema: {}", doc.schema));
    line(format!("input: {} (graph6)", doc.input_graph6));
    line(format!("tolerance: {}", fmt_f(doc.tolerance)));
    line(format!("n: {}", r.n));
    line(format!("diameter: {}", r.diameter));
    line(format!("d: {}", r.d));
    line(format!("bipartite: {}", yes_no(r.bipartite)));
    if let Some((n1, n2)) = r.part_sizes {
        line(format!("parts: {n1},{n2}"));
    }
    line(format!("regular: {}", yes_no(r.regular)));
    if let Some(d) = r.degree {
        line(format!("degree: {d}"));
    }
    line(format!(
        "biregular: {}",
        yes_no(r.biregular_degrees.is_some())
    ));
    if let Some((d1, d2)) = r.biregular_degrees {
        line(format!("biregular-degrees: {d1},{d2}"));
    }
    line(format!("average-degree: {}", fmt_f(r.average_degree)));
    line(format!(
        "spectrum: {}",
        r.spectrum
            .iter()
            .map(|e| format!("{}^{}", fmt_f(e.theta), e.multiplicity))
            .collect::<Vec<_>>()
            .join(" ")
    ));
    line(format!("average-excess: {}", fmt_f(r.average_excess)));
    line(format!("spectral-excess: {}", fmt_f(r.spectral_excess)));
    line(format!("distance-regular: {}", yes_no(r.distance_regular)));
    if let Some(arr) = &r.intersection_array {
        line(format!("intersection-array: {arr}"));
    }
    for (id, c) in &r.checks {
        let verdict = match c.verdict {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not-applicable",
        };
        let mut extra = String::new();
        if let (Some(l), Some(rh)) = (c.lhs, c.rhs) {
            extra = format!(" lhs={} rhs={}", fmt_f(l), fmt_f(rh));
        }
        if let Some(w) = &c.witness {
            extra.push_str(&format!(" [{w}]"));
        }
        if let Some(reason) = &c.not_applicable_reason {
            extra.push_str(&format!(" ({reason})"));
        }
        line(format!("check {id}: {verdict}{extra}"));
    }
    out
}

fn cmd_analyze(
    input: &str,
    format: Format,
    inline: bool,
    tol: Option<f64>,
    json: bool,
) -> ExitCode {
    let g = match load_graph(input, format, inline) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let tols = tolerances(tol);
    let report = match classify_or_exit(&g, &tols) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let doc = ReportDocument {
        schema: SCHEMA_VERSION,
        input_graph6: encode_graph6(&g).unwrap_or_default(),
        tolerance: tols.tol_eig,
        report,
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        print!("{}", render_text(&doc));
    }
    ExitCode::SUCCESS
}

fn cmd_check(
    check_id: &str,
    input: &str,
    format: Format,
    inline: bool,
    tol: Option<f64>,
) -> ExitCode {
    if !bispec_core::characterize::CHECK_IDS.contains(&check_id) {
        eprintln!(
            "error: unknown check id {check_id:?}; known: {}",
            bispec_core::characterize::CHECK_IDS.join(", ")
        );
        return ExitCode::from(EXIT_UNKNOWN_CHECK);
    }
    let g = match load_graph(input, format, inline) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let tols = tolerances(tol);
    let report = match classify_or_exit(&g, &tols) {
        Ok(r) => r,
        Err(code) => return code,
    };
    let c = &report.checks[check_id];
    let verdict = match c.verdict {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::NotApplicable => "not-applicable",
    };
    let mut parts = vec![format!("{check_id}: {verdict}")];
    if let (Some(l), Some(r)) = (c.lhs, c.rhs) {
        parts.push(format!("lhs={} rhs={}", fmt_f(l), fmt_f(r)));
    }
    if let Some(w) = &c.witness {
        parts.push(w.clone());
    }
    if let Some(reason) = &c.not_applicable_reason {
        parts.push(format!("({reason})"));
    }
    println!("{}", parts.join(" "));
    match c.verdict {
        Verdict::Pass => ExitCode::SUCCESS,
        Verdict::Fail => ExitCode::from(1),
        Verdict::NotApplicable => ExitCode::from(EXIT_NOT_APPLICABLE),
    }
}

#[derive(Serialize)]
struct BatchRecord<'a> {
    line: usize,
    graph6: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    regular: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bipartite: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    distance_regular: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    intersection_array: Option<String>,
}

fn cmd_batch(input: &str, tol: Option<f64>) -> ExitCode {
    let text = match read_input(input, false) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let tols = tolerances(tol);
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut rec = BatchRecord {
            line: lineno + 1,
            graph6: line,
            error: None,
            n: None,
            regular: None,
            bipartite: None,
            distance_regular: None,
            intersection_array: None,
        };
        match parse_graph6(line).map_err(|e| e.to_string()).and_then(|g| {
            classify(&g, &tols).map_err(|e| e.to_string())
        }) {
            Ok(r) => {
                rec.n = Some(r.n);
                rec.regular = Some(r.regular);
                rec.bipartite = Some(r.bipartite);
                rec.distance_regular = Some(r.distance_regular);
                rec.intersection_array = r.intersection_array.map(|a| a.to_string());
            }
            Err(e) => rec.error = Some(e),
        }
        println!("{}", serde_json::to_string(&rec).unwrap());
    }
    ExitCode::SUCCESS
}

fn cmd_catalog(name: &str, params: &[usize]) -> ExitCode {
    match catalog::by_name(name, params) {
        Ok(g) => match encode_graph6(&g) {
            Ok(s) => {
                println!("{s}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(EXIT_PARSE)
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_PARSE)
        }
    }
}

fn cmd_sweep(max_part: &[usize], allow_large: bool, tol: Option<f64>) -> ExitCode {
    let (m1, m2) = (max_part[0], max_part[1]);
    let cap = if allow_large { MAX_CELLS } else { DEFAULT_MAX_CELLS };
    let shapes = sweep_shapes(m1, m2);
    for &(n1, n2) in &shapes {
        if n1 * n2 > cap {
            eprintln!(
                "error: part shape ({n1},{n2}) exceeds the enumeration cap of {cap} cells; rerun with --allow-large or smaller parts"
            );
            return ExitCode::from(EXIT_PARSE);
        }
    }
    let tols = tolerances(tol);
    let corpus = shapes.into_iter().flat_map(move |(n1, n2)| {
        BipartiteEnumerator::with_cap(n1, n2, true, cap).expect("checked above")
    });
    let report = match cross_validate(corpus, &tols) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    println!("graphs: {}", report.total_graphs);
    println!("distance-regular: {}", report.drg_count);
    for (id, count) in &report.comparisons {
        println!("comparisons {id}: {count}");
    }
    println!("discrepancies: {}", report.records.len());
    for rec in &report.records {
        println!("{}", rec.to_line());
    }
    if report.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Analyze {
            input,
            format,
            inline,
            tol,
            json,
            text: _,
        } => cmd_analyze(&input, format, inline, tol, json),
        Command::Check {
            check_id,
            input,
            format,
            inline,
            tol,
        } => cmd_check(&check_id, &input, format, inline, tol),
        Command::Batch { input, tol } => cmd_batch(&input, tol),
        Command::Catalog { name, params } => cmd_catalog(&name, &params),
        Command::Sweep {
            max_part,
            allow_large,
            tol,
        } => cmd_sweep(&max_part, allow_large, tol),
    }
}
