//! Command-line driver: computes bound chains, exact independence
//! numbers, certificate verifications, weight searches, and random
//! sandwich scans, emitting deterministic JSON or CSV reports.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use spectral_indep::bounds::{bound_chain, BoundReport};
use spectral_indep::catalog::{catalog, CatalogId};
use spectral_indep::cert::{
    parse_certificate_json, verify_packing, verify_quantum_cert, Certificate, DEFAULT_CERT_TOL,
};
use spectral_indep::graph6;
use spectral_indep::oracle::{alpha_k_exact_budgeted, OracleBudget};
use spectral_indep::weights::{search_tight_weights, SearchConfig, WeightField};
use spectral_indep::{Error, Graph, Polynomial, ZeroPolicy};

/// Exit classes: 0 success, 1 invalid certificate or violated
/// assertion, 2 input error, 3 budget error.
const EXIT_ASSERTION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "spectral-indep",
    version,
    about = "Spectral upper bounds for (quantum) k-independence numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Catalog id, "family:params" (e.g. petersen, cycle:7, kneser:5,2).
    #[arg(long, value_name = "ID")]
    catalog: Option<String>,
    /// File with one graph6 line per graph.
    #[arg(long, value_name = "FILE")]
    graph6: Option<PathBuf>,
    /// JSON edge list {"n": .., "edges": [[u,v], ..]} or an array of those.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Include wall-clock timing in the report (breaks byte-for-byte
    /// reproducibility across runs).
    #[arg(long)]
    timing: bool,
    /// Exit nonzero when any per-graph item failed.
    #[arg(long)]
    strict: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ZeroModeArg {
    Exact,
    Tolerance,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the bound chain for each input graph.
    Bound {
        #[command(flatten)]
        input: InputArgs,
        /// Distance parameter of α_k.
        #[arg(short, long, default_value_t = 1)]
        k: u32,
        /// Polynomial coefficients "c0,c1,...,ck", constant term first.
        #[arg(long)]
        poly: Option<String>,
        #[arg(long, value_enum, default_value_t = ZeroModeArg::Exact)]
        zero_mode: ZeroModeArg,
        /// Relative tolerance for zero classification (tolerance mode).
        #[arg(long)]
        epsilon: Option<f64>,
        /// Oracle vertex budget for tightness flags; 0 disables the oracle.
        #[arg(long, default_value_t = 40)]
        budget: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exact α_k by branch and bound, with a witness set.
    Exact {
        #[command(flatten)]
        input: InputArgs,
        #[arg(short, long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 40)]
        budget: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Verify a projective-packing or quantum-independence certificate.
    Verify {
        /// Certificate JSON (packing or quantum form, detected by shape).
        #[arg(long, value_name = "FILE")]
        cert: PathBuf,
        #[command(flatten)]
        input: InputArgs,
        /// Distance parameter; defaults to the certificate's own k.
        #[arg(short, long)]
        k: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_CERT_TOL)]
        tol: f64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Search for edge weights that make the inertia bound meet α.
    Weights {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        restarts: Option<usize>,
        #[arg(long)]
        iterations: Option<usize>,
        /// Weight field: real (alias real-symmetric) or hermitian (alias complex).
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Perturbation scales "s1,s2,...", applied in phases.
        #[arg(long)]
        steps: Option<String>,
        /// SearchConfig as JSON; explicit flags override its fields.
        #[arg(long, value_name = "FILE")]
        config: Option<PathBuf>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Random-graph sandwich scan: α_k must never exceed any bound.
    Scan {
        /// Vertex count or inclusive range "min,max".
        #[arg(long, default_value = "4,9")]
        n: String,
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Comma-separated k values.
        #[arg(long, default_value = "1")]
        k: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Scan the built-in catalog instead, checking frozen tightness flags.
        #[arg(long)]
        catalog_only: bool,
        #[arg(long, default_value_t = 40)]
        budget: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug)]
struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure {
            message: message.into(),
            code: EXIT_INPUT,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_INPUT,
        };
        Failure {
            message: e.to_string(),
            code,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::input(e.to_string())
    }
}

#[derive(Serialize)]
struct RunReport {
    schema_version: u32,
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    input: String,
    items: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<f64>,
}

fn main() -> ExitCode {
    if let Err(f) = configure_threads() {
        eprintln!("error: {}", f.message);
        return ExitCode::from(f.code);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    if let Ok(raw) = std::env::var("SPECTRAL_INDEP_THREADS") {
        let threads: usize = raw
            .parse()
            .map_err(|_| Failure::input(format!("SPECTRAL_INDEP_THREADS='{raw}' is not a number")))?;
        if threads == 0 {
            return Err(Failure::input("SPECTRAL_INDEP_THREADS must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::input(e.to_string()))?;
    }
    Ok(())
}

fn run(command: Command) -> Result<u8, Failure> {
    let started = std::time::Instant::now();
    match command {
        Command::Bound {
            input,
            k,
            poly,
            zero_mode,
            epsilon,
            budget,
            out,
        } => {
            let poly = poly
                .map(|s| Polynomial::from_str(&s))
                .transpose()
                .map_err(Failure::from)?;
            let policy = make_policy(zero_mode, epsilon)?;
            let budget = OracleBudget {
                max_vertices: budget,
            };
            let graphs = load_graphs(&input)?;
            let items = run_items(&graphs, out.strict, |name, g| {
                let reports = bound_chain(g, k, poly.as_ref(), &policy, &budget)?;
                Ok(bound_item(name, k, &reports))
            })?;
            emit(
                RunReport {
                    schema_version: SCHEMA_VERSION,
                    tool: "spectral-indep",
                    version: env!("CARGO_PKG_VERSION"),
                    command: "bound",
                    input: describe_input(&input),
                    items,
                    timing_ms: timing(&out, started),
                },
                &out,
            )
        }
        Command::Exact {
            input,
            k,
            budget,
            out,
        } => {
            let budget = OracleBudget {
                max_vertices: budget,
            };
            let graphs = load_graphs(&input)?;
            let items = run_items(&graphs, out.strict, |name, g| {
                let (alpha, cert) = alpha_k_exact_budgeted(g, k, &budget)?;
                Ok(json!({
                    "graph": name,
                    "k": k,
                    "alpha": alpha,
                    "vertices": cert.vertices,
                }))
            })?;
            emit(
                RunReport {
                    schema_version: SCHEMA_VERSION,
                    tool: "spectral-indep",
                    version: env!("CARGO_PKG_VERSION"),
                    command: "exact",
                    input: describe_input(&input),
                    items,
                    timing_ms: timing(&out, started),
                },
                &out,
            )
        }
        Command::Verify {
            cert,
            input,
            k,
            tol,
            out,
        } => run_verify(cert, input, k, tol, out, started),
        Command::Weights {
            input,
            restarts,
            iterations,
            field,
            seed,
            steps,
            config,
            out,
        } => {
            let mut cfg: SearchConfig = match config {
                Some(path) => serde_json::from_str(&fs::read_to_string(&path)?)
                    .map_err(|e| Failure::input(format!("bad search config: {e}")))?,
                None => SearchConfig::default(),
            };
            if let Some(r) = restarts {
                cfg.restarts = r;
            }
            if let Some(i) = iterations {
                cfg.iterations = i;
            }
            if let Some(f) = field {
                cfg.field = WeightField::from_str(&f)?;
            }
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(s) = steps {
                cfg.step_schedule = parse_f64_list(&s)?;
            }
            let graphs = load_graphs(&input)?;
            let items = run_items(&graphs, out.strict, |name, g| {
                let result = search_tight_weights(g, &cfg)?;
                Ok(json!({
                    "graph": name,
                    "result": serde_json::to_value(&result).expect("serializable"),
                }))
            })?;
            emit(
                RunReport {
                    schema_version: SCHEMA_VERSION,
                    tool: "spectral-indep",
                    version: env!("CARGO_PKG_VERSION"),
                    command: "weights",
                    input: describe_input(&input),
                    items,
                    timing_ms: timing(&out, started),
                },
                &out,
            )
        }
        Command::Scan {
            n,
            count,
            k,
            seed,
            catalog_only,
            budget,
            out,
        } => run_scan(n, count, k, seed, catalog_only, budget, out, started),
    }
}

fn timing(out: &OutputArgs, started: std::time::Instant) -> Option<f64> {
    out.timing.then(|| started.elapsed().as_secs_f64() * 1e3)
}

fn make_policy(mode: ZeroModeArg, epsilon: Option<f64>) -> Result<ZeroPolicy, Failure> {
    let policy = match (mode, epsilon) {
        (ZeroModeArg::Exact, None) => ZeroPolicy::exact(),
        (ZeroModeArg::Exact, Some(_)) => {
            return Err(Failure::input("--epsilon requires --zero-mode tolerance"))
        }
        (ZeroModeArg::Tolerance, eps) => {
            ZeroPolicy::tolerance(eps.unwrap_or(ZeroPolicy::DEFAULT_EPSILON))
        }
    };
    policy.validate()?;
    Ok(policy)
}

fn parse_f64_list(s: &str) -> Result<Vec<f64>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Failure::input(format!("'{t}' is not a number")))
        })
        .collect()
}

fn parse_u32_list(s: &str) -> Result<Vec<u32>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Failure::input(format!("'{t}' is not an integer")))
        })
        .collect()
}

fn describe_input(input: &InputArgs) -> String {
    if let Some(id) = &input.catalog {
        format!("catalog:{id}")
    } else if let Some(path) = &input.graph6 {
        format!("graph6:{}", path.display())
    } else if let Some(path) = &input.json {
        format!("json:{}", path.display())
    } else {
        "none".into()
    }
}

type NamedGraphs = Vec<(String, Result<Graph, Error>)>;

fn load_graphs(input: &InputArgs) -> Result<NamedGraphs, Failure> {
    let sources = [
        input.catalog.is_some(),
        input.graph6.is_some(),
        input.json.is_some(),
    ];
    if sources.iter().filter(|s| **s).count() != 1 {
        return Err(Failure::input(
            "choose exactly one input: --catalog, --graph6, or --json",
        ));
    }
    if let Some(id) = &input.catalog {
        let id: CatalogId = id.parse()?;
        let g = catalog(&id)?;
        return Ok(vec![(id.to_string(), Ok(g))]);
    }
    if let Some(path) = &input.graph6 {
        let text = fs::read_to_string(path)?;
        let stem = file_label(path);
        let mut graphs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            graphs.push((format!("{stem}:{i}"), graph6::parse_graph6(line)));
        }
        if graphs.is_empty() {
            return Err(Failure::input(format!(
                "{}: no graph6 lines",
                path.display()
            )));
        }
        return Ok(graphs);
    }
    let path = input.json.as_ref().expect("validated above");
    let text = fs::read_to_string(path)?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let stem = file_label(path);
    let entries: Vec<Value> = match value {
        Value::Array(list) => list,
        other => vec![other],
    };
    let mut graphs = Vec::new();
    for (i, entry) in entries.iter().enumerate() {
        let name = entry
            .get("name")
            .and_then(Value::as_str)
            .map(str::to_owned)
            .unwrap_or_else(|| format!("{stem}:{i}"));
        graphs.push((name, edge_list_graph(entry)));
    }
    if graphs.is_empty() {
        return Err(Failure::input(format!("{}: no graphs", path.display())));
    }
    Ok(graphs)
}

fn file_label(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn edge_list_graph(entry: &Value) -> Result<Graph, Error> {
    let n = entry
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::InvalidGraph("edge list needs a vertex count 'n'".into()))?;
    let edges = entry
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::InvalidGraph("edge list needs an 'edges' array".into()))?;
    let mut pairs = Vec::with_capacity(edges.len());
    for e in edges {
        let pair = e.as_array().filter(|p| p.len() == 2);
        let (u, v) = pair
            .and_then(|p| Some((p[0].as_u64()?, p[1].as_u64()?)))
            .ok_or_else(|| Error::InvalidGraph(format!("bad edge entry {e}")))?;
        pairs.push((u as usize, v as usize));
    }
    Graph::new(n as usize, pairs)
}

/// Runs one closure per graph in parallel, keeping input order. Graphs
/// that failed to parse and items that failed to compute become error
/// entries; in strict mode the first failure aborts with its class.
fn run_items<F>(
    graphs: &[(String, Result<Graph, Error>)],
    strict: bool,
    work: F,
) -> Result<Vec<Value>, Failure>
where
    F: Fn(&str, &Graph) -> Result<Value, Error> + Sync,
{
    let results: Vec<(String, Result<Value, Error>)> = graphs
        .par_iter()
        .map(|(name, parsed)| {
            let outcome = match parsed {
                Ok(g) => work(name, g),
                Err(e) => Err(clone_error(e)),
            };
            (name.clone(), outcome)
        })
        .collect();

    let mut items = Vec::with_capacity(results.len());
    for (name, outcome) in results {
        match outcome {
            Ok(item) => items.push(item),
            Err(e) => {
                if strict {
                    return Err(Failure::from(e));
                }
                items.push(json!({
                    "graph": name,
                    "error": e.to_string(),
                }));
            }
        }
    }
    Ok(items)
}

/// Errors are not Clone; carry the class and message across the
/// parallel boundary instead.
fn clone_error(e: &Error) -> Error {
    match e {
        Error::BudgetExceeded { n, max } => Error::BudgetExceeded { n: *n, max: *max },
        other => Error::InvalidGraph(other.to_string()),
    }
}

fn bound_item(name: &str, k: u32, reports: &[BoundReport]) -> Value {
    let mut named = reports.to_vec();
    for r in &mut named {
        r.graph = name.to_string();
    }
    json!({
        "graph": name,
        "k": k,
        "reports": serde_json::to_value(&named).expect("serializable"),
    })
}

fn run_verify(
    cert_path: PathBuf,
    input: InputArgs,
    k: Option<u32>,
    tol: f64,
    out: OutputArgs,
    started: std::time::Instant,
) -> Result<u8, Failure> {
    let graphs = load_graphs(&input)?;
    if graphs.len() != 1 {
        return Err(Failure::input("verify expects exactly one graph"));
    }
    let (name, graph) = &graphs[0];
    let graph = graph.as_ref().map_err(clone_error)?;
    let text = fs::read_to_string(&cert_path)?;
    let cert = parse_certificate_json(&text)?;
    let (kind, cert_k, report) = match &cert {
        Certificate::Packing(c) => {
            let k = k.unwrap_or(c.k);
            ("packing", k, verify_packing(graph, k, c, tol)?)
        }
        Certificate::Quantum(c) => {
            let k = k.unwrap_or(c.k);
            ("quantum", k, verify_quantum_cert(graph, k, c, tol)?)
        }
    };
    let valid = report.valid;
    let item = json!({
        "graph": name,
        "kind": kind,
        "k": cert_k,
        "report": serde_json::to_value(&report).expect("serializable"),
    });
    let code = emit(
        RunReport {
            schema_version: SCHEMA_VERSION,
            tool: "spectral-indep",
            version: env!("CARGO_PKG_VERSION"),
            command: "verify",
            input: describe_input(&input),
            items: vec![item],
            timing_ms: timing(&out, started),
        },
        &out,
    )?;
    Ok(if valid { code } else { EXIT_ASSERTION })
}

/// Inertia-bound tightness on the standard catalog, frozen. A scan
/// over the catalog asserts the freshly computed flags still match.
fn expected_catalog_tightness(id: &CatalogId) -> bool {
    match id {
        // Even cycles keep a zero eigenvalue pair exactly when 4 | n.
        CatalogId::Cycle(n) => n % 4 != 0,
        CatalogId::Path(_) => true,
        CatalogId::Complete(_) => true,
        // Complete multipartite: tight iff at most one part exceeds 1.
        CatalogId::CompleteBipartite(a, b) => *a.min(b) == 1,
        CatalogId::CompleteMultipartite(parts) => {
            parts.iter().filter(|p| **p > 1).count() <= 1
        }
        CatalogId::Petersen => true,
        CatalogId::Kneser(n, k) => matches!((n, k), (5, 2) | (6, 2)),
        CatalogId::Hypercube(d) => matches!(d, 1 | 3),
        CatalogId::FoldedCube(d) => matches!(d, 2 | 3 | 5),
        CatalogId::Paley(q) => *q == 5,
        CatalogId::Empty(_) => true,
    }
}

#[allow(clippy::too_many_arguments)]
fn run_scan(
    n: String,
    count: usize,
    k: String,
    seed: u64,
    catalog_only: bool,
    budget: usize,
    out: OutputArgs,
    started: std::time::Instant,
) -> Result<u8, Failure> {
    let ks = parse_u32_list(&k)?;
    if ks.is_empty() || ks.contains(&0) {
        return Err(Failure::input("--k needs positive integers"));
    }
    let budget = OracleBudget {
        max_vertices: budget,
    };
    let policy = ZeroPolicy::exact();

    let (input_desc, graphs): (String, Vec<(String, Graph)>) = if catalog_only {
        let pairs = CatalogId::standard_corpus()
            .into_iter()
            .map(|id| {
                let g = catalog(&id)?;
                Ok((id.to_string(), g))
            })
            .collect::<Result<Vec<_>, Error>>()?;
        ("catalog".into(), pairs)
    } else {
        let (lo, hi) = parse_range(&n)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pairs = Vec::with_capacity(count);
        for i in 0..count {
            let n = rng.random_range(lo..=hi);
            let p = [0.2, 0.5, 0.8][rng.random_range(0..3)];
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random::<f64>() < p {
                        edges.push((u, v));
                    }
                }
            }
            pairs.push((format!("er:{i}"), Graph::new(n, edges)?));
        }
        (format!("er:n={lo},{hi}:count={count}:seed={seed}"), pairs)
    };

    struct ScanRow {
        item: Value,
        violations: Vec<String>,
        mismatches: Vec<String>,
        tight_counts: Vec<(String, bool)>,
    }

    let rows: Vec<Result<ScanRow, Error>> = graphs
        .par_iter()
        .map(|(name, g)| {
            let mut reports: Vec<BoundReport> = Vec::new();
            let mut alphas = serde_json::Map::new();
            let mut violations = Vec::new();
            let mut mismatches = Vec::new();
            let mut tight_counts = Vec::new();
            for &k in &ks {
                let (alpha, _) = alpha_k_exact_budgeted(g, k, &budget)?;
                alphas.insert(k.to_string(), json!(alpha));
                let chain = bound_chain(g, k, Some(&Polynomial::monomial(k)), &policy, &budget)?;
                for r in &chain {
                    if (r.floor as i128) < alpha as i128 {
                        violations.push(format!("{name} k={k} {}", r.bound));
                    }
                    if let Some(t) = r.tight {
                        tight_counts.push((r.bound.to_string(), t));
                    }
                }
                reports.extend(chain);
            }
            if catalog_only {
                let id: CatalogId = name.parse()?;
                let inertia_tight = reports
                    .iter()
                    .find(|r| {
                        r.k == 1 && r.bound == spectral_indep::bounds::BoundName::Inertia
                    })
                    .and_then(|r| r.tight);
                if let Some(t) = inertia_tight {
                    if t != expected_catalog_tightness(&id) {
                        mismatches.push(name.clone());
                    }
                }
            }
            let mut named = reports;
            for r in &mut named {
                r.graph = name.clone();
            }
            let mut item = serde_json::Map::new();
            item.insert("graph".into(), json!(name));
            item.insert("n".into(), json!(g.n()));
            item.insert("alpha".into(), Value::Object(alphas));
            item.insert(
                "reports".into(),
                serde_json::to_value(&named).expect("serializable"),
            );
            if catalog_only {
                item.insert(
                    "expected_tight".into(),
                    json!(expected_catalog_tightness(&name.parse::<CatalogId>()?)),
                );
            }
            Ok(ScanRow {
                item: Value::Object(item),
                violations,
                mismatches,
                tight_counts,
            })
        })
        .collect();

    let mut items = Vec::new();
    let mut violations: Vec<String> = Vec::new();
    let mut mismatches: Vec<String> = Vec::new();
    let mut tight_by_bound: std::collections::BTreeMap<String, (usize, usize)> =
        std::collections::BTreeMap::new();
    for row in rows {
        let row = row.map_err(Failure::from)?;
        items.push(row.item);
        violations.extend(row.violations);
        mismatches.extend(row.mismatches);
        for (bound, tight) in row.tight_counts {
            let entry = tight_by_bound.entry(bound).or_insert((0, 0));
            entry.1 += 1;
            if tight {
                entry.0 += 1;
            }
        }
    }

    let tightness: serde_json::Map<String, Value> = tight_by_bound
        .into_iter()
        .map(|(bound, (tight, total))| {
            (bound, json!(tight as f64 / total.max(1) as f64))
        })
        .collect();

    let summary = if catalog_only {
        json!({
            "graphs": items.len(),
            "violations": violations,
            "tightness_mismatches": mismatches,
            "tightness": Value::Object(tightness),
        })
    } else {
        json!({
            "graphs": items.len(),
            "violations": violations,
            "tightness": Value::Object(tightness),
        })
    };

    let failed = !violations.is_empty() || !mismatches.is_empty();
    let mut all_items = vec![summary];
    all_items.extend(items);
    let code = emit(
        RunReport {
            schema_version: SCHEMA_VERSION,
            tool: "spectral-indep",
            version: env!("CARGO_PKG_VERSION"),
            command: "scan",
            input: input_desc,
            items: all_items,
            timing_ms: timing(&out, started),
        },
        &out,
    )?;
    Ok(if failed { EXIT_ASSERTION } else { code })
}

fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let parts: Vec<&str> = s.split(',').collect();
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Failure::input(format!("'{t}' is not a vertex count")))
    };
    let (lo, hi) = match parts.as_slice() {
        [one] => {
            let v = parse(one)?;
            (v, v)
        }
        [lo, hi] => (parse(lo)?, parse(hi)?),
        _ => return Err(Failure::input("--n takes 'n' or 'min,max'")),
    };
    if lo == 0 || hi < lo {
        return Err(Failure::input(format!("bad vertex range {lo},{hi}")));
    }
    Ok((lo, hi))
}

/// Rounds every float in the tree to 12 significant digits so output
/// bytes do not depend on how the value was computed.
fn round_floats(value: &mut Value) {
    match value {
        Value::Number(n) => {
            if let Some(f) = n.as_f64() {
                if n.is_f64() {
                    if let Some(rounded) = serde_json::Number::from_f64(round_significant(f)) {
                        *value = Value::Number(rounded);
                    }
                }
            }
        }
        Value::Array(list) => list.iter_mut().for_each(round_floats),
        Value::Object(map) => map.values_mut().for_each(round_floats),
        _ => {}
    }
}

fn round_significant(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if !x.is_finite() {
        return x;
    }
    let magnitude = x.abs().log10().floor() as i32;
    let factor = 10f64.powi(11 - magnitude);
    if !factor.is_finite() || factor == 0.0 {
        return x;
    }
    (x * factor).round() / factor
}

/// Serializes through a sorted-key Value tree with rounded floats, so
/// identical inputs produce identical bytes.
fn emit(report: RunReport, out: &OutputArgs) -> Result<u8, Failure> {
    let mut value = serde_json::to_value(&report).expect("report is serializable");
    round_floats(&mut value);
    match out.format {
        OutputFormat::Json => {
            println!("{}", serde_json::to_string(&value).expect("valid tree"));
        }
        OutputFormat::Csv => {
            print!("{}", to_csv(&value)?);
        }
    }
    Ok(0)
}

/// Flat bound table: every BoundReport-shaped node becomes one row.
fn to_csv(report: &Value) -> Result<String, Failure> {
    let mut rows = Vec::new();
    collect_bound_rows(report, &mut rows);
    if rows.is_empty() {
        return Err(Failure::input(
            "csv output needs bound reports; use json for this command",
        ));
    }
    let mut text = String::from("graph,k,bound,value,floor,tight\n");
    for row in rows {
        text.push_str(&row);
        text.push('\n');
    }
    Ok(text)
}

fn collect_bound_rows(value: &Value, rows: &mut Vec<String>) {
    match value {
        Value::Object(map) => {
            let looks_like_report = map.contains_key("bound")
                && map.contains_key("value")
                && map.contains_key("floor");
            if looks_like_report {
                let tight = match map.get("tight") {
                    Some(Value::Bool(b)) => b.to_string(),
                    _ => String::new(),
                };
                rows.push(format!(
                    "{},{},{},{},{},{}",
                    map.get("graph").and_then(Value::as_str).unwrap_or(""),
                    map.get("k").and_then(Value::as_u64).unwrap_or(0),
                    map.get("bound").and_then(Value::as_str).unwrap_or(""),
                    map.get("value").map(|v| v.to_string()).unwrap_or_default(),
                    map.get("floor").map(|v| v.to_string()).unwrap_or_default(),
                    tight,
                ));
            } else {
                map.values().for_each(|v| collect_bound_rows(v, rows));
            }
        }
        Value::Array(list) => list.iter().for_each(|v| collect_bound_rows(v, rows)),
        _ => {}
    }
}
