//! biclab: minimum biclique decompositions of graphs and reproducible
//! G(n,p) experiments.
//!
//! Graph I/O uses the edge-list text format (`n m` header, then `u v`
//! lines). Every subcommand except `sample` prints a JSON report on
//! standard output. Exit codes: 0 success, 1 domain error, 2 budget
//! exhausted.

use biclab::alpha::alpha_budgeted;
use biclab::beta::beta_budgeted;
use biclab::blocks::{validate_decomposition, BipartiteBlock, Decomposition};
use biclab::builders::{beta_decomposition, cover_decomposition, star_decomposition};
use biclab::divisor::{divisor_scan, divisor_sum};
use biclab::graph::{gnp_sample, parse_graph, serialize_graph, GnpParams, Graph};
use biclab::problab::{
    event_probabilities, f_moment_margins, g_moment_margins, h_moment_margins, k0_of_n,
    regime_classify,
};
use biclab::search::SearchError;
use biclab::sparse::{gamma_max, structural_condition};
use biclab::tau::{exact_tau, exact_tau_prime, tau_subset_min, TauPrime};
use biclab_cli::mc::{mc_alpha_beta, mc_sparse, ExperimentConfig, DEFAULT_SOLVER_BUDGET};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "biclab",
    version,
    about = "biclique decompositions and G(n,p) experiments"
)]
struct Cli {
    /// Emit compact single-line JSON instead of pretty-printed JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Sample G(n,p) and print its edge list.
    #[command(name = "sample")]
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the edge list here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact independence number with a witness.
    #[command(name = "alpha")]
    Alpha {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SOLVER_BUDGET)]
        budget: u64,
    },
    /// Largest induced complete bipartite subgraph with a witness.
    #[command(name = "beta")]
    Beta {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SOLVER_BUDGET)]
        budget: u64,
    },
    /// Exact minimum biclique partition with a validated certificate.
    #[command(name = "tau")]
    Tau {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SOLVER_BUDGET)]
        budget: u64,
        /// Write the certificate (BLOCK lines) to this path.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Minimum cover by nontrivial blocks (may be infinite).
    #[command(name = "tau-prime")]
    TauPrime {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SOLVER_BUDGET)]
        budget: u64,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Minimum of n - |U| + tau'(G[U]) over all vertex subsets U.
    #[command(name = "tau-subsets")]
    TauSubsets {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SOLVER_BUDGET)]
        budget: u64,
    },
    /// Star decomposition from a maximum independent set.
    #[command(name = "decompose-star")]
    DecomposeStar {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SOLVER_BUDGET)]
        budget: u64,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Stars plus one maximum induced complete bipartite block.
    #[command(name = "decompose-beta")]
    DecomposeBeta {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SOLVER_BUDGET)]
        budget: u64,
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Max gamma over induced subgraphs with vertex/4-cycle components.
    #[command(name = "gamma")]
    Gamma {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SOLVER_BUDGET)]
        budget: u64,
    },
    /// Threshold regime report for G(n, 1/2).
    #[command(name = "regime")]
    Regime {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 10.0)]
        threshold: f64,
        #[arg(long)]
        out_csv: Option<PathBuf>,
    },
    /// Poisson joint-event probabilities for given rates.
    #[command(name = "events")]
    Events {
        #[arg(long)]
        lambda: f64,
        #[arg(long)]
        mu: f64,
    },
    /// Second-moment margin tables at k = k0(n).
    #[command(name = "moments")]
    Moments {
        #[arg(long)]
        n: u64,
        /// Write PREFIX.f.csv, PREFIX.g.csv, PREFIX.h.csv.
        #[arg(long)]
        out_csv: Option<PathBuf>,
    },
    /// Divisor-sum tail: single m, or the even-m band scan.
    #[command(name = "lemma31")]
    Lemma31 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: f64,
        /// Evaluate a single edge count m instead of scanning.
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, default_value_t = 10.0)]
        c_min: f64,
        #[arg(long)]
        out_csv: Option<PathBuf>,
    },
    /// Monte Carlo: exact alpha/beta on G(n, 1/2) vs Poisson predictions.
    #[command(name = "mc-alpha-beta")]
    McAlphaBeta {
        /// Desk scale for exact alpha/beta; hard guard at 120.
        #[arg(long, default_value_t = 50)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = DEFAULT_SOLVER_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 10.0)]
        threshold: f64,
        /// Write per-trial rows as CSV.
        #[arg(long)]
        out_csv: Option<PathBuf>,
    },
    /// Monte Carlo: sparse regime, gamma certificates and tau cross-checks.
    #[command(name = "mc-sparse")]
    McSparse {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = DEFAULT_SOLVER_BUDGET)]
        budget: u64,
        #[arg(long)]
        out_csv: Option<PathBuf>,
    },
}

enum CliError {
    Domain(String),
    Budget(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Budget(_) => 2,
        }
    }
    fn message(&self) -> &str {
        match self {
            CliError::Domain(s) | CliError::Budget(s) => s,
        }
    }
}

fn domain<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Domain(e.to_string())
}

fn from_search(e: SearchError) -> CliError {
    match e {
        SearchError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
        SearchError::TooLarge { .. } => CliError::Domain(e.to_string()),
    }
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Domain(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(domain)
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content)
        .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", path.display())))
}

fn block_json(b: &BipartiteBlock) -> Value {
    json!({ "a": b.a.to_vec(), "b": b.b.to_vec() })
}

fn decomposition_json(d: &Decomposition) -> Value {
    Value::Array(d.blocks.iter().map(block_json).collect())
}

/// Validates and optionally writes a certificate, returning its JSON form.
fn emit_certificate(
    g: &Graph,
    d: &Decomposition,
    cert: &Option<PathBuf>,
) -> Result<Value, CliError> {
    let report = validate_decomposition(g, d);
    if !report.passed {
        return Err(CliError::Domain(format!(
            "internal error: certificate failed validation: {}",
            report.violation.map(|v| v.to_string()).unwrap_or_default()
        )));
    }
    if let Some(path) = cert {
        write_file(path, &d.to_text())?;
    }
    Ok(json!({
        "blocks": decomposition_json(d),
        "certificate_path": cert.as_ref().map(|p| p.display().to_string()),
    }))
}

fn run(cli: &Cli) -> Result<Option<Value>, CliError> {
    match &cli.cmd {
        Cmd::Sample { n, p, seed, out } => {
            if !(0.0..=1.0).contains(p) {
                return Err(CliError::Domain("p must lie in [0,1]".into()));
            }
            let g = gnp_sample(&GnpParams {
                n: *n,
                p: *p,
                seed: *seed,
            });
            let text = serialize_graph(&g);
            match out {
                Some(path) => write_file(path, &text)?,
                None => print!("{text}"),
            }
            Ok(None)
        }
        Cmd::Alpha { file, budget } => {
            let g = load_graph(file)?;
            let (a, witness) = alpha_budgeted(&g, *budget).map_err(from_search)?;
            Ok(Some(json!({
                "n": g.n(), "m": g.edge_count(),
                "alpha": a, "witness": witness.to_vec(),
            })))
        }
        Cmd::Beta { file, budget } => {
            let g = load_graph(file)?;
            let (b, witness) = beta_budgeted(&g, *budget).map_err(from_search)?;
            Ok(Some(json!({
                "n": g.n(), "m": g.edge_count(),
                "beta": b, "witness": witness.map(|w| block_json(&w)),
            })))
        }
        Cmd::Tau { file, budget, cert } => {
            let g = load_graph(file)?;
            let (tau, d) = exact_tau(&g, *budget).map_err(from_search)?;
            let cert_json = emit_certificate(&g, &d, cert)?;
            Ok(Some(json!({
                "n": g.n(), "m": g.edge_count(),
                "tau": tau, "certificate": cert_json,
            })))
        }
        Cmd::TauPrime { file, budget, cert } => {
            let g = load_graph(file)?;
            let (tp, d) = exact_tau_prime(&g, *budget).map_err(from_search)?;
            let cert_json = match &d {
                Some(d) => Some(emit_certificate(&g, d, cert)?),
                None => None,
            };
            Ok(Some(json!({
                "n": g.n(), "m": g.edge_count(),
                "tau_prime": match tp {
                    TauPrime::Finite(v) => json!(v),
                    TauPrime::Infinite => Value::Null,
                },
                "infinite": !tp.is_finite(),
                "certificate": cert_json,
            })))
        }
        Cmd::TauSubsets { file, budget } => {
            let g = load_graph(file)?;
            let (v, u) = tau_subset_min(&g, *budget).map_err(from_search)?;
            Ok(Some(json!({
                "n": g.n(), "m": g.edge_count(),
                "tau": v, "subset": u.to_vec(),
            })))
        }
        Cmd::DecomposeStar { file, budget, cert } => {
            let g = load_graph(file)?;
            let (a, witness) = alpha_budgeted(&g, *budget).map_err(from_search)?;
            let d = star_decomposition(&g, &witness).map_err(domain)?;
            let cert_json = emit_certificate(&g, &d, cert)?;
            Ok(Some(json!({
                "n": g.n(), "m": g.edge_count(),
                "alpha": a, "independent_set": witness.to_vec(),
                "count": d.len(), "certificate": cert_json,
            })))
        }
        Cmd::DecomposeBeta { file, budget, cert } => {
            let g = load_graph(file)?;
            let (b, witness) = beta_budgeted(&g, *budget).map_err(from_search)?;
            let h = witness.ok_or_else(|| {
                CliError::Domain("graph has no edges, so no induced block exists".into())
            })?;
            let d = beta_decomposition(&g, &h).map_err(domain)?;
            let cert_json = emit_certificate(&g, &d, cert)?;
            Ok(Some(json!({
                "n": g.n(), "m": g.edge_count(),
                "beta": b, "kept_block": block_json(&h),
                "count": d.len(), "certificate": cert_json,
            })))
        }
        Cmd::Gamma { file, budget } => {
            let g = load_graph(file)?;
            let (gamma, cover) = gamma_max(&g, *budget).map_err(from_search)?;
            cover
                .validate(&g)
                .map_err(|e| CliError::Domain(format!("internal error: invalid cover: {e}")))?;
            let d = cover_decomposition(&g, &cover).map_err(domain)?;
            let report = structural_condition(&g);
            Ok(Some(json!({
                "n": g.n(), "m": g.edge_count(),
                "gamma": gamma,
                "n_minus_gamma": g.n() as u32 - gamma,
                "cover": cover.to_line(),
                "isolated": cover.isolated.to_vec(),
                "c4": cover.cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>(),
                "certificate_blocks": d.len(),
                "structural_condition": report,
            })))
        }
        Cmd::Regime {
            n,
            threshold,
            out_csv,
        } => {
            if *n < 2 {
                return Err(CliError::Domain("need n >= 2".into()));
            }
            if *threshold <= 1.0 {
                return Err(CliError::Domain("threshold must exceed 1".into()));
            }
            let report = regime_classify(*n, *threshold);
            if let Some(path) = out_csv {
                write_file(path, &report.to_csv())?;
            }
            Ok(Some(serde_json::to_value(&report).unwrap()))
        }
        Cmd::Events { lambda, mu } => {
            let probs = event_probabilities(*lambda, *mu).map_err(domain)?;
            Ok(Some(json!({
                "lambda": lambda, "mu": mu, "event_probs": probs,
            })))
        }
        Cmd::Moments { n, out_csv } => {
            let f = f_moment_margins(*n).map_err(domain)?;
            let g = g_moment_margins(*n).map_err(domain)?;
            let h = h_moment_margins(*n).map_err(domain)?;
            if let Some(prefix) = out_csv {
                let base = prefix.display().to_string();
                write_file(Path::new(&format!("{base}.f.csv")), &f.to_csv())?;
                write_file(Path::new(&format!("{base}.g.csv")), &g.to_csv())?;
                write_file(Path::new(&format!("{base}.h.csv")), &h.to_csv())?;
            }
            Ok(Some(json!({
                "n": n, "k0": k0_of_n(*n),
                "f": f, "g": g, "h": h,
            })))
        }
        Cmd::Lemma31 {
            n,
            p,
            m,
            c_min,
            out_csv,
        } => match m {
            Some(m) => {
                let s = divisor_sum(*n, *p, *m).map_err(domain)?;
                Ok(Some(serde_json::to_value(&s).unwrap()))
            }
            None => {
                let scan = divisor_scan(*n, *p, *c_min).map_err(domain)?;
                if let Some(path) = out_csv {
                    write_file(path, &scan.to_csv())?;
                }
                Ok(Some(serde_json::to_value(&scan).unwrap()))
            }
        },
        Cmd::McAlphaBeta {
            n,
            trials,
            seed,
            workers,
            budget,
            threshold,
            out_csv,
        } => {
            let config = ExperimentConfig {
                n: *n,
                p: 0.5,
                trials: *trials,
                seed: *seed,
                workers: *workers,
                solver_budget: *budget,
                threshold: *threshold,
            };
            let result = mc_alpha_beta(&config).map_err(domain)?;
            if let Some(path) = out_csv {
                write_file(path, &result.rows_csv())?;
            }
            let value = serde_json::to_value(&result).unwrap();
            if result.partial {
                print_json(&value, cli.json);
                return Err(CliError::Budget(format!(
                    "solver budget exhausted at trial {}; partial results emitted",
                    result.failed_trial.unwrap()
                )));
            }
            Ok(Some(value))
        }
        Cmd::McSparse {
            n,
            p,
            trials,
            seed,
            workers,
            budget,
            out_csv,
        } => {
            let config = ExperimentConfig {
                n: *n,
                p: *p,
                trials: *trials,
                seed: *seed,
                workers: *workers,
                solver_budget: *budget,
                threshold: 10.0,
            };
            let result = mc_sparse(&config).map_err(domain)?;
            if let Some(path) = out_csv {
                write_file(path, &result.rows_csv())?;
            }
            let value = serde_json::to_value(&result).unwrap();
            if result.partial {
                print_json(&value, cli.json);
                return Err(CliError::Budget(format!(
                    "solver budget exhausted at trial {}; partial results emitted",
                    result.failed_trial.unwrap()
                )));
            }
            Ok(Some(value))
        }
    }
}

fn print_json(value: &Value, compact: bool) {
    if compact {
        println!("{}", serde_json::to_string(value).unwrap());
    } else {
        println!("{}", serde_json::to_string_pretty(value).unwrap());
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Some(value)) => {
            print_json(&value, cli.json);
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
