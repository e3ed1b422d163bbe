//! Reproducible Monte Carlo experiments over G(n,p).
//!
//! Trials are independent tasks: trial t consumes only the derived seed
//! `stream_seed(config.seed, t)` and the immutable config, and writes into
//! its own result slot. Work is split into contiguous chunks across
//! workers, so the per-trial rows (and any CSV derived from them) are
//! byte-identical for every worker count.

use biclab::alpha::alpha_budgeted;
use biclab::beta::beta_budgeted;
use biclab::blocks::validate_decomposition;
use biclab::builders::cover_decomposition;
use biclab::graph::{gnp_sample, GnpParams};
use biclab::problab::{regime_classify, EventProbs, RegimeReport};
use biclab::rng::stream_seed;
use biclab::sparse::{gamma_max, structural_condition};
use biclab::tau::exact_tau;
use serde::Serialize;
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

/// Hard guard for the dense Monte Carlo: the exact alpha/beta solvers are
/// tuned for desk scale.
pub const MAX_MC_VERTICES: usize = 120;

pub const DEFAULT_SOLVER_BUDGET: u64 = 2_000_000_000;

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentConfig {
    pub n: usize,
    pub p: f64,
    pub trials: u64,
    pub seed: u64,
    pub workers: usize,
    pub solver_budget: u64,
    pub threshold: f64,
}

impl ExperimentConfig {
    fn check(&self) -> Result<(), McError> {
        if self.trials < 1 {
            return Err(McError::Domain("trials must be at least 1".into()));
        }
        if self.workers < 1 {
            return Err(McError::Domain("workers must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum McError {
    Domain(String),
}

impl fmt::Display for McError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            McError::Domain(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for McError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EventLabel {
    E11,
    E10,
    E01,
    E00,
}

impl EventLabel {
    pub fn from_indicators(x_positive: bool, y_positive: bool) -> Self {
        match (x_positive, y_positive) {
            (true, true) => EventLabel::E11,
            (true, false) => EventLabel::E10,
            (false, true) => EventLabel::E01,
            (false, false) => EventLabel::E00,
        }
    }

    pub fn index(&self) -> usize {
        match self {
            EventLabel::E11 => 0,
            EventLabel::E10 => 1,
            EventLabel::E01 => 2,
            EventLabel::E00 => 3,
        }
    }

    pub const ALL: [EventLabel; 4] = [
        EventLabel::E11,
        EventLabel::E10,
        EventLabel::E01,
        EventLabel::E00,
    ];
}

impl fmt::Display for EventLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EventLabel::E11 => write!(f, "E11"),
            EventLabel::E10 => write!(f, "E10"),
            EventLabel::E01 => write!(f, "E01"),
            EventLabel::E00 => write!(f, "E00"),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TrialRow {
    pub trial: u64,
    pub seed: u64,
    pub alpha: u32,
    pub beta: u32,
    pub event: EventLabel,
}

/// 95% Wilson score interval for `count` successes out of `n`.
pub fn wilson_interval(count: u64, n: u64) -> (f64, f64) {
    if n == 0 {
        return (0.0, 1.0);
    }
    let z = 1.96f64;
    let nf = n as f64;
    let phat = count as f64 / nf;
    let z2 = z * z;
    let denom = 1.0 + z2 / nf;
    let center = (phat + z2 / (2.0 * nf)) / denom;
    let half = (z / denom) * (phat * (1.0 - phat) / nf + z2 / (4.0 * nf * nf)).sqrt();
    ((center - half).max(0.0), (center + half).min(1.0))
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct EventAggregate {
    pub event: EventLabel,
    pub count: u64,
    pub frequency: f64,
    pub wilson_low: f64,
    pub wilson_high: f64,
    pub predicted: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AlphaBetaResult {
    pub config: ExperimentConfig,
    pub regime: RegimeReport,
    pub rows: Vec<TrialRow>,
    pub events: Vec<EventAggregate>,
    /// Total variation distance between the empirical event distribution
    /// and the Poisson prediction.
    pub tv_distance: f64,
    pub partial: bool,
    pub failed_trial: Option<u64>,
}

impl AlphaBetaResult {
    /// Stable per-trial CSV: `trial,seed,alpha,beta,event`.
    pub fn rows_csv(&self) -> String {
        let mut s = String::from("trial,seed,alpha,beta,event\n");
        for r in &self.rows {
            s.push_str(&format!(
                "{},{},{},{},{}\n",
                r.trial, r.seed, r.alpha, r.beta, r.event
            ));
        }
        s
    }

    pub fn empirical(&self) -> [f64; 4] {
        let mut out = [0.0; 4];
        for (i, agg) in self.events.iter().enumerate() {
            out[i] = agg.frequency;
        }
        out
    }
}

/// Runs `trials` experiments on G(n, 1/2): exact alpha and beta per trial,
/// classified into the four joint events by the thresholds alpha >= k and
/// beta >= k + 2 at the regime's reference k.
///
/// A trial whose solver budget runs out aborts the run; whatever rows
/// completed are returned with `partial = true`.
pub fn mc_alpha_beta(config: &ExperimentConfig) -> Result<AlphaBetaResult, McError> {
    config.check()?;
    if config.n < 2 {
        return Err(McError::Domain("need n >= 2".into()));
    }
    if config.n > MAX_MC_VERTICES {
        return Err(McError::Domain(format!(
            "n = {} exceeds the dense Monte Carlo guard {MAX_MC_VERTICES}",
            config.n
        )));
    }
    let regime = regime_classify(config.n as u64, config.threshold);
    let k_event = regime.k_event as u32;

    let trials = config.trials as usize;
    let mut slots: Vec<Option<TrialRow>> = vec![None; trials];
    let abort = AtomicBool::new(false);
    let first_failure = AtomicU64::new(u64::MAX);
    let chunk = trials.div_ceil(config.workers);
    std::thread::scope(|scope| {
        for (w, slice) in slots.chunks_mut(chunk).enumerate() {
            let start = w * chunk;
            let abort = &abort;
            let first_failure = &first_failure;
            scope.spawn(move || {
                for (off, slot) in slice.iter_mut().enumerate() {
                    if abort.load(Ordering::Relaxed) {
                        return;
                    }
                    let trial = (start + off) as u64;
                    let seed = stream_seed(config.seed, trial);
                    let g = gnp_sample(&GnpParams {
                        n: config.n,
                        p: 0.5,
                        seed,
                    });
                    let a = alpha_budgeted(&g, config.solver_budget);
                    let b = beta_budgeted(&g, config.solver_budget);
                    match (a, b) {
                        (Ok((alpha, _)), Ok((beta, _))) => {
                            let event = EventLabel::from_indicators(
                                alpha as u32 >= k_event,
                                beta as u32 >= k_event + 2,
                            );
                            *slot = Some(TrialRow {
                                trial,
                                seed,
                                alpha: alpha as u32,
                                beta: beta as u32,
                                event,
                            });
                        }
                        _ => {
                            abort.store(true, Ordering::Relaxed);
                            first_failure.fetch_min(trial, Ordering::Relaxed);
                            return;
                        }
                    }
                }
            });
        }
    });

    let rows: Vec<TrialRow> = slots.into_iter().flatten().collect();
    let failed = first_failure.load(Ordering::Relaxed);
    let partial = failed != u64::MAX;
    let mut counts = [0u64; 4];
    for r in &rows {
        counts[r.event.index()] += 1;
    }
    let total = rows.len() as u64;
    let predicted = regime.event_probs;
    let events: Vec<EventAggregate> = EventLabel::ALL
        .iter()
        .map(|&ev| {
            let count = counts[ev.index()];
            let frequency = if total > 0 {
                count as f64 / total as f64
            } else {
                0.0
            };
            let (wilson_low, wilson_high) = wilson_interval(count, total);
            EventAggregate {
                event: ev,
                count,
                frequency,
                wilson_low,
                wilson_high,
                predicted: pick_prob(&predicted, ev),
            }
        })
        .collect();
    let tv_distance = 0.5
        * events
            .iter()
            .map(|e| (e.frequency - e.predicted).abs())
            .sum::<f64>();
    Ok(AlphaBetaResult {
        config: config.clone(),
        regime,
        rows,
        events,
        tv_distance,
        partial,
        failed_trial: if partial { Some(failed) } else { None },
    })
}

fn pick_prob(p: &EventProbs, ev: EventLabel) -> f64 {
    match ev {
        EventLabel::E11 => p.p11,
        EventLabel::E10 => p.p10,
        EventLabel::E01 => p.p01,
        EventLabel::E00 => p.p00,
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SparseTrialRow {
    pub trial: u64,
    pub seed: u64,
    pub structural: bool,
    pub gamma: u32,
    /// Blocks in the constructed certificate (stars + one per 4-cycle).
    pub blocks: u32,
    pub cert_valid: bool,
    /// Exact tau, computed on tiny instances only (n <= 10).
    pub tau: Option<u32>,
    /// n - gamma == tau, for structurally valid tiny instances.
    pub matched: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SparseResult {
    pub config: ExperimentConfig,
    pub structural_fraction: f64,
    pub all_certificates_valid: bool,
    /// Every certificate has exactly n - gamma blocks.
    pub all_block_counts_match: bool,
    pub tiny_checked: u64,
    pub tiny_matched: u64,
    /// Mean of n - tau (= gamma on structurally valid samples) against the
    /// reference scale log2(np) / p.
    pub mean_gamma: f64,
    pub log2_np_over_p: f64,
    pub gamma_to_reference_ratio: f64,
    pub rows: Vec<SparseTrialRow>,
    pub partial: bool,
    pub failed_trial: Option<u64>,
}

impl SparseResult {
    /// Stable per-trial CSV.
    pub fn rows_csv(&self) -> String {
        let mut s = String::from("trial,seed,structural,gamma,blocks,cert_valid,tau,matched\n");
        for r in &self.rows {
            s.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                r.trial,
                r.seed,
                r.structural,
                r.gamma,
                r.blocks,
                r.cert_valid,
                r.tau.map(|v| v.to_string()).unwrap_or_default(),
                r.matched.map(|v| v.to_string()).unwrap_or_default(),
            ));
        }
        s
    }
}

/// Sparse-regime experiment: samples G(n,p) with p <= n^(-7/8), checks the
/// structural condition, certifies tau <= n - gamma_max with a validated
/// decomposition, and cross-checks n - gamma_max = tau exactly on tiny
/// instances.
pub fn mc_sparse(config: &ExperimentConfig) -> Result<SparseResult, McError> {
    config.check()?;
    let n = config.n;
    if n < 2 {
        return Err(McError::Domain("need n >= 2".into()));
    }
    let p_cap = (n as f64).powf(-7.0 / 8.0);
    if config.p > p_cap {
        return Err(McError::Domain(format!(
            "p = {} above n^(-7/8) = {p_cap:.6}; the sparse analysis needs p <= n^(-7/8)",
            config.p
        )));
    }

    let trials = config.trials as usize;
    let mut slots: Vec<Option<SparseTrialRow>> = vec![None; trials];
    let abort = AtomicBool::new(false);
    let first_failure = AtomicU64::new(u64::MAX);
    let chunk = trials.div_ceil(config.workers);
    std::thread::scope(|scope| {
        for (w, slice) in slots.chunks_mut(chunk).enumerate() {
            let start = w * chunk;
            let abort = &abort;
            let first_failure = &first_failure;
            scope.spawn(move || {
                for (off, slot) in slice.iter_mut().enumerate() {
                    if abort.load(Ordering::Relaxed) {
                        return;
                    }
                    let trial = (start + off) as u64;
                    match sparse_trial(config, trial) {
                        Some(row) => *slot = Some(row),
                        None => {
                            abort.store(true, Ordering::Relaxed);
                            first_failure.fetch_min(trial, Ordering::Relaxed);
                            return;
                        }
                    }
                }
            });
        }
    });

    let rows: Vec<SparseTrialRow> = slots.into_iter().flatten().collect();
    let failed = first_failure.load(Ordering::Relaxed);
    let partial = failed != u64::MAX;
    let total = rows.len().max(1) as f64;
    let structural = rows.iter().filter(|r| r.structural).count() as f64;
    let tiny_checked = rows.iter().filter(|r| r.matched.is_some()).count() as u64;
    let tiny_matched = rows.iter().filter(|r| r.matched == Some(true)).count() as u64;
    let mean_gamma = rows.iter().map(|r| r.gamma as f64).sum::<f64>() / total;
    let np = config.p * n as f64;
    let log2_np_over_p = if np > 0.0 { np.log2() / config.p } else { 0.0 };
    Ok(SparseResult {
        config: config.clone(),
        structural_fraction: structural / total,
        all_certificates_valid: rows.iter().all(|r| r.cert_valid),
        all_block_counts_match: rows
            .iter()
            .all(|r| r.blocks as usize == n - r.gamma as usize),
        tiny_checked,
        tiny_matched,
        mean_gamma,
        log2_np_over_p,
        gamma_to_reference_ratio: if log2_np_over_p > 0.0 {
            mean_gamma / log2_np_over_p
        } else {
            0.0
        },
        rows,
        partial,
        failed_trial: if partial { Some(failed) } else { None },
    })
}

fn sparse_trial(config: &ExperimentConfig, trial: u64) -> Option<SparseTrialRow> {
    let seed = stream_seed(config.seed, trial);
    let g = gnp_sample(&GnpParams {
        n: config.n,
        p: config.p,
        seed,
    });
    let report = structural_condition(&g);
    let (gamma, cover) = gamma_max(&g, config.solver_budget).ok()?;
    let cert = cover_decomposition(&g, &cover).ok()?;
    let cert_valid = validate_decomposition(&g, &cert).passed;
    let tau = if config.n <= 10 {
        Some(exact_tau(&g, config.solver_budget).ok()?.0)
    } else {
        None
    };
    let matched = match (report.satisfied(), tau) {
        (true, Some(t)) => Some(config.n as u32 - gamma == t),
        _ => None,
    };
    Some(SparseTrialRow {
        trial,
        seed,
        structural: report.satisfied(),
        gamma,
        blocks: cert.len() as u32,
        cert_valid,
        tau,
        matched,
    })
}
