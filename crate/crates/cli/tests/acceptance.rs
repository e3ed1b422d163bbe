//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (run with `--nocapture` to see the PASS lines).
//!
//! Each criterion is asserted exactly as specified, with the measured
//! values in the failure message. Criteria 5, 6, 7 and 9 contain clauses
//! whose pinned numeric expectations are not attainable from the defining
//! formulas at the pinned parameters; those assertions are kept faithful
//! and fail with the true computed values rather than being loosened.

use biclab::alpha::alpha;
use biclab::beta::beta;
use biclab::blocks::validate_decomposition;
use biclab::builders::cover_decomposition;
use biclab::divisor::divisor_scan;
use biclab::graph::{gnp_sample, GnpParams, Graph};
use biclab::numeric::log2_pow2_minus_one;
use biclab::problab::{
    event_probabilities, f_moment_margins, g_moment_margins, h_moment_margins, k0_of_n, log2_f,
    log2_g, MomentTable,
};
use biclab::rng::stream_seed;
use biclab::sparse::{gamma_max, structural_condition};
use biclab::tau::{exact_tau, tau_subset_min};
use biclab_cli::mc::{mc_alpha_beta, mc_sparse, ExperimentConfig, DEFAULT_SOLVER_BUDGET};
use std::time::Instant;

fn report(criterion: u32, passed: bool, detail: &str) {
    let verdict = if passed { "PASS" } else { "FAIL" };
    println!("acceptance {criterion}: {verdict} — {detail}");
    assert!(passed, "acceptance {criterion} FAIL — {detail}");
}

/// 1. Graham–Pollak: tau(K_n) = n - 1 for n = 2..8 with validated
///    certificates, under 60 seconds.
#[test]
fn acceptance_01_complete_graphs() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 2..=8usize {
        let g = Graph::complete(n);
        let (tau, cert) = exact_tau(&g, u64::MAX).expect("within budget");
        if tau as usize != n - 1 {
            failures.push(format!("tau(K_{n}) = {tau}, want {}", n - 1));
        }
        if !validate_decomposition(&g, &cert).passed {
            failures.push(format!("K_{n} certificate invalid"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 60.0 {
        failures.push(format!("runtime {elapsed:?} >= 60 s"));
    }
    report(
        1,
        failures.is_empty(),
        &format!("tau(K_n) = n-1 for n=2..8 in {elapsed:.2?} {failures:?}"),
    );
}

/// 2. Star and kept-block upper bounds on 200 seeded G(9, 1/2) samples,
///    all certificates validated, under 120 seconds.
#[test]
fn acceptance_02_upper_bounds() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for t in 0..200u64 {
        let g = gnp_sample(&GnpParams {
            n: 9,
            p: 0.5,
            seed: stream_seed(0x0B0B, t),
        });
        let (a, _) = alpha(&g);
        let (b, _) = beta(&g);
        let (tau, cert) = exact_tau(&g, u64::MAX).expect("within budget");
        if !validate_decomposition(&g, &cert).passed {
            failures.push(format!("trial {t}: invalid certificate"));
        }
        if tau as usize > 9 - a {
            failures.push(format!("trial {t}: tau {tau} > 9 - alpha {a}"));
        }
        if b >= 1 && tau as usize > 9 - b + 1 {
            failures.push(format!("trial {t}: tau {tau} > 9 - beta {b} + 1"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 120.0 {
        failures.push(format!("runtime {elapsed:?} >= 120 s"));
    }
    report(
        2,
        failures.is_empty(),
        &format!("200 samples G(9,1/2) within both bounds in {elapsed:.2?} {failures:?}"),
    );
}

/// 3. Subset-minimization identity: min over U of n - |U| + tau'(G[U])
///    equals tau on 100 seeded G(8, 1/2) samples, under 10 minutes.
#[test]
fn acceptance_03_subset_minimization() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for t in 0..100u64 {
        let g = gnp_sample(&GnpParams {
            n: 8,
            p: 0.5,
            seed: stream_seed(0x0C0C, t),
        });
        let (tau, _) = exact_tau(&g, u64::MAX).expect("within budget");
        let (via_subsets, _) = tau_subset_min(&g, u64::MAX).expect("within budget");
        if tau != via_subsets {
            failures.push(format!("trial {t}: tau {tau} != subset-min {via_subsets}"));
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 600.0 {
        failures.push(format!("runtime {elapsed:?} >= 600 s"));
    }
    report(
        3,
        failures.is_empty(),
        &format!("100 samples G(8,1/2) agree in {elapsed:.2?} {failures:?}"),
    );
}

/// 4. Sparse oracle: on 500 seeded G(10, 0.05) samples meeting the
///    structural condition, n - gamma_max = tau exactly, and the
///    constructed decomposition validates with exactly n - gamma blocks.
#[test]
fn acceptance_04_sparse_gamma_oracle() {
    let mut failures = Vec::new();
    let mut structurally_valid = 0u32;
    for t in 0..500u64 {
        let g = gnp_sample(&GnpParams {
            n: 10,
            p: 0.05,
            seed: stream_seed(0x0D0D, t),
        });
        if !structural_condition(&g).satisfied() {
            continue;
        }
        structurally_valid += 1;
        let (gamma, cover) = gamma_max(&g, u64::MAX).expect("within budget");
        let (tau, _) = exact_tau(&g, u64::MAX).expect("within budget");
        if 10 - gamma as usize != tau as usize {
            failures.push(format!("trial {t}: n - gamma {} != tau {tau}", 10 - gamma));
        }
        let cert = cover_decomposition(&g, &cover).expect("valid cover");
        if !validate_decomposition(&g, &cert).passed {
            failures.push(format!("trial {t}: invalid certificate"));
        }
        if cert.len() != 10 - gamma as usize {
            failures.push(format!(
                "trial {t}: certificate has {} blocks, want {}",
                cert.len(),
                10 - gamma
            ));
        }
    }
    report(
        4,
        failures.is_empty() && structurally_valid > 400,
        &format!("{structurally_valid}/500 structurally valid samples, all matching {failures:?}"),
    );
}

/// 5. Formula identities: the f-recurrence and the g-from-f identity to
///    1e-9 at n in {1e3, 1e4, 1e6}; k0's defining property on a log-spaced
///    scan of [10, 1e6]; k0(1024) within 2 of 2 log2(1024) = 20.
#[test]
fn acceptance_05_formula_identities() {
    let mut failures = Vec::new();
    for n in [1_000u64, 10_000, 1_000_000] {
        for k in 1..=60u64 {
            let lhs = log2_f(n, k + 1).unwrap() - log2_f(n, k).unwrap();
            let rhs = ((n - k) as f64 / (k + 1) as f64).log2() - k as f64;
            if (lhs - rhs).abs() >= 1e-9 {
                failures.push(format!(
                    "recurrence off at n={n} k={k}: {}",
                    (lhs - rhs).abs()
                ));
            }
            let lg = log2_g(n, k).unwrap();
            let corr = (((n - k) as f64) * ((n - k - 1) as f64)
                / (((k + 2) as f64) * ((k + 1) as f64)))
                .log2()
                + log2_pow2_minus_one(k + 1)
                - (2 * k + 1) as f64;
            if (lg - (log2_f(n, k).unwrap() + corr)).abs() >= 1e-9 {
                failures.push(format!("g identity off at n={n} k={k}"));
            }
        }
    }
    let mut n = 10u64;
    while n <= 1_000_000 {
        let k0 = k0_of_n(n);
        if !(log2_f(n, k0).unwrap() >= 0.0 && log2_f(n, k0 + 1).unwrap() < 0.0) {
            failures.push(format!("k0 defining property fails at n={n}"));
        }
        n = (n as f64 * 1.5).ceil() as u64;
    }
    let k0_1024 = k0_of_n(1024);
    if k0_1024.abs_diff(20) > 2 {
        failures.push(format!(
            "k0(1024) = {k0_1024} is not within 2 of 2 log2(1024) = 20 \
             (exact value of the largest k with C(1024,k) 2^(-C(k,2)) >= 1)"
        ));
    }
    report(5, failures.is_empty(), &format!("{failures:?}"));
}

/// 6. Moment-bound margins at n = 1e6, k = k0(n): every case-1/case-2
///    margin for f_i, g_i and h_i is <= 0 in log2 scale.
#[test]
fn acceptance_06_moment_margins() {
    let n = 1_000_000u64;
    let tables = [
        f_moment_margins(n).unwrap(),
        g_moment_margins(n).unwrap(),
        h_moment_margins(n).unwrap(),
    ];
    let mut failures = Vec::new();
    for t in &tables {
        summarize_margins(t);
        for r in &t.rows {
            if r.margin > 0.0 {
                failures.push(format!(
                    "{}_i case {} i={}: margin {:+.3}",
                    t.family, r.case, r.i, r.margin
                ));
            }
        }
    }
    report(
        6,
        failures.is_empty(),
        &format!(
            "margins at n=1e6, k={} — {} positive entries {failures:?}",
            tables[0].k,
            failures.len()
        ),
    );
}

fn summarize_margins(t: &MomentTable) {
    let neg = t.rows.iter().filter(|r| r.margin <= 0.0).count();
    println!(
        "  {}-margins at n={} k={}: {}/{} nonpositive, max margin {:+.3}",
        t.family,
        t.n,
        t.k,
        neg,
        t.rows.len(),
        t.max_margin()
    );
}

/// 7. Divisor-sum tail at (n, p) = (1e5, 0.01): b_empirical > 0, and the
///    d = 2 term dominates each even-m sum by at least n^0.4 whenever
///    m <= sqrt(n).
#[test]
fn acceptance_07_divisor_tail() {
    let n = 100_000u64;
    let p = 0.01;
    let scan = divisor_scan(n, p, 10.0).unwrap();
    let mut failures = Vec::new();
    println!(
        "  b_empirical({n}, {p}) = {:.5} over {} even m in [pn/16, pn/4]",
        scan.b_empirical,
        scan.rows.len()
    );
    if scan.b_empirical <= 0.0 {
        failures.push(format!(
            "b_empirical = {:.5} <= 0 (the summed expected biclique counts exceed 1 \
             for small even m in the band)",
            scan.b_empirical
        ));
    }
    let dominance_needed = 0.4 * (n as f64).log2();
    let sqrt_n = (n as f64).sqrt();
    for r in &scan.rows {
        if (r.m as f64) <= sqrt_n {
            if let Some(margin) = r.dominance_margin {
                if margin < dominance_needed {
                    failures.push(format!(
                        "m={}: d=2 dominance margin {margin:.2} < {dominance_needed:.2}",
                        r.m
                    ));
                }
            }
        }
    }
    report(7, failures.is_empty(), &format!("{failures:?}"));
}

/// 8. Poisson event probabilities: analytic sum 1 and the closed forms at
///    (lambda, mu) = (ln 2, ln 2) to 1e-12.
#[test]
fn acceptance_08_event_probabilities() {
    let ln2 = std::f64::consts::LN_2;
    let e = event_probabilities(ln2, ln2).unwrap();
    let mut failures = Vec::new();
    for (name, value) in [
        ("p11", e.p11),
        ("p10", e.p10),
        ("p01", e.p01),
        ("p00", e.p00),
    ] {
        if (value - 0.25).abs() >= 1e-12 {
            failures.push(format!("{name} = {value} != 1/4"));
        }
    }
    let mut lam = 0.0;
    while lam <= 30.0 {
        let mut mu = 0.0;
        while mu <= 30.0 {
            let probs = event_probabilities(lam, mu).unwrap();
            if (probs.sum() - 1.0).abs() >= 1e-12 {
                failures.push(format!("sum != 1 at ({lam}, {mu})"));
            }
            mu += 1.3;
        }
        lam += 1.3;
    }
    report(8, failures.is_empty(), &format!("{failures:?}"));
}

/// 9. Monte Carlo concentration at n = 50, 2000 trials, 8 workers:
///    P(alpha in {k0-1, k0}) >= 0.9, P(beta in {k0+1, k0+2}) >= 0.75, and
///    total-variation distance between the empirical four-event
///    distribution and the Poisson prediction <= 0.25; under 30 minutes.
#[test]
fn acceptance_09_monte_carlo_concentration() {
    let start = Instant::now();
    let config = ExperimentConfig {
        n: 50,
        p: 0.5,
        trials: 2000,
        seed: 42,
        workers: 8,
        solver_budget: DEFAULT_SOLVER_BUDGET,
        threshold: 10.0,
    };
    let result = mc_alpha_beta(&config).unwrap();
    assert!(!result.partial, "budget exhausted");
    let k0 = result.regime.k0 as u32;
    let total = result.rows.len() as f64;
    let alpha_conc = result
        .rows
        .iter()
        .filter(|r| r.alpha == k0 - 1 || r.alpha == k0)
        .count() as f64
        / total;
    let beta_conc = result
        .rows
        .iter()
        .filter(|r| r.beta == k0 + 1 || r.beta == k0 + 2)
        .count() as f64
        / total;
    let elapsed = start.elapsed();
    println!(
        "  n=50, 2000 trials: P(alpha in {{{},{}}}) = {alpha_conc:.4}, \
         P(beta in {{{},{}}}) = {beta_conc:.4}",
        k0 - 1,
        k0,
        k0 + 1,
        k0 + 2
    );
    for agg in &result.events {
        println!(
            "  {}: empirical {:.4} [{:.4}, {:.4}]  predicted {:.4}",
            agg.event, agg.frequency, agg.wilson_low, agg.wilson_high, agg.predicted
        );
    }
    println!(
        "  tv distance = {:.4}, runtime {elapsed:.2?}",
        result.tv_distance
    );
    let mut failures = Vec::new();
    if alpha_conc < 0.9 {
        failures.push(format!("alpha concentration {alpha_conc:.4} < 0.9"));
    }
    if beta_conc < 0.75 {
        failures.push(format!("beta concentration {beta_conc:.4} < 0.75"));
    }
    if result.tv_distance > 0.25 {
        failures.push(format!(
            "tv distance {:.4} > 0.25 (the independent-Poisson prediction is asymptotic; \
             at n=50 the pairwise correlations are still large)",
            result.tv_distance
        ));
    }
    if elapsed.as_secs_f64() >= 1800.0 {
        failures.push(format!("runtime {elapsed:?} >= 30 min"));
    }
    report(9, failures.is_empty(), &format!("{failures:?}"));
}

/// 10. Determinism: rerunning an experiment with the same config yields
///     byte-identical CSV regardless of worker count.
#[test]
fn acceptance_10_determinism() {
    let base = ExperimentConfig {
        n: 30,
        p: 0.5,
        trials: 300,
        seed: 2024,
        workers: 1,
        solver_budget: DEFAULT_SOLVER_BUDGET,
        threshold: 10.0,
    };
    let csv1 = mc_alpha_beta(&base).unwrap().rows_csv();
    let csv8 = mc_alpha_beta(&ExperimentConfig {
        workers: 8,
        ..base.clone()
    })
    .unwrap()
    .rows_csv();
    let csv3 = mc_alpha_beta(&ExperimentConfig {
        workers: 3,
        ..base.clone()
    })
    .unwrap()
    .rows_csv();
    let rerun = mc_alpha_beta(&base).unwrap().rows_csv();

    let sparse_base = ExperimentConfig {
        n: 64,
        p: 0.02,
        trials: 200,
        seed: 7,
        workers: 1,
        solver_budget: DEFAULT_SOLVER_BUDGET,
        threshold: 10.0,
    };
    let s1 = mc_sparse(&sparse_base).unwrap().rows_csv();
    let s6 = mc_sparse(&ExperimentConfig {
        workers: 6,
        ..sparse_base.clone()
    })
    .unwrap()
    .rows_csv();

    let pass = csv1 == csv8 && csv1 == csv3 && csv1 == rerun && s1 == s6;
    report(
        10,
        pass,
        &format!(
            "mc-alpha-beta CSV identical across workers 1/3/8 and rerun: {}; \
             mc-sparse identical across workers 1/6: {}",
            csv1 == csv8 && csv1 == csv3 && csv1 == rerun,
            s1 == s6
        ),
    );
}
