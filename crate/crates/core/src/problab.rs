//! Expected-count formulas for G(n, 1/2) in base-2 log space.
//!
//! For a graph drawn as G(n, 1/2):
//!   f(k) = C(n,k) 2^(-C(k,2))              expected number of independent
//!                                          k-sets,
//!   g(k) = C(n,k+2) (2^(k+1)-1) 2^(-C(k+2,2))
//!                                          expected number of (k+2)-sets
//!                                          inducing a complete bipartite
//!                                          subgraph,
//!   k0(n) = largest k with f(k) >= 1.
//!
//! The second-moment contributions from pairs of sets meeting in i vertices
//! are
//!   f_i = C(n,k) C(k,i) C(n-k,k-i) 2^(-2C(k,2)+C(i,2))          (set/set)
//!   g_i = C(n,k+2)(2^(k+1)-1) 2^(-C(k+2,2)) C(k+2,i)
//!         C(n-k-2,k+2-i) 2^(k+2-i) 2^(-C(k+2,2)+C(i,2))         (pair/pair)
//!   h_i = C(n,k) C(k,i) C(n-k,k+2-i) (2^(k+2-i)-1)
//!         2^(-C(k,2)-C(k+2,2)+C(i,2))                           (cross)
//! and the margin tables compare them against the reference envelopes
//! f(k)^2 n^(-0.3 i) / f(k) n^(-0.3 j) (and the analogous g forms) that the
//! second-moment and Poisson-approximation arguments rely on.  Margins are
//! reported signed: a nonpositive margin means the envelope holds at this
//! finite n.

use crate::numeric::{binary_entropy, choose2, log2_binomial, log2_pow2_minus_one};
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum ProbLabError {
    KOutOfRange { n: u64, k: u64 },
    IndexOutOfRange { i: u64, lo: u64, hi: u64 },
    NegativeRate { value: f64 },
    ArgumentOutOfRange { what: &'static str },
    K0TooSmall { n: u64, k0: u64, need: u64 },
    PreconditionViolated(String),
}

impl fmt::Display for ProbLabError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProbLabError::KOutOfRange { n, k } => write!(f, "k={k} out of range for n={n}"),
            ProbLabError::IndexOutOfRange { i, lo, hi } => {
                write!(f, "index i={i} outside [{lo}, {hi}]")
            }
            ProbLabError::NegativeRate { value } => {
                write!(f, "rate must be nonnegative, got {value}")
            }
            ProbLabError::ArgumentOutOfRange { what } => write!(f, "{what} out of range"),
            ProbLabError::K0TooSmall { n, k0, need } => {
                write!(f, "k0({n}) = {k0} is below the required minimum {need}")
            }
            ProbLabError::PreconditionViolated(s) => write!(f, "precondition violated: {s}"),
        }
    }
}

impl std::error::Error for ProbLabError {}

/// log2 f(k) = log2 C(n,k) - C(k,2).
pub fn log2_f(n: u64, k: u64) -> Result<f64, ProbLabError> {
    if k > n {
        return Err(ProbLabError::KOutOfRange { n, k });
    }
    Ok(log2_binomial(n, k) - choose2(k) as f64)
}

/// log2 g(k) = log2 C(n,k+2) + log2(2^(k+1)-1) - C(k+2,2).
pub fn log2_g(n: u64, k: u64) -> Result<f64, ProbLabError> {
    if k + 2 > n {
        return Err(ProbLabError::KOutOfRange { n, k });
    }
    Ok(log2_binomial(n, k + 2) + log2_pow2_minus_one(k + 1) - choose2(k + 2) as f64)
}

/// Largest k with f(k) >= 1.  f is unimodal in k and f(1) = n, so the
/// region { f >= 1 } is an interval starting at 1; we scan off its end.
pub fn k0_of_n(n: u64) -> u64 {
    assert!(n >= 2, "k0 needs n >= 2");
    let mut k = 1u64;
    while k < n && log2_f(n, k + 1).unwrap() >= 0.0 {
        k += 1;
    }
    k
}

/// Joint limiting probabilities of the four events on X = #independent
/// k-sets and Y = #induced complete bipartite (k+2)-sets, under the
/// independent-Poisson prediction with E X = lambda, E Y = mu.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EventProbs {
    pub p11: f64,
    pub p10: f64,
    pub p01: f64,
    pub p00: f64,
}

impl EventProbs {
    pub fn sum(&self) -> f64 {
        self.p11 + self.p10 + self.p01 + self.p00
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.p11, self.p10, self.p01, self.p00]
    }
}

/// p00 = e^(-l-m), p10 = e^(-m) - e^(-l-m), p01 = e^(-l) - e^(-l-m),
/// p11 = 1 - e^(-l) - e^(-m) + e^(-l-m).
pub fn event_probabilities(lambda: f64, mu: f64) -> Result<EventProbs, ProbLabError> {
    if lambda < 0.0 || !lambda.is_finite() {
        return Err(ProbLabError::NegativeRate { value: lambda });
    }
    if mu < 0.0 || !mu.is_finite() {
        return Err(ProbLabError::NegativeRate { value: mu });
    }
    let el = (-lambda).exp();
    let em = (-mu).exp();
    let elm = (-lambda - mu).exp();
    Ok(EventProbs {
        p11: (1.0 - el - em + elm).max(0.0),
        p10: (em - elm).max(0.0),
        p01: (el - elm).max(0.0),
        p00: elm,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Regime {
    I,
    II,
    III,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regime::I => write!(f, "I"),
            Regime::II => write!(f, "II"),
            Regime::III => write!(f, "III"),
        }
    }
}

/// Snapshot of where a given n sits in the f(k0) / f(k0+1) trichotomy:
/// regime II when f(k0) <= T, regime III when f(k0+1) >= 1/T, regime I
/// otherwise.  lambda and mu are f and g evaluated at k0 (regimes I, II)
/// or k0 + 1 (regime III); `k_event` records which k that was.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegimeReport {
    pub n: u64,
    pub k0: u64,
    pub log2_f_k0: f64,
    pub log2_f_k0_plus_1: f64,
    pub regime: Regime,
    pub threshold: f64,
    pub k_event: u64,
    pub lambda: f64,
    pub mu: f64,
    pub event_probs: EventProbs,
}

impl RegimeReport {
    /// Single-row CSV (with header) of the report.
    pub fn to_csv(&self) -> String {
        let mut s = String::from(
            "n,k0,log2_f_k0,log2_f_k0_plus_1,regime,threshold,k_event,lambda,mu,p11,p10,p01,p00\n",
        );
        s.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            self.n,
            self.k0,
            self.log2_f_k0,
            self.log2_f_k0_plus_1,
            self.regime,
            self.threshold,
            self.k_event,
            self.lambda,
            self.mu,
            self.event_probs.p11,
            self.event_probs.p10,
            self.event_probs.p01,
            self.event_probs.p00,
        ));
        s
    }
}

pub const DEFAULT_REGIME_THRESHOLD: f64 = 10.0;

pub fn regime_classify(n: u64, threshold: f64) -> RegimeReport {
    assert!(n >= 2, "regime classification needs n >= 2");
    assert!(threshold > 1.0, "threshold must exceed 1");
    let k0 = k0_of_n(n);
    let lf0 = log2_f(n, k0).unwrap();
    let lf1 = if k0 < n {
        log2_f(n, k0 + 1).unwrap()
    } else {
        f64::NEG_INFINITY
    };
    let f0 = lf0.exp2();
    let f1 = lf1.exp2();
    let (regime, k_event) = if f0 <= threshold {
        (Regime::II, k0)
    } else if f1 >= 1.0 / threshold {
        (Regime::III, k0 + 1)
    } else {
        (Regime::I, k0)
    };
    let lambda = log2_f(n, k_event).unwrap().exp2();
    let mu = match log2_g(n, k_event) {
        Ok(lg) => lg.exp2(),
        Err(_) => 0.0, // k_event + 2 > n: no (k+2)-sets exist at all
    };
    let event_probs = event_probabilities(lambda, mu).unwrap();
    RegimeReport {
        n,
        k0,
        log2_f_k0: lf0,
        log2_f_k0_plus_1: lf1,
        regime,
        threshold,
        k_event,
        lambda,
        mu,
        event_probs,
    }
}

/// log2 f_i for 2 <= i <= k-1.
pub fn moment_term_f(n: u64, k: u64, i: u64) -> Result<f64, ProbLabError> {
    if k > n {
        return Err(ProbLabError::KOutOfRange { n, k });
    }
    if i < 2 || i + 1 > k {
        return Err(ProbLabError::IndexOutOfRange {
            i,
            lo: 2,
            hi: k.saturating_sub(1),
        });
    }
    Ok(log2_binomial(n, k)
        + log2_binomial(k, i)
        + log2_binomial(n - k, k - i)
        + (choose2(i) as f64 - 2.0 * choose2(k) as f64))
}

/// log2 g_i for 2 <= i <= k+1.
pub fn moment_term_g(n: u64, k: u64, i: u64) -> Result<f64, ProbLabError> {
    if k + 2 > n {
        return Err(ProbLabError::KOutOfRange { n, k });
    }
    if i < 2 || i > k + 1 {
        return Err(ProbLabError::IndexOutOfRange {
            i,
            lo: 2,
            hi: k + 1,
        });
    }
    Ok(log2_binomial(n, k + 2)
        + log2_pow2_minus_one(k + 1)
        + log2_binomial(k + 2, i)
        + log2_binomial(n - k - 2, k + 2 - i)
        + (k + 2 - i) as f64
        + (choose2(i) as f64 - 2.0 * choose2(k + 2) as f64))
}

/// log2 h_i for 2 <= i <= k.
pub fn moment_term_h(n: u64, k: u64, i: u64) -> Result<f64, ProbLabError> {
    if k + 2 > n {
        return Err(ProbLabError::KOutOfRange { n, k });
    }
    if i < 2 || i > k {
        return Err(ProbLabError::IndexOutOfRange { i, lo: 2, hi: k });
    }
    Ok(log2_binomial(n, k)
        + log2_binomial(k, i)
        + log2_binomial(n - k, k + 2 - i)
        + log2_pow2_minus_one(k + 2 - i)
        + (choose2(i) as f64 - choose2(k) as f64 - choose2(k + 2) as f64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MomentFamily {
    F,
    G,
    H,
}

impl fmt::Display for MomentFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MomentFamily::F => write!(f, "f"),
            MomentFamily::G => write!(f, "g"),
            MomentFamily::H => write!(f, "h"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MomentRow {
    /// 1 for the small-intersection range, 2 for the near-total range.
    pub case: u8,
    pub i: u64,
    pub log2_term: f64,
    pub log2_bound: f64,
    pub margin: f64,
}

/// Margin table for one family at k = k0(n).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentTable {
    pub family: MomentFamily,
    pub n: u64,
    pub k: u64,
    pub rows: Vec<MomentRow>,
}

impl MomentTable {
    pub fn max_margin(&self) -> f64 {
        self.rows
            .iter()
            .map(|r| r.margin)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// CSV with the stable column set `i,log2_term,log2_bound,margin`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,log2_term,log2_bound,margin\n");
        for r in &self.rows {
            s.push_str(&format!(
                "{},{},{},{}\n",
                r.i, r.log2_term, r.log2_bound, r.margin
            ));
        }
        s
    }
}

const MIN_K0_FOR_MARGINS: u64 = 9;

fn k0_at_least(n: u64, need: u64) -> Result<u64, ProbLabError> {
    let k0 = k0_of_n(n);
    if k0 < need {
        return Err(ProbLabError::K0TooSmall { n, k0, need });
    }
    Ok(k0)
}

/// f_i margins at k = k0(n): case 1 covers 2 <= i <= 2k/3 against
/// f(k)^2 n^(-0.3 i); case 2 covers i = k - j, 1 <= j <= k/3, against
/// f(k) n^(-0.3 j).
pub fn f_moment_margins(n: u64) -> Result<MomentTable, ProbLabError> {
    let k = k0_at_least(n, MIN_K0_FOR_MARGINS)?;
    let lf = log2_f(n, k)?;
    let log2n = (n as f64).log2();
    let mut rows = Vec::new();
    for i in 2..=(2 * k / 3) {
        let term = moment_term_f(n, k, i)?;
        let bound = 2.0 * lf - 0.3 * i as f64 * log2n;
        rows.push(MomentRow {
            case: 1,
            i,
            log2_term: term,
            log2_bound: bound,
            margin: term - bound,
        });
    }
    for j in 1..=(k / 3) {
        let i = k - j;
        let term = moment_term_f(n, k, i)?;
        let bound = lf - 0.3 * j as f64 * log2n;
        rows.push(MomentRow {
            case: 2,
            i,
            log2_term: term,
            log2_bound: bound,
            margin: term - bound,
        });
    }
    Ok(MomentTable {
        family: MomentFamily::F,
        n,
        k,
        rows,
    })
}

/// g_i margins at k = k0(n): case 1 covers 2 <= i <= 2k/3 + 2 against
/// g(k)^2 n^(-0.3 i); case 2 covers i = k + 2 - j, 1 <= j <= k/3, against
/// g(k) n^(-0.3 j).
pub fn g_moment_margins(n: u64) -> Result<MomentTable, ProbLabError> {
    let k = k0_at_least(n, MIN_K0_FOR_MARGINS)?;
    let lg = log2_g(n, k)?;
    let log2n = (n as f64).log2();
    let mut rows = Vec::new();
    for i in 2..=(2 * k / 3 + 2) {
        let term = moment_term_g(n, k, i)?;
        let bound = 2.0 * lg - 0.3 * i as f64 * log2n;
        rows.push(MomentRow {
            case: 1,
            i,
            log2_term: term,
            log2_bound: bound,
            margin: term - bound,
        });
    }
    for j in 1..=(k / 3) {
        let i = k + 2 - j;
        let term = moment_term_g(n, k, i)?;
        let bound = lg - 0.3 * j as f64 * log2n;
        rows.push(MomentRow {
            case: 2,
            i,
            log2_term: term,
            log2_bound: bound,
            margin: term - bound,
        });
    }
    Ok(MomentTable {
        family: MomentFamily::G,
        n,
        k,
        rows,
    })
}

/// h_i margins at k = k0(n): case 1 covers 2 <= i <= 2k/3 against
/// f(k)^2 n^(-0.3 i); case 2 covers i = k - j, 0 <= j <= k/3, against
/// f(k) n^(-0.3 (j+2)).
pub fn h_moment_margins(n: u64) -> Result<MomentTable, ProbLabError> {
    let k = k0_at_least(n, MIN_K0_FOR_MARGINS)?;
    let lf = log2_f(n, k)?;
    let log2n = (n as f64).log2();
    let mut rows = Vec::new();
    for i in 2..=(2 * k / 3) {
        let term = moment_term_h(n, k, i)?;
        let bound = 2.0 * lf - 0.3 * i as f64 * log2n;
        rows.push(MomentRow {
            case: 1,
            i,
            log2_term: term,
            log2_bound: bound,
            margin: term - bound,
        });
    }
    for j in 0..=(k / 3) {
        let i = k - j;
        let term = moment_term_h(n, k, i)?;
        let bound = lf - 0.3 * (j + 2) as f64 * log2n;
        rows.push(MomentRow {
            case: 2,
            i,
            log2_term: term,
            log2_bound: bound,
            margin: term - bound,
        });
    }
    Ok(MomentTable {
        family: MomentFamily::H,
        n,
        k,
        rows,
    })
}

/// Binary entropy with domain checking; see `numeric::binary_entropy`.
pub fn entropy(x: f64) -> Result<f64, ProbLabError> {
    if !(0.0..=1.0).contains(&x) {
        return Err(ProbLabError::ArgumentOutOfRange {
            what: "entropy argument",
        });
    }
    Ok(binary_entropy(x))
}
