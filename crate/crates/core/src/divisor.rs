//! Expected counts of m-edge complete bipartite subgraphs in G(n,p) and
//! the empirical tail exponent they certify.
//!
//! A complete bipartite subgraph with class sizes d and m/d has exactly m
//! edges, so the expected number of such subgraphs with smaller class size
//! d, 2 <= d <= sqrt(m), is
//!
//! ```text
//! S(m) = sum_{d | m, 2 <= d <= sqrt(m)}  C(n,d) C(n-d, m/d) p^m
//! ```
//!
//! Writing S(m) <= 2^(-b log2(1/p) m) defines the exponent
//! b(m) = -log2 S(m) / (m log2(1/p)); the scan over the band
//! pn/16 <= m <= pn/4 reports the worst (smallest) b encountered, which is
//! the empirical constant the sparse decomposition argument relies on.

use crate::numeric::{log2_binomial, log2_sum_of_exps};
use crate::problab::ProbLabError;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DivisorTerm {
    pub d: u64,
    pub log2_term: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DivisorSum {
    pub n: u64,
    pub p: f64,
    pub m: u64,
    pub terms: Vec<DivisorTerm>,
    /// log2 S(m); -inf when no divisor lies in [2, sqrt(m)].
    pub log2_sum: f64,
    /// Whether m sits inside the preferred band [pn/16, pn/4].
    pub in_band: bool,
    /// For odd m with an empty sum: log2 of the surrogate upper bound
    /// C(n, (m+1)/2) p^(m+1).
    pub odd_surrogate: Option<f64>,
}

/// Divisors d of m with 2 <= d <= sqrt(m), ascending.
fn small_divisors(m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
        }
        d += 1;
    }
    out
}

/// The sum S(m) in log2 space, term by term.
pub fn divisor_sum(n: u64, p: f64, m: u64) -> Result<DivisorSum, ProbLabError> {
    if !(p > 0.0 && p <= 1.0) {
        return Err(ProbLabError::ArgumentOutOfRange {
            what: "edge probability",
        });
    }
    if m == 0 {
        return Err(ProbLabError::ArgumentOutOfRange {
            what: "edge count m",
        });
    }
    let log2_p = p.log2();
    let pm = m as f64 * log2_p;
    let mut terms = Vec::new();
    for d in small_divisors(m) {
        let other = m / d;
        let log2_term = log2_binomial(n, d) + log2_binomial(n.saturating_sub(d), other) + pm;
        terms.push(DivisorTerm { d, log2_term });
    }
    let log2_sum = log2_sum_of_exps(&terms.iter().map(|t| t.log2_term).collect::<Vec<_>>());
    let band_lo = p * n as f64 / 16.0;
    let band_hi = p * n as f64 / 4.0;
    let in_band = (m as f64) >= band_lo && (m as f64) <= band_hi;
    let odd_surrogate = if terms.is_empty() && m % 2 == 1 {
        Some(log2_binomial(n, m.div_ceil(2)) + (m + 1) as f64 * log2_p)
    } else {
        None
    };
    Ok(DivisorSum {
        n,
        p,
        m,
        terms,
        log2_sum,
        in_band,
        odd_surrogate,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DivisorScanRow {
    pub m: u64,
    pub log2_sum: f64,
    /// b(m) = -log2 S(m) / (m log2(1/p)).
    pub b: f64,
    /// log2(d=2 term) minus log2(largest other term); None when the d=2
    /// term is the only one.
    pub dominance_margin: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DivisorScan {
    pub n: u64,
    pub p: f64,
    pub c_min: f64,
    pub rows: Vec<DivisorScanRow>,
    /// min over the scanned even m of b(m).
    pub b_empirical: f64,
}

impl DivisorScan {
    /// CSV with columns `m,log2_sum,b,dominance_margin` (empty margin when
    /// the d=2 term stands alone).
    pub fn to_csv(&self) -> String {
        let mut s = String::from("m,log2_sum,b,dominance_margin\n");
        for r in &self.rows {
            let dm = r
                .dominance_margin
                .map(|v| v.to_string())
                .unwrap_or_default();
            s.push_str(&format!("{},{},{},{}\n", r.m, r.log2_sum, r.b, dm));
        }
        s
    }
}

pub const DEFAULT_SCAN_C: f64 = 10.0;

/// Scans all even m in [pn/16, pn/4], computing b(m) and the margin by
/// which the d=2 term dominates the rest of each sum.
///
/// Preconditions: p <= 0.1 and np >= c_min * log2(n).
pub fn divisor_scan(n: u64, p: f64, c_min: f64) -> Result<DivisorScan, ProbLabError> {
    if !(p > 0.0 && p <= 0.1) {
        return Err(ProbLabError::PreconditionViolated(format!(
            "p = {p} outside (0, 0.1]"
        )));
    }
    let np = p * n as f64;
    let need = c_min * (n as f64).log2();
    if np < need {
        return Err(ProbLabError::PreconditionViolated(format!(
            "np = {np:.2} below {c_min} * log2(n) = {need:.2}"
        )));
    }
    let m_lo = (np / 16.0).ceil() as u64;
    let m_hi = (np / 4.0).floor() as u64;
    let mut first_even = m_lo + (m_lo % 2);
    if first_even < 4 {
        first_even = 4;
    }
    if first_even > m_hi {
        return Err(ProbLabError::PreconditionViolated(format!(
            "empty even-m band [{m_lo}, {m_hi}]"
        )));
    }
    let log2_inv_p = -(p.log2());
    let mut rows = Vec::new();
    let mut b_empirical = f64::INFINITY;
    let mut m = first_even;
    while m <= m_hi {
        let s = divisor_sum(n, p, m)?;
        debug_assert!(!s.terms.is_empty(), "even m >= 4 always has d = 2");
        let b = -s.log2_sum / (m as f64 * log2_inv_p);
        let d2 = s.terms.iter().find(|t| t.d == 2).map(|t| t.log2_term);
        let best_other = s
            .terms
            .iter()
            .filter(|t| t.d != 2)
            .map(|t| t.log2_term)
            .fold(f64::NEG_INFINITY, f64::max);
        let dominance_margin = match d2 {
            Some(t2) if best_other > f64::NEG_INFINITY => Some(t2 - best_other),
            _ => None,
        };
        b_empirical = b_empirical.min(b);
        rows.push(DivisorScanRow {
            m,
            log2_sum: s.log2_sum,
            b,
            dominance_margin,
        });
        m += 2;
    }
    Ok(DivisorScan {
        n,
        p,
        c_min,
        rows,
        b_empirical,
    })
}
