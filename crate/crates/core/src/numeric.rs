//! Log-space combinatorial numerics.
//!
//! Everything downstream works with base-2 logarithms of hugely scaled
//! quantities like C(n,k) * 2^(-k(k-1)/2), so the primitives here are tuned
//! for absolute accuracy of log2-binomials rather than raw speed.  For a
//! small lower index the binomial is evaluated as a compensated sum of
//! log2 terms, which keeps differences of related values accurate to about
//! 1e-12 even at n = 10^9; the Stirling-series log-gamma route is used only
//! when both indices are large.

use std::f64::consts::LN_2;

/// Compensated (Kahan) accumulator.
#[derive(Clone, Copy, Default)]
pub struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    pub fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// ln Gamma(x) for x > 0 via the Stirling series with argument lifting.
/// Accurate to ~1e-13 relative; only consulted for binomials whose smaller
/// index exceeds the exact-summation cutoff.
pub fn ln_gamma(mut x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma requires a positive argument");
    let mut shift = 0.0f64;
    while x < 12.0 {
        shift -= x.ln();
        x += 1.0;
    }
    // Stirling: (x - 1/2) ln x - x + ln(2 pi)/2 + sum B_2k / (2k(2k-1) x^(2k-1))
    const COEF: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360_360.0,
        1.0 / 156.0,
    ];
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut pow = inv;
    for c in COEF {
        series += c * pow;
        pow *= inv2;
    }
    const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_74;
    (x - 0.5) * x.ln() - x + HALF_LN_TWO_PI + series + shift
}

const EXACT_SUM_CUTOFF: u64 = 2048;

/// log2 C(n, k); returns -inf when k > n.
pub fn log2_binomial(n: u64, k: u64) -> f64 {
    if k > n {
        return f64::NEG_INFINITY;
    }
    let k = k.min(n - k);
    if k == 0 {
        return 0.0;
    }
    if k <= EXACT_SUM_CUTOFF {
        // sum_{j=1..k} log2((n-k+j)/j); term-by-term so that binomials at
        // neighbouring (n,k) share identically computed summands.
        let mut acc = KahanSum::default();
        for j in 1..=k {
            acc.add(((n - k + j) as f64).log2());
            acc.add(-(j as f64).log2());
        }
        acc.value()
    } else {
        (ln_gamma((n + 1) as f64) - ln_gamma((k + 1) as f64) - ln_gamma((n - k + 1) as f64)) / LN_2
    }
}

/// log2(2^m - 1) for m >= 1, computed as m + log2(1 - 2^-m) to full
/// precision even for large m.
pub fn log2_pow2_minus_one(m: u64) -> f64 {
    assert!(m >= 1);
    if m >= 64 {
        // 2^-m below f64 epsilon of the leading term
        return m as f64 + (-(2.0f64).powi(-(m.min(1074) as i32))).ln_1p() / LN_2;
    }
    m as f64 + (-(0.5f64).powi(m as i32)).ln_1p() / LN_2
}

/// log2 of a sum given the log2 of its terms (-inf terms are ignored).
pub fn log2_sum_of_exps(log_terms: &[f64]) -> f64 {
    let m = log_terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let mut acc = KahanSum::default();
    for &t in log_terms {
        if t > f64::NEG_INFINITY {
            acc.add((t - m).exp2());
        }
    }
    m + acc.value().log2()
}

/// Binary entropy H(x) = -x log2 x - (1-x) log2(1-x), with H(0) = H(1) = 0.
pub fn binary_entropy(x: f64) -> f64 {
    assert!((0.0..=1.0).contains(&x), "entropy argument outside [0,1]");
    if x == 0.0 || x == 1.0 {
        return 0.0;
    }
    -(x * x.log2()) - (1.0 - x) * (1.0 - x).log2()
}

/// C(n, 2) as an exact integer.
pub fn choose2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

/// Exact binomial in u128; panics on overflow. Oracle-grade routine for
/// small instances (the product route never overflows for n <= 60).
pub fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    for j in 1..=k {
        num = num
            .checked_mul((n - k + j) as u128)
            .expect("binomial_u128 overflow");
        num /= j as u128;
    }
    num
}
