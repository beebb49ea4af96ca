//! Growth diagnostics for recurrence-generated sequences.
//!
//! For `x_{n+2} x_n = x_{n+1}^d1 G(x_{n+1})` with `G(x) = c x^d2 + ...`, the
//! logarithms `L_n = log x_n` satisfy the linear recurrence
//! `L_{n+1} - (d1 + d2) L_n + L_{n-1} = log c + alpha_n` with
//! `alpha_n = log(G(x_n) / (c x_n^d2))`. Its dominant root `lambda` is the
//! larger root of `t^2 - (d1 + d2) t + 1`, and with `x_0 = x_1 = 1`
//!
//! ```text
//! L_n = (A_n - 1) log(c) / (d1 + d2 - 2) + sum_{k=1}^{n-1} w_{n-k} alpha_k,
//! A_n = ((1 - 1/lambda) lambda^n - (1 - lambda) lambda^-n) / (lambda - 1/lambda),
//! w_m = (lambda^m - lambda^-m) / (lambda - 1/lambda).
//! ```
//!
//! Hence `L_n ~ C lambda^n` with
//! `C = (1 - 1/lambda) log(c) / ((d1 + d2 - 2)(lambda - 1/lambda)) + sum_k lambda^-k alpha_k / (lambda - 1/lambda)`.
//!
//! All real arithmetic is MPFR at a per-call precision given in decimal digits.

use std::cmp::Ordering;

use rug::float::{Constant, Round};
use rug::ops::{DivAssignRound, Pow, SubAssignRound};
use rug::{Float, Integer};

use crate::budget::BitBudget;
use crate::error::{Error, Result};
use crate::expansion::SeriesSource;
use crate::sequence::{self, RecurrenceSpec};

/// Default working precision, in decimal digits.
pub const DEFAULT_DIGITS: u32 = 50;

/// Relative size of the next omitted term at which the series for `C` stops.
pub const C_TRUNCATION: f64 = 1e-15;

/// Binary precision for `digits` decimal digits plus guard bits.
pub fn precision_bits(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + 32
}

/// Natural log of a positive integer, correctly rounded at `prec` bits.
///
/// The integer is first rounded to `prec` bits, which perturbs the log by at
/// most `2^(1-prec)` in absolute terms however large the integer is.
pub fn log_integer(x: &Integer, prec: u32) -> Float {
    Float::with_val(prec, x).ln()
}

fn log_integer_round(x: &Integer, prec: u32, round: Round) -> Float {
    let (mut f, _) = Float::with_val_round(prec, x, round);
    f.ln_round(round);
    f
}

/// Larger root of `t^2 - (d1 + d2) t + 1`.
pub fn dominant_root(d1: u32, d2: u32, digits: u32) -> Result<Float> {
    let s = d1 + d2;
    if s <= 2 {
        return Err(Error::DegenerateRoot { sum: s });
    }
    let prec = precision_bits(digits);
    let s = Float::with_val(prec, s);
    let disc = Float::with_val(prec, s.square_ref()) - 4u32;
    Ok((s + disc.sqrt()) / 2u32)
}

fn second_order_parts(spec: &RecurrenceSpec) -> Result<(u32, &[Integer], u32, &Integer)> {
    match spec {
        RecurrenceSpec::Second { d1, g } => {
            let (d2, c) = spec.leading().expect("second order");
            Ok((*d1, g.as_slice(), d2, c))
        }
        RecurrenceSpec::Third { .. } => Err(Error::InvalidSpec("this diagnostic needs a second order spec".into())),
    }
}

/// `t = (G(x) - c x^d2) / (c x^d2)`, evaluated as `sum_{i<d2} (g_i / c) x^(i-d2)`
/// so that huge `x` never overflows.
fn alpha_excess(g: &[Integer], d2: u32, c: &Integer, x: &Integer, prec: u32) -> Float {
    let inv = Float::with_val(prec, x).recip();
    let c = Float::with_val(prec, c);
    let mut t = Float::with_val(prec, 0);
    for (i, gi) in g.iter().enumerate().take(d2 as usize) {
        if *gi == 0 {
            continue;
        }
        let term = Float::with_val(prec, gi) / &c * Float::with_val(prec, Pow::pow(&inv, d2 - i as u32));
        t += term;
    }
    t
}

/// `alpha = log(G(x) / (c x^d2))`.
pub fn alpha(spec: &RecurrenceSpec, x: &Integer, digits: u32) -> Result<Float> {
    let (_, g, d2, c) = second_order_parts(spec)?;
    Ok(alpha_excess(g, d2, c, x, precision_bits(digits)).ln_1p())
}

/// `L_n` from the closed form next to `log x_n` computed directly.
#[derive(Debug, Clone)]
pub struct LogReconstruction {
    pub n: usize,
    pub exact: Float,
    pub truth: Float,
}

impl LogReconstruction {
    /// `|exact - truth| / max(1, truth)`.
    pub fn relative_error(&self) -> Float {
        let diff = Float::with_val(self.exact.prec(), &self.exact - &self.truth).abs();
        let scale = if self.truth > 1 {
            self.truth.clone()
        } else {
            Float::with_val(self.truth.prec(), 1)
        };
        diff / scale
    }
}

/// Shared constants of one spec at one precision.
struct RootData {
    lambda: Float,
    lambda_inv: Float,
    /// `lambda - 1/lambda`
    spread: Float,
    /// `log(c) / (d1 + d2 - 2)`
    log_c_scaled: Float,
}

impl RootData {
    fn new(spec: &RecurrenceSpec, digits: u32) -> Result<Self> {
        let (d1, _, d2, c) = second_order_parts(spec)?;
        let lambda = dominant_root(d1, d2, digits)?;
        let prec = lambda.prec();
        let lambda_inv = Float::with_val(prec, lambda.recip_ref());
        let spread = Float::with_val(prec, &lambda - &lambda_inv);
        let log_c_scaled = log_integer(c, prec) / (d1 + d2 - 2);
        Ok(RootData {
            lambda,
            lambda_inv,
            spread,
            log_c_scaled,
        })
    }

    fn prec(&self) -> u32 {
        self.lambda.prec()
    }

    fn lambda_pow(&self, m: i64) -> Float {
        let prec = self.prec();
        if m >= 0 {
            Float::with_val(prec, Pow::pow(&self.lambda, m as u32))
        } else {
            Float::with_val(prec, Pow::pow(&self.lambda_inv, (-m) as u32))
        }
    }

    /// `w_m = (lambda^m - lambda^-m) / (lambda - 1/lambda)`
    fn weight(&self, m: i64) -> Float {
        (self.lambda_pow(m) - self.lambda_pow(-m)) / &self.spread
    }

    /// `A_n - 1`
    fn homogeneous(&self, n: i64) -> Float {
        let prec = self.prec();
        let one_minus_inv = Float::with_val(prec, 1) - &self.lambda_inv;
        let one_minus_lambda = Float::with_val(prec, 1) - &self.lambda;
        let a = (one_minus_inv * self.lambda_pow(n) - one_minus_lambda * self.lambda_pow(-n)) / &self.spread;
        a - 1u32
    }
}

/// Closed-form reconstruction of `log x_n` for `n = 0..=n_max` (recurrence
/// numbering, `x_0 = x_1 = 1`).
pub fn reconstruct_log_terms(
    spec: &RecurrenceSpec,
    n_max: usize,
    digits: u32,
    budget: &BitBudget,
) -> Result<Vec<LogReconstruction>> {
    let root = RootData::new(spec, digits)?;
    let prec = root.prec();
    let x = sequence::generate_recurrence(spec, n_max + 1, budget)?;
    let (_, g, d2, c) = second_order_parts(spec)?;
    let alphas: Vec<Float> = x.iter().map(|xk| alpha_excess(g, d2, c, xk, prec).ln_1p()).collect();
    let mut out = Vec::with_capacity(n_max + 1);
    for (n, xn) in x.iter().enumerate() {
        let mut exact = root.homogeneous(n as i64) * &root.log_c_scaled;
        for (k, alpha_k) in alphas.iter().enumerate().take(n).skip(1) {
            exact += root.weight((n - k) as i64) * alpha_k;
        }
        out.push(LogReconstruction {
            n,
            exact,
            truth: log_integer(xn, prec),
        });
    }
    Ok(out)
}

/// `log x_n` by the closed form and directly, for a single `n`.
pub fn reconstruct_lambda_n(
    spec: &RecurrenceSpec,
    n: usize,
    digits: u32,
    budget: &BitBudget,
) -> Result<LogReconstruction> {
    Ok(reconstruct_log_terms(spec, n, digits, budget)?
        .pop()
        .expect("n_max + 1 rows"))
}

/// A constant with a rigorous (or, where noted, empirical) error bound.
#[derive(Debug, Clone)]
pub struct ConstantEstimate {
    pub value: Float,
    pub error_bound: Float,
    /// Values after each successive truncation, last equal to `value`.
    pub partials: Vec<Float>,
    /// Error bound attached to each entry of `partials`.
    pub bounds: Vec<Float>,
}

/// Growth constant `C` of a second order spec, `log x_n ~ C lambda^n`.
///
/// Series terms `lambda^-k alpha_k / (lambda - 1/lambda)` are summed until the
/// bound on everything after term `k`, `2 lambda^-(k+1) t_{k+1} / (lambda - 1/lambda)`
/// with `t = G(x)/(c x^d2) - 1 >= alpha`, falls below `1e-15 |C|`. The bound
/// holds because `t` at least halves from one term to the next once `x >= 2`.
pub fn estimate_c(spec: &RecurrenceSpec, digits: u32, budget: &BitBudget) -> Result<ConstantEstimate> {
    let root = RootData::new(spec, digits)?;
    let prec = root.prec();
    let (_, g, d2, c) = second_order_parts(spec)?;
    let one_minus_inv = Float::with_val(prec, 1) - &root.lambda_inv;
    let mut value = one_minus_inv / &root.spread * &root.log_c_scaled;
    let mut partials = Vec::new();
    let mut bounds = Vec::new();
    let mut x = sequence::generate_recurrence(spec, 3, budget)?;
    for k in 1.. {
        if x.len() < k + 2 {
            x = sequence::generate_recurrence(spec, k + 2, budget)?;
        }
        let alpha_k = alpha_excess(g, d2, c, &x[k], prec).ln_1p();
        value += root.lambda_pow(-(k as i64)) * alpha_k / &root.spread;
        let t_next = alpha_excess(g, d2, c, &x[k + 1], prec);
        let bound = root.lambda_pow(-(k as i64 + 1)) * t_next * 2u32 / &root.spread;
        partials.push(value.clone());
        bounds.push(bound.clone());
        let tol = Float::with_val(prec, value.abs_ref()) * C_TRUNCATION;
        if bound <= tol {
            break;
        }
    }
    Ok(ConstantEstimate {
        error_bound: bounds.last().cloned().expect("at least one term"),
        value,
        partials,
        bounds,
    })
}

/// Empirical growth constant from a generated sequence: the stride-two
/// difference `(log X_{n+2} - log X_n) / (lambda^{n+2} - lambda^n)`, which
/// cancels both the constant and the alternating term in
/// `log X_n = C lambda^n + K + D (-1)^n + o(1)`. The alternating term comes
/// from the root `-1` of the third order characteristic polynomial.
///
/// Terms are generated until the next would exceed `max_term_bits`; the error
/// bound is the change between the last two estimates (empirical).
pub fn empirical_constant(
    spec: &RecurrenceSpec,
    lambda: &Float,
    max_term_bits: u64,
    digits: u32,
    budget: &BitBudget,
) -> Result<ConstantEstimate> {
    let prec = precision_bits(digits);
    let capped = BitBudget {
        max_term_bits: max_term_bits.min(budget.max_term_bits),
        max_total_bits: budget.max_total_bits,
    };
    let mut x = vec![];
    for n in 4.. {
        match sequence::generate_recurrence(spec, n, &capped) {
            Ok(v) => x = v,
            Err(Error::BitBudgetExceeded { .. }) if x.len() >= 7 => break,
            Err(e) => return Err(e),
        }
        if n > 200 {
            break;
        }
    }
    let logs: Vec<Float> = x.iter().map(|v| log_integer(v, prec)).collect();
    let lambda = Float::with_val(prec, lambda);
    let mut partials = Vec::new();
    let mut bounds = Vec::new();
    // skip the leading ones, where the asymptotic form says nothing
    let start = x.iter().take_while(|v| **v == 1).count();
    for n in start..logs.len() - 2 {
        let ln = Float::with_val(prec, Pow::pow(&lambda, n as u32));
        let ln2 = Float::with_val(prec, Pow::pow(&lambda, n as u32 + 2));
        let est = Float::with_val(prec, &logs[n + 2] - &logs[n]) / (ln2 - ln);
        let bound = match partials.last() {
            Some(prev) => Float::with_val(prec, &est - prev).abs(),
            None => Float::with_val(prec, est.abs_ref()),
        };
        partials.push(est);
        bounds.push(bound);
    }
    Ok(ConstantEstimate {
        value: partials.last().cloned().expect("sequence has at least six terms"),
        error_bound: bounds.last().cloned().expect("sequence has at least six terms"),
        partials,
        bounds,
    })
}

/// `log x_n / lambda^n` for every term of a generated sequence.
pub fn log_ratios(x: &[Integer], lambda: &Float, digits: u32) -> Vec<Float> {
    let prec = precision_bits(digits);
    x.iter()
        .enumerate()
        .map(|(n, v)| log_integer(v, prec) / Float::with_val(prec, Pow::pow(lambda, n as u32)))
        .collect()
}

/// `log x_n + log(c)/(d1 + d2 - 2) - C lambda^n`, which tends to 0 when
/// `x_n ~ c^(-1/(d1+d2-2)) exp(C lambda^n)`.
pub fn prefactor_residuals(
    spec: &RecurrenceSpec,
    c_value: &Float,
    n_max: usize,
    digits: u32,
    budget: &BitBudget,
) -> Result<Vec<Float>> {
    let root = RootData::new(spec, digits)?;
    let prec = root.prec();
    let x = sequence::generate_recurrence(spec, n_max + 1, budget)?;
    Ok(x.iter()
        .enumerate()
        .map(|(n, v)| {
            log_integer(v, prec) + &root.log_c_scaled - Float::with_val(prec, c_value * root.lambda_pow(n as i64))
        })
        .collect())
}

/// One row of a growth report: `log x_{n+1} / log x_n`.
#[derive(Debug, Clone)]
pub struct GrowthRow {
    pub n: usize,
    pub exponent: Float,
    /// `x_{n+1} > x_n^(lambda - epsilon)`
    pub holds: bool,
}

#[derive(Debug, Clone)]
pub struct GrowthReport {
    pub rows: Vec<GrowthRow>,
    pub target: Float,
    pub epsilon: f64,
    /// Smallest `n` from which the growth condition holds for every computed
    /// row; `None` if it fails at the last row.
    pub threshold: Option<usize>,
}

impl GrowthReport {
    pub fn holds_eventually(&self) -> bool {
        self.threshold.is_some()
    }
}

/// Growth exponents of a sequence against `x_{n+1} > x_n^(lambda - epsilon)`.
///
/// Indices are 1-based positions in `x`. Rows start at the first term above 1.
pub fn growth_report(x: &[Integer], lambda: &Float, epsilon: f64, digits: u32) -> Result<GrowthReport> {
    if x.iter().filter(|v| **v > 1).count() < 4 {
        return Err(Error::InvalidSequence(
            "growth report needs at least four terms above 1".into(),
        ));
    }
    let prec = precision_bits(digits);
    let target = Float::with_val(prec, lambda) - epsilon;
    let logs: Vec<Float> = x.iter().map(|v| log_integer(v, prec)).collect();
    let mut rows = Vec::new();
    for i in 0..x.len() - 1 {
        if x[i] <= 1 {
            continue;
        }
        let exponent = Float::with_val(prec, &logs[i + 1] / &logs[i]);
        let holds = logs[i + 1] > Float::with_val(prec, &target * &logs[i]);
        rows.push(GrowthRow {
            n: i + 1,
            exponent,
            holds,
        });
    }
    let threshold = match rows.iter().rposition(|r| !r.holds) {
        None => rows.first().map(|r| r.n),
        Some(i) if i + 1 < rows.len() => Some(rows[i + 1].n),
        Some(_) => None,
    };
    Ok(GrowthReport {
        rows,
        target,
        epsilon,
        threshold,
    })
}

/// Bracket on `-log|S - p/q| / log q` at `p/q = S_n`, `q = x_n`.
#[derive(Debug, Clone)]
pub struct RothRecord {
    pub n: usize,
    pub q_bits: u64,
    /// From `|S - S_n| < 2 / x_{n+1}`, rounded down.
    pub lower: Float,
    /// From `|S - S_n| > 1 / x_{n+1}`, rounded up.
    pub upper: Float,
}

impl RothRecord {
    pub fn straddles(&self, value: f64) -> bool {
        self.lower <= value && self.upper >= value
    }
}

#[derive(Debug, Clone)]
pub struct RothReport {
    pub records: Vec<RothRecord>,
}

impl RothReport {
    /// Smallest lower bracket minus 2 over records with index at least `from`:
    /// the margin `delta` certified for those approximations.
    pub fn delta_from(&self, from: usize) -> Option<Float> {
        self.records
            .iter()
            .filter(|r| r.n >= from)
            .map(|r| Float::with_val(r.lower.prec(), &r.lower - 2u32))
            .min_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal))
    }
}

/// Rigorous brackets for the effective irrationality exponent at the first
/// `depth` partial sums with denominator above 1 (`n = 2..=depth + 1`).
pub fn roth_exponents(source: &SeriesSource, depth: usize, digits: u32, budget: &BitBudget) -> Result<RothReport> {
    let prec = precision_bits(digits);
    let x = source.engel_terms(depth + 2, budget)?;
    let log2_up = Float::with_val_round(prec, Constant::Log2, Round::Up).0;
    let mut records = Vec::with_capacity(depth);
    for n in 2..=depth + 1 {
        if n + 1 > x.len() {
            break;
        }
        let s = sequence::partial_sum_fast(&x, n);
        if *s.denom() != x[n - 1] {
            return Err(Error::IdentityViolation {
                identity: "denominator of S_n is x_n",
                n,
            });
        }
        let log_q_down = log_integer_round(&x[n - 1], prec, Round::Down);
        let log_q_up = log_integer_round(&x[n - 1], prec, Round::Up);
        let mut lower = log_integer_round(&x[n], prec, Round::Down);
        lower.sub_assign_round(&log2_up, Round::Down);
        lower.div_assign_round(&log_q_up, Round::Down);
        let mut upper = log_integer_round(&x[n], prec, Round::Up);
        upper.div_assign_round(&log_q_down, Round::Up);
        records.push(RothRecord {
            n,
            q_bits: x[n - 1].significant_bits().into(),
            lower,
            upper,
        });
    }
    Ok(RothReport { records })
}

/// Row of an [`AsymptoticsReport`], in recurrence numbering.
#[derive(Debug, Clone)]
pub struct AsymptoticsRow {
    pub n: usize,
    pub log_x: Float,
    pub exact: Float,
    pub growth_exponent: Option<Float>,
    pub roth: Option<(Float, Float)>,
}

/// Everything the diagnostics say about one second order spec.
#[derive(Debug, Clone)]
pub struct AsymptoticsReport {
    pub lambda: Float,
    pub c_lead: Integer,
    /// `alpha_1..alpha_{n_max}`
    pub alpha: Vec<Float>,
    pub c_estimate: ConstantEstimate,
    pub rows: Vec<AsymptoticsRow>,
    pub epsilon: f64,
    pub growth: GrowthReport,
}

/// Builds the full report for rows `n = 1..=n_max`.
pub fn asymptotics_report(
    spec: &RecurrenceSpec,
    n_max: usize,
    epsilon: f64,
    digits: u32,
    budget: &BitBudget,
) -> Result<AsymptoticsReport> {
    let (d1, _, d2, c) = second_order_parts(spec)?;
    let lambda = dominant_root(d1, d2, digits)?;
    let n_max = n_max.max(4);
    let recon = reconstruct_log_terms(spec, n_max + 1, digits, budget)?;
    let x = sequence::generate_recurrence(spec, n_max + 2, budget)?;
    let alpha = x[1..=n_max]
        .iter()
        .map(|v| alpha(spec, v, digits))
        .collect::<Result<Vec<_>>>()?;
    let c_estimate = estimate_c(spec, digits, budget)?;
    let engel = &x[1..];
    let growth = growth_report(engel, &lambda, epsilon, digits)?;
    let roth = roth_exponents(&SeriesSource::Recurrence(spec.clone()), n_max, digits, budget)?;
    let rows = (1..=n_max)
        .map(|n| {
            let growth_exponent = growth.rows.iter().find(|r| r.n == n).map(|r| r.exponent.clone());
            let roth = roth
                .records
                .iter()
                .find(|r| r.n == n)
                .map(|r| (r.lower.clone(), r.upper.clone()));
            AsymptoticsRow {
                n,
                log_x: recon[n].truth.clone(),
                exact: recon[n].exact.clone(),
                growth_exponent,
                roth,
            }
        })
        .collect();
    Ok(AsymptoticsReport {
        lambda,
        c_lead: c.clone(),
        alpha,
        c_estimate,
        rows,
        epsilon,
        growth,
    })
}

/// Plain decimal rendering with `digits` significant digits; scientific
/// notation only for very large or very small magnitudes.
pub fn decimal_string(f: &Float, digits: usize) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let s = f.to_string_radix(10, Some(digits.max(1)));
    let (mantissa, exp) = match s.split_once('e') {
        Some((m, e)) => (m.to_string(), e.parse::<i64>().unwrap_or(0)),
        None => (s.clone(), 0),
    };
    if !(-30..=60).contains(&exp) {
        return s;
    }
    let negative = mantissa.starts_with('-');
    let m = mantissa.trim_start_matches('-');
    let (int, frac) = m.split_once('.').unwrap_or((m, ""));
    let all: String = format!("{int}{frac}");
    let point = int.len() as i64 + exp;
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), all)
    } else if point as usize >= all.len() {
        format!("{}{}", all, "0".repeat(point as usize - all.len()))
    } else {
        let (a, b) = all.split_at(point as usize);
        format!("{a}.{b}")
    };
    let body = if body.contains('.') {
        body.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        body
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(d1: u32, g: &[u64]) -> RecurrenceSpec {
        RecurrenceSpec::second_u64(d1, g).unwrap()
    }

    fn close(a: &Float, b: f64, tol: f64) -> bool {
        (a.to_f64() - b).abs() <= tol
    }

    #[test]
    fn dominant_roots() {
        let r = dominant_root(3, 1, 50).unwrap();
        let expect = Float::with_val(r.prec(), 3).sqrt() + 2u32;
        assert!(Float::with_val(r.prec(), &r - &expect).abs() < 1e-48);
        let r = dominant_root(3, 0, 50).unwrap();
        let expect = (Float::with_val(r.prec(), 5).sqrt() + 3u32) / 2u32;
        assert!(Float::with_val(r.prec(), &r - &expect).abs() < 1e-48);
        assert_eq!(dominant_root(2, 0, 50), Err(Error::DegenerateRoot { sum: 2 }));
    }

    #[test]
    fn example_one_reconstruction() {
        let b = BitBudget::default();
        let r = reconstruct_lambda_n(&spec(3, &[3]), 5, 50, &b).unwrap();
        let three = Float::with_val(r.truth.prec(), 3).ln() * 33u32;
        assert!(Float::with_val(three.prec(), &r.truth - &three).abs() < 1e-45);
        assert!(r.relative_error() < 1e-40);
        let r = reconstruct_lambda_n(&spec(3, &[1, 2]), 2, 50, &b).unwrap();
        assert!(close(&r.truth, 3f64.ln(), 1e-15));
        let r = reconstruct_lambda_n(&spec(3, &[1, 2]), 1, 50, &b).unwrap();
        assert!(r.truth.is_zero() && r.exact.abs() < 1e-45);
    }

    #[test]
    fn alpha_for_constant_g_is_zero() {
        assert!(alpha(&spec(3, &[3]), &Integer::from(81), 30).unwrap().is_zero());
        let a = alpha(&spec(3, &[1, 2]), &Integer::from(3), 30).unwrap();
        assert!(close(&a, (7.0f64 / 6.0).ln(), 1e-15));
    }

    #[test]
    fn c_for_example_two() {
        let c = estimate_c(&spec(3, &[1, 2]), 50, &BitBudget::default()).unwrap();
        assert!(close(&c.value, 0.107812043, 1e-8), "{}", c.value);
        assert!(c.error_bound < 1e-15);
    }

    #[test]
    fn growth_examples() {
        let b = BitBudget::default();
        let x = sequence::engel_from_spec(&spec(3, &[1, 2]), 6, &b).unwrap();
        let lambda = dominant_root(3, 1, 30).unwrap();
        let r = growth_report(x.terms(), &lambda, 0.1, 30).unwrap();
        assert_eq!(r.threshold, Some(2));

        let pow2: Vec<Integer> = (0..7).map(|k| Integer::from(1) << k).collect();
        let r = growth_report(&pow2, &lambda, 0.1, 30).unwrap();
        assert_eq!(r.threshold, None);
        assert!(r.rows.last().unwrap().exponent < 1.3);

        let short: Vec<Integer> = [1u32, 1, 2, 4].iter().map(|&v| Integer::from(v)).collect();
        assert!(growth_report(&short, &lambda, 0.1, 30).is_err());
    }

    #[test]
    fn roth_depth_one() {
        let source = SeriesSource::Recurrence(spec(3, &[1, 2]));
        let r = roth_exponents(&source, 1, 30, &BitBudget::default()).unwrap();
        assert_eq!(r.records.len(), 1);
        let rec = &r.records[0];
        // q = x_2 = 3, x_3 = 189
        assert_eq!(rec.n, 2);
        assert!(close(&rec.upper, 189f64.ln() / 3f64.ln(), 1e-12));
        assert!(close(&rec.lower, (94.5f64).ln() / 3f64.ln(), 1e-12));
    }

    #[test]
    fn decimal_rendering() {
        let f = Float::with_val(100, 1.25);
        assert_eq!(decimal_string(&f, 10), "1.25");
        let f = Float::with_val(100, -0.00125);
        assert_eq!(decimal_string(&f, 5), "-0.00125");
        let f = Float::with_val(100, 12345.0);
        assert_eq!(decimal_string(&f, 3), "12300");
        let f = Float::with_val(100, 1e-40);
        assert!(decimal_string(&f, 3).contains('e'));
        assert_eq!(decimal_string(&Float::with_val(10, 0), 5), "0");
    }
}
