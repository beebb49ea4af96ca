//! Square-divisible Engel sequences and their generators.
//!
//! An Engel sequence here is `x_1 = 1, x_2, x_3, ...` with `x_n^2 | x_{n+1}`.
//! Writing `x_{n+1} = z_{n+1} x_n^2` gives the factor sequence `z_2, z_3, ...`,
//! equivalently `x_n = prod_{j=2}^{n} z_j^(2^(n-j))`.
//!
//! Recurrence generators use their own numbering (`x_0 = x_1 = 1` for second
//! order, `X_0 = X_1 = X_2 = 1` for third order). On the Engel side all
//! leading ones but one are dropped, so both numberings meet at `x_1 = 1`.

use std::fmt;
use std::str::FromStr;

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::budget::{BitBudget, BitMeter};
use crate::error::{Error, Result};

/// Which continued fraction recursion, if any, applies to a factor sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FactorClass {
    /// `z_2 >= 3` and `z_j >= 2` for `j >= 3`.
    Generic,
    /// `z_2 = 2` and `z_j >= 2` for `j >= 3`.
    Z2Equals2,
    /// `z_2 = u` and `z_j = 1` for `j >= 3`.
    OnesTail(Integer),
    /// Anything else with `z_2 >= 2`.
    Mixed,
}

impl FactorClass {
    pub fn name(&self) -> &'static str {
        match self {
            FactorClass::Generic => "GENERIC",
            FactorClass::Z2Equals2 => "Z2_EQUALS_2",
            FactorClass::OnesTail(_) => "ONES_TAIL",
            FactorClass::Mixed => "MIXED",
        }
    }
}

impl fmt::Display for FactorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorClass::OnesTail(u) => write!(f, "ONES_TAIL({u})"),
            other => f.write_str(other.name()),
        }
    }
}

/// Factors `z_2, z_3, ...` with their classification.
///
/// A finite list is classified as a prefix: `(3)` is `Generic` rather than
/// `OnesTail(3)`, since a ones tail needs at least one explicit 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSequence {
    z: Vec<Integer>,
    class: FactorClass,
}

impl FactorSequence {
    pub fn new(z: Vec<Integer>) -> Result<Self> {
        if let Some(j) = z.iter().position(|f| *f < 1) {
            return Err(Error::InvalidFactors(format!(
                "z_{} = {} is not a positive integer",
                j + 2,
                z[j]
            )));
        }
        if let Some(z2) = z.first() {
            if *z2 < 2 {
                return Err(Error::InvalidFactors("z_2 must be at least 2".into()));
            }
        }
        let class = classify(&z);
        Ok(FactorSequence { z, class })
    }

    pub fn from_u64s(z: &[u64]) -> Result<Self> {
        Self::new(z.iter().map(|&v| Integer::from(v)).collect())
    }

    pub fn class(&self) -> &FactorClass {
        &self.class
    }

    /// All factors, `z_2` first.
    pub fn factors(&self) -> &[Integer] {
        &self.z
    }

    /// `z_n` for `n >= 2`.
    pub fn z(&self, n: usize) -> &Integer {
        &self.z[n - 2]
    }

    pub fn len(&self) -> usize {
        self.z.len()
    }

    pub fn is_empty(&self) -> bool {
        self.z.is_empty()
    }

    /// Largest `n` for which `x_n` is determined by these factors.
    pub fn max_index(&self) -> usize {
        self.z.len() + 1
    }

    /// The first `count` factors, reclassified.
    pub fn prefix(&self, count: usize) -> FactorSequence {
        let z = self.z[..count.min(self.z.len())].to_vec();
        let class = classify(&z);
        FactorSequence { z, class }
    }
}

fn classify(z: &[Integer]) -> FactorClass {
    let Some((z2, rest)) = z.split_first() else {
        return FactorClass::Generic;
    };
    let tail_ge2 = rest.iter().all(|f| *f >= 2);
    if *z2 >= 3 && tail_ge2 {
        FactorClass::Generic
    } else if *z2 == 2 && tail_ge2 {
        FactorClass::Z2Equals2
    } else if rest.iter().all(|f| *f == 1) {
        FactorClass::OnesTail(z2.clone())
    } else {
        FactorClass::Mixed
    }
}

/// `x_1 = 1, x_2, ..., x_n` with `x_k^2 | x_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngelSequence {
    x: Vec<Integer>,
}

impl EngelSequence {
    /// Validates `x_1 = 1` and square divisibility.
    pub fn new(x: Vec<Integer>) -> Result<Self> {
        factors_from_engel_terms(&x)?;
        Ok(EngelSequence { x })
    }

    /// Terms, `x_1` first.
    pub fn terms(&self) -> &[Integer] {
        &self.x
    }

    /// `x_n`, 1-based.
    pub fn term(&self, n: usize) -> &Integer {
        &self.x[n - 1]
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Engel quotients `y_1 = x_1`, `y_{n+1} = x_{n+1} / x_n`.
    pub fn quotients(&self) -> Vec<Integer> {
        let mut y = Vec::with_capacity(self.x.len());
        let mut prev = Integer::from(1);
        for x in &self.x {
            y.push(Integer::from(x.div_exact_ref(&prev)));
            prev = x.clone();
        }
        y
    }

    pub fn factors(&self) -> FactorSequence {
        factors_from_engel_terms(&self.x).expect("validated on construction")
    }
}

/// `x_1..x_n` from factors `z_2..z_n`, via `x_{k+1} = z_{k+1} x_k^2`.
pub fn from_factors(zs: &FactorSequence, n: usize, budget: &BitBudget) -> Result<EngelSequence> {
    if n == 0 {
        return Err(Error::InvalidFactors("need at least one term".into()));
    }
    if zs.len() + 1 < n {
        return Err(Error::InsufficientFactors {
            needed: n - 1,
            available: zs.len(),
        });
    }
    let mut meter = BitMeter::new(*budget);
    let mut x = Vec::with_capacity(n);
    x.push(Integer::from(1));
    for z in &zs.factors()[..n - 1] {
        let prev = x.last().unwrap();
        let predicted = 2 * u64::from(prev.significant_bits()) + u64::from(z.significant_bits());
        budget.check_term(predicted)?;
        let next = Integer::from(prev.square_ref()) * z;
        meter.charge(next.significant_bits().into())?;
        x.push(next);
    }
    Ok(EngelSequence { x })
}

/// Drops leading ones until exactly one remains.
pub fn strip_leading_ones(x: &[Integer]) -> &[Integer] {
    let ones = x.iter().take_while(|v| **v == 1).count();
    if ones > 1 {
        &x[ones - 1..]
    } else {
        x
    }
}

/// Recovers `z_n = x_n / x_{n-1}^2` from a sequence starting with 1.
///
/// Extra leading ones are stripped first; indices in errors refer to the
/// stripped numbering with `x_1 = 1`.
pub fn factors_from_sequence(x: &[Integer]) -> Result<FactorSequence> {
    factors_from_engel_terms(strip_leading_ones(x))
}

fn factors_from_engel_terms(x: &[Integer]) -> Result<FactorSequence> {
    match x.first() {
        None => return Err(Error::InvalidSequence("empty sequence".into())),
        Some(first) if *first != 1 => return Err(Error::InvalidSequence(format!("x_1 = {first}, expected 1"))),
        _ => {}
    }
    let mut z = Vec::with_capacity(x.len() - 1);
    for (i, pair) in x.windows(2).enumerate() {
        let sq = Integer::from(pair[0].square_ref());
        if sq == 0 || !pair[1].is_divisible(&sq) {
            return Err(Error::DivisibilityViolation { index: i + 2 });
        }
        z.push(Integer::from(pair[1].div_exact_ref(&sq)));
    }
    FactorSequence::new(z)
}

/// Polynomial generator of a nonlinear recurrence with all-ones initial data.
///
/// Second order: `x_{n+2} x_n = x_{n+1}^d1 G(x_{n+1})` with `x_0 = x_1 = 1`.
/// Third order: `X_{n+3} X_n = X_{n+1}^e1 X_{n+2}^e2 H(X_{n+1}, X_{n+2})` with
/// `X_0 = X_1 = X_2 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecurrenceSpec {
    Second {
        d1: u32,
        /// Dense coefficients, constant term first. No trailing zeros.
        g: Vec<Integer>,
    },
    Third {
        e1: u32,
        e2: u32,
        /// Sparse terms `(i, j, c)` of `sum c X^i Y^j`, sorted, with `c > 0`.
        h: Vec<(u32, u32, Integer)>,
    },
}

impl RecurrenceSpec {
    pub fn second(d1: u32, g: Vec<Integer>) -> Result<Self> {
        let mut g = g;
        while g.len() > 1 && *g.last().unwrap() == 0 {
            g.pop();
        }
        let spec = RecurrenceSpec::Second { d1, g };
        spec.validate()?;
        Ok(spec)
    }

    pub fn second_u64(d1: u32, g: &[u64]) -> Result<Self> {
        Self::second(d1, g.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn third(e1: u32, e2: u32, h: Vec<(u32, u32, Integer)>) -> Result<Self> {
        let mut h: Vec<_> = h.into_iter().filter(|t| t.2 != 0).collect();
        h.sort_by_key(|a| (a.0, a.1));
        // merge repeated monomials
        let mut merged: Vec<(u32, u32, Integer)> = Vec::with_capacity(h.len());
        for (i, j, c) in h {
            match merged.last_mut() {
                Some(last) if last.0 == i && last.1 == j => last.2 += c,
                _ => merged.push((i, j, c)),
            }
        }
        let spec = RecurrenceSpec::Third { e1, e2, h: merged };
        spec.validate()?;
        Ok(spec)
    }

    pub fn order(&self) -> usize {
        match self {
            RecurrenceSpec::Second { .. } => 2,
            RecurrenceSpec::Third { .. } => 3,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidSpec(m));
        match self {
            RecurrenceSpec::Second { d1, g } => {
                if *d1 < 3 {
                    return bad(format!("d1 = {d1}, need d1 >= 3"));
                }
                if g.is_empty() {
                    return bad("G has no coefficients".into());
                }
                if g.iter().any(|c| *c < 0) {
                    return bad("G has a negative coefficient".into());
                }
                if g[0] == 0 {
                    return bad("G(0) = 0".into());
                }
                if *g.last().unwrap() == 0 {
                    return bad("G has a zero leading coefficient".into());
                }
                if self.seed_factor() < 2 {
                    return bad("G(1) must be at least 2".into());
                }
            }
            RecurrenceSpec::Third { e1, e2, h } => {
                if *e1 < 1 || *e2 < 2 {
                    return bad(format!("e1 = {e1}, e2 = {e2}, need e1 >= 1 and e2 >= 2"));
                }
                if h.is_empty() {
                    return bad("H has no terms".into());
                }
                if h.iter().any(|t| t.2 < 0) {
                    return bad("H has a negative coefficient".into());
                }
                if h.iter().all(|t| t.0 > 0) {
                    return bad("H is divisible by X".into());
                }
                if h.iter().all(|t| t.1 > 0) {
                    return bad("H is divisible by Y".into());
                }
                if self.seed_factor() < 2 {
                    return bad("H(1,1) must be at least 2".into());
                }
            }
        }
        Ok(())
    }

    /// `G(1)` or `H(1,1)`: the first factor `z_2` of the generated series.
    pub fn seed_factor(&self) -> Integer {
        match self {
            RecurrenceSpec::Second { g, .. } => g.iter().sum(),
            RecurrenceSpec::Third { h, .. } => h.iter().map(|t| &t.2).sum(),
        }
    }

    /// Class of every factor sequence this spec generates. Every factor is at
    /// least `G(1)` (resp. `H(1,1)`), and the first equals it.
    pub fn factor_class(&self) -> FactorClass {
        if self.seed_factor() >= 3 {
            FactorClass::Generic
        } else {
            FactorClass::Z2Equals2
        }
    }

    /// Degree `d2` and leading coefficient `c` of `G`, for second order specs.
    pub fn leading(&self) -> Option<(u32, &Integer)> {
        match self {
            RecurrenceSpec::Second { g, .. } => Some(((g.len() - 1) as u32, g.last().unwrap())),
            RecurrenceSpec::Third { .. } => None,
        }
    }

    /// Number of leading ones in the generated sequence that precede `x_1 = 1`
    /// of the Engel numbering.
    pub fn engel_offset(&self) -> usize {
        self.order() - 1
    }
}

impl fmt::Display for RecurrenceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecurrenceSpec::Second { d1, g } => {
                let g: Vec<String> = g.iter().map(|c| c.to_string()).collect();
                write!(f, "order=2 d1={d1} G={}", g.join(","))
            }
            RecurrenceSpec::Third { e1, e2, h } => {
                let h: Vec<String> = h.iter().map(|(i, j, c)| format!("{i},{j},{c}")).collect();
                write!(f, "order=3 e1={e1} e2={e2} H={}", h.join(";"))
            }
        }
    }
}

fn parse_integer(s: &str, what: &str) -> Result<Integer> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("{what}: `{s}` is not a non-negative integer")));
    }
    Integer::from_str(s).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn parse_u32(s: &str, what: &str) -> Result<u32> {
    s.parse()
        .map_err(|_| Error::Parse(format!("{what}: `{s}` is not a small non-negative integer")))
}

/// Comma-separated list of non-negative decimal integers.
pub fn parse_integer_list(s: &str) -> Result<Vec<Integer>> {
    s.split(',').map(|t| parse_integer(t.trim(), "list entry")).collect()
}

/// Parses `c0,c1,...` as the dense coefficients of `G`.
pub fn parse_g(s: &str) -> Result<Vec<Integer>> {
    parse_integer_list(s)
}

/// Parses `i,j,c;i,j,c;...` as the sparse terms of `H`.
pub fn parse_h(s: &str) -> Result<Vec<(u32, u32, Integer)>> {
    s.split(';')
        .map(|term| {
            let parts: Vec<&str> = term.split(',').collect();
            match parts.as_slice() {
                [i, j, c] => Ok((
                    parse_u32(i, "H exponent")?,
                    parse_u32(j, "H exponent")?,
                    parse_integer(c, "H coefficient")?,
                )),
                _ => Err(Error::Parse(format!("H term `{term}` is not i,j,c"))),
            }
        })
        .collect()
}

impl FromStr for RecurrenceSpec {
    type Err = Error;

    /// Single-line `key=value` form, e.g. `order=2 d1=3 G=1,2` or
    /// `order=3 e1=2 e2=2 H=0,0,1;1,1,2`.
    fn from_str(s: &str) -> Result<Self> {
        let mut order = None;
        let (mut d1, mut g, mut e1, mut e2, mut h) = (None, None, None, None, None);
        for field in s.split_whitespace() {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("field `{field}` is not key=value")))?;
            match key {
                "order" => order = Some(parse_u32(value, "order")?),
                "d1" => d1 = Some(parse_u32(value, "d1")?),
                "G" => g = Some(parse_g(value)?),
                "e1" => e1 = Some(parse_u32(value, "e1")?),
                "e2" => e2 = Some(parse_u32(value, "e2")?),
                "H" => h = Some(parse_h(value)?),
                other => return Err(Error::Parse(format!("unknown key `{other}`"))),
            }
        }
        let missing = |k: &str| Error::Parse(format!("missing key `{k}`"));
        match order {
            Some(2) => RecurrenceSpec::second(d1.ok_or_else(|| missing("d1"))?, g.ok_or_else(|| missing("G"))?),
            Some(3) => RecurrenceSpec::third(
                e1.ok_or_else(|| missing("e1"))?,
                e2.ok_or_else(|| missing("e2"))?,
                h.ok_or_else(|| missing("H"))?,
            ),
            Some(o) => Err(Error::Parse(format!("order must be 2 or 3, got {o}"))),
            None => Err(missing("order")),
        }
    }
}

fn eval_g(g: &[Integer], x: &Integer) -> Integer {
    let mut acc = Integer::new();
    for c in g.iter().rev() {
        acc *= x;
        acc += c;
    }
    acc
}

fn eval_h(h: &[(u32, u32, Integer)], x: &Integer, y: &Integer) -> Integer {
    let mut acc = Integer::new();
    for (i, j, c) in h {
        let term = Integer::from(x.pow(*i)) * Integer::from(y.pow(*j)) * c;
        acc += term;
    }
    acc
}

/// The first `n` terms of the recurrence, in its own numbering (`x_0` first).
///
/// Every division is checked to be exact.
pub fn generate_recurrence(spec: &RecurrenceSpec, n: usize, budget: &BitBudget) -> Result<Vec<Integer>> {
    spec.validate()?;
    iterate(spec, n, budget)
}

fn iterate(spec: &RecurrenceSpec, n: usize, budget: &BitBudget) -> Result<Vec<Integer>> {
    let order = spec.order();
    let mut meter = BitMeter::new(*budget);
    let mut x: Vec<Integer> = Vec::with_capacity(n);
    for _ in 0..n.min(order) {
        meter.charge(1)?;
        x.push(Integer::from(1));
    }
    for k in order..n {
        let (numerator, divisor) = match spec {
            RecurrenceSpec::Second { d1, g } => {
                let prev = &x[k - 1];
                let b = u64::from(prev.significant_bits());
                let predicted = (u64::from(*d1) + g.len() as u64 - 1) * b
                    + u64::from(g.iter().sum::<Integer>().significant_bits())
                    + 1;
                budget.check_term(predicted.saturating_sub(u64::from(x[k - 2].significant_bits())))?;
                (Integer::from(prev.pow(*d1)) * eval_g(g, prev), &x[k - 2])
            }
            RecurrenceSpec::Third { e1, e2, h } => {
                let (a, b) = (&x[k - 2], &x[k - 1]);
                let (ba, bb) = (u64::from(a.significant_bits()), u64::from(b.significant_bits()));
                let (hi, hj) = h
                    .iter()
                    .fold((0u64, 0u64), |acc, t| (acc.0.max(t.0.into()), acc.1.max(t.1.into())));
                let predicted = (u64::from(*e1) + hi) * ba
                    + (u64::from(*e2) + hj) * bb
                    + u64::from(h.iter().map(|t| &t.2).sum::<Integer>().significant_bits())
                    + 1;
                budget.check_term(predicted.saturating_sub(u64::from(x[k - 3].significant_bits())))?;
                let num = Integer::from(a.pow(*e1)) * Integer::from(b.pow(*e2)) * eval_h(h, a, b);
                (num, &x[k - 3])
            }
        };
        if !numerator.is_divisible(divisor) {
            return Err(Error::InexactDivision { index: k });
        }
        let next = numerator.div_exact(divisor);
        meter.charge(next.significant_bits().into())?;
        x.push(next);
    }
    Ok(x)
}

/// `x_1..x_n` of the Engel series attached to a recurrence: the generated
/// terms with the extra leading ones removed.
pub fn engel_from_spec(spec: &RecurrenceSpec, n: usize, budget: &BitBudget) -> Result<EngelSequence> {
    let raw = generate_recurrence(spec, n + spec.engel_offset(), budget)?;
    EngelSequence::new(raw[spec.engel_offset()..].to_vec())
}

/// Third-order spec whose solution satisfies `X_n X_{n+1} = x_n`:
/// `X_{n+3} X_n = (X_{n+1} X_{n+2})^(d1-1) G(X_{n+1} X_{n+2})`.
pub fn lift_spec(spec: &RecurrenceSpec) -> Result<RecurrenceSpec> {
    spec.validate()?;
    match spec {
        RecurrenceSpec::Second { d1, g } => {
            let h = g
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(k, c)| (k as u32, k as u32, c.clone()))
                .collect();
            RecurrenceSpec::third(d1 - 1, d1 - 1, h)
        }
        RecurrenceSpec::Third { .. } => Err(Error::InvalidSpec("only second order specs can be lifted".into())),
    }
}

/// Inverse of [`lift_spec`]: the second order spec of a lifted third order
/// one, or `None` if the recurrence is not of that form.
pub fn unlift_spec(spec: &RecurrenceSpec) -> Option<RecurrenceSpec> {
    let RecurrenceSpec::Third { e1, e2, h } = spec else {
        return None;
    };
    if e1 != e2 || h.iter().any(|(i, j, _)| i != j) {
        return None;
    }
    let mut g = vec![Integer::new(); h.iter().map(|t| t.0 as usize + 1).max()?];
    for (i, _, c) in h {
        g[*i as usize] = c.clone();
    }
    RecurrenceSpec::second(e1 + 1, g).ok()
}

/// Exact `S_n = sum_{j=1}^n 1/x_j`.
///
/// The numerator `sum_j x_n / x_j` is cross-checked against the closed form
/// in the factors `z_k` before the fraction is returned.
pub fn partial_sum(x: &EngelSequence, n: usize) -> Result<Rational> {
    if n == 0 || n > x.len() {
        return Err(Error::InsufficientFactors {
            needed: n.saturating_sub(1),
            available: x.len().saturating_sub(1),
        });
    }
    let numerator = naive_numerator(x.terms(), n);
    let closed = numden_numerator(&x.factors(), n);
    if numerator != closed {
        return Err(Error::IdentityViolation {
            identity: "partial sum numerator closed form",
            n,
        });
    }
    Ok(Rational::from((numerator, x.term(n).clone())))
}

/// `sum_{j=1}^n x_n / x_j`, the numerator of `S_n` over `x_n`.
pub(crate) fn naive_numerator(x: &[Integer], n: usize) -> Integer {
    let xn = &x[n - 1];
    x[..n].iter().map(|xj| Integer::from(xn.div_exact_ref(xj))).sum()
}

/// Exact `S_n` without the closed-form cross-check.
pub(crate) fn partial_sum_fast(x: &[Integer], n: usize) -> Rational {
    Rational::from((naive_numerator(x, n), x[n - 1].clone()))
}

/// Closed-form numerator of `S_n` over the denominator `x_n`:
/// `1 + sum_{j=1}^{n-1} prod_{k=2}^{j} z_k^(2^(n-k) - 2^(j-k)) prod_{l=j+1}^{n} z_l^(2^(n-l))`.
pub fn numden_numerator(zs: &FactorSequence, n: usize) -> Integer {
    let mut total = Integer::from(1);
    for j in 1..n {
        let mut term = Integer::from(1);
        for k in 2..=j {
            let e = (1u64 << (n - k)) - (1u64 << (j - k));
            term *= zs.z(k).clone().pow(e as u32);
        }
        for l in j + 1..=n {
            term *= zs.z(l).clone().pow(1u32 << (n - l));
        }
        total += term;
    }
    total
}

/// Factors for `sum_{k>=0} u^(-c_k)`: `z_2 = u^c_0`, `z_{k+3} = u^(c_{k+1} - 2 c_k)`.
pub fn shallit_factors(u: &Integer, c: &[Integer]) -> Result<FactorSequence> {
    if *u < 2 {
        return Err(Error::InvalidFactors("u must be at least 2".into()));
    }
    if c.is_empty() || c.iter().any(|ck| *ck < 1) {
        return Err(Error::InvalidFactors("exponents c_k must be positive".into()));
    }
    let pow = |e: &Integer| -> Result<Integer> {
        let e = e
            .to_u32()
            .ok_or_else(|| Error::InvalidFactors(format!("exponent {e} is too large")))?;
        Ok(Integer::from(u.pow(e)))
    };
    let mut z = vec![pow(&c[0])?];
    for (k, pair) in c.windows(2).enumerate() {
        let d = &pair[1] - &pair[0] * Integer::from(2);
        if d < 0 {
            return Err(Error::NegativeGap { index: k });
        }
        z.push(pow(&d)?);
    }
    FactorSequence::new(z)
}

/// Header line of the sequence file format.
pub const SEQUENCE_FILE_HEADER: &str = "# engel-seq v1";

/// Renders terms in the v1 sequence file format.
pub fn write_sequence_file(terms: &[Integer], z: Option<&[Integer]>) -> String {
    let mut out = String::from(SEQUENCE_FILE_HEADER);
    out.push('\n');
    if let Some(z) = z {
        let z: Vec<String> = z.iter().map(|v| v.to_string()).collect();
        out.push_str("# z: ");
        out.push_str(&z.join(","));
        out.push('\n');
    }
    for t in terms {
        out.push_str(&t.to_string());
        out.push('\n');
    }
    out
}

/// Parses a v1 sequence file into its terms and optional factor line.
pub fn parse_sequence_file(text: &str) -> Result<(Vec<Integer>, Option<Vec<Integer>>)> {
    let mut lines = text.lines();
    if lines.next().map(str::trim_end) != Some(SEQUENCE_FILE_HEADER) {
        return Err(Error::Parse(format!("missing `{SEQUENCE_FILE_HEADER}` header")));
    }
    let mut terms = Vec::new();
    let mut z = None;
    for line in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("# z:") {
            z = Some(parse_integer_list(rest.trim())?);
        } else if line.starts_with('#') {
            continue;
        } else {
            terms.push(parse_integer(line, "sequence term")?);
        }
    }
    Ok((terms, z))
}
