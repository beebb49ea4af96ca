//! Continued fractions of the partial sums `S_n` and of the full series `S`.
//!
//! For generic factors (`z_2 >= 3`, `z_j >= 2`) the expansion of `S_{n+1}` is
//! built from that of `S_n` of length `l_n` by appending `z_{n+1} - 1, 1,
//! a_{l_n - 1} - 1` followed by `a_{l_n - 2}, ..., a_1` in reverse, so
//! `l_{n+1} = 2 l_n + 1` and every existing coefficient is kept. When
//! `z_2 = 2` a variant recursion doubles the length instead. Other factor
//! classes are handled by an interval oracle: `S` lies strictly between `S_n`
//! and `S_n + 2/x_{n+1}`, and the coefficients shared by both endpoints are
//! certified.

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::budget::BitBudget;
use crate::cf::{self, CfExpansion};
use crate::error::{Error, Result};
use crate::sequence::{self, FactorClass, FactorSequence, RecurrenceSpec};

/// Expansion of the partial sum `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialCf {
    pub n: usize,
    pub coefficients: CfExpansion,
}

impl PartialCf {
    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Expected length `l_n` of the canonical expansion of `S_n`, counting `a_0`.
pub fn expected_length(class: &FactorClass, n: usize) -> Option<usize> {
    let small = [1usize, 2];
    if (1..=2).contains(&n) {
        return Some(small[n - 1]);
    }
    match class {
        FactorClass::Generic => Some(3 * (1 << (n - 2)) - 1),
        FactorClass::Z2Equals2 if n == 3 => Some(5),
        FactorClass::Z2Equals2 => Some(5 * (1 << (n - 3))),
        FactorClass::OnesTail(u) if *u == 2 && n >= 4 => Some((1 << (n - 3)) + 3),
        FactorClass::OnesTail(_) => Some((1 << (n - 2)) + 1),
        FactorClass::Mixed => None,
    }
}

fn one() -> Integer {
    Integer::from(1)
}

/// One doubling step of the generic recursion.
fn generic_step(prev: &[Integer], z_next: &Integer) -> Vec<Integer> {
    let l = prev.len();
    let mut next = Vec::with_capacity(2 * l + 1);
    next.extend_from_slice(prev);
    next.push(Integer::from(z_next - 1u32));
    next.push(one());
    next.push(Integer::from(&prev[l - 1] - 1u32));
    next.extend(prev[1..l - 1].iter().rev().cloned());
    next
}

/// One doubling step of the `z_2 = 2` recursion, valid from `n = 4`.
fn z2_step(prev: &[Integer], z_next: &Integer) -> Vec<Integer> {
    let l = prev.len();
    let mut next = Vec::with_capacity(2 * l);
    next.extend_from_slice(&prev[..l - 1]);
    next.push(one());
    next.push(one());
    next.push(Integer::from(z_next - 1u32));
    next.extend(prev[3..l].iter().rev().cloned());
    next.push(Integer::from(2));
    next
}

fn generic_base(z: &[Integer], n: usize) -> Vec<Integer> {
    match n {
        1 => vec![one()],
        2 => vec![one(), z[0].clone()],
        _ => vec![
            one(),
            Integer::from(&z[0] - 1u32),
            one(),
            Integer::from(&z[1] - 1u32),
            z[0].clone(),
        ],
    }
}

fn z2_base(z: &[Integer], n: usize) -> Vec<Integer> {
    let z3m1 = || Integer::from(&z[1] - 1u32);
    let two = || Integer::from(2);
    match n {
        1 => vec![one()],
        2 => vec![one(), two()],
        3 => vec![one(), one(), one(), z3m1(), two()],
        _ => vec![
            one(),
            one(),
            one(),
            z3m1(),
            two(),
            Integer::from(&z[2] - 1u32),
            one(),
            one(),
            z3m1(),
            two(),
        ],
    }
}

fn require_factors(zs: &FactorSequence, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidFactors("partial sums start at n = 1".into()));
    }
    if zs.len() + 1 < n {
        return Err(Error::InsufficientFactors {
            needed: n - 1,
            available: zs.len(),
        });
    }
    Ok(())
}

/// The generic recursion applied to `z_2..z_n` with no class check and no
/// normalization. Coefficients may be zero when some `z_j = 1` or `z_2 = 2`.
pub fn generic_recursion_raw(zs: &FactorSequence, n: usize) -> Result<Vec<Integer>> {
    require_factors(zs, n)?;
    let z = zs.factors();
    let mut a = generic_base(z, n);
    for m in 3..n {
        a = generic_step(&a, &z[m - 1]);
    }
    Ok(a)
}

/// Expansion of `S_n` for a generic factor sequence, by the doubling recursion.
pub fn generic_partial_cf(zs: &FactorSequence, n: usize) -> Result<PartialCf> {
    require_factors(zs, n)?;
    let prefix = zs.prefix(n.saturating_sub(1));
    if *prefix.class() != FactorClass::Generic {
        return Err(Error::ClassMismatch {
            expected: "GENERIC",
            found: prefix.class().to_string(),
        });
    }
    let coeffs = generic_recursion_raw(zs, n)?;
    Ok(PartialCf {
        n,
        coefficients: CfExpansion::new(coeffs)?,
    })
}

/// Expansion of `S_n` for `z_2 = 2`, `z_j >= 2`.
pub fn z2eq2_partial_cf(zs: &FactorSequence, n: usize) -> Result<PartialCf> {
    require_factors(zs, n)?;
    let prefix = zs.prefix(n.saturating_sub(1));
    let ok = match prefix.class() {
        FactorClass::Z2Equals2 => true,
        // n = 1 needs no factors at all
        FactorClass::Generic => prefix.is_empty(),
        _ => false,
    };
    if !ok {
        return Err(Error::ClassMismatch {
            expected: "Z2_EQUALS_2",
            found: prefix.class().to_string(),
        });
    }
    let z = zs.factors();
    let mut a = z2_base(z, n);
    for m in 4..n {
        a = z2_step(&a, &z[m - 1]);
    }
    Ok(PartialCf {
        n,
        coefficients: CfExpansion::new(a)?,
    })
}

/// Expansion of `S_n` for any factor class: the matching recursion where one
/// exists, otherwise the Euclidean expansion of the exact partial sum.
pub fn partial_cf(zs: &FactorSequence, n: usize, budget: &BitBudget) -> Result<PartialCf> {
    require_factors(zs, n)?;
    let prefix = zs.prefix(n - 1);
    match prefix.class() {
        FactorClass::Generic => generic_partial_cf(zs, n),
        FactorClass::Z2Equals2 => z2eq2_partial_cf(zs, n),
        _ => oracle_partial_cf(zs, n, budget),
    }
}

/// Euclidean expansion of the exact partial sum `S_n`.
pub fn oracle_partial_cf(zs: &FactorSequence, n: usize, budget: &BitBudget) -> Result<PartialCf> {
    require_factors(zs, n)?;
    let x = sequence::from_factors(zs, n, budget)?;
    let s = sequence::partial_sum(&x, n)?;
    Ok(PartialCf {
        n,
        coefficients: cf::expand_rational(&s)?,
    })
}

/// Expansion of `S_n` for the factors `(u, 1, 1, ...)` in the form shared by
/// all `u`: each coefficient is `1` or `u + d` with `|d| <= 2`.
///
/// The shape is read off the canonical expansion at `u = 10`, then `u` is
/// substituted and any zeros removed without folding a trailing 1. For
/// `u >= 3` this is the canonical expansion; for `u = 2` it ends in 1 from
/// `n = 4` on, and its lengths are `2^(n-3) + 3`.
pub fn ones_tail_pattern_cf(u: &Integer, n: usize, budget: &BitBudget) -> Result<PartialCf> {
    if *u < 2 {
        return Err(Error::InvalidFactors("u must be at least 2".into()));
    }
    let exact = |u: &Integer| -> Result<Rational> {
        let x = SeriesSource::OnesTail(u.clone()).engel_terms(n, budget)?;
        Ok(sequence::partial_sum_fast(&x, n))
    };
    let value = exact(u)?;
    let shape_u = Integer::from(10);
    let shape = cf::expand_rational(&exact(&shape_u)?)?;
    let raw: Vec<Integer> = shape
        .coeffs()
        .iter()
        .map(|a| {
            let d = Integer::from(a - &shape_u);
            if d.clone().abs() <= 2 {
                Ok(Integer::from(u + &d))
            } else if *a == 1 {
                Ok(one())
            } else {
                Err(Error::IdentityViolation {
                    identity: "u-power coefficient shape",
                    n,
                })
            }
        })
        .collect::<Result<_>>()?;
    let (coeffs, _) = cf::remove_zeros(raw)?;
    let coefficients = CfExpansion::new(coeffs)?;
    if cf::evaluate(&coefficients)? != value {
        return Err(Error::IdentityViolation {
            identity: "u-power pattern value",
            n,
        });
    }
    Ok(PartialCf { n, coefficients })
}

/// Whether every coefficient lies in `{1, z_2, z_2 - 2} ∪ {z_j - 1}`.
pub fn generic_alphabet_ok(coeffs: &[Integer], zs: &FactorSequence) -> bool {
    let z = zs.factors();
    let Some(z2) = z.first() else {
        return coeffs.iter().all(|a| *a == 1);
    };
    let z2m2 = Integer::from(z2 - 2u32);
    coeffs
        .iter()
        .all(|a| *a == 1 || a == z2 || *a == z2m2 || z.iter().any(|zj| Integer::from(zj - 1u32) == *a))
}

/// Whether every coefficient lies in `{1, u - 2, u - 1, u, u + 2}`.
pub fn ones_tail_alphabet_ok(coeffs: &[Integer], u: &Integer) -> bool {
    let allowed = [
        one(),
        Integer::from(u - 2u32),
        Integer::from(u - 1u32),
        u.clone(),
        Integer::from(u + 2u32),
    ];
    coeffs.iter().all(|a| allowed.contains(a))
}

/// Where the factors of a series come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesSource {
    /// A finite list `z_2..z_N`, treated as the prefix of some continuation
    /// with all later factors at least 1.
    Factors(FactorSequence),
    /// Factors generated lazily by a recurrence.
    Recurrence(RecurrenceSpec),
    /// `z_2 = u` followed by ones, i.e. `S - 1 = sum_k u^(-2^k)`.
    OnesTail(Integer),
}

impl SeriesSource {
    pub fn class(&self) -> FactorClass {
        match self {
            SeriesSource::Factors(zs) => zs.class().clone(),
            SeriesSource::Recurrence(spec) => spec.factor_class(),
            SeriesSource::OnesTail(u) => FactorClass::OnesTail(u.clone()),
        }
    }

    /// Upper limit on the number of Engel terms this source can produce.
    pub fn max_terms(&self) -> Option<usize> {
        match self {
            SeriesSource::Factors(zs) => Some(zs.max_index()),
            _ => None,
        }
    }

    /// `x_1..x_n`, or fewer if the source is finite.
    pub fn engel_terms(&self, n: usize, budget: &BitBudget) -> Result<Vec<Integer>> {
        match self {
            SeriesSource::Factors(zs) => {
                let n = n.min(zs.max_index());
                Ok(sequence::from_factors(zs, n, budget)?.terms().to_vec())
            }
            SeriesSource::Recurrence(spec) => Ok(sequence::engel_from_spec(spec, n, budget)?.terms().to_vec()),
            SeriesSource::OnesTail(u) => {
                let mut z = vec![u.clone()];
                z.resize(n.saturating_sub(1).max(1), one());
                let zs = FactorSequence::new(z)?;
                Ok(sequence::from_factors(&zs, n, budget)?.terms().to_vec())
            }
        }
    }

    /// `z_2..z_n`, or fewer if the source is finite.
    pub fn factors(&self, n: usize, budget: &BitBudget) -> Result<FactorSequence> {
        match self {
            SeriesSource::Factors(zs) => Ok(zs.prefix(n.saturating_sub(1))),
            _ => sequence::factors_from_sequence(&self.engel_terms(n, budget)?),
        }
    }
}

/// How a stream certifies coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Doubling recursion; only for `Generic` and `Z2Equals2` sources.
    Recursion,
    /// Common prefix of the expansions of a rational enclosure of `S`.
    Oracle,
}

/// Incrementally certified coefficients `a_0, a_1, ...` of the infinite
/// expansion of `S`. Certified coefficients never change.
#[derive(Debug, Clone)]
pub struct CoefficientStream {
    source: SeriesSource,
    budget: BitBudget,
    method: Method,
    emitted: Vec<Integer>,
    n_used: usize,
    lengths: Vec<usize>,
    pulled: usize,
}

impl CoefficientStream {
    /// Recursion for `Generic`/`Z2Equals2` sources, oracle otherwise.
    pub fn new(source: SeriesSource, budget: BitBudget) -> Self {
        let method = match source.class() {
            FactorClass::Generic | FactorClass::Z2Equals2 => Method::Recursion,
            _ => Method::Oracle,
        };
        Self::with_method(source, budget, method)
    }

    pub fn with_method(source: SeriesSource, budget: BitBudget, method: Method) -> Self {
        CoefficientStream {
            source,
            budget,
            method,
            emitted: Vec::new(),
            n_used: 0,
            lengths: Vec::new(),
            pulled: 0,
        }
    }

    pub fn class(&self) -> FactorClass {
        self.source.class()
    }

    pub fn method(&self) -> Method {
        self.method
    }

    /// Everything certified so far.
    pub fn certified(&self) -> &[Integer] {
        &self.emitted
    }

    /// Largest partial-sum index consulted.
    pub fn n_used(&self) -> usize {
        self.n_used
    }

    /// Lengths `l_1, l_2, ...` of the partial-sum expansions computed so far.
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Certifies at least `a_0..=a_k` and returns exactly that slice.
    pub fn certify_through(&mut self, k: usize) -> Result<&[Integer]> {
        if self.emitted.len() <= k {
            match self.method {
                Method::Recursion => self.run_recursion(k + 1)?,
                Method::Oracle => self.run_oracle(k + 1)?,
            }
        }
        Ok(&self.emitted[..=k])
    }

    /// Next coefficient in order, certifying more as needed.
    pub fn pull(&mut self) -> Result<Integer> {
        let k = self.pulled;
        let a = self.certify_through(k)?[k].clone();
        self.pulled += 1;
        Ok(a)
    }

    fn extend(&mut self, certified: &[Integer]) -> Result<()> {
        let keep = self.emitted.len().min(certified.len());
        if self.emitted[..keep] != certified[..keep] {
            return Err(Error::IdentityViolation {
                identity: "certified prefix stability",
                n: self.n_used,
            });
        }
        if certified.len() > self.emitted.len() {
            self.emitted = certified.to_vec();
        }
        Ok(())
    }

    fn run_recursion(&mut self, want: usize) -> Result<()> {
        let class = self.source.class();
        let z2_case = match class {
            FactorClass::Generic => false,
            FactorClass::Z2Equals2 => true,
            other => {
                return Err(Error::ClassMismatch {
                    expected: "GENERIC or Z2_EQUALS_2",
                    found: other.to_string(),
                })
            }
        };
        // Number of leading coefficients of S_n that survive into every later
        // partial sum.
        let stable = |n: usize, len: usize| match (z2_case, n) {
            (_, 1) => 1,
            (false, 2) | (true, 2) => 1,
            (false, _) | (true, 3) => len,
            (true, _) => len - 1,
        };
        let mut n = 1;
        let mut a = vec![one()];
        let mut lengths = vec![1];
        let mut zs = self.source.factors(1, &self.budget)?;
        while stable(n, a.len()) < want {
            n += 1;
            if zs.len() + 1 < n {
                zs = self.source.factors(n, &self.budget)?;
                if zs.len() + 1 < n {
                    return Err(Error::InsufficientFactors {
                        needed: n - 1,
                        available: zs.len(),
                    });
                }
            }
            let z = zs.factors();
            a = match (z2_case, n) {
                (false, 2 | 3) => generic_base(z, n),
                (false, _) => generic_step(&a, &z[n - 2]),
                (true, 2..=4) => z2_base(z, n),
                (true, _) => z2_step(&a, &z[n - 2]),
            };
            lengths.push(a.len());
        }
        self.n_used = self.n_used.max(n);
        if lengths.len() > self.lengths.len() {
            self.lengths = lengths;
        }
        let k = stable(n, a.len());
        self.extend(&a[..k])
    }

    fn run_oracle(&mut self, want: usize) -> Result<()> {
        let max_terms = self.source.max_terms();
        let mut n = self.n_used.max(1);
        loop {
            let x = self.source.engel_terms(n + 1, &self.budget)?;
            if x.len() < n {
                return Err(Error::InsufficientFactors {
                    needed: n - 1,
                    available: x.len().saturating_sub(1),
                });
            }
            let lo = sequence::partial_sum_fast(&x, n);
            // Every continuation has x_{n+1} >= x_n^2 >= 2 once n >= 2.
            let next = match x.get(n) {
                Some(v) => v.clone(),
                None => Integer::from(x[n - 1].square_ref()).max(Integer::from(2)),
            };
            let hi = &lo + Rational::from((Integer::from(2), next));
            let lo_cf = cf::expand_rational(&lo)?;
            let hi_cf = cf::expand_rational(&hi)?;
            if self.lengths.len() < n {
                self.lengths.push(lo_cf.len());
            }
            let k = cf::certified_common_prefix(&lo_cf, &hi_cf);
            self.n_used = self.n_used.max(n);
            self.extend(&lo_cf.coeffs()[..k])?;
            if self.emitted.len() >= want {
                return Ok(());
            }
            if max_terms.is_some_and(|m| n >= m) {
                return Err(Error::InsufficientFactors {
                    needed: n,
                    available: n - 1,
                });
            }
            n += 1;
        }
    }
}

/// Stream of `S` certified through `a_k` (so at least `k + 1` coefficients).
pub fn stream(source: SeriesSource, k: usize, budget: BitBudget) -> Result<CoefficientStream> {
    let mut s = CoefficientStream::new(source, budget);
    s.certify_through(k)?;
    Ok(s)
}

/// Decimal digits of `S`, truncated, with every printed digit certified.
///
/// Returns `digits` digits after the point.
pub fn certified_decimal(source: &SeriesSource, digits: usize, budget: &BitBudget) -> Result<String> {
    let scale = Integer::from(10).pow(digits as u32);
    let mut n = 2;
    loop {
        let x = source.engel_terms(n + 1, budget)?;
        if x.len() < n {
            return Err(Error::InsufficientFactors {
                needed: n - 1,
                available: x.len().saturating_sub(1),
            });
        }
        let lo = sequence::partial_sum_fast(&x, n);
        let next = match x.get(n) {
            Some(v) => v.clone(),
            None => Integer::from(x[n - 1].square_ref()),
        };
        let hi = &lo + Rational::from((Integer::from(2), next));
        let lo_digits = Rational::from(&lo * &scale).floor().into_numer_denom().0;
        let hi_digits = Rational::from(&hi * &scale).floor().into_numer_denom().0;
        if lo_digits == hi_digits {
            let s = lo_digits.to_string();
            let (int, frac) = s.split_at(s.len() - digits);
            let int = if int.is_empty() { "0" } else { int };
            return Ok(format!("{int}.{frac}"));
        }
        if source.max_terms().is_some_and(|m| n >= m) {
            return Err(Error::InsufficientFactors {
                needed: n,
                available: n - 1,
            });
        }
        n += 1;
    }
}

/// Quantities checked by [`verify_step_identities`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepReport {
    pub n: usize,
    pub len_n: usize,
    pub len_next: usize,
    /// `det M_n = p_{l-1} q_{l-2} - p_{l-2} q_{l-1}`.
    pub det: Integer,
    /// Final numerator and denominator of `S_{n+1}`.
    pub p_next: Integer,
    pub q_next: Integer,
    pub x_next: Integer,
}

fn mat_mul(a: &[[Integer; 2]; 2], b: &[[Integer; 2]; 2]) -> [[Integer; 2]; 2] {
    let e = |i: usize, k: usize| Integer::from(&a[i][0] * &b[0][k]) + Integer::from(&a[i][1] * &b[1][k]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn coeff_matrix(a: &Integer) -> [[Integer; 2]; 2] {
    [[a.clone(), one()], [one(), Integer::new()]]
}

/// Checks the matrix identities behind one step of the generic recursion:
/// `det M_n = -1`, the transposed reversed product, and
/// `p~ = z_{n+1} q p + 1`, `q~ = z_{n+1} q^2 = x_{n+1}` together with the
/// penultimate column `z_{n+1} p D - 1`, `z_{n+1} q D - 1` where `D = p - q`.
pub fn verify_step_identities(zs: &FactorSequence, n: usize) -> Result<StepReport> {
    if n < 3 {
        return Err(Error::InvalidFactors("step identities start at n = 3".into()));
    }
    let current = generic_partial_cf(zs, n)?;
    let next = generic_partial_cf(zs, n + 1)?;
    let fail = |identity: &'static str| Error::IdentityViolation { identity, n };

    let t = cf::convergents(&current.coefficients)?;
    let [[p, pp], [q, qp]] = t.final_matrix();
    let det = Integer::from(&p * &qp) - Integer::from(&pp * &q);
    if current.len() % 2 == 0 {
        return Err(fail("l_n is odd"));
    }
    if det != -1 {
        return Err(fail("det M_n = -1"));
    }

    // M~^T = C(a_{l-1} - 1) C(a_{l-2}) ... C(a_1), formed directly.
    let a = current.coefficients.coeffs();
    let l = a.len();
    let mut reversed = coeff_matrix(&Integer::from(&a[l - 1] - 1u32));
    for aj in a[1..l - 1].iter().rev() {
        reversed = mat_mul(&reversed, &coeff_matrix(aj));
    }
    let expected = [
        [Integer::from(&q - &qp), Integer::from(&p - &q) + &qp - &pp],
        [qp.clone(), Integer::from(&pp - &qp)],
    ];
    if reversed != expected {
        return Err(fail("reversed product closed form"));
    }

    let z = zs.z(n + 1);
    let tn = cf::convergents(&next.coefficients)?;
    let [[p_next, pp_next], [q_next, qp_next]] = tn.final_matrix();
    let delta = Integer::from(&p - &q);
    if p_next != Integer::from(z * &q) * &p + 1u32 {
        return Err(fail("p~ = z q p + 1"));
    }
    if q_next != Integer::from(z * &q) * &q {
        return Err(fail("q~ = z q^2"));
    }
    if pp_next != Integer::from(z * &p) * &delta - 1u32 {
        return Err(fail("p~' = z p D - 1"));
    }
    if qp_next != Integer::from(z * &q) * &delta - 1u32 {
        return Err(fail("q~' = z q D - 1"));
    }
    let x = sequence::from_factors(zs, n + 1, &BitBudget::unlimited())?;
    let x_next = x.term(n + 1).clone();
    if q_next != x_next || q != *x.term(n) {
        return Err(fail("q~ = x_{n+1}"));
    }
    Ok(StepReport {
        n,
        len_n: current.len(),
        len_next: next.len(),
        det,
        p_next,
        q_next,
        x_next,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zs(z: &[u64]) -> FactorSequence {
        FactorSequence::from_u64s(z).unwrap()
    }

    fn cf(a: &[u64]) -> CfExpansion {
        CfExpansion::from_u64s(a).unwrap()
    }

    fn ints(v: &[u64]) -> Vec<Integer> {
        v.iter().map(|&a| Integer::from(a)).collect()
    }

    #[test]
    fn generic_examples() {
        let p = generic_partial_cf(&zs(&[3, 2, 2]), 4).unwrap();
        assert_eq!(p.coefficients, cf(&[1, 2, 1, 1, 3, 1, 1, 2, 1, 1, 2]));
        let p = generic_partial_cf(&zs(&[3, 9, 81]), 4).unwrap();
        assert_eq!(p.coefficients, cf(&[1, 2, 1, 8, 3, 80, 1, 2, 8, 1, 2]));
        let p = generic_partial_cf(&zs(&[3, 2]), 3).unwrap();
        assert_eq!(p.coefficients, cf(&[1, 2, 1, 1, 3]));
        assert_eq!(generic_partial_cf(&zs(&[3, 2]), 1).unwrap().coefficients, cf(&[1]));
        assert_eq!(generic_partial_cf(&zs(&[5]), 2).unwrap().coefficients, cf(&[1, 5]));
    }

    #[test]
    fn generic_rejects_other_classes() {
        assert!(matches!(
            generic_partial_cf(&zs(&[2, 3, 3]), 4),
            Err(Error::ClassMismatch { .. })
        ));
        assert!(matches!(
            generic_partial_cf(&zs(&[3, 1]), 3),
            Err(Error::ClassMismatch { .. })
        ));
        assert!(matches!(
            generic_partial_cf(&zs(&[3, 2]), 4),
            Err(Error::InsufficientFactors { .. })
        ));
    }

    #[test]
    fn z2_examples() {
        let p = z2eq2_partial_cf(&zs(&[2, 6, 300]), 4).unwrap();
        assert_eq!(p.coefficients, cf(&[1, 1, 1, 5, 2, 299, 1, 1, 5, 2]));
        let p = z2eq2_partial_cf(&zs(&[2, 2, 2]), 4).unwrap();
        assert_eq!(p.coefficients, cf(&[1, 1, 1, 1, 2, 1, 1, 1, 1, 2]));
        assert!(matches!(
            z2eq2_partial_cf(&zs(&[3, 2, 2]), 4),
            Err(Error::ClassMismatch { .. })
        ));
    }

    #[test]
    fn z2_s5_matches_symbolic_display() {
        // Distinct primes stand in for symbols so positions are unambiguous.
        let (z3, z4, z5) = (11u64, 13, 17);
        let p = z2eq2_partial_cf(&zs(&[2, z3, z4, z5]), 5).unwrap();
        let expect = [
            1,
            1,
            1,
            z3 - 1,
            2,
            z4 - 1,
            1,
            1,
            z3 - 1,
            1,
            1,
            z5 - 1,
            2,
            z3 - 1,
            1,
            1,
            z4 - 1,
            2,
            z3 - 1,
            2,
        ];
        assert_eq!(p.coefficients, cf(&expect));
        assert_eq!(p.len(), 20);
    }

    #[test]
    fn z2_equals_zero_removal_of_raw_generic() {
        for z in [&[2u64, 11, 13, 17, 19][..], &[2, 2, 2, 2, 2], &[2, 6, 300, 7, 5]] {
            let z = zs(z);
            for n in 4..=6 {
                let raw = generic_recursion_raw(&z, n).unwrap();
                let fixed = cf::normalize_zeros(raw).unwrap();
                assert_eq!(fixed, z2eq2_partial_cf(&z, n).unwrap().coefficients, "n = {n}");
            }
        }
    }

    #[test]
    fn raw_s5_has_one_zero() {
        let raw = generic_recursion_raw(&zs(&[2, 11, 13, 17]), 5).unwrap();
        assert_eq!(raw.iter().filter(|a| **a == 0).count(), 1);
        assert_eq!(raw.len(), 23);
    }

    #[test]
    fn lengths_formula() {
        let g = FactorClass::Generic;
        let lens: Vec<_> = (1..=5).map(|n| expected_length(&g, n).unwrap()).collect();
        assert_eq!(lens, [1, 2, 5, 11, 23]);
        let z2 = FactorClass::Z2Equals2;
        let lens: Vec<_> = (1..=5).map(|n| expected_length(&z2, n).unwrap()).collect();
        assert_eq!(lens, [1, 2, 5, 10, 20]);
        let u3 = FactorClass::OnesTail(Integer::from(3));
        let lens: Vec<_> = (1..=6).map(|n| expected_length(&u3, n).unwrap()).collect();
        assert_eq!(lens, [1, 2, 3, 5, 9, 17]);
        let u2 = FactorClass::OnesTail(Integer::from(2));
        let lens: Vec<_> = (1..=6).map(|n| expected_length(&u2, n).unwrap()).collect();
        assert_eq!(lens, [1, 2, 3, 5, 7, 11]);
        assert_eq!(expected_length(&FactorClass::Mixed, 4), None);
    }

    #[test]
    fn step_identities() {
        let r = verify_step_identities(&zs(&[3, 2, 2]), 3).unwrap();
        assert_eq!(r.det, -1);
        assert_eq!((r.len_n, r.len_next), (5, 11));
        let r = verify_step_identities(&zs(&[3, 9, 81, 19683]), 4).unwrap();
        assert_eq!(r.q_next, Integer::from(Integer::u_pow_u(3, 33)));
        verify_step_identities(&zs(&[4, 3, 2, 5]), 5).unwrap_err();
        verify_step_identities(&zs(&[4, 3, 2, 5, 7]), 5).unwrap();
    }

    #[test]
    fn recursion_stream_example_one() {
        let source = SeriesSource::Factors(zs(&[3, 9, 81]));
        let mut s = CoefficientStream::new(source, BitBudget::default());
        assert_eq!(s.method(), Method::Recursion);
        let got = s.certify_through(10).unwrap().to_vec();
        assert_eq!(got, ints(&[1, 2, 1, 8, 3, 80, 1, 2, 8, 1, 2]));
        assert!(s.certify_through(11).is_err());
    }

    #[test]
    fn oracle_agrees_with_recursion_on_generic() {
        let source = SeriesSource::Recurrence(RecurrenceSpec::second_u64(3, &[1, 2]).unwrap());
        let mut rec = CoefficientStream::new(source.clone(), BitBudget::default());
        let mut ora = CoefficientStream::with_method(source, BitBudget::default(), Method::Oracle);
        let a = rec.certify_through(22).unwrap().to_vec();
        let b = ora.certify_through(22).unwrap().to_vec();
        assert_eq!(a, b);
    }

    #[test]
    fn pull_walks_the_stream() {
        let source = SeriesSource::OnesTail(Integer::from(3));
        let mut s = CoefficientStream::new(source, BitBudget::default());
        let first: Vec<_> = (0..5).map(|_| s.pull().unwrap()).collect();
        assert_eq!(first, ints(&[1, 2, 5, 3, 3]));
    }

    #[test]
    fn mixed_source_is_oracle_only() {
        let source = SeriesSource::Factors(zs(&[5, 1, 2, 1]));
        let mut s = CoefficientStream::new(source, BitBudget::default());
        assert_eq!(s.method(), Method::Oracle);
        let got = s.certify_through(5).unwrap().to_vec();
        assert_eq!(got.len(), 6);
        // S_5 lies below S, so its expansion must begin with the same digits.
        let x = sequence::from_factors(&zs(&[5, 1, 2, 1]), 5, &BitBudget::default()).unwrap();
        let s5 = cf::expand_rational(&sequence::partial_sum(&x, 5).unwrap()).unwrap();
        assert_eq!(&s5.coeffs()[..6], &got[..]);
    }

    #[test]
    fn certified_decimal_examples() {
        let source = SeriesSource::Recurrence(RecurrenceSpec::second_u64(3, &[1, 2]).unwrap());
        let d = certified_decimal(&source, 12, &BitBudget::default()).unwrap();
        assert!(d.starts_with("1.33862433"), "{d}");
        let d = certified_decimal(&SeriesSource::OnesTail(Integer::from(10)), 20, &BitBudget::default()).unwrap();
        // 1 + 0.1 + 0.01 + 0.0001 + 1e-8 + 1e-16
        assert_eq!(d, "1.11010001000000010000");
    }
}
