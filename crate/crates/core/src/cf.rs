//! Finite simple continued fractions over arbitrary-precision integers.
//!
//! The convergents p_j/q_j of `[a_0; a_1, ..., a_m]` are the first column of
//!
//! ```text
//! | a_0 1 | | a_1 1 |     | a_j 1 |   | p_j  p_{j-1} |
//! |  1  0 | |  1  0 | ... |  1  0 | = | q_j  q_{j-1} |
//! ```
//!
//! which gives the usual three-term recurrence and the determinant identity
//! `p_j q_{j-1} - p_{j-1} q_j = (-1)^(j+1)`.

use std::fmt;
use std::str::FromStr;

use rug::{Integer, Rational};

use crate::error::{Error, Result};

/// Coefficients `a_0; a_1, ..., a_m` of a finite continued fraction.
///
/// The container only guarantees non-emptiness. Whether the coefficients are
/// normalized (no zeros past `a_0`) or canonical (additionally, a final
/// coefficient of at least 2) is checked by the operations that need it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CfExpansion {
    coeffs: Vec<Integer>,
}

impl CfExpansion {
    pub fn new(coeffs: Vec<Integer>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyExpansion);
        }
        Ok(CfExpansion { coeffs })
    }

    pub fn from_u64s(coeffs: &[u64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&a| Integer::from(a)).collect())
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `a_0 >= 0` and `a_j >= 1` for `j >= 1`.
    pub fn is_normalized(&self) -> bool {
        self.check_normalized().is_ok()
    }

    /// Normalized, and the last coefficient is at least 2 when there is more
    /// than one.
    pub fn is_canonical(&self) -> bool {
        self.is_normalized() && (self.coeffs.len() == 1 || *self.coeffs.last().unwrap() >= 2)
    }

    fn check_normalized(&self) -> Result<()> {
        for (index, a) in self.coeffs.iter().enumerate() {
            if *a < 0 {
                return Err(Error::NegativeCoefficient { index });
            }
            if index > 0 && *a == 0 {
                return Err(Error::ZeroCoefficient { index });
            }
        }
        Ok(())
    }
}

impl fmt::Display for CfExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}", self.coeffs[0])?;
        for (j, a) in self.coeffs.iter().enumerate().skip(1) {
            let sep = if j == 1 { ';' } else { ',' };
            write!(f, "{sep}{a}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for CfExpansion {
    type Err = Error;

    /// Parses the strict `[a0;a1,a2,...]` grammar (no whitespace).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed continued fraction `{s}`"));
        let inner = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
        let (head, tail) = match inner.split_once(';') {
            Some((h, t)) => (h, Some(t)),
            None => (inner, None),
        };
        let parse = |t: &str| -> Result<Integer> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            Integer::from_str(t).map_err(|_| bad())
        };
        let mut coeffs = vec![parse(head)?];
        if let Some(tail) = tail {
            for t in tail.split(',') {
                coeffs.push(parse(t)?);
            }
        }
        CfExpansion::new(coeffs)
    }
}

/// Numerators and denominators of all convergents of a normalized expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentTable {
    rows: Vec<(Integer, Integer)>,
}

impl ConvergentTable {
    pub fn rows(&self) -> &[(Integer, Integer)] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// `(p_j, q_j)`; index `-1` is the seed `(1, 0)`.
    pub fn get(&self, j: isize) -> (Integer, Integer) {
        if j < 0 {
            (Integer::from(1), Integer::from(0))
        } else {
            self.rows[j as usize].clone()
        }
    }

    /// The full product matrix `[[p_m, p_{m-1}], [q_m, q_{m-1}]]`.
    pub fn final_matrix(&self) -> [[Integer; 2]; 2] {
        let m = self.rows.len() as isize - 1;
        let (p, q) = self.get(m);
        let (pp, qp) = self.get(m - 1);
        [[p, pp], [q, qp]]
    }

    pub fn last(&self) -> &(Integer, Integer) {
        self.rows.last().expect("tables are never empty")
    }

    /// `p_j q_{j-1} - p_{j-1} q_j` for `j >= 0`.
    pub fn determinant(&self, j: usize) -> Integer {
        let (p, q) = self.get(j as isize);
        let (pp, qp) = self.get(j as isize - 1);
        p * qp - pp * q
    }
}

/// Convergents `p_j/q_j` for `j = 0..=m`.
pub fn convergents(cf: &CfExpansion) -> Result<ConvergentTable> {
    cf.check_normalized()?;
    let mut rows = Vec::with_capacity(cf.len());
    let (mut p_prev, mut q_prev) = (Integer::from(1), Integer::from(0));
    let (mut p, mut q) = (cf.coeffs[0].clone(), Integer::from(1));
    rows.push((p.clone(), q.clone()));
    for a in &cf.coeffs[1..] {
        let p_next = Integer::from(a * &p) + &p_prev;
        let q_next = Integer::from(a * &q) + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
        rows.push((p.clone(), q.clone()));
    }
    Ok(ConvergentTable { rows })
}

/// Final convergent `(p_m, q_m)` without materializing the table.
pub(crate) fn final_convergent(coeffs: &[Integer]) -> (Integer, Integer) {
    let (mut p_prev, mut q_prev) = (Integer::from(1), Integer::from(0));
    let (mut p, mut q) = (coeffs[0].clone(), Integer::from(1));
    for a in &coeffs[1..] {
        let p_next = Integer::from(a * &p) + &p_prev;
        let q_next = Integer::from(a * &q) + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
    (p, q)
}

/// Exact value of a finite normalized continued fraction.
pub fn evaluate(cf: &CfExpansion) -> Result<Rational> {
    cf.check_normalized()?;
    Ok(Rational::from(final_convergent(&cf.coeffs)))
}

/// Canonical expansion of a non-negative rational by the Euclidean algorithm.
pub fn expand_rational(r: &Rational) -> Result<CfExpansion> {
    if *r < 0 {
        return Err(Error::NegativeInput);
    }
    let mut num = r.numer().clone();
    let mut den = r.denom().clone();
    let mut coeffs = Vec::new();
    while den != 0 {
        let (quot, rem) = num.div_rem_floor(den.clone());
        coeffs.push(quot);
        num = std::mem::replace(&mut den, rem);
    }
    Ok(CfExpansion { coeffs })
}

/// Removes interior zeros with `[.., a, 0, b, ..] -> [.., a + b, ..]`, scanning
/// left to right, then folds a trailing `[.., a, 1]` into `[.., a + 1]` so
/// the result is canonical. Each removed zero shortens the sequence by two.
pub fn normalize_zeros(raw: Vec<Integer>) -> Result<CfExpansion> {
    let (coeffs, _) = remove_zeros(raw)?;
    Ok(canonicalize_tail(coeffs))
}

/// Zero removal only. Returns the shortened coefficients and the number of
/// zeros removed.
pub fn remove_zeros(raw: Vec<Integer>) -> Result<(Vec<Integer>, usize)> {
    if raw.is_empty() {
        return Err(Error::EmptyExpansion);
    }
    if raw.len() > 1 && *raw.last().unwrap() == 0 {
        return Err(Error::TrailingZero);
    }
    if let Some(index) = raw.iter().position(|a| *a < 0) {
        return Err(Error::NegativeCoefficient { index });
    }
    let mut out: Vec<Integer> = Vec::with_capacity(raw.len());
    let mut removed = 0;
    let mut iter = raw.into_iter().enumerate();
    while let Some((j, a)) = iter.next() {
        if j > 0 && a == 0 {
            // `a` is interior, so a successor exists; the trailing check above
            // covers the last position.
            let (_, b) = iter.next().ok_or(Error::TrailingZero)?;
            *out.last_mut().unwrap() += b;
            removed += 1;
        } else {
            out.push(a);
        }
    }
    Ok((out, removed))
}

/// `[.., a, 1] -> [.., a + 1]`; identity on single-coefficient or
/// already-canonical input.
pub fn canonicalize_tail(mut coeffs: Vec<Integer>) -> CfExpansion {
    if coeffs.len() > 1 && *coeffs.last().unwrap() == 1 {
        coeffs.pop();
        *coeffs.last_mut().unwrap() += 1;
    }
    CfExpansion { coeffs }
}

/// Length of the longest prefix shared by every real strictly between two
/// rationals with the given canonical expansions.
///
/// Positions that are the last coefficient of either expansion are excluded:
/// a terminating coefficient only pins down the value at an endpoint.
pub fn certified_common_prefix(lo: &CfExpansion, hi: &CfExpansion) -> usize {
    let limit = lo.len().min(hi.len()) - 1;
    lo.coeffs
        .iter()
        .zip(&hi.coeffs)
        .take(limit)
        .take_while(|(a, b)| a == b)
        .count()
}
