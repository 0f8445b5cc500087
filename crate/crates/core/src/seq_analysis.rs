//! Shape analysis of coefficient sequences: unimodality, log-concavity, the
//! ratio threshold condition, and the deterministic inequalities satisfied by
//! co-hereditary (and, more generally, upward-closed) counting sequences.
//!
//! All comparisons are exact; nothing here touches floating point.

use crate::poly::binomial;
use num::{BigInt, BigRational, BigUint, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeqError {
    #[error("negative coefficient at index {index}")]
    NegativeCoefficient { index: usize },
}

/// Full shape description of one nonnegative sequence `c_0..c_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShapeReport {
    pub is_unimodal: bool,
    /// All admissible mode indices; a contiguous interval when nonempty.
    pub modes: Vec<usize>,
    pub is_log_concave: bool,
    pub has_internal_zeros: bool,
    /// `r_i = c_i / C(n, i)` with `n = len - 1`.
    pub ratio_sequence: Vec<BigRational>,
    /// Indices k where `r_k >= (n - k) / (k + 1)`.
    pub star_holds_at: Vec<usize>,
}

pub fn shape_report(values: &[BigUint]) -> ShapeReport {
    let (is_unimodal, modes) = is_unimodal(values);
    let n = values.len().saturating_sub(1);
    ShapeReport {
        is_unimodal,
        modes,
        is_log_concave: is_log_concave(values),
        has_internal_zeros: has_internal_zeros(values),
        ratio_sequence: values
            .iter()
            .enumerate()
            .map(|(i, c)| {
                BigRational::new(BigInt::from(c.clone()), BigInt::from(binomial(n, i)))
            })
            .collect(),
        star_holds_at: (0..=n).filter(|&k| star_condition(values, k)).collect(),
    }
}

/// Weak unimodality: some k makes the sequence nondecreasing through k and
/// nonincreasing afterwards. Returns every admissible k.
///
/// Sequences of length <= 2 are unimodal by convention.
pub fn is_unimodal(values: &[BigUint]) -> (bool, Vec<usize>) {
    let len = values.len();
    if len == 0 {
        return (true, Vec::new());
    }
    // longest nondecreasing prefix ends at `rise`, the nonincreasing suffix
    // starts at `fall`; admissible modes are exactly fall..=rise
    let mut rise = 0;
    while rise + 1 < len && values[rise] <= values[rise + 1] {
        rise += 1;
    }
    let mut fall = len - 1;
    while fall > 0 && values[fall - 1] >= values[fall] {
        fall -= 1;
    }
    if fall <= rise {
        (true, (fall..=rise).collect())
    } else {
        (false, Vec::new())
    }
}

/// `a_j^2 >= a_{j-1} a_{j+1}` for every internal j, with exact products.
pub fn is_log_concave(values: &[BigUint]) -> bool {
    values
        .windows(3)
        .all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

/// A zero strictly between two nonzero entries.
pub fn has_internal_zeros(values: &[BigUint]) -> bool {
    let Some(first) = values.iter().position(|c| !c.is_zero()) else {
        return false;
    };
    let last = values.iter().rposition(|c| !c.is_zero()).expect("nonzero exists");
    values[first..=last].iter().any(Zero::is_zero)
}

/// The ratio threshold at index k: `c_k / C(n,k) >= (n - k) / (k + 1)`,
/// compared exactly. Implies the sequence is nonincreasing from k on when it
/// comes from an upward-closed family.
pub fn star_condition(values: &[BigUint], k: usize) -> bool {
    let n = values.len() - 1;
    debug_assert!(k <= n);
    // cross-multiplied: c_k (k+1) >= C(n,k) (n-k)
    let lhs = &values[k] * BigUint::from(k as u64 + 1);
    let rhs = binomial(n, k) * BigUint::from((n - k) as u64);
    lhs >= rhs
}

/// The two deterministic inequalities of upward-closed counting sequences,
/// with the first violating index when one fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityReport {
    /// `c_k <= c_{k+1}` for every k < n/2.
    pub lower_half_nondecreasing: bool,
    pub first_lower_half_violation: Option<usize>,
    /// `(n-i) c_i <= (i+1) c_{i+1}` for every i, i.e. the ratios
    /// `c_i / C(n,i)` never decrease.
    pub ratios_nondecreasing: bool,
    pub first_ratio_violation: Option<usize>,
}

impl InequalityReport {
    pub fn all_pass(&self) -> bool {
        self.lower_half_nondecreasing && self.ratios_nondecreasing
    }
}

pub fn cohereditary_inequalities(values: &[BigUint]) -> InequalityReport {
    let n = values.len() - 1;
    let mut first_lower_half_violation = None;
    for k in 0..n {
        if 2 * k >= n {
            break;
        }
        if values[k] > values[k + 1] {
            first_lower_half_violation = Some(k);
            break;
        }
    }
    let mut first_ratio_violation = None;
    for i in 0..n {
        let lhs = &values[i] * BigUint::from((n - i) as u64);
        let rhs = &values[i + 1] * BigUint::from(i as u64 + 1);
        if lhs > rhs {
            first_ratio_violation = Some(i);
            break;
        }
    }
    InequalityReport {
        lower_half_nondecreasing: first_lower_half_violation.is_none(),
        first_lower_half_violation,
        ratios_nondecreasing: first_ratio_violation.is_none(),
        first_ratio_violation,
    }
}

/// Consistency verdict for the implication chain real-rooted => log-concave
/// => (absent internal zeros) unimodal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonChainVerdict {
    pub consistent: bool,
    pub violations: Vec<String>,
}

/// Checks the chain on a nonnegative sequence; a violation indicates a bug in
/// the caller (or a wrong real-rootedness flag), never new mathematics.
pub fn newton_chain_check(
    coeffs: &[BigInt],
    real_rooted: bool,
) -> Result<NewtonChainVerdict, SeqError> {
    for (index, c) in coeffs.iter().enumerate() {
        if c.is_negative() {
            return Err(SeqError::NegativeCoefficient { index });
        }
    }
    let values: Vec<BigUint> = coeffs
        .iter()
        .map(|c| c.magnitude().clone())
        .collect();
    let log_concave = is_log_concave(&values);
    let (unimodal, _) = is_unimodal(&values);
    let internal_zeros = has_internal_zeros(&values);

    let mut violations = Vec::new();
    if real_rooted && !log_concave {
        violations.push("real-rooted but not log-concave".to_string());
    }
    if log_concave && !internal_zeros && !unimodal {
        violations.push("log-concave without internal zeros but not unimodal".to_string());
    }
    Ok(NewtonChainVerdict {
        consistent: violations.is_empty(),
        violations,
    })
}
