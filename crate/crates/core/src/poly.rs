//! Dense arbitrary-precision rational polynomials.
//!
//! Every operation is exact; there is no rounding anywhere. The coefficient
//! vector is indexed by power and kept normalized: no trailing zeros, and the
//! zero polynomial is the empty vector.

use num::{BigInt, BigRational, BigUint, One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("reverse(f, {n}) needs n >= deg(f) = {degree}")]
    ReverseDegreeTooSmall { n: usize, degree: usize },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut value = BigUint::one();
    for i in 0..k {
        value = value * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    value
}

#[derive(Clone, PartialEq, Eq)]
pub struct ExactPolynomial {
    coeffs: Vec<BigRational>,
}

impl ExactPolynomial {
    pub fn zero() -> Self {
        ExactPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ExactPolynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        ExactPolynomial::from_coefficients(vec![c])
    }

    /// Normalizes by stripping trailing zero coefficients.
    pub fn from_coefficients(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ExactPolynomial { coeffs }
    }

    pub fn from_integer_coefficients(coeffs: &[i64]) -> Self {
        ExactPolynomial::from_coefficients(
            coeffs
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        )
    }

    /// Lifts a nonnegative-integer coefficient sequence (trailing zeros allowed).
    pub fn from_counts(counts: &[BigUint]) -> Self {
        ExactPolynomial::from_coefficients(
            counts
                .iter()
                .map(|c| BigRational::from(BigInt::from(c.clone())))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coefficient(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return ExactPolynomial::zero();
        }
        ExactPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return ExactPolynomial::zero();
        }
        ExactPolynomial::from_coefficients(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division: `self = divisor * quotient + remainder` with
    /// `deg(remainder) < deg(divisor)`, all coefficients exact.
    pub fn divide_with_remainder(
        &self,
        divisor: &ExactPolynomial,
    ) -> Result<(ExactPolynomial, ExactPolynomial), PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let d = divisor.degree().expect("nonzero divisor");
        let lead = divisor.leading_coefficient().expect("nonzero divisor");
        let mut remainder = self.coeffs.clone();
        let mut quotient = vec![BigRational::zero(); self.coeffs.len().saturating_sub(d)];
        while remainder.len() > d {
            let k = remainder.len() - 1;
            let factor = remainder.last().expect("nonempty") / lead;
            if !factor.is_zero() {
                for i in 0..d {
                    let delta = &factor * &divisor.coeffs[i];
                    remainder[k - d + i] -= delta;
                }
                quotient[k - d] = factor;
            }
            remainder.pop();
        }
        Ok((
            ExactPolynomial::from_coefficients(quotient),
            ExactPolynomial::from_coefficients(remainder),
        ))
    }

    /// `x^n * f(1/x)`: coefficient `i` of the input becomes coefficient `n - i`.
    pub fn reverse(&self, n: usize) -> Result<ExactPolynomial, PolyError> {
        if let Some(d) = self.degree() {
            if n < d {
                return Err(PolyError::ReverseDegreeTooSmall { n, degree: d });
            }
        }
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[n - i] = c.clone();
        }
        Ok(ExactPolynomial::from_coefficients(coeffs))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(f: &ExactPolynomial, g: &ExactPolynomial) -> Result<ExactPolynomial, PolyError> {
        if f.is_zero() && g.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut a = f.clone();
        let mut b = g.clone();
        while !b.is_zero() {
            let (_, r) = a.divide_with_remainder(&b)?;
            a = b;
            b = r;
        }
        Ok(a.into_monic())
    }

    fn into_monic(self) -> ExactPolynomial {
        let inverse = match self.leading_coefficient() {
            None => None,
            Some(lead) if lead.is_one() => None,
            Some(lead) => Some(lead.recip()),
        };
        match inverse {
            None => self,
            Some(inv) => self.scale(&inv),
        }
    }

    /// `f / gcd(f, f')`, monic: the same roots without multiplicities.
    pub fn squarefree_part(&self) -> Result<ExactPolynomial, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let g = ExactPolynomial::gcd(self, &self.derivative())?;
        let (q, r) = self.divide_with_remainder(&g)?;
        debug_assert!(r.is_zero(), "gcd(f, f') divides f");
        Ok(q.into_monic())
    }

    /// `(1 + x)^n` with exact binomial coefficients.
    pub fn binomial_expansion(n: usize) -> ExactPolynomial {
        let coeffs = (0..=n)
            .map(|i| BigRational::from(BigInt::from(binomial(n, i))))
            .collect();
        ExactPolynomial::from_coefficients(coeffs)
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Text form `a_0 + a_1*x + ... + a_d*x^d` with rationals as `p/q`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let term = |c: &BigRational, i: usize| -> String {
            let coeff = if c.is_integer() {
                c.numer().to_string()
            } else {
                format!("{}/{}", c.numer(), c.denom())
            };
            match i {
                0 => coeff,
                1 => format!("{coeff}*x"),
                _ => format!("{coeff}*x^{i}"),
            }
        };
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| term(c, i))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl Add for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn add(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coefficient(i) + rhs.coefficient(i))
            .collect();
        ExactPolynomial::from_coefficients(coeffs)
    }
}

impl Sub for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn sub(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coefficient(i) - rhs.coefficient(i))
            .collect();
        ExactPolynomial::from_coefficients(coeffs)
    }
}

impl Neg for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn neg(self) -> ExactPolynomial {
        ExactPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn mul(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ExactPolynomial::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ExactPolynomial::from_coefficients(coeffs)
    }
}

/// The sign of a nonzero rational; leading coefficients use this.
pub(crate) fn rational_sign(q: &BigRational) -> i8 {
    debug_assert!(!q.is_zero());
    if q.is_positive() {
        1
    } else {
        -1
    }
}
