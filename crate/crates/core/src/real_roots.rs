//! Exact real-rootedness decisions via Sturm sequences.
//!
//! The chain is F_0 = f, F_1 = f', F_i = -remainder(F_{i-2}, F_{i-1}); the
//! difference of sign variations at -∞ and +∞ counts distinct real roots.
//! Multiplicities are handled by deciding on the squarefree part. All
//! remainders are exact rationals; there is no pseudo-remainder scaling, which
//! keeps coefficients honest at the degrees (≤ 64) used here.

use crate::counting::{coeffs_hereditary, structure_from_sequence, CountError};
use crate::graph::Graph;
use crate::poly::{rational_sign, ExactPolynomial, PolyError};
use crate::properties::PropertySpec;
use num::{BigInt, BigRational, BigUint};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RealRootError {
    #[error("the zero polynomial has no Sturm sequence")]
    ZeroPolynomial,
    #[error("constant polynomials have no Sturm sequence")]
    ConstantPolynomial,
    #[error("the criterion needs a squarefree input; take the squarefree part first")]
    NonSquarefree,
    #[error("the criterion needs a positive leading coefficient")]
    NonPositiveLeading,
    #[error("the graph belongs to the property; the remainder diagnostic is undefined")]
    MemberGraph,
    #[error("the first Sturm remainder vanished; the diagnostic quantities are undefined")]
    DegenerateRemainder,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Count(#[from] CountError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    fn of(q: &BigRational) -> Sign {
        if rational_sign(q) > 0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// Which end of the real line sign variations are taken at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Infinity {
    Positive,
    Negative,
}

#[derive(Debug, Clone)]
pub struct SturmSequence {
    pub polys: Vec<ExactPolynomial>,
    pub degrees: Vec<usize>,
    pub leading_signs: Vec<Sign>,
}

/// The canonical Sturm sequence of `f` (degree >= 1). It stops when the next
/// remainder is zero; the last entry is gcd(f, f') up to a constant.
pub fn sturm_sequence(f: &ExactPolynomial) -> Result<SturmSequence, RealRootError> {
    let degree = f.degree().ok_or(RealRootError::ZeroPolynomial)?;
    if degree == 0 {
        return Err(RealRootError::ConstantPolynomial);
    }
    let mut polys = vec![f.clone(), f.derivative()];
    loop {
        let k = polys.len();
        let (_, remainder) = polys[k - 2].divide_with_remainder(&polys[k - 1])?;
        if remainder.is_zero() {
            break;
        }
        polys.push(-&remainder);
    }
    let degrees = polys
        .iter()
        .map(|p| p.degree().expect("sequence entries are nonzero"))
        .collect();
    let leading_signs = polys
        .iter()
        .map(|p| Sign::of(p.leading_coefficient().expect("nonzero")))
        .collect();
    Ok(SturmSequence {
        polys,
        degrees,
        leading_signs,
    })
}

/// Number of sign changes of the sequence at ±∞: the sign of F_i there is its
/// leading sign, negated at -∞ when the degree is odd.
pub fn sign_variations_at_infinity(seq: &SturmSequence, direction: Infinity) -> usize {
    let signs: Vec<Sign> = seq
        .degrees
        .iter()
        .zip(&seq.leading_signs)
        .map(|(&d, &s)| match direction {
            Infinity::Positive => s,
            Infinity::Negative => {
                if d % 2 == 1 {
                    s.flipped()
                } else {
                    s
                }
            }
        })
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots, by Sturm's count on the squarefree part.
pub fn count_distinct_real_roots(f: &ExactPolynomial) -> Result<usize, RealRootError> {
    let degree = f.degree().ok_or(RealRootError::ZeroPolynomial)?;
    if degree == 0 {
        return Ok(0);
    }
    let squarefree = f.squarefree_part()?;
    let seq = sturm_sequence(&squarefree)?;
    let at_minus = sign_variations_at_infinity(&seq, Infinity::Negative);
    let at_plus = sign_variations_at_infinity(&seq, Infinity::Positive);
    Ok(at_minus - at_plus)
}

/// All roots real (with multiplicity): the squarefree part has as many
/// distinct real roots as its degree. Constants are vacuously real-rooted.
pub fn is_real_rooted(f: &ExactPolynomial) -> Result<bool, RealRootError> {
    let degree = f.degree().ok_or(RealRootError::ZeroPolynomial)?;
    if degree == 0 {
        return Ok(true);
    }
    let squarefree = f.squarefree_part()?;
    let sf_degree = squarefree.degree().expect("nonconstant");
    Ok(count_distinct_real_roots(&squarefree)? == sf_degree)
}

/// Diagnostics for the degree-gap criterion on a squarefree polynomial with
/// positive leading coefficient: real-rooted iff every entry of the Sturm
/// sequence has a positive leading coefficient and consecutive degrees drop
/// by exactly one.
#[derive(Debug, Clone)]
pub struct BrownReport {
    pub holds: bool,
    pub degrees: Vec<usize>,
    pub leading_signs: Vec<Sign>,
    /// First index with a negative leading coefficient, if any.
    pub negative_leading_at: Option<usize>,
    /// First index i where `d_i - d_{i+1} != 1`, if any.
    pub degree_gap_at: Option<usize>,
}

pub fn brown_criterion(f: &ExactPolynomial) -> Result<BrownReport, RealRootError> {
    let degree = f.degree().ok_or(RealRootError::ZeroPolynomial)?;
    if degree == 0 {
        return Err(RealRootError::ConstantPolynomial);
    }
    if rational_sign(f.leading_coefficient().expect("nonzero")) < 0 {
        return Err(RealRootError::NonPositiveLeading);
    }
    let seq = sturm_sequence(f)?;
    if *seq.degrees.last().expect("nonempty") > 0 {
        // the chain stopped at a positive-degree gcd, so f has repeated roots
        return Err(RealRootError::NonSquarefree);
    }
    let negative_leading_at = seq.leading_signs.iter().position(|&s| s == Sign::Negative);
    let degree_gap_at = seq
        .degrees
        .windows(2)
        .position(|w| w[0] - w[1] != 1);
    Ok(BrownReport {
        holds: negative_leading_at.is_none() && degree_gap_at.is_none(),
        degrees: seq.degrees,
        leading_signs: seq.leading_signs,
        negative_leading_at,
        degree_gap_at,
    })
}

/// The Sturm-remainder shape of a reversed hereditary generating polynomial
/// for a non-member graph: the first remainder drops from degree n-1 straight
/// to degree n-g with leading coefficient -αg/n, a gap of g-1 >= 2 whenever
/// the first failing subset size g is at least 3.
#[derive(Debug, Clone)]
pub struct RemainderDiagnostic {
    pub n: usize,
    /// Smallest subset size inducing a non-member.
    pub first_non_member_size: usize,
    pub deficiency: BigUint,
    /// Degree of the derivative F_1 (always n - 1).
    pub derivative_degree: usize,
    /// Degree of the first remainder (F_2 up to sign).
    pub remainder_degree: usize,
    pub remainder_leading: BigRational,
    pub expected_leading: BigRational,
    pub degree_matches: bool,
    pub leading_matches: bool,
    pub degree_gap: usize,
    pub gap_at_least_two: bool,
}

impl RemainderDiagnostic {
    pub fn all_pass(&self) -> bool {
        self.degree_matches && self.leading_matches && self.gap_at_least_two
    }
}

pub fn remainder_diagnostic(
    g: &Graph,
    spec: &PropertySpec,
) -> Result<RemainderDiagnostic, RealRootError> {
    let seq = coeffs_hereditary(g, spec)?;
    let st = match structure_from_sequence(&seq.values) {
        Ok(st) => st,
        Err(CountError::MemberGraph) => return Err(RealRootError::MemberGraph),
        Err(e) => return Err(e.into()),
    };
    let n = g.n();
    let f0 = seq.polynomial().reverse(n)?;
    debug_assert_eq!(f0.degree(), Some(n), "c_0 = 1 keeps the reversal at degree n");
    let f1 = f0.derivative();
    let derivative_degree = f1.degree().expect("degree n-1");
    let (_, remainder) = f0.divide_with_remainder(&f1)?;
    let remainder_degree = remainder
        .degree()
        .ok_or(RealRootError::DegenerateRemainder)?;
    let g_size = st.first_non_member_size;
    let expected_leading = BigRational::new(
        -BigInt::from(st.deficiency.clone()) * BigInt::from(g_size),
        BigInt::from(n),
    );
    let remainder_leading = remainder
        .leading_coefficient()
        .expect("nonzero remainder")
        .clone();
    let degree_matches = remainder_degree == n - g_size;
    let leading_matches = remainder_leading == expected_leading;
    let degree_gap = derivative_degree - remainder_degree;
    Ok(RemainderDiagnostic {
        n,
        first_non_member_size: g_size,
        deficiency: st.deficiency,
        derivative_degree,
        remainder_degree,
        remainder_leading,
        expected_leading,
        degree_matches,
        leading_matches,
        degree_gap,
        gap_at_least_two: degree_gap == g_size - 1 && degree_gap >= 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::coeffs_brute;
    use crate::graph::enumerate_all_graphs;
    use crate::properties::is_member;
    use rand::prelude::*;

    fn int_poly(coeffs: &[i64]) -> ExactPolynomial {
        ExactPolynomial::from_integer_coefficients(coeffs)
    }

    #[test]
    fn sturm_sequence_examples() {
        // x^2 - 1 -> [x^2 - 1, 2x, 1]
        let seq = sturm_sequence(&int_poly(&[-1, 0, 1])).unwrap();
        assert_eq!(seq.degrees, vec![2, 1, 0]);
        assert_eq!(seq.polys[2], int_poly(&[1]));

        // x^3 + 3x^2 + 3x -> [f, 3x^2 + 6x + 3, 1], degrees [3, 2, 0]
        let seq = sturm_sequence(&int_poly(&[0, 3, 3, 1])).unwrap();
        assert_eq!(seq.degrees, vec![3, 2, 0]);
        assert_eq!(seq.polys[1], int_poly(&[3, 6, 3]));
        assert_eq!(seq.polys[2], int_poly(&[1]));

        // (1+x)^2 terminates early at its derivative
        let seq = sturm_sequence(&int_poly(&[1, 2, 1])).unwrap();
        assert_eq!(seq.degrees, vec![2, 1]);

        assert!(matches!(
            sturm_sequence(&int_poly(&[5])),
            Err(RealRootError::ConstantPolynomial)
        ));
        assert!(matches!(
            sturm_sequence(&ExactPolynomial::zero()),
            Err(RealRootError::ZeroPolynomial)
        ));
    }

    #[test]
    fn sturm_last_entry_is_gcd_up_to_constant() {
        let f = &int_poly(&[1, 1]) * &(&int_poly(&[1, 1]) * &int_poly(&[-2, 1]));
        let seq = sturm_sequence(&f).unwrap();
        let last = seq.polys.last().unwrap();
        let gcd = ExactPolynomial::gcd(&f, &f.derivative()).unwrap();
        let (q, r) = last.divide_with_remainder(&gcd).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.degree(), Some(0));
    }

    #[test]
    fn sign_variation_examples() {
        let seq = sturm_sequence(&int_poly(&[-1, 0, 1])).unwrap();
        assert_eq!(sign_variations_at_infinity(&seq, Infinity::Negative), 2);
        assert_eq!(sign_variations_at_infinity(&seq, Infinity::Positive), 0);

        let seq = sturm_sequence(&int_poly(&[0, 3, 3, 1])).unwrap();
        assert_eq!(sign_variations_at_infinity(&seq, Infinity::Negative), 1);
        assert_eq!(sign_variations_at_infinity(&seq, Infinity::Positive), 0);

        // any degree-1 polynomial has variation difference 1
        for coeffs in [[3, 2], [-1, 5], [0, -4]] {
            let seq = sturm_sequence(&int_poly(&coeffs)).unwrap();
            let diff = sign_variations_at_infinity(&seq, Infinity::Negative)
                - sign_variations_at_infinity(&seq, Infinity::Positive);
            assert_eq!(diff, 1);
        }
    }

    #[test]
    fn distinct_root_counts() {
        assert_eq!(count_distinct_real_roots(&int_poly(&[-1, 0, 1])).unwrap(), 2);
        assert_eq!(count_distinct_real_roots(&int_poly(&[0, 3, 3, 1])).unwrap(), 1);
        // (1+x)^3 has the single distinct root -1
        let cube = &(&int_poly(&[1, 1]) * &int_poly(&[1, 1])) * &int_poly(&[1, 1]);
        assert_eq!(count_distinct_real_roots(&cube).unwrap(), 1);
        assert_eq!(count_distinct_real_roots(&int_poly(&[7])).unwrap(), 0);
    }

    #[test]
    fn root_counts_add_over_coprime_factors() {
        // disjoint constructed roots: (x-1)(x-2) and x(x-3) share nothing
        let f = &int_poly(&[-1, 1]) * &int_poly(&[-2, 1]);
        let g = &int_poly(&[0, 1]) * &int_poly(&[-3, 1]);
        let product = &f * &g;
        assert_eq!(
            count_distinct_real_roots(&product).unwrap(),
            count_distinct_real_roots(&f).unwrap() + count_distinct_real_roots(&g).unwrap()
        );
        // one shared root: (x-1)(x-2) and (x-2)(x-5)
        let h = &int_poly(&[-2, 1]) * &int_poly(&[-5, 1]);
        let product = &f * &h;
        assert_eq!(count_distinct_real_roots(&product).unwrap(), 3);
    }

    #[test]
    fn real_rootedness_examples() {
        for n in [1usize, 2, 5, 9] {
            assert!(is_real_rooted(&ExactPolynomial::binomial_expansion(n)).unwrap());
        }
        assert!(!is_real_rooted(&int_poly(&[1, 3, 3])).unwrap()); // disc < 0
        assert!(is_real_rooted(&int_poly(&[1, 4, 2])).unwrap()); // disc > 0
        assert!(is_real_rooted(&int_poly(&[42])).unwrap());
        assert!(is_real_rooted(&ExactPolynomial::binomial_expansion(0)).unwrap());
    }

    #[test]
    fn brown_criterion_examples() {
        let report = brown_criterion(&int_poly(&[-1, 0, 1])).unwrap();
        assert!(report.holds);
        assert_eq!(report.degrees, vec![2, 1, 0]);

        // degree gap 2 -> 0
        let report = brown_criterion(&int_poly(&[0, 3, 3, 1])).unwrap();
        assert!(!report.holds);
        assert_eq!(report.degree_gap_at, Some(1));
        assert_eq!(report.negative_leading_at, None);

        // x^2 + 1: F_2 = -1 has a negative leading coefficient
        let report = brown_criterion(&int_poly(&[1, 0, 1])).unwrap();
        assert!(!report.holds);
        assert_eq!(report.negative_leading_at, Some(2));

        assert!(matches!(
            brown_criterion(&int_poly(&[1, 2, 1])),
            Err(RealRootError::NonSquarefree)
        ));
        assert!(matches!(
            brown_criterion(&int_poly(&[1, -1, 0, -1])),
            Err(RealRootError::NonPositiveLeading)
        ));
    }

    #[test]
    fn brown_agrees_with_sturm_on_random_squarefree_polynomials() {
        let mut rng = StdRng::seed_from_u64(2024);
        let mut tested = 0;
        while tested < 1000 {
            let degree = rng.random_range(1..=8usize);
            let mut coeffs: Vec<i64> = (0..degree).map(|_| rng.random_range(-9..=9)).collect();
            coeffs.push(rng.random_range(1..=9)); // positive leading
            let f = int_poly(&coeffs);
            let squarefree = f.squarefree_part().unwrap();
            if squarefree.degree() == Some(0) {
                continue;
            }
            let report = brown_criterion(&squarefree).unwrap();
            assert_eq!(
                report.holds,
                is_real_rooted(&squarefree).unwrap(),
                "{squarefree:?}"
            );
            tested += 1;
        }
    }

    #[test]
    fn reversal_preserves_real_rootedness() {
        let mut rng = StdRng::seed_from_u64(4096);
        for _ in 0..500 {
            let degree = rng.random_range(1..=8usize);
            let mut coeffs: Vec<i64> = (0..degree).map(|_| rng.random_range(-6..=6)).collect();
            coeffs.push(*[-3i64, -2, -1, 1, 2, 3].choose(&mut rng).unwrap());
            let f = int_poly(&coeffs);
            let d = f.degree().unwrap();
            for n in [d, d + 1, d + 3] {
                let reversed = f.reverse(n).unwrap();
                assert_eq!(
                    is_real_rooted(&f).unwrap(),
                    is_real_rooted(&reversed).unwrap(),
                    "{f:?} reversed at {n}"
                );
            }
        }
    }

    #[test]
    fn high_degree_decisions_stay_exact() {
        // (1+x)^24 (x^2+1): one conjugate pair among many real roots
        let mut f = ExactPolynomial::binomial_expansion(24);
        f = &f * &int_poly(&[1, 0, 1]);
        assert!(!is_real_rooted(&f).unwrap());
        assert_eq!(count_distinct_real_roots(&f).unwrap(), 1);

        // a product of 12 distinct linear factors is real-rooted
        let mut g = ExactPolynomial::one();
        for r in 1..=12i64 {
            g = &g * &int_poly(&[-r, 1]);
        }
        assert!(is_real_rooted(&g).unwrap());
        assert_eq!(count_distinct_real_roots(&g).unwrap(), 12);
        let report = brown_criterion(&g).unwrap();
        assert!(report.holds);
        assert_eq!(report.degrees, (0..=12).rev().collect::<Vec<_>>());
    }

    #[test]
    fn member_graphs_give_binomial_polynomials() {
        let forest = PropertySpec::parse("forest").unwrap();
        for n in 1..=5 {
            for g in enumerate_all_graphs(n).unwrap() {
                if is_member(&forest, &g).unwrap() {
                    let seq = coeffs_hereditary(&g, &forest).unwrap();
                    assert_eq!(seq.polynomial(), ExactPolynomial::binomial_expansion(n));
                    assert!(is_real_rooted(&seq.polynomial()).unwrap());
                }
            }
        }
    }

    #[test]
    fn real_rootedness_matches_membership_on_small_graphs() {
        for text in ["forest", "cluster"] {
            let spec = PropertySpec::parse(text).unwrap();
            for n in 1..=5 {
                for g in enumerate_all_graphs(n).unwrap() {
                    let seq = coeffs_hereditary(&g, &spec).unwrap();
                    assert_eq!(
                        is_real_rooted(&seq.polynomial()).unwrap(),
                        is_member(&spec, &g).unwrap(),
                        "{text} {g:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn remainder_diagnostic_for_the_triangle() {
        let forest = PropertySpec::parse("forest").unwrap();
        let diag = remainder_diagnostic(&Graph::cycle(3), &forest).unwrap();
        assert_eq!((diag.n, diag.first_non_member_size), (3, 3));
        assert_eq!((diag.derivative_degree, diag.remainder_degree), (2, 0));
        assert_eq!(diag.remainder_leading, BigRational::from(BigInt::from(-1)));
        assert_eq!(diag.expected_leading, BigRational::from(BigInt::from(-1)));
        assert!(diag.all_pass());

        let cluster = PropertySpec::parse("cluster").unwrap();
        let diag = remainder_diagnostic(&Graph::path(3), &cluster).unwrap();
        assert_eq!((diag.derivative_degree, diag.remainder_degree), (2, 0));
        assert!(diag.all_pass());
    }

    #[test]
    fn remainder_diagnostic_for_the_four_cycle() {
        // brute-force the counts first, then check the diagnostic against them
        let forest = PropertySpec::parse("forest").unwrap();
        let seq = coeffs_brute(&Graph::cycle(4), &forest).unwrap();
        let values: Vec<u64> = seq.values.iter().map(|v| u64::try_from(v).unwrap()).collect();
        assert_eq!(values, vec![1, 4, 6, 4, 0]);

        let diag = remainder_diagnostic(&Graph::cycle(4), &forest).unwrap();
        assert_eq!(diag.first_non_member_size, 4);
        assert_eq!(diag.remainder_degree, 0);
        assert_eq!(diag.degree_gap, 3);
        assert!(diag.all_pass());
    }

    #[test]
    fn remainder_diagnostic_rejects_members() {
        let forest = PropertySpec::parse("forest").unwrap();
        assert!(matches!(
            remainder_diagnostic(&Graph::path(4), &forest),
            Err(RealRootError::MemberGraph)
        ));
    }
}
