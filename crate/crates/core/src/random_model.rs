//! Exact expectations and tail bounds for subgraph counts in G(n,p).
//!
//! The zero-count tail bound is driven by the exponent sum over the
//! non-isomorphic edge-carrying subgraphs of the pattern; everything is kept
//! as exact rationals, and quantities of the form C * 2^q are compared by
//! clearing denominators into big-integer powers. Only report rendering
//! approximates.

use crate::graph::{
    automorphism_count, canonical_form, BitIter, Graph, GraphError,
};
use crate::poly::binomial;
use num::{BigInt, BigRational, BigUint, One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use thiserror::Error;

/// Pattern ceiling for the subgraph-class enumeration (2^{e} edge subsets).
pub const PATTERN_MAX_N: usize = 6;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("pattern graphs support order at most {ceiling}, got {n}")]
    PatternTooLarge { ceiling: usize, n: usize },
    #[error("the host order {n} is smaller than the pattern order {pattern}")]
    HostTooSmall { n: usize, pattern: usize },
    #[error("the tail bound needs 0 < p < 1, got {0}")]
    DegenerateProbability(String),
    #[error("probability {0} is outside [0, 1]")]
    ProbabilityOutOfRange(String),
    #[error("the pattern has no edges")]
    EdgelessPattern,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One isomorphism class of edge-carrying subgraphs of a pattern.
#[derive(Debug, Clone)]
pub struct SubgraphClassEntry {
    pub representative: Graph,
    /// Number of subgraphs of the pattern in this class (as edge sets;
    /// isolated vertices are stripped before classification).
    pub copies_in_pattern: u64,
    pub automorphisms: u64,
    pub vertex_count: usize,
    pub edge_count: usize,
}

/// Enumerates the non-isomorphic subgraphs of `h` with at least one edge.
///
/// A subgraph is a vertex subset plus an edge subset; stripping isolated
/// vertices first makes the class list finite and leaves exactly the
/// edge-carrying cores the expectation formula depends on, so classes are in
/// bijection with nonempty edge subsets of `h` up to isomorphism.
pub fn nonisomorphic_edge_subgraphs(h: &Graph) -> Result<Vec<SubgraphClassEntry>, ModelError> {
    if h.n() > PATTERN_MAX_N {
        return Err(ModelError::PatternTooLarge {
            ceiling: PATTERN_MAX_N,
            n: h.n(),
        });
    }
    let edges = h.edges();
    let mut classes: BTreeMap<Vec<u8>, SubgraphClassEntry> = BTreeMap::new();
    for mask in 1u64..(1 << edges.len()) {
        let chosen: Vec<(usize, usize)> = BitIter(mask).map(|i| edges[i]).collect();
        let mut vertices: Vec<usize> = chosen
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .collect();
        vertices.sort_unstable();
        vertices.dedup();
        let relabel = |w: usize| vertices.binary_search(&w).expect("endpoint present");
        let relabelled: Vec<(usize, usize)> = chosen
            .iter()
            .map(|&(u, v)| (relabel(u), relabel(v)))
            .collect();
        let core = Graph::from_edges(vertices.len(), &relabelled)?;
        let key = canonical_form(&core)?;
        match classes.get_mut(&key) {
            Some(entry) => entry.copies_in_pattern += 1,
            None => {
                let automorphisms = automorphism_count(&core)?;
                classes.insert(
                    key,
                    SubgraphClassEntry {
                        vertex_count: core.n(),
                        edge_count: core.edge_count(),
                        automorphisms,
                        copies_in_pattern: 1,
                        representative: core,
                    },
                );
            }
        }
    }
    Ok(classes.into_values().collect())
}

fn check_probability_open(p: &BigRational) -> Result<(), ModelError> {
    if p.is_negative() || p > &BigRational::one() {
        return Err(ModelError::ProbabilityOutOfRange(p.to_string()));
    }
    if p.is_zero() || p.is_one() {
        return Err(ModelError::DegenerateProbability(p.to_string()));
    }
    Ok(())
}

/// Expected number of copies of `pattern` in G(n,p):
/// `C(n, v) * v! / aut * p^e` with `v`, `e` the pattern's order and size.
pub fn expected_subgraph_count(
    pattern: &Graph,
    n: usize,
    p: &BigRational,
) -> Result<BigRational, ModelError> {
    if pattern.n() > n {
        return Err(ModelError::HostTooSmall {
            n,
            pattern: pattern.n(),
        });
    }
    if p.is_negative() || p > &BigRational::one() {
        return Err(ModelError::ProbabilityOutOfRange(p.to_string()));
    }
    let v = pattern.n();
    let factorial: BigUint = (1..=v as u64).map(BigUint::from).product();
    let placements = BigRational::from(BigInt::from(
        binomial(n, v) * factorial / automorphism_count(pattern)?,
    ));
    let mut edge_probability = BigRational::one();
    for _ in 0..pattern.edge_count() {
        edge_probability *= p;
    }
    Ok(placements * edge_probability)
}

/// The zero-count tail bound for a pattern `h` in G(n,p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JlrBound {
    /// Sum over subgraph classes of copies^2 over the expected count.
    pub exponent_sum: BigRational,
    /// `-1 / exponent_sum`: log2 of the bound on P(no copy of h).
    pub log2_probability_bound: BigRational,
}

pub fn jlr_bound(h: &Graph, n: usize, p: &BigRational) -> Result<JlrBound, ModelError> {
    check_probability_open(p)?;
    if h.n() > n {
        return Err(ModelError::HostTooSmall { n, pattern: h.n() });
    }
    if h.edge_count() == 0 {
        return Err(ModelError::EdgelessPattern);
    }
    let mut exponent_sum = BigRational::zero();
    for class in nonisomorphic_edge_subgraphs(h)? {
        let copies = BigRational::from(BigInt::from(class.copies_in_pattern));
        let expectation = expected_subgraph_count(&class.representative, n, p)?;
        exponent_sum += &copies * &copies / expectation;
    }
    let log2_probability_bound = -exponent_sum.recip();
    Ok(JlrBound {
        exponent_sum,
        log2_probability_bound,
    })
}

/// An exact value of the form `C(n, k) * 2^q` with rational `q <= 0`:
/// the union bound on the probability that some ⌈n/2⌉-subset induces an
/// `h`-free graph, with the tail exponent taken from [`jlr_bound`] on a
/// k-vertex random graph.
#[derive(Debug, Clone)]
pub struct HalfSetUnionBound {
    pub n: usize,
    pub k: usize,
    pub subset_count: BigUint,
    pub log2_tail: BigRational,
}

impl HalfSetUnionBound {
    /// Exact comparison of `subset_count * 2^{log2_tail}` against 1:
    /// with `log2_tail = -a/b`, this is `subset_count^b < 2^a`.
    pub fn is_less_than_one(&self) -> bool {
        self.compare_to_one() == Ordering::Less
    }

    pub fn compare_to_one(&self) -> Ordering {
        let (a, b) = negated_fraction(&self.log2_tail);
        let lhs = self.subset_count.pow(b);
        let rhs = BigUint::one() << a;
        lhs.cmp(&rhs)
    }

    /// Exact comparison of two bound values by clearing both exponents.
    pub fn compare(&self, other: &HalfSetUnionBound) -> Ordering {
        // self = C1 2^{-a1/b1}, other = C2 2^{-a2/b2}; compare
        // C1^{b1 b2} 2^{a2 b1} against C2^{b1 b2} 2^{a1 b2}
        let (a1, b1) = negated_fraction(&self.log2_tail);
        let (a2, b2) = negated_fraction(&other.log2_tail);
        let joint = b1.checked_mul(b2).expect("exponent denominators stay small");
        let lhs = self.subset_count.pow(joint) << (a2 * b1 as u64);
        let rhs = other.subset_count.pow(joint) << (a1 * b2 as u64);
        lhs.cmp(&rhs)
    }

    /// Floating-point rendering for reports; decisions never use this.
    pub fn approx_f64(&self) -> f64 {
        let count = self.subset_count.to_f64().unwrap_or(f64::INFINITY);
        count * pow2_approx(&self.log2_tail)
    }
}

/// Writes a nonpositive rational as `-a/b` with `a >= 0`, `b >= 1`.
fn negated_fraction(q: &BigRational) -> (u64, u32) {
    debug_assert!(!q.is_positive());
    let negated = -q;
    (
        negated.numer().to_u64().expect("exponent numerator fits"),
        negated.denom().to_u32().expect("exponent denominator fits"),
    )
}

/// Floating-point value of 2^q, for report rendering only.
pub fn pow2_approx(q: &BigRational) -> f64 {
    q.to_f64().map(f64::exp2).unwrap_or(0.0)
}

/// Decimal bounds `lower <= 2^q <= upper` with the given number of digits,
/// computed exactly by big-integer binary search (for q <= 0).
pub fn pow2_decimal_interval(q: &BigRational, digits: u32) -> (String, String) {
    debug_assert!(!q.is_positive());
    let (a, b) = negated_fraction(q);
    let scale = BigUint::from(10u32).pow(digits);
    // find the largest m with m^b * 2^a <= 10^{digits*b}
    let target = scale.pow(b);
    let mut low = BigUint::zero();
    // 2^a > 10^{digits*b} already forces m = 0; skip the search (and its
    // huge shifts) when the value underflows the digit budget
    let underflows = a as u128 > 4 * (digits as u128) * (b as u128) + 4;
    let mut high = if underflows {
        BigUint::one()
    } else {
        scale.clone() + BigUint::one()
    };
    while &low + BigUint::one() < high {
        let mid: BigUint = (&low + &high) >> 1;
        if mid.pow(b) << a <= target {
            low = mid;
        } else {
            high = mid;
        }
    }
    let render = |m: &BigUint| -> String {
        let digits_str = format!("{:0>width$}", m.to_string(), width = digits as usize + 1);
        let (int_part, frac_part) = digits_str.split_at(digits_str.len() - digits as usize);
        format!("{int_part}.{frac_part}")
    };
    let upper = &low + BigUint::one();
    (render(&low), render(&upper.min(scale)))
}

/// The union bound `C(n, k) * 2^{log2 tail}` with `k = ⌈n/2⌉`.
pub fn half_set_union_bound(
    h: &Graph,
    n: usize,
    p: &BigRational,
) -> Result<HalfSetUnionBound, ModelError> {
    let k = n.div_ceil(2);
    if h.n() > k {
        return Err(ModelError::HostTooSmall {
            n: k,
            pattern: h.n(),
        });
    }
    let tail = jlr_bound(h, k, p)?;
    Ok(HalfSetUnionBound {
        n,
        k,
        subset_count: binomial(n, k),
        log2_tail: tail.log2_probability_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{contains_subgraph, count_subgraph_copies, random_gnp};

    fn half() -> BigRational {
        BigRational::new(BigInt::from(1), BigInt::from(2))
    }

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn subgraph_classes_of_small_patterns() {
        let classes = nonisomorphic_edge_subgraphs(&Graph::complete(2)).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].copies_in_pattern, 1);
        assert_eq!(classes[0].automorphisms, 2);

        // P_3: two single edges and the path itself
        let classes = nonisomorphic_edge_subgraphs(&Graph::path(3)).unwrap();
        let summary: Vec<(usize, usize, u64)> = classes
            .iter()
            .map(|c| (c.vertex_count, c.edge_count, c.copies_in_pattern))
            .collect();
        assert_eq!(summary, vec![(2, 1, 2), (3, 2, 1)]);

        // K_3: three edges, three paths, one triangle
        let classes = nonisomorphic_edge_subgraphs(&Graph::complete(3)).unwrap();
        let summary: Vec<(usize, usize, u64)> = classes
            .iter()
            .map(|c| (c.vertex_count, c.edge_count, c.copies_in_pattern))
            .collect();
        assert_eq!(summary, vec![(2, 1, 3), (3, 2, 3), (3, 3, 1)]);
    }

    #[test]
    fn class_copies_conserve_edge_subset_counts() {
        // every nonempty edge subset lands in exactly one class
        for h in [Graph::complete(3), Graph::path(3), Graph::cycle(4)] {
            let classes = nonisomorphic_edge_subgraphs(&h).unwrap();
            let total: u64 = classes.iter().map(|c| c.copies_in_pattern).sum();
            assert_eq!(total, (1u64 << h.edge_count()) - 1);
        }
    }

    #[test]
    fn class_copies_match_the_copy_counter() {
        let h = Graph::complete(3);
        for class in nonisomorphic_edge_subgraphs(&h).unwrap() {
            assert_eq!(
                count_subgraph_copies(&class.representative, &h).unwrap(),
                class.copies_in_pattern
            );
        }
    }

    #[test]
    fn expected_counts() {
        // E[number of P_3 in G(3, 1/2)] = 3/4
        let value = expected_subgraph_count(&Graph::path(3), 3, &half()).unwrap();
        assert_eq!(value, rational(3, 4));

        // E[edges] = C(n,2) p
        for n in [2usize, 5, 9] {
            let value = expected_subgraph_count(&Graph::complete(2), n, &rational(1, 3)).unwrap();
            assert_eq!(
                value,
                BigRational::from(BigInt::from(binomial(n, 2))) * rational(1, 3)
            );
        }

        // K_3 at p = 1 in a 3-vertex host is surely there
        let value = expected_subgraph_count(&Graph::complete(3), 3, &rational(1, 1)).unwrap();
        assert_eq!(value, BigRational::one());

        assert!(expected_subgraph_count(&Graph::complete(3), 2, &half()).is_err());
    }

    #[test]
    fn expected_counts_match_brute_force_averages() {
        // oracle: average the copy count over all labelled host graphs at
        // p=1/2, for every pattern of order at most 3
        let patterns: Vec<Graph> = (0..=3)
            .flat_map(|n| crate::graph::enumerate_all_graphs(n).unwrap())
            .collect();
        for pattern in &patterns {
            for n in pattern.n()..=4 {
                let pair_count = n * n.saturating_sub(1) / 2;
                let pairs: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                    .collect();
                let mut total = 0u64;
                for mask in 0u64..(1 << pair_count) {
                    let edges: Vec<(usize, usize)> = BitIter(mask).map(|i| pairs[i]).collect();
                    let host = Graph::from_edges(n, &edges).unwrap();
                    total += count_subgraph_copies(pattern, &host).unwrap();
                }
                let average = rational(total as i64, 1 << pair_count);
                assert_eq!(
                    expected_subgraph_count(pattern, n, &half()).unwrap(),
                    average,
                    "pattern {pattern:?} host order {n}"
                );
            }
        }
    }

    #[test]
    fn jlr_bound_for_single_edges() {
        // K_2 in G(2, 1/2): exponent 1 / (1/2) = 2, bound -1/2
        let bound = jlr_bound(&Graph::complete(2), 2, &half()).unwrap();
        assert_eq!(bound.exponent_sum, rational(2, 1));
        assert_eq!(bound.log2_probability_bound, rational(-1, 2));
        // actual P(no edge) = 1/2 <= 2^{-1/2}
        assert!(0.5f64 <= pow2_approx(&bound.log2_probability_bound));

        // general n: exponent 2 / C(n,2), bound -C(n,2) / 2
        for n in [3usize, 5, 10] {
            let bound = jlr_bound(&Graph::complete(2), n, &half()).unwrap();
            let pairs = BigRational::from(BigInt::from(binomial(n, 2)));
            assert_eq!(bound.exponent_sum, rational(2, 1) / pairs.clone());
            assert_eq!(bound.log2_probability_bound, -pairs / rational(2, 1));
        }
    }

    #[test]
    fn jlr_bound_tightens_with_n() {
        let at_5 = jlr_bound(&Graph::complete(2), 5, &half()).unwrap();
        let at_10 = jlr_bound(&Graph::complete(2), 10, &half()).unwrap();
        assert!(at_10.log2_probability_bound < at_5.log2_probability_bound);

        assert!(jlr_bound(&Graph::complete(2), 4, &rational(0, 1)).is_err());
        assert!(jlr_bound(&Graph::complete(2), 4, &rational(1, 1)).is_err());
        assert!(jlr_bound(&Graph::edgeless(2).unwrap(), 4, &half()).is_err());
    }

    #[test]
    fn half_set_bound_small_case() {
        // n = 4, k = 2: C(4,2) * 2^{-1/2} ≈ 4.24, vacuous as expected
        let bound = half_set_union_bound(&Graph::complete(2), 4, &half()).unwrap();
        assert_eq!(bound.k, 2);
        assert_eq!(bound.subset_count, BigUint::from(6u32));
        assert_eq!(bound.log2_tail, rational(-1, 2));
        assert!((bound.approx_f64() - 4.242640687).abs() < 1e-6);
        assert!(!bound.is_less_than_one());
    }

    #[test]
    fn half_set_bound_exact_comparisons() {
        // evaluated exactly, the P_3 bound at n = 20 is still far above 1;
        // it first drops below 1 around n = 64 at p = 1/2
        let at_20 = half_set_union_bound(&Graph::path(3), 20, &half()).unwrap();
        assert!(!at_20.is_less_than_one());
        assert!(at_20.approx_f64() > 1.0);
        let at_64 = half_set_union_bound(&Graph::path(3), 64, &half()).unwrap();
        assert!(at_64.is_less_than_one());
        let at_62 = half_set_union_bound(&Graph::path(3), 62, &half()).unwrap();
        assert!(!at_62.is_less_than_one());
    }

    #[test]
    fn half_set_bound_decreases_along_even_orders() {
        // K_2 pattern: the bound is C(n, n/2) 2^{-C(n/2,2)/2}, decreasing in
        // steps of two from n = 10 (consecutive n alternate because k jumps
        // only at even n)
        let values: Vec<HalfSetUnionBound> = (5..=12)
            .map(|i| half_set_union_bound(&Graph::complete(2), 2 * i, &half()).unwrap())
            .collect();
        for pair in values.windows(2) {
            assert_eq!(pair[1].compare(&pair[0]), Ordering::Less);
        }
        // spot check the first value: C(10,5) / 2^5 = 252/32
        assert!((values[0].approx_f64() - 7.875).abs() < 1e-9);
    }

    #[test]
    fn decimal_interval_rendering() {
        let (low, high) = pow2_decimal_interval(&rational(-1, 2), 6);
        // 2^{-1/2} = 0.7071067...
        assert_eq!(low, "0.707106");
        assert_eq!(high, "0.707107");
        let (low, high) = pow2_decimal_interval(&rational(-3, 1), 4);
        assert_eq!(low, "0.1250");
        assert_eq!(high, "0.1251");
        let (low, _) = pow2_decimal_interval(&BigRational::zero(), 3);
        assert_eq!(low, "1.000");
    }

    #[test]
    fn empirical_zero_probability_respects_the_bound() {
        // smoke version of the acceptance check at n = 5
        let h = Graph::path(3);
        let bound = jlr_bound(&h, 5, &half()).unwrap();
        let samples = 2000u64;
        let zeros = (0..samples)
            .filter(|&i| !contains_subgraph(&random_gnp(5, &half(), 11, i).unwrap(), &h))
            .count();
        let empirical = zeros as f64 / samples as f64;
        let limit = pow2_approx(&bound.log2_probability_bound);
        let standard_error = (empirical * (1.0 - empirical) / samples as f64).sqrt();
        assert!(
            empirical <= limit + 3.0 * standard_error,
            "empirical {empirical} vs bound {limit}"
        );
    }
}
