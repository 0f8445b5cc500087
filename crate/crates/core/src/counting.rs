//! Coefficient sequences of property generating polynomials, the classical
//! matching and chromatic polynomials, and the structural quantities read off
//! a hereditary sequence.
//!
//! Sequences are stored full length `0..=n` with trailing zeros retained, so
//! the index always equals the subset size.

use crate::graph::{write_graph6, BitIter, Graph, GraphError, VertexSet};
use crate::poly::{binomial, ExactPolynomial};
use crate::properties::{
    augmented_member, builtin_member, AugmentedProperty, BuiltinProperty, PropertyError,
    PropertySpec,
};
use num::{BigInt, BigUint, One, Zero};
use std::io::{self, Write};
use thiserror::Error;

/// Subset enumeration is 2^n; 24 keeps it to a few seconds.
pub const BRUTE_MAX_N: usize = 24;
/// The hereditary DFS cost is bounded by the enumerated family, not 2^n.
pub const HEREDITARY_MAX_N: usize = 40;
/// Deletion-contraction ceiling.
pub const CHROMATIC_MAX_N: usize = 10;
/// Domination counting by inclusion-exclusion over uncovered witnesses.
pub const DOMINATION_MAX_N: usize = 32;

#[derive(Debug, Error)]
pub enum CountError {
    #[error("{operation} supports graphs of order at most {ceiling}, got {n}")]
    OrderCeiling {
        operation: &'static str,
        ceiling: usize,
        n: usize,
    },
    #[error("'{0}' is not hereditary")]
    NotHereditary(String),
    #[error("'{0}' is not co-hereditary")]
    NotCoHereditary(String),
    #[error("the graph belongs to the property, so the structural quantities are undefined")]
    MemberGraph,
    #[error(transparent)]
    Property(#[from] PropertyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An exact nonnegative coefficient sequence tagged with its origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientSequence {
    pub values: Vec<BigUint>,
    pub property_tag: String,
    pub graph_tag: String,
}

impl CoefficientSequence {
    fn new(values: Vec<BigUint>, spec: &PropertySpec, g: &Graph) -> CoefficientSequence {
        CoefficientSequence {
            values,
            property_tag: spec.to_string(),
            graph_tag: write_graph6(g).unwrap_or_else(|_| String::from("?")),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The generating polynomial with these counts as coefficients.
    pub fn polynomial(&self) -> ExactPolynomial {
        ExactPolynomial::from_counts(&self.values)
    }

    /// CSV with header `i,c_i`, one row per index, exact decimal integers.
    pub fn write_csv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "i,c_i")?;
        for (i, c) in self.values.iter().enumerate() {
            writeln!(out, "{i},{c}")?;
        }
        Ok(())
    }
}

/// Membership of the subset `mask` under `spec`: induced-subgraph membership
/// for plain properties, pair membership for augmented ones.
fn member_within(spec: &PropertySpec, g: &Graph, mask: u64) -> bool {
    match spec {
        PropertySpec::Builtin(b) => builtin_member(*b, g, mask),
        PropertySpec::ForbiddenFamily(fam) => fam
            .graphs()
            .iter()
            .all(|h| !crate::graph::induced_embedding_exists(g, mask, h, None)),
        PropertySpec::ComplementOf(inner) => !member_within(inner, g, mask),
        PropertySpec::Augmented(a) => {
            augmented_member(*a, g, VertexSet::from_bits(mask)).expect("mask within range")
        }
    }
}

/// Exact counts by iterating all 2^n subsets; works for every property kind.
pub fn coeffs_brute(g: &Graph, spec: &PropertySpec) -> Result<CoefficientSequence, CountError> {
    let n = g.n();
    if n > BRUTE_MAX_N {
        return Err(CountError::OrderCeiling {
            operation: "coeffs_brute",
            ceiling: BRUTE_MAX_N,
            n,
        });
    }
    let mut counts = vec![0u64; n + 1];
    for mask in 0..(1u128 << n) as u64 {
        if member_within(spec, g, mask) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    Ok(CoefficientSequence::new(
        counts.into_iter().map(BigUint::from).collect(),
        spec,
        g,
    ))
}

/// The hereditary kinds, viewed uniformly by the subset-tree enumerator.
enum HereditaryView<'a> {
    Builtin(BuiltinProperty),
    Forbidden(&'a [Graph]),
}

impl HereditaryView<'_> {
    fn of(spec: &PropertySpec) -> Result<HereditaryView<'_>, CountError> {
        match spec {
            PropertySpec::Builtin(b) => Ok(HereditaryView::Builtin(*b)),
            PropertySpec::ForbiddenFamily(f) => Ok(HereditaryView::Forbidden(f.graphs())),
            other => Err(CountError::NotHereditary(other.to_string())),
        }
    }

    /// Given `G[s] ∈ A`, does `G[s ∪ {v}] ∈ A` still hold? Only the part of
    /// the condition that involves `v` needs checking.
    fn extends(&self, g: &Graph, s: u64, v: usize) -> bool {
        let nb = g.neighbors(v) & s;
        match self {
            HereditaryView::Builtin(BuiltinProperty::Edgeless) => nb == 0,
            HereditaryView::Builtin(BuiltinProperty::Clique) => nb == s,
            HereditaryView::Builtin(BuiltinProperty::Forest) => {
                // a cycle appears iff two neighbors of v lie in one component
                if nb.count_ones() <= 1 {
                    return true;
                }
                let mut rest = nb;
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    let component = g.component_within(s, u);
                    if (component & nb).count_ones() > 1 {
                        return false;
                    }
                    rest &= !component;
                }
                true
            }
            HereditaryView::Builtin(BuiltinProperty::Cluster) => {
                // any new induced P_3 goes through v: its neighborhood must be
                // a clique whose members have no other neighbors in s
                BitIter(nb).all(|u| {
                    nb & !g.neighbors(u) & !(1u64 << u) == 0 && g.neighbors(u) & s & !nb == 0
                })
            }
            HereditaryView::Forbidden(family) => {
                let extended = s | (1u64 << v);
                family
                    .iter()
                    .all(|h| !crate::graph::induced_embedding_exists(g, extended, h, Some(v)))
            }
        }
    }
}

/// Same output as [`coeffs_brute`] for hereditary specs, computed by a
/// depth-first subset tree that only extends sets still inside the property
/// (non-membership is inherited upward, so pruned branches are all failures).
pub fn coeffs_hereditary(
    g: &Graph,
    spec: &PropertySpec,
) -> Result<CoefficientSequence, CountError> {
    let n = g.n();
    if n > HEREDITARY_MAX_N {
        return Err(CountError::OrderCeiling {
            operation: "coeffs_hereditary",
            ceiling: HEREDITARY_MAX_N,
            n,
        });
    }
    let view = HereditaryView::of(spec)?;
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1; // the null graph belongs to every hereditary property

    fn extend(
        g: &Graph,
        view: &HereditaryView<'_>,
        s: u64,
        size: usize,
        start: usize,
        counts: &mut [u64],
    ) {
        for v in start..g.n() {
            if view.extends(g, s, v) {
                counts[size + 1] += 1;
                extend(g, view, s | (1u64 << v), size + 1, v + 1, counts);
            }
        }
    }

    extend(g, &view, 0, 0, 0, &mut counts);
    Ok(CoefficientSequence::new(
        counts.into_iter().map(BigUint::from).collect(),
        spec,
        g,
    ))
}

/// Counts for a co-hereditary spec via complementation:
/// `c_i = C(n, i) - b_i` where `b_i` counts the hereditary inner family.
pub fn coeffs_cohereditary(
    g: &Graph,
    spec: &PropertySpec,
) -> Result<CoefficientSequence, CountError> {
    let PropertySpec::ComplementOf(inner) = spec else {
        return Err(CountError::NotCoHereditary(spec.to_string()));
    };
    let n = g.n();
    let inner_counts = coeffs_hereditary(g, inner)?;
    let values = inner_counts
        .values
        .iter()
        .enumerate()
        .map(|(i, b)| binomial(n, i) - b)
        .collect();
    Ok(CoefficientSequence::new(values, spec, g))
}

/// Domination counts by inclusion-exclusion over sets of uncovered vertices.
///
/// A set S fails to dominate iff it avoids some closed neighborhood, so the
/// non-dominating count by size is an alternating sum of `C(n - |N[T]|, i)`
/// over the vertex sets T with `N[T] != V`. Those T form a small, monotone
/// family in dense graphs, which is what makes n = 24 Monte Carlo feasible.
pub fn domination_coeffs(g: &Graph) -> Result<CoefficientSequence, CountError> {
    let n = g.n();
    if n > DOMINATION_MAX_N {
        return Err(CountError::OrderCeiling {
            operation: "domination_coeffs",
            ceiling: DOMINATION_MAX_N,
            n,
        });
    }
    // signed[m] accumulates (-1)^{|T|+1} over T with n - |N[T]| = m > 0
    let mut signed = vec![0i64; n + 1];

    fn walk(g: &Graph, start: usize, covered: u64, size: usize, signed: &mut [i64]) {
        let full = g.vertex_mask();
        for v in start..g.n() {
            let next = covered | g.closed_neighborhood(v);
            if next == full {
                // supersets only shrink the complement further; they
                // contribute nothing beyond size 0
                continue;
            }
            let m = (full & !next).count_ones() as usize;
            signed[m] += if size % 2 == 0 { 1 } else { -1 };
            walk(g, v + 1, next, size + 1, signed);
        }
    }

    walk(g, 0, 0, 0, &mut signed);

    let mut values = Vec::with_capacity(n + 1);
    for i in 0..=n {
        if i == 0 {
            values.push(if n == 0 { BigUint::one() } else { BigUint::zero() });
            continue;
        }
        let mut count = BigInt::from(binomial(n, i));
        for (m, &c) in signed.iter().enumerate() {
            if c != 0 {
                count -= BigInt::from(c) * BigInt::from(binomial(m, i));
            }
        }
        let (sign, magnitude) = count.into_parts();
        assert!(sign != num::bigint::Sign::Minus, "counts are nonnegative");
        values.push(magnitude);
    }
    Ok(CoefficientSequence::new(
        values,
        &PropertySpec::Augmented(AugmentedProperty::Dominating),
        g,
    ))
}

/// Dispatches each property kind to its fastest exact counter.
pub fn coefficient_sequence(
    g: &Graph,
    spec: &PropertySpec,
) -> Result<CoefficientSequence, CountError> {
    match spec {
        PropertySpec::Builtin(_) | PropertySpec::ForbiddenFamily(_) => coeffs_hereditary(g, spec),
        PropertySpec::ComplementOf(_) => coeffs_cohereditary(g, spec),
        PropertySpec::Augmented(AugmentedProperty::Dominating) => domination_coeffs(g),
        PropertySpec::Augmented(AugmentedProperty::ZeroForcing) => coeffs_brute(g, spec),
    }
}

/// Matching counts `m_i` (number of i-edge matchings), padded to ⌊n/2⌋ + 1.
pub fn matching_coeffs(g: &Graph) -> Result<CoefficientSequence, CountError> {
    let n = g.n();
    if n > BRUTE_MAX_N {
        return Err(CountError::OrderCeiling {
            operation: "matching_coeffs",
            ceiling: BRUTE_MAX_N,
            n,
        });
    }

    // lowest vertex is either unmatched or paired with one of its neighbors
    fn walk(g: &Graph, mask: u64, size: usize, counts: &mut [u64]) {
        if mask == 0 {
            counts[size] += 1;
            return;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1u64 << v);
        walk(g, rest, size, counts);
        for u in BitIter(g.neighbors(v) & rest) {
            walk(g, rest & !(1u64 << u), size + 1, counts);
        }
    }

    let mut counts = vec![0u64; n / 2 + 1];
    walk(g, g.vertex_mask(), 0, &mut counts);
    Ok(CoefficientSequence {
        values: counts.into_iter().map(BigUint::from).collect(),
        property_tag: "matching".into(),
        graph_tag: write_graph6(g).unwrap_or_else(|_| String::from("?")),
    })
}

/// Chromatic polynomial coefficients (signed), by deletion-contraction with
/// shortcuts for forests and cliques.
pub fn chromatic_coeffs(g: &Graph) -> Result<Vec<BigInt>, CountError> {
    let n = g.n();
    if n > CHROMATIC_MAX_N {
        return Err(CountError::OrderCeiling {
            operation: "chromatic_coeffs",
            ceiling: CHROMATIC_MAX_N,
            n,
        });
    }

    fn falling_factorial(n: usize) -> ExactPolynomial {
        // x (x-1) ... (x-n+1)
        let mut acc = ExactPolynomial::one();
        for k in 0..n {
            let factor = ExactPolynomial::from_coefficients(vec![
                num::BigRational::from(BigInt::from(-(k as i64))),
                num::BigRational::one(),
            ]);
            acc = &acc * &factor;
        }
        acc
    }

    fn x_power_times_x_minus_one_power(components: usize, edges: usize) -> ExactPolynomial {
        let x = ExactPolynomial::from_integer_coefficients(&[0, 1]);
        let x_minus_one = ExactPolynomial::from_integer_coefficients(&[-1, 1]);
        let mut acc = ExactPolynomial::one();
        for _ in 0..components {
            acc = &acc * &x;
        }
        for _ in 0..edges {
            acc = &acc * &x_minus_one;
        }
        acc
    }

    fn contract(g: &Graph, u: usize, v: usize) -> Graph {
        // merge v into u, drop v, relabel the tail down by one
        let n = g.n();
        let map = |w: usize| if w > v { w - 1 } else { w };
        let mut edges = Vec::new();
        for (a, b) in g.edges() {
            let (a, b) = (
                if a == v { u } else { a },
                if b == v { u } else { b },
            );
            if a != b {
                edges.push((map(a), map(b)));
            }
        }
        Graph::from_edges(n - 1, &edges).expect("contraction stays simple")
    }

    fn chrom(g: &Graph) -> ExactPolynomial {
        let n = g.n();
        let e = g.edge_count();
        if g.is_acyclic_within(g.vertex_mask()) {
            let components = g.components_within(g.vertex_mask());
            return x_power_times_x_minus_one_power(components, e);
        }
        if e == n * (n - 1) / 2 {
            return falling_factorial(n);
        }
        let (u, v) = g.edges()[0];
        let mut deleted = g.clone();
        deleted_remove_edge(&mut deleted, u, v);
        &chrom(&deleted) - &chrom(&contract(g, u, v))
    }

    fn deleted_remove_edge(g: &mut Graph, u: usize, v: usize) {
        let edges: Vec<_> = g
            .edges()
            .into_iter()
            .filter(|&(a, b)| (a, b) != (u, v))
            .collect();
        *g = Graph::from_edges(g.n(), &edges).expect("deletion stays valid");
    }

    let poly = chrom(g);
    Ok((0..=n)
        .map(|i| {
            let c = poly.coefficient(i);
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect())
}

/// Structural quantities of a hereditary sequence for a non-member graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyStructure {
    /// Smallest subset size inducing a non-member.
    pub first_non_member_size: usize,
    /// Smallest number of vertices whose removal leaves a member.
    pub min_deletion_to_member: usize,
    /// `C(n, g) - c_g` at the first failing level; positive for non-members.
    pub deficiency: BigUint,
    /// Degree of the generating polynomial, `n - min_deletion_to_member`.
    pub degree: usize,
}

/// Reads the structure off a hereditary coefficient sequence: the first index
/// where `c_i < C(n, i)` and the last nonzero index are the two thresholds.
pub fn structure(g: &Graph, spec: &PropertySpec) -> Result<PolyStructure, CountError> {
    let seq = coeffs_hereditary(g, spec)?;
    structure_from_sequence(&seq.values)
}

pub fn structure_from_sequence(values: &[BigUint]) -> Result<PolyStructure, CountError> {
    let n = values.len() - 1;
    let mut first_gap = None;
    for (i, c) in values.iter().enumerate() {
        let bound = binomial(n, i);
        assert!(c <= &bound, "counts never exceed C(n, i)");
        if c < &bound {
            first_gap = Some(i);
            break;
        }
    }
    let Some(g_size) = first_gap else {
        return Err(CountError::MemberGraph);
    };
    let last_nonzero = values
        .iter()
        .rposition(|c| !c.is_zero())
        .expect("c_0 = 1 for hereditary sequences");
    // shape checks: full binomial prefix, zero tail
    for (i, c) in values.iter().enumerate() {
        if i < g_size {
            assert_eq!(c, &binomial(n, i));
        }
        if i > last_nonzero {
            assert!(c.is_zero());
        }
    }
    Ok(PolyStructure {
        first_non_member_size: g_size,
        min_deletion_to_member: n - last_nonzero,
        deficiency: binomial(n, g_size) - &values[g_size],
        degree: last_nonzero,
    })
}
