//! Graph properties and augmented graph properties.
//!
//! A [`PropertySpec`] names a family of graphs (or of graph/vertex-set pairs)
//! and is the vocabulary every counting and experiment routine speaks. The
//! order-0 null graph belongs to every hereditary property, so coefficient
//! sequences of hereditary properties always start with c_0 = 1.

use crate::graph::{canonical_form, contains_induced, parse_graph6, BitIter, Graph, GraphError, VertexSet};
use std::fmt;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PropertyError {
    #[error("augmented property '{0}' needs a distinguished vertex set; use augmented_member")]
    AugmentedNeedsSet(String),
    #[error("complement wraps only hereditary specs, got '{0}'")]
    ComplementOfNonHereditary(String),
    #[error("forbidden family members need at least one vertex")]
    EmptyForbiddenGraph,
    #[error("unknown property '{0}'; expected forest|edgeless|clique|cluster|forb:<path>|co:<spec>|dom|zf")]
    UnknownProperty(String),
    #[error("monotonicity check supports graphs of order at most {ceiling}, got {n}")]
    OrderCeiling { ceiling: usize, n: usize },
    #[error("cannot read forbidden family from {path}: {reason}")]
    ForbiddenFile { path: String, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinProperty {
    /// No edges at all.
    Edgeless,
    /// Every pair of vertices adjacent.
    Clique,
    /// No cycle.
    Forest,
    /// Disjoint union of cliques: no induced P_3.
    Cluster,
}

impl BuiltinProperty {
    pub fn name(self) -> &'static str {
        match self {
            BuiltinProperty::Edgeless => "edgeless",
            BuiltinProperty::Clique => "clique",
            BuiltinProperty::Forest => "forest",
            BuiltinProperty::Cluster => "cluster",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AugmentedProperty {
    /// (G, S) with S a dominating set.
    Dominating,
    /// (G, S) with S a zero forcing set.
    ZeroForcing,
}

impl AugmentedProperty {
    pub fn name(self) -> &'static str {
        match self {
            AugmentedProperty::Dominating => "dom",
            AugmentedProperty::ZeroForcing => "zf",
        }
    }
}

/// A family of pairwise non-isomorphic forbidden induced subgraphs.
#[derive(Debug, Clone)]
pub struct ForbiddenFamily {
    graphs: Vec<Graph>,
    min_order: usize,
}

impl ForbiddenFamily {
    /// Deduplicates isomorphic members; every member needs n >= 1.
    pub fn new(graphs: Vec<Graph>) -> Result<ForbiddenFamily, PropertyError> {
        let mut seen = std::collections::BTreeSet::new();
        let mut kept = Vec::new();
        for g in graphs {
            if g.n() == 0 {
                return Err(PropertyError::EmptyForbiddenGraph);
            }
            if seen.insert(canonical_form(&g)?) {
                kept.push(g);
            }
        }
        let min_order = kept.iter().map(Graph::n).min().unwrap_or(0);
        Ok(ForbiddenFamily {
            graphs: kept,
            min_order,
        })
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    /// The order of the smallest member (0 for the empty family).
    pub fn min_order(&self) -> usize {
        self.min_order
    }
}

#[derive(Debug, Clone)]
pub enum PropertySpec {
    Builtin(BuiltinProperty),
    ForbiddenFamily(ForbiddenFamily),
    ComplementOf(Box<PropertySpec>),
    Augmented(AugmentedProperty),
}

impl PropertySpec {
    pub fn builtin(b: BuiltinProperty) -> PropertySpec {
        PropertySpec::Builtin(b)
    }

    /// Wraps a hereditary spec; anything else is refused.
    pub fn complement_of(inner: PropertySpec) -> Result<PropertySpec, PropertyError> {
        if !inner.is_hereditary() {
            return Err(PropertyError::ComplementOfNonHereditary(inner.to_string()));
        }
        Ok(PropertySpec::ComplementOf(Box::new(inner)))
    }

    pub fn is_hereditary(&self) -> bool {
        matches!(
            self,
            PropertySpec::Builtin(_) | PropertySpec::ForbiddenFamily(_)
        )
    }

    pub fn is_cohereditary(&self) -> bool {
        matches!(self, PropertySpec::ComplementOf(_))
    }

    pub fn is_augmented(&self) -> bool {
        matches!(self, PropertySpec::Augmented(_))
    }

    /// Non-trivial: some graph belongs to the family and some graph does not.
    /// (Augmented kinds are non-trivial as pair families.)
    pub fn is_nontrivial(&self) -> bool {
        match self {
            PropertySpec::Builtin(_) | PropertySpec::Augmented(_) => true,
            PropertySpec::ForbiddenFamily(f) => !f.graphs.is_empty(),
            PropertySpec::ComplementOf(inner) => inner.is_nontrivial(),
        }
    }

    /// Parses the property DSL: `forest`, `edgeless`, `clique`, `cluster`,
    /// `forb:<path.g6>` (one graph6 per line), `co:<spec>`, `dom`, `zf`.
    pub fn parse(text: &str) -> Result<PropertySpec, PropertyError> {
        match text {
            "edgeless" => Ok(PropertySpec::Builtin(BuiltinProperty::Edgeless)),
            "clique" => Ok(PropertySpec::Builtin(BuiltinProperty::Clique)),
            "forest" => Ok(PropertySpec::Builtin(BuiltinProperty::Forest)),
            "cluster" => Ok(PropertySpec::Builtin(BuiltinProperty::Cluster)),
            "dom" => Ok(PropertySpec::Augmented(AugmentedProperty::Dominating)),
            "zf" => Ok(PropertySpec::Augmented(AugmentedProperty::ZeroForcing)),
            _ => {
                if let Some(inner) = text.strip_prefix("co:") {
                    return PropertySpec::complement_of(PropertySpec::parse(inner)?);
                }
                if let Some(path) = text.strip_prefix("forb:") {
                    return PropertySpec::forbidden_from_file(Path::new(path));
                }
                Err(PropertyError::UnknownProperty(text.to_string()))
            }
        }
    }

    /// Loads a forbidden family from a file of graph6 lines.
    pub fn forbidden_from_file(path: &Path) -> Result<PropertySpec, PropertyError> {
        let text = std::fs::read_to_string(path).map_err(|e| PropertyError::ForbiddenFile {
            path: path.display().to_string(),
            reason: e.to_string(),
        })?;
        let mut graphs = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            graphs.push(parse_graph6(line)?);
        }
        Ok(PropertySpec::ForbiddenFamily(ForbiddenFamily::new(graphs)?))
    }
}

impl fmt::Display for PropertySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PropertySpec::Builtin(b) => write!(f, "{}", b.name()),
            PropertySpec::ForbiddenFamily(fam) => {
                let names: Vec<String> = fam
                    .graphs
                    .iter()
                    .map(|g| crate::graph::write_graph6(g).unwrap_or_else(|_| "?".into()))
                    .collect();
                write!(f, "forb[{}]", names.join(","))
            }
            PropertySpec::ComplementOf(inner) => write!(f, "co:{inner}"),
            PropertySpec::Augmented(a) => write!(f, "{}", a.name()),
        }
    }
}

/// Membership of `g` in a plain (non-augmented) property.
///
/// The null graph belongs to every hereditary spec and to no co-hereditary
/// spec.
pub fn is_member(spec: &PropertySpec, g: &Graph) -> Result<bool, PropertyError> {
    match spec {
        PropertySpec::Builtin(b) => Ok(builtin_member(*b, g, g.vertex_mask())),
        PropertySpec::ForbiddenFamily(fam) => {
            Ok(fam.graphs.iter().all(|h| !contains_induced(g, h)))
        }
        PropertySpec::ComplementOf(inner) => Ok(!is_member(inner, g)?),
        PropertySpec::Augmented(a) => Err(PropertyError::AugmentedNeedsSet(a.name().into())),
    }
}

/// Builtin membership of the subgraph induced by `mask`, without building it.
pub(crate) fn builtin_member(b: BuiltinProperty, g: &Graph, mask: u64) -> bool {
    match b {
        BuiltinProperty::Edgeless => BitIter(mask).all(|v| g.neighbors(v) & mask == 0),
        BuiltinProperty::Clique => {
            BitIter(mask).all(|v| g.neighbors(v) & mask == mask & !(1u64 << v))
        }
        BuiltinProperty::Forest => g.is_acyclic_within(mask),
        BuiltinProperty::Cluster => BitIter(mask).all(|v| {
            let nb = g.neighbors(v) & mask;
            // the neighborhood of every vertex must induce a clique
            BitIter(nb).all(|u| nb & !g.neighbors(u) & !(1u64 << u) == 0)
        }),
    }
}

/// Membership of the pair `(g, s)` in an augmented property.
pub fn augmented_member(
    name: AugmentedProperty,
    g: &Graph,
    s: VertexSet,
) -> Result<bool, PropertyError> {
    if s.bits() & !g.vertex_mask() != 0 {
        let bad = (s.bits() & !g.vertex_mask()).trailing_zeros() as usize;
        return Err(PropertyError::Graph(GraphError::VertexOutOfRange {
            vertex: bad,
            n: g.n(),
        }));
    }
    Ok(match name {
        AugmentedProperty::Dominating => dominates(g, s.bits()),
        AugmentedProperty::ZeroForcing => zero_forcing_closure(g, s.bits()) == g.vertex_mask(),
    })
}

/// The union of closed neighborhoods of `s` covers the whole vertex set.
pub(crate) fn dominates(g: &Graph, s: u64) -> bool {
    let mut covered = s;
    for v in BitIter(s) {
        covered |= g.neighbors(v);
    }
    covered == g.vertex_mask()
}

/// Iterated forcing closure: a filled vertex with exactly one unfilled
/// neighbor fills that neighbor. The closure is order-independent.
pub(crate) fn zero_forcing_closure(g: &Graph, s: u64) -> u64 {
    let mut filled = s;
    loop {
        let mut progress = false;
        for v in BitIter(filled) {
            let unfilled = g.neighbors(v) & !filled;
            if unfilled.count_ones() == 1 {
                filled |= unfilled;
                progress = true;
            }
        }
        if !progress {
            return filled;
        }
    }
}

/// Exhaustively verifies upward monotonicity of an augmented property on one
/// graph: every superset of a member set is a member.
pub fn is_upward_monotone_witness(
    name: AugmentedProperty,
    g: &Graph,
) -> Result<bool, PropertyError> {
    const CEILING: usize = 16;
    let n = g.n();
    if n > CEILING {
        return Err(PropertyError::OrderCeiling { ceiling: CEILING, n });
    }
    let size = 1usize << n;
    let mut member = vec![false; size];
    for bits in 0..size {
        member[bits] = augmented_member(name, g, VertexSet::from_bits(bits as u64))?;
    }
    for bits in 0..size {
        if !member[bits] {
            continue;
        }
        for v in 0..n {
            if !member[bits | (1 << v)] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_all_graphs;

    fn spec(text: &str) -> PropertySpec {
        PropertySpec::parse(text).unwrap()
    }

    #[test]
    fn builtin_membership() {
        assert!(!is_member(&spec("forest"), &Graph::cycle(3)).unwrap());
        assert!(is_member(&spec("forest"), &Graph::path(4)).unwrap());
        assert!(is_member(&spec("clique"), &Graph::complete(4)).unwrap());
        assert!(!is_member(&spec("clique"), &Graph::path(3)).unwrap());
        assert!(is_member(&spec("edgeless"), &Graph::edgeless(3).unwrap()).unwrap());
        assert!(!is_member(&spec("edgeless"), &Graph::path(2)).unwrap());
        // a disjoint union of cliques is a cluster graph
        let two_cliques = Graph::from_edges(5, &[(0, 1), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(is_member(&spec("cluster"), &two_cliques).unwrap());
        assert!(!is_member(&spec("cluster"), &Graph::path(3)).unwrap());
    }

    #[test]
    fn null_graph_conventions() {
        let null = Graph::edgeless(0).unwrap();
        for s in ["forest", "edgeless", "clique", "cluster"] {
            assert!(is_member(&spec(s), &null).unwrap(), "{s}");
            assert!(!is_member(&spec(&format!("co:{s}")), &null).unwrap());
        }
    }

    #[test]
    fn forbidden_family_membership() {
        let forb_p3 = PropertySpec::ForbiddenFamily(
            ForbiddenFamily::new(vec![Graph::path(3)]).unwrap(),
        );
        let k2_plus_k1 = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(is_member(&forb_p3, &k2_plus_k1).unwrap());
        assert!(!is_member(&forb_p3, &Graph::path(3)).unwrap());
        // complement flips membership
        let co = PropertySpec::complement_of(spec("cluster")).unwrap();
        assert!(is_member(&co, &Graph::path(3)).unwrap());
    }

    #[test]
    fn complement_requires_hereditary_inner() {
        assert!(PropertySpec::complement_of(spec("dom")).is_err());
        assert!(PropertySpec::parse("co:co:forest").is_err());
        assert!(PropertySpec::parse("co:zf").is_err());
    }

    #[test]
    fn complement_negates_membership_everywhere() {
        let pairs = [
            ("edgeless", "co:edgeless"),
            ("cluster", "co:cluster"),
            ("forest", "co:forest"),
        ];
        for n in 0..=5 {
            for g in enumerate_all_graphs(n).unwrap() {
                for (inner, outer) in pairs {
                    assert_eq!(
                        is_member(&spec(outer), &g).unwrap(),
                        !is_member(&spec(inner), &g).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn is_member_rejects_augmented() {
        assert!(matches!(
            is_member(&spec("dom"), &Graph::path(3)),
            Err(PropertyError::AugmentedNeedsSet(_))
        ));
    }

    #[test]
    fn dominating_examples() {
        let p3 = Graph::path(3);
        let center = VertexSet::singleton(1);
        let leaf = VertexSet::singleton(0);
        assert!(augmented_member(AugmentedProperty::Dominating, &p3, center).unwrap());
        assert!(!augmented_member(AugmentedProperty::Dominating, &p3, leaf).unwrap());
        for n in 1..=5 {
            let g = Graph::path(n);
            assert!(
                augmented_member(AugmentedProperty::Dominating, &g, VertexSet::full(n)).unwrap()
            );
        }
        // out-of-range member
        assert!(augmented_member(
            AugmentedProperty::Dominating,
            &p3,
            VertexSet::singleton(5)
        )
        .is_err());
    }

    #[test]
    fn zero_forcing_examples() {
        let p3 = Graph::path(3);
        assert!(augmented_member(AugmentedProperty::ZeroForcing, &p3, VertexSet::singleton(0)).unwrap());
        assert!(!augmented_member(AugmentedProperty::ZeroForcing, &p3, VertexSet::singleton(1)).unwrap());
        // the empty set forces nothing on a nonempty graph
        assert!(!augmented_member(AugmentedProperty::ZeroForcing, &p3, VertexSet::EMPTY).unwrap());
        let null = Graph::edgeless(0).unwrap();
        assert!(augmented_member(AugmentedProperty::ZeroForcing, &null, VertexSet::EMPTY).unwrap());
    }

    #[test]
    fn zero_forcing_closure_is_order_independent() {
        // randomized processing order must reach the same closure
        use rand::prelude::*;
        let mut rng = rand::rngs::StdRng::seed_from_u64(99);
        for n in 1..=8usize {
            for trial in 0..40 {
                let g = crate::graph::random_gnp(
                    n,
                    &num::BigRational::new(num::BigInt::from(1), num::BigInt::from(3)),
                    1000 + trial,
                    n as u64,
                )
                .unwrap();
                let s = rng.random_range(0..(1u64 << n));
                let reference = zero_forcing_closure(&g, s);
                for _ in 0..5 {
                    let mut filled = s;
                    loop {
                        let mut candidates: Vec<usize> = BitIter(filled).collect();
                        candidates.shuffle(&mut rng);
                        let mut forced = None;
                        for v in candidates {
                            let unfilled = g.neighbors(v) & !filled;
                            if unfilled.count_ones() == 1 {
                                forced = Some(unfilled);
                                break;
                            }
                        }
                        match forced {
                            Some(u) => filled |= u,
                            None => break,
                        }
                    }
                    assert_eq!(filled, reference);
                }
            }
        }
    }

    #[test]
    fn zero_forcing_matches_ordering_search_oracle() {
        // the ordering definition: some ordering v_1..v_k of the unfilled
        // vertices such that each v_i has a filled-so-far neighbor with no
        // other unfilled neighbor among v_i..v_k
        fn ordering_exists(g: &Graph, remaining: u64) -> bool {
            if remaining == 0 {
                return true;
            }
            for v in BitIter(remaining) {
                let filled = g.vertex_mask() & !remaining;
                let forcer_exists = BitIter(filled).any(|u| {
                    g.has_edge(u, v) && g.neighbors(u) & remaining & !(1u64 << v) == 0
                });
                if forcer_exists && ordering_exists(g, remaining & !(1u64 << v)) {
                    return true;
                }
            }
            false
        }

        for n in 0..=5 {
            for g in enumerate_all_graphs(n).unwrap() {
                for s in 0..(1u64 << n) {
                    let closure_says =
                        zero_forcing_closure(&g, s) == g.vertex_mask();
                    let oracle_says = ordering_exists(&g, g.vertex_mask() & !s);
                    assert_eq!(closure_says, oracle_says, "n={n} s={s:b} g={g:?}");
                }
            }
        }
    }

    #[test]
    fn upward_monotonicity_witnesses() {
        for n in 1..=5 {
            for g in enumerate_all_graphs(n).unwrap() {
                assert!(is_upward_monotone_witness(AugmentedProperty::Dominating, &g).unwrap());
                assert!(is_upward_monotone_witness(AugmentedProperty::ZeroForcing, &g).unwrap());
            }
        }
        assert!(is_upward_monotone_witness(
            AugmentedProperty::ZeroForcing,
            &Graph::path(4)
        )
        .unwrap());
        assert!(is_upward_monotone_witness(
            AugmentedProperty::Dominating,
            &Graph::complete(3)
        )
        .unwrap());
        assert!(
            is_upward_monotone_witness(AugmentedProperty::Dominating, &Graph::edgeless(17).unwrap())
                .is_err()
        );
    }

    #[test]
    fn builtin_forest_agrees_with_forbidden_cycles() {
        let cycles = ForbiddenFamily::new((3..=7).map(Graph::cycle).collect()).unwrap();
        let forb = PropertySpec::ForbiddenFamily(cycles);
        for n in 0..=7 {
            for g in enumerate_all_graphs(n).unwrap() {
                assert_eq!(
                    is_member(&spec("forest"), &g).unwrap(),
                    is_member(&forb, &g).unwrap(),
                    "{g:?}"
                );
            }
        }
    }

    #[test]
    fn builtin_cluster_agrees_with_forbidden_p3() {
        let forb = PropertySpec::ForbiddenFamily(
            ForbiddenFamily::new(vec![Graph::path(3)]).unwrap(),
        );
        for n in 0..=7 {
            for g in enumerate_all_graphs(n).unwrap() {
                assert_eq!(
                    is_member(&spec("cluster"), &g).unwrap(),
                    is_member(&forb, &g).unwrap(),
                    "{g:?}"
                );
            }
        }
    }

    #[test]
    fn hereditary_specs_are_hereditary() {
        let specs = vec![
            spec("edgeless"),
            spec("clique"),
            spec("forest"),
            spec("cluster"),
            PropertySpec::ForbiddenFamily(ForbiddenFamily::new(vec![Graph::path(3)]).unwrap()),
            PropertySpec::ForbiddenFamily(
                ForbiddenFamily::new(vec![Graph::cycle(4), Graph::claw()]).unwrap(),
            ),
        ];
        for n in 0..=6 {
            for g in enumerate_all_graphs(n).unwrap() {
                for s in &specs {
                    if !is_member(s, &g).unwrap() {
                        continue;
                    }
                    for bits in 0..(1u64 << n) {
                        let induced = g.induced(VertexSet::from_bits(bits)).unwrap();
                        assert!(is_member(s, &induced).unwrap(), "{s} {g:?} {bits:b}");
                    }
                }
            }
        }
    }

    #[test]
    fn forbidden_family_dedups_and_tracks_min_order() {
        let fam = ForbiddenFamily::new(vec![
            Graph::path(3),
            Graph::from_edges(3, &[(2, 1), (1, 0)]).unwrap(),
            Graph::claw(),
        ])
        .unwrap();
        assert_eq!(fam.graphs().len(), 2);
        assert_eq!(fam.min_order(), 3);
        assert!(ForbiddenFamily::new(vec![Graph::edgeless(0).unwrap()]).is_err());
    }

    #[test]
    fn dsl_round_trip() {
        for text in ["forest", "edgeless", "clique", "cluster", "dom", "zf", "co:cluster"] {
            assert_eq!(spec(text).to_string(), text);
        }
        assert!(PropertySpec::parse("independent").is_err());
    }

    #[test]
    fn forbidden_family_loads_from_graph6_file() {
        let dir = std::env::temp_dir();
        let path = dir.join(format!("propoly-forb-{}.g6", std::process::id()));
        // P_3 and K_3, with a blank line and a duplicate of P_3
        std::fs::write(&path, "Bg\n\nBw\nBg\n").unwrap();
        let parsed = PropertySpec::parse(&format!("forb:{}", path.display())).unwrap();
        match &parsed {
            PropertySpec::ForbiddenFamily(fam) => {
                assert_eq!(fam.graphs().len(), 2);
                assert_eq!(fam.min_order(), 3);
            }
            other => panic!("unexpected spec {other}"),
        }
        // P_4 contains an induced P_3, so it is out; K_2 + K_1 stays in
        assert!(!is_member(&parsed, &Graph::path(4)).unwrap());
        assert!(is_member(&parsed, &Graph::from_edges(3, &[(0, 1)]).unwrap()).unwrap());
        std::fs::remove_file(&path).ok();

        assert!(PropertySpec::parse("forb:/nonexistent/file.g6").is_err());
        // the empty family is trivial (every graph belongs to it)
        let empty = dir.join(format!("propoly-forb-empty-{}.g6", std::process::id()));
        std::fs::write(&empty, "").unwrap();
        let parsed = PropertySpec::parse(&format!("forb:{}", empty.display())).unwrap();
        assert!(!parsed.is_nontrivial());
        std::fs::remove_file(&empty).ok();
    }
}
