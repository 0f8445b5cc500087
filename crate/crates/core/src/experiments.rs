//! Batch experiment drivers and their machine-readable reports.
//!
//! Every driver echoes its full configuration and the toolkit version into
//! the report, processes samples or graph classes with a worker pool whose
//! per-item work is a pure function of `(seed, index)`, and aggregates with
//! order-independent counters, so identical configurations produce identical
//! reports (timing aside) at any worker count.

use crate::counting::{chromatic_coeffs, coefficient_sequence, coeffs_hereditary, CountError};
use crate::graph::{
    contains_induced, enumerate_all_graphs, random_gnp, write_graph6, BitIter, Graph, GraphError,
};
use crate::poly::ExactPolynomial;
use crate::properties::{is_member, AugmentedProperty, PropertyError, PropertySpec};
use crate::random_model::{
    half_set_union_bound, jlr_bound, pow2_decimal_interval, ModelError,
};
use crate::real_roots::{is_real_rooted, remainder_diagnostic, RealRootError};
use crate::seq_analysis::{
    cohereditary_inequalities, is_log_concave, is_unimodal, newton_chain_check,
};
use num::{BigInt, BigRational, BigUint};
use rayon::prelude::*;
use serde::Serialize;
use std::str::FromStr;
use std::time::Instant;
use thiserror::Error;

/// Exhaustive-all-labelled mode iterates 2^{C(n,2)} graphs.
pub const EXHAUSTIVE_MAX_N: usize = 6;
/// Zero-forcing counts have no fast path, so Monte Carlo caps the order.
pub const ZERO_FORCING_MC_MAX_N: usize = 16;

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("'{0}' cannot be parsed as an exact rational probability")]
    BadProbability(String),
    #[error("probability {0} is outside [0, 1]")]
    ProbabilityOutOfRange(String),
    #[error("the Monte Carlo driver needs a co-hereditary or augmented property, got '{0}'")]
    NotCoHereditaryOrAugmented(String),
    #[error("'{0}' is trivial (every graph or no graph belongs to it)")]
    TrivialProperty(String),
    #[error("the sweep needs a hereditary property, got '{0}'")]
    NotHereditary(String),
    #[error(
        "'{0}' has no member that is neither a clique nor an edgeless graph, so \
         real-rootedness does not separate members from non-members"
    )]
    HypothesisViolation(String),
    #[error("exhaustive mode supports n <= {ceiling}, got {n}")]
    ExhaustiveCeiling { ceiling: usize, n: usize },
    #[error("zero-forcing Monte Carlo supports n <= {ceiling}, got {n}")]
    ZeroForcingCeiling { ceiling: usize, n: usize },
    #[error("samples must be at least 1")]
    NoSamples,
    #[error(transparent)]
    Property(#[from] PropertyError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    RealRoot(#[from] RealRootError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub property: String,
    pub n_values: Vec<usize>,
    pub samples: u64,
    pub p: BigRational,
    pub seed: u64,
    pub exhaustive: bool,
}

impl ExperimentConfig {
    pub fn new(
        property: &str,
        n_values: Vec<usize>,
        samples: u64,
        p_text: &str,
        seed: u64,
        exhaustive: bool,
    ) -> Result<ExperimentConfig, ExperimentError> {
        let p = BigRational::from_str(p_text)
            .map_err(|_| ExperimentError::BadProbability(p_text.to_string()))?;
        if p < BigRational::from(BigInt::from(0)) || p > BigRational::from(BigInt::from(1)) {
            return Err(ExperimentError::ProbabilityOutOfRange(p.to_string()));
        }
        Ok(ExperimentConfig {
            property: property.to_string(),
            n_values,
            samples,
            p,
            seed,
            exhaustive,
        })
    }

    fn echo(&self, experiment: &str) -> ConfigEcho {
        ConfigEcho {
            experiment: experiment.to_string(),
            property: self.property.clone(),
            n_values: self.n_values.clone(),
            samples: self.samples,
            p: self.p.to_string(),
            seed: self.seed,
            exhaustive: self.exhaustive,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ConfigEcho {
    pub experiment: String,
    pub property: String,
    pub n_values: Vec<usize>,
    pub samples: u64,
    pub p: String,
    pub seed: u64,
    pub exhaustive: bool,
}

/// Aggregates for one value of n. Counts are numbers of items passing each
/// check among those it applies to; `failures` lists the graph6 witnesses of
/// items failing any applicable check.
#[derive(Debug, Clone, Serialize, Default, PartialEq, Eq)]
pub struct PerN {
    pub n: usize,
    pub total: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass_unimodal: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass_mode: Option<u64>,
    #[serde(rename = "pass_lemma21", skip_serializing_if = "Option::is_none")]
    pub pass_lower_half: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass_ratio: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass_real_rooted_match: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass_member_binomial: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub members: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass_diagnostic: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass_newton: Option<u64>,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IdentityCheck {
    pub pass: u64,
    pub total: u64,
    pub failures: Vec<String>,
}

impl IdentityCheck {
    fn new() -> IdentityCheck {
        IdentityCheck {
            pass: 0,
            total: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, g6: &str) {
        self.total += 1;
        if ok {
            self.pass += 1;
        } else {
            self.failures.push(g6.to_string());
        }
    }

    pub fn all_pass(&self) -> bool {
        self.pass == self.total
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IdentityTotals {
    pub matching_real_rooted: IdentityCheck,
    pub line_graph_independence: IdentityCheck,
    pub clique_complement: IdentityCheck,
    pub clawfree_independence_real_rooted: IdentityCheck,
    pub chromatic_log_concave: IdentityCheck,
    pub newton_chain: IdentityCheck,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DomDistinction {
    pub c1_dom_k2: u64,
    pub c1_dom_e2: u64,
    /// A property containing the single vertex would count both singletons
    /// of the edgeless pair, contradicting the domination count 0.
    pub property_with_k1_fails_on_e2: bool,
    /// A property excluding it would count no singleton of the edge,
    /// contradicting the domination count 2.
    pub property_without_k1_fails_on_k2: bool,
    pub no_property_reproduces_dom: bool,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct JlrRow {
    pub n: usize,
    pub exponent_sum: String,
    pub log2_bound: String,
    /// Decimal interval containing 2^{log2_bound}.
    pub bound_lower: String,
    pub bound_upper: String,
    /// Half-set columns appear once ⌈n/2⌉ can host the pattern.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub half_set_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub half_set_subsets: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub half_set_log2_tail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub half_set_below_one: Option<bool>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ExperimentReport {
    pub experiment: String,
    pub config: ConfigEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exploratory: Option<bool>,
    pub per_n: Vec<PerN>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity_totals: Option<IdentityTotals>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dom_distinction: Option<DomDistinction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jlr_rows: Option<Vec<JlrRow>>,
    pub version: String,
    pub elapsed_ms: u64,
}

impl ExperimentReport {
    fn new(experiment: &str, config: ConfigEcho) -> ExperimentReport {
        ExperimentReport {
            experiment: experiment.to_string(),
            config,
            exploratory: None,
            per_n: Vec::new(),
            identity_totals: None,
            dom_distinction: None,
            jlr_rows: None,
            version: env!("CARGO_PKG_VERSION").to_string(),
            elapsed_ms: 0,
        }
    }

    /// Total number of failed assertions across the report.
    pub fn assertion_failures(&self) -> u64 {
        let per_n: u64 = self.per_n.iter().map(|p| p.failures.len() as u64).sum();
        let identities: u64 = self
            .identity_totals
            .as_ref()
            .map(|t| {
                [
                    &t.matching_real_rooted,
                    &t.line_graph_independence,
                    &t.clique_complement,
                    &t.clawfree_independence_real_rooted,
                    &t.chromatic_log_concave,
                    &t.newton_chain,
                ]
                .iter()
                .map(|c| c.total - c.pass)
                .sum()
            })
            .unwrap_or(0);
        let dom = self
            .dom_distinction
            .as_ref()
            .map(|d| u64::from(!d.no_property_reproduces_dom))
            .unwrap_or(0);
        per_n + identities + dom
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn ceil_half(n: usize) -> usize {
    n.div_ceil(2)
}

/// Newton-chain consistency with a lazily computed real-rootedness flag:
/// when the sequence is already log-concave the flag cannot matter, so the
/// Sturm work is skipped.
fn newton_consistent(values: &[BigUint]) -> Result<bool, ExperimentError> {
    let real_rooted = if is_log_concave(values) {
        false
    } else {
        let poly = ExactPolynomial::from_counts(values);
        if poly.is_zero() {
            false
        } else {
            is_real_rooted(&poly)?
        }
    };
    let signed: Vec<BigInt> = values.iter().map(|v| BigInt::from(v.clone())).collect();
    let verdict = newton_chain_check(&signed, real_rooted).expect("counts are nonnegative");
    Ok(verdict.consistent)
}

struct McOutcome {
    unimodal: bool,
    mode_ok: bool,
    lower_half: bool,
    ratio: bool,
    newton: bool,
    g6: String,
}

impl McOutcome {
    fn passes(&self) -> bool {
        self.unimodal && self.mode_ok && self.lower_half && self.ratio && self.newton
    }
}

fn evaluate_mc_sample(
    g: &Graph,
    spec: &PropertySpec,
    n: usize,
) -> Result<McOutcome, ExperimentError> {
    let seq = coefficient_sequence(g, spec)?;
    let (unimodal, modes) = is_unimodal(&seq.values);
    let mode_ok = modes.contains(&ceil_half(n));
    let inequalities = cohereditary_inequalities(&seq.values);
    let newton = newton_consistent(&seq.values)?;
    Ok(McOutcome {
        unimodal,
        mode_ok,
        lower_half: inequalities.lower_half_nondecreasing,
        ratio: inequalities.ratios_nondecreasing,
        newton,
        g6: seq.graph_tag,
    })
}

/// Iterator over every labelled graph of order n (masks over vertex pairs).
fn all_labelled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    (0u64..(1 << pairs.len()))
        .map(|mask| {
            let edges: Vec<(usize, usize)> = BitIter(mask).map(|i| pairs[i]).collect();
            Graph::from_edges(n, &edges).expect("valid labelled graph")
        })
        .collect()
}

/// Monte Carlo (or exhaustive-all-labelled) unimodality experiment for a
/// co-hereditary or upward-monotone augmented property: draws G(n,p) samples,
/// computes the coefficient sequence, and checks unimodality, mode location
/// at ⌈n/2⌉, and the two deterministic counting inequalities.
pub fn mc_unimodal(cfg: &ExperimentConfig) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    let spec = PropertySpec::parse(&cfg.property)?;
    if !spec.is_cohereditary() && !spec.is_augmented() {
        return Err(ExperimentError::NotCoHereditaryOrAugmented(
            cfg.property.clone(),
        ));
    }
    if !spec.is_nontrivial() {
        return Err(ExperimentError::TrivialProperty(cfg.property.clone()));
    }
    if !cfg.exhaustive && cfg.samples == 0 {
        return Err(ExperimentError::NoSamples);
    }
    for &n in &cfg.n_values {
        if cfg.exhaustive && n > EXHAUSTIVE_MAX_N {
            return Err(ExperimentError::ExhaustiveCeiling {
                ceiling: EXHAUSTIVE_MAX_N,
                n,
            });
        }
        if matches!(
            spec,
            PropertySpec::Augmented(AugmentedProperty::ZeroForcing)
        ) && n > ZERO_FORCING_MC_MAX_N
        {
            return Err(ExperimentError::ZeroForcingCeiling {
                ceiling: ZERO_FORCING_MC_MAX_N,
                n,
            });
        }
    }

    let mut report = ExperimentReport::new("mc_unimodal", cfg.echo("mc_unimodal"));
    report.exploratory = Some(spec.is_augmented());

    for &n in &cfg.n_values {
        let outcomes: Vec<McOutcome> = if cfg.exhaustive {
            all_labelled_graphs(n)
                .par_iter()
                .map(|g| evaluate_mc_sample(g, &spec, n))
                .collect::<Result<_, _>>()?
        } else {
            (0..cfg.samples)
                .into_par_iter()
                .map(|i| {
                    let stream = ((n as u64) << 32) | i;
                    let g = random_gnp(n, &cfg.p, cfg.seed, stream)?;
                    evaluate_mc_sample(&g, &spec, n)
                })
                .collect::<Result<_, _>>()?
        };

        let mut per_n = PerN {
            n,
            total: outcomes.len() as u64,
            pass_unimodal: Some(0),
            pass_mode: Some(0),
            pass_lower_half: Some(0),
            pass_ratio: Some(0),
            pass_newton: Some(0),
            ..PerN::default()
        };
        for outcome in &outcomes {
            *per_n.pass_unimodal.as_mut().unwrap() += outcome.unimodal as u64;
            *per_n.pass_mode.as_mut().unwrap() += outcome.mode_ok as u64;
            *per_n.pass_lower_half.as_mut().unwrap() += outcome.lower_half as u64;
            *per_n.pass_ratio.as_mut().unwrap() += outcome.ratio as u64;
            *per_n.pass_newton.as_mut().unwrap() += outcome.newton as u64;
            if !outcome.passes() {
                per_n.failures.push(outcome.g6.clone());
            }
        }
        report.per_n.push(per_n);
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

struct SweepOutcome {
    member: bool,
    matched: bool,
    binomial_ok: Option<bool>,
    diagnostic_ok: Option<bool>,
    newton: bool,
    g6: String,
}

impl SweepOutcome {
    fn passes(&self) -> bool {
        self.matched
            && self.binomial_ok.unwrap_or(true)
            && self.diagnostic_ok.unwrap_or(true)
            && self.newton
    }
}

/// Checks that the sweep hypothesis holds: some member graph is neither a
/// clique nor an edgeless graph. For a hereditary family this is equivalent
/// to having a member of order 3 with that shape.
fn sweep_hypothesis_holds(spec: &PropertySpec) -> Result<bool, ExperimentError> {
    for g in enumerate_all_graphs(3)? {
        let e = g.edge_count();
        let is_clique = e == 3;
        let is_edgeless = e == 0;
        if !is_clique && !is_edgeless && is_member(spec, &g)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Exhaustive real-rootedness sweep over all isomorphism classes of the given
/// orders: the generating polynomial must be real-rooted exactly for members,
/// members must produce the full binomial polynomial, and every non-member
/// must pass the Sturm remainder diagnostic.
pub fn realrooted_sweep(cfg: &ExperimentConfig) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    let spec = PropertySpec::parse(&cfg.property)?;
    if !spec.is_hereditary() {
        return Err(ExperimentError::NotHereditary(cfg.property.clone()));
    }
    if !spec.is_nontrivial() {
        return Err(ExperimentError::TrivialProperty(cfg.property.clone()));
    }
    if !sweep_hypothesis_holds(&spec)? {
        return Err(ExperimentError::HypothesisViolation(cfg.property.clone()));
    }

    let mut report = ExperimentReport::new("realrooted_sweep", cfg.echo("realrooted_sweep"));
    for &n in &cfg.n_values {
        let classes = enumerate_all_graphs(n)?;
        let outcomes: Vec<SweepOutcome> = classes
            .par_iter()
            .map(|g| -> Result<SweepOutcome, ExperimentError> {
                let seq = coeffs_hereditary(g, &spec)?;
                let member = is_member(&spec, g)?;
                let poly = seq.polynomial();
                let real_rooted = is_real_rooted(&poly)?;
                let matched = real_rooted == member;
                let binomial_ok = member
                    .then(|| poly == ExactPolynomial::binomial_expansion(n));
                let diagnostic_ok = if member {
                    None
                } else {
                    Some(remainder_diagnostic(g, &spec)?.all_pass())
                };
                let signed: Vec<BigInt> =
                    seq.values.iter().map(|v| BigInt::from(v.clone())).collect();
                let newton = newton_chain_check(&signed, real_rooted)
                    .expect("counts are nonnegative")
                    .consistent;
                Ok(SweepOutcome {
                    member,
                    matched,
                    binomial_ok,
                    diagnostic_ok,
                    newton,
                    g6: seq.graph_tag,
                })
            })
            .collect::<Result<_, _>>()?;

        let mut per_n = PerN {
            n,
            total: outcomes.len() as u64,
            pass_real_rooted_match: Some(0),
            pass_member_binomial: Some(0),
            members: Some(0),
            pass_diagnostic: Some(0),
            pass_newton: Some(0),
            ..PerN::default()
        };
        for outcome in &outcomes {
            *per_n.members.as_mut().unwrap() += outcome.member as u64;
            *per_n.pass_real_rooted_match.as_mut().unwrap() += outcome.matched as u64;
            *per_n.pass_member_binomial.as_mut().unwrap() +=
                outcome.binomial_ok.unwrap_or(false) as u64;
            *per_n.pass_diagnostic.as_mut().unwrap() +=
                outcome.diagnostic_ok.unwrap_or(false) as u64;
            *per_n.pass_newton.as_mut().unwrap() += outcome.newton as u64;
            if !outcome.passes() {
                per_n.failures.push(outcome.g6.clone());
            }
        }
        report.per_n.push(per_n);
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Classical identities on exhaustive corpora: matching polynomials are
/// real-rooted; independence of the line graph matches the matching counts;
/// clique counts match independence counts of the complement; independence
/// polynomials of claw-free graphs are real-rooted; absolute chromatic
/// coefficients are log-concave; and every sequence produced is
/// Newton-chain consistent.
pub fn identity_suite(cfg: &ExperimentConfig) -> Result<ExperimentReport, ExperimentError> {
    const LINE_GRAPH_MAX_N: usize = 6;
    let start = Instant::now();
    let edgeless = PropertySpec::parse("edgeless")?;
    let clique = PropertySpec::parse("clique")?;
    let claw = Graph::claw();

    let mut totals = IdentityTotals {
        matching_real_rooted: IdentityCheck::new(),
        line_graph_independence: IdentityCheck::new(),
        clique_complement: IdentityCheck::new(),
        clawfree_independence_real_rooted: IdentityCheck::new(),
        chromatic_log_concave: IdentityCheck::new(),
        newton_chain: IdentityCheck::new(),
    };

    struct IdentityOutcome {
        g6: String,
        matching_rr: bool,
        line_graph: Option<bool>,
        clique_complement: bool,
        clawfree_rr: Option<bool>,
        chromatic_lc: bool,
        newton: bool,
    }

    let mut per_n = Vec::new();
    for &n in &cfg.n_values {
        let classes = enumerate_all_graphs(n)?;
        let outcomes: Vec<IdentityOutcome> = classes
            .par_iter()
            .map(|g| -> Result<IdentityOutcome, ExperimentError> {
                let g6 = write_graph6(g)?;
                let matching = crate::counting::matching_coeffs(g)?;
                let matching_poly = matching.polynomial();
                let matching_rr = is_real_rooted(&matching_poly)?;

                let independence = coeffs_hereditary(g, &edgeless)?;

                let line_graph = if n <= LINE_GRAPH_MAX_N {
                    let line = g.line_graph()?;
                    let line_independence = coeffs_hereditary(&line, &edgeless)?;
                    Some(line_independence.polynomial() == matching_poly)
                } else {
                    None
                };

                let cliques = coeffs_hereditary(g, &clique)?;
                let complement_independence = coeffs_hereditary(&g.complement(), &edgeless)?;
                let clique_complement = cliques.values == complement_independence.values;

                let clawfree_rr = if contains_induced(g, &claw) {
                    None
                } else {
                    Some(is_real_rooted(&independence.polynomial())?)
                };

                let chromatic = chromatic_coeffs(g)?;
                let absolute: Vec<BigUint> =
                    chromatic.iter().map(|c| c.magnitude().clone()).collect();
                let chromatic_lc = is_log_concave(&absolute);

                let newton = newton_consistent(&matching.values)?
                    && newton_consistent(&independence.values)?
                    && newton_consistent(&cliques.values)?
                    && newton_consistent(&absolute)?;

                Ok(IdentityOutcome {
                    g6,
                    matching_rr,
                    line_graph,
                    clique_complement,
                    clawfree_rr,
                    chromatic_lc,
                    newton,
                })
            })
            .collect::<Result<_, _>>()?;

        let mut failures = Vec::new();
        for o in &outcomes {
            totals.matching_real_rooted.record(o.matching_rr, &o.g6);
            if let Some(ok) = o.line_graph {
                totals.line_graph_independence.record(ok, &o.g6);
            }
            totals.clique_complement.record(o.clique_complement, &o.g6);
            if let Some(ok) = o.clawfree_rr {
                totals.clawfree_independence_real_rooted.record(ok, &o.g6);
            }
            totals.chromatic_log_concave.record(o.chromatic_lc, &o.g6);
            totals.newton_chain.record(o.newton, &o.g6);
            let all_ok = o.matching_rr
                && o.line_graph.unwrap_or(true)
                && o.clique_complement
                && o.clawfree_rr.unwrap_or(true)
                && o.chromatic_lc
                && o.newton;
            if !all_ok {
                failures.push(o.g6.clone());
            }
        }
        per_n.push(PerN {
            n,
            total: outcomes.len() as u64,
            failures,
            ..PerN::default()
        });
    }

    let mut report = ExperimentReport::new("identity_suite", cfg.echo("identity_suite"));
    report.per_n = per_n;
    report.identity_totals = Some(totals);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Certifies that no plain graph property can reproduce the domination
/// counts, via the two counts on the one-edge pair and the edgeless pair.
pub fn dom_distinction(cfg: &ExperimentConfig) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    let dom = PropertySpec::parse("dom")?;
    let k2 = Graph::complete(2);
    let e2 = Graph::edgeless(2)?;
    let value = |g: &Graph| -> Result<u64, ExperimentError> {
        let seq = crate::counting::coeffs_brute(g, &dom)?;
        Ok(u64::try_from(&seq.values[1]).expect("small count"))
    };
    let c1_dom_k2 = value(&k2)?;
    let c1_dom_e2 = value(&e2)?;
    // a property containing K_1 would give c_1 = 2 on E_2; one excluding it
    // would give c_1 = 0 on K_2
    let property_with_k1_fails_on_e2 = c1_dom_e2 != 2;
    let property_without_k1_fails_on_k2 = c1_dom_k2 != 0;
    let mut report = ExperimentReport::new("dom_distinction", cfg.echo("dom_distinction"));
    report.dom_distinction = Some(DomDistinction {
        c1_dom_k2,
        c1_dom_e2,
        property_with_k1_fails_on_e2,
        property_without_k1_fails_on_k2,
        no_property_reproduces_dom: property_with_k1_fails_on_e2
            && property_without_k1_fails_on_k2,
    });
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Tail-bound table for a fixed pattern over a range of orders.
pub fn jlr_table(
    cfg: &ExperimentConfig,
    pattern: &Graph,
) -> Result<ExperimentReport, ExperimentError> {
    let start = Instant::now();
    let mut rows = Vec::new();
    for &n in &cfg.n_values {
        let bound = jlr_bound(pattern, n, &cfg.p)?;
        let (lower, upper) = pow2_decimal_interval(&bound.log2_probability_bound, 6);
        let half = if n.div_ceil(2) >= pattern.n() {
            Some(half_set_union_bound(pattern, n, &cfg.p)?)
        } else {
            None
        };
        rows.push(JlrRow {
            n,
            exponent_sum: bound.exponent_sum.to_string(),
            log2_bound: bound.log2_probability_bound.to_string(),
            bound_lower: lower,
            bound_upper: upper,
            half_set_k: half.as_ref().map(|h| h.k),
            half_set_subsets: half.as_ref().map(|h| h.subset_count.to_string()),
            half_set_log2_tail: half.as_ref().map(|h| h.log2_tail.to_string()),
            half_set_below_one: half.as_ref().map(|h| h.is_less_than_one()),
        });
    }
    let mut report = ExperimentReport::new("jlr", cfg.echo("jlr"));
    report.jlr_rows = Some(rows);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
