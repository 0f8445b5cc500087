//! Batch command-line driver for the propoly toolkit.
//!
//! Exit codes: 0 when every assertion in the invoked experiment passes,
//! 1 on assertion failures, 2 for malformed graph6 input, 3 for unknown
//! property strings, 4 for order-ceiling violations, 5 for properties an
//! experiment refuses (wrong kind or failed hypothesis), 6 for bad
//! probabilities, 7 for I/O problems.

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};
use num::BigRational;
use propoly::counting::{coefficient_sequence, CountError};
use propoly::experiments::{
    dom_distinction, identity_suite, jlr_table, mc_unimodal, realrooted_sweep, ExperimentConfig,
    ExperimentError, ExperimentReport,
};
use propoly::graph::parse_graph6;
use propoly::real_roots::{
    brown_criterion, count_distinct_real_roots, is_real_rooted, remainder_diagnostic,
    sign_variations_at_infinity, sturm_sequence, Infinity, RealRootError,
};
use propoly::seq_analysis::shape_report;
use propoly::{ExactPolynomial, Graph, GraphError, PropertyError, PropertySpec};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "propoly", version, about = "Exact graph-polynomial toolkit")]
struct Cli {
    /// Seed for every randomized experiment.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Output format.
    #[arg(long, global = true, value_parser = ["json", "csv"])]
    format: Option<String>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Edge probability as an exact rational, e.g. 1/2.
    #[arg(long, global = true, default_value = "1/2")]
    p: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficient table and shape report for one graph and property.
    Compute {
        /// File holding one graph6 line.
        #[arg(long)]
        graph: PathBuf,
        /// Property: forest|edgeless|clique|cluster|forb:PATH|co:SPEC|dom|zf.
        #[arg(long)]
        property: String,
    },
    /// Sturm diagnostics for an explicit polynomial.
    Sturm {
        /// Comma-separated exact rational coefficients a_0,a_1,...,a_d.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Exhaustive real-rootedness sweep over all isomorphism classes.
    Sweep {
        #[arg(long)]
        property: String,
        /// Orders to sweep, comma separated.
        #[arg(long, default_value = "1,2,3,4,5,6,7")]
        n: String,
    },
    /// Monte Carlo unimodality experiment.
    Mc {
        #[arg(long)]
        property: String,
        #[arg(long, default_value = "16,20,24")]
        n: String,
        #[arg(long, default_value_t = 200)]
        samples: u64,
        /// Iterate every labelled graph instead of sampling (n <= 6).
        #[arg(long, default_value_t = false)]
        exhaustive: bool,
    },
    /// Classical identities on exhaustive small-graph corpora.
    Identities {
        #[arg(long, default_value = "1,2,3,4,5,6,7")]
        n: String,
    },
    /// Tail-bound table for a pattern graph over a range of orders.
    Jlr {
        /// Pattern: a graph6 string or one of k2, p3, k3, c4, claw.
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value = "4,6,8,10,12")]
        n: String,
    },
    /// The two domination counts no plain property can reproduce.
    DomDistinction,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(error_code(&err))
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Compute { graph, property } => run_compute(cli, graph, property),
        Command::Sturm { coeffs } => run_sturm(cli, coeffs),
        Command::Sweep { property, n } => {
            let cfg = config(cli, property, n, 0, false)?;
            finish_report(cli, realrooted_sweep(&cfg)?)
        }
        Command::Mc {
            property,
            n,
            samples,
            exhaustive,
        } => {
            let cfg = config(cli, property, n, *samples, *exhaustive)?;
            finish_report(cli, mc_unimodal(&cfg)?)
        }
        Command::Identities { n } => {
            let cfg = config(cli, "forest", n, 0, false)?;
            finish_report(cli, identity_suite(&cfg)?)
        }
        Command::Jlr { pattern, n } => {
            let cfg = config(cli, "dom", n, 0, false)?;
            let h = parse_pattern(pattern)?;
            finish_report(cli, jlr_table(&cfg, &h)?)
        }
        Command::DomDistinction => {
            let cfg = config(cli, "dom", "2", 0, false)?;
            finish_report(cli, dom_distinction(&cfg)?)
        }
    }
}

fn parse_orders(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| anyhow!("bad order list entry '{part}'"))
        })
        .collect()
}

fn config(
    cli: &Cli,
    property: &str,
    n: &str,
    samples: u64,
    exhaustive: bool,
) -> Result<ExperimentConfig> {
    let n_values = parse_orders(n)?;
    Ok(ExperimentConfig::new(
        property, n_values, samples, &cli.p, cli.seed, exhaustive,
    )?)
}

fn parse_pattern(text: &str) -> Result<Graph> {
    Ok(match text {
        "k2" => Graph::complete(2),
        "p3" => Graph::path(3),
        "k3" => Graph::complete(3),
        "c4" => Graph::cycle(4),
        "claw" => Graph::claw(),
        other => parse_graph6(other)?,
    })
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn finish_report(cli: &Cli, report: ExperimentReport) -> Result<ExitCode> {
    let format = cli.format.as_deref().unwrap_or("json");
    let text = match format {
        "csv" => report_csv(&report),
        _ => format!("{}\n", report.to_json()),
    };
    emit(cli, &text)?;
    if report.assertion_failures() == 0 {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn report_csv(report: &ExperimentReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "n,total,pass_unimodal,pass_mode,pass_lemma21,pass_ratio,pass_real_rooted_match,pass_member_binomial,pass_diagnostic,pass_newton,failures"
    );
    let cell = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    for row in &report.per_n {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            row.n,
            row.total,
            cell(row.pass_unimodal),
            cell(row.pass_mode),
            cell(row.pass_lower_half),
            cell(row.pass_ratio),
            cell(row.pass_real_rooted_match),
            cell(row.pass_member_binomial),
            cell(row.pass_diagnostic),
            cell(row.pass_newton),
            row.failures.join(" ")
        );
    }
    out
}

fn run_compute(cli: &Cli, graph_path: &PathBuf, property: &str) -> Result<ExitCode> {
    let text = std::fs::read_to_string(graph_path)
        .with_context(|| format!("reading {}", graph_path.display()))?;
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| anyhow!("{} holds no graph6 line", graph_path.display()))?;
    let g = parse_graph6(line)?;
    let spec = PropertySpec::parse(property)?;
    let seq = coefficient_sequence(&g, &spec)?;
    let shape = shape_report(&seq.values);
    let poly = seq.polynomial();
    let real_rooted = if poly.is_zero() {
        true
    } else {
        is_real_rooted(&poly)?
    };
    let diagnostic = if spec.is_hereditary() {
        match remainder_diagnostic(&g, &spec) {
            Ok(d) => Some(d),
            Err(RealRootError::MemberGraph) => None,
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };

    let format = cli.format.as_deref().unwrap_or("csv");
    let text = if format == "json" {
        let diagnostic_json = diagnostic.as_ref().map(|d| {
            serde_json::json!({
                "first_non_member_size": d.first_non_member_size,
                "deficiency": d.deficiency.to_string(),
                "derivative_degree": d.derivative_degree,
                "remainder_degree": d.remainder_degree,
                "remainder_leading": d.remainder_leading.to_string(),
                "expected_leading": d.expected_leading.to_string(),
                "degree_matches": d.degree_matches,
                "leading_matches": d.leading_matches,
                "degree_gap": d.degree_gap,
                "gap_at_least_two": d.gap_at_least_two,
            })
        });
        let value = serde_json::json!({
            "graph": seq.graph_tag,
            "property": seq.property_tag,
            "coefficients": seq.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "polynomial": poly.render(),
            "unimodal": shape.is_unimodal,
            "modes": shape.modes,
            "log_concave": shape.is_log_concave,
            "internal_zeros": shape.has_internal_zeros,
            "ratio_sequence": shape.ratio_sequence.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "star_holds_at": shape.star_holds_at,
            "real_rooted": real_rooted,
            "remainder_diagnostic": diagnostic_json,
            "null_graph_in_hereditary": true,
        });
        format!("{}\n", serde_json::to_string_pretty(&value)?)
    } else {
        let mut out = Vec::new();
        seq.write_csv(&mut out)?;
        let mut out = String::from_utf8(out)?;
        let _ = writeln!(out, "unimodal: {}", shape.is_unimodal);
        let _ = writeln!(out, "modes: {:?}", shape.modes);
        let _ = writeln!(out, "log_concave: {}", shape.is_log_concave);
        let _ = writeln!(out, "real_rooted: {real_rooted}");
        if let Some(d) = &diagnostic {
            let _ = writeln!(
                out,
                "remainder_diagnostic: degrees {} -> {}, leading {} (expected {}), pass: {}",
                d.derivative_degree,
                d.remainder_degree,
                d.remainder_leading,
                d.expected_leading,
                d.all_pass()
            );
        }
        out
    };
    emit(cli, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn run_sturm(cli: &Cli, coeffs: &str) -> Result<ExitCode> {
    let parsed: Result<Vec<BigRational>> = coeffs
        .split(',')
        .map(|part| {
            BigRational::from_str(part.trim())
                .map_err(|_| anyhow!("bad rational coefficient '{part}'"))
        })
        .collect();
    let f = ExactPolynomial::from_coefficients(parsed?);
    if f.is_zero() {
        return Err(anyhow!("the zero polynomial has no Sturm diagnostics"));
    }
    let squarefree = f.squarefree_part().map_err(RealRootError::from)?;
    let distinct = count_distinct_real_roots(&f)?;
    let real_rooted = is_real_rooted(&f)?;
    let brown = if squarefree.degree() == Some(0) {
        None
    } else {
        Some(brown_criterion(&squarefree)?)
    };
    let chain = if f.degree() == Some(0) {
        None
    } else {
        Some(sturm_sequence(&f)?)
    };

    let format = cli.format.as_deref().unwrap_or("json");
    let text = if format == "json" {
        let value = serde_json::json!({
            "polynomial": f.render(),
            "squarefree_part": squarefree.render(),
            "degrees": chain.as_ref().map(|c| c.degrees.clone()),
            "leading_signs": chain.as_ref().map(|c| {
                c.leading_signs.iter().map(|s| s.to_string()).collect::<Vec<_>>()
            }),
            "variations_at_minus_infinity": chain
                .as_ref()
                .map(|c| sign_variations_at_infinity(c, Infinity::Negative)),
            "variations_at_plus_infinity": chain
                .as_ref()
                .map(|c| sign_variations_at_infinity(c, Infinity::Positive)),
            "distinct_real_roots": distinct,
            "real_rooted": real_rooted,
            "degree_gap_criterion": brown.as_ref().map(|b| b.holds),
        });
        format!("{}\n", serde_json::to_string_pretty(&value)?)
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "polynomial: {}", f.render());
        let _ = writeln!(out, "squarefree_part: {}", squarefree.render());
        if let Some(chain) = &chain {
            let _ = writeln!(out, "degrees: {:?}", chain.degrees);
            let signs: Vec<String> =
                chain.leading_signs.iter().map(|s| s.to_string()).collect();
            let _ = writeln!(out, "leading_signs: {}", signs.join(" "));
        }
        let _ = writeln!(out, "distinct_real_roots: {distinct}");
        let _ = writeln!(out, "real_rooted: {real_rooted}");
        if let Some(b) = &brown {
            let _ = writeln!(out, "degree_gap_criterion: {}", b.holds);
        }
        out
    };
    emit(cli, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn error_code(err: &anyhow::Error) -> u8 {
    if let Some(e) = err.downcast_ref::<ExperimentError>() {
        return experiment_code(e);
    }
    if let Some(e) = err.downcast_ref::<GraphError>() {
        return graph_code(e);
    }
    if let Some(e) = err.downcast_ref::<PropertyError>() {
        return property_code(e);
    }
    if let Some(e) = err.downcast_ref::<CountError>() {
        return count_code(e);
    }
    if let Some(e) = err.downcast_ref::<RealRootError>() {
        return real_root_code(e);
    }
    if err.downcast_ref::<std::io::Error>().is_some() {
        return 7;
    }
    5
}

fn graph_code(err: &GraphError) -> u8 {
    match err {
        GraphError::InvalidGraph6(_) => 2,
        GraphError::OrderCeiling { .. } | GraphError::TooManyVertices { .. } => 4,
        _ => 5,
    }
}

fn property_code(err: &PropertyError) -> u8 {
    match err {
        PropertyError::UnknownProperty(_) => 3,
        PropertyError::Graph(e) => graph_code(e),
        PropertyError::OrderCeiling { .. } => 4,
        PropertyError::ForbiddenFile { .. } => 7,
        _ => 3,
    }
}

fn count_code(err: &CountError) -> u8 {
    match err {
        CountError::OrderCeiling { .. } => 4,
        CountError::Property(e) => property_code(e),
        CountError::Graph(e) => graph_code(e),
        _ => 5,
    }
}

fn real_root_code(err: &RealRootError) -> u8 {
    match err {
        RealRootError::Count(e) => count_code(e),
        _ => 5,
    }
}

fn experiment_code(err: &ExperimentError) -> u8 {
    match err {
        ExperimentError::BadProbability(_) | ExperimentError::ProbabilityOutOfRange(_) => 6,
        ExperimentError::NotCoHereditaryOrAugmented(_)
        | ExperimentError::TrivialProperty(_)
        | ExperimentError::NotHereditary(_)
        | ExperimentError::HypothesisViolation(_)
        | ExperimentError::NoSamples => 5,
        ExperimentError::ExhaustiveCeiling { .. } | ExperimentError::ZeroForcingCeiling { .. } => 4,
        ExperimentError::Property(e) => property_code(e),
        ExperimentError::Count(e) => count_code(e),
        ExperimentError::Graph(e) => graph_code(e),
        ExperimentError::RealRoot(e) => real_root_code(e),
        ExperimentError::Model(e) => match e {
            propoly::random_model::ModelError::PatternTooLarge { .. } => 4,
            propoly::random_model::ModelError::Graph(g) => graph_code(g),
            _ => 6,
        },
    }
}
