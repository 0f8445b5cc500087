//! Cross-module invariants on exhaustive small-graph corpora.

use num::BigUint;
use propoly::binomial;
use propoly::counting::coeffs_cohereditary;
use propoly::graph::{canonical_form, enumerate_all_graphs, random_gnp};
use propoly::seq_analysis::{cohereditary_inequalities, is_unimodal, star_condition};
use propoly::PropertySpec;
use rand::prelude::*;

#[test]
fn canonical_form_is_permutation_invariant_on_random_pairs() {
    let mut rng = StdRng::seed_from_u64(271828);
    let third = num::BigRational::new(num::BigInt::from(1), num::BigInt::from(3));
    for trial in 0..200u64 {
        let n = rng.random_range(1..=8usize);
        let g = random_gnp(n, &third, 5150, trial).unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let relabelled = g.permuted(&perm);
        assert_eq!(
            canonical_form(&g).unwrap(),
            canonical_form(&relabelled).unwrap(),
            "n={n} perm={perm:?} g={g:?}"
        );
    }
}

#[test]
fn star_condition_at_the_half_level_locates_the_mode() {
    // for co-hereditary sequences, the ratio threshold at k = ⌈n/2⌉ forces
    // unimodality with that k among the modes; the full-level specialization
    // (c_k = C(n,k)) is a particular case
    let specs = ["co:cluster", "co:edgeless", "co:forest"].map(|t| PropertySpec::parse(t).unwrap());
    let mut star_hits = 0u64;
    let mut full_level_hits = 0u64;
    for n in 1..=6usize {
        let k = n.div_ceil(2);
        for g in enumerate_all_graphs(n).unwrap() {
            for spec in &specs {
                let seq = coeffs_cohereditary(&g, spec).unwrap();
                let report = cohereditary_inequalities(&seq.values);
                assert!(
                    report.lower_half_nondecreasing,
                    "lower-half inequality is unconditional: {spec} {g:?}"
                );
                assert!(
                    report.ratios_nondecreasing,
                    "ratio inequality is unconditional: {spec} {g:?}"
                );
                if star_condition(&seq.values, k) {
                    star_hits += 1;
                    let (unimodal, modes) = is_unimodal(&seq.values);
                    assert!(unimodal, "{spec} {g:?}");
                    assert!(modes.contains(&k), "{spec} {g:?} modes {modes:?}");
                }
                if seq.values[k] == binomial(n, k) {
                    full_level_hits += 1;
                    let (unimodal, modes) = is_unimodal(&seq.values);
                    assert!(unimodal && modes.contains(&k), "{spec} {g:?}");
                }
            }
        }
    }
    // the corpus genuinely exercises both hypotheses
    assert!(star_hits > 50, "star hits {star_hits}");
    assert!(full_level_hits > 20, "full-level hits {full_level_hits}");
}

#[test]
fn cohereditary_sequences_start_at_zero_and_stay_bounded() {
    let spec = PropertySpec::parse("co:forest").unwrap();
    for n in 0..=6usize {
        for g in enumerate_all_graphs(n).unwrap() {
            let seq = coeffs_cohereditary(&g, &spec).unwrap();
            assert_eq!(seq.values.len(), n + 1);
            assert_eq!(seq.values[0], BigUint::ZERO);
            for (i, c) in seq.values.iter().enumerate() {
                assert!(c <= &binomial(n, i));
            }
        }
    }
}
