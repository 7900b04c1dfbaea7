//! Cross-module invariant sweeps at the bounds the unit tests do not reach.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use qgrk0::degree::enumerate_degree_data;
use qgrk0::poly::LaurentPoly;
use qgrk0::qgraph;
use qgrk0::roots;
use std::collections::BTreeMap;

#[test]
fn hilbert_convolution_identity_to_500() {
    // f * (a_0 + ... + a_500 t^500) = 1 + O(t^501), exactly, for every valid
    // degree vector with degree sum at most 12
    for dd in enumerate_degree_data(12) {
        let f = dd.defining_poly();
        let coeffs = qgrk0::hilbert::hilbert_coeffs(&dd, 500);
        let series = LaurentPoly::from_terms(
            coeffs.iter().enumerate().map(|(i, c)| (i as i64, c.clone())),
        );
        let product = &f * &series;
        for (e, c) in product.iter() {
            if e <= 500 {
                let expected = if e == 0 { BigInt::one() } else { BigInt::zero() };
                assert_eq!(c, &expected, "coefficient {e} for {dd}");
            }
        }
    }
}

#[test]
fn factorization_verifies_exactly_to_12() {
    for dd in enumerate_degree_data(12) {
        let factors = roots::factor_f(&dd).unwrap();
        assert_eq!(factors.product(), dd.defining_poly().to_int_poly().unwrap().primitive());
        for (p, _) in factors.factors() {
            if let Some(ok) = roots::low_degree_irreducible(p) {
                assert!(ok, "reported factor {p:?} of {dd} fails the rational-root check");
            }
        }
    }
}

#[test]
fn cycle_structure_sweep_to_10() {
    // every simple cycle decomposes into full generator chains, and cycles
    // biject with the hat-graph cycles, preserving supports
    for dd in enumerate_degree_data(10) {
        let g = dd.generator_count();
        let (_, second) = qgraph::build_graphs(&dd);
        let graph_cycles = second.simple_cycles();
        let labels = second.labels();
        let degrees = dd.degrees();

        let mut support_counts: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for cycle in &graph_cycles {
            // walk the cycle from an idx-0 arrow and consume whole chains
            let start = cycle.iter().position(|&v| labels[v].idx == 0).unwrap();
            let rotated: Vec<usize> =
                cycle[start..].iter().chain(&cycle[..start]).copied().collect();
            let mut gens = Vec::new();
            let mut i = 0;
            while i < rotated.len() {
                let gen = labels[rotated[i]].gen;
                let len = degrees[gen - 1] as usize;
                for (offset, &v) in rotated[i..i + len].iter().enumerate() {
                    assert_eq!(
                        labels[v],
                        qgraph::ArrowLabel { gen, idx: offset as i64 },
                        "broken chain in {dd}"
                    );
                }
                gens.push(gen);
                i += len;
            }
            if gens.len() > 1 {
                for w in 0..gens.len() {
                    let pair = (gens[w], gens[(w + 1) % gens.len()]);
                    assert_ne!(pair, (1, g), "forbidden composition in {dd}");
                }
            }
            let mut support = gens.clone();
            support.sort_unstable();
            *support_counts.entry(support).or_default() += 1;
        }

        let all: Vec<usize> = (1..=g).collect();
        let mut hat_counts: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for cycle in qgraph::hat_simple_cycles(&all, g) {
            let mut support = cycle.clone();
            support.sort_unstable();
            *hat_counts.entry(support).or_default() += 1;
        }
        assert_eq!(support_counts, hat_counts, "cycle bijection fails for {dd}");
    }
}

#[test]
fn spanning_union_counts_match_constant_term_lemma() {
    // materialized unions agree with the closed evaluation of the hat
    // constant term: sum of (-1)^components = (-1)^|X| p(0)... checked via
    // the three-case values
    for g in 3..=6usize {
        let dd = enumerate_degree_data(g as i64)
            .into_iter()
            .find(|d| d.generator_count() == g && d.degree_sum() == g as i64)
            .unwrap();
        for mask in 1u32..(1 << g) {
            let subset: Vec<usize> =
                (0..g).filter(|i| mask & (1 << i) != 0).map(|i| i + 1).collect();
            let unions = qgraph::hat_spanning_unions(&subset, g);
            let signed: i64 = unions.iter().map(|u| if u.len() % 2 == 0 { 1 } else { -1 }).sum();
            let expected = qgraph::hat_constant_term(&subset, &dd);
            assert_eq!(BigInt::from(signed), expected, "subset {subset:?} of g = {g}");
        }
    }
}
