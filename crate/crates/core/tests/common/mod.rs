#![allow(dead_code)]

use pdneg_core::negators::generators;
use pdneg_core::{Distribution, NegatorDescriptor};
use proptest::prelude::*;

/// Every built-in, including the named generators.
pub fn built_ins() -> Vec<NegatorDescriptor> {
    vec![
        NegatorDescriptor::identity(),
        NegatorDescriptor::root_sum(),
        NegatorDescriptor::uniform(),
        NegatorDescriptor::yager(),
        NegatorDescriptor::tsallis(0.5).unwrap(),
        NegatorDescriptor::tsallis(1.0).unwrap(),
        NegatorDescriptor::tsallis(2.0).unwrap(),
        NegatorDescriptor::tsallis(3.5).unwrap(),
        NegatorDescriptor::linear(0.0).unwrap(),
        NegatorDescriptor::linear(0.37).unwrap(),
        NegatorDescriptor::linear(1.0).unwrap(),
        NegatorDescriptor::generator(generators::complement()),
        NegatorDescriptor::generator(generators::constant()),
        NegatorDescriptor::generator(generators::sqrt()),
        NegatorDescriptor::generator(generators::complement_squared()),
        NegatorDescriptor::generator(generators::power_complement(2.0).unwrap()),
    ]
}

/// Built-ins that claim both pd-independence and the negator property.
pub fn independent_negators() -> Vec<NegatorDescriptor> {
    built_ins()
        .into_iter()
        .filter(|d| d.claims_negator() && d.claims_pd_independent())
        .collect()
}

/// Normalized positive draws; some entries may be forced to zero or
/// duplicated to cover ties.
pub fn distribution(max_n: usize) -> impl Strategy<Value = Distribution> {
    (2..=max_n)
        .prop_flat_map(|n| {
            (
                prop::collection::vec(1e-6f64..1.0, n),
                prop::collection::vec(0u8..8, n),
            )
        })
        .prop_map(|(raw, tags)| {
            let mut w = raw.clone();
            for i in 0..w.len() {
                match tags[i] {
                    0 => w[i] = 0.0,
                    1 if i > 0 => w[i] = w[i - 1],
                    _ => {}
                }
            }
            if w.iter().all(|&x| x == 0.0) {
                w[0] = 1.0;
            }
            let s: f64 = w.iter().sum();
            Distribution::new(w.into_iter().map(|x| x / s).collect()).unwrap()
        })
}

fn leaf() -> impl Strategy<Value = NegatorDescriptor> {
    prop_oneof![
        Just(NegatorDescriptor::identity()),
        Just(NegatorDescriptor::root_sum()),
        Just(NegatorDescriptor::uniform()),
        Just(NegatorDescriptor::yager()),
        (0.1f64..4.0).prop_map(|k| NegatorDescriptor::tsallis(k).unwrap()),
        (0.0f64..=1.0).prop_map(|a| NegatorDescriptor::linear(a).unwrap()),
        Just(NegatorDescriptor::generator(generators::complement_squared())),
    ]
}

/// Built-ins and random (nested) mixtures.
pub fn descriptor() -> impl Strategy<Value = NegatorDescriptor> {
    leaf().prop_recursive(2, 12, 4, |inner| {
        prop::collection::vec((0.01f64..1.0, inner), 1..4).prop_map(|parts| {
            let total: f64 = parts.iter().map(|(w, _)| w).sum();
            let mut weights: Vec<f64> = parts.iter().map(|(w, _)| w / total).collect();
            let head: f64 = weights[1..].iter().sum();
            weights[0] = (1.0 - head).max(0.0);
            NegatorDescriptor::mixture(
                weights.into_iter().zip(parts.into_iter().map(|(_, d)| d)),
            )
            .unwrap()
        })
    })
}
