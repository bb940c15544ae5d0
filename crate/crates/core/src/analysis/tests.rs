use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::negators::generators;

fn dist(v: &[f64]) -> Distribution {
    Distribution::new(v.to_vec()).unwrap()
}

fn cfg() -> CheckConfig {
    CheckConfig::default()
}

const WORKED: [f64; 5] = [0.0, 0.1, 0.2, 0.3, 0.4];

#[test]
fn negation_pair_examples() {
    let r = check_negation_pair(&dist(&[0.7, 0.3]), &dist(&[0.3, 0.7])).unwrap();
    assert!(r.passed());

    let r = check_negation_pair(&dist(&[0.7, 0.3]), &dist(&[0.7, 0.3])).unwrap();
    assert!(!r.passed());
    assert_eq!(r.violation_count(), 1);
    assert_eq!(r.violations()[0].location, Location::Pair { i: 2, j: 1 });
    assert!((r.violations()[0].magnitude - 0.4).abs() < 1e-15);

    let r = check_negation_pair(
        &dist(&WORKED),
        &dist(&[0.225, 0.2125, 0.2, 0.1875, 0.175]),
    )
    .unwrap();
    assert!(r.passed());

    assert_eq!(
        check_negation_pair(&dist(&[0.5, 0.5]), &dist(&[0.2, 0.4, 0.4])),
        Err(Error::LengthMismatch { left: 2, right: 3 })
    );
}

#[test]
fn negation_pair_flags_split_ties() {
    // Equal inputs with unequal outputs violate in both directions.
    let r = check_negation_pair(&dist(&[0.5, 0.5]), &dist(&[0.4, 0.6])).unwrap();
    assert_eq!(r.violation_count(), 1);
    assert_eq!(r.violations()[0].location, Location::Pair { i: 1, j: 2 });
}

#[test]
fn fixed_point_examples() {
    let r = fixed_point_check(&NegatorDescriptor::yager(), 4, &cfg()).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(NegatorDescriptor::yager().evaluate_at(0.25, 4).unwrap(), 0.25);

    let r = fixed_point_check(&NegatorDescriptor::uniform(), 5, &cfg()).unwrap();
    assert!(r.passed(), "{r:?}");

    let r = fixed_point_check(&NegatorDescriptor::identity(), 3, &cfg()).unwrap();
    assert!(r.passed());
    assert!(r.notes().iter().any(|n| n.contains("1001 of 1001")), "{:?}", r.notes());

    let r = fixed_point_check(&NegatorDescriptor::tsallis(2.0).unwrap(), 3, &cfg()).unwrap();
    assert!(r.passed());
    assert!(r.notes()[0].contains("pd-dependent"));
}

#[test]
fn functional_equation_examples() {
    // Both sides equal 5/18.
    let r = functional_equation_residual(&NegatorDescriptor::yager(), 4, 0.5).unwrap();
    assert!(r <= 1e-15, "{r}");
    for k in 0..=10 {
        let p = k as f64 / 10.0;
        let r = functional_equation_residual(&NegatorDescriptor::uniform(), 5, p).unwrap();
        assert!(r <= 1e-15);
    }
    // N(p) = 0.225 - 0.125 p; N(0.175) = 0.203125 = (1 - 0.1875)/4.
    let l = NegatorDescriptor::linear(0.5).unwrap();
    assert!((l.evaluate_at(0.3, 5).unwrap() - 0.1875).abs() < 1e-15);
    assert!(functional_equation_residual(&l, 5, 0.3).unwrap() <= 1e-15);

    assert_eq!(
        functional_equation_residual(&NegatorDescriptor::tsallis(2.0).unwrap(), 5, 0.3),
        Err(Error::IndependenceRequired)
    );
}

#[test]
fn functional_equation_holds_for_non_negator_transformations() {
    // Identity is not a negator, but any pd-independent transformation
    // satisfies the equation.
    let m = NegatorDescriptor::mixture(vec![
        (0.3, NegatorDescriptor::identity()),
        (0.7, NegatorDescriptor::yager()),
    ])
    .unwrap();
    assert!(functional_equation_check(&m, 6, &cfg()).unwrap().passed());
}

#[test]
fn boundary_range_examples() {
    let y = NegatorDescriptor::yager();
    assert_eq!(y.evaluate_at(1.0, 5).unwrap(), 0.0);
    assert_eq!(y.evaluate_at(0.0, 5).unwrap(), 0.25);
    assert!(boundary_range_check(&y, 5, &cfg()).unwrap().passed());

    let l = NegatorDescriptor::linear_from_boundary(5, Some(0.1), None).unwrap();
    assert!((l.evaluate_at(0.0, 5).unwrap() - 0.225).abs() < 1e-15);
    assert!(boundary_range_check(&l, 5, &cfg()).unwrap().passed());

    let u = NegatorDescriptor::uniform();
    assert_eq!(u.evaluate_at(1.0, 4).unwrap(), 0.25);
    assert_eq!(u.evaluate_at(0.0, 4).unwrap(), 0.25);
    assert!(boundary_range_check(&u, 4, &cfg()).unwrap().passed());

    assert_eq!(
        boundary_range_check(&NegatorDescriptor::identity(), 4, &cfg()),
        Err(Error::NegatorRequired)
    );
    assert_eq!(
        boundary_range_check(&NegatorDescriptor::tsallis(1.0).unwrap(), 4, &cfg()),
        Err(Error::IndependenceRequired)
    );
}

#[test]
fn linearity_examples() {
    let v = linearity_test(&NegatorDescriptor::yager(), 6, 1001, 1e-12).unwrap();
    assert!(v.is_linear);
    assert_eq!(v.alpha_estimate, Some(0.0));
    assert_eq!(v.probe, Probe::Direct);

    let v = linearity_test(&NegatorDescriptor::uniform(), 6, 1001, 1e-12).unwrap();
    assert!(v.is_linear);
    assert!((v.alpha_estimate.unwrap() - 1.0).abs() < 1e-15);

    let g = NegatorDescriptor::generator(generators::complement_squared());
    let v = linearity_test(&g, 5, 1001, 1e-12).unwrap();
    assert!(!v.is_linear);
    assert_eq!(v.probe, Probe::SpreadFamily);
    assert!(v.max_residual > 1e-12);

    // Identity: n * N(1) = n lies outside [0, 1].
    let v = linearity_test(&NegatorDescriptor::identity(), 4, 101, 1e-12).unwrap();
    assert!(!v.is_linear);
    assert_eq!(v.alpha_estimate, None);

    assert!(linearity_test(&NegatorDescriptor::yager(), 4, 2, 1e-12).is_err());
}

#[test]
fn complement_squared_on_spread_family_is_oracle_value() {
    // On (p, q, ..., q) with q = (1-p)/(n-1), f(p) = (1-p)^2 gives
    // N(p) = (1-p)^2 / ((1-p)^2 + (n-1) q'^2) where q' = 1 - q.
    let g = NegatorDescriptor::generator(generators::complement_squared());
    let n = 5usize;
    for k in 0..=20 {
        let p = k as f64 / 20.0;
        let q = (1.0 - p) / (n as f64 - 1.0);
        let expected = (1.0 - p).powi(2) / ((1.0 - p).powi(2) + (n as f64 - 1.0) * (1.0 - q).powi(2));
        let ctx = crate::sampling::spread_context(n, p).unwrap();
        let got = g.evaluate(p, Context::Within(&ctx)).unwrap();
        assert!((got - expected).abs() < 1e-15, "p = {p}");
    }
}

#[test]
fn independence_examples() {
    let t = NegatorDescriptor::tsallis(2.0).unwrap();
    let contexts = [dist(&[0.5, 0.5]), dist(&[0.5, 0.25, 0.25])];
    let r = independence_probe(&t, 0.5, &contexts, LengthPolicy::Auto, 1e-12).unwrap();
    assert!(!r.passed());
    let v = r.violations()[0];
    assert_eq!(v.location, Location::Contexts { first: 1, second: 2 });
    assert!((v.expected - 0.5).abs() < 1e-15);
    assert!((v.actual - 0.75 / 2.625).abs() < 1e-15);

    let y = NegatorDescriptor::yager();
    let contexts = [dist(&[0.5, 0.25, 0.25]), dist(&[0.5, 0.5, 0.0]), dist(&[0.5, 0.5])];
    let r = independence_probe(&y, 0.5, &contexts, LengthPolicy::Auto, 1e-12).unwrap();
    assert!(r.passed());
    assert!(r.notes().iter().any(|n| n.contains("equal length")));
    assert!(r.notes().iter().any(|n| n.contains("compared 1 context pairs")));

    // Tsallis(1) coincides with Yager among contexts of the same length.
    let t1 = NegatorDescriptor::tsallis(1.0).unwrap();
    let same_n = [dist(&[0.4, 0.3, 0.3]), dist(&[0.4, 0.5, 0.1])];
    let r = independence_probe(&t1, 0.4, &same_n, LengthPolicy::Auto, 1e-12).unwrap();
    assert!(r.passed());
    let mixed_n = [dist(&[0.4, 0.6]), dist(&[0.4, 0.3, 0.3])];
    let r = independence_probe(&t1, 0.4, &mixed_n, LengthPolicy::SameLength, 1e-12).unwrap();
    assert!(r.passed());
    let r = independence_probe(&t1, 0.4, &mixed_n, LengthPolicy::AllPairs, 1e-12).unwrap();
    assert!(!r.passed());

    assert_eq!(
        independence_probe(&y, 0.3, &contexts, LengthPolicy::Auto, 1e-12),
        Err(Error::ContextMismatch { p: 0.3 })
    );
}

#[test]
fn entropy_delta_examples() {
    let p = dist(&WORKED);
    let r = entropy_delta(&NegatorDescriptor::yager(), &p).unwrap();
    // Yager image (0.25, 0.225, 0.2, 0.175, 0.15):
    // 0.1875 + 0.174375 + 0.16 + 0.144375 + 0.1275
    assert!((r.input_entropy - 0.70).abs() < 1e-15);
    assert!((r.output_entropy - 0.79375).abs() < 1e-15);
    assert!((r.delta - 0.09375).abs() < 1e-15);
    assert_eq!(r.delta, r.output_entropy - r.input_entropy);

    let r = entropy_delta(&NegatorDescriptor::uniform(), &p).unwrap();
    assert!((r.output_entropy - 0.8).abs() < 1e-15);

    for d in [
        NegatorDescriptor::identity(),
        NegatorDescriptor::root_sum(),
        NegatorDescriptor::tsallis(3.0).unwrap(),
        NegatorDescriptor::linear(0.4).unwrap(),
    ] {
        let r = entropy_delta(&d, &Distribution::uniform(7).unwrap()).unwrap();
        assert!(r.delta.abs() < 1e-15, "{d}");
    }
}

#[test]
fn iterate_examples() {
    let y = NegatorDescriptor::yager();
    let t = iterate_negation(&y, &dist(&[1.0, 0.0, 0.0]), 2).unwrap();
    let expected: [[f64; 3]; 3] = [[1.0, 0.0, 0.0], [0.0, 0.5, 0.5], [0.5, 0.25, 0.25]];
    assert_eq!(t.steps.len(), 3);
    for (step, e) in t.steps.iter().zip(expected) {
        assert_eq!(step.values(), &e);
    }
    assert_eq!(t.distances_to_uniform.len(), 3);
    assert_eq!(t.entropies.len(), 3);
    assert!((t.distances_to_uniform[0] - 2.0 / 3.0).abs() < 1e-15);
    assert_eq!(t.entropies[0], 0.0);

    let u = Distribution::uniform(4).unwrap();
    let t = iterate_negation(&NegatorDescriptor::linear(0.3).unwrap(), &u, 10).unwrap();
    assert!(t.steps.iter().all(|s| s.values().iter().all(|&v| (v - 0.25).abs() < 1e-15)));

    let t = iterate_negation(&NegatorDescriptor::uniform(), &dist(&WORKED), 3).unwrap();
    assert_eq!(t.steps[0].values(), &WORKED);
    for s in &t.steps[1..] {
        assert_eq!(s.values(), &[0.2; 5]);
    }

    let t = iterate_negation(&y, &dist(&WORKED), 0).unwrap();
    assert_eq!(t.steps.len(), 1);

    assert_eq!(
        iterate_negation(&NegatorDescriptor::identity(), &u, 1),
        Err(Error::NegatorRequired)
    );
    assert!(matches!(
        iterate_negation(&y, &u, ITERATION_BUDGET),
        Err(Error::IterationBudget { .. })
    ));
}

#[test]
fn negation_sweep_separates_negators() {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let r = negation_sweep(&NegatorDescriptor::tsallis(2.0).unwrap(), 6, 200, &mut rng, 1e-12).unwrap();
    assert!(r.passed());

    let r = negation_sweep(&NegatorDescriptor::root_sum(), 6, 50, &mut rng, 1e-12).unwrap();
    assert!(!r.passed());
    assert!(r.violation_count() > r.violations().len());
    assert_eq!(r.violations().len(), MAX_RECORDED_VIOLATIONS);
    assert!(matches!(r.violations()[0].location, Location::SamplePair { sample: 1, .. }));
}

#[test]
fn report_invariants_hold() {
    let mut r = CheckReport::new("x", 3, 1e-6);
    assert!(!r.compare(Location::Probability { p: 0.0 }, 1.0, 1.0 + 1e-7));
    assert!(r.passed());
    assert!(r.within(Location::Probability { p: 0.0 }, 0.0, 0.5, 0.7));
    assert!(!r.passed());
    assert!(r.violations().iter().all(|v| v.magnitude > r.tolerance()));
}

#[test]
fn grid_endpoints() {
    let g: Vec<f64> = grid(1001).collect();
    assert_eq!(g.len(), 1001);
    assert_eq!(g[0], 0.0);
    assert_eq!(g[1000], 1.0);
    assert_eq!(g[200], 0.2);
}
