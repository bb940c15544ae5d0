//! Executable diagnostics for transformation functions and negators.
//!
//! Universally quantified statements about negators are checked on a uniform
//! grid over `[0, 1]` (default 1001 points) and on seeded random
//! distributions. Algebraic identities use a default tolerance of `1e-12`.

mod report;

use alloc::format;
use alloc::vec::Vec;

use rand::Rng;

use crate::distribution::{entropy, Distribution, EntropyReport};
use crate::error::{Error, Result};
use crate::negators::{Context, NegatorDescriptor, CONTEXT_TOLERANCE};
use crate::sampling;

pub use report::{
    CheckReport, IterationTrace, LinearityVerdict, Location, Probe, Violation,
    MAX_RECORDED_VIOLATIONS,
};

pub const DEFAULT_GRID_SIZE: usize = 1001;
pub const IDENTITY_TOLERANCE: f64 = 1e-12;
/// Upper bound on component evaluations in one [`iterate_negation`] call.
pub const ITERATION_BUDGET: usize = 1_000_000;

/// Grid resolution and tolerance shared by the grid-based checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckConfig {
    pub grid_size: usize,
    pub tolerance: f64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            grid_size: DEFAULT_GRID_SIZE,
            tolerance: IDENTITY_TOLERANCE,
        }
    }
}

/// `k / (size - 1)` for `k = 0, ..., size - 1`.
pub fn grid(size: usize) -> impl Iterator<Item = f64> + Clone {
    let last = size.saturating_sub(1).max(1) as f64;
    (0..size).map(move |k| k as f64 / last)
}

fn require_grid(size: usize, min: usize) -> Result<()> {
    if size < min {
        Err(Error::Argument("grid is too small"))
    } else {
        Ok(())
    }
}

fn require_independent(d: &NegatorDescriptor) -> Result<()> {
    if d.claims_pd_independent() {
        Ok(())
    } else {
        Err(Error::IndependenceRequired)
    }
}

/// Checks the negation property: `p_i <= p_j` implies `q_i >= q_j`.
///
/// Each offending ordered pair `(i, j)` is reported with `expected = q_j`
/// (the lower bound `q_i` must reach) and `actual = q_i`.
pub fn check_negation_pair(p: &Distribution, q: &Distribution) -> Result<CheckReport> {
    check_negation_pair_with(p, q, IDENTITY_TOLERANCE)
}

pub fn check_negation_pair_with(
    p: &Distribution,
    q: &Distribution,
    tolerance: f64,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("negation_pair", 0, tolerance);
    scan_pairs(p, q, &mut report, |i, j| Location::Pair { i, j })?;
    Ok(report)
}

fn scan_pairs(
    p: &Distribution,
    q: &Distribution,
    report: &mut CheckReport,
    location: impl Fn(usize, usize) -> Location,
) -> Result<()> {
    if p.len() != q.len() {
        return Err(Error::LengthMismatch {
            left: p.len(),
            right: q.len(),
        });
    }
    let (pv, qv) = (p.values(), q.values());
    for i in 0..pv.len() {
        for j in 0..pv.len() {
            if i != j && pv[i] <= pv[j] && qv[i] < qv[j] {
                report.flag(location(i + 1, j + 1), qv[j], qv[i], qv[j] - qv[i]);
            }
        }
    }
    Ok(())
}

/// Applies `d` to `samples` random distributions of length `n` and checks
/// the negation property on every pair `(P, d(P))`.
pub fn negation_sweep<R: Rng + ?Sized>(
    d: &NegatorDescriptor,
    n: usize,
    samples: usize,
    rng: &mut R,
    tolerance: f64,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("negation_axiom", samples, tolerance);
    for sample in 1..=samples {
        let p = sampling::random_distribution(rng, n)?;
        let q = d.apply(&p)?;
        scan_pairs(&p, &q, &mut report, |i, j| Location::SamplePair { sample, i, j })?;
    }
    Ok(report)
}

/// Fixed-point diagnostics for length `n`:
///
/// 1. `d(P_U) = P_U` componentwise (every transformation).
/// 2. `N(1/n) = 1/n` when `d` claims pd-independence.
/// 3. When `d` also claims to be a negator, on the grid: `N(p) = p` only at
///    `p = 1/n`, `N(p) >= p` left of `1/n` and `N(p) <= p` right of it.
pub fn fixed_point_check(d: &NegatorDescriptor, n: usize, config: &CheckConfig) -> Result<CheckReport> {
    let tol = config.tolerance;
    let mut report = CheckReport::new("fixed_point", config.grid_size, tol);
    let uniform = Distribution::uniform(n)?;
    let u = 1.0 / n as f64;

    let image = d.apply(&uniform)?;
    for (i, &v) in image.values().iter().enumerate() {
        report.compare(Location::Component { index: i + 1 }, u, v);
    }

    if !d.claims_pd_independent() {
        report.note("pd-dependent: only the uniform-distribution fixed point was checked");
        return Ok(report);
    }
    report.compare(Location::Probability { p: u }, u, d.evaluate_at(u, n)?);

    if !d.claims_negator() {
        let fixed = grid(config.grid_size)
            .map(|p| d.evaluate_at(p, n).map(|v| (v - p).abs() <= tol))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .filter(|&f| f)
            .count();
        report.note(format!(
            "not a negator: uniqueness not applicable; N(p) = p at {fixed} of {} grid points",
            config.grid_size
        ));
        return Ok(report);
    }

    for p in grid(config.grid_size) {
        let v = d.evaluate_at(p, n)?;
        let at = Location::Probability { p };
        if (v - p).abs() <= tol {
            report.flag(at, u, p, (p - u).abs());
        } else if p < u && v < p {
            report.flag(at, p, v, p - v);
        } else if p > u && v > p {
            report.flag(at, p, v, v - p);
        }
    }
    Ok(report)
}

/// `|N((1-p)/(n-1)) - (1 - N(p))/(n-1)|` for a pd-independent `d`.
pub fn functional_equation_residual(d: &NegatorDescriptor, n: usize, p: f64) -> Result<f64> {
    require_independent(d)?;
    let (lhs, rhs) = functional_equation_sides(d, n, p)?;
    Ok((lhs - rhs).abs())
}

fn functional_equation_sides(d: &NegatorDescriptor, n: usize, p: f64) -> Result<(f64, f64)> {
    let m = n as f64 - 1.0;
    let lhs = d.evaluate_at((1.0 - p) / m, n)?;
    let rhs = (1.0 - d.evaluate_at(p, n)?) / m;
    Ok((lhs, rhs))
}

/// [`functional_equation_residual`] over the whole grid. The grid point
/// `p = 1` gives `N(0) = (1 - N(1))/(n-1)`.
pub fn functional_equation_check(
    d: &NegatorDescriptor,
    n: usize,
    config: &CheckConfig,
) -> Result<CheckReport> {
    require_independent(d)?;
    require_grid(config.grid_size, 2)?;
    let mut report = CheckReport::new("functional_equation", config.grid_size, config.tolerance);
    for p in grid(config.grid_size) {
        let (lhs, rhs) = functional_equation_sides(d, n, p)?;
        report.compare(Location::Probability { p }, rhs, lhs);
    }
    Ok(report)
}

/// Boundary values and image ranges of a pd-independent negator:
/// `N(1)` in `[0, 1/n]`, `N(0)` in `[1/n, 1/(n-1)]`,
/// `N(0) = (1 - N(1))/(n-1)`, and on the grid `N(p)` in `[0, 1/n]` for
/// `p >= 1/n`, `N(p)` in `[1/n, 1/(n-1)]` for `p <= 1/n`.
pub fn boundary_range_check(
    d: &NegatorDescriptor,
    n: usize,
    config: &CheckConfig,
) -> Result<CheckReport> {
    require_independent(d)?;
    if !d.claims_negator() {
        return Err(Error::NegatorRequired);
    }
    require_grid(config.grid_size, 2)?;
    let mut report = CheckReport::new("boundary_range", config.grid_size, config.tolerance);
    let u = 1.0 / n as f64;
    let upper = 1.0 / (n as f64 - 1.0);

    let at_one = d.evaluate_at(1.0, n)?;
    let at_zero = d.evaluate_at(0.0, n)?;
    report.within(Location::Probability { p: 1.0 }, 0.0, u, at_one);
    report.within(Location::Probability { p: 0.0 }, u, upper, at_zero);
    report.compare(
        Location::Probability { p: 0.0 },
        (1.0 - at_one) / (n as f64 - 1.0),
        at_zero,
    );

    for p in grid(config.grid_size) {
        let v = d.evaluate_at(p, n)?;
        let at = Location::Probability { p };
        if p >= u {
            report.within(at, 0.0, u, v);
        }
        if p <= u {
            report.within(at, u, upper, v);
        }
    }
    Ok(report)
}

/// Tests whether `d` coincides with the line `alpha/n + (1-alpha)(1-p)/(n-1)`
/// where `alpha = n * N(1)`.
///
/// pd-independent descriptors are evaluated directly. Others are probed on
/// the family `(p, (1-p)/(n-1), ..., (1-p)/(n-1))`, reading `N(p)` from the
/// first component.
pub fn linearity_test(
    d: &NegatorDescriptor,
    n: usize,
    grid_size: usize,
    tolerance: f64,
) -> Result<LinearityVerdict> {
    require_grid(grid_size, 3)?;
    if n < 2 {
        return Err(Error::Length { len: n });
    }
    let probe = if d.claims_pd_independent() {
        Probe::Direct
    } else {
        Probe::SpreadFamily
    };
    let sample = |p: f64| -> Result<f64> {
        match probe {
            Probe::Direct => d.evaluate_at(p, n),
            Probe::SpreadFamily => {
                let ctx = sampling::spread_context(n, p)?;
                d.evaluate(p, Context::Within(&ctx))
            }
        }
    };

    let nf = n as f64;
    let alpha = nf * sample(1.0)?;
    let mut max_residual = 0.0f64;
    for p in grid(grid_size) {
        let line = alpha / nf + (1.0 - alpha) * (1.0 - p) / (nf - 1.0);
        let r = (sample(p)? - line).abs();
        max_residual = if r.is_nan() { f64::NAN } else { max_residual.max(r) };
    }

    let admissible = alpha >= -tolerance && alpha <= 1.0 + tolerance;
    let alpha_estimate = admissible.then(|| alpha.clamp(0.0, 1.0));
    Ok(LinearityVerdict {
        is_linear: admissible && max_residual <= tolerance,
        alpha_estimate,
        max_residual,
        probe,
        grid_size,
        tolerance,
    })
}

/// Which context pairs an independence probe compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LengthPolicy {
    /// Same-length pairs for descriptors claiming pd-independence (their
    /// value depends on `n` by construction), all pairs otherwise.
    #[default]
    Auto,
    SameLength,
    AllPairs,
}

/// Evaluates `d` at `p` inside each context and reports every compared pair
/// of contexts whose values differ by more than `tolerance`.
pub fn independence_probe(
    d: &NegatorDescriptor,
    p: f64,
    contexts: &[Distribution],
    policy: LengthPolicy,
    tolerance: f64,
) -> Result<CheckReport> {
    if contexts.iter().any(|c| !c.contains(p, CONTEXT_TOLERANCE)) {
        return Err(Error::ContextMismatch { p });
    }
    let same_length = match policy {
        LengthPolicy::Auto => d.claims_pd_independent(),
        LengthPolicy::SameLength => true,
        LengthPolicy::AllPairs => false,
    };
    let values = contexts
        .iter()
        .map(|c| d.evaluate(p, Context::Within(c)))
        .collect::<Result<Vec<_>>>()?;

    let mut report = CheckReport::new("independence_probe", contexts.len(), tolerance);
    if same_length {
        report.note("restricted to contexts of equal length");
    }
    let mut compared = 0usize;
    for a in 0..contexts.len() {
        for b in a + 1..contexts.len() {
            if same_length && contexts[a].len() != contexts[b].len() {
                continue;
            }
            compared += 1;
            report.compare(
                Location::Contexts {
                    first: a + 1,
                    second: b + 1,
                },
                values[a],
                values[b],
            );
        }
    }
    report.note(format!("compared {compared} context pairs at p = {p}"));
    Ok(report)
}

/// `H(P)`, `H(d(P))` and their difference.
pub fn entropy_delta(d: &NegatorDescriptor, p: &Distribution) -> Result<EntropyReport> {
    Ok(EntropyReport::between(p, &d.apply(p)?))
}

/// `steps[0] = P`, `steps[t + 1] = d(steps[t])`.
pub fn iterate_negation(d: &NegatorDescriptor, p: &Distribution, steps: usize) -> Result<IterationTrace> {
    if !d.claims_negator() {
        return Err(Error::NegatorRequired);
    }
    let requested = steps.saturating_mul(p.len());
    if requested > ITERATION_BUDGET {
        return Err(Error::IterationBudget {
            requested,
            limit: ITERATION_BUDGET,
        });
    }
    let mut trace = IterationTrace {
        steps: Vec::with_capacity(steps + 1),
        distances_to_uniform: Vec::with_capacity(steps + 1),
        entropies: Vec::with_capacity(steps + 1),
    };
    let mut current = p.clone();
    for t in 0..=steps {
        if t > 0 {
            current = d.apply(&current)?;
        }
        trace.distances_to_uniform.push(current.distance_to_uniform());
        trace.entropies.push(entropy(&current));
        trace.steps.push(current.clone());
    }
    Ok(trace)
}

#[cfg(test)]
mod tests;
