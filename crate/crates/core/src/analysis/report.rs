use alloc::string::String;
use alloc::vec::Vec;

use crate::distribution::Distribution;

/// Violations kept per report; further ones are only counted.
pub const MAX_RECORDED_VIOLATIONS: usize = 64;

/// Where a violation was observed. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize),
    serde(tag = "kind", rename_all = "snake_case")
)]
pub enum Location {
    /// Component pair `(i, j)` of a distribution.
    Pair { i: usize, j: usize },
    /// Component pair inside the `sample`-th random distribution of a sweep.
    SamplePair { sample: usize, i: usize, j: usize },
    /// A single component.
    Component { index: usize },
    /// A probability value on the evaluation grid.
    Probability { p: f64 },
    /// Two context distributions of an independence probe.
    Contexts { first: usize, second: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Violation {
    pub location: Location,
    pub expected: f64,
    pub actual: f64,
    pub magnitude: f64,
}

/// Outcome of a property check. `passed` holds exactly when no violation
/// was recorded, and every recorded violation exceeds `tolerance`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CheckReport {
    check_name: String,
    passed: bool,
    violations: Vec<Violation>,
    violation_count: usize,
    grid_size: usize,
    tolerance: f64,
    seed: Option<u64>,
    notes: Vec<String>,
}

impl CheckReport {
    pub fn new(check_name: impl Into<String>, grid_size: usize, tolerance: f64) -> Self {
        CheckReport {
            check_name: check_name.into(),
            passed: true,
            violations: Vec::new(),
            violation_count: 0,
            grid_size,
            tolerance,
            seed: None,
            notes: Vec::new(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    /// Records a violation when `magnitude > tolerance` (NaN counts as a
    /// violation). Returns whether one was recorded.
    pub fn flag(&mut self, location: Location, expected: f64, actual: f64, magnitude: f64) -> bool {
        if magnitude <= self.tolerance {
            return false;
        }
        self.passed = false;
        self.violation_count += 1;
        if self.violations.len() < MAX_RECORDED_VIOLATIONS {
            self.violations.push(Violation {
                location,
                expected,
                actual,
                magnitude,
            });
        }
        true
    }

    /// Records `|expected - actual|` as a violation if it exceeds tolerance.
    pub fn compare(&mut self, location: Location, expected: f64, actual: f64) -> bool {
        self.flag(location, expected, actual, (expected - actual).abs())
    }

    /// Flags `actual` if it leaves `[low, high]` by more than tolerance.
    pub fn within(&mut self, location: Location, low: f64, high: f64, actual: f64) -> bool {
        if actual < low {
            self.flag(location, low, actual, low - actual)
        } else if actual > high {
            self.flag(location, high, actual, actual - high)
        } else if actual.is_nan() {
            self.flag(location, low, actual, f64::NAN)
        } else {
            false
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn check_name(&self) -> &str {
        &self.check_name
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    /// Total violations found, including those beyond
    /// [`MAX_RECORDED_VIOLATIONS`].
    pub fn violation_count(&self) -> usize {
        self.violation_count
    }

    pub fn grid_size(&self) -> usize {
        self.grid_size
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }
}

/// How `N(p)` was sampled by [`linearity_test`](super::linearity_test).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(rename_all = "snake_case"))]
pub enum Probe {
    /// `N(p)` evaluated from `p` and `n` alone.
    Direct,
    /// `N(p)` read off the first component of the negation of
    /// `(p, (1-p)/(n-1), ..., (1-p)/(n-1))`.
    SpreadFamily,
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LinearityVerdict {
    pub is_linear: bool,
    /// `n * N(1)`, present when it lies in `[0, 1]` (within tolerance).
    pub alpha_estimate: Option<f64>,
    pub max_residual: f64,
    pub probe: Probe,
    pub grid_size: usize,
    pub tolerance: f64,
}

/// Repeated application of a negator, step 0 being the input.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct IterationTrace {
    pub steps: Vec<Distribution>,
    /// `max_i |steps[t]_i - 1/n|`.
    pub distances_to_uniform: Vec<f64>,
    pub entropies: Vec<f64>,
}
