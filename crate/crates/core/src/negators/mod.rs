//! Transformation functions and negators acting point-by-point on a
//! [`Distribution`](crate::Distribution).
//!
//! A [`NegatorDescriptor`] describes a function `N` on `[0, 1]` that maps
//! `P = (p_1, ..., p_n)` to `(N(p_1), ..., N(p_n))`. Built-ins cover the
//! identity, root-sum, uniform, Yager and Tsallis forms, the linear family
//! `alpha/n + (1 - alpha)(1 - p)/(n - 1)`, user generators normalized by
//! their sum over the distribution, and convex mixtures of any of these.

mod eval;
pub mod generators;
pub mod syntax;

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub use eval::{from_generator, Context, CONTEXT_TOLERANCE};
pub use syntax::{parse, DescriptorExpr};

/// Tolerance on `sum w_k = 1` for mixture weights.
pub const WEIGHT_TOLERANCE: f64 = 1e-12;

/// Slack allowed when a boundary value sits on an endpoint of its interval.
const BOUNDARY_SLACK: f64 = 1e-12;

type GeneratorFn = dyn Fn(f64) -> f64 + Send + Sync;

/// A non-negative generator `f`, producing `N(p_i) = f(p_i) / sum_j f(p_j)`.
///
/// The function must be effect-free. `decreasing` is the caller's claim that
/// `f` is non-increasing on `[0, 1]`, which makes the induced transformation
/// a negator; it is not verified.
#[derive(Clone)]
pub struct Generator {
    label: String,
    decreasing: bool,
    func: Arc<GeneratorFn>,
}

impl Generator {
    pub fn new<F>(label: impl Into<String>, decreasing: bool, func: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Generator {
            label: label.into(),
            decreasing,
            func: Arc::new(func),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn is_decreasing(&self) -> bool {
        self.decreasing
    }

    pub fn call(&self, p: f64) -> f64 {
        (self.func)(p)
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Generator")
            .field("label", &self.label)
            .field("decreasing", &self.decreasing)
            .finish_non_exhaustive()
    }
}

/// Generators compare by label and claim only.
impl PartialEq for Generator {
    fn eq(&self, other: &Self) -> bool {
        self.label == other.label && self.decreasing == other.decreasing
    }
}

/// One weighted term of a mixture.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    weight: f64,
    inner: NegatorDescriptor,
}

impl Component {
    pub fn weight(&self) -> f64 {
        self.weight
    }

    pub fn inner(&self) -> &NegatorDescriptor {
        &self.inner
    }
}

/// The shape of a descriptor. Obtained through [`NegatorDescriptor::kind`];
/// descriptors themselves are only built through validating constructors.
#[derive(Debug, Clone, PartialEq)]
pub enum Kind {
    /// `N(p) = p`.
    Identity,
    /// `N(p_i) = sqrt(p_i) / sum_j sqrt(p_j)`.
    RootSum,
    /// `N(p) = 1/n`.
    Uniform,
    /// `N(p) = (1 - p)/(n - 1)`.
    Yager,
    /// `N(p_i) = (1 - p_i^k) / (n - sum_j p_j^k)`, `k > 0`.
    Tsallis { k: f64 },
    /// `N(p) = alpha/n + (1 - alpha)(1 - p)/(n - 1)`, `alpha` in `[0, 1]`.
    Linear { alpha: f64 },
    Generator(Generator),
    Mixture(Vec<Component>),
}

/// An immutable, validated description of a transformation function.
#[derive(Debug, Clone, PartialEq)]
pub struct NegatorDescriptor {
    kind: Kind,
}

impl NegatorDescriptor {
    pub const fn identity() -> Self {
        NegatorDescriptor {
            kind: Kind::Identity,
        }
    }

    pub const fn root_sum() -> Self {
        NegatorDescriptor {
            kind: Kind::RootSum,
        }
    }

    pub const fn uniform() -> Self {
        NegatorDescriptor {
            kind: Kind::Uniform,
        }
    }

    pub const fn yager() -> Self {
        NegatorDescriptor { kind: Kind::Yager }
    }

    /// Tsallis-based negator. Only `k > 0` is accepted: for `k < 0` the
    /// generator `1 - p^k` is non-positive on `(0, 1]`.
    pub fn tsallis(k: f64) -> Result<Self> {
        if !(k > 0.0 && k.is_finite()) {
            return Err(Error::Parameter {
                name: "k",
                value: k,
                low: 0.0,
                high: f64::INFINITY,
            });
        }
        Ok(NegatorDescriptor {
            kind: Kind::Tsallis { k },
        })
    }

    /// `alpha * N_U + (1 - alpha) * N_Y`.
    pub fn linear(alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::Parameter {
                name: "alpha",
                value: alpha,
                low: 0.0,
                high: 1.0,
            });
        }
        Ok(NegatorDescriptor {
            kind: Kind::Linear { alpha },
        })
    }

    /// Builds the linear negator for length `n` pinned by one boundary value.
    ///
    /// Exactly one of `at_one` (`N(1)`, admissible in `[0, 1/n]`) and
    /// `at_zero` (`N(0)`, admissible in `[1/n, 1/(n-1)]`) must be given. The
    /// result is `Linear { alpha: n * N(1) }`, with `N(1) = 1 - (n - 1) N(0)`
    /// when the zero boundary is supplied.
    pub fn linear_from_boundary(
        n: usize,
        at_one: Option<f64>,
        at_zero: Option<f64>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::Length { len: n });
        }
        let nf = n as f64;
        let value_at_one = match (at_one, at_zero) {
            (Some(v), None) => {
                check_interval("N(1)", v, 0.0, 1.0 / nf)?;
                v
            }
            (None, Some(v)) => {
                check_interval("N(0)", v, 1.0 / nf, 1.0 / (nf - 1.0))?;
                1.0 - (nf - 1.0) * v
            }
            _ => {
                return Err(Error::Argument(
                    "exactly one of N(1) and N(0) must be supplied",
                ))
            }
        };
        Self::linear((nf * value_at_one).clamp(0.0, 1.0))
    }

    pub fn generator(generator: Generator) -> Self {
        NegatorDescriptor {
            kind: Kind::Generator(generator),
        }
    }

    /// Convex combination `sum w_k N_k`.
    ///
    /// Each weight must lie in `[0, 1]` and the weights must sum to 1 within
    /// [`WEIGHT_TOLERANCE`].
    pub fn mixture<I>(components: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, NegatorDescriptor)>,
    {
        let components: Vec<Component> = components
            .into_iter()
            .map(|(weight, inner)| Component { weight, inner })
            .collect();
        if components.is_empty() {
            return Err(Error::EmptyMixture);
        }
        if let Some(c) = components
            .iter()
            .find(|c| !(0.0..=1.0).contains(&c.weight))
        {
            return Err(Error::WeightRange { weight: c.weight });
        }
        let sum: f64 = components.iter().map(|c| c.weight).sum();
        if sum.is_nan() || (sum - 1.0).abs() > WEIGHT_TOLERANCE {
            return Err(Error::Weight { sum });
        }
        Ok(NegatorDescriptor {
            kind: Kind::Mixture(components),
        })
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    /// Whether the descriptor is declared (or, for mixtures, inferred) to be
    /// non-increasing.
    pub fn claims_negator(&self) -> bool {
        match &self.kind {
            Kind::Identity | Kind::RootSum => false,
            Kind::Uniform | Kind::Yager | Kind::Tsallis { .. } | Kind::Linear { .. } => true,
            Kind::Generator(g) => g.decreasing,
            Kind::Mixture(cs) => cs.iter().all(|c| c.inner.claims_negator()),
        }
    }

    /// Whether `N(p)` depends only on `p` and `n`.
    ///
    /// Generators never claim this; use the independence probe in
    /// [`analysis`](crate::analysis) to gather evidence instead.
    pub fn claims_pd_independent(&self) -> bool {
        match &self.kind {
            Kind::Identity | Kind::Uniform | Kind::Yager | Kind::Linear { .. } => true,
            Kind::RootSum | Kind::Tsallis { .. } | Kind::Generator(_) => false,
            Kind::Mixture(cs) => cs.iter().all(|c| c.inner.claims_pd_independent()),
        }
    }
}

fn check_interval(name: &'static str, value: f64, low: f64, high: f64) -> Result<()> {
    if value >= low - BOUNDARY_SLACK && value <= high + BOUNDARY_SLACK {
        Ok(())
    } else {
        Err(Error::Parameter {
            name,
            value,
            low,
            high,
        })
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for NegatorDescriptor {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
