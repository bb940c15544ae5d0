use alloc::vec::Vec;

use super::{Generator, Kind, NegatorDescriptor};
use crate::distribution::{Distribution, SUM_TOLERANCE};
use crate::error::{Error, GeneratorFailure, Result};

/// Tolerance used to decide that a probe value is a component of its context.
pub const CONTEXT_TOLERANCE: f64 = 1e-12;

/// What a single evaluation `N(p)` may look at.
#[derive(Debug, Clone, Copy)]
pub enum Context<'a> {
    /// Only the length `n`. Enough for pd-independent descriptors.
    Length(usize),
    /// The full distribution `p` belongs to.
    Within(&'a Distribution),
}

impl Context<'_> {
    fn len(&self) -> usize {
        match self {
            Context::Length(n) => *n,
            Context::Within(d) => d.len(),
        }
    }
}

/// A descriptor with its distribution-wide aggregates computed, ready for
/// pointwise evaluation.
enum Prepared<'a> {
    Identity,
    RootSum { norm: f64 },
    Uniform { n: f64 },
    Yager { n: f64 },
    Tsallis { k: f64, denom: f64 },
    Linear { alpha: f64, n: f64 },
    Generator { f: &'a Generator, norm: f64 },
    Mixture(Vec<(f64, Prepared<'a>)>),
}

impl Prepared<'_> {
    fn eval(&self, p: f64) -> f64 {
        match self {
            Prepared::Identity => p,
            Prepared::RootSum { norm } => libm::sqrt(p) / norm,
            Prepared::Uniform { n } => 1.0 / n,
            Prepared::Yager { n } => (1.0 - p) / (n - 1.0),
            Prepared::Tsallis { k, denom } => (1.0 - libm::pow(p, *k)) / denom,
            Prepared::Linear { alpha, n } => alpha / n + (1.0 - alpha) * (1.0 - p) / (n - 1.0),
            Prepared::Generator { f, norm } => f.call(p) / norm,
            Prepared::Mixture(parts) => parts.iter().map(|(w, part)| w * part.eval(p)).sum(),
        }
    }
}

/// Evaluates `f` over `values`, enforcing non-negativity and a positive sum.
/// Returns the generator values and their sum.
fn generator_values<F: Fn(f64) -> f64>(f: F, values: &[f64]) -> Result<(Vec<f64>, f64)> {
    let mut out = Vec::with_capacity(values.len());
    for (i, &p) in values.iter().enumerate() {
        let v = f(p);
        if !(v.is_finite() && v >= 0.0) {
            return Err(Error::Generator(GeneratorFailure::Negative {
                index: i + 1,
                value: v,
            }));
        }
        out.push(v);
    }
    let sum: f64 = out.iter().sum();
    if sum.is_nan() || sum <= 0.0 {
        return Err(Error::Generator(GeneratorFailure::NonPositiveSum { sum }));
    }
    Ok((out, sum))
}

/// Normalizes a generator over `p`: `(f(p_1)/S, ..., f(p_n)/S)` with
/// `S = sum f(p_j)`.
///
/// Fails if some `f(p_i)` is negative or non-finite, or if `S <= 0`.
pub fn from_generator<F: Fn(f64) -> f64>(f: F, p: &Distribution) -> Result<Distribution> {
    let (values, sum) = generator_values(f, p.values())?;
    let out = values.into_iter().map(|v| v / sum).collect();
    Ok(Distribution::from_values_unchecked(out))
}

impl NegatorDescriptor {
    fn prepare<'a>(&'a self, ctx: Context<'_>) -> Result<Prepared<'a>> {
        let n = ctx.len();
        if n < 2 {
            return Err(Error::Length { len: n });
        }
        let nf = n as f64;
        let within = match ctx {
            Context::Within(d) => Ok(d.values()),
            Context::Length(_) => Err(Error::ContextRequired),
        };
        Ok(match &self.kind {
            Kind::Identity => Prepared::Identity,
            Kind::Uniform => Prepared::Uniform { n: nf },
            Kind::Yager => Prepared::Yager { n: nf },
            Kind::Linear { alpha } => Prepared::Linear { alpha: *alpha, n: nf },
            Kind::RootSum => {
                let norm = within.clone()?.iter().map(|&p| libm::sqrt(p)).sum();
                Prepared::RootSum { norm }
            }
            Kind::Tsallis { k } => {
                let power_sum: f64 = within.clone()?.iter().map(|&p| libm::pow(p, *k)).sum();
                Prepared::Tsallis {
                    k: *k,
                    denom: nf - power_sum,
                }
            }
            Kind::Generator(g) => {
                let (_, norm) = generator_values(|p| g.call(p), within.clone()?)?;
                Prepared::Generator { f: g, norm }
            }
            Kind::Mixture(components) => Prepared::Mixture(
                components
                    .iter()
                    .map(|c| Ok((c.weight, c.inner.prepare(ctx)?)))
                    .collect::<Result<_>>()?,
            ),
        })
    }

    /// Applies the descriptor point-by-point: `(N(p_1), ..., N(p_n))`.
    ///
    /// Components with bit-identical inputs share one evaluation, so equal
    /// inputs always give equal outputs. The output is checked against the
    /// simplex at [`SUM_TOLERANCE`] and never renormalized.
    pub fn apply(&self, p: &Distribution) -> Result<Distribution> {
        let prepared = self.prepare(Context::Within(p))?;
        let values = p.values();

        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        let mut out = alloc::vec![0.0; values.len()];
        let mut last: Option<(f64, f64)> = None;
        for i in order {
            let v = match last {
                Some((input, output)) if input.to_bits() == values[i].to_bits() => output,
                _ => prepared.eval(values[i]),
            };
            last = Some((values[i], v));
            out[i] = v;
        }

        let sum: f64 = out.iter().sum();
        Distribution::validate(out, SUM_TOLERANCE).map_err(|_| Error::Inconsistent { sum })
    }

    /// Evaluates `N(p)` for a single probability value.
    ///
    /// pd-dependent descriptors need [`Context::Within`] with `p` among the
    /// context's components (within [`CONTEXT_TOLERANCE`]). pd-independent
    /// descriptors only use the context's length.
    pub fn evaluate(&self, p: f64, ctx: Context<'_>) -> Result<f64> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Parameter {
                name: "p",
                value: p,
                low: 0.0,
                high: 1.0,
            });
        }
        if !self.claims_pd_independent() {
            match ctx {
                Context::Length(_) => return Err(Error::ContextRequired),
                Context::Within(d) if !d.contains(p, CONTEXT_TOLERANCE) => {
                    return Err(Error::ContextMismatch { p })
                }
                Context::Within(_) => {}
            }
        }
        Ok(self.prepare(ctx)?.eval(p))
    }

    /// Shorthand for `evaluate(p, Context::Length(n))`.
    pub fn evaluate_at(&self, p: f64, n: usize) -> Result<f64> {
        self.evaluate(p, Context::Length(n))
    }
}
