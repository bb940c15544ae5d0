//! Seeded random distributions for sweeps.
//!
//! Components are independent unit-exponential draws normalized by their
//! sum, i.e. a symmetric Dirichlet(1) sample.

use alloc::vec::Vec;

use rand::Rng;

use crate::distribution::{Distribution, SUM_TOLERANCE};
use crate::error::{Error, Result};

fn exponential_weights<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<f64> {
    loop {
        let w: Vec<f64> = (0..count)
            .map(|_| -libm::log(1.0 - rng.gen::<f64>()))
            .collect();
        let s: f64 = w.iter().sum();
        if s > 0.0 {
            return w.into_iter().map(|x| x / s).collect();
        }
    }
}

/// A uniformly random point on the simplex of length `n`.
pub fn random_distribution<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Distribution> {
    if n < 2 {
        return Err(Error::Length { len: n });
    }
    Distribution::validate(exponential_weights(rng, n), SUM_TOLERANCE)
}

/// A random distribution of length `n` whose first component is exactly `p`.
/// The remaining mass `1 - p` is spread randomly over the other components.
pub fn random_context<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<Distribution> {
    if n < 2 {
        return Err(Error::Length { len: n });
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter {
            name: "p",
            value: p,
            low: 0.0,
            high: 1.0,
        });
    }
    let mut values = Vec::with_capacity(n);
    values.push(p);
    values.extend(exponential_weights(rng, n - 1).into_iter().map(|x| x * (1.0 - p)));
    Distribution::validate(values, SUM_TOLERANCE)
}

/// `(p, (1-p)/(n-1), ..., (1-p)/(n-1))`.
pub fn spread_context(n: usize, p: f64) -> Result<Distribution> {
    if n < 2 {
        return Err(Error::Length { len: n });
    }
    let rest = (1.0 - p) / (n as f64 - 1.0);
    let mut values = alloc::vec![rest; n];
    values[0] = p;
    Distribution::validate(values, SUM_TOLERANCE)
}
