//! Validated finite probability distributions and the quadratic entropy
//! `H(P) = sum (1 - p_i) p_i`.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Default tolerance for the `sum p_i = 1` constraint and the `[0, 1]` range.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// A point on the probability simplex with at least two components.
///
/// Values are kept exactly as supplied, in input order. Nothing is ever
/// renormalized: an input whose sum is off by more than the tolerance is
/// rejected.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(transparent))]
pub struct Distribution {
    values: Vec<f64>,
}

impl Distribution {
    /// Validates `values` at the default tolerance.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        Self::validate(values, SUM_TOLERANCE)
    }

    /// Checks length, range and sum, in that order.
    ///
    /// The first component outside `[-tolerance, 1 + tolerance]` is reported
    /// (1-based); NaN is always out of range.
    pub fn validate(values: Vec<f64>, tolerance: f64) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::Length { len: values.len() });
        }
        for (i, &v) in values.iter().enumerate() {
            if !(v >= -tolerance && v <= 1.0 + tolerance) {
                return Err(Error::Range {
                    index: i + 1,
                    value: v,
                });
            }
        }
        let sum: f64 = values.iter().sum();
        if sum.is_nan() || (sum - 1.0).abs() > tolerance {
            return Err(Error::Sum { sum });
        }
        Ok(Distribution { values })
    }

    /// `P_U = (1/n, ..., 1/n)`.
    pub fn uniform(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Length { len: n });
        }
        Ok(Distribution {
            values: alloc::vec![1.0 / n as f64; n],
        })
    }

    /// The point distribution with all mass on component `index` (1-based).
    pub fn point(n: usize, index: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Length { len: n });
        }
        if index < 1 || index > n {
            return Err(Error::Index { index, n });
        }
        let mut values = alloc::vec![0.0; n];
        values[index - 1] = 1.0;
        Ok(Distribution { values })
    }

    pub(crate) fn from_values_unchecked(values: Vec<f64>) -> Self {
        debug_assert!(values.len() >= 2);
        Distribution { values }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Number of components `n`.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Whether some component equals `p` within `tolerance`.
    pub fn contains(&self, p: f64, tolerance: f64) -> bool {
        self.values.iter().any(|&v| (v - p).abs() <= tolerance)
    }

    /// `max_i |p_i - 1/n|`.
    pub fn distance_to_uniform(&self) -> f64 {
        let u = 1.0 / self.len() as f64;
        self.values
            .iter()
            .map(|&v| (v - u).abs())
            .fold(0.0, f64::max)
    }

    /// `H(P) = sum (1 - p_i) p_i`, which lies in `[0, (n - 1)/n]`.
    pub fn entropy(&self) -> f64 {
        entropy(self)
    }
}

impl AsRef<[f64]> for Distribution {
    fn as_ref(&self) -> &[f64] {
        &self.values
    }
}

/// `H(P) = sum (1 - p_i) p_i`.
pub fn entropy(p: &Distribution) -> f64 {
    p.values.iter().map(|&v| (1.0 - v) * v).sum()
}

/// Upper bound of [`entropy`] for length `n`, attained by `P_U`.
pub fn max_entropy(n: usize) -> f64 {
    (n as f64 - 1.0) / n as f64
}

/// Entropy before and after a transformation.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct EntropyReport {
    pub input_entropy: f64,
    pub output_entropy: f64,
    /// `output_entropy - input_entropy`.
    pub delta: f64,
}

impl EntropyReport {
    pub fn between(input: &Distribution, output: &Distribution) -> Self {
        let input_entropy = entropy(input);
        let output_entropy = entropy(output);
        EntropyReport {
            input_entropy,
            output_entropy,
            delta: output_entropy - input_entropy,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn accepts_the_worked_example() {
        let p = Distribution::validate(vec![0.0, 0.1, 0.2, 0.3, 0.4], 1e-9).unwrap();
        assert_eq!(p.len(), 5);
        assert_eq!(p.values(), &[0.0, 0.1, 0.2, 0.3, 0.4]);
    }

    #[test]
    fn rejects_single_component() {
        assert_eq!(
            Distribution::validate(vec![1.0], 1e-9),
            Err(Error::Length { len: 1 })
        );
        assert_eq!(Distribution::uniform(1), Err(Error::Length { len: 1 }));
        assert_eq!(Distribution::point(0, 1), Err(Error::Length { len: 0 }));
    }

    #[test]
    fn reports_actual_sum() {
        match Distribution::validate(vec![0.6, 0.6], 1e-9) {
            Err(Error::Sum { sum }) => assert!((sum - 1.2).abs() < 1e-15),
            other => panic!("expected sum error, got {other:?}"),
        }
    }

    #[test]
    fn reports_first_offending_index() {
        assert_eq!(
            Distribution::validate(vec![0.5, -0.5, 1.5, 0.5], 1e-9),
            Err(Error::Range {
                index: 2,
                value: -0.5
            })
        );
        assert!(matches!(
            Distribution::validate(vec![f64::NAN, 1.0], 1e-9),
            Err(Error::Range { index: 1, .. })
        ));
    }

    #[test]
    fn keeps_values_unnormalized() {
        let p = Distribution::validate(vec![0.5, 0.5 + 1e-10], 1e-9).unwrap();
        assert_eq!(p.values()[1], 0.5 + 1e-10);
    }

    #[test]
    fn uniform_and_point() {
        assert_eq!(Distribution::uniform(5).unwrap().values(), &[0.2; 5]);
        assert_eq!(Distribution::uniform(2).unwrap().values(), &[0.5, 0.5]);
        assert_eq!(Distribution::uniform(4).unwrap().values(), &[0.25; 4]);
        assert_eq!(
            Distribution::point(4, 1).unwrap().values(),
            &[1.0, 0.0, 0.0, 0.0]
        );
        assert_eq!(
            Distribution::point(4, 4).unwrap().values(),
            &[0.0, 0.0, 0.0, 1.0]
        );
        assert_eq!(Distribution::point(2, 2).unwrap().values(), &[0.0, 1.0]);
        assert_eq!(Distribution::point(4, 5), Err(Error::Index { index: 5, n: 4 }));
        assert_eq!(Distribution::point(4, 0), Err(Error::Index { index: 0, n: 4 }));
    }

    #[test]
    fn constructors_revalidate() {
        for n in 2..=12 {
            let u = Distribution::uniform(n).unwrap();
            let tol = if n.is_power_of_two() { 0.0 } else { 1e-12 };
            assert!(Distribution::validate(u.values().to_vec(), tol).is_ok(), "n = {n}");
            for i in 1..=n {
                let pt = Distribution::point(n, i).unwrap();
                assert!(Distribution::validate(pt.into_values(), 0.0).is_ok());
            }
        }
    }

    #[test]
    fn entropy_values() {
        assert_eq!(entropy(&Distribution::point(4, 1).unwrap()), 0.0);
        let u = Distribution::uniform(5).unwrap();
        assert!((entropy(&u) - 0.8).abs() < 1e-15);
        let p = Distribution::new(vec![0.0, 0.1, 0.2, 0.3, 0.4]).unwrap();
        // 0 + 0.09 + 0.16 + 0.21 + 0.24
        assert!((entropy(&p) - 0.70).abs() < 1e-15);
    }

    #[test]
    fn distance_to_uniform_is_max_norm() {
        let p = Distribution::new(vec![1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(p.distance_to_uniform(), 0.75);
        assert_eq!(Distribution::uniform(4).unwrap().distance_to_uniform(), 0.0);
    }
}
