//! Named generators reachable from the textual descriptor syntax as
//! `gen:<name>`.

use alloc::format;

use super::Generator;
use crate::error::{Error, Result};

/// `f(p) = 1 - p`; normalizes to the Yager negator.
pub fn complement() -> Generator {
    Generator::new("complement", true, |p| 1.0 - p)
}

/// `f(p) = 1`; normalizes to the uniform negator.
pub fn constant() -> Generator {
    Generator::new("constant", true, |_| 1.0)
}

/// `f(p) = sqrt(p)`; normalizes to the root-sum transformation. Increasing.
pub fn sqrt() -> Generator {
    Generator::new("sqrt", false, libm::sqrt)
}

/// `f(p) = 1 - p^k`, `k > 0`; normalizes to the Tsallis negator.
pub fn power_complement(k: f64) -> Result<Generator> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::Parameter {
            name: "k",
            value: k,
            low: 0.0,
            high: f64::INFINITY,
        });
    }
    Ok(Generator::new(
        format!("power-complement:k={k}"),
        true,
        move |p| 1.0 - libm::pow(p, k),
    ))
}

/// `f(p) = (1 - p)^2`. A decreasing generator whose negator is not linear.
pub fn complement_squared() -> Generator {
    Generator::new("complement-squared", true, |p| (1.0 - p) * (1.0 - p))
}
