//! Negations of finite probability distributions.
//!
//! A negator is a non-increasing function `N` on `[0, 1]` applied
//! point-by-point to a distribution `P = (p_1, ..., p_n)`, producing another
//! distribution `(N(p_1), ..., N(p_n))` that reverses the order of the
//! components. This crate provides:
//!
//! - [`Distribution`]: validated points of the probability simplex, with the
//!   quadratic entropy `H(P) = sum (1 - p_i) p_i`;
//! - [`NegatorDescriptor`]: built-in transformation functions, generator
//!   normalization, convex mixtures and the linear family between the Yager
//!   and uniform negators, plus a compact textual syntax;
//! - [`analysis`]: grid and sampling based checks of the negation axiom,
//!   fixed points, boundary ranges, linearity and pd-independence.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod distribution;
pub mod error;
pub mod negators;
pub mod sampling;

pub use distribution::{entropy, max_entropy, Distribution, EntropyReport};
pub use error::{Error, GeneratorFailure, Result};
pub use negators::{Context, DescriptorExpr, Generator, Kind, NegatorDescriptor};
