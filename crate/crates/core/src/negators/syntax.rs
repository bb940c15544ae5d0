//! Textual descriptor syntax.
//!
//! ```text
//! desc  := "identity" | "rootsum" | "uniform" | "yager"
//!        | "tsallis:k=" real
//!        | "linear:alpha=" real | "linear:n1=" real | "linear:n0=" real
//!        | "gen:" name
//!        | "mix:[" item ("," item)* "]"
//! item  := real "*" desc
//! name  := "complement" | "constant" | "sqrt" | "complement-squared"
//!        | "power-complement:k=" real
//! ```
//!
//! No whitespace is accepted anywhere. `linear:n1=` and `linear:n0=` pin the
//! line by a boundary value and therefore need the distribution length when
//! resolved.

use alloc::borrow::ToOwned;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{generators, Kind, NegatorDescriptor};
use crate::error::{Error, Result};

/// A parsed but not yet validated descriptor.
#[derive(Debug, Clone, PartialEq)]
pub enum DescriptorExpr {
    Identity,
    RootSum,
    Uniform,
    Yager,
    Tsallis { k: f64 },
    LinearAlpha { alpha: f64 },
    LinearAtOne { value: f64 },
    LinearAtZero { value: f64 },
    Generator(NamedGenerator),
    Mixture(Vec<(f64, DescriptorExpr)>),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NamedGenerator {
    Complement,
    Constant,
    Sqrt,
    ComplementSquared,
    PowerComplement { k: f64 },
}

impl DescriptorExpr {
    /// Whether resolving needs the distribution length.
    pub fn needs_length(&self) -> bool {
        match self {
            DescriptorExpr::LinearAtOne { .. } | DescriptorExpr::LinearAtZero { .. } => true,
            DescriptorExpr::Mixture(items) => items.iter().any(|(_, d)| d.needs_length()),
            _ => false,
        }
    }

    /// Validates parameters and builds the descriptor. `n` is only consulted
    /// for boundary-pinned linear terms.
    pub fn resolve(&self, n: Option<usize>) -> Result<NegatorDescriptor> {
        let length = || {
            n.ok_or(Error::Argument(
                "linear:n1/linear:n0 need the distribution length",
            ))
        };
        Ok(match self {
            DescriptorExpr::Identity => NegatorDescriptor::identity(),
            DescriptorExpr::RootSum => NegatorDescriptor::root_sum(),
            DescriptorExpr::Uniform => NegatorDescriptor::uniform(),
            DescriptorExpr::Yager => NegatorDescriptor::yager(),
            DescriptorExpr::Tsallis { k } => NegatorDescriptor::tsallis(*k)?,
            DescriptorExpr::LinearAlpha { alpha } => NegatorDescriptor::linear(*alpha)?,
            DescriptorExpr::LinearAtOne { value } => {
                NegatorDescriptor::linear_from_boundary(length()?, Some(*value), None)?
            }
            DescriptorExpr::LinearAtZero { value } => {
                NegatorDescriptor::linear_from_boundary(length()?, None, Some(*value))?
            }
            DescriptorExpr::Generator(g) => NegatorDescriptor::generator(match g {
                NamedGenerator::Complement => generators::complement(),
                NamedGenerator::Constant => generators::constant(),
                NamedGenerator::Sqrt => generators::sqrt(),
                NamedGenerator::ComplementSquared => generators::complement_squared(),
                NamedGenerator::PowerComplement { k } => generators::power_complement(*k)?,
            }),
            DescriptorExpr::Mixture(items) => NegatorDescriptor::mixture(
                items
                    .iter()
                    .map(|(w, d)| Ok((*w, d.resolve(n)?)))
                    .collect::<Result<Vec<_>>>()?,
            )?,
        })
    }
}

/// Parses a descriptor string. Errors carry the 1-based column.
pub fn parse(input: &str) -> Result<DescriptorExpr> {
    let mut parser = Parser { src: input, pos: 0 };
    let expr = parser.descriptor()?;
    if parser.pos != input.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(expr)
}

impl FromStr for DescriptorExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

/// Parses and resolves without a distribution length, so boundary-pinned
/// linear forms are rejected.
impl FromStr for NegatorDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)?.resolve(None)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Descriptor {
            column: self.pos + 1,
            message: message.to_owned(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.rest().starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.error(&alloc::format!("expected `{token}`")))
        }
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &str {
        let start = self.pos;
        let len = self.rest().find(|c: char| !pred(c)).unwrap_or(self.rest().len());
        self.pos += len;
        &self.src[start..self.pos]
    }

    fn word(&mut self) -> String {
        self.take_while(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-')
            .to_owned()
    }

    fn number(&mut self) -> Result<f64> {
        let start = self.pos;
        let text = self.take_while(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-'));
        match text.parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => {
                self.pos = start;
                Err(self.error("expected a finite number"))
            }
        }
    }

    fn parameter(&mut self, key: &str) -> Result<f64> {
        self.expect(":")?;
        self.expect(key)?;
        self.expect("=")?;
        self.number()
    }

    fn descriptor(&mut self) -> Result<DescriptorExpr> {
        let start = self.pos;
        let word = self.word();
        let expr = match word.as_str() {
            "identity" => DescriptorExpr::Identity,
            "rootsum" => DescriptorExpr::RootSum,
            "uniform" => DescriptorExpr::Uniform,
            "yager" => DescriptorExpr::Yager,
            "tsallis" => DescriptorExpr::Tsallis {
                k: self.parameter("k")?,
            },
            "linear" => {
                self.expect(":")?;
                let key_at = self.pos;
                let key = self.word();
                self.expect("=")?;
                let value = self.number()?;
                match key.as_str() {
                    "alpha" => DescriptorExpr::LinearAlpha { alpha: value },
                    "n1" => DescriptorExpr::LinearAtOne { value },
                    "n0" => DescriptorExpr::LinearAtZero { value },
                    _ => {
                        self.pos = key_at;
                        return Err(self.error("expected `alpha`, `n1` or `n0`"));
                    }
                }
            }
            "gen" => {
                self.expect(":")?;
                let name_at = self.pos;
                let name = self.word();
                DescriptorExpr::Generator(match name.as_str() {
                    "complement" => NamedGenerator::Complement,
                    "constant" => NamedGenerator::Constant,
                    "sqrt" => NamedGenerator::Sqrt,
                    "complement-squared" => NamedGenerator::ComplementSquared,
                    "power-complement" => NamedGenerator::PowerComplement {
                        k: self.parameter("k")?,
                    },
                    _ => {
                        self.pos = name_at;
                        return Err(self.error("unknown generator name"));
                    }
                })
            }
            "mix" => {
                self.expect(":[")?;
                let mut items = Vec::new();
                loop {
                    let weight = self.number()?;
                    self.expect("*")?;
                    items.push((weight, self.descriptor()?));
                    if self.rest().starts_with(',') {
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                self.expect("]")?;
                DescriptorExpr::Mixture(items)
            }
            _ => {
                self.pos = start;
                return Err(self.error("unknown descriptor"));
            }
        };
        Ok(expr)
    }
}

impl fmt::Display for NamedGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGenerator::Complement => f.write_str("complement"),
            NamedGenerator::Constant => f.write_str("constant"),
            NamedGenerator::Sqrt => f.write_str("sqrt"),
            NamedGenerator::ComplementSquared => f.write_str("complement-squared"),
            NamedGenerator::PowerComplement { k } => write!(f, "power-complement:k={k}"),
        }
    }
}

fn write_mixture<'a, T: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = (f64, &'a T)>,
) -> fmt::Result {
    f.write_str("mix:[")?;
    for (i, (w, d)) in items.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{w}*{d}")?;
    }
    f.write_str("]")
}

impl fmt::Display for DescriptorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DescriptorExpr::Identity => f.write_str("identity"),
            DescriptorExpr::RootSum => f.write_str("rootsum"),
            DescriptorExpr::Uniform => f.write_str("uniform"),
            DescriptorExpr::Yager => f.write_str("yager"),
            DescriptorExpr::Tsallis { k } => write!(f, "tsallis:k={k}"),
            DescriptorExpr::LinearAlpha { alpha } => write!(f, "linear:alpha={alpha}"),
            DescriptorExpr::LinearAtOne { value } => write!(f, "linear:n1={value}"),
            DescriptorExpr::LinearAtZero { value } => write!(f, "linear:n0={value}"),
            DescriptorExpr::Generator(g) => write!(f, "gen:{g}"),
            DescriptorExpr::Mixture(items) => write_mixture(f, items.iter().map(|(w, d)| (*w, d))),
        }
    }
}

/// Canonical text form; parses back to an equal descriptor for everything
/// except generators built outside [`generators`].
impl fmt::Display for NegatorDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Identity => f.write_str("identity"),
            Kind::RootSum => f.write_str("rootsum"),
            Kind::Uniform => f.write_str("uniform"),
            Kind::Yager => f.write_str("yager"),
            Kind::Tsallis { k } => write!(f, "tsallis:k={k}"),
            Kind::Linear { alpha } => write!(f, "linear:alpha={alpha}"),
            Kind::Generator(g) => write!(f, "gen:{}", g.label()),
            Kind::Mixture(cs) => write_mixture(f, cs.iter().map(|c| (c.weight(), c.inner()))),
        }
    }
}
