//! Input documents: a JSON object with labeled distributions, or bare lines
//! of comma/whitespace separated numbers.
//!
//! ```json
//! {"distributions": [{"label": "high", "values": [0.0, 0.1, 0.2, 0.3, 0.4]}]}
//! ```
//!
//! In the bare form blank lines and lines starting with `#` are skipped and
//! labels are generated as `pd1`, `pd2`, ... in line order.

use std::collections::HashSet;

use serde::Deserialize;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("invalid JSON input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: `{token}` is not a number")]
    Number { line: usize, token: String },
    #[error("input contains no distributions")]
    Empty,
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct LabeledValues {
    #[serde(default)]
    pub label: Option<String>,
    pub values: Vec<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDocument {
    distributions: Vec<LabeledValues>,
}

/// Labeled raw value sequences, not yet validated as distributions.
#[derive(Debug, Clone, PartialEq)]
pub struct InputDocument {
    pub distributions: Vec<(String, Vec<f64>)>,
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let entries = if text.trim_start().starts_with('{') {
            serde_json::from_str::<JsonDocument>(text)?.distributions
        } else {
            parse_lines(text)?
        };
        if entries.is_empty() {
            return Err(InputError::Empty);
        }
        let mut seen = HashSet::new();
        let mut distributions = Vec::with_capacity(entries.len());
        for (i, entry) in entries.into_iter().enumerate() {
            let label = entry.label.unwrap_or_else(|| format!("pd{}", i + 1));
            if !seen.insert(label.clone()) {
                return Err(InputError::DuplicateLabel(label));
            }
            distributions.push((label, entry.values));
        }
        Ok(InputDocument { distributions })
    }
}

fn parse_lines(text: &str) -> Result<Vec<LabeledValues>, InputError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let values = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<f64>().map_err(|_| InputError::Number {
                    line: i + 1,
                    token: t.to_owned(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.push(LabeledValues {
            label: None,
            values,
        });
    }
    Ok(out)
}
