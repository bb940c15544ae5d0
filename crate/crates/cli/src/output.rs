//! JSON and CSV emission.
//!
//! Numbers use the shortest representation that parses back to the same
//! `f64`, so both formats round-trip at full precision. `--pretty` rounds to
//! six decimal places and indents JSON.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// A CSV table: header and rows of pre-formatted cells.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Table {
            header,
            rows: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Emitter {
    pub format: Format,
    pub pretty: bool,
}

impl Emitter {
    pub fn num(&self, x: f64) -> String {
        if self.pretty {
            format!("{x:.6}")
        } else {
            format!("{x}")
        }
    }

    pub fn opt(&self, x: Option<f64>) -> String {
        x.map(|v| self.num(v)).unwrap_or_default()
    }

    /// Writes `document` as JSON, or the table built by `table` as CSV.
    pub fn emit<T: Serialize>(
        &self,
        out: &mut dyn Write,
        document: &T,
        table: impl FnOnce(&Self) -> Table,
    ) -> io::Result<()> {
        match self.format {
            Format::Json => {
                let mut value = serde_json::to_value(document)?;
                if self.pretty {
                    round_numbers(&mut value);
                    serde_json::to_writer_pretty(&mut *out, &value)?;
                } else {
                    serde_json::to_writer(&mut *out, &value)?;
                }
                out.write_all(b"\n")
            }
            Format::Csv => {
                let table = table(self);
                let mut writer = csv::Writer::from_writer(out);
                writer.write_record(&table.header)?;
                for row in &table.rows {
                    writer.write_record(row)?;
                }
                writer.flush()
            }
        }
    }
}

fn round_numbers(value: &mut Value) {
    match value {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                let rounded = (x * 1e6).round() / 1e6;
                if let Some(r) = serde_json::Number::from_f64(rounded) {
                    *n = r;
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_numbers),
        Value::Object(map) => map.values_mut().for_each(round_numbers),
        _ => {}
    }
}
