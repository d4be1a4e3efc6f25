use std::io::Write;
use std::path::Path;

use schlicht_core::radius::format_csv_number;
use serde::Serialize;
use serde_json::Value;

use crate::args::Format;
use crate::error::CliError;

/// Result of one command: a JSON document plus an optional dedicated CSV
/// table. Without a table, CSV output lists the JSON leaves as `field,value`.
#[derive(Debug)]
pub struct Output {
    pub json: Value,
    pub table: Option<Table>,
    /// Some verification check failed; the document is still emitted.
    pub failed: bool,
}

#[derive(Debug)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Output {
    pub fn new(value: &impl Serialize) -> Result<Self, CliError> {
        let json = serde_json::to_value(value).map_err(|e| CliError::Input(e.to_string()))?;
        Ok(Self { json, table: None, failed: false })
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn render(&self, format: Format) -> Result<Vec<u8>, CliError> {
        match format {
            Format::Json => {
                let mut text = serde_json::to_string_pretty(&self.json).map_err(|e| CliError::Input(e.to_string()))?;
                text.push('\n');
                Ok(text.into_bytes())
            }
            Format::Csv => {
                let mut wtr = csv::Writer::from_writer(Vec::new());
                match &self.table {
                    Some(t) => {
                        wtr.write_record(&t.header).map_err(csv_err)?;
                        for row in &t.rows {
                            wtr.write_record(row).map_err(csv_err)?;
                        }
                    }
                    None => {
                        wtr.write_record(["field", "value"]).map_err(csv_err)?;
                        let mut leaves = Vec::new();
                        flatten("", &self.json, &mut leaves);
                        for (k, v) in leaves {
                            wtr.write_record([k, v]).map_err(csv_err)?;
                        }
                    }
                }
                wtr.into_inner().map_err(|e| CliError::Input(e.to_string()))
            }
        }
    }
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Input(e.to_string())
}

pub fn cell(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => match (n.as_i64(), n.as_u64(), n.as_f64()) {
            (Some(i), _, _) => i.to_string(),
            (_, Some(u), _) => u.to_string(),
            (_, _, Some(f)) => format_csv_number(f),
            _ => n.to_string(),
        },
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn num(x: f64) -> String {
    format_csv_number(x)
}

fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(items) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), v, out);
            }
        }
        leaf => out.push((prefix.to_string(), cell(leaf))),
    }
}

pub fn emit(bytes: &[u8], out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|_| stdout.flush())
                .map_err(|source| CliError::Io { path: "stdout".into(), source })
        }
    }
}
