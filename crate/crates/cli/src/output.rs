use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// Whether a run met its checks. Soft Monte Carlo checks never produce
/// `Violation`; they report `warn` inside the result instead.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Violation,
}

/// A flat table for CSV export.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Written as `# key: value` lines above the table.
    pub notes: Vec<(String, String)>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            ..Table::default()
        }
    }

    pub fn row(&mut self, fields: impl IntoIterator<Item = String>) {
        self.rows.push(fields.into_iter().collect());
    }

    pub fn note(&mut self, key: &str, value: impl ToString) {
        self.notes.push((key.to_string(), value.to_string()));
    }
}

/// Everything one subcommand produced.
pub struct Report {
    pub command: &'static str,
    pub config: Value,
    pub seed: Option<u64>,
    pub mode: &'static str,
    pub result: Value,
    pub table: Table,
    pub status: Status,
}

impl Report {
    fn envelope(&self) -> Value {
        json!({
            "tool": "facedist",
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "config": self.config,
            "seed": self.seed,
            "mode": self.mode,
            "result": self.result,
        })
    }

    pub fn render(&self, format: Format) -> Vec<u8> {
        match format {
            Format::Json => {
                let mut out =
                    serde_json::to_vec_pretty(&self.envelope()).expect("json values serialise");
                out.push(b'\n');
                out
            }
            Format::Csv => self.render_csv(),
        }
    }

    fn render_csv(&self) -> Vec<u8> {
        let mut out = Vec::new();
        let seed = self
            .seed
            .map_or_else(|| "none".to_string(), |s| s.to_string());
        writeln!(
            out,
            "# tool: facedist {}\n# command: {}\n# seed: {}\n# mode: {}\n# config: {}",
            env!("CARGO_PKG_VERSION"),
            self.command,
            seed,
            self.mode,
            self.config
        )
        .expect("writing to memory");
        for (k, v) in &self.table.notes {
            writeln!(out, "# {k}: {v}").expect("writing to memory");
        }
        let mut writer = csv::Writer::from_writer(out);
        writer
            .write_record(&self.table.header)
            .expect("writing to memory");
        for row in &self.table.rows {
            writer.write_record(row).expect("writing to memory");
        }
        writer.into_inner().expect("flushing to memory")
    }
}

pub fn emit(bytes: &[u8], out: Option<&Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, bytes),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()
        }
    }
}

/// `pass`, or `warn` when an estimate sits above its bound. `within_3se` tells
/// whether the excess is inside three standard errors.
pub fn soft_check(estimate: f64, std_error: f64, bound: f64) -> Value {
    let status = if estimate <= bound { "pass" } else { "warn" };
    json!({
        "bound": bound,
        "estimate": estimate,
        "std_error": std_error,
        "status": status,
        "within_3se": estimate <= bound + 3.0 * std_error,
    })
}
