use std::io::Write;
use std::time::Instant;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Wraps a payload with schema version, tool version and parameters.
pub struct Envelope {
    command: &'static str,
    parameters: Value,
    started: Instant,
    timings: bool,
}

impl Envelope {
    pub fn new(command: &'static str, parameters: Value, timings: bool) -> Self {
        Envelope {
            command,
            parameters,
            started: Instant::now(),
            timings,
        }
    }

    pub fn finish(&self, payload: impl Serialize) -> anyhow::Result<Value> {
        let mut doc = Map::new();
        doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
        doc.insert("tool".into(), json!("rstirling"));
        doc.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
        doc.insert("command".into(), json!(self.command));
        doc.insert("parameters".into(), self.parameters.clone());
        doc.insert("result".into(), serde_json::to_value(payload)?);
        if self.timings {
            let ms = self.started.elapsed().as_secs_f64() * 1000.0;
            doc.insert("wall_time_ms".into(), json!(ms));
        }
        Ok(Value::Object(doc))
    }
}

pub fn print_json(doc: &Value) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, doc)?;
    writeln!(out)?;
    Ok(())
}

pub fn print_csv(header: &[&str], rows: &[Vec<String>]) -> anyhow::Result<()> {
    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}

/// Left-aligned columns separated by two spaces.
pub fn print_table(header: &[&str], rows: &[Vec<String>]) -> anyhow::Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = std::io::stdout().lock();
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{:<width$}", c, width = w))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for r in rows {
        writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}
