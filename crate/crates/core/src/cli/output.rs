//! Self-describing CSV and JSON documents.

use std::io::Write;

use serde_json::{Map, Value};

use super::args::Format;

pub const SCHEMA: &str = "hyperlandau/1";

pub const UNITS: &str = "u is the dimensionless hyperbolic angle; alpha = qRA/(c hbar); \
b and flux in flux quanta; epsilon is the dimensionless eigenvalue of H1; \
E_plus/E_minus = ±sqrt(epsilon)/R in units of hbar*v_F";

/// Shortest round-trip decimal; scientific outside [1e-5, 1e16).
pub fn format_number(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || !v.is_finite() || (1e-5..1e16).contains(&a) {
        format!("{}", if v == 0.0 { 0.0 } else { v })
    } else {
        format!("{v:e}")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(v) => format_number(*v),
            Cell::Int(v) => format!("{v}"),
            Cell::Bool(v) => format!("{v}"),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Int(v) => Value::from(*v),
            Cell::Bool(v) => Value::Bool(*v),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// One command's output: header, optional metadata, and either a table or a
/// structured JSON body.
#[derive(Debug, Clone)]
pub struct Document {
    pub command: &'static str,
    pub config: Value,
    pub meta: Vec<(&'static str, Value)>,
    pub table: Table,
    /// Replaces the table rows as "data" in JSON output.
    pub json_body: Option<Value>,
}

impl Document {
    pub fn new(command: &'static str, config: Value, table: Table) -> Self {
        Self {
            command,
            config,
            meta: Vec::new(),
            table,
            json_body: None,
        }
    }

    pub fn write(&self, format: Format, version: &str, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Csv => self.write_csv(version, out),
            Format::Json => self.write_json(version, out),
        }
    }

    fn write_csv(&self, version: &str, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "# hyperlandau {version}")?;
        writeln!(out, "# command: {}", self.command)?;
        writeln!(out, "# config: {}", self.config)?;
        writeln!(out, "# units: {UNITS}")?;
        for (key, value) in &self.meta {
            writeln!(out, "# {key}: {value}")?;
        }
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        writer.write_record(&self.table.columns)?;
        for row in &self.table.rows {
            writer.write_record(row.iter().map(Cell::csv))?;
        }
        let bytes = writer
            .into_inner()
            .map_err(|e| std::io::Error::other(e.to_string()))?;
        out.write_all(&bytes)
    }

    fn write_json(&self, version: &str, out: &mut dyn Write) -> std::io::Result<()> {
        let mut doc = Map::new();
        doc.insert("schema".into(), SCHEMA.into());
        doc.insert("tool".into(), "hyperlandau".into());
        doc.insert("version".into(), version.into());
        doc.insert("command".into(), self.command.into());
        doc.insert("config".into(), self.config.clone());
        doc.insert("units".into(), UNITS.into());
        for (key, value) in &self.meta {
            doc.insert((*key).into(), value.clone());
        }
        let data = match &self.json_body {
            Some(body) => body.clone(),
            None => Value::Array(
                self.table
                    .rows
                    .iter()
                    .map(|row| {
                        Value::Object(
                            self.table
                                .columns
                                .iter()
                                .zip(row)
                                .map(|(c, v)| ((*c).to_string(), v.json()))
                                .collect(),
                        )
                    })
                    .collect(),
            ),
        };
        doc.insert("data".into(), data);
        serde_json::to_writer_pretty(&mut *out, &Value::Object(doc))?;
        writeln!(out)
    }
}
