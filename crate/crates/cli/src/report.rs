//! Tabular output shared by all commands.
//!
//! CSV is the canonical, byte-reproducible form: floats print with 17
//! significant digits and no timing is included. JSON wraps the same rows
//! with the configuration, a summary and the wall time.

use std::io::Write;

use serde_json::{json, Map, Value};

use crate::config::RunConfig;
use crate::mapspec::format_float;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Empty,
    Int(i64),
    Float(f64),
    Bool(bool),
    Text(String),
}

impl Cell {
    pub fn opt(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Float)
    }

    fn csv(&self) -> String {
        match self {
            Cell::Empty => String::new(),
            Cell::Int(k) => k.to_string(),
            Cell::Float(x) if x.is_finite() => format!("{x:.16e}"),
            Cell::Float(x) => format_float(*x),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Empty => Value::Null,
            Cell::Int(k) => json!(k),
            Cell::Float(x) => number(*x),
            Cell::Bool(b) => json!(b),
            Cell::Text(s) => json!(s),
        }
    }
}

/// Non-finite floats become the strings `inf`, `-inf`, `nan`.
pub fn number(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        json!(format_float(x))
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    /// Columns after the leading `schema_version`.
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Status of each row, for tables that have one.
    pub statuses: Option<Vec<Status>>,
    /// Serialized map, when the command read one.
    pub map: Option<String>,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.statuses.iter().flatten().any(|&s| s == Status::Fail)
    }

    pub fn write_csv(&self, out: impl Write) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["schema_version"];
        header.extend(&self.columns);
        w.write_record(&header)?;
        for row in &self.rows {
            let mut fields = vec![SCHEMA_VERSION.to_string()];
            fields.extend(row.iter().map(Cell::csv));
            w.write_record(&fields)?;
        }
        w.flush()
    }

    pub fn to_json(&self, cfg: &RunConfig, wall_time_s: f64) -> Value {
        let records: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(k, c)| (k.to_string(), c.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut summary = json!({ "total": self.rows.len() });
        if let Some(st) = &self.statuses {
            let count = |s: Status| st.iter().filter(|&&x| x == s).count();
            summary["passed"] = json!(count(Status::Pass));
            summary["failed"] = json!(count(Status::Fail));
            summary["skipped"] = json!(count(Status::Skip));
        }
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "config": {
                "p": number(cfg.model.p()),
                "n": cfg.model.n(),
                "seed": cfg.seed,
                "samples": cfg.samples,
                "degree": cfg.degree,
                "margin": cfg.margin,
                "bound_tol": cfg.bound_tol,
                "root_tol": cfg.root_tol,
                "s_max": cfg.s_max,
            },
            "map": self.map,
            "records": records,
            "summary": summary,
            "wall_time_s": wall_time_s,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_cells() {
        assert_eq!(Cell::Float(0.1).csv(), "1.0000000000000001e-1");
        assert_eq!(Cell::Float(f64::NEG_INFINITY).csv(), "-inf");
        assert_eq!(Cell::Empty.csv(), "");
        let x: f64 = Cell::Float(1.0 / 3.0).csv().parse().unwrap();
        assert_eq!(x, 1.0 / 3.0);
    }

    #[test]
    fn quoting() {
        let r = Report {
            command: "t",
            columns: vec!["note"],
            rows: vec![vec![Cell::from("a, b")]],
            statuses: None,
            map: None,
        };
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "schema_version,note\n1,\"a, b\"\n"
        );
    }
}
