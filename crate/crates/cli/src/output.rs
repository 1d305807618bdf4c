//! Output records and their JSON-lines / CSV encodings.

use std::io::Write;
use std::str::FromStr;

use num_complex::Complex64 as Complex;
use serde_json::{Map, Number, Value};
use so21_core::{Error, SeriesResult};

use crate::parse::format_complex;

#[derive(Debug, Clone)]
pub enum Field {
    Real(f64),
    Int(i64),
    Text(String),
    Null,
}

impl Field {
    pub fn complex(z: Complex) -> Field {
        Field::Text(format_complex(z))
    }

    fn json(&self) -> Value {
        match self {
            Field::Real(x) => real_json(*x),
            Field::Int(n) => Value::from(*n),
            Field::Text(s) => Value::from(s.as_str()),
            Field::Null => Value::Null,
        }
    }

    fn csv(&self) -> String {
        match self {
            Field::Real(x) => fmt_real(*x),
            Field::Int(n) => n.to_string(),
            Field::Text(s) => s.clone(),
            Field::Null => String::new(),
        }
    }
}

fn fmt_real(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        String::new()
    }
}

fn real_json(x: f64) -> Value {
    if x.is_finite() {
        Value::Number(Number::from_str(&format!("{x:.16e}")).expect("formatted float is valid JSON"))
    } else {
        Value::Null
    }
}

#[derive(Debug, Clone)]
pub struct Computed {
    pub value: Complex,
    pub err_estimate: f64,
    pub terms_used: usize,
}

impl From<SeriesResult> for Computed {
    fn from(s: SeriesResult) -> Self {
        Computed { value: s.value, err_estimate: s.err_estimate, terms_used: s.terms_used }
    }
}

impl Computed {
    pub fn exact(value: Complex) -> Self {
        Computed { value, err_estimate: 0.0, terms_used: 1 }
    }

    pub fn real(x: f64) -> Self {
        Self::exact(Complex::new(x, 0.0))
    }
}

/// Status tag for records that are not library errors.
#[derive(Debug, Clone)]
pub enum Failure {
    Lib(Error),
    /// a verification suite ran and reported a failure
    Failed(String),
}

impl Failure {
    fn status(&self) -> &'static str {
        match self {
            Failure::Lib(e) => e.status(),
            Failure::Failed(_) => "failed",
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Failed(s) => s.clone(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

#[derive(Debug, Clone)]
pub struct Record {
    pub inputs: Vec<(&'static str, Field)>,
    pub outcome: Result<Computed, Failure>,
    /// extra named outputs; always the same names for one subcommand
    pub extras: Vec<(&'static str, Field)>,
}

impl Record {
    pub fn new(inputs: Vec<(&'static str, Field)>, outcome: Result<Computed, Failure>) -> Self {
        Record { inputs, outcome, extras: Vec::new() }
    }

    pub fn with_extras(mut self, extras: Vec<(&'static str, Field)>) -> Self {
        self.extras = extras;
        self
    }

    pub fn ok(&self) -> bool {
        self.outcome.is_ok()
    }

    fn core_fields(&self) -> [(&'static str, Field); 6] {
        match &self.outcome {
            Ok(c) => [
                ("value_re", Field::Real(c.value.re)),
                ("value_im", Field::Real(c.value.im)),
                ("err_estimate", Field::Real(c.err_estimate)),
                ("terms_used", Field::Int(c.terms_used as i64)),
                ("status", Field::Text("ok".into())),
                ("message", Field::Null),
            ],
            Err(f) => [
                ("value_re", Field::Null),
                ("value_im", Field::Null),
                ("err_estimate", Field::Null),
                ("terms_used", Field::Null),
                ("status", Field::Text(f.status().into())),
                ("message", Field::Text(f.message())),
            ],
        }
    }

    fn json(&self) -> Value {
        let mut m = Map::new();
        let inputs: Map<String, Value> = self.inputs.iter().map(|(k, v)| (k.to_string(), v.json())).collect();
        m.insert("inputs".into(), Value::Object(inputs));
        for (k, v) in self.core_fields() {
            m.insert(k.into(), v.json());
        }
        for (k, v) in &self.extras {
            m.insert(k.to_string(), v.json());
        }
        Value::Object(m)
    }

    fn csv_header(&self) -> Vec<String> {
        let mut h: Vec<String> = self.inputs.iter().map(|(k, _)| k.to_string()).collect();
        h.extend(self.core_fields().iter().map(|(k, _)| k.to_string()));
        h.extend(self.extras.iter().map(|(k, _)| k.to_string()));
        h
    }

    fn csv_row(&self) -> Vec<String> {
        let mut r: Vec<String> = self.inputs.iter().map(|(_, v)| v.csv()).collect();
        r.extend(self.core_fields().iter().map(|(_, v)| v.csv()));
        r.extend(self.extras.iter().map(|(_, v)| v.csv()));
        r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Jsonl,
    Csv,
}

pub fn write_records<W: Write>(out: W, records: &[Record], format: Format) -> std::io::Result<()> {
    match format {
        Format::Jsonl => {
            let mut out = std::io::BufWriter::new(out);
            for r in records {
                writeln!(out, "{}", r.json())?;
            }
            out.flush()
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if let Some(first) = records.first() {
                w.write_record(first.csv_header())?;
            }
            for r in records {
                w.write_record(r.csv_row())?;
            }
            w.flush()
        }
    }
}
