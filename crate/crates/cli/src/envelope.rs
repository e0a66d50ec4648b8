use std::collections::BTreeMap;
use std::fmt::Display;

use enumgeom::Error;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    RegimeError,
    Inconsistency,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::RegimeError => "regime-error",
            Status::Inconsistency => "inconsistency",
        }
    }

    pub fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::RegimeError => 2,
            Status::Inconsistency => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub value: String,
    pub provenance: String,
}

/// Inputs, named exact results and a status. Every value is a string so
/// integers of any size survive JSON round trips unchanged.
#[derive(Clone, Debug)]
pub struct Envelope {
    pub inputs: BTreeMap<String, String>,
    /// Insertion order is kept for table output; JSON sorts by name.
    pub results: Vec<(String, Entry)>,
    pub status: Status,
    pub error: Option<String>,
}

impl Envelope {
    pub fn new(inputs: BTreeMap<String, String>) -> Self {
        Envelope { inputs, results: Vec::new(), status: Status::Ok, error: None }
    }

    pub fn push(&mut self, name: &str, value: impl Display, provenance: &str) {
        debug_assert!(!provenance.is_empty());
        self.results.push((name.to_string(), Entry { value: value.to_string(), provenance: provenance.to_string() }));
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.results.iter().find(|(n, _)| n == name).map(|(_, e)| e.value.as_str())
    }

    pub fn fail(&mut self, err: &Error) {
        self.status = if err.is_regime() { Status::RegimeError } else { Status::Inconsistency };
        self.error = Some(err.to_string());
    }

    pub fn inconsistent(&mut self, msg: impl Into<String>) {
        self.status = Status::Inconsistency;
        self.error = Some(msg.into());
    }

    pub fn to_json(&self) -> Value {
        let results: Map<String, Value> = self
            .results
            .iter()
            .map(|(n, e)| (n.clone(), json!({ "value": e.value, "provenance": e.provenance })))
            .collect();
        let mut out = json!({
            "inputs": self.inputs,
            "results": results,
            "status": self.status.as_str(),
        });
        if let Some(err) = &self.error {
            out["error"] = Value::String(err.clone());
        }
        out
    }

    pub fn render_json(&self) -> String {
        render_value(&self.to_json())
    }

    pub fn render_table(&self) -> String {
        let width = self.results.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (name, e) in &self.results {
            out.push_str(&format!("{name:<width$}  {}  ({})\n", e.value, e.provenance));
        }
        if let Some(err) = &self.error {
            out.push_str(&format!("{}: {err}\n", self.status.as_str()));
        }
        out
    }

    /// One row per result under the sweep header; `method` holds the result name.
    pub fn render_csv(&self, row: &RowKey) -> Result<String, csv::Error> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(CSV_HEADER)?;
        for (name, e) in &self.results {
            w.write_record(row.record(&e.value, name))?;
        }
        if let Some(err) = &self.error {
            w.write_record(row.record("", &format!("{}:{err}", self.status.as_str())))?;
        }
        Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("utf-8"))
    }
}

/// Canonical JSON text: two-space indentation, keys sorted, trailing newline.
pub fn render_value(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub const CSV_HEADER: [&str; 7] = ["d", "r", "k", "gamma", "delta", "value", "method"];

/// The `d, r, k, gamma, delta` columns of a CSV row.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RowKey {
    pub d: String,
    pub r: String,
    pub k: String,
    pub gamma: String,
    pub delta: String,
}

impl RowKey {
    pub fn record<'a>(&'a self, value: &'a str, method: &'a str) -> [&'a str; 7] {
        [&self.d, &self.r, &self.k, &self.gamma, &self.delta, value, method]
    }
}
