use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use semidual_core::resolve::DimensionValue;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Dimension {
    pub name: String,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub ring: String,
    pub verdict: String,
    pub dimensions: Vec<Dimension>,
    pub witnesses: Vec<String>,
    pub bound: usize,
    pub millis: u128,
    /// Whether every check the command performs passed; decides the exit code.
    #[serde(skip)]
    pub passed: bool,
}

impl Report {
    pub fn new(command: String, ring: String, bound: usize) -> Report {
        Report {
            command,
            ring,
            verdict: String::new(),
            dimensions: Vec::new(),
            witnesses: Vec::new(),
            bound,
            millis: 0,
            passed: true,
        }
    }

    pub fn dim(&mut self, name: impl Into<String>, value: impl Into<Value>) {
        self.dimensions.push(Dimension {
            name: name.into(),
            value: value.into(),
        });
    }

    pub fn dim_value(&mut self, name: impl Into<String>, value: DimensionValue) {
        self.dim(name, dimension_json(value));
    }

    pub fn witness(&mut self, w: impl Into<String>) {
        self.witnesses.push(w.into());
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "ring: {}", self.ring);
        let _ = writeln!(out, "verdict: {}", self.verdict);
        if !self.dimensions.is_empty() {
            out.push_str("dimensions:\n");
            for d in &self.dimensions {
                let v = match &d.value {
                    Value::String(s) => s.clone(),
                    v => v.to_string(),
                };
                let _ = writeln!(out, "  {}: {v}", d.name);
            }
        }
        if !self.witnesses.is_empty() {
            out.push_str("witnesses:\n");
            for w in &self.witnesses {
                let _ = writeln!(out, "  - {w}");
            }
        }
        let _ = writeln!(out, "bound: {}", self.bound);
        let _ = writeln!(out, "time: {} ms", self.millis);
        out
    }

    pub fn json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

/// Finite dimensions as numbers, the rest as their printed form.
pub fn dimension_json(v: DimensionValue) -> Value {
    match v {
        DimensionValue::Finite(n) => Value::from(n),
        other => Value::from(other.to_string()),
    }
}
