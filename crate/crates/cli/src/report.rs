//! Ordered key/value reports with a versioned schema line.

use serde_json::{Map, Value};

use crate::args::OutputFormat;

pub const SCHEMA: &str = "strq/1";

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    fields: Vec<(String, Value)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Self { fields: Vec::new() };
        r.push("schema", SCHEMA);
        r.push("command", command);
        r
    }

    pub fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.push((key.to_owned(), value.into()));
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Human => {
                let mut out = String::new();
                for (k, v) in &self.fields {
                    out.push_str(k);
                    out.push_str(": ");
                    out.push_str(&human(v));
                    out.push('\n');
                }
                out
            }
            OutputFormat::Json => {
                let map: Map<String, Value> = self.fields.iter().cloned().collect();
                let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("values serialize");
                s.push('\n');
                s
            }
        }
    }
}

fn human(v: &Value) -> String {
    match v {
        Value::Null => "none".to_owned(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(human).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

/// A float rounded to six decimals; non-finite values become `null`.
pub fn decimal(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    format!("{x:.6}").parse::<f64>().map_or(Value::Null, Value::from)
}
