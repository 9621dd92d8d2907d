use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Exit 0.
    Computed,
    /// Exit 1: computed, and the answer is negative.
    Negative,
    /// Exit 3: a budget or bound ran out before an answer.
    Inconclusive,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Computed => 0,
            Status::Negative => 1,
            Status::Inconclusive => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Computed => "computed",
            Status::Negative => "negative",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// A command's result: text for people, fields for the JSON report.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub status: Status,
    text: Vec<String>,
    fields: Map<String, Value>,
}

impl Outcome {
    pub fn new() -> Self {
        Outcome {
            status: Status::Computed,
            text: Vec::new(),
            fields: Map::new(),
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    /// Appends a multi-line block verbatim.
    pub fn block(&mut self, s: &str) {
        self.text.extend(s.lines().map(str::to_string));
    }

    pub fn field(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).expect("report values serialize");
        self.fields.insert(key.to_string(), v);
    }

    pub fn text(&self) -> String {
        let mut s = self.text.join("\n");
        s.push('\n');
        s
    }

    /// `{"schema": 1, "command": ..., "status": ..., <fields>}`.
    pub fn json(&self, command: &str, elapsed_ms: Option<f64>) -> String {
        let mut top = Map::new();
        top.insert("schema".into(), Value::from(1));
        top.insert("command".into(), Value::from(command));
        top.insert("status".into(), Value::from(self.status.as_str()));
        top.insert("exit_code".into(), Value::from(self.status.code()));
        for (k, v) in &self.fields {
            top.insert(k.clone(), v.clone());
        }
        if let Some(ms) = elapsed_ms {
            top.insert("elapsed_ms".into(), Value::from(ms));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("json");
        s.push('\n');
        s
    }
}
