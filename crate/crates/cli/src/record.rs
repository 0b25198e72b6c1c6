use serde_json::{Map, Value};

pub const SCHEMA_VERSION: &str = "1";

/// One JSON emission. Big integers are decimal strings; maps are sorted by
/// key so output is byte-stable.
#[derive(Debug, Clone)]
pub struct OutputRecord {
    command: &'static str,
    inputs: Map<String, Value>,
    results: Map<String, Value>,
}

impl OutputRecord {
    pub fn new(command: &'static str) -> Self {
        OutputRecord {
            command,
            inputs: Map::new(),
            results: Map::new(),
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_owned(), value.into());
        self
    }

    pub fn result(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.results.insert(key.to_owned(), value.into());
        self
    }

    pub fn to_json(&self) -> Value {
        let mut root = Map::new();
        root.insert("command".into(), Value::from(self.command));
        root.insert("inputs".into(), Value::Object(self.inputs.clone()));
        root.insert("results".into(), Value::Object(self.results.clone()));
        root.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
        Value::Object(root)
    }

    pub fn render(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.to_json()).expect("JSON values serialize");
        out.push('\n');
        out
    }
}

/// Decimal string for anything integer-like.
pub fn num(value: impl ToString) -> Value {
    Value::String(value.to_string())
}
