use serde::Serialize;
use serde_json::{Map, Value};

/// One result. Every command fills the same fields so the JSON schema does
/// not depend on the command; `value` carries what does not fit elsewhere.
#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub command: &'static str,
    pub input: String,
    pub m: Option<usize>,
    pub generators: Vec<String>,
    pub dim: Option<usize>,
    pub good: Option<bool>,
    pub method: Option<String>,
    pub value: Option<Value>,
    pub timing_ms: f64,
}

impl Record {
    pub fn new(command: &'static str, input: impl Into<String>) -> Self {
        Record {
            command,
            input: input.into(),
            m: None,
            generators: Vec::new(),
            dim: None,
            good: None,
            method: None,
            value: None,
            timing_ms: 0.0,
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let mut head = self.command.to_string();
        if let Some(m) = self.m {
            head.push_str(&format!(" m={m}"));
        }
        if let Some(method) = &self.method {
            head.push_str(&format!(" method={method}"));
        }
        out.push_str(&head);
        out.push('\n');
        out.push_str(&format!("input: {}\n", self.input));
        if !self.generators.is_empty() {
            out.push_str("generators:\n");
            for g in &self.generators {
                out.push_str(&format!("  {g}\n"));
            }
        }
        if let Some(d) = self.dim {
            out.push_str(&format!("dim: {d}\n"));
        }
        if let Some(g) = self.good {
            out.push_str(&format!("good: {g}\n"));
        }
        match &self.value {
            None => {}
            Some(Value::Object(map)) => {
                for (k, v) in map {
                    out.push_str(&format!("{k}: {}\n", plain(v)));
                }
            }
            Some(v) => out.push_str(&format!("value: {}\n", plain(v))),
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// A failed request: message plus the exit code it maps to.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub command: String,
    pub error: String,
    pub exit_code: i32,
}

/// What one request line produced.
#[derive(Clone, Debug)]
pub enum Line {
    Ok(Record),
    Err(Failure),
}

impl Line {
    pub fn json(&self, batch_line: Option<usize>) -> String {
        let mut v = match self {
            Line::Ok(r) => serde_json::to_value(r),
            Line::Err(f) => serde_json::to_value(f),
        }
        .expect("records serialize");
        if let (Some(n), Value::Object(map)) = (batch_line, &mut v) {
            let mut with_line = Map::new();
            with_line.insert("line".into(), Value::from(n));
            with_line.append(map);
            v = Value::Object(with_line);
        }
        v.to_string()
    }

    pub fn text(&self, batch_line: Option<usize>) -> String {
        let prefix = batch_line.map(|n| format!("[line {n}] ")).unwrap_or_default();
        match self {
            Line::Ok(r) => format!("{prefix}{}", r.text()),
            Line::Err(f) => format!("{prefix}error: {}\n", f.error),
        }
    }
}
