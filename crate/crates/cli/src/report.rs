use cosetlab::linalg::QMatrix;
use cosetlab::rational::fmt_q;
use cosetlab::Q;
use serde_json::{Map, Value};

pub const SCHEMA: &str = "cosetlab/1";

/// Output of one command: structured data for JSON, lines for text, and
/// whether every mathematical check it ran came out true.
pub struct Report {
    pub command: String,
    pub ok: bool,
    pub data: Map<String, Value>,
    pub text: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.into(), ok: true, data: Map::new(), text: vec![] }
    }

    pub fn set(&mut self, key: &str, v: impl Into<Value>) {
        self.data.insert(key.into(), v.into());
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    /// Records a named check and folds it into the overall status.
    pub fn check(&mut self, name: &str, holds: bool) {
        self.ok &= holds;
        self.line(format!("{name}: {}", if holds { "ok" } else { "FAILED" }));
    }

    pub fn to_json(&self) -> String {
        let mut m = self.data.clone();
        m.insert("schema".into(), SCHEMA.into());
        m.insert("command".into(), self.command.clone().into());
        m.insert("status".into(), status(self.ok).into());
        serde_json::to_string_pretty(&Value::Object(m)).expect("json values serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} [{}]\n", self.command, status(self.ok));
        for l in &self.text {
            out.push_str(l);
            out.push('\n');
        }
        out.pop();
        out
    }
}

fn status(ok: bool) -> &'static str {
    if ok { "pass" } else { "fail" }
}

pub fn error_json(command: &str, msg: &str) -> String {
    let mut m = Map::new();
    m.insert("schema".into(), SCHEMA.into());
    m.insert("command".into(), command.into());
    m.insert("status".into(), "error".into());
    m.insert("error".into(), msg.into());
    serde_json::to_string_pretty(&Value::Object(m)).expect("json values serialize")
}

pub fn jq(x: &Q) -> Value {
    Value::String(fmt_q(x))
}

pub fn jvec(v: &[Q]) -> Value {
    Value::Array(v.iter().map(jq).collect())
}

pub fn jints(v: &[i64]) -> Value {
    Value::Array(v.iter().map(|&x| x.into()).collect())
}

pub fn jmat(m: &QMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| jvec(r)).collect())
}

pub fn tvec(v: &[Q]) -> String {
    format!("[{}]", v.iter().map(fmt_q).collect::<Vec<_>>().join(", "))
}

/// Matrix rows indented under a heading.
pub fn tmat(heading: &str, m: &QMatrix) -> Vec<String> {
    let mut out = vec![format!("{heading}:")];
    out.extend(m.to_rows().iter().map(|r| format!("  {}", tvec(r))));
    out
}
