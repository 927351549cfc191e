use std::io::{self, Write};

use serde_json::{Map, Value};

use crate::args::Format;

/// One structured output record; the human view is rendered from it.
pub struct Record {
    pub summary: String,
    pub body: Map<String, Value>,
}

impl Record {
    pub fn new(command: &str, params: Value) -> Self {
        let mut body = Map::new();
        body.insert("schema".into(), Value::from(format!("gbooks.{command}/1")));
        body.insert("params".into(), params);
        Record {
            summary: String::new(),
            body,
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.body.insert(key.into(), value.into());
        self
    }

    pub fn summary(&mut self, text: impl Into<String>) -> &mut Self {
        self.summary = text.into();
        self
    }
}

pub fn emit(records: &[Record], format: Format) -> io::Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for rec in records {
        match format {
            Format::Jsonl => {
                serde_json::to_writer(&mut out, &rec.body)?;
                writeln!(out)?;
            }
            Format::Human => {
                writeln!(out, "{}", rec.summary)?;
                for (k, v) in &rec.body {
                    write_human(&mut out, k, v)?;
                }
            }
        }
    }
    out.flush()
}

fn write_human(out: &mut impl Write, key: &str, v: &Value) -> io::Result<()> {
    match v {
        Value::Object(m) => {
            for (k, inner) in m {
                write_human(out, &format!("{key}.{k}"), inner)?;
            }
            Ok(())
        }
        Value::Array(items) if items.iter().any(|i| i.is_object()) => {
            for (i, inner) in items.iter().enumerate() {
                write_human(out, &format!("{key}[{i}]"), inner)?;
            }
            Ok(())
        }
        Value::String(s) => writeln!(out, "  {key}: {s}"),
        other => writeln!(out, "  {key}: {other}"),
    }
}
