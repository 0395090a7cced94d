use std::collections::BTreeSet;
use std::fmt::Write;

use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

pub struct Report {
    pub command: String,
    pub pass: bool,
    pub body: Value,
}

pub fn points_json(pts: &BTreeSet<Vec<i64>>) -> Value {
    json!(pts.iter().collect::<Vec<_>>())
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

/// A flat array of scalars, shown as a tuple.
fn tuple(v: &Value) -> Option<String> {
    let items = v.as_array()?;
    let parts: Option<Vec<String>> = items.iter().map(scalar).collect();
    Some(format!("({})", parts?.join(", ")))
}

fn write_value(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if let Some(s) = scalar(v).or_else(|| tuple(v)) {
        let _ = writeln!(out, "{pad}- {key}: {s}");
        return;
    }
    match v {
        Value::Array(items) => {
            let _ = writeln!(out, "{pad}- {key} ({}):", items.len());
            for (i, item) in items.iter().enumerate() {
                write_value(out, &i.to_string(), item, depth + 1);
            }
        }
        Value::Object(map) => {
            let _ = writeln!(out, "{pad}- {key}:");
            for (k, x) in map {
                write_value(out, k, x, depth + 1);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}

fn symbol(label: &Value) -> &str {
    match label.as_str() {
        Some("DELTA") => "Δ",
        Some("CROSS") => "×",
        Some(s) => s,
        None => "?",
    }
}

fn table1_grid(out: &mut String, rows: &[Value]) {
    out.push_str("| order | k = 1 | k = 2 | k = 3 |\n|---|---|---|---|\n");
    for row in rows {
        let order: Vec<String> =
            row["order"].as_array().into_iter().flatten().map(|i| format!("t_{}", i)).collect();
        let labels: Vec<&str> = row["labels"].as_array().into_iter().flatten().map(symbol).collect();
        let _ = writeln!(out, "| {} | {} |", order.join(" > "), labels.join(" | "));
    }
    out.push('\n');
}

impl Report {
    pub fn new(command: &str, pass: bool, body: Value) -> Self {
        Report { command: command.to_string(), pass, body }
    }

    pub fn pass(command: &str, body: Value) -> Self {
        Self::new(command, true, body)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let doc = json!({"command": self.command, "pass": self.pass, "report": self.body});
                let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Markdown => self.markdown(),
        }
    }

    fn markdown(&self) -> String {
        let mut out = format!("# {}\n\nResult: **{}**\n\n", self.command, if self.pass { "PASS" } else { "FAIL" });
        let Some(map) = self.body.as_object() else {
            return out;
        };
        if self.command == "table1" {
            if let Some(rows) = map.get("rows").and_then(Value::as_array) {
                table1_grid(&mut out, rows);
            }
        }
        for (k, v) in map {
            if self.command == "table1" && (k == "rows" || k == "cells") {
                continue;
            }
            write_value(&mut out, k, v, 0);
        }
        out
    }
}
