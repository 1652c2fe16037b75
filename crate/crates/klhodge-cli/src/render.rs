use std::fmt::Write as _;

use serde_json::Value;

use crate::args::Format;

/// A flat view of a document for CSV and Markdown output.
#[derive(Debug, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// Extra lines shown under the Markdown table.
    pub notes: Vec<String>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Self {
            headers,
            ..Self::default()
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

pub fn render(format: Format, doc: &Value, table: &Table) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("a JSON value always serializes");
            s.push('\n');
            s
        }
        Format::Csv => csv(table),
        Format::Md => markdown(doc, table),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv(table: &Table) -> String {
    let mut out = String::new();
    let line = |cells: &mut dyn Iterator<Item = String>| cells.collect::<Vec<_>>().join(",");
    out.push_str(&line(&mut table.headers.iter().map(|h| csv_field(h))));
    out.push('\n');
    for row in &table.rows {
        out.push_str(&line(&mut row.iter().map(|c| csv_field(c))));
        out.push('\n');
    }
    out
}

fn markdown(doc: &Value, table: &Table) -> String {
    let mut out = String::new();
    if let Some(req) = doc.get("request").and_then(Value::as_object) {
        let parts: Vec<String> = req.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
        let _ = writeln!(out, "## klhodge {}\n", parts.join(" "));
    }
    let _ = writeln!(out, "| {} |", table.headers.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(table.headers.len()));
    for row in &table.rows {
        let _ = writeln!(out, "| {} |", row.join(" | "));
    }
    if !table.notes.is_empty() {
        out.push('\n');
        for n in &table.notes {
            let _ = writeln!(out, "{n}");
        }
    }
    out
}

pub fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
