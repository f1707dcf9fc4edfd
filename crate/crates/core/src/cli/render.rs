use serde_json::Value;

use super::args::Format;

/// What a command produced: structured records plus, optionally, a
/// hand-laid table replacing the generic one.
pub struct Report {
    pub records: Vec<Value>,
    pub table: Option<String>,
    pub exit_code: i32,
    /// One-line remarks for standard error.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(records: Vec<Value>, exit_code: i32) -> Self {
        Self { records, table: None, exit_code, notes: Vec::new() }
    }

    pub fn with_table(mut self, table: String) -> Self {
        self.table = Some(table);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.records.iter().map(|r| format!("{r}\n")).collect(),
            Format::Csv => csv_text(&self.records),
            Format::Table => match &self.table {
                Some(t) => t.clone(),
                None => self.records.iter().map(table_text).collect::<Vec<_>>().join("\n"),
            },
        }
    }
}

/// `(dotted.key, text)` pairs in key order; arrays are joined with `;`.
fn flatten(value: &Value) -> Vec<(String, String)> {
    let mut out = Vec::new();
    walk(String::new(), value, &mut out);
    out
}

fn walk(prefix: String, value: &Value, out: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                walk(key, v, out);
            }
        }
        other => out.push((prefix, scalar(other))),
    }
}

fn scalar(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

fn table_text(record: &Value) -> String {
    let rows = flatten(record);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| {
            let v = if v.is_empty() { "-" } else { v.as_str() };
            format!("{k:<width$}  {v}\n")
        })
        .collect()
}

fn csv_text(records: &[Value]) -> String {
    let Some(first) = records.first() else {
        return String::new();
    };
    let header: Vec<String> = flatten(first).into_iter().map(|(k, _)| k).collect();
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&header).expect("in-memory write");
    for r in records {
        let row: Vec<String> = flatten(r).into_iter().map(|(_, v)| v).collect();
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}
