use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// One command result in all three renderings. Every command fills all of
/// them, so the format switch never changes what is computed.
pub struct Report {
    pub header: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub json: String,
}

impl Report {
    pub fn new<T: Serialize>(doc: &T) -> Self {
        Report {
            header: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
            json: serde_json::to_string_pretty(doc).expect("report serializes"),
        }
    }

    pub fn field(mut self, key: &str, value: impl ToString) -> Self {
        self.header.push((key.to_string(), value.to_string()));
        self
    }

    pub fn table(mut self, columns: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.columns = columns.iter().map(|c| c.to_string()).collect();
        self.rows = rows;
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text(),
            Format::Json => format!("{}\n", self.json),
            Format::Csv => self.csv(),
        }
    }

    fn text(&self) -> String {
        let mut out = String::new();
        let key_width = self.header.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        for (k, v) in &self.header {
            let _ = writeln!(out, "{k:<key_width$}  {v}");
        }
        if self.columns.is_empty() || self.rows.is_empty() {
            return out;
        }
        if !self.header.is_empty() {
            out.push('\n');
        }
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut line = |cells: &[String]| {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            let _ = writeln!(out, "{}", padded.join("  ").trim_end());
        };
        line(&self.columns);
        for row in &self.rows {
            line(row);
        }
        out
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        if self.columns.is_empty() {
            w.write_record(["key", "value"]).expect("in-memory write");
            for (k, v) in &self.header {
                w.write_record([k, v]).expect("in-memory write");
            }
        } else {
            w.write_record(&self.columns).expect("in-memory write");
            for row in &self.rows {
                w.write_record(row).expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }
}
