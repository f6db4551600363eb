//! Tabular report rendering: aligned text and CSV.

use serde_json::{json, Value};

/// A rendered-ready table: every row has exactly one cell per column, and an
/// optional footer row (the "average" line of the prediction tables).
#[derive(Debug, Clone)]
pub struct ReportTable {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub footer: Option<Vec<String>>,
}

impl ReportTable {
    pub fn new(title: impl Into<String>, columns: &[&str]) -> Self {
        ReportTable {
            title: title.into(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            footer: None,
        }
    }

    pub fn push_row(&mut self, cells: Vec<String>) {
        assert_eq!(cells.len(), self.columns.len(), "row width mismatch");
        self.rows.push(cells);
    }

    pub fn set_footer(&mut self, cells: Vec<String>) {
        assert_eq!(cells.len(), self.columns.len(), "footer width mismatch");
        self.footer = Some(cells);
    }

    fn all_rows(&self) -> impl Iterator<Item = &Vec<String>> {
        self.rows.iter().chain(self.footer.as_ref())
    }

    /// Aligned text: title line, header, rows, footer. First column is
    /// left-aligned, the rest right-aligned.
    pub fn render_text(&self) -> String {
        let mut widths: Vec<usize> = self.columns.iter().map(String::len).collect();
        for row in self.all_rows() {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        out.push_str(&self.title);
        out.push('\n');
        let line = |cells: &[String]| {
            let mut rendered = String::new();
            for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
                if i > 0 {
                    rendered.push_str("  ");
                }
                if i == 0 {
                    rendered.push_str(&format!("{cell:<w$}"));
                } else {
                    rendered.push_str(&format!("{cell:>w$}"));
                }
            }
            let mut s = rendered.trim_end().to_string();
            s.push('\n');
            s
        };
        out.push_str(&line(&self.columns));
        for row in &self.rows {
            out.push_str(&line(row));
        }
        if let Some(footer) = &self.footer {
            out.push_str(&line(footer));
        }
        out
    }

    /// CSV: header, rows, footer; fields quoted only when needed.
    pub fn render_csv(&self) -> String {
        let quote = |s: &str| {
            if s.contains(',') || s.contains('"') || s.contains('\n') {
                format!("\"{}\"", s.replace('"', "\"\""))
            } else {
                s.to_string()
            }
        };
        let mut out = String::new();
        let line = |cells: &[String]| {
            let rendered: Vec<String> = cells.iter().map(|c| quote(c)).collect();
            format!("{}\n", rendered.join(","))
        };
        out.push_str(&line(&self.columns));
        for row in &self.rows {
            out.push_str(&line(row));
        }
        if let Some(footer) = &self.footer {
            out.push_str(&line(footer));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "title": self.title,
            "columns": self.columns,
            "rows": self.rows,
            "footer": self.footer,
        })
    }
}
