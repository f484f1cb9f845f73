//! Plain-text and Markdown rendering of a report document.

use std::fmt::Write;

#[derive(Debug, Default, Clone)]
pub struct Table {
    pub caption: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(caption: &str, headers: &[&str]) -> Self {
        Table {
            caption: caption.to_string(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        self.rows.push(cells);
    }
}

#[derive(Debug, Default, Clone)]
pub struct Doc {
    pub title: String,
    pub summary: Vec<String>,
    pub fields: Vec<(String, String)>,
    pub tables: Vec<Table>,
}

impl Doc {
    pub fn new(title: impl Into<String>) -> Self {
        Doc {
            title: title.into(),
            ..Doc::default()
        }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.summary.push(s.into());
    }

    pub fn field(&mut self, key: &str, value: impl ToString) {
        self.fields.push((key.to_string(), value.to_string()));
    }

    pub fn table(&mut self, t: Table) {
        self.tables.push(t);
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.title).unwrap();
        writeln!(out, "{}", "=".repeat(self.title.chars().count())).unwrap();
        for s in &self.summary {
            writeln!(out, "{s}").unwrap();
        }
        if !self.fields.is_empty() {
            out.push('\n');
            let width = self.fields.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
            for (k, v) in &self.fields {
                writeln!(out, "{k:<width$}  {v}").unwrap();
            }
        }
        for t in &self.tables {
            out.push('\n');
            writeln!(out, "{}", t.caption).unwrap();
            let cols = t.headers.len();
            let mut widths: Vec<usize> = t.headers.iter().map(|h| h.chars().count()).collect();
            for r in &t.rows {
                for (i, c) in r.iter().enumerate().take(cols) {
                    widths[i] = widths[i].max(c.chars().count());
                }
            }
            let fmt_row = |cells: &[String]| {
                let parts: Vec<String> = cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| {
                        let pad = w - c.chars().count();
                        format!("{c}{}", " ".repeat(pad))
                    })
                    .collect();
                parts.join("  ").trim_end().to_string()
            };
            writeln!(out, "{}", fmt_row(&t.headers)).unwrap();
            let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
            writeln!(out, "{}", rule.join("  ")).unwrap();
            for r in &t.rows {
                writeln!(out, "{}", fmt_row(r)).unwrap();
            }
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        writeln!(out, "# {}\n", self.title).unwrap();
        for s in &self.summary {
            writeln!(out, "{s}\n").unwrap();
        }
        for (k, v) in &self.fields {
            writeln!(out, "- **{k}**: {}", md_escape(v)).unwrap();
        }
        for t in &self.tables {
            writeln!(out, "\n## {}\n", t.caption).unwrap();
            writeln!(out, "| {} |", t.headers.join(" | ")).unwrap();
            let rule: Vec<&str> = t.headers.iter().map(|_| "---").collect();
            writeln!(out, "| {} |", rule.join(" | ")).unwrap();
            for r in &t.rows {
                let cells: Vec<String> = r.iter().map(|c| md_escape(c)).collect();
                writeln!(out, "| {} |", cells.join(" | ")).unwrap();
            }
        }
        out
    }
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}
