use serde_json::Value;

use crate::error::{Error, Result};

/// Output encodings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Tex,
}

/// Rows for the CSV and TeX encodings.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Table {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    fn csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Internal(format!("csv encoding failed: {e}"));
        w.write_record(&self.header).map_err(io)?;
        for r in &self.rows {
            w.write_record(r).map_err(io)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Internal(format!("csv encoding failed: {e}")))?;
        String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
    }

    fn tex(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "\\begin{{tabular}}{{{}}}\n",
            "l".repeat(self.header.len())
        ));
        out.push_str(&format!("{} \\\\\n\\hline\n", self.header.join(" & ")));
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|c| tex_cell(c)).collect();
            out.push_str(&format!("{} \\\\\n", cells.join(" & ")));
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

/// Math cells go into `$...$` with `*` dropped; other text is escaped.
fn tex_cell(c: &str) -> String {
    let mathy = !c.is_empty()
        && c.chars()
            .all(|ch| ch.is_ascii_digit() || " +-*/^(),;tnNm".contains(ch));
    if mathy {
        format!("${}$", c.replace('*', ""))
    } else {
        c.replace('_', "\\_")
            .replace('&', "\\&")
            .replace('%', "\\%")
    }
}

/// A command result: the JSON document plus its tabular view.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub table: Table,
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json)
                    .map_err(|e| Error::Internal(format!("json encoding failed: {e}")))?;
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self.table.csv(),
            Format::Tex => Ok(self.table.tex()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn encodings() {
        let mut t = Table::new(&["m", "polynomial", "provenance"]);
        t.push(vec![
            "2".into(),
            "2*n^2 - 1".into(),
            "golden-verified".into(),
        ]);
        t.push(vec!["x".into(), "a,b".into(), "c_d".into()]);
        let r = Report {
            json: json!({"b": 1, "a": "x"}),
            table: t,
        };
        assert_eq!(
            r.render(Format::Json).unwrap(),
            "{\n  \"a\": \"x\",\n  \"b\": 1\n}\n"
        );
        assert_eq!(
            r.render(Format::Csv).unwrap(),
            "m,polynomial,provenance\n2,2*n^2 - 1,golden-verified\nx,\"a,b\",c_d\n"
        );
        let tex = r.render(Format::Tex).unwrap();
        assert!(tex.contains("$2$ & $2n^2 - 1$ & golden-verified \\\\"));
        assert!(tex.contains("c\\_d"));
    }
}
