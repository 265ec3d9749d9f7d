use serde_json::Value;

use crate::config::Format;

/// Outcome of one command: a JSON document plus a flat table derived from it.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub passed: bool,
    pub json: Value,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(command: &str, headers: &[&str]) -> Self {
        Report {
            command: command.into(),
            passed: true,
            json: Value::Null,
            headers: headers.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.headers.len());
        self.rows.push(cells);
    }

    /// Records a residual check and folds it into the overall verdict.
    pub fn check(&mut self, name: &str, residual: f64, tol: f64) -> bool {
        let ok = residual <= tol;
        self.passed &= ok;
        self.row(vec![name.into(), sci(residual), sci(tol), verdict(ok).into()]);
        ok
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut doc = self.json.clone();
                if let Value::Object(map) = &mut doc {
                    map.insert("command".into(), self.command.clone().into());
                    map.insert("passed".into(), self.passed.into());
                }
                serde_json::to_string_pretty(&doc).expect("json values serialize") + "\n"
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.headers).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
            }
            Format::Pretty => {
                let widths: Vec<usize> = (0..self.headers.len())
                    .map(|i| self.rows.iter().map(|r| r[i].chars().count()).chain([self.headers[i].chars().count()]).max().unwrap_or(0))
                    .collect();
                let line = |cells: &[String]| {
                    cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
                };
                let mut out = format!("{}\n", self.command);
                out += &line(&self.headers);
                out.push('\n');
                out += &widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().join("  ");
                out.push('\n');
                for r in &self.rows {
                    out += &line(r);
                    out.push('\n');
                }
                out += &format!("status: {}\n", verdict(self.passed));
                out
            }
        }
    }
}

pub fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn sci(x: f64) -> String {
    format!("{x:.3e}")
}
