use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use icf_core::exact_algebra::{Polynomial, QuadraticSurd, Rational};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// One table cell. Integers of unbounded size go to JSON as decimal strings.
#[derive(Clone, Debug)]
pub enum Cell {
    Index(usize),
    Int(BigInt),
    Ints(Vec<BigInt>),
    Text(String),
    Bool(bool),
    Poly(Polynomial),
    Rat(Rational),
    Surd(QuadraticSurd),
    Null,
}

const TABLE_LIST_LIMIT: usize = 12;

impl Cell {
    pub fn int(n: impl Into<BigInt>) -> Cell {
        Cell::Int(n.into())
    }

    pub fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }

    pub fn opt(c: Option<Cell>) -> Cell {
        c.unwrap_or(Cell::Null)
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Index(i) => json!(i),
            Cell::Int(n) => json!(n.to_string()),
            Cell::Ints(v) => Value::Array(v.iter().map(|n| json!(n.to_string())).collect()),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
            Cell::Poly(p) => {
                Value::Array(p.coeffs().iter().map(|n| json!(n.to_string())).collect())
            }
            Cell::Rat(r) => json!({"num": r.numer().to_string(), "den": r.denom().to_string()}),
            Cell::Surd(s) => {
                json!({"P": s.p().to_string(), "D": s.d().to_string(), "Q": s.q().to_string()})
            }
            Cell::Null => Value::Null,
        }
    }

    fn to_text(&self, full: bool) -> String {
        match self {
            Cell::Index(i) => i.to_string(),
            Cell::Int(n) => n.to_string(),
            Cell::Ints(v) => {
                let shown = if full {
                    v.len()
                } else {
                    v.len().min(TABLE_LIST_LIMIT)
                };
                let mut s = v[..shown]
                    .iter()
                    .map(BigInt::to_string)
                    .collect::<Vec<_>>()
                    .join(" ");
                if shown < v.len() {
                    s.push_str(&format!(" ... ({} total)", v.len()));
                }
                s
            }
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Poly(p) => p.to_string(),
            Cell::Rat(r) => r.to_string(),
            Cell::Surd(s) => s.to_string(),
            Cell::Null => "-".into(),
        }
    }
}

pub struct Report {
    pub command: &'static str,
    pub params: Map<String, Value>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub violations: Vec<String>,
    /// Summary lines, shown after the table in human output only.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, params: Value, columns: &[&'static str]) -> Self {
        let params = match params {
            Value::Object(m) => m,
            _ => Map::new(),
        };
        Report {
            command,
            params,
            columns: columns.to_vec(),
            rows: Vec::new(),
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<Cell>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> Result<()> {
        match format {
            Format::Json => self.write_json(out),
            Format::Csv => self.write_csv(out),
            Format::Table => self.write_table(out),
        }
    }

    fn write_json(&self, out: &mut dyn Write) -> Result<()> {
        let results: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let m: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(r)
                    .map(|(c, v)| (c.to_string(), v.to_json()))
                    .collect();
                Value::Object(m)
            })
            .collect();
        let doc = json!({
            "meta": {
                "command": self.command,
                "params": self.params,
                "version": env!("CARGO_PKG_VERSION"),
            },
            "results": results,
            "violations": self.violations,
        });
        serde_json::to_writer_pretty(&mut *out, &doc)?;
        writeln!(out)?;
        Ok(())
    }

    fn write_csv(&self, out: &mut dyn Write) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for r in &self.rows {
            w.write_record(r.iter().map(|c| c.to_text(true)))?;
        }
        w.flush()?;
        Ok(())
    }

    fn write_table(&self, out: &mut dyn Write) -> Result<()> {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| c.to_text(false)).collect())
            .collect();
        let widths: Vec<usize> = (0..self.columns.len())
            .map(|i| {
                cells
                    .iter()
                    .map(|r| r[i].len())
                    .chain([self.columns[i].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |items: Vec<&str>| {
            items
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        writeln!(out, "{}", line(self.columns.clone()))?;
        writeln!(
            out,
            "{}",
            line(
                widths
                    .iter()
                    .map(|w| "-".repeat(*w))
                    .collect::<Vec<_>>()
                    .iter()
                    .map(String::as_str)
                    .collect()
            )
        )?;
        for r in &cells {
            writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
        }
        for n in &self.notes {
            writeln!(out, "{n}")?;
        }
        for v in &self.violations {
            writeln!(out, "VIOLATION: {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new("demo", json!({"x": "3"}), &["j", "value", "poly"]);
        r.row(vec![
            Cell::Index(0),
            Cell::Rat(Rational::new(3.into(), 4.into())),
            Cell::Poly(Polynomial::from_i64s(&[1, 2])),
        ]);
        r.notes.push("done".into());
        r
    }

    fn render(r: &Report, f: Format) -> String {
        let mut buf = Vec::new();
        r.write(f, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn json_schema() {
        let v: Value = serde_json::from_str(&render(&sample(), Format::Json)).unwrap();
        assert_eq!(v["meta"]["command"], "demo");
        assert_eq!(v["results"][0]["value"]["den"], "4");
        assert_eq!(v["results"][0]["poly"], json!(["1", "2"]));
        assert_eq!(v["violations"], json!([]));
    }

    #[test]
    fn csv_and_table() {
        let c = render(&sample(), Format::Csv);
        assert_eq!(c, "j,value,poly\n0,3/4,2x + 1\n");
        let t = render(&sample(), Format::Table);
        assert!(t.lines().next().unwrap().starts_with("j  value"));
        assert!(t.ends_with("done\n"));
    }

    #[test]
    fn long_lists_are_shortened_in_tables() {
        let c = Cell::Ints((0..20).map(BigInt::from).collect());
        assert!(c.to_text(false).ends_with("(20 total)"));
        assert_eq!(c.to_text(true).split(' ').count(), 20);
    }
}
