//! Tables written as CSV (with `#` comment lines on top) or JSON.

use std::io::{BufRead, Read, Write};
use std::path::Path;

use serde_json::{json, Value};

use crate::CliError;

/// Rounds to 12 significant digits and prints the shortest string that reads
/// back to the rounded value. Zero (of either sign) prints as `0`.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let v: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    let a = v.abs();
    if (1e-5..1e15).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

/// The value `format_number` keeps, as a float.
pub fn rounded(x: f64) -> f64 {
    format_number(x).parse().unwrap_or(x)
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    /// The cell as written to CSV.
    pub fn text(&self) -> String {
        match self {
            Cell::Num(x) => format_number(*x),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn parse(s: &str) -> Self {
        match s {
            "" => Cell::Empty,
            "true" => Cell::Bool(true),
            "false" => Cell::Bool(false),
            _ => match s.parse::<f64>() {
                Ok(x) => Cell::Num(x),
                Err(_) => Cell::Text(s.to_string()),
            },
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(x) if x.is_finite() => json!(rounded(*x)),
            Cell::Num(x) => json!(x.to_string()),
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Bool(b)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map(Into::into).unwrap_or(Cell::Empty)
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    /// Comment lines without the leading `# `.
    pub comments: Vec<String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: Vec<String>) -> Self {
        Self { comments: Vec::new(), header, rows: Vec::new() }
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    pub fn write_csv(&self, w: &mut dyn Write) -> Result<(), CliError> {
        for c in &self.comments {
            writeln!(w, "# {c}")?;
        }
        let mut out = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w);
        let io = |e: csv::Error| CliError::Io(e.to_string());
        out.write_record(&self.header).map_err(io)?;
        for row in &self.rows {
            out.write_record(row.iter().map(Cell::text)).map_err(io)?;
        }
        out.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("CSV output is UTF-8")
    }

    /// Reads what [`Table::write_csv`] produced.
    pub fn read_csv(r: impl Read) -> Result<Self, CliError> {
        let mut reader = std::io::BufReader::new(r);
        let mut comments = Vec::new();
        let mut rest = String::new();
        let mut line = String::new();
        loop {
            line.clear();
            if reader.read_line(&mut line)? == 0 {
                break;
            }
            match line.strip_prefix('#') {
                Some(c) => {
                    let c = c.trim_end_matches(['\n', '\r']);
                    comments.push(c.strip_prefix(' ').unwrap_or(c).to_string());
                }
                None => {
                    rest.push_str(&line);
                    break;
                }
            }
        }
        reader.read_to_string(&mut rest)?;
        let bad = |e: csv::Error| CliError::Config(format!("malformed CSV: {e}"));
        let mut csv = csv::ReaderBuilder::new().has_headers(true).from_reader(rest.as_bytes());
        let header: Vec<String> = csv.headers().map_err(bad)?.iter().map(str::to_string).collect();
        let mut rows = Vec::new();
        for rec in csv.records() {
            rows.push(rec.map_err(bad)?.iter().map(Cell::parse).collect());
        }
        Ok(Self { comments, header, rows })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "comments": self.comments,
            "columns": self.header,
            "rows": self.rows.iter().map(|r| r.iter().map(Cell::json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// Writes `bytes` to `path`, or to `stdout` without one.
pub fn emit(path: Option<&Path>, bytes: &[u8], stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, bytes).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => Ok(stdout.write_all(bytes)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers() {
        assert_eq!(format_number(0.0), "0");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(0.5), "0.5");
        assert_eq!(format_number(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_number(2f64.sqrt() / 3.0), "0.471404520791");
        assert_eq!(format_number(6.0), "6");
        assert_eq!(format_number(1.5e-12), "1.5e-12");
        assert_eq!(format_number(0.0075), "0.0075");
        assert_eq!(format_number(0.1 + 0.2), "0.3");
        for x in [1.0 / 7.0, 123456.789012345, 3.3e-9, -0.0845] {
            let once = format_number(x);
            assert_eq!(format_number(once.parse().unwrap()), once);
        }
    }

    #[test]
    fn csv_round_trip() {
        let mut t = Table::new(vec!["a".into(), "label".into(), "flag".into()]);
        t.comments.push("made by hand".into());
        t.rows.push(vec![Cell::Num(0.1), "0,1/2,1/2".into(), Cell::Bool(true)]);
        t.rows.push(vec![Cell::Num(1.0 / 3.0), Cell::Empty, Cell::Empty]);
        let text = t.to_csv();
        assert_eq!(text, "# made by hand\na,label,flag\n0.1,\"0,1/2,1/2\",true\n0.333333333333,,\n");
        let back = Table::read_csv(text.as_bytes()).unwrap();
        assert_eq!(back.to_csv(), text);
        assert_eq!(back.comments, t.comments);
    }

    #[test]
    fn header_only() {
        let t = Table::new(vec!["x".into()]);
        assert_eq!(t.to_csv(), "x\n");
        assert_eq!(Table::read_csv("x\n".as_bytes()).unwrap().to_csv(), "x\n");
    }
}
