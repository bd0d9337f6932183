use std::fmt::{self, Write as _};

use crate::error::Result;

/// One table cell.
#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(x) => x.to_string(),
            // Both `{}` and `{:e}` print the shortest string that round-trips.
            Cell::Float(x) if *x != 0.0 && (x.abs() < 1e-4 || x.abs() >= 1e16) => format!("{x:e}"),
            Cell::Float(x) => x.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn text(&self) -> String {
        match self {
            Cell::Int(x) => x.to_string(),
            Cell::Float(x) => {
                let short = x.to_string();
                if short.len() <= 10 {
                    return short;
                }
                let a = x.abs();
                if *x == 0.0 || !x.is_finite() || (1e-3..1e6).contains(&a) {
                    format!("{x:.9}")
                } else {
                    format!("{x:.6e}")
                }
            }
            Cell::Text(s) => s.clone(),
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Int(x) => Some(*x as f64),
            Cell::Float(x) => Some(*x),
            Cell::Text(_) => None,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x as i64)
    }
}

impl From<i64> for Cell {
    fn from(x: i64) -> Self {
        Cell::Int(x)
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Text(x.to_string())
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

/// A named table.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Section {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Section {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Section {
            name: name.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Values of `column` in row order.
    pub fn column(&self, column: &str) -> Option<Vec<&Cell>> {
        let j = self.columns.iter().position(|c| c == column)?;
        Some(self.rows.iter().map(|r| &r[j]).collect())
    }
}

/// Ordered sections of a command's output. The primary table comes first.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ReportDocument {
    pub sections: Vec<Section>,
}

impl ReportDocument {
    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }

    /// CSV with a `# name` line before each table and a blank line between
    /// tables.
    pub fn to_csv(&self) -> Result<String> {
        let mut out = String::new();
        for (i, section) in self.sections.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            writeln!(out, "# {}", section.name).unwrap();
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&section.columns)?;
            for row in &section.rows {
                w.write_record(row.iter().map(Cell::csv))?;
            }
            let bytes = w.into_inner().map_err(|e| e.into_error())?;
            out.push_str(&String::from_utf8(bytes).expect("csv output is utf-8"));
        }
        Ok(out)
    }

    /// Parses the output of [`ReportDocument::to_csv`]. Numeric-looking cells
    /// come back as `Int` or `Float`.
    pub fn from_csv(source: &str) -> Result<Self> {
        let mut doc = ReportDocument::default();
        for block in source.split("\n\n") {
            let block = block.trim_start_matches('\n');
            let Some((title, body)) = block.split_once('\n') else {
                continue;
            };
            let name = title.trim_start_matches('#').trim();
            let mut r = csv::ReaderBuilder::new().from_reader(body.as_bytes());
            let columns = r.headers()?.iter().map(str::to_string).collect();
            let mut section = Section {
                name: name.to_string(),
                columns,
                rows: Vec::new(),
            };
            for record in r.records() {
                section.rows.push(record?.iter().map(parse_cell).collect());
            }
            doc.sections.push(section);
        }
        Ok(doc)
    }
}

fn parse_cell(s: &str) -> Cell {
    if let Ok(x) = s.parse::<i64>() {
        Cell::Int(x)
    } else if let Ok(x) = s.parse::<f64>() {
        Cell::Float(x)
    } else {
        Cell::Text(s.to_string())
    }
}

impl fmt::Display for ReportDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, section) in self.sections.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            writeln!(f, "== {} ==", section.name)?;
            let cells: Vec<Vec<String>> = section
                .rows
                .iter()
                .map(|r| r.iter().map(Cell::text).collect())
                .collect();
            let widths: Vec<usize> = (0..section.columns.len())
                .map(|j| {
                    cells
                        .iter()
                        .map(|r| r[j].chars().count())
                        .chain([section.columns[j].chars().count()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |f: &mut fmt::Formatter<'_>, items: &[String]| -> fmt::Result {
                let parts: Vec<String> = items
                    .iter()
                    .zip(&widths)
                    .map(|(s, &w)| format!("{s:>w$}"))
                    .collect();
                writeln!(f, "{}", parts.join("  ").trim_end())
            };
            line(f, &section.columns)?;
            for row in &cells {
                line(f, row)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ReportDocument {
        let mut a = Section::new("numbers", &["i", "x", "label"]);
        a.push(vec![1usize.into(), 0.1f64.into(), "one".into()]);
        a.push(vec![2usize.into(), (1.0f64 / 3.0).into(), "a,b".into()]);
        a.push(vec![3usize.into(), 1.234567890123e-17.into(), "".into()]);
        let mut b = Section::new("config", &["key", "value"]);
        b.push(vec!["grid".into(), 64usize.into()]);
        ReportDocument {
            sections: vec![a, b],
        }
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let doc = sample();
        let csv = doc.to_csv().unwrap();
        assert!(csv.starts_with("# numbers\ni,x,label\n"));
        let back = ReportDocument::from_csv(&csv).unwrap();
        assert_eq!(back.sections.len(), 2);
        let xs: Vec<f64> = back.sections[0]
            .column("x")
            .unwrap()
            .iter()
            .map(|c| c.as_f64().unwrap())
            .collect();
        assert_eq!(xs, vec![0.1, 1.0 / 3.0, 1.234567890123e-17]);
        assert_eq!(back.sections[0].rows[1][2], Cell::Text("a,b".into()));
    }

    #[test]
    fn text_is_aligned() {
        let text = sample().to_string();
        assert!(text.starts_with("== numbers =="));
        assert!(text.contains("== config =="));
    }
}
