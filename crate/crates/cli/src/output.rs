//! Tables with a fixed header, written as CSV or as a JSON array of objects.

use dioph::HPFloat;
use std::io::Write;

/// Decimal places printed for ball midpoints.
pub const PLACES: u32 = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Table {
        Table { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&self.columns)?;
                for r in &self.rows {
                    w.write_record(r)?;
                }
                w.flush()
            }
            Format::Json => {
                let records: Vec<serde_json::Map<String, serde_json::Value>> = self
                    .rows
                    .iter()
                    .map(|r| {
                        self.columns
                            .iter()
                            .zip(r)
                            .map(|(c, v)| (c.to_string(), serde_json::Value::String(v.clone())))
                            .collect()
                    })
                    .collect();
                serde_json::to_writer_pretty(&mut *out, &records)?;
                writeln!(out)
            }
        }
    }
}

/// Midpoint rounded to [`PLACES`] decimals.
pub fn mid(b: &HPFloat) -> String {
    b.to_fixed(PLACES)
}

/// Upper bound on the ball radius, in scientific notation.
pub fn rad(b: &HPFloat) -> String {
    format!("{:.3e}", b.rad_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_json_mirror() {
        let mut t = Table::new(&["a", "b"]);
        t.push(vec!["1".into(), "x,y".into()]);
        let mut csv = Vec::new();
        t.write(Format::Csv, &mut csv).unwrap();
        assert_eq!(String::from_utf8(csv).unwrap(), "a,b\n1,\"x,y\"\n");
        let mut json = Vec::new();
        t.write(Format::Json, &mut json).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&json).unwrap();
        assert_eq!(v[0]["b"], "x,y");
    }
}
