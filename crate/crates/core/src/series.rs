//! Containers for observed series and CSV ingestion.

use std::io::{Read, Write};

use crate::error::{Error, Result};

/// An `n × d` block of observations, rows in time order, stored row-major.
///
/// All entries are finite; missing or non-finite values are rejected at
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesMatrix {
    values: Vec<f64>,
    n: usize,
    d: usize,
}

impl SeriesMatrix {
    pub fn new(values: Vec<f64>, n: usize, d: usize) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::EmptyInput("series"));
        }
        if values.len() != n * d {
            return Err(Error::DimensionMismatch {
                expected: n * d,
                got: values.len(),
            });
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                row: pos / d,
                col: pos % d,
            });
        }
        Ok(Self { values, n, d })
    }

    /// A univariate series.
    pub fn from_column(values: Vec<f64>) -> Result<Self> {
        let n = values.len();
        Self::new(values, n, 1)
    }

    /// Two aligned univariate series as one bivariate series.
    pub fn from_columns(columns: &[&[f64]]) -> Result<Self> {
        let d = columns.len();
        if d == 0 {
            return Err(Error::EmptyInput("series"));
        }
        let n = columns[0].len();
        if let Some(bad) = columns.iter().find(|c| c.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: bad.len(),
            });
        }
        let mut values = Vec::with_capacity(n * d);
        for t in 0..n {
            values.extend(columns.iter().map(|c| c[t]));
        }
        Self::new(values, n, d)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn row(&self, t: usize) -> &[f64] {
        &self.values[t * self.d..(t + 1) * self.d]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.values.chunks_exact(self.d)
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.rows().map(|r| r[j]).collect()
    }

    /// Entries in row-major order.
    pub fn as_slice(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Rows reordered by `order` (a permutation or a resampling index path).
    pub fn select_rows(&self, order: &[usize]) -> SeriesMatrix {
        let mut values = Vec::with_capacity(order.len() * self.d);
        for &t in order {
            values.extend_from_slice(self.row(t));
        }
        SeriesMatrix {
            values,
            n: order.len(),
            d: self.d,
        }
    }

    pub fn scaled(&self, c: f64) -> SeriesMatrix {
        SeriesMatrix {
            values: self.values.iter().map(|v| v * c).collect(),
            n: self.n,
            d: self.d,
        }
    }

    /// Read a CSV with one column per coordinate. A header row is detected
    /// when its first field does not parse as a number.
    pub fn read_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let mut values = Vec::new();
        let mut d = None;
        let mut n = 0;
        for (line, record) in rdr.records().enumerate() {
            let record = record.map_err(|e| Error::Csv(e.to_string()))?;
            if record.iter().all(str::is_empty) {
                continue;
            }
            if line == 0 && record.get(0).is_some_and(|f| f.parse::<f64>().is_err()) {
                continue;
            }
            match d {
                None => d = Some(record.len()),
                Some(d) if d != record.len() => {
                    return Err(Error::Csv(format!(
                        "line {}: expected {} fields, found {}",
                        line + 1,
                        d,
                        record.len()
                    )))
                }
                _ => {}
            }
            for (col, field) in record.iter().enumerate() {
                let v: f64 = field.parse().map_err(|_| {
                    Error::Csv(format!("line {}, column {}: cannot parse `{}`", line + 1, col + 1, field))
                })?;
                values.push(v);
            }
            n += 1;
        }
        let d = d.ok_or(Error::EmptyInput("csv"))?;
        Self::new(values, n, d)
    }

    pub fn write_csv<W: Write>(&self, writer: W, header: &[&str]) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        if !header.is_empty() {
            w.write_record(header).map_err(|e| Error::Csv(e.to_string()))?;
        }
        for row in self.rows() {
            w.write_record(row.iter().map(|v| format_float(*v)))
                .map_err(|e| Error::Csv(e.to_string()))?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Shortest representation that round-trips through `parse::<f64>()`.
pub fn format_float(v: f64) -> String {
    format!("{v:?}")
}
