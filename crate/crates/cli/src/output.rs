use std::fs::File;
use std::io::Write;
use std::path::Path;

use extremo::series::format_float;
use extremo::SeriesMatrix;

use crate::error::{config, CliError, CliResult};

pub(crate) fn num(v: f64) -> String {
    format_float(v)
}

pub(crate) fn opt(v: Option<f64>) -> String {
    v.map(format_float).unwrap_or_default()
}

fn io_err(path: &Path) -> impl Fn(std::io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.to_path_buf(), source }
}

/// Write a CSV table to `path`, or to stdout when `path` is `None`.
pub(crate) fn write_table(path: Option<&Path>, header: &[&str], rows: &[Vec<String>]) -> CliResult<()> {
    let sink: Box<dyn Write> = match path {
        Some(p) => Box::new(File::create(p).map_err(io_err(p))?),
        None => Box::new(std::io::stdout().lock()),
    };
    let shown = path.unwrap_or(Path::new("<stdout>"));
    let mut w = csv::Writer::from_writer(sink);
    let csv_err = |e: csv::Error| CliError::Io { path: shown.to_path_buf(), source: e.into() };
    w.write_record(header).map_err(csv_err)?;
    for r in rows {
        w.write_record(r).map_err(csv_err)?;
    }
    w.flush().map_err(io_err(shown))
}

pub(crate) fn write_text(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(io_err(path))
}

/// Column `column` of a CSV file as a univariate series.
pub(crate) fn read_column(path: &Path, column: usize) -> CliResult<SeriesMatrix> {
    let all = read_matrix(path)?;
    pick(&all, column, path)
}

pub(crate) fn read_matrix(path: &Path) -> CliResult<SeriesMatrix> {
    let f = File::open(path).map_err(io_err(path))?;
    SeriesMatrix::read_csv(f).map_err(|e| config(format!("{}: {e}", path.display())))
}

pub(crate) fn pick(all: &SeriesMatrix, column: usize, path: &Path) -> CliResult<SeriesMatrix> {
    if column >= all.dim() {
        return Err(config(format!("{}: no column {column} (file has {})", path.display(), all.dim())));
    }
    Ok(SeriesMatrix::from_column(all.column(column))?)
}
