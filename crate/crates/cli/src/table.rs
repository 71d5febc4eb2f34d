//! CSV input and output.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use eorbit_core::scalar::parse_rational;
use eorbit_core::{Error, Rational};

use crate::{CliError, CliResult};

/// Reads a whole file, or standard input for `-`.
pub fn read_input(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|e| CliError::Io(format!("standard input: {e}")))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Writes to a file, or to standard output when no path is given.
pub fn write_output(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io(format!("standard output: {e}")))
        }
    }
}

/// One parsed CSV row: the original field texts, the exact coordinates and
/// any trailing float columns.
#[derive(Debug, Clone)]
pub struct Row {
    pub fields: Vec<String>,
    pub values: Vec<Rational>,
    pub floats: Vec<f64>,
}

fn parse_float(s: &str) -> eorbit_core::Result<f64> {
    s.parse::<f64>().map_err(|_| Error::InvalidArgument(format!("cannot parse number `{s}`")))
}

/// Parses CSV rows of `width` exact coordinates followed by `extra` float
/// columns. Lines starting with `#` are skipped, and a first row that is not
/// numeric is taken as a header.
pub fn parse_rows(text: &str, width: usize, extra: usize) -> CliResult<Vec<Row>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| Error::InvalidArgument(format!("malformed CSV: {e}")))?;
        let fields: Vec<String> = record.iter().map(str::to_string).collect();
        if fields.iter().all(|f| f.is_empty()) {
            continue;
        }
        let split = width.min(fields.len());
        let parsed =
            fields[..split].iter().map(|f| parse_rational(f)).collect::<eorbit_core::Result<Vec<Rational>>>().and_then(
                |v| Ok((v, fields[split..].iter().map(|f| parse_float(f)).collect::<eorbit_core::Result<Vec<f64>>>()?)),
            );
        let (values, floats) = match parsed {
            Ok(v) => v,
            Err(_) if i == 0 => continue,
            Err(e) => return Err(e.into()),
        };
        if fields.len() != width + extra {
            return Err(Error::InvalidArgument(format!(
                "row {} has {} columns, expected {}",
                i + 1,
                fields.len(),
                width + extra
            ))
            .into());
        }
        rows.push(Row { fields, values, floats });
    }
    Ok(rows)
}

/// Renders rows as CSV with a header line.
pub fn render(header: &[String], rows: &[Vec<String>]) -> CliResult<String> {
    let mut writer = csv::WriterBuilder::new().from_writer(Vec::new());
    writer.write_record(header).map_err(|e| CliError::Io(e.to_string()))?;
    for row in rows {
        writer.write_record(row).map_err(|e| CliError::Io(e.to_string()))?;
    }
    let bytes = writer.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}

/// Column names `prefix1, …, prefixN`.
pub fn coordinate_header(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}
