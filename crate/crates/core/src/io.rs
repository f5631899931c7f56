//! Fuzzy-set JSON documents and ratings CSV ingestion.

use std::fs::File;
use std::io::{BufReader, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::set::FuzzySet;

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.display().to_string(),
        source,
    }
}

/// Parses and validates a fuzzy-set document.
pub fn set_from_json(text: &str) -> Result<FuzzySet> {
    Ok(serde_json::from_str(text)?)
}

pub fn set_to_json(set: &FuzzySet) -> String {
    serde_json::to_string_pretty(set).expect("fuzzy sets always serialize")
}

pub fn read_set(path: &Path) -> Result<FuzzySet> {
    let file = File::open(path).map_err(io_err(path))?;
    let mut text = String::new();
    BufReader::new(file)
        .read_to_string(&mut text)
        .map_err(io_err(path))?;
    set_from_json(&text)
}

pub fn write_set(path: &Path, set: &FuzzySet) -> Result<()> {
    let mut file = File::create(path).map_err(io_err(path))?;
    file.write_all(set_to_json(set).as_bytes())
        .and_then(|_| file.write_all(b"\n"))
        .map_err(io_err(path))
}

/// Reads every value of the named column from CSV with a header row.
///
/// Row numbers in errors count the header as row 1.
pub fn read_column<R: Read>(reader: R, column: &str) -> Result<Vec<f64>> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = rdr.headers().map_err(|e| Error::Csv(e.to_string()))?;
    let idx = headers
        .iter()
        .position(|h| h == column)
        .ok_or_else(|| Error::MissingColumn(column.to_owned()))?;

    let mut values = Vec::new();
    for (i, record) in rdr.records().enumerate() {
        let record = record.map_err(|e| Error::Csv(e.to_string()))?;
        let row = record.position().map_or(i as u64 + 2, |p| p.line());
        let raw = record.get(idx).unwrap_or("");
        match raw.parse::<f64>() {
            Ok(v) if v.is_finite() => values.push(v),
            _ => {
                return Err(Error::UnparsableRow {
                    row,
                    value: raw.to_owned(),
                })
            }
        }
    }
    Ok(values)
}

pub fn read_column_file(path: &Path, column: &str) -> Result<Vec<f64>> {
    let file = File::open(path).map_err(io_err(path))?;
    read_column(BufReader::new(file), column)
}
