use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

use crate::failure::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

/// One computed number. The JSON form of this struct is the stable output
/// schema of `compute`.
#[derive(Debug, Serialize)]
pub struct ValueRecord {
    pub genus: i64,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub r: i64,
    /// Always `"num/den"`.
    pub value: String,
    pub method: String,
}

/// The CSV form flattens the part lists to space-separated strings.
#[derive(Serialize)]
struct ValueRow<'a> {
    genus: i64,
    alpha: String,
    beta: String,
    r: i64,
    value: &'a str,
    method: &'a str,
}

fn join(parts: &[u32]) -> String {
    parts
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn json_line<T: Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string(value).map_err(|e| CliError::Output(e.to_string()))?;
    let mut out = std::io::stdout().lock();
    writeln!(out, "{text}")?;
    Ok(())
}

pub fn csv_rows<T: Serialize>(rows: &[T]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(std::io::stdout().lock());
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn emit_value(record: &ValueRecord, plain: &str, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => json_line(record),
        Format::Csv => csv_rows(&[ValueRow {
            genus: record.genus,
            alpha: join(&record.alpha),
            beta: join(&record.beta),
            r: record.r,
            value: &record.value,
            method: &record.method,
        }]),
        Format::Plain => {
            println!("{plain}");
            Ok(())
        }
    }
}
