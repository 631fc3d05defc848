//! Serialization of series and counts.

use ehrhart_core::{AlgebraId, PowerSeries};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::args::Method;
use crate::CliError;

/// The JSON form of a series. Coefficients are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRecord {
    pub algebra: String,
    pub method: String,
    pub truncation: usize,
    pub coefficients: Vec<String>,
}

impl SeriesRecord {
    pub fn new(a: AlgebraId, method: Method, series: &PowerSeries) -> Self {
        Self {
            algebra: a.to_string(),
            method: method.name().to_string(),
            truncation: series.truncation(),
            coefficients: series.coeffs().iter().map(ToString::to_string).collect(),
        }
    }

    /// Back to a series.
    pub fn to_series(&self) -> Result<PowerSeries, CliError> {
        let coeffs = self
            .coefficients
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(|e| CliError::Usage(format!("bad coefficient {c:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.len() != self.truncation + 1 {
            return Err(CliError::Usage(format!(
                "{} coefficients for truncation {}",
                coeffs.len(),
                self.truncation
            )));
        }
        Ok(PowerSeries::from_coeffs(coeffs))
    }
}

/// Serializes one record.
pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}

/// Parses a series record.
pub fn series_from_json(s: &str) -> Result<SeriesRecord, CliError> {
    serde_json::from_str(s).map_err(|e| CliError::Usage(format!("invalid series JSON: {e}")))
}

/// One `algebra,q,count` row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub algebra: String,
    pub q: usize,
    pub count: String,
}

/// Rows of a series.
pub fn count_rows(a: AlgebraId, series: &PowerSeries) -> Vec<CountRow> {
    series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(q, c)| CountRow {
            algebra: a.to_string(),
            q,
            count: c.to_string(),
        })
        .collect()
}

/// CSV with header `algebra,q,count` and LF line endings.
pub fn to_csv<T: Serialize>(rows: &[T]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("UTF-8")
}

/// Reads `algebra,q,count` rows.
pub fn from_csv(text: &str) -> Result<Vec<CountRow>, CliError> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .collect::<Result<Vec<CountRow>, _>>()
        .map_err(|e| CliError::Usage(format!("invalid CSV: {e}")))
}
