//! Output records and their JSONL and CSV encodings.

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};
use vogan::closed::CaseLabel;
use vogan::{DiagramCheck, Family, Lambda, Method, VoganDiagram};

/// One scanned (diagram, method) pair. Field order is the serialized key
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub family: Family,
    pub rank: usize,
    pub painted: Vec<usize>,
    pub xi: BTreeMap<usize, i64>,
    pub special: bool,
    pub lambda: Option<Lambda>,
    pub method: Method,
    pub cases: Vec<CaseLabel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ScanRecord {
    pub fn from_check(diagram: &VoganDiagram, method: Method, check: DiagramCheck) -> Self {
        ScanRecord {
            family: diagram.family(),
            rank: diagram.rank(),
            painted: diagram.painted().to_vec(),
            xi: check.report.values,
            special: check.verdict.special,
            lambda: check.verdict.lambda,
            method,
            cases: check.report.cases,
            error: None,
        }
    }

    pub fn from_error(diagram: &VoganDiagram, method: Method, error: &vogan::Error) -> Self {
        ScanRecord {
            family: diagram.family(),
            rank: diagram.rank(),
            painted: diagram.painted().to_vec(),
            xi: BTreeMap::new(),
            special: false,
            lambda: None,
            method,
            cases: Vec::new(),
            error: Some(error.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Jsonl,
    Csv,
}

pub const CSV_HEADER: [&str; 9] =
    ["family", "rank", "painted", "xi", "special", "lambda", "method", "cases", "error"];

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";")
}

impl ScanRecord {
    /// Flat CSV row in [`CSV_HEADER`] order.
    pub fn csv_row(&self) -> [String; 9] {
        [
            self.family.to_string(),
            self.rank.to_string(),
            join(&self.painted),
            join(self.xi.iter().map(|(i, v)| format!("{i}:{v}"))),
            self.special.to_string(),
            self.lambda.map(|l| l.to_string()).unwrap_or_default(),
            self.method.to_string(),
            join(&self.cases),
            self.error.clone().unwrap_or_default(),
        ]
    }
}

/// Serializes records in one of the two formats.
pub enum RecordWriter<W: Write> {
    Jsonl(W),
    Csv(Box<csv::Writer<W>>),
}

impl<W: Write> RecordWriter<W> {
    pub fn new(out: W, format: Format) -> std::io::Result<Self> {
        Ok(match format {
            Format::Jsonl => RecordWriter::Jsonl(out),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(CSV_HEADER)?;
                RecordWriter::Csv(Box::new(w))
            }
        })
    }

    pub fn write(&mut self, record: &ScanRecord) -> std::io::Result<()> {
        match self {
            RecordWriter::Jsonl(out) => {
                serde_json::to_writer(&mut *out, record)?;
                out.write_all(b"\n")
            }
            RecordWriter::Csv(w) => Ok(w.write_record(record.csv_row())?),
        }
    }

    pub fn finish(self) -> std::io::Result<W> {
        match self {
            RecordWriter::Jsonl(mut out) => {
                out.flush()?;
                Ok(out)
            }
            RecordWriter::Csv(w) => w.into_inner().map_err(|e| e.into_error()),
        }
    }
}
