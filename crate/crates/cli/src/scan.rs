//! Exhaustive scans with schedule-independent output.

use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;
use vogan::{check_report, CheckOptions, Error, Family, Lambda, Method, VoganDiagram};

use crate::enumerate::enumerate_diagrams;
use crate::record::{Format, RecordWriter, ScanRecord};

/// Diagrams evaluated per parallel batch before their records are written.
const BATCH: usize = 4096;

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub families: Vec<Family>,
    pub min_rank: usize,
    pub max_rank: usize,
    pub methods: Vec<Method>,
    pub only_special: bool,
    pub lambda: Option<Lambda>,
    pub dedup: bool,
    pub jobs: usize,
    pub format: Format,
    pub check: CheckOptions,
}

impl ScanConfig {
    /// Ranks swept for one family: the requested range clipped below by the
    /// family minimum when several families are scanned.
    pub fn ranks(&self, family: Family) -> std::ops::RangeInclusive<usize> {
        let lo = if self.families.len() > 1 { self.min_rank.max(family.min_rank()) } else { self.min_rank };
        lo..=self.max_rank
    }

    pub fn validate(&self) -> Result<(), String> {
        if self.jobs == 0 {
            return Err("--jobs must be at least 1".into());
        }
        if self.min_rank > self.max_rank {
            return Err(format!("--min-rank {} exceeds --max-rank {}", self.min_rank, self.max_rank));
        }
        if self.max_rank >= 64 {
            return Err(format!("--max-rank {} is too large to enumerate", self.max_rank));
        }
        if let [family] = self.families[..] {
            family.check_rank(self.min_rank).map_err(|e| e.to_string())?;
        }
        Ok(())
    }

    fn keep(&self, record: &ScanRecord) -> bool {
        (!self.only_special || record.special)
            && self.lambda.is_none_or(|l| record.lambda == Some(l))
    }
}

/// Counts per (family, rank, λ), with λ `None` for non-special records.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub counts: BTreeMap<(Family, usize, Option<Lambda>), usize>,
    pub diagrams: usize,
    pub written: usize,
    pub errors: usize,
    /// Oracle-side consistency failures.
    pub inconsistencies: usize,
}

impl ScanSummary {
    pub fn render(&self) -> String {
        let mut out = format!(
            "scanned {} diagrams, wrote {} records, {} errors, {} inconsistencies\n",
            self.diagrams, self.written, self.errors, self.inconsistencies
        );
        for ((family, rank, lambda), n) in &self.counts {
            let lambda = lambda.map_or("none".to_string(), |l| l.to_string());
            out.push_str(&format!("  {family}{rank} lambda={lambda}: {n}\n"));
        }
        out
    }
}

#[derive(Debug)]
pub enum ScanError {
    Config(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for ScanError {
    fn from(e: std::io::Error) -> Self {
        ScanError::Io(e)
    }
}

fn is_inconsistency(e: &Error) -> bool {
    matches!(e, Error::OracleInconsistency { .. } | Error::HelperInconsistency { .. })
}

/// Records for one diagram, and how many internal inconsistencies showed up.
fn evaluate(
    diagram: &VoganDiagram,
    methods: &[Method],
    options: &CheckOptions,
) -> (Vec<ScanRecord>, usize) {
    let mut inconsistencies = 0;
    let records: Vec<ScanRecord> = methods
        .iter()
        .map(|&method| match check_report(diagram, method, options) {
            Ok(check) => ScanRecord::from_check(diagram, method, check),
            Err(e) => {
                inconsistencies += is_inconsistency(&e) as usize;
                ScanRecord::from_error(diagram, method, &e)
            }
        })
        .collect();
    let xi_of = |m| records.iter().find(|r| r.method == m && r.error.is_none()).map(|r| &r.xi);
    if let (Some(oracle), Some(mid)) = (xi_of(Method::Oracle), xi_of(Method::Mid)) {
        inconsistencies += (oracle != mid) as usize;
    }
    (records, inconsistencies)
}

/// Scans every configured diagram, writing kept records in canonical order.
/// Output bytes do not depend on `jobs`.
pub fn run_scan<W: Write>(
    config: &ScanConfig,
    out: W,
    mut progress: impl FnMut(&str),
) -> Result<(ScanSummary, W), ScanError> {
    config.validate().map_err(ScanError::Config)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| ScanError::Config(e.to_string()))?;
    let mut writer = RecordWriter::new(out, config.format)?;
    let mut summary = ScanSummary::default();
    for &family in &config.families {
        for rank in config.ranks(family) {
            let diagrams = enumerate_diagrams(family, rank, config.dedup)
                .map_err(|e| ScanError::Config(e.to_string()))?;
            let mut count = 0;
            let mut batch = Vec::with_capacity(BATCH);
            let flush = |batch: &mut Vec<VoganDiagram>,
                             writer: &mut RecordWriter<W>,
                             summary: &mut ScanSummary|
             -> std::io::Result<()> {
                let results: Vec<(Vec<ScanRecord>, usize)> = pool.install(|| {
                    batch.par_iter().map(|d| evaluate(d, &config.methods, &config.check)).collect()
                });
                summary.inconsistencies += results.iter().map(|(_, n)| n).sum::<usize>();
                for record in results.iter().flat_map(|(r, _)| r) {
                    summary.errors += record.error.is_some() as usize;
                    *summary.counts.entry((record.family, record.rank, record.lambda)).or_default() += 1;
                    if config.keep(record) {
                        writer.write(record)?;
                        summary.written += 1;
                    }
                }
                summary.diagrams += batch.len();
                batch.clear();
                Ok(())
            };
            for diagram in diagrams {
                count += 1;
                batch.push(diagram);
                if batch.len() == BATCH {
                    flush(&mut batch, &mut writer, &mut summary)?;
                }
            }
            flush(&mut batch, &mut writer, &mut summary)?;
            progress(&format!("{family}{rank}: {count} diagrams"));
        }
    }
    let out = writer.finish()?;
    Ok((summary, out))
}
