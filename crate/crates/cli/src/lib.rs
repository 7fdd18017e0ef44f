//! Batch front end: single checks, exhaustive scans, family audits and
//! timing runs over classical Vogan diagrams.

pub mod bench;
pub mod cli;
pub mod enumerate;
pub mod record;
pub mod scan;

pub use enumerate::enumerate_diagrams;
pub use record::ScanRecord;
pub use scan::{run_scan, ScanConfig, ScanSummary};

/// Environment variable overriding the oracle rank cap.
pub const ORACLE_CAP_VAR: &str = "VOGANSCAN_ORACLE_CAP";

pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const INCONSISTENT: i32 = 2;
    pub const IO: i32 = 3;
}
