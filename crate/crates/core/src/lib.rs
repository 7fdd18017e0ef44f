//! Exact computation of the ξ coefficients of Vogan diagrams with trivial
//! automorphism for the classical families, by root enumeration and by
//! closed forms, together with speciality verdicts and a discrepancy audit
//! between the two.
//!
//! Everything is generic over an [`Exact`] integer type; the aliases at the
//! crate root fix it to `i64`.

pub mod audit;
pub mod closed;
pub mod diagram;
pub mod error;
pub mod oracle;
pub mod report;
pub mod roots;
pub mod scalar;
pub mod speciality;

pub use closed::{
    gamma_closed, helper_sums, resolve_case, tau_closed, xi_mid, xi_published, CaseLabel,
    ClosedOptions, DeltaReading, MidSource, SMinusReading,
};
pub use diagram::{Family, VoganDiagram};
pub use error::{Error, Result};
pub use oracle::{
    complement_span_roots, delta_c, eta, phi_s, xi_oracle, DEFAULT_ORACLE_CAP,
};
pub use report::Method;
pub use roots::{cartan_matrix, epsilon, positive_roots, Compactness, RootVector};
pub use scalar::{Checked, Exact};
pub use speciality::{check_diagram, check_report, classify, evaluate, CheckOptions, Lambda};
pub use audit::{audit_diagram, audit_family, AuditOptions};

/// Default scalar.
pub type Int = i64;
pub type CartanMatrix = roots::CartanMatrix<Int>;
pub type HelperSums = closed::HelperSums<Int>;
pub type XiReport = report::XiReport<Int>;
pub type WeightCoords = report::WeightCoords<Int>;
pub type OracleVectors = oracle::OracleVectors<Int>;
pub type SpecialityVerdict = speciality::SpecialityVerdict<Int>;
pub type DiagramCheck = speciality::DiagramCheck<Int>;
pub type AuditRecord = audit::AuditRecord<Int>;
pub type DiscrepancyReport = audit::DiscrepancyReport<Int>;
pub type BranchStats = audit::BranchStats<Int>;
pub type AuditFailure = audit::AuditFailure<Int>;
