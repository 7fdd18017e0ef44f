//! Closed-form evaluation of Γ, τ and ξ on painted nodes.
//!
//! Three layers are exposed so that each can be audited against the oracle
//! separately: the helper sums, the per-branch Γ and τ formulas, and the
//! per-case published formulas for ξ.

mod cases;
mod formulas;
mod helpers;

use std::collections::BTreeMap;

pub use cases::{resolve_case, resolve_gamma_branch, CaseLabel, GammaBranch};
pub use formulas::{
    gamma_closed, gamma_closed_with, tau_closed, xi_published, xi_published_with, ClosedOptions,
    DeltaReading,
};
pub use helpers::{helper_sums, HelperSums, SMinusReading};

use serde::{Deserialize, Serialize};

use crate::diagram::VoganDiagram;
use crate::error::Result;
use crate::oracle::OracleVectors;
use crate::report::{Method, XiReport};
use crate::scalar::{Checked, Exact};

/// Where [`xi_mid`] takes Γ and τ from.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MidSource {
    /// Matrix products from the oracle.
    #[default]
    Oracle,
    /// The closed forms.
    Closed,
}

fn mid_value<Z: Exact>(gamma: Z, tau: Z) -> Result<Z> {
    (2 * (Checked::lit(-2) + Checked::new(gamma) + 2 * Checked::new(tau))).get()
}

/// ξ at painted position `j` as 2(−2 + Γ + 2τ).
pub fn xi_mid<Z: Exact>(diagram: &VoganDiagram, j: usize, source: MidSource) -> Result<Z> {
    diagram.check_position(j)?;
    match source {
        MidSource::Oracle => xi_mid_from(&OracleVectors::compute(diagram)?, diagram, j),
        MidSource::Closed => mid_value(gamma_closed(diagram, j)?, tau_closed(diagram, j)?),
    }
}

/// [`xi_mid`] with oracle Γ and τ taken from vectors already computed.
pub fn xi_mid_from<Z: Exact>(
    vectors: &OracleVectors<Z>,
    diagram: &VoganDiagram,
    j: usize,
) -> Result<Z> {
    diagram.check_position(j)?;
    let node = diagram.painted()[j - 1];
    mid_value(vectors.gamma[node - 1], vectors.tau[node - 1])
}

/// The mid path on every painted node.
pub fn xi_mid_report<Z: Exact>(diagram: &VoganDiagram, source: MidSource) -> Result<XiReport<Z>> {
    let values = match source {
        MidSource::Oracle => {
            let vectors = OracleVectors::compute(diagram)?;
            mid_values(&vectors, diagram)?
        }
        MidSource::Closed => (1..=diagram.m())
            .map(|j| Ok((diagram.painted()[j - 1], xi_mid(diagram, j, source)?)))
            .collect::<Result<_>>()?,
    };
    Ok(XiReport { method: Method::Mid, values, full: None, cases: Vec::new() })
}

pub(crate) fn mid_values<Z: Exact>(
    vectors: &OracleVectors<Z>,
    diagram: &VoganDiagram,
) -> Result<BTreeMap<usize, Z>> {
    (1..=diagram.m()).map(|j| Ok((diagram.painted()[j - 1], xi_mid_from(vectors, diagram, j)?))).collect()
}

/// The published formulas on every painted node, with the case used at each.
pub fn xi_published_report<Z: Exact>(
    diagram: &VoganDiagram,
    options: &ClosedOptions,
) -> Result<XiReport<Z>> {
    let mut values = BTreeMap::new();
    let mut cases = Vec::with_capacity(diagram.m());
    for (j, &node) in diagram.painted().iter().enumerate() {
        let (case, value) = xi_published_with(diagram, j + 1, options)?;
        values.insert(node, value);
        cases.push(case);
    }
    Ok(XiReport { method: Method::Published, values, full: None, cases })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Family;

    fn d(family: Family, rank: usize, painted: &[usize]) -> VoganDiagram {
        VoganDiagram::new(family, rank, painted.to_vec()).unwrap()
    }

    #[test]
    fn mid_examples() {
        for source in [MidSource::Oracle, MidSource::Closed] {
            assert_eq!(xi_mid::<i64>(&d(Family::C, 3, &[3]), 1, source).unwrap(), -8);
            assert_eq!(xi_mid::<i64>(&d(Family::B, 2, &[2]), 1, source).unwrap(), 0);
            assert_eq!(xi_mid::<i64>(&d(Family::A, 2, &[1]), 1, source).unwrap(), -6);
        }
    }

    #[test]
    fn published_report_carries_cases() {
        let report = xi_published_report::<i64>(&d(Family::B, 3, &[1, 2]), &ClosedOptions::default())
            .unwrap();
        assert_eq!(report.values.into_iter().collect::<Vec<_>>(), vec![(1, 8), (2, -6)]);
        assert_eq!(report.cases, vec![CaseLabel::BInterior, CaseLabel::BLastNotL]);
    }
}
