//! Brute-force evaluation through explicit root enumeration.
//!
//! This is the adjudicating path: every closed form in [`crate::closed`] is
//! judged against the vectors computed here.

use std::collections::BTreeMap;

use crate::diagram::VoganDiagram;
use crate::error::{Error, Result};
use crate::report::{Method, WeightCoords, XiReport};
use crate::roots::{
    cartan_matrix, compactness_of, for_each_positive_root, support_avoids, CartanMatrix,
    Compactness, RootVector,
};
use crate::scalar::{checked_add, checked_mul, Exact};

/// Rank above which the oracle refuses to run unless the caller raises the cap.
pub const DEFAULT_ORACLE_CAP: usize = 2000;

pub fn check_cap(rank: usize, cap: usize) -> Result<()> {
    if rank > cap {
        return Err(Error::CapExceeded { rank, cap });
    }
    Ok(())
}

/// Everything the oracle derives from one pass over Δ₊, in simple-root
/// coordinates unless noted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVectors<Z> {
    pub cartan: CartanMatrix<Z>,
    /// η = −2 Σ_{Δ₊} ε_α α.
    pub eta: Vec<Z>,
    /// Σ of positive roots supported on unpainted nodes only.
    pub span_sum: Vec<Z>,
    /// Σ of all compact positive roots.
    pub compact_sum: Vec<Z>,
    /// δ^c: compact positive roots that touch a painted node.
    pub delta_c: Vec<Z>,
    /// φ_S = η − 2 · span_sum.
    pub phi_s: Vec<Z>,
    /// ξ = A · φ_S (fundamental-weight coordinates).
    pub xi: Vec<Z>,
    /// Γ = A · span_sum.
    pub gamma: Vec<Z>,
    /// τ = A · δ^c.
    pub tau: Vec<Z>,
}

fn accumulate<Z: Exact>(acc: &mut [Z], coeffs: &[u8], scale: i64) -> Result<()> {
    let scale = Z::lit(scale);
    for (a, &c) in acc.iter_mut().zip(coeffs) {
        if c != 0 {
            *a = checked_add(*a, checked_mul(scale, Z::lit(c as i64))?)?;
        }
    }
    Ok(())
}

fn axpy<Z: Exact>(x: &[Z], scale: i64, y: &[Z]) -> Result<Vec<Z>> {
    let scale = Z::lit(scale);
    x.iter().zip(y).map(|(&a, &b)| checked_add(a, checked_mul(scale, b)?)).collect()
}

impl<Z: Exact> OracleVectors<Z> {
    pub fn compute(diagram: &VoganDiagram) -> Result<Self> {
        let (family, rank) = (diagram.family(), diagram.rank());
        let cartan = cartan_matrix::<Z>(family, rank)?;
        let mut eta = vec![Z::zero(); rank];
        let mut span_sum = vec![Z::zero(); rank];
        let mut compact_sum = vec![Z::zero(); rank];
        let mut delta_c = vec![Z::zero(); rank];
        let mut failure = None;
        for_each_positive_root(family, rank, |coeffs| {
            if failure.is_some() {
                return;
            }
            let compactness = compactness_of(coeffs, diagram);
            let step = (|| {
                accumulate(&mut eta, coeffs, -2 * compactness.sign())?;
                if compactness == Compactness::Compact {
                    accumulate(&mut compact_sum, coeffs, 1)?;
                    if support_avoids(coeffs, diagram) {
                        accumulate(&mut span_sum, coeffs, 1)?;
                    } else {
                        accumulate(&mut delta_c, coeffs, 1)?;
                    }
                }
                Ok(())
            })();
            if let Err(e) = step {
                failure = Some(e);
            }
        })?;
        if let Some(e) = failure {
            return Err(e);
        }

        let phi_s = axpy(&eta, -2, &span_sum)?;
        let xi = cartan.apply(&phi_s)?;
        let gamma = cartan.apply(&span_sum)?;
        let tau = cartan.apply(&delta_c)?;

        // Second route: ξ_i = −4 + 4 (A Σ_{Δ₊^c} α)_i − 2 (A Σ_span α)_i.
        let compact_image = cartan.apply(&compact_sum)?;
        for node in 1..=rank {
            let compact_form = checked_add(
                checked_add(Z::lit(-4), checked_mul(Z::lit(4), compact_image[node - 1])?)?,
                checked_mul(Z::lit(-2), gamma[node - 1])?,
            )?;
            if compact_form != xi[node - 1] {
                return Err(Error::OracleInconsistency {
                    node,
                    detail: format!("A·φ_S gives {} but the compact-sum form gives {compact_form}", xi[node - 1]),
                });
            }
        }

        Ok(OracleVectors { cartan, eta, span_sum, compact_sum, delta_c, phi_s, xi, gamma, tau })
    }
}

pub fn eta<Z: Exact>(diagram: &VoganDiagram) -> Result<Vec<Z>> {
    let mut eta = vec![Z::zero(); diagram.rank()];
    let mut failure = None;
    for_each_positive_root(diagram.family(), diagram.rank(), |coeffs| {
        let sign = compactness_of(coeffs, diagram).sign();
        if let Err(e) = accumulate(&mut eta, coeffs, -2 * sign) {
            failure.get_or_insert(e);
        }
    })?;
    failure.map_or(Ok(eta), Err)
}

/// Positive roots whose support avoids every painted node, lexicographically.
pub fn complement_span_roots(diagram: &VoganDiagram) -> Result<Vec<RootVector>> {
    let mut out = Vec::new();
    for_each_positive_root(diagram.family(), diagram.rank(), |coeffs| {
        if support_avoids(coeffs, diagram) {
            out.push(RootVector::new(coeffs.to_vec()).expect("positive roots are non-zero"));
        }
    })?;
    out.sort_unstable();
    Ok(out)
}

pub fn delta_c<Z: Exact>(diagram: &VoganDiagram) -> Result<Vec<Z>> {
    Ok(OracleVectors::compute(diagram)?.delta_c)
}

pub fn phi_s<Z: Exact>(diagram: &VoganDiagram) -> Result<Vec<Z>> {
    Ok(OracleVectors::compute(diagram)?.phi_s)
}

/// ξ on the painted nodes by root enumeration, cross-checked internally
/// against the compact-sum route.
pub fn xi_oracle<Z: Exact>(diagram: &VoganDiagram) -> Result<XiReport<Z>> {
    let vectors = OracleVectors::<Z>::compute(diagram)?;
    Ok(report_from(diagram, vectors.xi))
}

pub(crate) fn report_from<Z: Exact>(diagram: &VoganDiagram, xi: Vec<Z>) -> XiReport<Z> {
    let values: BTreeMap<usize, Z> = diagram.painted().iter().map(|&i| (i, xi[i - 1])).collect();
    XiReport { method: Method::Oracle, values, full: Some(WeightCoords::new(xi)), cases: Vec::new() }
}
