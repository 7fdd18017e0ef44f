//! Speciality verdicts from the signs of ξ on the painted nodes.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::closed::{mid_values, xi_mid_report, xi_published_report, ClosedOptions, MidSource};
use crate::diagram::VoganDiagram;
use crate::error::{Error, Result};
use crate::oracle::{check_cap, report_from, OracleVectors, DEFAULT_ORACLE_CAP};
use crate::report::{Method, XiReport};
use crate::scalar::Exact;

/// The sign λ with φ = λ φ_S for a special diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Lambda {
    Minus,
    Zero,
    Plus,
}

impl Lambda {
    pub fn as_i8(self) -> i8 {
        match self {
            Lambda::Minus => -1,
            Lambda::Zero => 0,
            Lambda::Plus => 1,
        }
    }
}

impl From<Lambda> for i8 {
    fn from(lambda: Lambda) -> i8 {
        lambda.as_i8()
    }
}

impl TryFrom<i8> for Lambda {
    type Error = Error;

    fn try_from(value: i8) -> Result<Self> {
        match value {
            -1 => Ok(Lambda::Minus),
            0 => Ok(Lambda::Zero),
            1 => Ok(Lambda::Plus),
            other => Err(Error::Parse(format!("lambda must be -1, 0 or 1, got {other}"))),
        }
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_i8())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialityVerdict<Z> {
    pub special: bool,
    pub lambda: Option<Lambda>,
    pub xi_on_s: BTreeMap<usize, Z>,
    /// λ·ξ_i ≥ 0 at every node, painted or not. Filled only on the oracle
    /// path when λ = ±1.
    pub dominance_ok: Option<bool>,
    /// Weak mode accepted zeros next to a strict sign.
    pub weak_zeros: bool,
}

/// Verdict from ξ on S. In strict mode λ = ±1 needs every value strictly of
/// that sign; weak mode also lets zeros through and sets `weak_zeros`.
pub fn classify<Z: Exact>(xi_on_s: &BTreeMap<usize, Z>, strict: bool) -> Result<SpecialityVerdict<Z>> {
    if xi_on_s.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some((&node, value)) = xi_on_s.iter().find(|(_, v)| !v.is_even()) {
        return Err(Error::ParityViolation { node, value: value.to_string() });
    }
    let positive = xi_on_s.values().filter(|v| v.is_positive()).count();
    let negative = xi_on_s.values().filter(|v| v.is_negative()).count();
    let zeros = xi_on_s.len() - positive - negative;
    let total = xi_on_s.len();
    let (lambda, weak_zeros) = match (positive, negative, zeros) {
        (_, _, z) if z == total => (Some(Lambda::Zero), false),
        (p, 0, _) if p == total => (Some(Lambda::Plus), false),
        (0, n, _) if n == total => (Some(Lambda::Minus), false),
        (_, 0, _) if !strict => (Some(Lambda::Plus), true),
        (0, _, _) if !strict => (Some(Lambda::Minus), true),
        _ => (None, false),
    };
    Ok(SpecialityVerdict {
        special: lambda.is_some(),
        lambda,
        xi_on_s: xi_on_s.clone(),
        dominance_ok: None,
        weak_zeros,
    })
}

/// Settings shared by [`check_diagram`] and the audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub strict: bool,
    pub oracle_cap: usize,
    pub mid_source: MidSource,
    pub closed: ClosedOptions,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            strict: true,
            oracle_cap: DEFAULT_ORACLE_CAP,
            mid_source: MidSource::Oracle,
            closed: ClosedOptions::default(),
        }
    }
}

/// A ξ report together with its verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramCheck<Z> {
    pub report: XiReport<Z>,
    pub verdict: SpecialityVerdict<Z>,
}

/// ξ along one path, honouring the oracle cap where the path needs roots.
pub fn evaluate<Z: Exact>(
    diagram: &VoganDiagram,
    method: Method,
    options: &CheckOptions,
) -> Result<XiReport<Z>> {
    match method {
        Method::Oracle => {
            check_cap(diagram.rank(), options.oracle_cap)?;
            Ok(report_from(diagram, OracleVectors::compute(diagram)?.xi))
        }
        Method::Mid => {
            if options.mid_source == MidSource::Oracle {
                check_cap(diagram.rank(), options.oracle_cap)?;
                let vectors = OracleVectors::<Z>::compute(diagram)?;
                let values = mid_values(&vectors, diagram)?;
                return Ok(XiReport { method, values, full: None, cases: Vec::new() });
            }
            xi_mid_report(diagram, options.mid_source)
        }
        Method::Published => xi_published_report(diagram, &options.closed),
    }
}

pub fn check_report<Z: Exact>(
    diagram: &VoganDiagram,
    method: Method,
    options: &CheckOptions,
) -> Result<DiagramCheck<Z>> {
    let report = evaluate::<Z>(diagram, method, options)?;
    let mut verdict = classify(&report.values, options.strict)?;
    if let (Some(full), Some(lambda @ (Lambda::Plus | Lambda::Minus))) = (&report.full, verdict.lambda)
    {
        let sign = Z::lit(lambda.as_i8() as i64);
        verdict.dominance_ok = Some(full.as_slice().iter().all(|&x| (sign * x) >= Z::zero()));
    }
    Ok(DiagramCheck { report, verdict })
}

pub fn check_diagram<Z: Exact>(
    diagram: &VoganDiagram,
    method: Method,
    options: &CheckOptions,
) -> Result<SpecialityVerdict<Z>> {
    Ok(check_report(diagram, method, options)?.verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Family;

    fn map(pairs: &[(usize, i64)]) -> BTreeMap<usize, i64> {
        pairs.iter().copied().collect()
    }

    fn d(family: Family, rank: usize, painted: &[usize]) -> VoganDiagram {
        VoganDiagram::new(family, rank, painted.to_vec()).unwrap()
    }

    #[test]
    fn classify_examples() {
        let v = classify(&map(&[(1, -4)]), true).unwrap();
        assert!(v.special);
        assert_eq!(v.lambda, Some(Lambda::Minus));
        let v = classify(&map(&[(2, 0), (4, 0)]), true).unwrap();
        assert_eq!(v.lambda, Some(Lambda::Zero));
        let v = classify(&map(&[(1, 8), (2, -6)]), true).unwrap();
        assert!(!v.special);
        assert_eq!(v.lambda, None);
        assert_eq!(
            classify(&map(&[(1, 3)]), true),
            Err(Error::ParityViolation { node: 1, value: "3".into() })
        );
        assert_eq!(classify::<i64>(&BTreeMap::new(), true), Err(Error::EmptyInput));
    }

    #[test]
    fn weak_mode_admits_zeros() {
        let xi = map(&[(1, 0), (3, 4)]);
        assert!(!classify(&xi, true).unwrap().special);
        let v = classify(&xi, false).unwrap();
        assert_eq!((v.lambda, v.weak_zeros), (Some(Lambda::Plus), true));
        let v = classify(&map(&[(1, -2), (3, 0)]), false).unwrap();
        assert_eq!((v.lambda, v.weak_zeros), (Some(Lambda::Minus), true));
        let v = classify(&map(&[(1, -2), (3, 2)]), false).unwrap();
        assert!(!v.special);
    }

    #[test]
    fn check_examples() {
        let opts = CheckOptions::default();
        let v = check_diagram::<i64>(&d(Family::A, 1, &[1]), Method::Oracle, &opts).unwrap();
        assert_eq!(v.lambda, Some(Lambda::Minus));
        assert_eq!(v.dominance_ok, Some(true));
        let v = check_diagram::<i64>(&d(Family::B, 2, &[2]), Method::Oracle, &opts).unwrap();
        assert_eq!(v.lambda, Some(Lambda::Zero));
        assert_eq!(v.dominance_ok, None);
        let v = check_diagram::<i64>(&d(Family::B, 2, &[2]), Method::Published, &opts).unwrap();
        assert_eq!(v.lambda, Some(Lambda::Plus));
        let v = check_diagram::<i64>(&d(Family::B, 3, &[1, 2]), Method::Mid, &opts).unwrap();
        assert!(!v.special);
    }

    #[test]
    fn oracle_cap_applies_to_root_paths_only() {
        let opts = CheckOptions { oracle_cap: 3, ..CheckOptions::default() };
        let diagram = d(Family::A, 5, &[2, 4]);
        let capped = Err(Error::CapExceeded { rank: 5, cap: 3 });
        assert_eq!(check_diagram::<i64>(&diagram, Method::Oracle, &opts), capped);
        assert_eq!(check_diagram::<i64>(&diagram, Method::Mid, &opts), capped);
        assert!(check_diagram::<i64>(&diagram, Method::Published, &opts).is_ok());
        let closed = CheckOptions { mid_source: MidSource::Closed, ..opts };
        assert!(check_diagram::<i64>(&diagram, Method::Mid, &closed).is_ok());
    }

    #[test]
    fn lambda_round_trips_through_i8() {
        for lambda in [Lambda::Minus, Lambda::Zero, Lambda::Plus] {
            assert_eq!(Lambda::try_from(i8::from(lambda)).unwrap(), lambda);
        }
        assert!(Lambda::try_from(2i8).is_err());
    }
}
