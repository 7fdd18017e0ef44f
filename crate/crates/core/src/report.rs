use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::closed::CaseLabel;
use crate::error::Error;

/// Which evaluation path produced a set of coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Brute-force root enumeration.
    Oracle,
    /// `2(−2 + Γ + 2τ)` with Γ, τ as matrix products.
    Mid,
    /// The per-family published closed formulas.
    Published,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Oracle, Method::Mid, Method::Published];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::Mid => "mid",
            Method::Published => "published",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "oracle" => Ok(Method::Oracle),
            "mid" => Ok(Method::Mid),
            "published" => Ok(Method::Published),
            other => Err(Error::Parse(format!("unknown method {other:?}"))),
        }
    }
}

/// Coordinates of a lattice vector in the fundamental-weight basis, indexed
/// by node 1..=ℓ.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WeightCoords<Z>(Vec<Z>);

impl<Z: Copy> WeightCoords<Z> {
    pub fn new(values: Vec<Z>) -> Self {
        WeightCoords(values)
    }

    pub fn get(&self, node: usize) -> Z {
        self.0[node - 1]
    }

    pub fn as_slice(&self) -> &[Z] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Z> {
        self.0
    }
}

/// ξ values on the painted nodes, tagged by how they were computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XiReport<Z> {
    pub method: Method,
    /// Painted node → ξ.
    pub values: BTreeMap<usize, Z>,
    /// Every coordinate of φ_S, when the path computes them (oracle only).
    pub full: Option<WeightCoords<Z>>,
    /// Case used per painted position (published path only).
    pub cases: Vec<CaseLabel>,
}
