//! Classical families and Vogan diagrams with trivial automorphism.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];

    /// Smallest rank accepted for the family. C starts at 3 (C₂ is B₂) and
    /// D at 4 (lower ranks are not simple or coincide with A).
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B => 2,
            Family::C => 3,
            Family::D => 4,
        }
    }

    pub fn check_rank(self, rank: usize) -> Result<()> {
        if rank < self.min_rank() {
            return Err(Error::InvalidRank { family: self, rank, min: self.min_rank() });
        }
        Ok(())
    }

    /// Number of positive roots.
    pub fn positive_root_count(self, rank: usize) -> usize {
        match self {
            Family::A => rank * (rank + 1) / 2,
            Family::B | Family::C => rank * rank,
            Family::D => rank * (rank - 1),
        }
    }

    /// Image of a node under the non-trivial diagram automorphism, if the
    /// family has one: reversal for A, the fork swap ℓ−1 ↔ ℓ for D.
    pub fn automorphism(self, rank: usize, node: usize) -> Option<usize> {
        match self {
            Family::A => Some(rank + 1 - node),
            Family::D if node == rank - 1 => Some(rank),
            Family::D if node == rank => Some(rank - 1),
            Family::D => Some(node),
            Family::B | Family::C => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(tag)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// A connected classical Dynkin diagram with painted (non-compact) nodes.
///
/// Nodes are numbered 1..=ℓ in the usual Bourbaki order: for B and C the
/// double bond sits between ℓ−1 and ℓ, for D the fork is at ℓ−2.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VoganDiagram {
    family: Family,
    rank: usize,
    painted: Vec<usize>,
}

impl VoganDiagram {
    pub fn new(family: Family, rank: usize, painted: impl Into<Vec<usize>>) -> Result<Self> {
        family.check_rank(rank)?;
        let painted = painted.into();
        if painted.is_empty() {
            return Err(Error::InvalidDiagram("at least one node must be painted".into()));
        }
        if painted.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidDiagram(format!(
                "painted indices must be strictly increasing, got {painted:?}"
            )));
        }
        if painted[0] == 0 || painted[painted.len() - 1] > rank {
            return Err(Error::InvalidDiagram(format!(
                "painted indices must lie in 1..={rank}, got {painted:?}"
            )));
        }
        Ok(VoganDiagram { family, rank, painted })
    }

    /// Build from an unsorted list, sorting and rejecting duplicates.
    pub fn from_unsorted(family: Family, rank: usize, mut painted: Vec<usize>) -> Result<Self> {
        painted.sort_unstable();
        Self::new(family, rank, painted)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn painted(&self) -> &[usize] {
        &self.painted
    }

    /// Number of painted nodes, `m`.
    pub fn m(&self) -> usize {
        self.painted.len()
    }

    pub fn is_painted(&self, node: usize) -> bool {
        self.painted.binary_search(&node).is_ok()
    }

    /// Painted index `i_k` with the sentinels `i_0 = 0` and `i_{m+1} = ℓ+1`.
    /// Positions below 0 read as `i_0` and positions above `m+1` as `i_{m+1}`.
    pub fn i(&self, k: isize) -> usize {
        let m = self.m() as isize;
        if k <= 0 {
            0
        } else if k > m {
            self.rank + 1
        } else {
            self.painted[k as usize - 1]
        }
    }

    /// Validates a 1-based painted position `j`.
    pub fn check_position(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.m() {
            return Err(Error::IndexError { j, m: self.m() });
        }
        Ok(())
    }

    /// 1-based position of a painted node in S.
    pub fn position_of(&self, node: usize) -> Option<usize> {
        self.painted.binary_search(&node).ok().map(|p| p + 1)
    }

    /// Image under the diagram automorphism, or `None` for B and C.
    pub fn automorphism_image(&self) -> Option<VoganDiagram> {
        let painted: Option<Vec<usize>> = self
            .painted
            .iter()
            .map(|&i| self.family.automorphism(self.rank, i))
            .collect();
        let mut painted = painted?;
        painted.sort_unstable();
        Some(VoganDiagram { family: self.family, rank: self.rank, painted })
    }
}

impl fmt::Display for VoganDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{{", self.family, self.rank)?;
        for (n, i) in self.painted.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}
