//! Branch labels for the per-family closed formulas and for the Γ closed forms.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{Family, VoganDiagram};
use crate::error::{Error, Result};

/// One case of a per-family closed formula for ξ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "&'static str", try_from = "String")]
pub enum CaseLabel {
    A,
    /// B, j ≠ m.
    BInterior,
    /// B, j = m and i_m ≠ ℓ.
    BLastNotL,
    /// B, i_j = ℓ.
    BAtL,
    /// C, i_j ≠ ℓ−1, j ≠ m, ℓ ∉ S.
    CInteriorLUnpainted,
    /// C, i_j ≠ ℓ−1, j ≠ m, ℓ ∈ S.
    CInteriorLPainted,
    /// C, j = m, i_j = ℓ.
    CAtL,
    /// C, j = m, i_j ∉ {ℓ−1, ℓ}.
    CLastNotL,
    /// C, i_j = ℓ−1, ℓ ∈ S.
    CAtLm1LPainted,
    /// C, i_j = ℓ−1, ℓ ∉ S.
    CAtLm1LUnpainted,
    /// D, i_j < ℓ−2, j ≠ m, |S ∩ {ℓ−1, ℓ}| ∈ {0, 2}.
    DInteriorForkEven,
    /// D, i_j < ℓ−2, j ≠ m, |S ∩ {ℓ−1, ℓ}| = 1.
    DInteriorForkOdd,
    /// D, i_j < ℓ−2, j = m.
    DLast,
    /// D, i_j = ℓ−2, |S ∩ {ℓ−1, ℓ}| ∈ {0, 2}.
    DAtLm2ForkEven,
    /// D, i_j = ℓ−2, |S ∩ {ℓ−1, ℓ}| = 1.
    DAtLm2ForkOdd,
    /// D, i_j ∈ {ℓ−1, ℓ}, exactly one fork node painted.
    DForkOne,
    /// D, i_j ∈ {ℓ−1, ℓ}, both fork nodes painted.
    DForkBoth,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 17] = [
        CaseLabel::A,
        CaseLabel::BInterior,
        CaseLabel::BLastNotL,
        CaseLabel::BAtL,
        CaseLabel::CInteriorLUnpainted,
        CaseLabel::CInteriorLPainted,
        CaseLabel::CAtL,
        CaseLabel::CLastNotL,
        CaseLabel::CAtLm1LPainted,
        CaseLabel::CAtLm1LUnpainted,
        CaseLabel::DInteriorForkEven,
        CaseLabel::DInteriorForkOdd,
        CaseLabel::DLast,
        CaseLabel::DAtLm2ForkEven,
        CaseLabel::DAtLm2ForkOdd,
        CaseLabel::DForkOne,
        CaseLabel::DForkBoth,
    ];

    pub fn family(self) -> Family {
        use CaseLabel::*;
        match self {
            A => Family::A,
            BInterior | BLastNotL | BAtL => Family::B,
            CInteriorLUnpainted | CInteriorLPainted | CAtL | CLastNotL | CAtLm1LPainted
            | CAtLm1LUnpainted => Family::C,
            _ => Family::D,
        }
    }

    pub fn of_family(family: Family) -> impl Iterator<Item = CaseLabel> {
        CaseLabel::ALL.into_iter().filter(move |c| c.family() == family)
    }

    /// Short stable name used in reports.
    pub fn as_str(self) -> &'static str {
        use CaseLabel::*;
        match self {
            A => "A",
            BInterior => "B-interior",
            BLastNotL => "B-last-not-l",
            BAtL => "B-at-l",
            CInteriorLUnpainted => "C-interior-l-unpainted",
            CInteriorLPainted => "C-interior-l-painted",
            CAtL => "C-at-l",
            CLastNotL => "C-last-not-l",
            CAtLm1LPainted => "C-at-l-1-l-painted",
            CAtLm1LUnpainted => "C-at-l-1-l-unpainted",
            DInteriorForkEven => "D-interior-fork-even",
            DInteriorForkOdd => "D-interior-fork-odd",
            DLast => "D-last",
            DAtLm2ForkEven => "D-at-l-2-fork-even",
            DAtLm2ForkOdd => "D-at-l-2-fork-odd",
            DForkOne => "D-fork-one",
            DForkBoth => "D-fork-both",
        }
    }

    /// The case condition as a predicate on (diagram, j).
    pub fn matches(self, diagram: &VoganDiagram, j: usize) -> bool {
        use CaseLabel::*;
        if self.family() != diagram.family() {
            return false;
        }
        let l = diagram.rank();
        let m = diagram.m();
        let ij = diagram.i(j as isize);
        let last = j == m;
        let l_painted = diagram.is_painted(l);
        let fork = diagram.is_painted(l - 1) as usize + l_painted as usize;
        match self {
            A => true,
            BInterior => !last,
            BLastNotL => last && ij != l,
            BAtL => ij == l,
            CInteriorLUnpainted => ij != l - 1 && !last && !l_painted,
            CInteriorLPainted => ij != l - 1 && !last && l_painted,
            CAtL => ij != l - 1 && last && ij == l,
            CLastNotL => ij != l - 1 && last && ij != l,
            CAtLm1LPainted => ij == l - 1 && l_painted,
            CAtLm1LUnpainted => ij == l - 1 && !l_painted,
            DInteriorForkEven => ij < l - 2 && !last && fork != 1,
            DInteriorForkOdd => ij < l - 2 && !last && fork == 1,
            DLast => ij < l - 2 && last,
            DAtLm2ForkEven => ij == l - 2 && fork != 1,
            DAtLm2ForkOdd => ij == l - 2 && fork == 1,
            DForkOne => ij >= l - 1 && fork == 1,
            DForkBoth => ij >= l - 1 && fork == 2,
        }
    }
}

impl From<CaseLabel> for &'static str {
    fn from(case: CaseLabel) -> Self {
        case.as_str()
    }
}

impl FromStr for CaseLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CaseLabel::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown case label {s:?}")))
    }
}

impl TryFrom<String> for CaseLabel {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The unique case covering painted position `j`.
pub fn resolve_case(diagram: &VoganDiagram, j: usize) -> Result<CaseLabel> {
    diagram.check_position(j)?;
    let mut hits = CaseLabel::of_family(diagram.family()).filter(|c| c.matches(diagram, j));
    match (hits.next(), hits.count()) {
        (Some(case), 0) => Ok(case),
        (first, rest) => {
            Err(Error::AmbiguousBranch { j, matched: first.is_some() as usize + rest })
        }
    }
}

/// Cases of the Γ closed forms. These are split differently from the
/// published cases, and their headings overlap for D, so dispatch is ordered
/// most-specific first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GammaBranch {
    A,
    BInterior,
    BLastNotL,
    BAtL,
    CInterior,
    CLast,
    CLastAtLm1,
    CInteriorAtLm1,
    DInterior,
    DLast,
    DAtLm2,
    DAtFork,
}

impl GammaBranch {
    pub fn as_str(self) -> &'static str {
        use GammaBranch::*;
        match self {
            A => "gamma-A",
            BInterior => "gamma-B-interior",
            BLastNotL => "gamma-B-last-not-l",
            BAtL => "gamma-B-at-l",
            CInterior => "gamma-C-interior",
            CLast => "gamma-C-last",
            CLastAtLm1 => "gamma-C-last-at-l-1",
            CInteriorAtLm1 => "gamma-C-interior-at-l-1",
            DInterior => "gamma-D-interior",
            DLast => "gamma-D-last",
            DAtLm2 => "gamma-D-at-l-2",
            DAtFork => "gamma-D-at-fork",
        }
    }
}

impl fmt::Display for GammaBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn resolve_gamma_branch(diagram: &VoganDiagram, k: usize) -> Result<GammaBranch> {
    diagram.check_position(k)?;
    let l = diagram.rank();
    let ik = diagram.i(k as isize);
    let last = k == diagram.m();
    Ok(match diagram.family() {
        Family::A => GammaBranch::A,
        Family::B if ik == l => GammaBranch::BAtL,
        Family::B if last => GammaBranch::BLastNotL,
        Family::B => GammaBranch::BInterior,
        Family::C if ik == l - 1 && last => GammaBranch::CLastAtLm1,
        Family::C if ik == l - 1 => GammaBranch::CInteriorAtLm1,
        Family::C if last => GammaBranch::CLast,
        Family::C => GammaBranch::CInterior,
        Family::D if ik >= l - 1 => GammaBranch::DAtFork,
        Family::D if ik == l - 2 => GammaBranch::DAtLm2,
        Family::D if last => GammaBranch::DLast,
        Family::D => GammaBranch::DInterior,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_diagrams(family: Family, rank: usize) -> impl Iterator<Item = VoganDiagram> {
        (1u32..1 << rank).map(move |mask| {
            let painted: Vec<usize> = (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            VoganDiagram::new(family, rank, painted).unwrap()
        })
    }

    #[test]
    fn dispatch_is_total_and_exclusive() {
        for family in Family::ALL {
            for rank in family.min_rank()..=9 {
                for d in all_diagrams(family, rank) {
                    for j in 1..=d.m() {
                        let hits =
                            CaseLabel::of_family(family).filter(|c| c.matches(&d, j)).count();
                        assert_eq!(hits, 1, "{d} j={j}");
                        assert!(resolve_case(&d, j).is_ok());
                        assert!(resolve_gamma_branch(&d, j).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn every_case_is_reached() {
        let mut seen = std::collections::BTreeSet::new();
        for family in Family::ALL {
            for rank in family.min_rank()..=6 {
                for d in all_diagrams(family, rank) {
                    for j in 1..=d.m() {
                        seen.insert(resolve_case(&d, j).unwrap());
                    }
                }
            }
        }
        assert_eq!(seen.len(), CaseLabel::ALL.len());
    }

    #[test]
    fn examples() {
        let d = VoganDiagram::new(Family::B, 2, vec![2]).unwrap();
        assert_eq!(resolve_case(&d, 1).unwrap(), CaseLabel::BAtL);
        let d = VoganDiagram::new(Family::B, 3, vec![1, 2]).unwrap();
        assert_eq!(resolve_case(&d, 1).unwrap(), CaseLabel::BInterior);
        assert_eq!(resolve_case(&d, 2).unwrap(), CaseLabel::BLastNotL);
        let d = VoganDiagram::new(Family::C, 3, vec![3]).unwrap();
        assert_eq!(resolve_case(&d, 1).unwrap(), CaseLabel::CAtL);
        let d = VoganDiagram::new(Family::D, 6, vec![1, 4, 6]).unwrap();
        assert_eq!(resolve_case(&d, 1).unwrap(), CaseLabel::DInteriorForkOdd);
        assert_eq!(resolve_case(&d, 2).unwrap(), CaseLabel::DAtLm2ForkOdd);
        assert_eq!(resolve_case(&d, 3).unwrap(), CaseLabel::DForkOne);
        assert!(matches!(resolve_case(&d, 4), Err(Error::IndexError { .. })));
    }

    #[test]
    fn labels_parse_back() {
        for case in CaseLabel::ALL {
            assert_eq!(case.as_str().parse::<CaseLabel>().unwrap(), case);
        }
        assert!("B3".parse::<CaseLabel>().is_err());
    }
}
