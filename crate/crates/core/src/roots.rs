//! Cartan matrices, positive roots and the compactness rule.
//!
//! Positive roots are written as coefficient tuples over the simple roots.
//! Every classical positive root has coefficients in {0, 1, 2} and is one of a
//! handful of shapes (an interval of 1s, optionally followed by a run of 2s and
//! a tail), which is what the enumeration below walks.

use std::fmt;

use crate::diagram::{Family, VoganDiagram};
use crate::error::{Error, Result};
use crate::scalar::{checked_add, checked_mul, Exact};

/// A positive root as its coefficients over the simple roots γ₁..γ_ℓ.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(Vec<u8>);

impl RootVector {
    pub fn new(coeffs: Vec<u8>) -> Result<Self> {
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::InvalidDiagram("a root vector cannot be zero".into()));
        }
        Ok(RootVector(coeffs))
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Coefficient of γ_node (1-based).
    pub fn coeff(&self, node: usize) -> u8 {
        self.0[node - 1]
    }

    pub fn height(&self) -> u32 {
        self.0.iter().map(|&c| c as u32).sum()
    }

    /// True when the root is supported away from every painted node.
    pub fn avoids(&self, diagram: &VoganDiagram) -> bool {
        support_avoids(&self.0, diagram)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (n, c) in self.0.iter().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Compactness of a root of a real form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Compactness {
    Compact,
    NonCompact,
}

impl Compactness {
    /// ε_α: −1 for compact roots, +1 for non-compact ones.
    pub fn sign(self) -> i64 {
        match self {
            Compactness::Compact => -1,
            Compactness::NonCompact => 1,
        }
    }
}

/// Cartan matrix with `A[i][j] = 2(γ_i, γ_j) / (γ_i, γ_i)`, so that the
/// i-th fundamental-weight coordinate of a vector given in simple-root
/// coordinates is the i-th entry of `A · v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix<Z> {
    rank: usize,
    entries: Vec<Z>,
}

impl<Z: Exact> CartanMatrix<Z> {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry at 1-based (row, col).
    pub fn entry(&self, row: usize, col: usize) -> Z {
        self.entries[(row - 1) * self.rank + (col - 1)]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Z]> {
        self.entries.chunks(self.rank)
    }

    /// `(A · v)_row` for 1-based `row`.
    pub fn row_dot(&self, row: usize, v: &[Z]) -> Result<Z> {
        if v.len() != self.rank {
            return Err(Error::DimensionError { expected: self.rank, got: v.len() });
        }
        let r = &self.entries[(row - 1) * self.rank..row * self.rank];
        r.iter()
            .zip(v)
            .filter(|(a, _)| !a.is_zero())
            .try_fold(Z::zero(), |acc, (&a, &x)| checked_add(acc, checked_mul(a, x)?))
    }

    /// Dense product `A · v`.
    pub fn apply(&self, v: &[Z]) -> Result<Vec<Z>> {
        (1..=self.rank).map(|row| self.row_dot(row, v)).collect()
    }
}

pub fn cartan_matrix<Z: Exact>(family: Family, rank: usize) -> Result<CartanMatrix<Z>> {
    family.check_rank(rank)?;
    let l = rank;
    let mut entries = vec![Z::zero(); l * l];
    let mut set = |i: usize, j: usize, v: i64| entries[(i - 1) * l + (j - 1)] = Z::lit(v);
    for i in 1..=l {
        set(i, i, 2);
    }
    match family {
        Family::A | Family::B | Family::C => {
            for i in 1..l {
                set(i, i + 1, -1);
                set(i + 1, i, -1);
            }
            match family {
                // γ_ℓ short: row ℓ carries the −2.
                Family::B => set(l, l - 1, -2),
                // γ_ℓ long: row ℓ−1 carries the −2.
                Family::C => set(l - 1, l, -2),
                _ => {}
            }
        }
        Family::D => {
            for i in 1..l - 2 {
                set(i, i + 1, -1);
                set(i + 1, i, -1);
            }
            for fork in [l - 1, l] {
                set(l - 2, fork, -1);
                set(fork, l - 2, -1);
            }
        }
    }
    Ok(CartanMatrix { rank, entries })
}

/// Visits every positive root of the family, passing its dense coefficient
/// tuple in a reused buffer. Memory is O(ℓ); time is O(ℓ) per root.
pub fn for_each_positive_root(
    family: Family,
    rank: usize,
    mut visit: impl FnMut(&[u8]),
) -> Result<()> {
    family.check_rank(rank)?;
    let l = rank;
    let mut buf = vec![0u8; l];
    // Each root is a list of (first, last, coefficient) runs on 1-based nodes.
    let mut emit = |runs: &[(usize, usize, u8)]| {
        buf.iter_mut().for_each(|c| *c = 0);
        for &(a, b, c) in runs {
            for node in a..=b {
                buf[node - 1] += c;
            }
        }
        visit(&buf);
    };
    match family {
        Family::A => {
            for n1 in 1..=l {
                for n2 in n1..=l {
                    emit(&[(n1, n2, 1)]);
                }
            }
        }
        Family::B => {
            for n1 in 1..=l {
                for n2 in n1..=l {
                    emit(&[(n1, n2, 1)]);
                }
            }
            for n1 in 1..l {
                for n2 in n1..l {
                    emit(&[(n1, n2, 1), (n2 + 1, l, 2)]);
                }
            }
        }
        Family::C => {
            for n1 in 1..=l {
                for n2 in n1..=l {
                    emit(&[(n1, n2, 1)]);
                }
            }
            for n1 in 1..l {
                emit(&[(n1, l - 1, 2), (l, l, 1)]);
            }
            for n1 in 1..l - 1 {
                for n2 in n1..l - 1 {
                    emit(&[(n1, n2, 1), (n2 + 1, l - 1, 2), (l, l, 1)]);
                }
            }
        }
        Family::D => {
            for n1 in 1..=l - 2 {
                for n2 in n1..=l - 2 {
                    emit(&[(n1, n2, 1)]);
                }
            }
            // n1 = ℓ−1 gives the simple roots γ_{ℓ−1}, γ_ℓ themselves.
            for n1 in 1..=l - 1 {
                for fork in [l - 1, l] {
                    if n1 <= l - 2 {
                        emit(&[(n1, l - 2, 1), (fork, fork, 1)]);
                    } else {
                        emit(&[(fork, fork, 1)]);
                    }
                }
            }
            for n1 in 1..=l - 2 {
                emit(&[(n1, l, 1)]);
            }
            for n1 in 1..=l - 3 {
                for n2 in n1..=l - 3 {
                    emit(&[(n1, n2, 1), (n2 + 1, l - 2, 2), (l - 1, l, 1)]);
                }
            }
        }
    }
    Ok(())
}

/// All positive roots in lexicographic order of their coefficient tuples.
///
/// Materializes ℓ·|Δ₊| = O(ℓ³) bytes; the oracle itself streams through
/// [`for_each_positive_root`] instead.
pub fn positive_roots(family: Family, rank: usize) -> Result<Vec<RootVector>> {
    let mut out = Vec::with_capacity(family.positive_root_count(rank.max(family.min_rank())));
    for_each_positive_root(family, rank, |c| out.push(RootVector(c.to_vec())))?;
    out.sort_unstable();
    Ok(out)
}

/// Compactness by parity: a positive root is non-compact exactly when the sum
/// of its coefficients over the painted nodes is odd.
pub fn epsilon(root: &RootVector, diagram: &VoganDiagram) -> Result<Compactness> {
    if root.len() != diagram.rank() {
        return Err(Error::DimensionError { expected: diagram.rank(), got: root.len() });
    }
    Ok(compactness_of(root.coeffs(), diagram))
}

pub(crate) fn compactness_of(coeffs: &[u8], diagram: &VoganDiagram) -> Compactness {
    let painted_sum: u32 = diagram.painted().iter().map(|&i| coeffs[i - 1] as u32).sum();
    if painted_sum % 2 == 1 {
        Compactness::NonCompact
    } else {
        Compactness::Compact
    }
}

pub(crate) fn support_avoids(coeffs: &[u8], diagram: &VoganDiagram) -> bool {
    diagram.painted().iter().all(|&i| coeffs[i - 1] == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rv(c: &[u8]) -> RootVector {
        RootVector::new(c.to_vec()).unwrap()
    }

    fn matrix(family: Family, rank: usize) -> Vec<Vec<i64>> {
        cartan_matrix::<i64>(family, rank).unwrap().rows().map(|r| r.to_vec()).collect()
    }

    #[test]
    fn cartan_examples() {
        assert_eq!(matrix(Family::A, 2), vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(matrix(Family::A, 1), vec![vec![2]]);
        assert_eq!(matrix(Family::B, 2), vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(
            matrix(Family::C, 3),
            vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]
        );
        assert_eq!(
            matrix(Family::D, 4),
            vec![vec![2, -1, 0, 0], vec![-1, 2, -1, -1], vec![0, -1, 2, 0], vec![0, -1, 0, 2]]
        );
        assert!(matches!(
            cartan_matrix::<i64>(Family::D, 3),
            Err(Error::InvalidRank { .. })
        ));
    }

    #[test]
    fn cartan_entries_are_well_formed() {
        for family in Family::ALL {
            for rank in family.min_rank()..=9 {
                let a = cartan_matrix::<i32>(family, rank).unwrap();
                for i in 1..=rank {
                    assert_eq!(a.entry(i, i), 2);
                    for j in (1..=rank).filter(|&j| j != i) {
                        assert!([0, -1, -2].contains(&a.entry(i, j)));
                        assert_eq!(a.entry(i, j) == 0, a.entry(j, i) == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn small_root_lists() {
        assert_eq!(
            positive_roots(Family::A, 2).unwrap(),
            vec![rv(&[0, 1]), rv(&[1, 0]), rv(&[1, 1])]
        );
        assert_eq!(
            positive_roots(Family::B, 2).unwrap(),
            vec![rv(&[0, 1]), rv(&[1, 0]), rv(&[1, 1]), rv(&[1, 2])]
        );
        let d4 = positive_roots(Family::D, 4).unwrap();
        assert_eq!(d4.len(), 12);
        for r in [[0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 1, 1], [0, 1, 1, 1], [1, 2, 1, 1]] {
            assert!(d4.contains(&rv(&r)), "missing {r:?}");
        }
    }

    #[test]
    fn root_counts() {
        for family in Family::ALL {
            for rank in family.min_rank()..=12 {
                let roots = positive_roots(family, rank).unwrap();
                assert_eq!(roots.len(), family.positive_root_count(rank), "{family}{rank}");
                let mut dedup = roots.clone();
                dedup.dedup();
                assert_eq!(dedup.len(), roots.len());
            }
        }
    }

    #[test]
    fn epsilon_examples() {
        let a2 = VoganDiagram::new(Family::A, 2, vec![1]).unwrap();
        assert_eq!(epsilon(&rv(&[1, 1]), &a2).unwrap().sign(), 1);
        assert_eq!(epsilon(&rv(&[0, 1]), &a2).unwrap().sign(), -1);
        let b2 = VoganDiagram::new(Family::B, 2, vec![2]).unwrap();
        assert_eq!(epsilon(&rv(&[1, 2]), &b2).unwrap(), Compactness::Compact);
        assert!(matches!(
            epsilon(&rv(&[1, 0, 0]), &b2),
            Err(Error::DimensionError { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn zero_root_rejected() {
        assert!(RootVector::new(vec![0, 0]).is_err());
    }
}
