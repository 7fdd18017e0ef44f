//! Painted-set enumeration in canonical lexicographic order.

use vogan::{Family, Result, VoganDiagram};

/// Depth-first walk over the non-empty subsets of {1..=rank}, which visits
/// them in lexicographic order of their sorted sequences.
#[derive(Debug, Clone)]
pub struct Subsets {
    rank: usize,
    current: Vec<usize>,
    started: bool,
}

impl Subsets {
    pub fn new(rank: usize) -> Self {
        Subsets { rank, current: Vec::new(), started: false }
    }
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if !self.started {
            self.started = true;
            if self.rank == 0 {
                return None;
            }
            self.current.push(1);
            return Some(self.current.clone());
        }
        let &last = self.current.last()?;
        if last < self.rank {
            self.current.push(last + 1);
        } else {
            self.current.pop();
            *self.current.last_mut()? += 1;
        }
        Some(self.current.clone())
    }
}

/// Whether `diagram` is the lexicographically least painted set in its
/// automorphism orbit.
pub fn is_canonical(diagram: &VoganDiagram) -> bool {
    diagram.automorphism_image().is_none_or(|image| diagram.painted() <= image.painted())
}

/// Every Vogan diagram of the given type, optionally one per automorphism
/// orbit.
pub fn enumerate_diagrams(
    family: Family,
    rank: usize,
    dedup: bool,
) -> Result<impl Iterator<Item = VoganDiagram>> {
    family.check_rank(rank)?;
    Ok(Subsets::new(rank)
        .map(move |painted| VoganDiagram::new(family, rank, painted).expect("valid subset"))
        .filter(move |d| !dedup || is_canonical(d)))
}
