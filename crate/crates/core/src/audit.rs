//! Three-way comparison of the oracle, mid and published paths.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::closed::{
    gamma_closed_with, resolve_gamma_branch, tau_closed, xi_mid_from, xi_published_with, CaseLabel,
    ClosedOptions, GammaBranch, SMinusReading,
};
use crate::diagram::{Family, VoganDiagram};
use crate::error::{Error, Result};
use crate::oracle::{check_cap, OracleVectors, DEFAULT_ORACLE_CAP};
use crate::scalar::Exact;

/// Largest rank swept exhaustively, whatever the oracle cap.
pub const MAX_EXHAUSTIVE_RANK: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditRecord<Z> {
    pub diagram: VoganDiagram,
    /// Position j in S.
    pub position: usize,
    /// The painted node i_j.
    pub node: usize,
    pub case: CaseLabel,
    pub gamma_branch: GammaBranch,
    pub xi_oracle: Z,
    pub xi_mid: Z,
    pub xi_published: Z,
    /// Published value with S₋ read as S₂ − T₁.
    pub xi_published_sum_difference: Z,
    pub gamma_oracle: Z,
    pub gamma_closed: Z,
    pub tau_oracle: Z,
    pub tau_closed: Z,
    pub mid_agrees: bool,
    pub published_agrees: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditOptions {
    pub oracle_cap: usize,
    pub closed: ClosedOptions,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions { oracle_cap: DEFAULT_ORACLE_CAP, closed: ClosedOptions::default() }
    }
}

/// One record per painted node with all paths evaluated.
pub fn audit_diagram<Z: Exact>(
    diagram: &VoganDiagram,
    options: &AuditOptions,
) -> Result<Vec<AuditRecord<Z>>> {
    check_cap(diagram.rank(), options.oracle_cap)?;
    let vectors = OracleVectors::<Z>::compute(diagram)?;
    let alt = ClosedOptions { s_minus: SMinusReading::SumDifference, ..options.closed };
    let primary = ClosedOptions { s_minus: SMinusReading::Alternating, ..options.closed };
    (1..=diagram.m())
        .map(|j| {
            let node = diagram.painted()[j - 1];
            let xi_oracle = vectors.xi[node - 1];
            let xi_mid = xi_mid_from(&vectors, diagram, j)?;
            let (case, xi_published) = xi_published_with::<Z>(diagram, j, &primary)?;
            let (_, xi_published_sum_difference) = xi_published_with::<Z>(diagram, j, &alt)?;
            Ok(AuditRecord {
                diagram: diagram.clone(),
                position: j,
                node,
                case,
                gamma_branch: resolve_gamma_branch(diagram, j)?,
                xi_oracle,
                xi_mid,
                xi_published,
                xi_published_sum_difference,
                gamma_oracle: vectors.gamma[node - 1],
                gamma_closed: gamma_closed_with(diagram, j, &options.closed)?,
                tau_oracle: vectors.tau[node - 1],
                tau_closed: tau_closed(diagram, j)?,
                mid_agrees: xi_mid == xi_oracle,
                published_agrees: xi_published == xi_oracle,
            })
        })
        .collect()
}

/// A mismatch, located by diagram and painted position.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample<Z> {
    pub rank: usize,
    pub painted: Vec<usize>,
    pub position: usize,
    pub oracle: Z,
    pub closed: Z,
}

/// The constant c for which `closed + c` matches the oracle most often.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OffsetFit<Z> {
    pub c: Z,
    /// Records that `closed + c` reproduces.
    pub explained: usize,
    /// Whether it reproduces every record.
    pub exact: bool,
}

/// Agreement of one closed form with the oracle on one branch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchStats<Z> {
    pub label: String,
    pub tested: usize,
    pub mismatched: usize,
    pub first_counterexample: Option<Counterexample<Z>>,
    pub offset_fit: Option<OffsetFit<Z>>,
}

#[derive(Debug, Clone, Default)]
struct Tally<Z> {
    tested: usize,
    mismatched: usize,
    first: Option<Counterexample<Z>>,
    /// oracle − closed → count.
    offsets: BTreeMap<Z, usize>,
}

impl<Z: Exact> Tally<Z> {
    fn new() -> Self {
        Tally { tested: 0, mismatched: 0, first: None, offsets: BTreeMap::new() }
    }

    fn observe(&mut self, record: &AuditRecord<Z>, oracle: Z, closed: Z) -> Result<()> {
        self.tested += 1;
        let offset = oracle.checked_sub(&closed).ok_or(Error::Overflow)?;
        *self.offsets.entry(offset).or_default() += 1;
        if oracle != closed {
            self.mismatched += 1;
            let candidate = Counterexample {
                rank: record.diagram.rank(),
                painted: record.diagram.painted().to_vec(),
                position: record.position,
                oracle,
                closed,
            };
            if self.first.as_ref().is_none_or(|f| canonical_key(&candidate) < canonical_key(f)) {
                self.first = Some(candidate);
            }
        }
        Ok(())
    }

    fn merge(mut self, other: Self) -> Self {
        self.tested += other.tested;
        self.mismatched += other.mismatched;
        for (c, n) in other.offsets {
            *self.offsets.entry(c).or_default() += n;
        }
        self.first = match (self.first, other.first) {
            (Some(a), Some(b)) => Some(if canonical_key(&b) < canonical_key(&a) { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }

    fn finish(self, label: String) -> BranchStats<Z> {
        let offset_fit = self
            .offsets
            .iter()
            .max_by(|(ca, na), (cb, nb)| {
                na.cmp(nb).then_with(|| cb.abs().cmp(&ca.abs())).then_with(|| cb.cmp(ca))
            })
            .map(|(&c, &explained)| OffsetFit { c, explained, exact: explained == self.tested });
        BranchStats {
            label,
            tested: self.tested,
            mismatched: self.mismatched,
            first_counterexample: self.first,
            offset_fit,
        }
    }
}

fn canonical_key<Z>(c: &Counterexample<Z>) -> (usize, &[usize], usize) {
    (c.rank, &c.painted, c.position)
}

#[derive(Debug, Clone)]
struct Accumulator<Z> {
    diagrams: usize,
    xi: BTreeMap<CaseLabel, Tally<Z>>,
    xi_sum_difference: BTreeMap<CaseLabel, Tally<Z>>,
    tau: BTreeMap<CaseLabel, Tally<Z>>,
    gamma: BTreeMap<GammaBranch, Tally<Z>>,
    mid: Tally<Z>,
}

impl<Z: Exact> Accumulator<Z> {
    fn new() -> Self {
        Accumulator {
            diagrams: 0,
            xi: BTreeMap::new(),
            xi_sum_difference: BTreeMap::new(),
            tau: BTreeMap::new(),
            gamma: BTreeMap::new(),
            mid: Tally::new(),
        }
    }

    fn observe(mut self, records: &[AuditRecord<Z>]) -> Result<Self> {
        self.diagrams += 1;
        for r in records {
            self.xi.entry(r.case).or_insert_with(Tally::new).observe(r, r.xi_oracle, r.xi_published)?;
            self.xi_sum_difference.entry(r.case).or_insert_with(Tally::new).observe(
                r,
                r.xi_oracle,
                r.xi_published_sum_difference,
            )?;
            self.tau.entry(r.case).or_insert_with(Tally::new).observe(r, r.tau_oracle, r.tau_closed)?;
            self.gamma
                .entry(r.gamma_branch)
                .or_insert_with(Tally::new)
                .observe(r, r.gamma_oracle, r.gamma_closed)?;
            self.mid.observe(r, r.xi_oracle, r.xi_mid)?;
        }
        Ok(self)
    }

    fn merge(mut self, other: Self) -> Self {
        fn join<K: Ord, Z: Exact>(a: &mut BTreeMap<K, Tally<Z>>, b: BTreeMap<K, Tally<Z>>) {
            for (k, t) in b {
                let slot = a.remove(&k).map_or(t.clone(), |s| s.merge(t));
                a.insert(k, slot);
            }
        }
        self.diagrams += other.diagrams;
        join(&mut self.xi, other.xi);
        join(&mut self.xi_sum_difference, other.xi_sum_difference);
        join(&mut self.tau, other.tau);
        join(&mut self.gamma, other.gamma);
        self.mid = self.mid.merge(other.mid);
        self
    }
}

/// Aggregated agreement of every closed form with the oracle over a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport<Z> {
    pub family: Family,
    /// Ranks actually swept, family minimum upward.
    pub ranks: Vec<usize>,
    pub diagrams: usize,
    /// Published ξ per published case, S₋ read as the alternating sum.
    pub xi: Vec<BranchStats<Z>>,
    /// Published ξ per published case, S₋ read as S₂ − T₁.
    pub xi_sum_difference: Vec<BranchStats<Z>>,
    /// τ closed forms per published case.
    pub tau: Vec<BranchStats<Z>>,
    /// Γ closed forms per branch.
    pub gamma: Vec<BranchStats<Z>>,
    /// 2(−2 + Γ + 2τ) with oracle Γ, τ against the oracle ξ.
    pub mid: BranchStats<Z>,
}

impl<Z: Exact> DiscrepancyReport<Z> {
    fn from_acc(family: Family, ranks: Vec<usize>, acc: Accumulator<Z>) -> Self {
        fn stats<K: Copy + std::fmt::Display, Z: Exact>(
            map: BTreeMap<K, Tally<Z>>,
        ) -> Vec<BranchStats<Z>> {
            map.into_iter().map(|(k, t)| t.finish(k.to_string())).collect()
        }
        DiscrepancyReport {
            family,
            ranks,
            diagrams: acc.diagrams,
            xi: stats(acc.xi),
            xi_sum_difference: stats(acc.xi_sum_difference),
            tau: stats(acc.tau),
            gamma: stats(acc.gamma),
            mid: acc.mid.finish("mid".into()),
        }
    }

    pub fn xi_branch(&self, label: CaseLabel) -> Option<&BranchStats<Z>> {
        self.xi.iter().find(|s| s.label == label.as_str())
    }

    pub fn published_mismatches(&self) -> usize {
        self.xi.iter().map(|s| s.mismatched).sum()
    }
}

/// An audit that stopped early, with whatever was swept before it stopped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditFailure<Z> {
    pub error: Error,
    pub partial: Box<DiscrepancyReport<Z>>,
}

fn painted_from_mask(rank: usize, mask: u64) -> Vec<usize> {
    (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).collect()
}

fn sweep_rank<Z: Exact>(family: Family, rank: usize, options: &AuditOptions) -> Result<Accumulator<Z>> {
    (1u64..1 << rank)
        .into_par_iter()
        .try_fold(Accumulator::new, |acc, mask| {
            let diagram = VoganDiagram::new(family, rank, painted_from_mask(rank, mask))?;
            acc.observe(&audit_diagram::<Z>(&diagram, options)?)
        })
        .try_reduce(Accumulator::new, |a, b| Ok(a.merge(b)))
}

/// Exhaustive audit over every rank from the family minimum to `max_rank`
/// and every non-empty painted set. The result does not depend on thread
/// scheduling.
pub fn audit_family<Z: Exact>(
    family: Family,
    max_rank: usize,
    options: &AuditOptions,
) -> std::result::Result<DiscrepancyReport<Z>, AuditFailure<Z>> {
    let mut acc = Accumulator::new();
    let mut ranks = Vec::new();
    let fail = |error, ranks, acc| AuditFailure {
        error,
        partial: Box::new(DiscrepancyReport::from_acc(family, ranks, acc)),
    };
    if let Err(error) = family.check_rank(max_rank) {
        return Err(fail(error, ranks, acc));
    }
    let cap = options.oracle_cap.min(MAX_EXHAUSTIVE_RANK);
    for rank in family.min_rank()..=max_rank {
        if let Err(error) = check_cap(rank, cap) {
            return Err(fail(error, ranks, acc));
        }
        match sweep_rank::<Z>(family, rank, options) {
            Ok(swept) => acc = acc.merge(swept),
            Err(error) => return Err(fail(error, ranks, acc)),
        }
        ranks.push(rank);
    }
    Ok(DiscrepancyReport::from_acc(family, ranks, acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(family: Family, rank: usize, painted: &[usize]) -> VoganDiagram {
        VoganDiagram::new(family, rank, painted.to_vec()).unwrap()
    }

    fn triples(family: Family, rank: usize, painted: &[usize]) -> Vec<(i64, i64, i64)> {
        audit_diagram::<i64>(&d(family, rank, painted), &AuditOptions::default())
            .unwrap()
            .iter()
            .map(|r| (r.xi_oracle, r.xi_mid, r.xi_published))
            .collect()
    }

    #[test]
    fn record_examples() {
        assert_eq!(triples(Family::A, 2, &[1]), vec![(-6, -6, -6)]);
        assert_eq!(triples(Family::C, 3, &[3]), vec![(-8, -8, 0)]);
        assert_eq!(triples(Family::B, 3, &[1, 2]), vec![(8, 8, 8), (-6, -6, -6)]);
        let r = &audit_diagram::<i64>(&d(Family::C, 3, &[3]), &AuditOptions::default()).unwrap()[0];
        assert!(r.mid_agrees && !r.published_agrees);
    }

    #[test]
    fn family_a_is_clean() {
        let report = audit_family::<i64>(Family::A, 8, &AuditOptions::default()).unwrap();
        assert_eq!(report.published_mismatches(), 0);
        assert_eq!(report.mid.mismatched, 0);
        assert_eq!(report.diagrams, (1..=8).map(|l| (1usize << l) - 1).sum::<usize>());
    }

    #[test]
    fn b_mismatches_sit_at_l_with_offset_minus_eight() {
        let report = audit_family::<i64>(Family::B, 7, &AuditOptions::default()).unwrap();
        for stats in &report.xi {
            if stats.label == CaseLabel::BAtL.as_str() {
                assert_eq!(stats.mismatched, stats.tested);
                assert_eq!(stats.offset_fit, Some(OffsetFit { c: -8, explained: stats.tested, exact: true }));
                let first = stats.first_counterexample.as_ref().unwrap();
                assert_eq!((first.rank, first.painted.as_slice(), first.oracle, first.closed), (2, &[1, 2][..], -4, 4));
            } else {
                assert_eq!(stats.mismatched, 0, "{}", stats.label);
            }
        }
    }

    #[test]
    fn below_minimum_and_cap() {
        let err = audit_family::<i64>(Family::A, 0, &AuditOptions::default()).unwrap_err();
        assert!(matches!(err.error, Error::InvalidRank { .. }));
        assert_eq!(err.partial.diagrams, 0);
        let opts = AuditOptions { oracle_cap: 3, ..AuditOptions::default() };
        let err = audit_family::<i64>(Family::A, 5, &opts).unwrap_err();
        assert_eq!(err.error, Error::CapExceeded { rank: 4, cap: 3 });
        assert_eq!(err.partial.ranks, vec![1, 2, 3]);
        assert_eq!(err.partial.diagrams, 1 + 3 + 7);
    }

    #[test]
    fn deterministic_across_pools() {
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| audit_family::<i64>(Family::D, 7, &AuditOptions::default()).unwrap())
        };
        assert_eq!(run(1), run(4));
    }
}
