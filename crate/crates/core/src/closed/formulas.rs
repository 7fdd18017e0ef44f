use serde::{Deserialize, Serialize};

use super::cases::{resolve_case, resolve_gamma_branch, CaseLabel, GammaBranch};
use super::helpers::{helper_sums, SMinusReading};
use crate::diagram::VoganDiagram;
use crate::error::Result;
use crate::scalar::{Checked, Exact};

/// Reading of the D interior correction term δ_{ν∈S} δ_{ν′∉S} δ_{k=m−1},
/// where {ν, ν′} = {ℓ−1, ℓ}.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeltaReading {
    /// 1 iff exactly one of ℓ−1, ℓ is painted and k = m−1.
    #[default]
    Exclusive,
    /// Summed over both orderings of (ν, ν′).
    PerOrdering,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClosedOptions {
    pub s_minus: SMinusReading,
    pub d_delta: DeltaReading,
}

fn d_delta_term<Z: Exact>(diagram: &VoganDiagram, k: usize, reading: DeltaReading) -> Checked<Z> {
    let l = diagram.rank();
    let at_penultimate = k + 1 == diagram.m();
    let hit = |nu: usize, nu_prime: usize| {
        diagram.is_painted(nu) && !diagram.is_painted(nu_prime) && at_penultimate
    };
    match reading {
        DeltaReading::Exclusive => {
            Checked::from_bool(at_penultimate && diagram.is_painted(l - 1) != diagram.is_painted(l))
        }
        DeltaReading::PerOrdering => {
            Checked::from_bool(hit(l - 1, l)) + Checked::from_bool(hit(l, l - 1))
        }
    }
}

/// Γ at painted position `k`: the Cartan image of the sum of roots supported
/// off S, evaluated by its closed form.
pub fn gamma_closed<Z: Exact>(diagram: &VoganDiagram, k: usize) -> Result<Z> {
    gamma_closed_with(diagram, k, &ClosedOptions::default())
}

pub fn gamma_closed_with<Z: Exact>(
    diagram: &VoganDiagram,
    k: usize,
    options: &ClosedOptions,
) -> Result<Z> {
    use GammaBranch::*;
    let branch = resolve_gamma_branch(diagram, k)?;
    let l = Checked::<Z>::index(diagram.rank());
    let m = diagram.m() as isize;
    let k = k as isize;
    let i = |q: isize| Checked::<Z>::index(diagram.i(q));
    let lit = Checked::<Z>::lit;
    let unpainted = |node: usize| Checked::<Z>::from_bool(!diagram.is_painted(node));
    let value = match branch {
        A | BInterior | CInterior => i(k - 1) - i(k + 1) + lit(2),
        BAtL => -2 * l + 2 * i(m - 1) + lit(2),
        BLastNotL => lit(2) + i(m) + i(m - 1) - 2 * l,
        CLastAtLm1 => -l + i(m - 1),
        CInteriorAtLm1 => -l + i(k - 1) + lit(2),
        CLast => i(m) + i(m - 1) + lit(1) - 2 * l,
        DAtFork => -2 * l + 2 * i(k - 1) + lit(4),
        DAtLm2 => {
            let rank = diagram.rank();
            -l + i(k - 1) + lit(3) - unpainted(rank - 1) - unpainted(rank)
        }
        DLast => -2 * l + i(m) + i(m - 1) + lit(3),
        DInterior => {
            i(k - 1) - i(k + 1) + lit(2) - d_delta_term(diagram, k as usize, options.d_delta)
        }
    };
    value.get()
}

/// τ at painted position `j`: the Cartan image of δ^c, evaluated by the
/// per-case closed form.
pub fn tau_closed<Z: Exact>(diagram: &VoganDiagram, j: usize) -> Result<Z> {
    use CaseLabel::*;
    let case = resolve_case(diagram, j)?;
    let h = helper_sums::<Z>(diagram, j)?;
    let (s1, s2, t1, t2) = (Checked::new(h.s1), Checked::new(h.s2), Checked::new(h.t1), Checked::new(h.t2));
    let l = Checked::<Z>::index(diagram.rank());
    let m = diagram.m() as isize;
    let j = j as isize;
    let i = |q: isize| Checked::<Z>::index(diagram.i(q));
    let lit = Checked::<Z>::lit;
    let sign = Checked::<Z>::sign_pow((j + m) as i64);
    let second_difference = i(j - 1) - 2 * i(j) + i(j + 1);
    let value = match case {
        A => s1 + s2 - t1 - t2,
        BInterior => -second_difference + 2 * s1 - 2 * t2 + sign,
        BLastNotL => i(m) - i(m - 1) - lit(1),
        BAtL => 2 * (l - i(m - 1) - lit(1)),
        CInteriorLUnpainted | DInteriorForkEven => -second_difference + 2 * (s1 - t2) + 2 * sign,
        CInteriorLPainted => second_difference + 2 * (s2 - t1),
        CAtL => s2 - t1,
        CLastNotL => i(m) - i(m - 1) + lit(1),
        CAtLm1LPainted => lit(3) - l + i(j - 1) + 2 * (s2 - t1),
        CAtLm1LUnpainted => l - i(j - 1),
        DInteriorForkOdd => {
            second_difference + 2 * (s2 - t1) + Checked::from_bool(j == m - 1)
        }
        DLast => i(m) - i(m - 1) - lit(1),
        DAtLm2ForkEven => {
            let rank = diagram.rank();
            let both_last = diagram.i(m - 1) == rank - 1 && diagram.i(m) == rank;
            l - lit(3) - i(j - 1) + 2 * Checked::from_bool(both_last)
        }
        DAtLm2ForkOdd => -i(j) + i(j - 1) + lit(2) + 2 * (s2 - t1),
        DForkOne => 2 * (s2 - t1),
        DForkBoth => l - lit(2) - i(m - 3),
    };
    value.get()
}

/// ξ at painted position `j` from the published formula of its case, exactly
/// as printed.
pub fn xi_published<Z: Exact>(diagram: &VoganDiagram, j: usize) -> Result<(CaseLabel, Z)> {
    xi_published_with(diagram, j, &ClosedOptions::default())
}

pub fn xi_published_with<Z: Exact>(
    diagram: &VoganDiagram,
    j: usize,
    options: &ClosedOptions,
) -> Result<(CaseLabel, Z)> {
    use CaseLabel::*;
    let case = resolve_case(diagram, j)?;
    let h = helper_sums::<Z>(diagram, j)?;
    let s_plus = Checked::new(h.s_plus);
    let s_minus = Checked::new(h.s_minus_as(options.s_minus));
    let rank = diagram.rank();
    let l = Checked::<Z>::index(rank);
    let m = diagram.m() as isize;
    let j = j as isize;
    let i = |q: isize| Checked::<Z>::index(diagram.i(q));
    let lit = Checked::<Z>::lit;
    let sign = Checked::<Z>::sign_pow((j + m) as i64);
    let fork = diagram.is_painted(rank - 1) as usize + diagram.is_painted(rank) as usize;
    let inner = match case {
        A => i(j - 1) - i(j + 1) + 2 * (s_plus - s_minus),
        BInterior => -i(j - 1) + 4 * i(j) - 3 * i(j + 1) + 4 * s_plus + 2 * sign,
        BLastNotL => 3 * i(m) - i(m - 1) - 2 * l - lit(2),
        BAtL => 2 * l - 2 * i(m - 1),
        CInteriorLUnpainted => -i(j - 1) + 4 * i(j) - 3 * i(j + 1) + 4 * s_plus + 4 * sign,
        CInteriorLPainted => 3 * i(j - 1) - 4 * i(j) + i(j + 1) + 4 * s_minus,
        CAtL => l - i(m - 1) - lit(3) + 2 * s_minus,
        CLastNotL => 3 * i(m) - i(m - 1) - 2 * l + lit(1),
        CAtLm1LPainted => l + 3 * i(j - 1) + lit(6) + 4 * s_minus,
        CAtLm1LUnpainted => l - i(j - 1),
        DInteriorForkEven => -i(j - 1) + 4 * i(j) - 3 * i(j + 1) + 4 * (s_plus + sign),
        DInteriorForkOdd => {
            3 * i(j - 1) - 4 * i(j) + i(j + 1) + 4 * s_minus + Checked::from_bool(j == m - 1)
        }
        DLast => -2 * l + 3 * i(j) - i(m - 1) - lit(1),
        DAtLm2ForkEven => {
            let both_last = diagram.i(m - 1) == rank - 1 && diagram.i(m) == rank;
            l - i(j - 1) - lit(5)
                + 2 * (2 * Checked::from_bool(both_last) - Checked::from_bool(fork == 0))
        }
        DAtLm2ForkOdd => -3 * l + 3 * i(j - 1) + lit(8) + 4 * s_minus,
        DForkOne => -2 * l + 2 * i(j - 1) + lit(2) + 4 * s_minus,
        DForkBoth => l - lit(4) - i(m - 2),
    };
    Ok((case, (2 * inner).get()?))
}
