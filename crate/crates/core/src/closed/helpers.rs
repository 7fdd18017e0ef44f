use serde::{Deserialize, Serialize};

use crate::diagram::VoganDiagram;
use crate::error::{Error, Result};
use crate::scalar::{Checked, Exact};

/// How the symbol S₋(j) is evaluated inside the published formulas.
///
/// The displayed alternating sum equals T₁(j) − S₂(j); the B, C and D
/// derivations compose with S₂(j) − T₁(j) instead. The two differ in sign.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SMinusReading {
    /// Σ_{k<j} 2(−1)^{k−j} i_k + i_{j−1}.
    #[default]
    Alternating,
    /// S₂(j) − T₁(j).
    SumDifference,
}

/// The interval sums attached to a painted position j.
///
/// `s1`, `t2` look right of i_j and `s2`, `t1` look left; each counts the
/// nodes in every other gap between consecutive painted indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HelperSums<Z> {
    pub s1: Z,
    pub s2: Z,
    pub t1: Z,
    pub t2: Z,
    /// Alternating closed form; equals `s1 - t2`.
    pub s_plus: Z,
    /// Alternating closed form; equals `t1 - s2`.
    pub s_minus: Z,
}

impl<Z: Exact> HelperSums<Z> {
    pub fn s_minus_as(&self, reading: SMinusReading) -> Z {
        match reading {
            SMinusReading::Alternating => self.s_minus,
            SMinusReading::SumDifference => self.s2 - self.t1,
        }
    }
}

fn ceil_half(n: isize) -> isize {
    if n <= 0 {
        0
    } else {
        (n + 1) / 2
    }
}

/// Computes the six sums for 1-based painted position `j`, with the
/// sentinels i₀ = 0 and i_{m+1} = ℓ+1. Both the gap-sum and the alternating
/// forms are evaluated and compared.
pub fn helper_sums<Z: Exact>(diagram: &VoganDiagram, j: usize) -> Result<HelperSums<Z>> {
    diagram.check_position(j)?;
    let m = diagram.m() as isize;
    let j = j as isize;
    let i = |k: isize| Checked::<Z>::index(diagram.i(k));
    let gap = |hi: isize, lo: isize| i(hi) - i(lo);

    let s1: Checked<Z> = (1..=ceil_half(m - j)).map(|k| gap(j + 2 * k, j + 2 * k - 1)).sum();
    let s2: Checked<Z> = (1..=j / 2).map(|k| gap(j - 2 * k + 1, j - 2 * k)).sum();
    let t1: Checked<Z> = (1..(j + 1) / 2).map(|k| gap(j - 2 * k, j - 2 * k - 1)).sum();
    let t2: Checked<Z> = (1..=ceil_half(m - j - 1)).map(|k| gap(j + 2 * k + 1, j + 2 * k)).sum();

    let rank_plus_one = Checked::<Z>::index(diagram.rank() + 1);
    let s_plus: Checked<Z> = (j + 1..=m)
        .map(|k| 2 * Checked::sign_pow((k - j) as i64) * i(k))
        .sum::<Checked<Z>>()
        + i(j + 1)
        + Checked::sign_pow((m - j + 1) as i64) * rank_plus_one;
    let s_minus: Checked<Z> = (1..j)
        .map(|k| 2 * Checked::sign_pow((k - j) as i64) * i(k))
        .sum::<Checked<Z>>()
        + i(j - 1);

    let sums = HelperSums {
        s1: s1.get()?,
        s2: s2.get()?,
        t1: t1.get()?,
        t2: t2.get()?,
        s_plus: s_plus.get()?,
        s_minus: s_minus.get()?,
    };
    let j = j as usize;
    if Checked::new(sums.s_plus) != Checked::new(sums.s1) - Checked::new(sums.t2) {
        return Err(Error::HelperInconsistency {
            j,
            detail: format!("S+ = {} but S1 - T2 = {} - {}", sums.s_plus, sums.s1, sums.t2),
        });
    }
    if Checked::new(sums.s_minus) != Checked::new(sums.t1) - Checked::new(sums.s2) {
        return Err(Error::HelperInconsistency {
            j,
            detail: format!("S- = {} but T1 - S2 = {} - {}", sums.s_minus, sums.t1, sums.s2),
        });
    }
    Ok(sums)
}
